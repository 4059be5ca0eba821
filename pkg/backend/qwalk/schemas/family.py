"""Graph family specifications"""

from typing import Annotated, Any, Literal

from pydantic import BaseModel, Field, TypeAdapter, ValidationError, ValidationInfo, field_validator

from qwalk.core.exceptions import ParameterError


class CycleSpec(BaseModel):
    kind: Literal["cycle"] = "cycle"
    n: int = Field(..., ge=3, description="Number of vertices")


class CompleteSpec(BaseModel):
    kind: Literal["complete"] = "complete"
    n: int = Field(..., ge=1, description="Number of vertices")


class CompleteMultipartiteSpec(BaseModel):
    kind: Literal["complete_multipartite"] = "complete_multipartite"
    parts: list[int] = Field(..., min_length=1, description="Part sizes")

    @field_validator("parts")
    @classmethod
    def positive_parts(cls, v: list[int]) -> list[int]:
        if any(size < 1 for size in v):
            raise ValueError("Part sizes must be positive")
        return v


class PathSpec(BaseModel):
    kind: Literal["path"] = "path"
    n: int = Field(..., ge=1, description="Number of vertices")


class BlowUpSpec(BaseModel):
    kind: Literal["blowup"] = "blowup"
    base: "FamilySpec"
    m: int = Field(..., ge=1, description="Coclique size replacing each vertex")


class DesignIncidenceSpec(BaseModel):
    kind: Literal["design_incidence"] = "design_incidence"
    v: int = Field(..., ge=2, description="Number of points")
    blocks: list[list[int]] = Field(..., min_length=1)

    @field_validator("blocks")
    @classmethod
    def blocks_in_range(cls, v: list[list[int]], info: ValidationInfo) -> list[list[int]]:
        points = info.data.get("v")
        if points is not None and any(not 0 <= x < points for block in v for x in block):
            raise ValueError("Blocks must be subsets of {0..v-1}")
        return v


class GnmSpec(BaseModel):
    kind: Literal["gnm"] = "gnm"
    n: int = Field(..., ge=1, description="Copies of the x layer")
    m: int = Field(..., ge=1, description="Copies of the y layer")


class HammingH33Spec(BaseModel):
    kind: Literal["hamming_h33"] = "hamming_h33"


class FoldedCubeSpec(BaseModel):
    kind: Literal["folded_cube"] = "folded_cube"
    d: int = Field(..., ge=2, description="Fold the d-cube; result has 2^(d-1) vertices")


class TwinApexSpec(BaseModel):
    kind: Literal["twin_apex"] = "twin_apex"


class PetersenSpec(BaseModel):
    kind: Literal["petersen"] = "petersen"


class PaleySpec(BaseModel):
    kind: Literal["paley"] = "paley"
    q: int = Field(..., ge=5, description="Prime congruent to 1 mod 4")


class DisjointUnionSpec(BaseModel):
    kind: Literal["disjoint_union"] = "disjoint_union"
    parts: list["FamilySpec"] = Field(..., min_length=1)


FamilySpec = Annotated[
    CycleSpec
    | CompleteSpec
    | CompleteMultipartiteSpec
    | PathSpec
    | BlowUpSpec
    | DesignIncidenceSpec
    | GnmSpec
    | HammingH33Spec
    | FoldedCubeSpec
    | TwinApexSpec
    | PetersenSpec
    | PaleySpec
    | DisjointUnionSpec,
    Field(discriminator="kind"),
]

BlowUpSpec.model_rebuild()
DisjointUnionSpec.model_rebuild()

_family_adapter: TypeAdapter[FamilySpec] = TypeAdapter(FamilySpec)


def parse_family(data: dict[str, Any]) -> FamilySpec:
    """Validate a family description, reporting violations as parameter errors"""
    try:
        return _family_adapter.validate_python(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise ParameterError(
            f"Invalid {data.get('kind', 'family')} parameters: {first['msg']}",
            field=".".join(str(part) for part in first["loc"]),
        ) from e
