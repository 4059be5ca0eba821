"""Input document parsing"""

import json
from typing import Annotated, Any

from pydantic import Field, TypeAdapter, ValidationError

from qwalk.core.exceptions import InputParseError
from qwalk.schemas.family import FamilySpec, parse_family
from qwalk.schemas.graph import (
    DesignSchema,
    EmbeddingSchema,
    FramesSchema,
    GraphSchema,
    SzegedySchema,
)

WalkInput = Annotated[
    GraphSchema | EmbeddingSchema | FramesSchema | SzegedySchema | DesignSchema,
    Field(discriminator="kind"),
]

InputDocument = WalkInput | FamilySpec

_INPUT_KINDS = {"graph", "embedding", "frames", "szegedy", "design"}

_input_adapter: TypeAdapter[WalkInput] = TypeAdapter(WalkInput)


def _parse_error(exc: ValidationError, kind: str) -> InputParseError:
    first = exc.errors()[0]
    return InputParseError(
        f"Invalid {kind} document: {first['msg']}",
        field=".".join(str(part) for part in first["loc"]),
    )


def parse_document(data: Any) -> InputDocument:
    """
    Validate an input document.

    Documents with kind graph, embedding, frames, szegedy or design describe
    an object directly; any other kind is read as a graph family.

    Raises:
        InputParseError: not an object, or fails schema validation
    """
    if not isinstance(data, dict):
        raise InputParseError("Input must be a JSON object", type=type(data).__name__)
    kind = data.get("kind", "graph")
    if kind in _INPUT_KINDS:
        try:
            return _input_adapter.validate_python({**data, "kind": kind})
        except ValidationError as e:
            raise _parse_error(e, kind) from e
    return parse_family(data)


def load_document(text: str) -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputParseError("Input is not valid JSON", line=e.lineno, column=e.colno) from e
    return parse_document(data)
