"""JSON schemas package"""

from qwalk.schemas.common import ErrorResponse
from qwalk.schemas.document import InputDocument, WalkInput, load_document, parse_document
from qwalk.schemas.family import FamilySpec, parse_family
from qwalk.schemas.graph import (
    DesignSchema,
    EmbeddingSchema,
    FramesSchema,
    GraphSchema,
    LayoutSchema,
    SzegedySchema,
)
from qwalk.schemas.verdict import (
    CertificateSchema,
    OracleReport,
    OracleSummary,
    ReportSchema,
    SpectrumSchema,
    VerdictSchema,
)

__all__ = [
    # Common schemas
    "ErrorResponse",
    # Input schemas
    "GraphSchema",
    "EmbeddingSchema",
    "LayoutSchema",
    "FramesSchema",
    "SzegedySchema",
    "DesignSchema",
    "FamilySpec",
    "WalkInput",
    "InputDocument",
    "parse_family",
    "parse_document",
    "load_document",
    # Output schemas
    "CertificateSchema",
    "OracleSummary",
    "OracleReport",
    "VerdictSchema",
    "SpectrumSchema",
    "ReportSchema",
]
