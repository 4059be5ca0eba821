"""Domain models package"""

from qwalk.models.analysis import (
    BlowupPrediction,
    DesignVerdict,
    GridPeakCase,
    GridPeakSuite,
    SrgFamily,
    SrgVerdict,
)
from qwalk.models.embedding import Face, Layout, RotationMap
from qwalk.models.graph import ArcSpace, MultiGraph
from qwalk.models.params import DesignParams, SrgParams
from qwalk.models.spectral import SpectralData, TraceFilter
from qwalk.models.verdict import (
    CosineCertificate,
    DecisionOptions,
    EvidenceGrade,
    GammaPolicy,
    MutualSupport,
    NoPeakReason,
    OracleCheck,
    RationalCosine,
    TransferVerdict,
    VerdictKind,
)
from qwalk.models.walk import ReflectionFrame, TwoReflectionWalk, WalkKind

__all__ = [
    # Graphs
    "MultiGraph",
    "ArcSpace",
    # Embeddings
    "RotationMap",
    "Face",
    "Layout",
    # Walks
    "ReflectionFrame",
    "TwoReflectionWalk",
    "WalkKind",
    # Spectral
    "SpectralData",
    "TraceFilter",
    # Verdicts
    "RationalCosine",
    "CosineCertificate",
    "MutualSupport",
    "OracleCheck",
    "TransferVerdict",
    "VerdictKind",
    "EvidenceGrade",
    "NoPeakReason",
    "GammaPolicy",
    "DecisionOptions",
    # Parameters and analyzers
    "SrgParams",
    "DesignParams",
    "SrgFamily",
    "SrgVerdict",
    "DesignVerdict",
    "BlowupPrediction",
    "GridPeakCase",
    "GridPeakSuite",
]
