"""Services package"""

from qwalk.services.analyzers import (
    blowup_check,
    blowup_predict,
    design_analyze,
    grid_peak_suite,
    srg_analyze,
)
from qwalk.services.embeddings import toroidal_grid, trace_faces
from qwalk.services.families import generate
from qwalk.services.graphs import build_arc_space, validate_design
from qwalk.services.spectral import decompose, exact_charpoly, spectral_data
from qwalk.services.transfer_service import TransferService
from qwalk.services.walks import (
    arc_reversal_walk,
    generic_walk,
    szegedy_walk,
    vertex_face_walk,
)

__all__ = [
    "TransferService",
    "arc_reversal_walk",
    "blowup_check",
    "blowup_predict",
    "build_arc_space",
    "decompose",
    "design_analyze",
    "exact_charpoly",
    "generate",
    "generic_walk",
    "grid_peak_suite",
    "spectral_data",
    "srg_analyze",
    "szegedy_walk",
    "toroidal_grid",
    "trace_faces",
    "validate_design",
    "vertex_face_walk",
]
