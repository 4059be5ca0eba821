"""CLI commands package"""

from qwalk.cli.commands import analyze, blowup, design, evolve, families, grid_peaks, srg

__all__ = [
    "analyze",
    "blowup",
    "design",
    "evolve",
    "families",
    "grid_peaks",
    "srg",
]
