"""Pytest configuration and fixtures"""

from collections.abc import Callable

import networkx as nx
import numpy as np
import pytest

from qwalk.models.graph import MultiGraph
from qwalk.models.spectral import SpectralData
from qwalk.models.verdict import DecisionOptions
from qwalk.models.walk import TwoReflectionWalk
from qwalk.services.families import cycle, twin_apex
from qwalk.services.spectral import spectral_data
from qwalk.services.transfer_service import TransferService
from qwalk.services.walks import arc_reversal_walk, generic_walk

Analysis = tuple[TwoReflectionWalk, SpectralData, TransferService]


def random_connected_graph(n: int, seed: int, p: float = 0.4) -> MultiGraph:
    """First connected G(n, p) sample in a seeded stream"""
    rng = np.random.default_rng(seed)
    while True:
        graph = nx.gnp_random_graph(n, p, seed=int(rng.integers(2**31)))
        if nx.is_connected(graph):
            return MultiGraph.from_networkx(graph)


def random_frame_walk(seed: int, n_states: int = 8, dim: int = 3, m_cols: int = 4) -> TwoReflectionWalk:
    """Generic walk from two random orthonormal frames"""
    rng = np.random.default_rng(seed)
    N, _ = np.linalg.qr(rng.normal(size=(n_states, n_states)))
    M, _ = np.linalg.qr(rng.normal(size=(n_states, n_states)))
    return generic_walk(N[:, :dim], M[:, :m_cols])


@pytest.fixture
def options() -> DecisionOptions:
    """Default decision options"""
    return DecisionOptions.from_settings()


@pytest.fixture
def analyze_graph(options: DecisionOptions) -> Callable[..., Analysis]:
    """Factory building the arc-reversal walk, its spectrum and a service"""

    def build(graph: MultiGraph, exact: bool = True) -> Analysis:
        walk = arc_reversal_walk(graph)
        spec = spectral_data(walk, exact=exact)
        return walk, spec, TransferService(options, walk=walk)

    return build


@pytest.fixture
def cycle6(analyze_graph: Callable[..., Analysis]) -> Analysis:
    """Arc-reversal walk on C_6"""
    return analyze_graph(cycle(6))


@pytest.fixture
def twin_apex_analysis(analyze_graph: Callable[..., Analysis]) -> Analysis:
    """Arc-reversal walk on the seven-vertex graph peaking at time 6"""
    return analyze_graph(twin_apex())


@pytest.fixture
def signed_c4_walk() -> TwoReflectionWalk:
    """Generic walk whose B is the signed 4-cycle with eigenvalues +-sqrt(2)/2"""
    s = 1 / np.sqrt(2)
    N = np.zeros((8, 4))
    for i in range(4):
        N[2 * i, i] = s
        N[2 * i + 1, i] = s
    M = s * np.array(
        [
            [1, 0, 0, 0],
            [0, 0, 0, 1],
            [0, 1, 0, 0],
            [-1, 0, 0, 0],
            [0, 0, 1, 0],
            [0, 1, 0, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 0],
        ],
        dtype=float,
    )
    return generic_walk(N, M)
