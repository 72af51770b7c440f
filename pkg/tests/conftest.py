"""Shared fixtures for rlcongest tests."""

from __future__ import annotations

import pytest

from rlcongest.config import Config
from rlcongest.graph import AttributedGraph, gen_erdos_renyi, gen_family, largest_component


@pytest.fixture
def path4() -> AttributedGraph:
    """P_4: 0-1-2-3."""
    return gen_family("path", 4)


@pytest.fixture
def cycle6() -> AttributedGraph:
    return gen_family("cycle", 6)


@pytest.fixture
def star5() -> AttributedGraph:
    """Star with center 0 and four leaves."""
    return gen_family("star", 5)


@pytest.fixture
def k4() -> AttributedGraph:
    return gen_family("complete", 4)


@pytest.fixture
def two_triangles() -> AttributedGraph:
    """C_3 ⊎ C_3, the 1-WL twin of C_6."""
    return AttributedGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@pytest.fixture
def house() -> AttributedGraph:
    """A 4-cycle with a roof: nodes 0-3 form the square, 4 is the apex on edge (2, 3)."""
    return AttributedGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (2, 4), (3, 4)])


@pytest.fixture
def er_graphs() -> list[AttributedGraph]:
    """Eight seeded connected ER samples, n in [12, 30], p = 5/n."""
    graphs = []
    for seed in range(8):
        n = 12 + 2 * seed + (seed % 3)
        graphs.append(largest_component(gen_erdos_renyi(n, 5.0 / n, seed)))
    return graphs


@pytest.fixture
def default_config(tmp_path) -> Config:
    """Config with defaults, writing into the test's temporary directory."""
    return Config(output_dir=tmp_path, parallel_jobs=1)
