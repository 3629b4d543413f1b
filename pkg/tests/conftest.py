"""
Shared fixtures and independent oracles.

The oracles use networkx only (cycle enumeration and shortest paths), so
they share no code with the search under test.
"""

import sys
from pathlib import Path

import networkx as nx
import pytest

ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT))

from core.catalog import moore_catalog, petersen_graph
from core.constructions import splice_chain
from core.graph import Graph, complete_bipartite_graph, wheel_graph


# ============================================
# Oracles
# ============================================

def _cycles(g: Graph):
    h = g.to_networkx()
    for cycle in nx.simple_cycles(h):
        if len(cycle) >= 3:
            yield cycle


def oracle_is_isometric(h: nx.Graph, cycle) -> bool:
    dist = dict(nx.all_pairs_shortest_path_length(h))
    q = len(cycle)
    for i in range(q):
        for j in range(i + 1, q):
            if dist[cycle[i]].get(cycle[j]) != min(j - i, q - (j - i)):
                return False
    return True


def oracle_girth(g: Graph):
    lengths = [len(c) for c in _cycles(g)]
    return min(lengths) if lengths else float("inf")


def oracle_equator(g: Graph) -> int:
    h = g.to_networkx()
    dist = dict(nx.all_pairs_shortest_path_length(h))
    best = 0
    for cycle in _cycles(g):
        q = len(cycle)
        if q <= best:
            continue
        if all(
            dist[cycle[i]].get(cycle[j]) == min(j - i, q - (j - i))
            for i in range(q) for j in range(i + 1, q)
        ):
            best = q
    return best


# ============================================
# Fixtures
# ============================================

@pytest.fixture(scope="session")
def petersen() -> Graph:
    return petersen_graph()


@pytest.fixture(scope="session")
def wheel() -> Graph:
    """C5 + K1: n=6, girth 3, equator 5."""
    return wheel_graph(5)


@pytest.fixture(scope="session")
def k33() -> Graph:
    return complete_bipartite_graph(3, 3)


@pytest.fixture(scope="session")
def f3_5_20() -> Graph:
    """Four spliced Petersen copies: 3-regular, girth 5, equator 20, n=40."""
    return splice_chain(moore_catalog(3, 5), 4)


@pytest.fixture(scope="session")
def k33_chain() -> Graph:
    """Four spliced K3,3 copies: girth 4, equator 16, n=24."""
    return splice_chain(moore_catalog(3, 4), 4)
