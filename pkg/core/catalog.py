"""
Seed catalog
Moore graphs and the small girth-5 cages used as splice seeds
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx

from .bounds import moore_bound
from .finite_geometry import FieldError, pg2_incidence_graph, prime_power
from .graph import Graph, build_graph, complete_bipartite_graph, complete_graph, cycle_graph


class CatalogError(Exception):
    """Base class for catalog lookups"""
    pass


class NoKnownMooreGraph(CatalogError):
    """No Moore graph is known (or shipped) for these parameters"""
    pass


class NoKnownCage(CatalogError):
    """No cage is shipped for these parameters"""
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    delta: int
    g: int
    is_moore: bool

    @property
    def order(self) -> int:
        return self.graph.n

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "order": self.order,
            "delta": self.delta,
            "g": self.g,
            "is_moore": self.is_moore,
        }


# ============================================
# Named graphs
# ============================================

def petersen_graph() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def _pentagon(h: int, j: int) -> int:
    return 5 * h + j


def _pentagram(i: int, j: int) -> int:
    return 25 + 5 * i + j


def hoffman_singleton_graph() -> Graph:
    """
    Pentagons P_h (ids 5h+j) and pentagrams Q_i (ids 25+5i+j):
    P_h,j ~ P_h,j±1, Q_i,j ~ Q_i,j±2, P_h,j ~ Q_i,(h·i+j mod 5).
    """
    edges: List[Tuple[int, int]] = []
    for h in range(5):
        for j in range(5):
            edges.append((_pentagon(h, j), _pentagon(h, (j + 1) % 5)))
            edges.append((_pentagram(h, j), _pentagram(h, (j + 2) % 5)))
            for i in range(5):
                edges.append((_pentagon(h, j), _pentagram(i, (h * i + j) % 5)))
    return build_graph(edges, 50)


def hoffman_singleton_deletion(pentagons: int) -> Graph:
    """
    Delete the first `pentagons` pentagons and as many pentagrams from
    Hoffman-Singleton. Every survivor loses exactly `pentagons` neighbours,
    so the result is (7 - pentagons)-regular with girth 5: one deletion gives
    the (6,5)-cage on 40 vertices, two give a (5,5)-cage on 30.
    """
    hs = hoffman_singleton_graph()
    dropped = {_pentagon(h, j) for h in range(pentagons) for j in range(5)}
    dropped |= {_pentagram(i, j) for i in range(pentagons) for j in range(5)}
    sub, _ = hs.induced_subgraph(v for v in range(hs.n) if v not in dropped)
    return sub


# Hamiltonian cycle 0..18 plus the chord i -> i + ROBERTSON_CHORDS[i] (mod 19)
ROBERTSON_CHORDS: Tuple[int, ...] = (
    8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4,
)


def robertson_graph() -> Graph:
    """The (4,5)-cage, 19 vertices."""
    n = len(ROBERTSON_CHORDS)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + step) % n) for i, step in enumerate(ROBERTSON_CHORDS)]
    return build_graph(edges, n)


# ============================================
# Lookups
# ============================================

def _entry(name: str, graph: Graph, delta: int, g: int) -> CatalogEntry:
    return CatalogEntry(name, graph, delta, g, graph.n == moore_bound(delta, g))


def moore_catalog(delta: int, g: int) -> CatalogEntry:
    """
    Moore graph for (delta, g).

    Shipped: cycles (delta=2), K_{delta+1} (g=3), K_{delta,delta} (g=4),
    Petersen (3,5), Hoffman-Singleton (7,5), PG(2, delta-1) incidence (g=6).

    Raises:
        NoKnownMooreGraph
    """
    if delta < 2 or g < 3:
        raise NoKnownMooreGraph(f"no Moore graph with delta={delta}, g={g}")
    if delta == 2:
        return _entry(f"C{g}", cycle_graph(g), delta, g)
    if g == 3:
        return _entry(f"K{delta + 1}", complete_graph(delta + 1), delta, g)
    if g == 4:
        return _entry(f"K{delta},{delta}", complete_bipartite_graph(delta, delta), delta, g)
    if g == 5 and delta == 3:
        return _entry("petersen", petersen_graph(), delta, g)
    if g == 5 and delta == 7:
        return _entry("hoffman-singleton", hoffman_singleton_graph(), delta, g)
    if g == 6:
        try:
            prime_power(delta - 1)
            return _entry(f"pg2-incidence-{delta - 1}", pg2_incidence_graph(delta - 1), delta, g)
        except FieldError as e:
            raise NoKnownMooreGraph(f"no Moore graph with delta={delta}, g=6: {e}") from e
    raise NoKnownMooreGraph(f"no Moore graph known for delta={delta}, g={g}")


def cage_catalog(delta: int, g: int) -> CatalogEntry:
    """
    (delta, g)-cage: the Moore graph when one exists, else the shipped cages
    Robertson (4,5), and the Hoffman-Singleton deletions (5,5) and (6,5).

    Raises:
        NoKnownCage
    """
    try:
        return moore_catalog(delta, g)
    except NoKnownMooreGraph:
        pass
    if (delta, g) == (4, 5):
        return _entry("robertson", robertson_graph(), delta, g)
    if (delta, g) == (5, 5):
        return _entry("hs-minus-two-pairs", hoffman_singleton_deletion(2), delta, g)
    if (delta, g) == (6, 5):
        return _entry("hs-minus-one-pair", hoffman_singleton_deletion(1), delta, g)
    raise NoKnownCage(f"no cage shipped for delta={delta}, g={g}")


def girth5_table(deltas=(3, 4, 5, 6, 7)) -> List[Dict[str, object]]:
    """Rows (delta, M(delta,5), C(delta,5), seed name) for the report command."""
    rows = []
    for delta in deltas:
        entry = cage_catalog(delta, 5)
        rows.append({
            "delta": delta,
            "moore": moore_bound(delta, 5),
            "cage": entry.order,
            "name": entry.name,
            "is_moore": entry.is_moore,
        })
    return rows


def catalog_entries() -> List[CatalogEntry]:
    """Every distinct graph the catalog ships at desk scale."""
    entries = [
        moore_catalog(3, 3), moore_catalog(4, 3), moore_catalog(3, 4), moore_catalog(4, 4),
        moore_catalog(3, 5), moore_catalog(7, 5), moore_catalog(3, 6), moore_catalog(4, 6),
    ]
    entries += [cage_catalog(4, 5), cage_catalog(5, 5), cage_catalog(6, 5)]
    return entries


__all__ = [
    "CatalogError",
    "NoKnownMooreGraph",
    "NoKnownCage",
    "CatalogEntry",
    "ROBERTSON_CHORDS",
    "petersen_graph",
    "hoffman_singleton_graph",
    "hoffman_singleton_deletion",
    "robertson_graph",
    "moore_catalog",
    "cage_catalog",
    "girth5_table",
    "catalog_entries",
]
