"""
Graph core module
Simple undirected graphs, all-pairs distances and the basic invariants
(girth, diameter, radius, disks, degree profile)
"""

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx
import numpy as np

Edge = Tuple[int, int]
Girth = Union[int, float]

# Marks unreachable pairs in a DistanceMatrix
UNREACHABLE: int = -1


# ============================================
# Errors
# ============================================

class GraphError(Exception):
    """Base class for graph-core errors"""
    pass


class SelfLoop(GraphError):
    """An edge joins a vertex to itself"""

    def __init__(self, edge: Edge):
        self.edge = edge
        super().__init__(f"self-loop {edge} is not allowed in a simple graph")


class VertexOutOfRange(GraphError):
    """A vertex id is outside [0, n)"""

    def __init__(self, vertex: int, n: int):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex} out of range for a graph on {n} vertices")


class NotAnEdge(GraphError):
    """The given pair is not an edge of the graph"""

    def __init__(self, edge: Edge):
        self.edge = edge
        super().__init__(f"{edge} is not an edge")


class Disconnected(GraphError):
    """The operation needs a connected graph"""
    pass


# ============================================
# Data types
# ============================================

@dataclass(frozen=True)
class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1.

    adjacency[v] is the sorted tuple of neighbours of v. Iteration order
    everywhere follows these tuples, so every search built on top is
    reproducible.
    """
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """All edges (u, v) with u < v, lexicographically sorted."""
        return tuple(
            (u, v) for u in range(self.n) for v in self.adjacency[u] if u < v
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbor_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self.neighbor_sets[u]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v, self.n)

    # ---- derived graphs ----

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", Dict[int, int]]:
        """
        Subgraph induced by `vertices`, relabelled 0.. in ascending order.

        Returns:
            (subgraph, old id -> new id)
        """
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[w])
            for u in keep for w in self.adjacency[u]
            if w in index and u < w
        ]
        return build_graph(edges, len(keep)), index

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        drop = set()
        for u, v in removed:
            if not self.has_edge(u, v):
                raise NotAnEdge((u, v))
            drop.add((min(u, v), max(u, v)))
        return build_graph([e for e in self.edges if e not in drop], self.n)

    def with_edges(self, added: Iterable[Edge]) -> "Graph":
        return build_graph(list(self.edges) + list(added), self.n)

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex i is the old vertex order[i]."""
        if sorted(order) != list(range(self.n)):
            raise GraphError("relabel order must be a permutation of the vertices")
        position = {old: new for new, old in enumerate(order)}
        return build_graph([(position[u], position[v]) for u, v in self.edges], self.n)

    # ---- networkx bridge ----

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h

    @classmethod
    def from_networkx(cls, h: nx.Graph) -> "Graph":
        """Import a networkx graph, numbering nodes in sorted order when possible."""
        try:
            nodes = sorted(h.nodes())
        except TypeError:
            nodes = list(h.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return build_graph([(index[u], index[v]) for u, v in h.edges()], len(nodes))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DistanceMatrix:
    """
    Dense all-pairs hop distances; UNREACHABLE (-1) marks pairs in different
    components.
    """
    n: int
    dist: np.ndarray = field(repr=False, compare=False)

    def __call__(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    @cached_property
    def rows(self) -> List[List[int]]:
        """Plain-list view for tight Python loops."""
        return self.dist.tolist()

    @cached_property
    def is_connected(self) -> bool:
        return self.n == 0 or not bool((self.dist == UNREACHABLE).any())

    @cached_property
    def max_finite(self) -> int:
        """Largest finite distance (the diameter when connected)."""
        if self.n == 0:
            return 0
        return int(self.dist.max())


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    is_regular: bool
    degree_histogram: Dict[int, int]

    def to_dict(self) -> Dict[str, object]:
        return {
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "is_regular": self.is_regular,
            "degree_histogram": {str(d): c for d, c in sorted(self.degree_histogram.items())},
        }


# ============================================
# Construction
# ============================================

def build_graph(edges: Iterable[Sequence[int]], n: int) -> Graph:
    """
    Build a simple graph from an edge list.

    Duplicate edges (in either orientation) collapse to one.

    Raises:
        SelfLoop: some edge has equal endpoints
        VertexOutOfRange: an endpoint is not in [0, n)
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: List[Set[int]] = [set() for _ in range(n)]
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        if u == v:
            raise SelfLoop((u, v))
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(x, n)
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n=n, adjacency=tuple(tuple(sorted(s)) for s in nbrs))


def disjoint_union(graphs: Sequence[Graph]) -> Tuple[Graph, List[int]]:
    """
    Disjoint union; copy i occupies ids offsets[i] .. offsets[i] + graphs[i].n - 1.
    """
    offsets: List[int] = []
    edges: List[Edge] = []
    total = 0
    for h in graphs:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in h.edges)
        total += h.n
    return build_graph(edges, total), offsets


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph([(i, (i + 1) % n) for i in range(n)], n)


def complete_graph(n: int) -> Graph:
    return build_graph([(u, v) for u in range(n) for v in range(u + 1, n)], n)


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return build_graph([(u, a + v) for u in range(a) for v in range(b)], a + b)


def wheel_graph(rim: int) -> Graph:
    """C_rim plus a hub joined to every rim vertex; the hub is vertex `rim`."""
    spokes = [(i, rim) for i in range(rim)]
    return build_graph(list(cycle_graph(rim).edges) + spokes, rim + 1)


# ============================================
# Distances
# ============================================

def bfs_distances(g: Graph, source: int) -> List[int]:
    """Hop distances from `source`; UNREACHABLE where no path exists."""
    g._check_vertex(source)
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """One BFS per source; O(n·m)."""
    dist = np.full((g.n, g.n), UNREACHABLE, dtype=np.int32)
    for s in range(g.n):
        dist[s] = bfs_distances(g, s)
    return DistanceMatrix(n=g.n, dist=dist)


def components(g: Graph) -> List[List[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.n
    result = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, s)) if d != UNREACHABLE]
        for v in comp:
            seen[v] = True
        result.append(comp)
    return result


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def eccentricities(dm: DistanceMatrix) -> List[int]:
    if not dm.is_connected:
        raise Disconnected("eccentricity is undefined on a disconnected graph")
    return [int(x) for x in dm.dist.max(axis=1)] if dm.n else []


# ============================================
# Invariants
# ============================================

def girth(g: Graph) -> Girth:
    """
    Length of a shortest cycle, math.inf for forests.

    A BFS from each root finds the shortest cycle through that root when a
    non-tree edge closes two branches; the minimum over all roots is exact.
    """
    best: Girth = math.inf
    adjacency = g.adjacency
    for root in range(g.n):
        dist = [UNREACHABLE] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # cycles closed from depth d have length >= 2d
            if 2 * dist[u] >= best:
                break
            for w in adjacency[u]:
                if dist[w] == UNREACHABLE:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            break
    return best


def diameter_and_radius(g: Graph, dm: Optional[DistanceMatrix] = None) -> Tuple[int, int]:
    """
    Raises:
        Disconnected: g has more than one component
    """
    dm = dm or all_pairs_distances(g)
    if not dm.is_connected:
        raise Disconnected(f"graph with {len(components(g))} components has no finite diameter")
    if g.n == 0:
        return 0, 0
    ecc = eccentricities(dm)
    return max(ecc), min(ecc)


def disk(g: Graph, v: int, k: int, dm: Optional[DistanceMatrix] = None) -> FrozenSet[int]:
    """Vertices within distance k of v; disk(v, 0) == {v}."""
    g._check_vertex(v)
    if k < 0:
        raise GraphError(f"disk radius must be non-negative, got {k}")
    row = dm.rows[v] if dm is not None else bfs_distances(g, v)
    return frozenset(w for w, d in enumerate(row) if d != UNREACHABLE and d <= k)


def edge_disk(g: Graph, e: Edge, k: int, dm: Optional[DistanceMatrix] = None) -> FrozenSet[int]:
    """
    Union of the radius-k disks of both endpoints.

    Raises:
        NotAnEdge: e is not an edge of g
    """
    u, v = e
    if not g.has_edge(u, v):
        raise NotAnEdge((u, v))
    return disk(g, u, k, dm) | disk(g, v, k, dm)


def degree_profile(g: Graph) -> DegreeProfile:
    histogram = Counter(g.degrees)
    if g.n == 0:
        return DegreeProfile(0, 0, True, {})
    lo, hi = min(g.degrees), max(g.degrees)
    return DegreeProfile(
        min_degree=lo,
        max_degree=hi,
        is_regular=lo == hi,
        degree_histogram=dict(sorted(histogram.items())),
    )


def is_c4_free(g: Graph) -> bool:
    """True iff every pair of vertices has at most one common neighbour."""
    for u in range(g.n):
        seen: Set[int] = set()
        for w in g.adjacency[u]:
            for x in g.adjacency[w]:
                if x == u:
                    continue
                if x in seen:
                    return False
                seen.add(x)
    return True


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test (networkx VF2 after cheap invariant rejection)."""
    if a.n != b.n or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        return False
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())


__all__ = [
    "Edge",
    "Girth",
    "UNREACHABLE",
    "GraphError",
    "SelfLoop",
    "VertexOutOfRange",
    "NotAnEdge",
    "Disconnected",
    "Graph",
    "DistanceMatrix",
    "DegreeProfile",
    "build_graph",
    "disjoint_union",
    "cycle_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "wheel_graph",
    "bfs_distances",
    "all_pairs_distances",
    "components",
    "is_connected",
    "eccentricities",
    "girth",
    "diameter_and_radius",
    "disk",
    "edge_disk",
    "degree_profile",
    "is_c4_free",
    "are_isomorphic",
]


if __name__ == "__main__":
    petersen = Graph.from_networkx(nx.petersen_graph())
    print(petersen, "girth", girth(petersen), "d/r", diameter_and_radius(petersen))
    print(degree_profile(petersen))
