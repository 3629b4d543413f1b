"""
Extremal constructions
Splice chains over Moore graphs and cages, the C4-free Brown chain, the
11-vertex gadget chain, layered graphs, and the multiply / quotient
operations on equatorial graphs
"""

from dataclasses import dataclass, asdict, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from . import __version__
from .bounds import moore_bound
from .catalog import CatalogEntry, cage_catalog, moore_catalog
from .finite_geometry import FieldError, absolute_points, brown_graph, pg2_incidence_graph, prime_power
from .graph import Edge, Graph, NotAnEdge, build_graph, disjoint_union
from .isometry import NotEquatorial, find_girth_cycle
from .logger import get_logger

logger = get_logger(__name__)


class ConstructionError(Exception):
    """Base class for construction errors"""
    pass


class InvalidJ(ConstructionError):
    """Number of copies below the family's minimum"""
    pass


class UnsupportedDelta(ConstructionError):
    """delta + 1 is not a supported prime power"""
    pass


class NoSingletonPart(ConstructionError):
    """The induced partition has no part with a single vertex"""
    pass


# ============================================
# Chains
# ============================================

def chain_copies(base: Graph, edge: Edge, j: int) -> Graph:
    """
    j copies of base - uv joined cyclically by v_i u_{i+1}; copy i holds
    ids i·n .. i·n + n-1.
    """
    u, v = edge
    if not base.has_edge(u, v):
        raise NotAnEdge((u, v))
    cut = base.without_edges([(u, v)])
    union, offsets = disjoint_union([cut] * j)
    links = [(offsets[i] + v, offsets[(i + 1) % j] + u) for i in range(j)]
    return union.with_edges(links)


def splice_edge(seed: Graph) -> Edge:
    """Lexicographically least edge of the lexicographically least girth cycle."""
    cycle = find_girth_cycle(seed)
    if cycle is None:
        raise ConstructionError("seed graph is acyclic")
    return min((min(a, b), max(a, b)) for a, b in cycle.edges())


def splice_chain(seed: Union[CatalogEntry, Graph], j: int, edge: Optional[Edge] = None) -> Graph:
    """
    Chain j copies of a Moore graph or cage with one girth-cycle edge uv
    removed, adding the edges v_i u_{i+1}. The result keeps the seed's
    degree and girth and has equator j·g.

    Args:
        edge: the edge to cut (default: see splice_edge)

    Raises:
        InvalidJ: j < 3
    """
    if j < 3:
        raise InvalidJ(f"splice chain needs j >= 3, got {j}")
    graph = seed.graph if isinstance(seed, CatalogEntry) else seed
    edge = edge if edge is not None else splice_edge(graph)
    logger.debug(f"splice chain: seed n={graph.n}, edge {edge}, j={j}")
    return chain_copies(graph, edge, j)


def brown_chain_gadget(delta: int) -> Tuple[Graph, int, int]:
    """
    B(delta+1) minus a self-orthogonal vertex x, with every edge between
    N(y) and N(z) removed, y and z the two smallest neighbours of x.

    Returns:
        (gadget, y, z) with y, z in gadget ids

    Raises:
        UnsupportedDelta
    """
    t = delta + 1
    try:
        prime_power(t)
        b = brown_graph(t)
        x = absolute_points(t)[0]
    except FieldError as e:
        raise UnsupportedDelta(f"delta={delta}: {e}") from e
    y, z = b.adjacency[x][:2]
    h, index = b.induced_subgraph(v for v in range(b.n) if v != x)
    y, z = index[y], index[z]
    ny = set(h.adjacency[y]) - {z}
    nz = set(h.adjacency[z]) - {y}
    middle = sorted({(min(a, c), max(a, c)) for a in ny for c in h.adjacency[a] if c in nz})
    return h.without_edges(middle), y, z


def c4free_chain(delta: int, j: int) -> Graph:
    """
    j copies of the Brown-chain gadget joined by y_i z_{i+1}. C4-free,
    minimum degree delta, equator 5j, order j(delta^2 + 3 delta + 2).

    Raises:
        UnsupportedDelta: delta + 1 not a prime power <= 64
        InvalidJ: j < 3
    """
    if j < 3:
        raise InvalidJ(f"C4-free chain needs j >= 3, got {j}")
    gadget, y, z = brown_chain_gadget(delta)
    union, offsets = disjoint_union([gadget] * j)
    return union.with_edges((offsets[i] + y, offsets[(i + 1) % j] + z) for i in range(j))


# Gadget H_i: vertex 0 is u_i (left attachment), vertex 10 is v_i (right).
# Triangles {0,1,2}, {3,5,6}, {4,6,7}, {8,9,10}; vertex 6 has degree 4,
# every other vertex degree 3 once u_i and v_i receive their chain edges.
GADGET11_EDGES: Tuple[Edge, ...] = (
    (0, 1), (0, 2), (2, 1), (1, 3), (2, 4), (3, 6), (6, 4), (3, 5),
    (5, 6), (6, 7), (7, 4), (5, 8), (7, 9), (8, 9), (9, 10), (10, 8),
)
GADGET11_U, GADGET11_V = 0, 10


def gadget11() -> Graph:
    return build_graph(GADGET11_EDGES, 11)


def gadget11_chain(j: int) -> Graph:
    """
    j gadgets joined by v_i u_{i+1}: minimum degree 3, C4-free,
    equator 6j, order 11j.

    Raises:
        InvalidJ: j < 3
    """
    if j < 3:
        raise InvalidJ(f"gadget chain needs j >= 3, got {j}")
    union, offsets = disjoint_union([gadget11()] * j)
    return union.with_edges(
        (offsets[i] + GADGET11_V, offsets[(i + 1) % j] + GADGET11_U) for i in range(j)
    )


def layered_graph(girth: int, sizes: Sequence[int], q: int) -> Graph:
    """
    q parts with |L_i| = sizes[i mod len(sizes)], complete joins between
    consecutive parts; parts are cliques (girth 3) or independent (girth 4).
    """
    if girth not in (3, 4):
        raise ConstructionError(f"layered graphs exist for girth 3 or 4, got {girth}")
    if not sizes or any(s < 1 for s in sizes):
        raise ConstructionError(f"part sizes must be positive, got {list(sizes)}")
    if q < 4 or q % len(sizes):
        raise ConstructionError(f"q={q} must be >= 4 and a multiple of the pattern length {len(sizes)}")
    parts: List[List[int]] = []
    nxt = 0
    for i in range(q):
        s = sizes[i % len(sizes)]
        parts.append(list(range(nxt, nxt + s)))
        nxt += s
    edges: List[Edge] = []
    for i, part in enumerate(parts):
        if girth == 3:
            edges += [(a, b) for a in part for b in part if a < b]
        edges += [(a, b) for a in part for b in parts[(i + 1) % q]]
    return build_graph(edges, nxt)


# ============================================
# Multiply / quotient
# ============================================

def multiply_equatorial(g: Graph, j: int, threads: Optional[int] = None) -> Graph:
    """
    Cut the edges between L_{q-1} and L_0 and chain j copies by the cut
    edges u^i v^{i+1} (u in L_{q-1}, v in L_0). Equatorial with equator jq.

    Raises:
        InvalidJ: j < 2
        NotEquatorial: g is not equatorial
    """
    from .structure import equatorial_profile, induced_partition

    if j < 2:
        raise InvalidJ(f"multiplication needs j >= 2, got {j}")
    profile = equatorial_profile(g, threads=threads)
    if not profile.equatorial:
        raise NotEquatorial(f"graph is not equatorial: {profile.to_dict()['bound']}")
    p = induced_partition(g, profile.witness, dm=profile.dm)
    last, first = p.parts[-1], p.parts[0]
    cut = [(a, b) for a in sorted(last) for b in g.adjacency[a] if b in first]
    body = g.without_edges(cut)
    union, offsets = disjoint_union([body] * j)
    return union.with_edges(
        (offsets[i] + a, offsets[(i + 1) % j] + b) for i in range(j) for a, b in cut
    )


def quotient_to_moore(g: Graph, threads: Optional[int] = None) -> Graph:
    """
    The induced subgraph on L_i ∪ ... ∪ L_{i+g} around a singleton part
    L_i (so L_{i+g} is a singleton too), with the two singletons identified:
    a delta-regular Moore graph of girth g.

    Raises:
        NotEquatorial: g is not equatorial
        NoSingletonPart: no part has exactly one vertex
    """
    from .structure import equatorial_profile, induced_partition

    profile = equatorial_profile(g, threads=threads)
    if not profile.equatorial:
        raise NotEquatorial(f"graph is not equatorial: {profile.to_dict()['bound']}")
    p = induced_partition(g, profile.witness, dm=profile.dm)
    gi, q = p.girth, p.q
    start = next(
        (i for i in range(q) if len(p.parts[i]) == 1 and len(p.part(i + gi)) == 1),
        None,
    )
    if start is None:
        raise NoSingletonPart(f"part sizes {list(p.sizes)} have no singleton")
    (s,) = p.parts[start]
    (t,) = p.part(start + gi)
    keep = p.window(start, gi + 1)
    sub, index = g.induced_subgraph(keep)
    si, ti = index[s], index[t]
    merged = [(si if a == ti else a, si if b == ti else b) for a, b in sub.edges]
    order = [v for v in range(sub.n) if v != ti]
    position = {v: i for i, v in enumerate(order)}
    return build_graph([(position[a], position[b]) for a, b in merged], len(order))


# ============================================
# Dispatch
# ============================================

FAMILIES = (
    "splice", "brown", "brown_chain", "incidence", "gadget11",
    "layered", "multiply", "quotient", "catalog",
)


@dataclass
class ConstructionSpec:
    """
    family plus the parameters it uses:
      splice       delta, g, j, seed ("moore" or "cage")
      brown        t
      incidence    t
      brown_chain  delta, j
      gadget11     j
      layered      g (3|4), sizes, q
      multiply     delta, g, j (base splice chain with base_j copies), or an input graph
      quotient     delta, g, base_j, or an input graph
      catalog      delta, g, seed
    """
    family: str
    delta: Optional[int] = None
    g: Optional[int] = None
    j: Optional[int] = None
    q: Optional[int] = None
    t: Optional[int] = None
    seed: str = "moore"
    sizes: Tuple[int, ...] = field(default_factory=tuple)
    base_j: int = 4

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ConstructionError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        required = {
            "splice": ("delta", "g", "j"),
            "brown": ("t",),
            "incidence": ("t",),
            "brown_chain": ("delta", "j"),
            "gadget11": ("j",),
            "layered": ("g", "q"),
            "catalog": ("delta", "g"),
        }.get(self.family, ())
        missing = [name for name in required if getattr(self, name) is None]
        if missing:
            raise ConstructionError(f"family {self.family} needs --{' --'.join(missing)}")
        if self.family == "layered" and not self.sizes:
            raise ConstructionError("family layered needs --sizes")
        if self.seed not in ("moore", "cage"):
            raise ConstructionError(f"seed must be 'moore' or 'cage', got {self.seed!r}")

    def to_dict(self) -> Dict[str, Any]:
        data = {k: v for k, v in asdict(self).items() if v not in (None, (), [])}
        if "sizes" in data:
            data["sizes"] = list(data["sizes"])
        return data


def _seed_entry(spec: ConstructionSpec) -> CatalogEntry:
    lookup = cage_catalog if spec.seed == "cage" else moore_catalog
    return lookup(spec.delta, spec.g)


def build_construction(spec: ConstructionSpec, base: Optional[Graph] = None) -> Graph:
    """
    Build the graph a spec describes.

    Args:
        base: input graph for multiply / quotient (default: the splice chain
            of (delta, g) with base_j copies)
    """
    spec.validate()
    family = spec.family
    if family == "splice":
        return splice_chain(_seed_entry(spec), spec.j)
    if family == "brown":
        return brown_graph(spec.t)
    if family == "incidence":
        return pg2_incidence_graph(spec.t)
    if family == "brown_chain":
        return c4free_chain(spec.delta, spec.j)
    if family == "gadget11":
        return gadget11_chain(spec.j)
    if family == "layered":
        return layered_graph(spec.g, spec.sizes, spec.q)
    if family == "catalog":
        return _seed_entry(spec).graph
    if base is None:
        if spec.delta is None or spec.g is None:
            raise ConstructionError(f"family {family} needs an input graph or --delta/--g")
        base = splice_chain(_seed_entry(spec), spec.base_j)
    if family == "multiply":
        return multiply_equatorial(base, spec.j if spec.j is not None else 2)
    return quotient_to_moore(base)


def expected_invariants(spec: ConstructionSpec, base: Optional[Graph] = None) -> Dict[str, Optional[int]]:
    """
    Order, minimum degree, girth and equator predicted by the construction's
    formulas; None where no formula applies.
    """
    spec.validate()
    family = spec.family
    out: Dict[str, Optional[int]] = {"n": None, "delta": None, "g": None, "q": None}
    if family == "splice":
        entry = _seed_entry(spec)
        out.update(n=spec.j * entry.order, delta=spec.delta, g=spec.g, q=spec.j * spec.g)
    elif family == "brown":
        t = spec.t
        out.update(n=t * t + t + 1, delta=t, g=3)
    elif family == "incidence":
        t = spec.t
        out.update(n=2 * (t * t + t + 1), delta=t + 1, g=6)
    elif family == "brown_chain":
        d = spec.delta
        out.update(n=spec.j * (d * d + 3 * d + 2), delta=d, q=5 * spec.j)
    elif family == "gadget11":
        out.update(n=11 * spec.j, delta=3, g=3, q=6 * spec.j)
    elif family == "layered":
        s, q = spec.sizes, spec.q
        sizes = [s[i % len(s)] for i in range(q)]
        if spec.g == 3:
            delta = min(sizes[i - 1] + sizes[i] + sizes[(i + 1) % q] - 1 for i in range(q))
        else:
            delta = min(sizes[i - 1] + sizes[(i + 1) % q] for i in range(q))
        out.update(n=sum(sizes), delta=delta, g=spec.g, q=q)
    elif family == "catalog":
        entry = _seed_entry(spec)
        out.update(n=entry.order, delta=spec.delta, g=spec.g)
    elif family == "multiply" and base is None:
        entry = _seed_entry(spec)
        j = spec.j if spec.j is not None else 2
        out.update(n=j * spec.base_j * entry.order, delta=spec.delta, g=spec.g,
                   q=j * spec.base_j * spec.g)
    elif family == "quotient" and spec.delta is not None and spec.g is not None:
        out.update(n=moore_bound(spec.delta, spec.g), delta=spec.delta, g=spec.g)
    return out


def construction_metadata(spec: ConstructionSpec) -> Dict[str, Any]:
    """Provenance header written into edge-list files."""
    meta: Dict[str, Any] = {
        "generator": f"equator-workbench {__version__}",
        "family": spec.family,
        "parameters": spec.to_dict(),
    }
    if spec.family == "brown_chain":
        meta["reading"] = "chain edges join y_i to z_(i+1); d(y, z) = 4 inside each gadget"
    return meta


__all__ = [
    "ConstructionError",
    "InvalidJ",
    "UnsupportedDelta",
    "NoSingletonPart",
    "NotEquatorial",
    "chain_copies",
    "splice_edge",
    "splice_chain",
    "brown_chain_gadget",
    "c4free_chain",
    "GADGET11_EDGES",
    "gadget11",
    "gadget11_chain",
    "layered_graph",
    "multiply_equatorial",
    "quotient_to_moore",
    "FAMILIES",
    "ConstructionSpec",
    "build_construction",
    "expected_invariants",
    "construction_metadata",
]
