"""
Isometric cycles
Certification of isometric cycles and the exact equator search with witness
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .config import EQUATOR_THREADS
from .graph import DistanceMatrix, Graph, all_pairs_distances, girth
from .logger import get_logger

if TYPE_CHECKING:
    from .structure import EquatorPartition

logger = get_logger(__name__)


# ============================================
# Errors
# ============================================

class IsometryError(Exception):
    """Base class for isometric-cycle errors"""
    pass


class NotACycle(IsometryError):
    """The vertex sequence is not a cycle of the graph"""
    pass


class NotEquatorial(IsometryError):
    """The graph does not have the structure of an equatorial graph"""
    pass


class CapBelowGirth(IsometryError):
    """The equator ceiling is shorter than every cycle of the graph"""
    pass


# ============================================
# Data types
# ============================================

@dataclass(frozen=True)
class IsometricCycle:
    """Ordered vertices u_0..u_{q-1} of a cycle certified isometric in its host."""
    vertices: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def __getitem__(self, i: int) -> int:
        return self.vertices[i % len(self.vertices)]

    def index(self, v: int) -> int:
        return self.vertices.index(v)

    def canonical(self) -> "IsometricCycle":
        """Rotation/reflection starting at the smallest vertex with the smaller neighbour second."""
        q = self.length
        start = self.vertices.index(min(self.vertices))
        forward = tuple(self.vertices[(start + s) % q] for s in range(q))
        backward = tuple(self.vertices[(start - s) % q] for s in range(q))
        return IsometricCycle(min(forward, backward))

    def edges(self) -> List[Tuple[int, int]]:
        q = self.length
        return [(self.vertices[i], self.vertices[(i + 1) % q]) for i in range(q)]

    def to_list(self) -> List[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class EquatorResult:
    """
    q is 0 for acyclic graphs. search_capped marks a ceiling below the
    natural 2d+1 bound, in which case q is only a lower bound.
    """
    q: int
    witness: Optional[IsometricCycle]
    search_capped: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "witness": self.witness.to_list() if self.witness else None,
            "search_capped": self.search_capped,
        }


# ============================================
# Certification
# ============================================

def cycle_metric(q: int) -> np.ndarray:
    """q×q matrix of min(|i-j|, q-|i-j|)."""
    idx = np.arange(q)
    diff = np.abs(idx[:, None] - idx[None, :])
    return np.minimum(diff, q - diff)


def is_isometric_cycle(g: Graph, dm: DistanceMatrix, cycle: Sequence[int]) -> bool:
    """
    True iff `cycle` is a cycle of g whose cycle distances equal graph distances.

    Raises:
        NotACycle: fewer than 3 vertices, repeated vertices, or a missing edge
    """
    vertices = list(cycle.vertices) if isinstance(cycle, IsometricCycle) else list(cycle)
    q = len(vertices)
    if q < 3:
        raise NotACycle(f"a cycle needs at least 3 vertices, got {q}")
    if len(set(vertices)) != q:
        raise NotACycle(f"vertex sequence {vertices} repeats a vertex")
    for i in range(q):
        u, v = vertices[i], vertices[(i + 1) % q]
        if not g.has_edge(u, v):
            raise NotACycle(f"consecutive vertices {u} and {v} are not adjacent")
    idx = np.asarray(vertices)
    return bool(np.array_equal(dm.dist[np.ix_(idx, idx)], cycle_metric(q)))


# ============================================
# Search
# ============================================

def _expected_table(length: int) -> List[List[int]]:
    # row t: required d(v_i, v_t) for i < t
    return [
        [min(t - i, length - (t - i)) for i in range(t)]
        for t in range(length)
    ]


def _cycles_from_start(
    adjacency: Sequence[Sequence[int]],
    rows: Sequence[Sequence[int]],
    length: int,
    start: int,
    expected: List[List[int]],
) -> Iterator[Tuple[int, ...]]:
    """
    Isometric `length`-cycles whose smallest vertex is `start`, each once
    (v_1 < v_{length-1}), in lexicographic order.

    Every prefix v_0..v_t must already realise the cycle metric; a vertex
    repeat shows up as a zero distance, so no visited set is needed.
    """
    path = [start]
    stack = [iter(adjacency[start])]
    last = length - 1
    while stack:
        t = len(path)
        need = expected[t]
        advanced = False
        for w in stack[-1]:
            if w <= start:
                continue
            row = rows[w]
            if row[start] != need[0]:
                continue
            if any(row[v] != d for v, d in zip(path, need)):
                continue
            if t == last:
                if path[1] < w:
                    yield tuple(path) + (w,)
                continue
            path.append(w)
            stack.append(iter(adjacency[w]))
            advanced = True
            break
        if not advanced:
            stack.pop()
            path.pop()


def _first_from_start(adjacency, rows, length, start) -> Optional[Tuple[int, ...]]:
    return next(_cycles_from_start(adjacency, rows, length, start, _expected_table(length)), None)


# per-process state for the pool workers
_worker_state: Dict[str, Any] = {}


def _init_worker(adjacency, rows) -> None:
    _worker_state["adjacency"] = adjacency
    _worker_state["rows"] = rows


def _worker_first(task: Tuple[int, int]) -> Optional[Tuple[int, ...]]:
    length, start = task
    return _first_from_start(_worker_state["adjacency"], _worker_state["rows"], length, start)


def iter_isometric_cycles(
    g: Graph,
    length: int,
    dm: Optional[DistanceMatrix] = None,
    through: Optional[int] = None,
    limit: Optional[int] = None,
) -> Iterator[IsometricCycle]:
    """
    Enumerate isometric cycles of the given length in canonical form,
    deterministically (smallest vertex ascending, then lexicographic).

    Args:
        through: only cycles containing this vertex
        limit: stop after this many cycles
    """
    if length < 3 or length > g.n:
        return
    dm = dm or all_pairs_distances(g)
    expected = _expected_table(length)
    rows = dm.rows
    count = 0
    last_start = g.n - length if through is None else min(through, g.n - length)
    for start in range(last_start + 1):
        for cycle in _cycles_from_start(g.adjacency, rows, length, start, expected):
            if through is not None and through not in cycle:
                continue
            yield IsometricCycle(cycle)
            count += 1
            if limit is not None and count >= limit:
                return


def find_isometric_cycle(
    g: Graph,
    length: int,
    dm: Optional[DistanceMatrix] = None,
) -> Optional[IsometricCycle]:
    """The lexicographically first isometric cycle of the given length, if any."""
    return next(iter_isometric_cycles(g, length, dm), None)


def find_girth_cycle(g: Graph) -> Optional[IsometricCycle]:
    """Lexicographically least shortest cycle (shortest cycles are always isometric)."""
    gi = girth(g)
    if gi == float("inf"):
        return None
    return find_isometric_cycle(g, int(gi))


def equator(
    g: Graph,
    cap: Optional[int] = None,
    threads: Optional[int] = None,
    dm: Optional[DistanceMatrix] = None,
) -> EquatorResult:
    """
    Length of a longest isometric cycle, with a witness.

    Lengths are tried from min(cap, 2d+1, n) down to the girth; the first
    length that admits an isometric cycle is the equator. A shortest cycle
    is always isometric, so the loop ends at the girth at the latest.

    Args:
        cap: optional ceiling on the lengths tried; must be at least the girth
        threads: worker processes over start vertices (default EQUATOR_THREADS)
        dm: precomputed distances

    Returns:
        EquatorResult (q=0 for forests)

    Raises:
        CapBelowGirth: cap is shorter than the girth
    """
    dm = dm or all_pairs_distances(g)
    gi = girth(g)
    if gi == float("inf"):
        return EquatorResult(q=0, witness=None, search_capped=False)
    if cap is not None and cap < gi:
        raise CapBelowGirth(f"cap {cap} is below the girth {gi}")

    natural = min(2 * dm.max_finite + 1, g.n)
    ceiling = natural if cap is None else min(cap, natural)
    capped = cap is not None and cap < natural
    lengths = list(range(ceiling, int(gi) - 1, -1))
    workers = threads if threads is not None else EQUATOR_THREADS

    logger.debug(f"equator: n={g.n} girth={gi} lengths {ceiling}..{gi} workers={workers}")

    if workers > 1 and g.n > 1:
        found = _parallel_search(g, dm, lengths, workers)
    else:
        found = None
        for length in lengths:
            witness = find_isometric_cycle(g, length, dm)
            if witness is not None:
                found = witness
                break
            logger.debug(f"equator: no isometric {length}-cycle")

    if found is None:
        return EquatorResult(q=0, witness=None, search_capped=capped)
    return EquatorResult(q=found.length, witness=found, search_capped=capped)


def _parallel_search(
    g: Graph, dm: DistanceMatrix, lengths: List[int], workers: int
) -> Optional[IsometricCycle]:
    """Start vertices fan out over a process pool; the smallest successful start wins."""
    pool = ProcessPoolExecutor(
        max_workers=workers, initializer=_init_worker, initargs=(g.adjacency, dm.rows)
    )
    try:
        for length in lengths:
            tasks = [(length, s) for s in range(g.n - length + 1)]
            for result in pool.map(_worker_first, tasks):
                if result is not None:
                    return IsometricCycle(result)
            logger.debug(f"equator: no isometric {length}-cycle")
        return None
    finally:
        pool.shutdown(wait=True, cancel_futures=True)


# ============================================
# Constructive re-routing through a vertex
# ============================================

def _geodesic(g: Graph, dm: DistanceMatrix, source: int, target: int) -> List[int]:
    """source .. target, stepping to the smallest neighbour one hop closer."""
    rows = dm.rows
    path = [source]
    current = source
    while current != target:
        remaining = rows[current][target]
        current = min(w for w in g.adjacency[current] if rows[w][target] == remaining - 1)
        path.append(current)
    return path


def isometric_cycle_through(
    g: Graph,
    base: IsometricCycle,
    v: int,
    partition: "EquatorPartition",
    dm: Optional[DistanceMatrix] = None,
) -> IsometricCycle:
    """
    An isometric q-cycle containing v, built from `base` by replacing the arc
    u_{i-k}..u_{i+k} with a geodesic through v, where v lies in part L_i.

    The result keeps the base indexing: position j of the new cycle still
    lies in part L_j.

    Raises:
        NotEquatorial: v is not at distance k from both arc ends, or the
            re-routed cycle is not isometric
    """
    if v in base:
        return base
    dm = dm or all_pairs_distances(g)
    q = base.length
    k = partition.k
    i = partition.part_of(v)
    a, b = base[i - k], base[i + k]
    if dm(a, v) != k or dm(v, b) != k:
        raise NotEquatorial(
            f"vertex {v} in part {i} is not at distance {k} from both {a} and {b}"
        )

    detour = _geodesic(g, dm, a, v) + _geodesic(g, dm, v, b)[1:]
    vertices = list(base.vertices)
    for s, w in enumerate(detour):
        vertices[(i - k + s) % q] = w

    try:
        ok = is_isometric_cycle(g, dm, vertices)
    except NotACycle as e:
        raise NotEquatorial(f"re-routing base cycle through {v} breaks the cycle: {e}") from e
    if not ok:
        raise NotEquatorial(f"re-routed cycle through {v} is not isometric")
    return IsometricCycle(tuple(vertices))


__all__ = [
    "IsometryError",
    "NotACycle",
    "NotEquatorial",
    "CapBelowGirth",
    "IsometricCycle",
    "EquatorResult",
    "cycle_metric",
    "is_isometric_cycle",
    "iter_isometric_cycles",
    "find_isometric_cycle",
    "find_girth_cycle",
    "equator",
    "isometric_cycle_through",
]


if __name__ == "__main__":
    import networkx as nx

    petersen = Graph.from_networkx(nx.petersen_graph())
    print("Petersen:", equator(petersen).to_dict())
