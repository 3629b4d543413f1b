"""
Exhaustive search
Smallest order of a graph with minimum degree >= delta, girth g and equator q,
by isomorph-free vertex-by-vertex generation at tiny orders
"""

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

import networkx as nx

from .bounds import disk_radius, moore_bound
from .config import EQUATOR_THREADS, SEARCH_MAX_N
from .graph import Graph, all_pairs_distances, build_graph, degree_profile, girth, is_connected, UNREACHABLE
from .graph_io import from_graph6, to_graph6
from .isometry import equator, is_isometric_cycle
from .logger import get_logger

logger = get_logger(__name__)

# Exhaustive generation stops being feasible past this order
HARD_MAX_N = 12


# ============================================
# Errors
# ============================================

class SearchError(Exception):
    """Base class for search errors"""
    pass


class SpecTooLarge(SearchError):
    """n_max exceeds the exhaustive regime"""
    pass


# ============================================
# Data types
# ============================================

@dataclass(frozen=True)
class SearchSpec:
    delta_min: int
    g: int
    q: int
    n_max: int
    require_regular: bool = False

    def validate(self) -> None:
        """
        Raises:
            SpecTooLarge: n_max above the exhaustive ceiling
            SearchError: inconsistent parameters
        """
        ceiling = min(HARD_MAX_N, SEARCH_MAX_N)
        if self.n_max > ceiling:
            raise SpecTooLarge(f"n_max={self.n_max} exceeds the exhaustive ceiling {ceiling}")
        if self.g < 3:
            raise SearchError(f"girth must be >= 3, got {self.g}")
        if self.q < self.g:
            raise SearchError(f"equator {self.q} cannot be below the girth {self.g}")
        if self.delta_min < 0 or self.n_max < 1:
            raise SearchError(f"invalid delta_min={self.delta_min} or n_max={self.n_max}")

    def lower_bound(self) -> int:
        """
        First order worth generating: a q-cycle needs q vertices, minimum
        degree delta needs delta+1, and girth g needs M(delta, g).
        """
        bound = max(self.q, self.delta_min + 1)
        if self.delta_min >= 2:
            bound = max(bound, moore_bound(self.delta_min, self.g))
        return bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "delta_min": self.delta_min,
            "g": self.g,
            "q": self.q,
            "n_max": self.n_max,
            "require_regular": self.require_regular,
        }


@dataclass
class SearchResult:
    """
    exhausted is True when every order up to n_max was generated without a
    witness; min_order is then None.
    """
    spec: SearchSpec
    min_order: Optional[int]
    witnesses: List[Graph]
    exhausted: bool
    nodes: int = 0
    wall_time_ms: int = 0
    orders_searched: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "spec": self.spec.to_dict(),
            "min_order": self.min_order,
            "witnesses": [to_graph6(w) for w in self.witnesses],
            "exhausted": self.exhausted,
            "nodes": self.nodes,
            "wall_time_ms": self.wall_time_ms,
            "orders_searched": self.orders_searched,
        }


# ============================================
# Isomorph-free generation
# ============================================

def _iso_key(g: Graph) -> Tuple[int, Tuple[int, ...], str]:
    h = g.to_networkx()
    return g.m, tuple(sorted(g.degrees)), nx.weisfeiler_lehman_graph_hash(h, iterations=3)


class _IsomorphFilter:
    """Keeps the first representative of every isomorphism class it sees."""

    def __init__(self):
        self._buckets: Dict[Tuple[int, Tuple[int, ...], str], List[nx.Graph]] = {}
        self.kept: List[Graph] = []

    def add(self, g: Graph) -> bool:
        key = _iso_key(g)
        h = g.to_networkx()
        bucket = self._buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            return False
        bucket.append(h)
        self.kept.append(g)
        return True


def _neighbourhoods(
    g: Graph, n: int, delta_min: int, girth_min: int
) -> Iterable[Tuple[int, ...]]:
    """
    Admissible neighbourhoods for the next vertex of a graph growing to n.

    A vertex whose degree can no longer reach delta_min without the new
    vertex is forced in; the new vertex needs enough room to reach
    delta_min; two chosen neighbours at distance < girth_min - 2 would
    close a short cycle.
    """
    k = g.n
    later = n - k - 1
    forced = [v for v in range(k) if g.degree(v) + later < delta_min]
    optional = [v for v in range(k) if g.degree(v) + later >= delta_min]
    rows = all_pairs_distances(g).rows if girth_min > 3 else None

    def spread(vertices: Tuple[int, ...]) -> bool:
        if rows is None:
            return True
        for a, b in combinations(vertices, 2):
            d = rows[a][b]
            if d != UNREACHABLE and d < girth_min - 2:
                return False
        return True

    if not spread(tuple(forced)):
        return
    low = max(0, delta_min - later - len(forced))
    for size in range(low, len(optional) + 1):
        for extra in combinations(optional, size):
            chosen = tuple(sorted(forced + list(extra)))
            if spread(chosen):
                yield chosen


def _extend(g: Graph, neighbourhood: Tuple[int, ...]) -> Graph:
    k = g.n
    return build_graph(list(g.edges) + [(v, k) for v in neighbourhood], k + 1)


def generate_graphs(
    n: int,
    delta_min: int = 0,
    girth_min: int = 3,
    connected: bool = True,
    start: Optional[List[Graph]] = None,
    on_level: Optional[Callable[[int, List[Graph]], None]] = None,
    counter: Optional[List[int]] = None,
) -> List[Graph]:
    """
    All graphs of order n with minimum degree >= delta_min and girth >=
    girth_min, one per isomorphism class.

    Every prefix of a valid graph is itself a graph with girth >= girth_min
    and degrees that can still be completed, so generating level by level
    from isomorph-free representatives of those prefixes is complete.

    Args:
        start: isomorph-free level to resume from (default: the single vertex)
        on_level: called with (order, level) after each finished level
        counter: one-element list accumulating the number of generated nodes
    """
    if n <= 0:
        return []
    level = start if start is not None else [build_graph([], 1)]
    counter = counter if counter is not None else [0]
    while level and level[0].n < n:
        seen = _IsomorphFilter()
        for g in level:
            for nbhd in _neighbourhoods(g, n, delta_min, girth_min):
                counter[0] += 1
                seen.add(_extend(g, nbhd))
        level = seen.kept
        logger.debug(f"generate: order {level[0].n if level else '-'} -> {len(level)} classes")
        if on_level is not None and level:
            on_level(level[0].n, level)

    result = [g for g in level if min(g.degrees, default=0) >= delta_min]
    if connected:
        result = [g for g in result if is_connected(g)]
    return result


# ============================================
# Filtering
# ============================================

def _equator_of(g: Graph) -> int:
    return equator(g, threads=1).q


def _structural_match(spec: SearchSpec, g: Graph) -> bool:
    if not is_connected(g) or girth(g) != spec.g:
        return False
    profile = degree_profile(g)
    if profile.min_degree < spec.delta_min:
        return False
    return profile.is_regular or not spec.require_regular


def _verify_witness(spec: SearchSpec, g: Graph) -> None:
    """Recompute every invariant of a witness from scratch."""
    dm = all_pairs_distances(g)
    result = equator(g, threads=1, dm=dm)
    ok = (
        _structural_match(spec, g)
        and result.q == spec.q
        and result.witness is not None
        and is_isometric_cycle(g, dm, result.witness)
    )
    if not ok:
        raise SearchError(f"witness {to_graph6(g)} does not re-verify against {spec.to_dict()}")


# ============================================
# Checkpoints
# ============================================

def _load_checkpoint(path: Path, spec: SearchSpec) -> Dict[str, Any]:
    if not path.exists():
        return {}
    state = json.loads(path.read_text(encoding="utf-8"))
    if state.get("spec") != spec.to_dict():
        logger.warning(f"checkpoint {path} belongs to another search, ignoring it")
        return {}
    return state


def _save_checkpoint(path: Path, state: Dict[str, Any]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(state, indent=2), encoding="utf-8")
    tmp.replace(path)


# ============================================
# Search
# ============================================

def min_order_search(
    spec: SearchSpec,
    threads: Optional[int] = None,
    checkpoint: Optional[Union[str, Path]] = None,
) -> SearchResult:
    """
    Smallest n <= n_max admitting a graph with the requested (delta, g, q).

    Orders run from the lower bound upward. At each order the isomorph-free
    candidates are filtered by connectivity, girth, degrees and finally the
    equator, which is the expensive step and runs over a process pool when
    threads > 1. The first order with a witness stops the search.

    Args:
        threads: worker processes for the equator filter (default EQUATOR_THREADS)
        checkpoint: JSON file recording finished orders and the generation
            frontier, so an interrupted run resumes where it stopped

    Raises:
        SpecTooLarge, SearchError
    """
    spec.validate()
    started = time.perf_counter()
    workers = threads if threads is not None else EQUATOR_THREADS
    path = Path(checkpoint) if checkpoint else None
    state = _load_checkpoint(path, spec) if path else {}
    completed = set(state.get("completed", []))
    counter = [int(state.get("nodes", 0))]
    searched: List[int] = []

    def record(order: int, frontier_order: Optional[int] = None, frontier: Optional[List[Graph]] = None) -> None:
        if path is None:
            return
        snapshot = {
            "spec": spec.to_dict(),
            "completed": sorted(completed),
            "nodes": counter[0],
        }
        if frontier is not None:
            snapshot["target"] = order
            snapshot["frontier_order"] = frontier_order
            snapshot["frontier"] = [to_graph6(h) for h in frontier]
        _save_checkpoint(path, snapshot)

    lower = spec.lower_bound()
    logger.info(f"search: delta>={spec.delta_min} g={spec.g} q={spec.q} orders {lower}..{spec.n_max}")

    for n in range(lower, spec.n_max + 1):
        if n in completed:
            logger.debug(f"search: order {n} already done in checkpoint")
            continue
        start = None
        if state.get("target") == n and state.get("frontier"):
            start = [from_graph6(s) for s in state["frontier"]]
            logger.info(f"search: resuming order {n} from {len(start)} graphs of order {state['frontier_order']}")

        candidates = generate_graphs(
            n,
            delta_min=spec.delta_min,
            girth_min=spec.g,
            connected=True,
            start=start,
            on_level=lambda order, level, n=n: record(n, order, level),
            counter=counter,
        )
        candidates = [g for g in candidates if _structural_match(spec, g)]
        equators = _equators(candidates, workers)
        witnesses = [g for g, q in zip(candidates, equators) if q == spec.q]
        searched.append(n)
        logger.debug(f"search: order {n}: {len(candidates)} candidates, {len(witnesses)} witnesses")

        if witnesses:
            for w in witnesses:
                _verify_witness(spec, w)
            witnesses.sort(key=to_graph6)
            _check_lower_bound(spec, n)
            # only witness-free orders count as completed
            record(n)
            return SearchResult(
                spec=spec,
                min_order=n,
                witnesses=witnesses,
                exhausted=False,
                nodes=counter[0],
                wall_time_ms=int((time.perf_counter() - started) * 1000),
                orders_searched=searched,
            )
        completed.add(n)
        state = {}
        record(n)

    return SearchResult(
        spec=spec,
        min_order=None,
        witnesses=[],
        exhausted=True,
        nodes=counter[0],
        wall_time_ms=int((time.perf_counter() - started) * 1000),
        orders_searched=searched,
    )


def _equators(candidates: List[Graph], workers: int) -> List[int]:
    if workers <= 1 or len(candidates) < 2:
        return [_equator_of(g) for g in candidates]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_equator_of, candidates, chunksize=8))


def _check_lower_bound(spec: SearchSpec, n: int) -> None:
    """In the q > 6k+3 regime any witness must respect n·g >= q·M."""
    if spec.delta_min < 2:
        return
    k = disk_radius(spec.g)
    if spec.q <= 6 * k + 3:
        return
    if n * spec.g < spec.q * moore_bound(spec.delta_min, spec.g):
        raise SearchError(f"order {n} violates the equatorial lower bound for {spec.to_dict()}")


__all__ = [
    "HARD_MAX_N",
    "SearchError",
    "SpecTooLarge",
    "SearchSpec",
    "SearchResult",
    "generate_graphs",
    "min_order_search",
]


if __name__ == "__main__":
    from .logger import console

    result = min_order_search(SearchSpec(delta_min=3, g=3, q=5, n_max=7))
    console.print(result.to_dict())
