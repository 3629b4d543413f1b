"""
Equatorial structure
Induced partitions L_0..L_{q-1}, the structure-theorem verifier, partition
uniqueness, the retraction onto the looped q-cycle, and the low-girth
characterisations
"""

import random
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from .bounds import BoundReport, disk_radius, equatorial_bound_check, moore_bound
from .catalog import petersen_graph
from .clauses import ClauseReport
from .config import RANDOM_SEED, STRUCTURE_CYCLE_BUDGET, STRUCTURE_PAIR_SAMPLES
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    are_isomorphic,
    degree_profile,
    disk,
    girth,
)
from .isometry import (
    IsometricCycle,
    NotACycle,
    NotEquatorial,
    equator,
    is_isometric_cycle,
    isometric_cycle_through,
    iter_isometric_cycles,
)
from .logger import get_logger

logger = get_logger(__name__)


# ============================================
# Errors
# ============================================

class StructureError(Exception):
    """Base class for structure-theory errors"""
    pass


class NotAPartition(StructureError):
    """The disk intersections do not partition the vertex set"""
    pass


class OutOfRegime(NotAPartition):
    """q <= 6k+3: the induced partition is not defined"""
    pass


class OutOfCharacterizedRange(StructureError):
    """No characterisation exists for this girth/degree"""
    pass


# ============================================
# Equatorial profile
# ============================================

@dataclass(frozen=True)
class EquatorialProfile:
    """
    The invariants deciding equatoriality: connected, q > 6k+3, and
    n·g = q·M(delta, g).
    """
    n: int
    delta: int
    girth: Union[int, float]
    q: int
    witness: Optional[IsometricCycle]
    connected: bool
    bound: Optional[BoundReport]
    dm: DistanceMatrix = field(repr=False, compare=False)
    search_capped: bool = False

    @property
    def equatorial(self) -> bool:
        return (
            self.connected
            and self.bound is not None
            and self.bound.regime_ok
            and self.bound.tight
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "delta": self.delta,
            "girth": None if self.girth == float("inf") else int(self.girth),
            "q": self.q,
            "connected": self.connected,
            "equatorial": self.equatorial,
            "bound": self.bound.to_dict() if self.bound else None,
        }


def equatorial_profile(
    g: Graph,
    cap: Optional[int] = None,
    threads: Optional[int] = None,
    dm: Optional[DistanceMatrix] = None,
) -> EquatorialProfile:
    dm = dm or all_pairs_distances(g)
    gi = girth(g)
    delta = degree_profile(g).min_degree
    result = equator(g, cap=cap, threads=threads, dm=dm)
    bound = None
    if gi != float("inf") and delta >= 2:
        bound = equatorial_bound_check(g.n, delta, int(gi), result.q)
    return EquatorialProfile(
        n=g.n,
        delta=delta,
        girth=gi,
        q=result.q,
        witness=result.witness,
        connected=dm.is_connected,
        bound=bound,
        dm=dm,
        search_capped=result.search_capped,
    )


def is_equatorial(g: Graph, threads: Optional[int] = None) -> bool:
    return equatorial_profile(g, threads=threads).equatorial


# ============================================
# Partition
# ============================================

@dataclass(frozen=True)
class EquatorPartition:
    """
    Parts L_i = D_k(u_{i-k}) ∩ D_k(u_{i+k}) for the base cycle u_0..u_{q-1}.
    conflicts lists vertices in zero or several parts (only ever non-empty
    for partitions built with strict=False).
    """
    q: int
    k: int
    girth: int
    parts: Tuple[FrozenSet[int], ...]
    base_cycle: IsometricCycle
    conflicts: Tuple[int, ...] = ()

    @cached_property
    def index(self) -> Dict[int, int]:
        """vertex -> part number (first part when a vertex sits in several)."""
        mapping: Dict[int, int] = {}
        for i, part in enumerate(self.parts):
            for v in part:
                mapping.setdefault(v, i)
        return mapping

    def part_of(self, v: int) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise NotAPartition(f"vertex {v} lies in no part") from None

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @property
    def is_partition(self) -> bool:
        return not self.conflicts

    def part(self, i: int) -> FrozenSet[int]:
        return self.parts[i % self.q]

    def window(self, start: int, length: int) -> FrozenSet[int]:
        """L_start ∪ ... ∪ L_{start+length-1}, indices mod q."""
        out: set = set()
        for s in range(length):
            out |= self.part(start + s)
        return frozenset(out)

    def set_family(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(self.parts)

    def canonical(self) -> "EquatorPartition":
        """Rotation/reflection of the labelling with the lexicographically least part sequence."""
        q = self.q
        best = None
        for shift in range(q):
            for step in (1, -1):
                order = [(shift + step * i) % q for i in range(q)]
                key = tuple(tuple(sorted(self.parts[j])) for j in order)
                if best is None or key < best[0]:
                    best = (key, order)
        order = best[1]
        return EquatorPartition(
            q=q,
            k=self.k,
            girth=self.girth,
            parts=tuple(self.parts[j] for j in order),
            base_cycle=IsometricCycle(tuple(self.base_cycle.vertices[j] for j in order)),
            conflicts=self.conflicts,
        )

    def to_dict(self, with_parts: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "q": self.q,
            "k": self.k,
            "girth": self.girth,
            "sizes": list(self.sizes),
            "base_cycle": self.base_cycle.to_list(),
            "conflicts": list(self.conflicts),
        }
        if with_parts:
            data["parts"] = [sorted(p) for p in self.parts]
        return data


def induced_partition(
    g: Graph,
    c: Union[IsometricCycle, Sequence[int]],
    strict: bool = True,
    dm: Optional[DistanceMatrix] = None,
) -> EquatorPartition:
    """
    Partition induced by an isometric q-cycle.

    Args:
        strict: raise when the parts fail to partition V; otherwise the
            offending vertices are recorded in `conflicts`

    Raises:
        OutOfRegime: q <= 6k+3
        NotAPartition: some vertex in zero or several parts (strict mode),
            or c is not an isometric cycle
    """
    cycle = c if isinstance(c, IsometricCycle) else IsometricCycle(tuple(c))
    gi = girth(g)
    if gi == float("inf"):
        raise NotAPartition("a forest has no isometric cycle")
    gi = int(gi)
    k = disk_radius(gi)
    q = cycle.length
    if q <= 6 * k + 3:
        raise OutOfRegime(f"q={q} <= 6k+3={6 * k + 3}: the induced partition is undefined")

    dm = dm or all_pairs_distances(g)
    try:
        certified = is_isometric_cycle(g, dm, cycle.vertices)
    except NotACycle as e:
        raise NotAPartition(f"base is not a cycle: {e}") from e
    if not certified:
        raise NotAPartition("base cycle is not isometric")

    disks = [disk(g, u, k, dm) for u in cycle.vertices]
    parts = tuple(disks[(i - k) % q] & disks[(i + k) % q] for i in range(q))

    counts = [0] * g.n
    for part in parts:
        for v in part:
            counts[v] += 1
    conflicts = tuple(v for v in range(g.n) if counts[v] != 1)
    if conflicts and strict:
        raise NotAPartition(
            f"{len(conflicts)} vertices are in zero or several parts, e.g. vertex {conflicts[0]} "
            f"in {counts[conflicts[0]]} parts"
        )
    logger.debug(f"induced partition: q={q} sizes={[len(p) for p in parts]}")
    return EquatorPartition(q=q, k=k, girth=gi, parts=parts, base_cycle=cycle, conflicts=conflicts)


# ============================================
# Structure theorem
# ============================================

class StructureReport(ClauseReport):
    """One clause per structure property, plus regularity and disk counting."""
    pass


def _meets_each_part_once(p: EquatorPartition, cycle: IsometricCycle) -> bool:
    hits = [0] * p.q
    for v in cycle:
        i = p.index.get(v)
        if i is None:
            return False
        hits[i] += 1
    return all(h == 1 for h in hits)


def _interval(indices: List[int], q: int) -> bool:
    """True iff the residues form one cyclic interval."""
    if not indices or len(indices) == q:
        return True
    present = set(indices)
    starts = [i for i in present if (i - 1) % q not in present]
    return len(starts) == 1


def verify_structure(
    g: Graph,
    p: EquatorPartition,
    dm: Optional[DistanceMatrix] = None,
    cycle_budget: Optional[int] = None,
    pair_samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> StructureReport:
    """
    Check every clause of the structure theorem against a partition.

    Failures are report entries, never exceptions.

    Args:
        cycle_budget: isometric q-cycles enumerated through each vertex of
            the base cycle's first part
            (default STRUCTURE_CYCLE_BUDGET; None checks every cycle)
        pair_samples: (v, w) pairs per part for the disk-intersection clause
        seed: random seed for the sampled pairs

    Returns:
        StructureReport with clauses partition, base-cycle, regular,
        closed-neighborhood, neighbors-both-sides, all-on-isocycles,
        one-vertex-per-part, disk-intersection, periodic-sizes, window-sums,
        disk-counting, disk-in-interval
    """
    dm = dm or all_pairs_distances(g)
    budget = cycle_budget if cycle_budget is not None else STRUCTURE_CYCLE_BUDGET
    samples = pair_samples if pair_samples is not None else STRUCTURE_PAIR_SAMPLES
    rng = random.Random(RANDOM_SEED if seed is None else seed)

    q, k, gi = p.q, p.k, p.girth
    index = p.index
    profile = degree_profile(g)
    delta = profile.min_degree
    report = StructureReport(subject="structure")
    report.info.update({"q": q, "k": k, "girth": gi, "delta": delta, "sizes": list(p.sizes)})

    # ---- partition / base cycle ----
    report.add(
        "partition",
        p.is_partition,
        counterexample=list(p.conflicts[:1]) or None,
        detail=f"{len(p.conflicts)} vertices in zero or several parts",
    )
    off_base = [u for i, u in enumerate(p.base_cycle) if index.get(u) != i or u not in p.parts[i]]
    report.add("base-cycle", not off_base, counterexample=off_base[:1] or None,
               detail="u_i lies in L_i")

    # ---- regularity ----
    heavy = [v for v in range(g.n) if g.degrees[v] != delta]
    report.add("regular", profile.is_regular, counterexample=heavy[:1] or None,
               detail=f"degrees {profile.min_degree}..{profile.max_degree}")

    # ---- neighbourhoods ----
    far_edge = None
    lonely = None
    for v in range(g.n):
        i = index.get(v)
        if i is None:
            continue
        nbr_parts = {index.get(w) for w in g.adjacency[v]}
        if far_edge is None:
            for w in g.adjacency[v]:
                j = index.get(w)
                if j is None or (j - i) % q not in (0, 1, q - 1):
                    far_edge = [v, w]
                    break
        if lonely is None and not ({(i - 1) % q, (i + 1) % q} <= nbr_parts):
            lonely = [v]
    report.add("closed-neighborhood", far_edge is None, counterexample=far_edge,
               detail="N[u] within L_{i-1} ∪ L_i ∪ L_{i+1}")
    report.add("neighbors-both-sides", lonely is None, counterexample=lonely,
               detail="u in L_i has neighbours in L_{i-1} and L_{i+1}")

    # ---- every vertex on an isometric q-cycle ----
    through_cycles: List[IsometricCycle] = []
    stranded = None
    for v in range(g.n):
        if v not in index:
            stranded = stranded or [v]
            continue
        try:
            through_cycles.append(isometric_cycle_through(g, p.base_cycle, v, p, dm))
        except NotEquatorial as e:
            logger.debug(f"no isometric {q}-cycle through {v}: {e}")
            stranded = stranded or [v]
    report.add("all-on-isocycles", stranded is None, counterexample=stranded,
               detail=f"{len(through_cycles)} of {g.n} vertices re-routed")

    # ---- one vertex per part ----
    checked = list(through_cycles)
    sampled = False
    for x in sorted(p.parts[0]):
        seeded = list(iter_isometric_cycles(g, q, dm, through=x, limit=budget))
        sampled = sampled or (budget is not None and len(seeded) >= budget)
        checked.extend(seeded)
    crossing = next((c for c in checked if not _meets_each_part_once(p, c)), None)
    report.add(
        "one-vertex-per-part",
        crossing is None,
        counterexample=crossing.to_list() if crossing else None,
        detail=(
            f"{len(checked)} isometric {q}-cycles checked"
            + (f", sampled (budget {budget} per seed)" if sampled else ", exhaustive")
        ),
    )
    report.info["cycles_checked"] = len(checked)
    report.info["cycles_sampled"] = sampled

    # ---- disk intersection L_i = D_k(v) ∩ D_k(w) ----
    mismatch = None
    for i in range(q):
        left, right = sorted(p.part(i - k)), sorted(p.part(i + k))
        if not left or not right:
            mismatch = mismatch or [i]
            continue
        pairs = [(rng.choice(left), rng.choice(right)) for _ in range(samples)]
        for v, w in pairs:
            if disk(g, v, k, dm) & disk(g, w, k, dm) != p.part(i):
                mismatch = mismatch or [v, w]
                break
    report.add("disk-intersection", mismatch is None, counterexample=mismatch,
               detail=f"{samples} sampled pairs per part")

    # ---- part sizes ----
    sizes = p.sizes
    aperiodic = [i for i in range(q) if sizes[i] != sizes[(i + gi) % q]]
    report.add("periodic-sizes", not aperiodic, counterexample=None,
               detail=f"|L_j| = |L_(j+{gi})|" + (f", fails at j={aperiodic[0]}" if aperiodic else ""))

    moore = moore_bound(delta, gi) if delta >= 2 else None
    sums = [sum(sizes[(j + s) % q] for s in range(gi)) for j in range(q)]
    bad_window = [j for j, s in enumerate(sums) if s != moore]
    report.add("window-sums", moore is not None and not bad_window,
               detail=f"{gi}-window sums {sorted(set(sums))}, M={moore}")

    # ---- disk counting / disks are part intervals ----
    base = p.base_cycle.vertices
    if gi % 2 == 1:
        disks = [disk(g, u, k, dm) for u in base]
        unions = [p.window(i - k, 2 * k + 1) for i in range(q)]
    else:
        disks = [disk(g, base[i], k, dm) | disk(g, base[(i + 1) % q], k, dm) for i in range(q)]
        unions = [p.window(i - k, 2 * k + 2) for i in range(q)]
    memberships: Dict[int, List[int]] = {v: [] for v in range(g.n)}
    for i, d in enumerate(disks):
        for v in d:
            memberships[v].append(i)
    miscounted = [
        v for v, idx in memberships.items()
        if len(idx) != gi or not _interval(idx, q)
    ]
    wrong_size = [i for i, d in enumerate(disks) if len(d) != moore]
    report.add(
        "disk-counting",
        not miscounted and not wrong_size,
        counterexample=miscounted[:1] or None,
        detail=f"disk sizes {sorted({len(d) for d in disks})}, every vertex in {gi} consecutive disks",
    )
    outside = [i for i in range(q) if disks[i] != unions[i]]
    report.add("disk-in-interval", not outside,
               counterexample=[base[outside[0]]] if outside else None,
               detail="each base disk equals its window of parts")
    return report


def partition_uniqueness(
    g: Graph,
    cycles: Sequence[IsometricCycle],
    dm: Optional[DistanceMatrix] = None,
) -> bool:
    """All cycles induce the same partition, compared as unordered set families."""
    if len(cycles) <= 1:
        return True
    dm = dm or all_pairs_distances(g)
    families = {induced_partition(g, c, strict=False, dm=dm).set_family() for c in cycles}
    return len(families) == 1


def retraction_check(g: Graph, p: EquatorPartition) -> bool:
    """
    v -> (part of v) is a homomorphism onto the q-cycle with loops, the
    identity on the base cycle, and hits every non-loop edge.
    """
    q = p.q
    index = p.index
    if not p.is_partition or len(index) != g.n:
        return False
    for u, v in g.edges:
        if (index[u] - index[v]) % q not in (0, 1, q - 1):
            return False
    if any(index[u] != i for i, u in enumerate(p.base_cycle)):
        return False
    covered = set()
    for u, v in g.edges:
        a, b = index[u], index[v]
        if (b - a) % q == 1:
            covered.add(a)
        elif (a - b) % q == 1:
            covered.add(b)
    return len(covered) == q


# ============================================
# Characterisations
# ============================================

@dataclass
class Characterization:
    accepted: bool
    family: str
    q: int
    delta: int
    girth: int
    pattern: Tuple[int, ...] = ()
    report: Optional[ClauseReport] = None
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "accepted": self.accepted,
            "family": self.family,
            "q": self.q,
            "delta": self.delta,
            "girth": self.girth,
            "pattern": list(self.pattern),
            "reason": self.reason,
            "clauses": self.report.to_dict()["clauses"] if self.report else [],
        }


def _petersen_minus_edge() -> Graph:
    pg = petersen_graph()
    return pg.without_edges([pg.edges[0]])


def _layered_edge_count(p: EquatorPartition, cliques: bool) -> int:
    s = p.sizes
    within = sum(comb(x, 2) for x in s) if cliques else 0
    return within + sum(s[i] * s[(i + 1) % p.q] for i in range(p.q))


def _check_layers(g: Graph, p: EquatorPartition, report: ClauseReport, cliques: bool) -> None:
    inside = next(
        ([a, b] for part in p.parts for a in part for b in part
         if a < b and g.has_edge(a, b) != cliques),
        None,
    )
    report.add("parts-cliques" if cliques else "parts-independent", inside is None,
               counterexample=inside)
    missing = next(
        ([a, b] for i in range(p.q) for a in p.parts[i] for b in p.part(i + 1)
         if not g.has_edge(a, b)),
        None,
    )
    report.add("consecutive-joins-complete", missing is None, counterexample=missing)
    expected = _layered_edge_count(p, cliques)
    report.add("no-other-edges", g.m == expected, detail=f"m={g.m}, layered count {expected}")


def characterize(g: Graph, threads: Optional[int] = None) -> Characterization:
    """
    Classify an equatorial graph of girth 3, girth 4, or girth 5 with
    maximum degree 3. Non-equatorial inputs in that range are rejected
    (accepted=False), not raised.

    Raises:
        OutOfCharacterizedRange: any other girth/degree
    """
    # local import: constructions depends on this module
    from .constructions import chain_copies

    gi = girth(g)
    profile = degree_profile(g)
    if gi == float("inf") or not (gi in (3, 4) or (gi == 5 and profile.max_degree == 3)):
        raise OutOfCharacterizedRange(
            f"no characterisation for girth {gi} with max degree {profile.max_degree}"
        )
    gi = int(gi)
    family = {3: "girth-3", 4: "girth-4", 5: "girth-5-cubic"}[gi]

    prof = equatorial_profile(g, threads=threads)
    delta = prof.delta
    report = ClauseReport(subject=f"characterize/{family}")
    report.add("equatorial", prof.equatorial, detail=str(prof.to_dict()["bound"]))
    if not prof.equatorial:
        return Characterization(False, family, prof.q, delta, gi, report=report,
                                reason="graph is not equatorial")

    p = induced_partition(g, prof.witness, strict=False, dm=prof.dm)
    report.add("partition", p.is_partition, counterexample=list(p.conflicts[:1]) or None)
    q, sizes = p.q, p.sizes
    pattern: Tuple[int, ...] = ()

    if gi == 3:
        _check_layers(g, p, report, cliques=True)
        if q % 3 == 0:
            pattern = tuple(sizes[:3])
            report.add("size-pattern",
                       all(sizes[i] == pattern[i % 3] for i in range(q)) and sum(pattern) == delta + 1,
                       detail=f"(n0,n1,n2)={pattern}, delta+1={delta + 1}")
        else:
            report.add("size-pattern",
                       delta % 3 == 2 and all(3 * s == delta + 1 for s in sizes),
                       detail=f"q={q} not divisible by 3: all parts (delta+1)/3")
            pattern = (sizes[0],)
    elif gi == 4:
        _check_layers(g, p, report, cliques=False)
        if q % 4 == 0:
            pattern = tuple(sizes[:4])
            report.add("size-pattern",
                       all(sizes[i] == pattern[i % 4] for i in range(q))
                       and pattern[0] + pattern[2] == delta == pattern[1] + pattern[3],
                       detail=f"(n0..n3)={pattern}, delta={delta}")
        else:
            report.add("size-pattern",
                       delta % 2 == 0 and all(2 * s == delta for s in sizes),
                       detail=f"q={q} not divisible by 4: all parts delta/2")
            pattern = (sizes[0],)
    else:
        report.add("q-divisible-by-5", q % 5 == 0, detail=f"q={q}")
        blocks_ok = False
        isomorphic = False
        if q % 5 == 0:
            start = next((i for i in range(q) if sizes[i] == 1 and sizes[(i + 4) % q] == 1), None)
            if start is not None:
                target = _petersen_minus_edge()
                blocks_ok = all(
                    are_isomorphic(g.induced_subgraph(p.window(start + 5 * t, 5))[0], target)
                    for t in range(q // 5)
                )
                pattern = tuple(sizes[(start + s) % q] for s in range(5))
            seed = petersen_graph()
            reference = chain_copies(seed, seed.edges[0], q // 5)
            isomorphic = are_isomorphic(g, reference)
        report.add("blocks-petersen-minus-edge", blocks_ok)
        report.add("isomorphic-to-splice-chain", isomorphic, detail=f"F(3,5,{q})")

    accepted = report.passed
    return Characterization(
        accepted=accepted,
        family=family,
        q=q,
        delta=delta,
        girth=gi,
        pattern=pattern,
        report=report,
        reason="" if accepted else ", ".join(c.clause_id for c in report.failed()),
    )


__all__ = [
    "StructureError",
    "NotAPartition",
    "OutOfRegime",
    "OutOfCharacterizedRange",
    "EquatorialProfile",
    "equatorial_profile",
    "is_equatorial",
    "EquatorPartition",
    "induced_partition",
    "StructureReport",
    "verify_structure",
    "partition_uniqueness",
    "retraction_check",
    "Characterization",
    "characterize",
]
