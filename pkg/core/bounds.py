"""
Order bounds
Moore bound, the equator-girth-degree lower bound, the C4-free bound and
k-degree checks. Every verdict uses exact integer arithmetic.
"""

from dataclasses import dataclass, asdict
from typing import Any, Dict, Optional, Tuple, Union

from .graph import DistanceMatrix, Graph, all_pairs_distances, degree_profile, disk, girth


class BoundsError(Exception):
    """Base class for bound evaluation errors"""
    pass


class InvalidParameters(BoundsError):
    """Degree/girth outside the range where the bound is defined"""
    pass


class Acyclic(BoundsError):
    """The graph has no cycle, so girth-based quantities are undefined"""
    pass


def disk_radius(g: int) -> int:
    """k = ceil(g/2) - 1."""
    return (g + 1) // 2 - 1


def moore_bound(delta: int, g: int) -> int:
    """
    M(delta, g) by summation, so delta = 2 needs no special case.

    odd g = 2k+1:  1 + sum_{i<k} delta (delta-1)^i
    even g = 2k+2: 2 sum_{i<=k} (delta-1)^i

    Raises:
        InvalidParameters: delta < 2 or g < 3
    """
    if delta < 2 or g < 3:
        raise InvalidParameters(f"Moore bound needs delta >= 2 and g >= 3, got ({delta}, {g})")
    k = disk_radius(g)
    if g % 2 == 1:
        return 1 + sum(delta * (delta - 1) ** i for i in range(k))
    return 2 * sum((delta - 1) ** i for i in range(k + 1))


def moore_bound_closed_form(delta: int, g: int) -> int:
    """Closed form of M(delta, g) for delta >= 3 (exact integer division)."""
    if delta < 3 or g < 3:
        raise InvalidParameters(f"closed form needs delta >= 3 and g >= 3, got ({delta}, {g})")
    k = disk_radius(g)
    if g % 2 == 1:
        return 1 + delta * ((delta - 1) ** k - 1) // (delta - 2)
    return 2 * ((delta - 1) ** (k + 1) - 1) // (delta - 2)


def c4free_coefficient(delta: int) -> int:
    """delta^2 - 2 floor(delta/2) + 1, the per-five-parts count of the C4-free bound."""
    return delta * delta - 2 * (delta // 2) + 1


@dataclass(frozen=True)
class BoundReport:
    """
    Outcome of n·g >= q·M (kind "moore") or 5n >= q·(delta^2 - 2 floor(delta/2) + 1)
    (kind "c4free"; g is then 5 and `moore` holds the coefficient).

    regime_ok=False means the theorem does not apply; the comparison is
    still reported.
    """
    n: int
    delta: int
    g: int
    k: int
    q: int
    moore: int
    lower_bound_numerator: int
    satisfied: bool
    tight: bool
    regime_ok: bool
    kind: str = "moore"

    @property
    def min_order(self) -> int:
        """Smallest n the inequality allows: ceil(q·M / g)."""
        return -(-self.lower_bound_numerator // self.g)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["min_order"] = self.min_order
        return data


def _report(n: int, delta: int, g: int, q: int, moore: int, kind: str, regime_ok: bool) -> BoundReport:
    numerator = q * moore
    lhs = n * g
    return BoundReport(
        n=n,
        delta=delta,
        g=g,
        k=disk_radius(g),
        q=q,
        moore=moore,
        lower_bound_numerator=numerator,
        satisfied=lhs >= numerator,
        tight=lhs == numerator,
        regime_ok=regime_ok,
        kind=kind,
    )


def equatorial_bound_check(n: int, delta: int, g: int, q: int) -> BoundReport:
    """
    Evaluate n >= (q/g)·M(delta, g) as n·g >= q·M.

    The regime q > 6k+3 is reported, not enforced (the even-girth case uses
    the same threshold).

    Example:
        >>> equatorial_bound_check(40, 3, 5, 20).tight
        True
    """
    k = disk_radius(g)
    return _report(n, delta, g, q, moore_bound(delta, g), "moore", q > 6 * k + 3)


def c4free_bound_check(n: int, delta: int, q: int) -> BoundReport:
    """5n >= q·(delta^2 - 2 floor(delta/2) + 1), regime q > 15."""
    return _report(n, delta, 5, q, c4free_coefficient(delta), "c4free", q > 15)


# ============================================
# k-degrees
# ============================================

KDegreeKey = Union[int, Tuple[int, int]]


def k_degrees(g: Graph, dm: Optional[DistanceMatrix] = None) -> Dict[KDegreeKey, int]:
    """
    |D_k(v)| for every vertex (odd girth) or |D_k(e)| for every edge (even girth).

    Raises:
        Acyclic: g is a forest
    """
    gi = girth(g)
    if gi == float("inf"):
        raise Acyclic("k-degree needs a graph with a cycle")
    gi = int(gi)
    k = disk_radius(gi)
    dm = dm or all_pairs_distances(g)
    if gi % 2 == 1:
        return {v: len(disk(g, v, k, dm)) for v in range(g.n)}
    return {(u, v): len(disk(g, u, k, dm) | disk(g, v, k, dm)) for u, v in g.edges}


def verify_k_degree(g: Graph, dm: Optional[DistanceMatrix] = None) -> bool:
    """
    Every k-disk (vertex disks for odd girth, edge disks for even) holds at
    least M(delta, g) vertices, delta the minimum degree. Trivially true
    when delta < 2.

    Raises:
        Acyclic: g is a forest
    """
    degrees = k_degrees(g, dm)
    delta = degree_profile(g).min_degree
    if delta < 2:
        return True
    bound = moore_bound(delta, int(girth(g)))
    return all(size >= bound for size in degrees.values())


__all__ = [
    "BoundsError",
    "InvalidParameters",
    "Acyclic",
    "BoundReport",
    "disk_radius",
    "moore_bound",
    "moore_bound_closed_form",
    "c4free_coefficient",
    "equatorial_bound_check",
    "c4free_bound_check",
    "k_degrees",
    "verify_k_degree",
]
