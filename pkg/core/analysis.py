"""
Graph analysis
Bundles every invariant the workbench computes into one report
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .bounds import BoundReport
from .graph import Graph, diameter_and_radius, degree_profile
from .logger import get_logger
from .structure import NotAPartition, equatorial_profile, induced_partition

logger = get_logger(__name__)


@dataclass
class AnalysisReport:
    """
    equatorial is connected ∧ q > 6k+3 ∧ n·g = q·M(delta, g).
    girth / diameter / radius are None when infinite or undefined.
    """
    n: int
    m: int
    delta: int
    max_degree: int
    is_regular: bool
    degree_histogram: Dict[int, int]
    connected: bool
    girth: Optional[int]
    diameter: Optional[int]
    radius: Optional[int]
    q: int
    witness: Optional[List[int]]
    search_capped: bool
    bound: Optional[BoundReport]
    equatorial: bool
    partition_sizes: Optional[List[int]] = None
    partition_conflicts: Optional[List[int]] = None
    parts: Optional[List[List[int]]] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "max_degree": self.max_degree,
            "is_regular": self.is_regular,
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
            "connected": self.connected,
            "g": self.girth,
            "d": self.diameter,
            "r": self.radius,
            "q": self.q,
            "witness": self.witness,
            "search_capped": self.search_capped,
            "bound": self.bound.to_dict() if self.bound else None,
            "equatorial": self.equatorial,
            "partition_sizes": self.partition_sizes,
            "notes": self.notes,
        }
        if self.partition_conflicts:
            data["partition_conflicts"] = self.partition_conflicts
        if self.parts is not None:
            data["parts"] = self.parts
        return data


def analyze_graph(
    g: Graph,
    cap: Optional[int] = None,
    threads: Optional[int] = None,
    with_partition: bool = False,
) -> AnalysisReport:
    """
    Compute the full invariant report for one graph.

    Disconnected graphs are analysed (diameter/radius become None and a
    note is added) rather than rejected.

    Args:
        cap: ceiling for the equator search
        threads: equator worker processes
        with_partition: include the parts themselves, not only their sizes
    """
    profile = equatorial_profile(g, cap=cap, threads=threads)
    degrees = degree_profile(g)
    notes: List[str] = []

    diameter = radius = None
    if profile.connected:
        diameter, radius = diameter_and_radius(g, profile.dm)
    else:
        notes.append("graph is disconnected: diameter and radius undefined, not equatorial")

    gi = None if profile.girth == float("inf") else int(profile.girth)
    if gi is None:
        notes.append("graph is a forest: girth infinite, equator 0")

    sizes = conflicts = parts = None
    if profile.witness is not None and profile.bound is not None and profile.bound.regime_ok:
        try:
            p = induced_partition(g, profile.witness, strict=False, dm=profile.dm)
            sizes = list(p.sizes)
            conflicts = list(p.conflicts)
            if with_partition:
                parts = [sorted(part) for part in p.parts]
        except NotAPartition as e:
            notes.append(f"partition unavailable: {e}")

    logger.debug(f"analysis: n={g.n} m={g.m} girth={gi} q={profile.q} equatorial={profile.equatorial}")
    return AnalysisReport(
        n=g.n,
        m=g.m,
        delta=degrees.min_degree,
        max_degree=degrees.max_degree,
        is_regular=degrees.is_regular,
        degree_histogram=degrees.degree_histogram,
        connected=profile.connected,
        girth=gi,
        diameter=diameter,
        radius=radius,
        q=profile.q,
        witness=profile.witness.to_list() if profile.witness else None,
        search_capped=profile.search_capped,
        bound=profile.bound,
        equatorial=profile.equatorial,
        partition_sizes=sizes,
        partition_conflicts=conflicts,
        parts=parts,
        notes=notes,
    )


__all__ = ["AnalysisReport", "analyze_graph"]
