"""
Standalone version - command orchestration
One function per subcommand: analyze / construct / verify / search / report
"""

from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from rich.panel import Panel
from rich.table import Table

from core.analysis import analyze_graph
from core.bounds import BoundsError, c4free_bound_check, verify_k_degree
from core.catalog import CatalogError, catalog_entries, girth5_table
from core.config import OUTPUT_DIR, STRUCTURE_CYCLE_BUDGET, validate_config
from core.constructions import (
    ConstructionError,
    ConstructionSpec,
    build_construction,
    construction_metadata,
    expected_invariants,
)
from core.finite_geometry import FieldError, brown_properties
from core.graph import Graph, GraphError, degree_profile, girth, is_c4_free
from core.graph_io import read_graph, write_edge_list, write_graph6
from core.isometry import IsometryError, equator, iter_isometric_cycles
from core.logger import console, get_logger
from core.search import SearchError, SearchSpec, min_order_search
from core.structure import (
    StructureError,
    equatorial_profile,
    characterize,
    induced_partition,
    partition_uniqueness,
    retraction_check,
    verify_structure,
)

logger = get_logger(__name__)

THEOREMS = (
    "lower-bound",
    "c4-lower-bound",
    "k-degree",
    "structure",
    "uniqueness",
    "retraction",
    "characterize",
    "brown-properties",
)

# Library errors a command reports instead of raising
EXPECTED_ERRORS = (
    GraphError,
    IsometryError,
    BoundsError,
    FieldError,
    CatalogError,
    ConstructionError,
    StructureError,
    SearchError,
    FileNotFoundError,
)


class PipelineError(Exception):
    """Base class for command-level errors"""
    pass


class UnknownTheorem(PipelineError):
    """verify was given a theorem id it does not know"""
    pass


def _failure(result: Dict[str, Any], e: Exception) -> Dict[str, Any]:
    result["success"] = False
    result["error"] = f"{type(e).__name__}: {e}"
    logger.debug(f"command failed: {result['error']}")
    return result


def _config_errors() -> Optional[str]:
    validation = validate_config()
    for warning in validation["warnings"]:
        logger.warning(warning)
    if not validation["valid"]:
        return "configuration invalid: " + "; ".join(validation["errors"])
    return None


# ============================================
# analyze
# ============================================

def run_analyze(
    path: str,
    cap: Optional[int] = None,
    threads: Optional[int] = None,
    with_partition: bool = False,
) -> Dict[str, Any]:
    """
    Analyse one graph file.

    Returns:
        {"success", "path", "report", "error"}; never raises for bad input
    """
    result: Dict[str, Any] = {"success": False, "path": path, "report": None, "error": None}
    error = _config_errors()
    if error:
        result["error"] = error
        return result
    try:
        g = read_graph(path)
        report = analyze_graph(g, cap=cap, threads=threads, with_partition=with_partition)
        result["report"] = report.to_dict()
        result["success"] = True
    except EXPECTED_ERRORS as e:
        return _failure(result, e)
    return result


def render_analyze(result: Dict[str, Any]) -> None:
    report = result["report"]
    table = Table(title=f"📊 {result['path']}", show_header=True, header_style="bold magenta")
    table.add_column("Invariant", style="cyan", width=18)
    table.add_column("Value", style="green")
    for key in ("n", "m", "delta", "max_degree", "is_regular", "connected", "g", "d", "r", "q", "equatorial"):
        table.add_row(key, str(report[key]))
    if report["search_capped"]:
        table.add_row("search_capped", "[yellow]True (q is a lower bound)[/yellow]")
    if report["witness"]:
        table.add_row("witness", " ".join(map(str, report["witness"])))
    bound = report["bound"]
    if bound:
        verdict = "tight" if bound["tight"] else ("satisfied" if bound["satisfied"] else "violated")
        regime = "" if bound["regime_ok"] else " [yellow](outside q > 6k+3)[/yellow]"
        table.add_row("n·g vs q·M", f"{report['n'] * bound['g']} vs {bound['lower_bound_numerator']}: {verdict}{regime}")
    if report["partition_sizes"]:
        table.add_row("part sizes", " ".join(map(str, report["partition_sizes"])))
    console.print(table)
    for note in report["notes"]:
        console.print(f"[dim]• {note}[/dim]")


# ============================================
# construct
# ============================================

def _file_stem(spec: ConstructionSpec) -> str:
    parts = [spec.family]
    for name in ("delta", "g", "t", "j", "q"):
        value = getattr(spec, name)
        if value is not None:
            parts.append(f"{name}{value}")
    if spec.sizes:
        parts.append("s" + "-".join(map(str, spec.sizes)))
    if spec.family in ("splice", "catalog") and spec.seed != "moore":
        parts.append(spec.seed)
    return "_".join(parts)


def _actual_invariants(g: Graph, cap: Optional[int], threads: Optional[int]) -> Dict[str, Optional[int]]:
    gi = girth(g)
    return {
        "n": g.n,
        "delta": degree_profile(g).min_degree,
        "g": None if gi == float("inf") else int(gi),
        "q": equator(g, cap=cap, threads=threads).q,
    }


def run_construct(
    spec: ConstructionSpec,
    output_dir: Optional[Path] = None,
    verify: bool = False,
    input_path: Optional[str] = None,
    cap: Optional[int] = None,
    threads: Optional[int] = None,
) -> Dict[str, Any]:
    """
    Build a construction and write it as an edge list (with a provenance
    header) and as graph6.

    With verify=True the predicted invariants are recomputed on the built
    graph; any disagreement fails the command.

    Returns:
        {"success", "spec", "expected", "actual", "files", "error"}
    """
    result: Dict[str, Any] = {
        "success": False,
        "spec": None,
        "expected": None,
        "actual": None,
        "files": {},
        "error": None,
    }
    try:
        result["spec"] = spec.to_dict()
        base = read_graph(input_path) if input_path else None
        g = build_construction(spec, base=base)
        expected = expected_invariants(spec, base=base)
        result["expected"] = expected

        out = Path(output_dir) if output_dir else OUTPUT_DIR
        stem = _file_stem(spec)
        edges_path = write_edge_list(g, out / f"{stem}.txt", construction_metadata(spec))
        g6_path = write_graph6(g, out / f"{stem}.g6")
        result["files"] = {"edges": str(edges_path), "graph6": str(g6_path)}
        logger.info(f"construct: {spec.family} -> n={g.n} m={g.m} at {edges_path}")

        if verify:
            actual = _actual_invariants(g, cap, threads)
            result["actual"] = actual
            mismatches = [
                f"{key}: expected {value}, got {actual[key]}"
                for key, value in expected.items()
                if value is not None and actual[key] != value
            ]
            if mismatches:
                result["error"] = "invariants disagree with the construction formulas: " + "; ".join(mismatches)
                return result
        result["success"] = True
    except EXPECTED_ERRORS as e:
        return _failure(result, e)
    return result


def render_construct(result: Dict[str, Any]) -> None:
    table = Table(title=f"🔧 {result['spec']['family']}", show_header=True, header_style="bold magenta")
    table.add_column("Invariant", style="cyan")
    table.add_column("Expected", style="yellow")
    table.add_column("Actual", style="green")
    actual = result["actual"] or {}
    for key, value in result["expected"].items():
        table.add_row(key, "-" if value is None else str(value), str(actual.get(key, "-")))
    console.print(table)
    for kind, path in result["files"].items():
        console.print(f"[green]✅ {kind}: {path}[/green]")


# ============================================
# verify
# ============================================

def _verify_lower_bound(g: Graph, threads: Optional[int], cap: Optional[int]) -> Dict[str, Any]:
    profile = equatorial_profile(g, cap=cap, threads=threads)
    if profile.bound is None:
        return {"passed": True, "applies": False, "detail": "forest or minimum degree below 2"}
    bound = profile.bound
    # outside q > 6k+3 the inequality is reported but not binding
    passed = bound.satisfied or not bound.regime_ok
    return {"passed": passed, "applies": bound.regime_ok, "bound": bound.to_dict()}


def _verify_c4_lower_bound(g: Graph, threads: Optional[int], cap: Optional[int]) -> Dict[str, Any]:
    if not is_c4_free(g):
        return {"passed": True, "applies": False, "detail": "graph contains a 4-cycle"}
    delta = degree_profile(g).min_degree
    q = equator(g, cap=cap, threads=threads).q
    bound = c4free_bound_check(g.n, delta, q)
    return {"passed": bound.satisfied or not bound.regime_ok, "applies": bound.regime_ok, "bound": bound.to_dict()}


def _partition_for(g: Graph, threads: Optional[int], cap: Optional[int]):
    profile = equatorial_profile(g, cap=cap, threads=threads)
    if profile.witness is None:
        raise StructureError("graph has no cycle, so no induced partition")
    return profile, induced_partition(g, profile.witness, strict=False, dm=profile.dm)


def _verify_one(theorem: str, g: Graph, threads: Optional[int], cap: Optional[int]) -> Dict[str, Any]:
    if theorem == "lower-bound":
        return _verify_lower_bound(g, threads, cap)
    if theorem == "c4-lower-bound":
        return _verify_c4_lower_bound(g, threads, cap)
    if theorem == "k-degree":
        return {"passed": verify_k_degree(g)}
    if theorem == "structure":
        profile, p = _partition_for(g, threads, cap)
        report = verify_structure(g, p, dm=profile.dm)
        return {"passed": report.passed, "report": report.to_dict()}
    if theorem == "uniqueness":
        profile, p = _partition_for(g, threads, cap)
        cycles = list(iter_isometric_cycles(g, p.q, profile.dm, limit=STRUCTURE_CYCLE_BUDGET))
        return {"passed": partition_uniqueness(g, cycles, profile.dm), "cycles_compared": len(cycles)}
    if theorem == "retraction":
        _, p = _partition_for(g, threads, cap)
        return {"passed": retraction_check(g, p)}
    if theorem == "characterize":
        found = characterize(g, threads=threads)
        return {"passed": found.accepted, "characterization": found.to_dict()}
    report = brown_properties(g)
    return {"passed": report.passed, "report": report.to_dict()}


def run_verify(
    theorem: str,
    paths: Sequence[str],
    threads: Optional[int] = None,
    cap: Optional[int] = None,
) -> Dict[str, Any]:
    """
    Check one theorem on each graph file.

    success=False means the check could not run (bad file, unknown
    theorem, graph outside the theorem's domain); passed=False means it
    ran and some clause failed.

    Returns:
        {"success", "theorem", "passed", "results", "error"}
    """
    result: Dict[str, Any] = {
        "success": False,
        "theorem": theorem,
        "passed": False,
        "results": [],
        "error": None,
    }
    try:
        if theorem not in THEOREMS:
            raise UnknownTheorem(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
        for path in paths:
            entry = _verify_one(theorem, read_graph(path), threads, cap)
            entry["path"] = path
            result["results"].append(entry)
        result["passed"] = all(entry["passed"] for entry in result["results"])
        result["success"] = True
    except (PipelineError,) + EXPECTED_ERRORS as e:
        return _failure(result, e)
    return result


def render_verify(result: Dict[str, Any]) -> None:
    for entry in result["results"]:
        mark = "[green]✅ pass[/green]" if entry["passed"] else "[red]❌ fail[/red]"
        console.print(f"\n[bold]{result['theorem']}[/bold] {entry['path']}: {mark}")
        if entry.get("applies") is False:
            console.print("[yellow]⚠️  outside the theorem's regime: reported, not binding[/yellow]")
        report = entry.get("report") or (entry.get("characterization") or {})
        clauses = report.get("clauses") or []
        if clauses:
            table = Table(show_header=True, header_style="bold magenta")
            table.add_column("Clause", style="cyan")
            table.add_column("Result")
            table.add_column("Detail", style="dim")
            for clause in clauses:
                table.add_row(
                    clause["clause_id"],
                    "✅" if clause["passed"] else "❌",
                    clause["detail"] or (str(clause["counterexample"]) if clause["counterexample"] else ""),
                )
            console.print(table)
        if "bound" in entry:
            b = entry["bound"]
            console.print(f"[dim]n·g = {b['n'] * b['g']}, q·M = {b['lower_bound_numerator']}, regime_ok = {b['regime_ok']}[/dim]")


# ============================================
# search
# ============================================

def run_search(
    spec: SearchSpec,
    threads: Optional[int] = None,
    output_dir: Optional[Path] = None,
    checkpoint: Optional[str] = None,
) -> Dict[str, Any]:
    """
    Exhaustive minimum-order search; witnesses are written as one graph6 file.

    Returns:
        {"success", "result", "files", "error"}
    """
    result: Dict[str, Any] = {"success": False, "result": None, "files": {}, "error": None}
    try:
        found = min_order_search(spec, threads=threads, checkpoint=checkpoint)
        result["result"] = found.to_dict()
        if found.witnesses:
            out = Path(output_dir) if output_dir else OUTPUT_DIR
            name = f"search_d{spec.delta_min}_g{spec.g}_q{spec.q}_n{found.min_order}.g6"
            result["files"] = {"witnesses": str(write_graph6(found.witnesses, out / name))}
        result["success"] = True
    except EXPECTED_ERRORS as e:
        return _failure(result, e)
    return result


def render_search(result: Dict[str, Any]) -> None:
    found = result["result"]
    spec = found["spec"]
    title = f"🔎 delta>={spec['delta_min']} g={spec['g']} q={spec['q']} n<={spec['n_max']}"
    if found["min_order"] is not None:
        body = (
            f"[green]min order {found['min_order']}[/green] with {len(found['witnesses'])} witness(es)\n"
            + "\n".join(found["witnesses"])
        )
    else:
        body = "[yellow]no witness up to n_max[/yellow]"
    body += f"\n\n[dim]orders {found['orders_searched']} · {found['nodes']} nodes · {found['wall_time_ms']} ms[/dim]"
    console.print(Panel.fit(body, title=title, border_style="cyan"))
    for kind, path in result["files"].items():
        console.print(f"[green]✅ {kind}: {path}[/green]")


# ============================================
# report
# ============================================

def run_report() -> Dict[str, Any]:
    """Moore bound vs cage order for girth 5, and the shipped catalog."""
    result: Dict[str, Any] = {"success": False, "girth5": [], "catalog": [], "error": None}
    try:
        result["girth5"] = girth5_table()
        result["catalog"] = [entry.to_dict() for entry in catalog_entries()]
        result["success"] = True
    except EXPECTED_ERRORS as e:
        return _failure(result, e)
    return result


def render_report(result: Dict[str, Any]) -> None:
    table = Table(title="Girth 5: Moore bound vs cage order", show_header=True, header_style="bold magenta")
    for column in ("delta", "M(delta,5)", "C(delta,5)", "seed"):
        table.add_column(column)
    for row in result["girth5"]:
        table.add_row(str(row["delta"]), str(row["moore"]), str(row["cage"]), row["name"])
    console.print(table)

    catalog = Table(title="Catalog", show_header=True, header_style="bold magenta")
    for column in ("name", "order", "delta", "g", "Moore"):
        catalog.add_column(column)
    for entry in result["catalog"]:
        catalog.add_row(entry["name"], str(entry["order"]), str(entry["delta"]), str(entry["g"]),
                        "✅" if entry["is_moore"] else "")
    console.print(catalog)


__all__ = [
    "THEOREMS",
    "PipelineError",
    "UnknownTheorem",
    "run_analyze",
    "render_analyze",
    "run_construct",
    "render_construct",
    "run_verify",
    "render_verify",
    "run_search",
    "render_search",
    "run_report",
    "render_report",
]
