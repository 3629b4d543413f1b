#!/usr/bin/env python3
"""
Equator Workbench - standalone command-line tool
Program entry point

Usage:
    python integrations/standalone/main.py <command> [options]

Examples:
    # Full invariant report for one graph
    python integrations/standalone/main.py analyze petersen.g6

    # Build the 4-copy Petersen splice chain and check its invariants
    python integrations/standalone/main.py construct splice --delta 3 --girth 5 --j 4 --verify

    # Check the structure theorem on a constructed graph
    python integrations/standalone/main.py verify structure tmp/graphs/splice_delta3_g5_j4.txt

    # Smallest graph with minimum degree 3, girth 3 and equator 5
    python integrations/standalone/main.py search --delta 3 --girth 3 --equator 5 --max-n 7

    # Moore bound vs cage table
    python integrations/standalone/main.py report

Exit codes: 0 success/pass, 1 verification failed, 2 error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

# Add the project root to the Python path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from core import __version__
from core.config import DEBUG_MODE, EQUATOR_CAP, get_config_summary
from core.constructions import FAMILIES, ConstructionSpec
from core.logger import console, setup_logging
from core.search import SearchSpec
from integrations.standalone.pipeline import (
    THEOREMS,
    render_analyze,
    render_construct,
    render_report,
    render_search,
    render_verify,
    run_analyze,
    run_construct,
    run_report,
    run_search,
    run_verify,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def print_banner():
    """Print the welcome banner"""
    banner_text = f"""
[bold cyan]╔═══════════════════════════════════════════════════╗
║   Equator Workbench                               ║
║   Version: {__version__:<39}║
║   Longest isometric cycles & equatorial graphs    ║
╚═══════════════════════════════════════════════════╝[/bold cyan]
"""
    console.print(banner_text)


def _sizes(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"sizes must be comma-separated integers: {text!r}") from e


def _cap(text: str) -> int:
    value = int(text)
    if value < 3:
        raise argparse.ArgumentTypeError(f"cap must be at least 3 (the shortest cycle length): {value}")
    return value


def setup_argparse() -> argparse.ArgumentParser:
    """Build the command-line parser"""
    parser = argparse.ArgumentParser(
        description="Equator Workbench - longest isometric cycles, Moore-type bounds, equatorial graphs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s analyze graph.g6 --partition
  %(prog)s construct brown --t 4
  %(prog)s construct layered --girth 3 --sizes 1,3,1 --q 12 --verify
  %(prog)s verify lower-bound wheel.txt
  %(prog)s search --delta 3 --girth 5 --equator 5 --max-n 9
  %(prog)s report

See README.md for more
        """
    )

    # Global options
    parser.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes for equator searches (default EQUATOR_THREADS)")
    parser.add_argument("--show-config", action="store_true", help="show the current configuration")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    parser.add_argument("--version", "-v", action="version", version=f"Equator Workbench v{__version__}")

    sub = parser.add_subparsers(dest="command")

    analyze = sub.add_parser("analyze", help="full invariant report for a graph file")
    analyze.add_argument("path", help="edge-list or graph6 file")
    analyze.add_argument("--cap", type=_cap, default=EQUATOR_CAP, help="ceiling for the equator search")
    analyze.add_argument("--partition", action="store_true", help="include the induced partition parts")

    construct = sub.add_parser("construct", help="build a graph family and write it to disk")
    construct.add_argument("family", choices=FAMILIES)
    construct.add_argument("--delta", type=int)
    construct.add_argument("--girth", type=int, dest="g")
    construct.add_argument("--j", type=int)
    construct.add_argument("--q", type=int)
    construct.add_argument("--t", type=int)
    construct.add_argument("--seed", choices=("moore", "cage"), default="moore")
    construct.add_argument("--sizes", type=_sizes, default=[], help="layered part sizes, e.g. 1,3,1")
    construct.add_argument("--base-j", type=int, default=4, help="copies in the default multiply/quotient base")
    construct.add_argument("--input", dest="input_path", help="base graph for multiply / quotient")
    construct.add_argument("--output-dir", type=Path, default=None)
    construct.add_argument("--verify", action="store_true", help="recompute n, delta, g, q and compare")
    construct.add_argument("--cap", type=_cap, default=EQUATOR_CAP, help="ceiling for the --verify equator search")

    verify = sub.add_parser("verify", help="check a theorem on graph files")
    verify.add_argument("theorem", help=f"one of: {', '.join(THEOREMS)}")
    verify.add_argument("paths", nargs="+")
    verify.add_argument("--cap", type=_cap, default=EQUATOR_CAP)

    search = sub.add_parser("search", help="exhaustive minimum-order search")
    search.add_argument("--delta", type=int, required=True, help="minimum degree")
    search.add_argument("--girth", type=int, required=True)
    search.add_argument("--equator", type=int, required=True)
    search.add_argument("--max-n", type=int, required=True)
    search.add_argument("--regular", action="store_true", help="only regular graphs")
    search.add_argument("--checkpoint", help="JSON file to resume an interrupted search")
    search.add_argument("--output-dir", type=Path, default=None)

    sub.add_parser("report", help="Moore bound vs cage order table and the catalog")

    return parser


def _emit_json(result: Dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(result, indent=2) + "\n")


def _dispatch(args: argparse.Namespace) -> Dict[str, Any]:
    if args.command == "analyze":
        result = run_analyze(args.path, cap=args.cap, threads=args.threads, with_partition=args.partition)
        renderer = render_analyze
    elif args.command == "construct":
        spec = ConstructionSpec(
            family=args.family,
            delta=args.delta,
            g=args.g,
            j=args.j,
            q=args.q,
            t=args.t,
            seed=args.seed,
            sizes=tuple(args.sizes),
            base_j=args.base_j,
        )
        result = run_construct(spec, output_dir=args.output_dir, verify=args.verify,
                               input_path=args.input_path, cap=args.cap, threads=args.threads)
        renderer = render_construct
    elif args.command == "verify":
        result = run_verify(args.theorem, args.paths, threads=args.threads, cap=args.cap)
        renderer = render_verify
    elif args.command == "search":
        spec = SearchSpec(
            delta_min=args.delta,
            g=args.girth,
            q=args.equator,
            n_max=args.max_n,
            require_regular=args.regular,
        )
        result = run_search(spec, threads=args.threads, output_dir=args.output_dir,
                            checkpoint=args.checkpoint)
        renderer = render_search
    else:
        result = run_report()
        renderer = render_report

    if args.json:
        _emit_json(result)
    elif result["success"]:
        renderer(result)
    return result


def _exit_code(result: Dict[str, Any]) -> int:
    if not result["success"]:
        return EXIT_ERROR
    if result.get("passed") is False:
        return EXIT_FAILED
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    parser = setup_argparse()
    args = parser.parse_args(argv)

    if args.verbose:
        setup_logging(level=logging.DEBUG)

    if args.show_config:
        console.print("\n" + get_config_summary())
        return EXIT_OK

    if args.command is None:
        print_banner()
        parser.print_help()
        return EXIT_ERROR

    try:
        result = _dispatch(args)
    except KeyboardInterrupt:
        console.print("\n\n[yellow]⏹️  Interrupted[/yellow]\n")
        return 130

    except Exception as e:
        console.print(f"\n[bold red]❌ Unexpected error: {str(e)}[/bold red]\n")
        if DEBUG_MODE or args.verbose:
            import traceback
            console.print(traceback.format_exc())
        return EXIT_ERROR

    if not result["success"] and not args.json:
        console.print(f"\n[bold red]❌ {result.get('error', 'unknown error')}[/bold red]\n")
    return _exit_code(result)


if __name__ == "__main__":
    sys.exit(main())
