"""
main.py
Equator Workbench interactive menu

Run with: python main.py
"""
import os
import sys

from dotenv import load_dotenv
from rich.panel import Panel
from rich.prompt import IntPrompt, Prompt

# Load the environment
load_dotenv(override=True)
sys.path.insert(0, os.getcwd())

from core import __version__
from core.constructions import ConstructionSpec
from core.logger import console
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


def _show(result, renderer) -> None:
    if result["success"]:
        renderer(result)
    else:
        console.print(f"[red]❌ {result['error']}[/red]")


def _splice_menu() -> None:
    delta = IntPrompt.ask("delta", default=3)
    g = IntPrompt.ask("girth", default=5)
    j = IntPrompt.ask("copies j", default=4)
    seed = Prompt.ask("seed", choices=["moore", "cage"], default="moore")
    spec = ConstructionSpec(family="splice", delta=delta, g=g, j=j, seed=seed)
    _show(run_construct(spec, verify=True), render_construct)


def _search_menu() -> None:
    spec = SearchSpec(
        delta_min=IntPrompt.ask("minimum degree", default=3),
        g=IntPrompt.ask("girth", default=3),
        q=IntPrompt.ask("equator", default=5),
        n_max=IntPrompt.ask("max order", default=7),
    )
    _show(run_search(spec), render_search)


def main():
    try:
        while True:
            console.clear()
            console.print(Panel.fit(
                f"[bold cyan]⭕ Equator Workbench v{__version__}[/bold cyan]\n"
                "[dim]Longest isometric cycles · Moore-type bounds · equatorial graphs[/dim]\n\n"
                "[1] 📊 [bold]Analyze a graph file[/bold]\n"
                "    girth, diameter, equator with witness, bound, partition\n\n"
                "[2] 🔧 [bold]Build a splice chain[/bold] [green]recommended[/green]\n"
                "    j copies of a Moore graph or cage, invariants verified\n\n"
                "[3] ✅ [bold]Verify a theorem[/bold]\n"
                "    lower bound / structure / uniqueness / retraction / ...\n\n"
                "[4] 🔎 [bold]Minimum-order search[/bold]\n"
                "    exhaustive, n <= 12\n\n"
                "[5] 📋 [bold]Moore bound vs cage table[/bold]\n\n"
                "[q] Quit",
                title="Main menu", border_style="blue"
            ))

            choice = Prompt.ask("Choose").strip().lower()

            if choice == '1':
                path = Prompt.ask("graph file")
                _show(run_analyze(path, with_partition=True), render_analyze)

            elif choice == '2':
                _splice_menu()

            elif choice == '3':
                theorem = Prompt.ask("theorem", choices=list(THEOREMS), default="structure")
                path = Prompt.ask("graph file")
                _show(run_verify(theorem, [path]), render_verify)

            elif choice == '4':
                _search_menu()

            elif choice == '5':
                _show(run_report(), render_report)

            elif choice == 'q':
                console.print("👋 Bye!")
                sys.exit()

            else:
                console.print("[red]Invalid option[/red]")
                continue

            Prompt.ask("\nPress Enter to return", default="", show_default=False)

    except KeyboardInterrupt:
        console.print("\nStopped")


if __name__ == "__main__":
    main()
