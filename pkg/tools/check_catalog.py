"""
Catalog diagnostics:
1) print M(delta, 5) against the shipped (delta, 5)-cage orders
2) re-check order, regularity and girth of every catalog entry
3) check that Moore entries meet the Moore bound exactly
"""

import sys
from pathlib import Path

# Let the script import modules from the project root
ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT))

from core.bounds import moore_bound
from core.catalog import catalog_entries, girth5_table
from core.graph import degree_profile, girth, is_connected


def check_catalog() -> bool:
    print("=" * 50)
    print("🔍 Girth 5: Moore bound vs cage order")
    print("=" * 50)
    for row in girth5_table():
        print(f"delta={row['delta']}  M={row['moore']:>3}  C={row['cage']:>3}  {row['name']}")
    print("-" * 50)

    ok = True
    for entry in catalog_entries():
        g = entry.graph
        profile = degree_profile(g)
        problems = []
        if not is_connected(g):
            problems.append("disconnected")
        if not profile.is_regular or profile.min_degree != entry.delta:
            problems.append(f"degrees {profile.degree_histogram}")
        if girth(g) != entry.g:
            problems.append(f"girth {girth(g)}")
        if entry.is_moore and g.n != moore_bound(entry.delta, entry.g):
            problems.append(f"order {g.n} != M = {moore_bound(entry.delta, entry.g)}")

        if problems:
            ok = False
            print(f"❌ {entry.name}: {', '.join(problems)}")
        else:
            print(f"✅ {entry.name}: n={g.n}, {entry.delta}-regular, girth {entry.g}")

    print("-" * 50)
    print("🎉 Catalog consistent" if ok else "⚠️  Catalog has problems")
    return ok


if __name__ == "__main__":
    sys.exit(0 if check_catalog() else 1)
