#!/usr/bin/env python3
"""Print a summary table of every built-in catalog.

For each catalog: generator counts per degree, the homology (or
cohomology) group in each degree, and -- where defined -- the counting
identities.  Useful as a quick sanity sweep after editing catalog data.
"""

from __future__ import annotations

from foldcob.catalog import CatalogId, catalog, counting_identities
from foldcob.complexes import homology


def group_str(g):
    parts = ["Z"] * g.free_rank + [f"Z/{d}" for d in g.torsion]
    return " + ".join(parts) if parts else "0"


def main():
    for cid in CatalogId:
        cx = catalog(cid)
        counts = " ".join(
            f"{deg}:{cx.n(deg)}" for deg in range(cx.top_degree + 1)
        )
        print(f"{cid.name:16s} [{cx.direction.name.lower():11s}] gens {counts}")
        for deg in range(cx.top_degree + 1):
            g = homology(cx, deg)
            print(f"    H{deg} = {group_str(g)}")
        try:
            idents = counting_identities(cid)
        except ValueError:
            continue
        for ident in idents:
            lhs = " + ".join(
                f"{c}*{n}" if c != 1 else n for n, c in ident.f_terms
            )
            rhs = " + ".join(
                f"{c}*{n}" if c != 1 else n for n, c in ident.F_terms
            ) or "0"
            print(f"    identity: {lhs} == {rhs}")


if __name__ == "__main__":
    main()
