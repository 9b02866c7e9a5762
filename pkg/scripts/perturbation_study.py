"""Delete each vertex of a catalog graph in turn and tabulate how the four
indices respond. The circle/complete pair is the interesting case: classical
indices start at zero on both, T_Q does not.

    python3 scripts/perturbation_study.py circle complete
"""
import argparse

from vntheil import experiments as ex
from vntheil.graph import CATALOG_IDS, catalog_graph

COLS = ("C_D", "C_B", "T_d1", "T_Q")


def fmt(v):
    return "-" if v is None else f"{v:.6f}"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("graphs", nargs="*", default=["circle", "complete"], help="catalog ids")
    args = ap.parse_args(argv)
    unknown = [g for g in args.graphs if g not in CATALOG_IDS]
    if unknown:
        ap.error(f"unknown graph(s): {', '.join(unknown)}; choose from {', '.join(CATALOG_IDS)}")

    for name in args.graphs:
        records = ex.perturbation_study(catalog_graph(name), name)
        before = records[0].before
        print(f"{name}: " + "  ".join(f"{c}={fmt(before[c])}" for c in COLS))
        print("  v  conn  " + "  ".join(f"{c:>9}" for c in COLS))
        for r in records:
            row = "  ".join(f"{fmt(r.after[c]):>9}" for c in COLS)
            print(f"  {r.removed_vertex}  {'yes ' if r.connected_after else 'no  '}  {row}")
        print()


if __name__ == "__main__":
    main()
