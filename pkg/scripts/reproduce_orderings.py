"""Rank the ten catalog graphs under C_D, C_B, T_d1 and T_Q and compare each
ranking with the published arrangement.

    python3 scripts/reproduce_orderings.py [--json out.json]
"""
import argparse
import json
import sys

from vntheil import experiments as ex


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", help="also write every ordering result to this file")
    args = ap.parse_args(argv)

    results = [ex.reproduce_ordering(m) for m in ex.METRICS]
    for res in results:
        verdict = "MATCH" if res.matches else "MISMATCH"
        print(f"{ex.METRIC_LABELS[res.metric]:>4}  {verdict}")
        for rank, (name, value) in enumerate(res.ranked, 1):
            print(f"      {rank:2d}. {name:<16} {value:.12g}")
        for a, b, va, vb in res.violations:
            print(f"      violation: {a} ({va:.12g}) should be >= {b} ({vb:.12g})")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_dict() for r in results], fh, indent=2)
    return 0 if all(r.matches for r in results) else 4


if __name__ == "__main__":
    sys.exit(main())
