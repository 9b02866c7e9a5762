"""Classify every catalog graph by the dichotomy between the degree-Theil family
T_d,k and T_Q, and report the crossing exponent where one exists.

    python3 scripts/crossing_exponents.py
"""
import math

from vntheil import indices as ix
from vntheil.graph import CATALOG_IDS, catalog_graph


def main():
    print(f"{'graph':<16} {'case':<8} {'T_Q':>9} {'limit':>9} {'k*':>10}  suff")
    for name in CATALOG_IDS:
        v = ix.classify_case(catalog_graph(name))
        k = v.crossing_k
        k_txt = "-" if k is None else (k.value if isinstance(k, ix.Crossing) else f"{k:.6f}")
        print(f"{name:<16} {v.case:<8} {v.t_q:9.6f} {v.threshold:9.6f} {k_txt:>10}  {v.sufficient_condition_holds}")
    print(f"\nlimit = ln n - ln|M|; ln 7 = {math.log(7):.6f}")


if __name__ == "__main__":
    main()
