"""Randomized invariant battery behind ``vntheil verify``.

Each suite counts checks that passed and failed and keeps the first failure
message. Functions are looked up through their modules at call time so a
patched implementation is actually exercised.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import experiments as ex
from . import indices as ix
from . import spectral as sp
from .graph import CATALOG_IDS, catalog_graph, complete_graph, degrees

SPLIT_K = (0.5, 1.0, 2.0, 5.0)
LIMIT_TOL = 1e-4


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def check(self, cond: bool, msg: str = "") -> None:
        if cond:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = msg


@dataclass
class VerificationSummary:
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def lines(self) -> list[str]:
        out = []
        for s in self.suites:
            tag = "PASS" if s.ok else "FAIL"
            line = f"[{tag}] {s.name}: {s.passed} passed, {s.failed} failed"
            if s.first_failure:
                line += f" (first: {s.first_failure})"
            out.append(line)
        return out


def graph_pool(trials: int, seed: int, n_max: int = 12):
    """Catalog graphs followed by ``trials`` seeded random connected graphs."""
    rng = random.Random(seed)
    pool = [(name, catalog_graph(name)) for name in CATALOG_IDS]
    for t in range(trials):
        g = ex.random_connected_graph(rng, 3, n_max)
        pool.append((f"random#{t}", g))
    return pool


def _limit_applicable(d) -> bool:
    """True when ``n (d_second / d_max)^200`` guarantees the 200-power limit to 1e-4."""
    vals = sorted(set(int(x) for x in d if x > 0), reverse=True)
    if len(vals) < 2:
        return True
    return len(d) * (vals[1] / vals[0]) ** ix.DEFAULT_K_MAX <= LIMIT_TOL


def run_verification(trials: int = 1000, seed: int = 7, n_max: int = 12,
                     k_grid=ix.DEFAULT_K_GRID) -> VerificationSummary:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    pool = graph_pool(trials, seed, n_max)
    names = [
        "entropy_bound", "degree_theil_below_tq", "bounded_case", "renyi2_sufficient_condition",
        "case_a_crossing", "entropy_form_equivalence", "monotonicity", "k_limit",
        "renyi2_identity", "jain_bound", "renyi_order_monotone", "np_split", "betweenness_oracle",
    ]
    suites = {n: SuiteResult(n) for n in names}
    s = suites

    for n in range(3, min(50, max(3, n_max)) + 1):
        h = sp.von_neumann_entropy(complete_graph(n))
        s["entropy_bound"].check(abs(h - math.log(n - 1)) <= 1e-9, f"H(K_{n}) = {h!r}")

    for name, g in pool:
        d = degrees(g)
        n = g.n
        h = sp.von_neumann_entropy(sp.density_spectrum(g))
        t_q = ix.von_neumann_theil(g)
        td = {k: ix.degree_theil(g, k) for k in k_grid}
        s["entropy_bound"].check(h <= math.log(n - 1) + 1e-9, f"{name}: H={h!r} > ln(n-1)")
        t1 = ix.degree_theil(g, 1.0)
        s["degree_theil_below_tq"].check(t1 <= t_q + 1e-9, f"{name}: T_d1={t1!r} > T_Q={t_q!r}")

        v = ix.classify_case(g)
        if v.threshold <= t_q + ix.CLASSIFY_TOL:
            worst = max(td.values())
            s["bounded_case"].check(worst <= t_q + 1e-9, f"{name}: max T_dk={worst!r} > T_Q={t_q!r}")
        if v.sufficient_condition_holds:
            s["renyi2_sufficient_condition"].check(v.case in ("A", "boundary"), f"{name}: premise holds but case {v.case}")
        if v.case == "A":
            k = v.crossing_k
            if isinstance(k, float):
                res = abs(ix.degree_theil(g, k) - t_q)
                s["case_a_crossing"].check(res <= 1e-9, f"{name}: |T_d(k*) - T_Q| = {res:.2e}")
            elif k is ix.Crossing.ASYMPTOTIC:
                s["case_a_crossing"].check(ix.degree_theil(g, ix.DEFAULT_K_MAX) < t_q, f"{name}: asymptotic but T_d200 >= T_Q")
            else:
                s["case_a_crossing"].check(abs(t1 - t_q) <= 1e-9, f"{name}: at_k_equals_one but gap {t1 - t_q:.2e}")
        c4 = ix.entropy_case(g)
        expected = {"A": "B", "B": "A", "boundary": "boundary"}[v.case]
        s["entropy_form_equivalence"].check(c4 == expected, f"{name}: case {v.case} vs entropy form {c4}")

        s["monotonicity"].check(ix.monotonicity_check(g, k_grid), f"{name}: T_dk decreases on grid")
        if _limit_applicable(d):
            gap = abs(ix.degree_theil(g, ix.DEFAULT_K_MAX) - v.threshold)
            s["k_limit"].check(gap <= LIMIT_TOL, f"{name}: |T_d200 - limit| = {gap:.2e}")

        r2 = sp.renyi_entropy(sp.density_spectrum(g), 2.0)
        r2d = sp.renyi2_entropy_degree_form(d)
        s["renyi2_identity"].check(abs(r2 - r2d) <= 1e-9, f"{name}: {r2!r} vs {r2d!r}")
        tq2 = ix.generalized_theil(g, 2.0)
        nlj = -math.log(ix.jain_index(d))
        s["jain_bound"].check(tq2 >= nlj - 1e-10, f"{name}: T_Q2={tq2!r} < -ln J={nlj!r}")
        ps = [0.5, 0.9, 1.1, 2.0, 3.0, 5.0]
        hs = [sp.renyi_entropy(sp.density_spectrum(g), p) for p in ps]
        s["renyi_order_monotone"].check(all(b <= a + 1e-10 for a, b in zip(hs, hs[1:])), f"{name}: Renyi entropy increases in p")

    rng = random.Random(seed + 1)
    for t in range(trials):
        d = np.array([rng.randint(1, 20) for _ in range(rng.randint(1, 12))])
        for k in SPLIT_K:
            n_set, p_set = ix.np_set_split(d, k)
            ok = (n_set | p_set) == set(range(len(d))) and not (n_set & p_set)
            if n_set and p_set:
                ok = ok and max(d[i] for i in n_set) <= min(d[i] for i in p_set)
            s["np_split"].check(ok, f"degrees {d.tolist()}, k={k}")

    small = [(nm, g) for nm, g in pool if g.n <= 8]
    brng = random.Random(seed + 2)
    for t in range(min(trials, 200)):
        small.append((f"small#{t}", ex.random_connected_graph(brng, 2, 8)))
    for name, g in small:
        s["betweenness_oracle"].check(ix.betweenness(g, exact=True) == ix.betweenness_brute_force(g), f"{name}: Brandes != enumeration")

    return VerificationSummary(list(suites.values()))
