"""Theil-type, Freeman and Jain indices, plus the degree-Theil / von Neumann
Theil dichotomy (case classification, crossing exponent, N/P split).

Logarithms are natural throughout.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import AllZero, Disconnected, EmptyGraph, InvalidExponent, TooSmall, WrongCase
from .graph import Graph, degrees, is_connected
from .spectral import density_spectrum, renyi_entropy, shannon_entropy, von_neumann_entropy

CLASSIFY_TOL = 1e-9
IDENTITY_TOL = 1e-9
SLACK = 1e-10
DEFAULT_K_GRID = (0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 50.0, 200.0)
DEFAULT_K_MAX = 200.0


# --- Theil family -------------------------------------------------------------

def theil_index(x: Sequence[float]) -> float:
    """Mean of ``(x_i/mu) ln(x_i/mu)``; lies in ``[0, ln n]``."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("characteristics must be a non-empty vector")
    if np.any(x < 0) or not np.all(np.isfinite(x)):
        raise ValueError("characteristics must be finite and nonnegative")
    top = x.max()
    if top == 0:
        raise AllZero("all characteristics are zero")
    if np.all(x == top):
        return 0.0
    s = x / top  # rescale first so tiny inputs do not underflow the mean
    r = s[s > 0] / s.mean()
    return float(np.sum(r * np.log(r)) / x.size)


def relative_degree_distribution(d, k: float) -> np.ndarray:
    """``d_i^k / sum_j d_j^k`` evaluated in log space (safe for large ``k``)."""
    if not k > 0:
        raise InvalidExponent(f"degree exponent must be positive, got {k}")
    d = np.asarray(d, dtype=float)
    if d.sum() <= 0:
        raise EmptyGraph("degree sum is zero")
    with np.errstate(divide="ignore"):
        w = k * np.log(d)
    w -= w.max()
    p = np.exp(w)
    return p / p.sum()


def degree_entropy(d, k: float) -> float:
    return shannon_entropy(relative_degree_distribution(d, k))


def degree_theil_from_degrees(d, k: float) -> float:
    d = np.asarray(d)
    p = relative_degree_distribution(d, k)
    if np.all(d == d[0]):
        return 0.0  # uniform characteristics; avoids ln n - ln n rounding
    return math.log(len(d)) - shannon_entropy(p)


def degree_theil(g: Graph, k: float) -> float:
    """Theil index of the characteristics ``d_i^k``."""
    if g.m == 0:
        raise EmptyGraph("graph has no edges")
    return degree_theil_from_degrees(degrees(g), k)


def von_neumann_theil(g: Graph) -> float:
    """``ln n - H(rho_G)``: relative entropy of ``rho_G`` to the maximally mixed state."""
    return math.log(g.n) - von_neumann_entropy(density_spectrum(g))


def generalized_theil(g: Graph, p: float) -> float:
    return math.log(g.n) - renyi_entropy(density_spectrum(g), p)


def jain_index(d) -> float:
    d = np.asarray(d, dtype=float)
    s = d.sum()
    if s <= 0:
        raise EmptyGraph("degree sum is zero")
    return float(s * s / (d.size * np.dot(d, d)))


# --- Freeman centralization ------------------------------------------------------

def freeman_degree_centralization(g: Graph) -> float:
    if g.n < 3:
        raise TooSmall("degree centralization needs n >= 3")
    d = degrees(g)
    return float((d.max() - d).sum()) / (g.n**2 - 3 * g.n + 2)


def betweenness(g: Graph, exact: bool = False) -> list:
    """Shortest-path betweenness summed over ordered source/target pairs.

    Brandes' single-source accumulation. ``exact=True`` returns Fractions.
    """
    zero = Fraction(0) if exact else 0.0
    bc = [zero] * g.n
    adj = g.neighbors
    for s in range(g.n):
        dist = [-1] * g.n
        sigma = [0] * g.n
        preds: list[list[int]] = [[] for _ in range(g.n)]
        dist[s] = 0
        sigma[s] = 1
        order = []
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [zero] * g.n
        for w in reversed(order):
            for v in preds[w]:
                if exact:
                    delta[v] += Fraction(sigma[v], sigma[w]) * (1 + delta[w])
                else:
                    delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != s:
                bc[w] += delta[w]
    return bc


def betweenness_brute_force(g: Graph) -> list[Fraction]:
    """Reference betweenness by listing every shortest path explicitly."""
    bc = [Fraction(0)] * g.n
    adj = g.neighbors
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        for t in range(g.n):
            if t == s or dist[t] < 0:
                continue
            paths = []
            stack = [(s, [s])]
            while stack:
                v, path = stack.pop()
                if v == t:
                    paths.append(path)
                    continue
                for w in adj[v]:
                    if dist[w] == dist[v] + 1 and dist[w] <= dist[t]:
                        stack.append((w, path + [w]))
            through = [0] * g.n
            for path in paths:
                for v in path[1:-1]:
                    through[v] += 1
            for v in range(g.n):
                if through[v]:
                    bc[v] += Fraction(through[v], len(paths))
    return bc


def freeman_betweenness_centralization(g: Graph) -> float:
    n = g.n
    if n < 3:
        raise TooSmall("betweenness centralization needs n >= 3")
    b = betweenness(g)
    top = max(b)
    return float(sum(top - x for x in b)) / (n**3 - 4 * n**2 + 5 * n - 2)


# --- the degree-Theil / T_Q dichotomy -----------------------------------------------

@dataclass(frozen=True)
class MaxDegreeSet:
    members: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.members)


def max_degree_set(d) -> MaxDegreeSet:
    d = np.asarray(d)
    top = d.max()
    return MaxDegreeSet(tuple(int(i) for i in np.flatnonzero(d == top)))


class Crossing(str, Enum):
    ASYMPTOTIC = "asymptotic"
    AT_K_EQUALS_ONE = "at_k_equals_one"


@dataclass(frozen=True)
class CaseVerdict:
    case: str  # "A", "B" or "boundary"
    threshold: float  # ln n - ln|M|, the k -> infinity limit of T_{d,k}
    t_q: float
    sufficient_condition_holds: bool
    max_degree_multiplicity: int
    crossing_k: float | Crossing | None = None


def _case(threshold: float, t_q: float) -> str:
    if abs(threshold - t_q) <= CLASSIFY_TOL:
        return "boundary"
    return "A" if threshold > t_q else "B"


def renyi2_sufficient_condition(d) -> bool:
    """``(sum d)^2 / (sum d + sum d^2) >= |M|``, which forces case A."""
    d = np.asarray(d, dtype=float)
    s = d.sum()
    return bool(s * s / (s + np.dot(d, d)) >= max_degree_set(d).multiplicity)


def classify_case(g: Graph, k_max: float = DEFAULT_K_MAX) -> CaseVerdict:
    if not is_connected(g):
        raise Disconnected("case classification requires a connected graph")
    if g.m == 0:
        raise EmptyGraph("graph has no edges")
    d = degrees(g)
    mult = max_degree_set(d).multiplicity
    threshold = math.log(g.n) - math.log(mult)
    t_q = von_neumann_theil(g)
    case = _case(threshold, t_q)
    crossing = None
    if case != "B":
        crossing = _crossing(d, t_q, k_max)
    return CaseVerdict(case, threshold, t_q, renyi2_sufficient_condition(d), mult, crossing)


def entropy_case(g: Graph) -> str:
    """The same dichotomy phrased with entropies: "A" when ``H(G) < ln|M|``.

    The labels are swapped relative to ``classify_case``: entropy-form "A"
    is the bounded case "B" there, and vice versa.
    """
    if not is_connected(g):
        raise Disconnected("case classification requires a connected graph")
    h = von_neumann_entropy(density_spectrum(g))
    log_m = math.log(max_degree_set(degrees(g)).multiplicity)
    if abs(h - log_m) <= CLASSIFY_TOL:
        return "boundary"
    return "A" if h < log_m else "B"


def _crossing(d, t_q: float, k_max: float, tol: float = IDENTITY_TOL):
    def gap(k):
        return degree_theil_from_degrees(d, k) - t_q

    lo, hi = 1.0, float(k_max)
    g_lo = gap(lo)
    if abs(g_lo) <= tol:
        return Crossing.AT_K_EQUALS_ONE
    g_hi = gap(hi)
    if g_hi < -tol:
        return Crossing.ASYMPTOTIC
    if abs(g_hi) <= tol:
        return hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        g_mid = gap(mid)
        if abs(g_mid) <= tol:
            return mid
        if g_mid < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_crossing_k(g: Graph, k_max: float = DEFAULT_K_MAX):
    """Exponent ``k* in [1, k_max]`` with ``T_{d,k*} = T_Q`` to within 1e-9.

    Returns ``Crossing.AT_K_EQUALS_ONE`` when ``k = 1`` already matches and
    ``Crossing.ASYMPTOTIC`` when ``T_{d,k_max}`` is still short of ``T_Q``.
    """
    verdict = classify_case(g, k_max)
    if verdict.case == "B":
        raise WrongCase("no crossing exponent in case B: T_{d,k} stays below T_Q")
    return verdict.crossing_k


def monotonicity_check(g: Graph, k_grid: Sequence[float], slack: float = SLACK) -> bool:
    ks = list(k_grid)
    if any(b <= a for a, b in zip(ks, ks[1:])) or any(k <= 0 for k in ks):
        raise ValueError("k_grid must be strictly ascending and positive")
    vals = [degree_theil(g, k) for k in ks]
    return all(b >= a - slack for a, b in zip(vals, vals[1:]))


def np_set_split(d, k: float) -> tuple[frozenset[int], frozenset[int]]:
    """Split vertices by the sign of ``d/dk`` of their relative degree power.

    Vertex ``i`` is in N (derivative negative) iff ``d_i`` is below the
    ``d^k``-weighted geometric mean of the degrees; everything else is in P.
    """
    if not k > 0:
        raise InvalidExponent(f"degree exponent must be positive, got {k}")
    d = np.asarray(d, dtype=float)
    w = relative_degree_distribution(d, k)
    pos = d > 0
    log_d = np.full(d.shape, -np.inf)
    log_d[pos] = np.log(d[pos])
    log_threshold = float(np.dot(w[pos], log_d[pos]))
    tol = 1e-12 * max(1.0, abs(log_threshold))
    neg = log_d < log_threshold - tol
    n_set = frozenset(int(i) for i in np.flatnonzero(neg))
    p_set = frozenset(int(i) for i in np.flatnonzero(~neg))
    return n_set, p_set


def np_split_threshold(d, k: float) -> float:
    d = np.asarray(d, dtype=float)
    w = relative_degree_distribution(d, k)
    pos = d > 0
    return float(np.exp(np.dot(w[pos], np.log(d[pos]))))
