import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vntheil import experiments as ex
from vntheil import indices as ix
from vntheil.errors import InfeasibleEdgeCount
from vntheil.graph import CATALOG_IDS, catalog_graph, complete_graph, is_connected

# Regression constants frozen from the first oracle-checked run (12 significant digits).
# C_D and C_B are exact rationals; T_Q values were cross-checked against closed-form
# spectra for star, circle and complete.
FROZEN = {
    "cd": {"star": 1.0, "wheel": 0.6, "balanced_tree": 0.3, "lollipop": 7 / 30, "barbell": 5 / 30,
           "bipartite_3_4": 4 / 30, "two_story_house": 3 / 30, "path": 2 / 30, "circle": 0.0, "complete": 0.0},
    "cb": {"star": 1.0, "wheel": 11 / 30, "balanced_tree": 2 / 5, "lollipop": 11 / 30, "barbell": 19 / 45,
           "bipartite_3_4": 1 / 18, "two_story_house": 43 / 270, "path": 14 / 45, "circle": 0.0, "complete": 0.0},
    "td1": {"star": 0.356883233881, "wheel": 0.0397554025155, "balanced_tree": 0.125834173695,
            "lollipop": 0.0373748674118, "barbell": 0.018518022916, "bipartite_3_4": 0.0103096436014,
            "two_story_house": 0.0189956437912, "path": 0.0386261497339, "circle": 0.0, "complete": 0.0},
    "tq": {"star": 0.596117752883, "wheel": 0.248335661072, "balanced_tree": 0.448304038498,
           "lollipop": 0.366774004937, "barbell": 0.325776439489, "bipartite_3_4": 0.209491174139,
           "two_story_house": 0.27707522041, "path": 0.397647784092, "circle": 0.313987789462,
           "complete": 0.154150679827},
}


@pytest.mark.parametrize("metric", list(ex.METRICS))
def test_catalog_regression_values(metric):
    values = ex.catalog_values(metric)
    for name in CATALOG_IDS:
        assert values[name] == pytest.approx(FROZEN[metric][name], abs=1e-11), name


def test_circle_tq_matches_closed_form():
    lam = [(2 - 2 * math.cos(2 * math.pi * j / 7)) / 14 for j in range(1, 7)]
    expected = math.log(7) + sum(x * math.log(x) for x in lam)
    assert ix.von_neumann_theil(catalog_graph("circle")) == pytest.approx(expected, abs=1e-12)


def test_catalog_values_are_deterministic():
    for metric in ex.METRICS:
        assert ex.catalog_values(metric) == ex.catalog_values(metric)


def test_order_violations_tie_rule():
    vals = {"a": 1.0, "b": 0.0, "c": 0.0 + 5e-10}
    assert ex.order_violations(vals, ["a", "b", "c"]) == []
    vals["c"] = 1e-6
    assert ex.order_violations(vals, ["a", "b", "c"]) == [("b", "c", 0.0, 1e-6)]


def test_reproduce_ordering_tq():
    res = ex.reproduce_ordering("tq")
    assert res.ranked[0][0] == "star"
    assert res.ranked[-1][0] == "complete"
    assert res.matches
    values = [v for _, v in res.ranked]
    assert all(b <= a + 1e-9 for a, b in zip(values, values[1:]))


def test_reproduce_ordering_cd_wheel_second():
    res = ex.reproduce_ordering("cd")
    assert res.ranked[1][0] == "wheel"
    assert res.matches


def test_reproduce_ordering_td1_circle_complete_tie():
    res = ex.reproduce_ordering("td1")
    tail = dict(res.ranked[-2:])
    assert tail == {"circle": 0.0, "complete": 0.0}
    # ties keep the published arrangement
    assert [n for n, _ in res.ranked[-2:]] == ["circle", "complete"]


def test_reproduce_ordering_rejects_unknown_metric():
    with pytest.raises(ValueError):
        ex.reproduce_ordering("xyz")


def test_ordering_result_dict():
    d = ex.reproduce_ordering("cb").to_dict()
    assert d["metric"] == "cb"
    assert len(d["ranked"]) == 10
    assert d["published_order"][1] == "barbell"


def test_perturbation_circle():
    records = ex.perturbation_study(catalog_graph("circle"), "circle")
    assert len(records) == 7
    for r in records:
        assert r.connected_after
        assert r.before["C_D"] == 0.0
        assert r.after["C_D"] == pytest.approx(0.1, abs=1e-15)
        assert r.deltas["C_D"] == pytest.approx(0.1, abs=1e-15)
        assert r.after["T_Q"] > 0


def test_perturbation_complete():
    for r in ex.perturbation_study(complete_graph(7)):
        assert r.after["C_D"] == 0.0
        assert r.after["T_d1"] == 0.0
        assert r.after["C_B"] == 0.0
        assert r.after["T_Q"] == pytest.approx(math.log(6) - math.log(5), abs=1e-12)


def test_perturbation_star_hub_disconnects():
    records = ex.perturbation_study(catalog_graph("star"), "star")
    hub = records[0]
    assert not hub.connected_after
    assert hub.after["T_Q"] is None  # no edges left
    assert hub.after["C_D"] == 0.0
    assert hub.deltas["T_Q"] is None
    assert all(r.connected_after for r in records[1:])
    assert hub.to_dict()["removed_vertex"] == 0


def test_perturbation_needs_three_vertices():
    with pytest.raises(ValueError):
        ex.perturbation_study(complete_graph(2))


def test_tq_separates_circle_from_complete():
    assert ix.von_neumann_theil(catalog_graph("circle")) > ix.von_neumann_theil(catalog_graph("complete"))


def test_random_graph_examples():
    g = ex.random_graph(5, 4, 1)
    assert g.m == 4 and is_connected(g)
    assert ex.random_graph(5, 10, 1) == complete_graph(5)
    assert ex.random_graph(9, 15, 42) == ex.random_graph(9, 15, 42)
    assert ex.random_graph(1, 0, 0).n == 1


@pytest.mark.parametrize("n, m", [(5, 3), (5, 11), (0, 0), (4, -1)])
def test_random_graph_infeasible(n, m):
    with pytest.raises(InfeasibleEdgeCount):
        ex.random_graph(n, m, 0)


@given(st.integers(1, 15), st.data(), st.integers(0, 2**32 - 1))
def test_random_graph_contract(n, data, seed):
    m = data.draw(st.integers(n - 1, n * (n - 1) // 2))
    g = ex.random_graph(n, m, seed)
    assert g.n == n and g.m == m
    assert is_connected(g)
    assert ex.random_graph(n, m, seed) == g
