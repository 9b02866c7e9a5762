import io
import random
from collections import deque
from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given

from vntheil.errors import DuplicateEdge, ParseError, SelfLoop, VertexOutOfRange
from vntheil.graph import (
    CATALOG_IDS,
    EDGE_LIST,
    JSON,
    build_graph,
    catalog_graph,
    complete_graph,
    components,
    cycle_graph,
    degrees,
    is_connected,
    laplacian,
    path_graph,
    read_graph,
    remove_vertex,
    star_graph,
    write_graph,
)

from .conftest import graphs


def test_build_path3():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.m == 2
    assert degrees(g).tolist() == [1, 2, 1]


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (2, [(0, 0)], SelfLoop),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (3, [(0, 3)], VertexOutOfRange),
        (3, [(-1, 2)], VertexOutOfRange),
    ],
)
def test_build_rejects(n, edges, exc):
    with pytest.raises(exc):
        build_graph(n, edges)


def test_k7_edge_count():
    assert build_graph(7, combinations(range(7), 2)).m == 21


CATALOG_DEGREES = {
    "star": [1, 1, 1, 1, 1, 1, 6],
    "wheel": [3, 3, 3, 3, 3, 3, 6],
    "balanced_tree": [1, 1, 1, 1, 2, 3, 3],
    "lollipop": [1, 2, 2, 2, 2, 2, 3],
    "barbell": [2, 2, 2, 2, 2, 3, 3],
    "bipartite_3_4": [3, 3, 3, 3, 4, 4, 4],
    "two_story_house": [2, 2, 2, 3, 3, 3, 3],
    "path": [1, 1, 2, 2, 2, 2, 2],
    "circle": [2] * 7,
    "complete": [6] * 7,
}


@pytest.mark.parametrize("name", CATALOG_IDS)
def test_catalog_members(name):
    g = catalog_graph(name)
    d = degrees(g)
    assert g.n == 7
    assert is_connected(g)
    assert sorted(d.tolist()) == CATALOG_DEGREES[name]
    assert d.sum() == 2 * g.m


def test_catalog_has_ten_members():
    assert len(CATALOG_IDS) == 10


def test_catalog_spot_degrees():
    assert degrees(catalog_graph("star")).tolist() == [6, 1, 1, 1, 1, 1, 1]
    assert catalog_graph("complete").m == 21
    assert catalog_graph("two_story_house").m == 9


def test_laplacian_small():
    np.testing.assert_array_equal(laplacian(path_graph(2)), [[1, -1], [-1, 1]])
    L = laplacian(complete_graph(3))
    assert np.all(np.diag(L) == 2)
    assert L[0, 1] == L[1, 2] == -1
    assert np.trace(L) == 6
    assert np.trace(laplacian(catalog_graph("star"))) == 12


@given(graphs())
def test_laplacian_invariants(g):
    L = laplacian(g)
    d = degrees(g)
    assert d.sum() == 2 * g.m
    np.testing.assert_array_equal(L, L.T)
    assert np.all(L.sum(axis=1) == 0)
    np.testing.assert_array_equal(np.diag(L), d)
    off = L[~np.eye(g.n, dtype=bool)]
    assert set(np.unique(off)) <= {0.0, -1.0}
    assert np.trace(L) == 2 * g.m


def test_is_connected():
    assert is_connected(catalog_graph("circle"))
    assert is_connected(catalog_graph("barbell"))
    assert not is_connected(build_graph(2, []))


@given(graphs())
def test_components_partition(g):
    comps = components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert (len(comps) == 1) == is_connected(g)


def _isomorphic(g, h):
    """Brute-force isomorphism, feasible for n <= 8."""
    if g.n != h.n or g.m != h.m or sorted(degrees(g)) != sorted(degrees(h)):
        return False
    target = h.edges
    for perm in permutations(range(g.n)):
        if all((min(perm[i], perm[j]), max(perm[i], perm[j])) in target for i, j in g.edges):
            return True
    return False


@pytest.mark.parametrize("n", [4, 5, 7, 8])
def test_circle_minus_vertex_is_path(n):
    for v in range(n):
        h = remove_vertex(cycle_graph(n), v)
        assert is_connected(h)
        assert _isomorphic(h, path_graph(n - 1))


def test_remove_vertex_other_cases():
    for v in range(7):
        assert remove_vertex(complete_graph(7), v) == complete_graph(6)
    hubless = remove_vertex(star_graph(7), 0)
    assert hubless.n == 6 and hubless.m == 0
    assert not is_connected(hubless)
    with pytest.raises(VertexOutOfRange):
        remove_vertex(star_graph(7), 7)


STAR_TEXT = "7\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n"


def test_read_edge_list_star():
    assert read_graph(STAR_TEXT.encode()) == catalog_graph("star")
    commented = "# a star\n7  # vertices\n\n" + "\n".join(f"{0}\t{i}" for i in range(1, 7))
    assert read_graph(io.BytesIO(commented.encode())) == catalog_graph("star")


@pytest.mark.parametrize(
    "text, line",
    [
        ("3\na b\n", 2),
        ("x\n", 1),
        ("3\n0 1 2\n", 2),
        ("3\n0 1\n\n1 0\n", 4),
        ("3\n0 5\n", 2),
        ("3\n1 1\n", 2),
    ],
)
def test_read_edge_list_errors(text, line):
    with pytest.raises(ParseError) as info:
        read_graph(text.encode())
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_read_empty():
    with pytest.raises(ParseError):
        read_graph(b"# nothing\n")


def test_read_json():
    g = read_graph(b'{"n": 3, "edges": [[0, 1], [2, 1]]}', JSON)
    assert g == path_graph(3)


@pytest.mark.parametrize(
    "text, field",
    [
        ('{"edges": []}', "n"),
        ('{"n": 3, "edges": [[0, "1"]]}', "edges"),
        ('{"n": 3, "edges": [[0, 1], [1, 0]]}', "edges"),
        ('{"n": 3}', "edges"),
    ],
)
def test_read_json_errors(text, field):
    with pytest.raises(ParseError) as info:
        read_graph(text, JSON)
    assert info.value.field == field


def test_read_json_syntax_error():
    with pytest.raises(ParseError):
        read_graph(b"{not json", JSON)


@pytest.mark.parametrize("fmt", [EDGE_LIST, JSON])
@given(g=graphs())
def test_round_trip(fmt, g):
    text = write_graph(g, fmt)
    h = read_graph(text.encode(), fmt)
    assert h == g
    assert write_graph(h, fmt) == text


def test_write_is_order_independent():
    edges = list(catalog_graph("wheel").edges)
    random.Random(3).shuffle(edges)
    assert write_graph(build_graph(7, edges)) == write_graph(catalog_graph("wheel"))


def _bfs_reach(g):
    seen, q = {0}, deque([0])
    while q:
        v = q.popleft()
        for w in range(g.n):
            if (min(v, w), max(v, w)) in g.edges and w not in seen:
                seen.add(w)
                q.append(w)
    return len(seen) == g.n


@given(graphs())
def test_is_connected_matches_naive_bfs(g):
    assert is_connected(g) == _bfs_reach(g)
