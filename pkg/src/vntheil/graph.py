"""Undirected simple graphs, the fixed 7-vertex catalog, and graph file I/O."""
from __future__ import annotations

import hashlib
import io
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import IO, Iterable, Sequence

import numpy as np

from .errors import DuplicateEdge, GraphInputError, ParseError, SelfLoop, VertexOutOfRange

EDGE_LIST = "edge_list"
JSON = "json"


@dataclass(frozen=True)
class Graph:
    """Vertices ``0..n-1`` and a set of unordered edges stored as ``(i, j)`` with ``i < j``.

    Build instances with :func:`build_graph`; the constructor does not validate.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edges`` against ``n`` vertices and return a :class:`Graph`."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise GraphInputError(f"vertex count must be a positive integer, got {n!r}")
    n = int(n)
    seen: set[tuple[int, int]] = set()
    for e in edges:
        if len(e) != 2:
            raise GraphInputError(f"edge must be a pair, got {e!r}")
        i, j = int(e[0]), int(e[1])
        for v in (i, j):
            if not 0 <= v < n:
                raise VertexOutOfRange(f"vertex {v} outside [0, {n})")
        if i == j:
            raise SelfLoop(f"self-loop at vertex {i}")
        key = (i, j) if i < j else (j, i)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen.add(key)
    return Graph(n, frozenset(seen))


def degrees(g: Graph) -> np.ndarray:
    d = np.zeros(g.n, dtype=np.int64)
    for i, j in g.edges:
        d[i] += 1
        d[j] += 1
    return d


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for i, j in g.edges:
        a[i, j] = a[j, i] = 1.0
    return a


def laplacian(g: Graph) -> np.ndarray:
    """Combinatorial Laplacian ``diag(d) - A``."""
    return np.diag(degrees(g).astype(float)) - adjacency(g)


def components(g: Graph) -> list[list[int]]:
    """Connected components in order of their smallest vertex."""
    label = [-1] * g.n
    out = []
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = len(out)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors[v]:
                if label[w] < 0:
                    label[w] = label[s]
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.neighbors[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def remove_vertex(g: Graph, v: int) -> Graph:
    """Delete ``v`` and its edges; vertices above ``v`` shift down by one."""
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} outside [0, {g.n})")
    if g.n < 2:
        raise GraphInputError("cannot remove a vertex from a single-vertex graph")

    def shift(u):
        return u - 1 if u > v else u

    return Graph(g.n - 1, frozenset((shift(i), shift(j)) for i, j in g.edges if v not in (i, j)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``i -> perm[i]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphInputError("perm must be a permutation of range(n)")
    return build_graph(g.n, [(perm[i], perm[j]) for i, j in g.edges])


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(write_graph(g, EDGE_LIST).encode()).hexdigest()[:16]


# --- named families -------------------------------------------------------

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def star_graph(n: int) -> Graph:
    return build_graph(n, [(0, i) for i in range(1, n)])


# --- the 7-vertex catalog ---------------------------------------------------
# Labels are fixed so every downstream number is reproducible.

_CATALOG_EDGES: dict[str, list[tuple[int, int]]] = {
    # hub 0, leaves 1..6
    "star": [(0, i) for i in range(1, 7)],
    # hub 0, rim 1..6
    "wheel": [(0, i) for i in range(1, 7)] + [(i, i % 6 + 1) for i in range(1, 7)],
    # root 0; children 1, 2; grandchildren 3, 4 under 1 and 5, 6 under 2
    "balanced_tree": [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)],
    # triangle 0-1-2, tail 2-3-4-5-6
    "lollipop": [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)],
    # triangles 0-1-2 and 4-5-6, bridge vertex 3 joined to 2 and 4
    "barbell": [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)],
    # parts {0, 1, 2} and {3, 4, 5, 6}
    "bipartite_3_4": [(i, j) for i in range(3) for j in range(3, 7)],
    # floors 0-1, 2-3, 4-5 (ladder), apex 6 on the top floor
    "two_story_house": [(0, 1), (2, 3), (4, 5), (0, 2), (2, 4), (1, 3), (3, 5), (4, 6), (5, 6)],
    "path": [(i, i + 1) for i in range(6)],
    "circle": [(i, (i + 1) % 7) for i in range(7)],
    "complete": list(combinations(range(7), 2)),
}

CATALOG_IDS: tuple[str, ...] = tuple(_CATALOG_EDGES)


def catalog_graph(name: str) -> Graph:
    try:
        edges = _CATALOG_EDGES[name]
    except KeyError:
        raise GraphInputError(f"unknown catalog id {name!r}; choose from {', '.join(CATALOG_IDS)}") from None
    return build_graph(7, edges)


# --- I/O ---------------------------------------------------------------------

def _as_text(source) -> str:
    if isinstance(source, bytes):
        data = source
    elif isinstance(source, str):
        return source
    else:
        data = source.read()
        if isinstance(data, str):
            return data
    try:
        return data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not ASCII ({exc.reason})") from None


def _parse_edge_list(text: str) -> Graph:
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1 or not tokens[0].isdigit():
                raise ParseError(f"expected vertex count, got {line!r}", line=lineno)
            n = int(tokens[0])
            if n < 1:
                raise ParseError("vertex count must be positive", line=lineno)
            continue
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise ParseError(f"expected 'i j', got {line!r}", line=lineno)
        pair = (int(tokens[0]), int(tokens[1]))
        try:
            build_graph(n, [pair])
        except GraphInputError as exc:
            raise ParseError(str(exc), line=lineno) from None
        pairs.append((lineno, pair))
    if n is None:
        raise ParseError("empty input: missing vertex count")
    seen = {}
    for lineno, (i, j) in pairs:
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ParseError(f"duplicate edge {key} (first on line {seen[key]})", line=lineno)
        seen[key] = lineno
    return build_graph(n, [p for _, p in pairs])


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("top-level value must be an object")
    n = obj.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError("must be a positive integer", field="n")
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise ParseError("must be a list of [i, j] pairs", field="edges")
    for k, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise ParseError(f"entry {k} is not an integer pair", field="edges")
    try:
        return build_graph(n, edges)
    except GraphInputError as exc:
        raise ParseError(str(exc), field="edges") from None


def read_graph(source: bytes | str | IO, format: str = EDGE_LIST) -> Graph:
    text = _as_text(source)
    if format == EDGE_LIST:
        return _parse_edge_list(text)
    if format == JSON:
        return _parse_json(text)
    raise ValueError(f"unknown graph format {format!r}")


def write_graph(g: Graph, format: str = EDGE_LIST) -> str:
    """Canonical text: edges sorted, one trailing newline."""
    if format == EDGE_LIST:
        buf = io.StringIO()
        buf.write(f"{g.n}\n")
        for i, j in g.sorted_edges():
            buf.write(f"{i} {j}\n")
        return buf.getvalue()
    if format == JSON:
        return json.dumps({"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}) + "\n"
    raise ValueError(f"unknown graph format {format!r}")


def load_graph(path) -> Graph:
    """Read a graph file; ``.json`` selects JSON, anything else the edge-list format."""
    path = Path(path)
    fmt = JSON if path.suffix.lower() == ".json" else EDGE_LIST
    with open(path, "rb") as fh:
        return read_graph(fh, fmt)
