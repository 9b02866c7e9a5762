import random

import hypothesis
from hypothesis import strategies as st

from vntheil.experiments import random_graph
from vntheil.graph import build_graph

hypothesis.settings.register_profile("ci", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("ci")


@st.composite
def connected_graphs(draw, n_min=2, n_max=12):
    n = draw(st.integers(n_min, n_max))
    m = draw(st.integers(n - 1, n * (n - 1) // 2))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_graph(n, m, seed)


@st.composite
def graphs(draw, n_min=1, n_max=10, min_edges=0):
    """Arbitrary simple graphs, possibly disconnected."""
    n = draw(st.integers(max(n_min, 2 if min_edges else 1), n_max))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min_edges)) if pairs else []
    return build_graph(n, edges)


def seeded_connected(count, seed, n_min=3, n_max=12):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        m = rng.randint(n - 1, n * (n - 1) // 2)
        out.append(random_graph(n, m, rng.getrandbits(32)))
    return out
