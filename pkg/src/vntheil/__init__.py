"""Von Neumann Theil index and related centralization measures for undirected graphs."""
from .errors import *  # noqa: F401,F403
from .graph import (
    CATALOG_IDS,
    Graph,
    build_graph,
    catalog_graph,
    degrees,
    is_connected,
    laplacian,
    load_graph,
    read_graph,
    remove_vertex,
    write_graph,
)
from .indices import (
    betweenness,
    classify_case,
    degree_theil,
    find_crossing_k,
    freeman_betweenness_centralization,
    freeman_degree_centralization,
    generalized_theil,
    jain_index,
    max_degree_set,
    monotonicity_check,
    np_set_split,
    theil_index,
    von_neumann_theil,
)
from .spectral import (
    density_matrix,
    eigenvalues_sym,
    renyi2_entropy_degree_form,
    renyi_entropy,
    von_neumann_entropy,
)

__version__ = "0.1.0"
