"""Sigma index and related irregularity measures on small graphs, with
exhaustive certification of the extremal connected k-cyclic graphs."""

from .bounds import (
    dominating_decomposition,
    edge_removal_delta,
    lemma1_bound,
    phi,
    theorem_bound,
    zagreb_bound,
)
from .canon import canonical_form, is_isomorphic
from .constructions import complete, cycle, h_graph, path, star, star_plus_isolated
from .enumeration import (
    enumerate_graphs,
    random_kcyclic,
    verify_lemma1,
    verify_lemma3,
    verify_theorem1,
)
from .graph import (
    Graph,
    GraphError,
    cyclomatic_number,
    degree,
    delete_edge,
    delete_vertex,
    is_connected,
    neighborhoods,
)
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .invariants import (
    InvariantReport,
    albertson,
    first_zagreb,
    max_degree,
    report,
    sigma,
    total_irregularity,
)
from .transformations import hill_climb, select_max_diff_edge, shift_neighbors

__version__ = "0.1.0"
