"""Input coercion helpers shared by the estimators and the CLI."""

from __future__ import annotations

from collections.abc import Iterable

from .graph import Graph, GraphError, is_connected
from .graph6 import parse_graph6


def check_graph(obj, *, connected: bool = False, min_order: int = 1) -> Graph:
    """Coerce a :class:`Graph` or graph6 text/bytes into a :class:`Graph`."""
    if isinstance(obj, Graph):
        g = obj
    elif isinstance(obj, bytes):
        g = parse_graph6(obj.decode("ascii"))
    elif isinstance(obj, str):
        g = parse_graph6(obj)
    else:
        raise TypeError(f"expected a Graph or graph6 string, got {type(obj).__name__}")
    if g.order < min_order:
        raise GraphError(f"graph of order {g.order} is below the minimum {min_order}")
    if connected and not is_connected(g):
        raise GraphError("graph must be connected")
    return g


def check_graphs(X: Iterable, **kwargs) -> list[Graph]:
    """Coerce a non-empty sequence of graphs; see :func:`check_graph`."""
    if isinstance(X, (str, bytes, Graph)):
        raise TypeError("expected a sequence of graphs, got a single graph")
    graphs = [check_graph(x, **kwargs) for x in X]
    if not graphs:
        raise ValueError("found 0 graphs while a minimum of 1 is required")
    return graphs
