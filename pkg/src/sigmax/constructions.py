"""Deterministic builders for the named graphs used in this package."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, GraphError


class Family(enum.Enum):
    STAR = "star"
    STAR_PLUS_ISOLATED = "star-plus-isolated"
    H_NK = "h-graph"
    CYCLE = "cycle"
    COMPLETE = "complete"
    PATH = "path"


@dataclass(frozen=True)
class ExtremalFamilySpec:
    family: Family
    n: int
    k: int | None = None

    def build(self) -> Graph:
        if self.family is Family.STAR:
            return star(self.n)
        if self.family is Family.STAR_PLUS_ISOLATED:
            return star_plus_isolated(self.n, self._param())
        if self.family is Family.H_NK:
            return h_graph(self.n, self._param())
        if self.family is Family.CYCLE:
            return cycle(self.n)
        if self.family is Family.COMPLETE:
            return complete(self.n)
        return path(self.n)

    def _param(self) -> int:
        if self.k is None:
            raise GraphError(f"{self.family.value} needs a second parameter")
        return self.k


def star(n: int) -> Graph:
    """``S_n``: vertex 0 joined to every other vertex."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return Graph.from_edges(n, ((0, j) for j in range(1, n)))


def star_plus_isolated(n: int, m: int) -> Graph:
    """``S_{m+1}`` on vertices ``0..m`` (centre 0) plus ``n-m-1`` isolated vertices."""
    if n < 1 or not 0 <= m <= n - 1:
        raise GraphError(f"need 0 <= m <= n-1, got n={n}, m={m}")
    return Graph.from_edges(n, ((0, j) for j in range(1, m + 1)))


def h_graph(n: int, k: int) -> Graph:
    """The star ``S_n`` with pendant 1 joined to the pendants ``2..k+1``.

    Centre 0 keeps degree ``n-1``; ``h_graph(n, 0)`` is ``star(n)``.
    """
    if n < 4 or not 0 <= k <= n - 2:
        raise GraphError(f"h_graph needs n >= 4 and 0 <= k <= n-2, got n={n}, k={k}")
    edges = [(0, j) for j in range(1, n)] + [(1, j) for j in range(2, k + 2)]
    return Graph.from_edges(n, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
