"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored as one integer bitmask per vertex, which keeps the
small dense graphs used throughout this package cheap to copy and hash.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

MAX_ORDER = 62


class GraphError(ValueError):
    """Raised on invalid vertices, edges or graph parameters."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with contiguous 0-based vertex labels.

    ``rows[v]`` is a bitmask whose bit ``w`` is set iff ``vw`` is an edge.
    Instances are immutable; every edit returns a new graph.
    """

    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.order <= MAX_ORDER:
            raise GraphError(f"order must lie in 1..{MAX_ORDER}, got {self.order}")
        if len(self.rows) != self.order:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise GraphError(f"row {v} has out-of-range bits or a self-loop")
            for w in _bits(row):
                if not self.rows[w] >> v & 1:
                    raise GraphError(f"adjacency is not symmetric at {v}-{w}")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge {u}-{v} out of range for order {order}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    @classmethod
    def empty(cls, order: int) -> Graph:
        return cls(order, (0,) * order)

    @classmethod
    def _trusted(cls, order: int, rows: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee a valid adjacency
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "rows", rows)
        return g

    @property
    def n(self) -> int:
        return self.order

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    m = size

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, w) for u, row in enumerate(self.rows) for w in _bits(row >> (u + 1) << (u + 1))]

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(_bits(self.rows[v]))

    def add_edge(self, u: int, v: int) -> Graph:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if self.rows[u] >> v & 1:
            raise GraphError(f"{u}-{v} is already an edge")
        return self._toggled(u, v)

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Return the image graph in which vertex ``v`` becomes ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.order)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph.from_edges(self.order, ((perm[u], perm[v]) for u, v in self.edges()))

    def _toggled(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        return Graph._trusted(self.order, tuple(rows))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise GraphError(f"vertex {v} out of range for order {self.order}")

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def degree(g: Graph, v: int) -> int:
    g._check_vertex(v)
    return g.rows[v].bit_count()


def neighborhoods(g: Graph, u: int, v: int) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Split the neighbourhoods of the edge ``uv`` into ``(X, Y, Z)``.

    ``Z`` holds the common neighbours, ``X`` the private neighbours of ``u``
    other than ``v`` and ``Y`` those of ``v`` other than ``u``.
    """
    if not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    nu, nv = g.rows[u], g.rows[v]
    z = nu & nv
    x = nu & ~z & ~(1 << v)
    y = nv & ~z & ~(1 << u)
    return frozenset(_bits(x)), frozenset(_bits(y)), frozenset(_bits(z))


def is_connected(g: Graph) -> bool:
    seen = frontier = 1
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= g.rows[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << g.order) - 1


def cyclomatic_number(g: Graph) -> int:
    """Return ``k = m - n + 1`` for a connected graph."""
    if not is_connected(g):
        raise GraphError("cyclomatic number is only defined here for connected graphs")
    return g.size - g.order + 1


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; vertices above ``v`` shift down by one."""
    g._check_vertex(v)
    if g.order == 1:
        raise GraphError("cannot delete the only vertex")
    low = (1 << v) - 1
    rows = []
    for w, row in enumerate(g.rows):
        if w != v:
            rows.append((row & low) | (row >> (v + 1) << v))
    return Graph._trusted(g.order - 1, tuple(rows))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    return g._toggled(u, v)
