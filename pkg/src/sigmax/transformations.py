"""Graph moves that raise the sigma index, and a deterministic climber.

All selection rules break ties by lowest vertex index so traces are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graph import Graph, GraphError, _bits, is_connected
from .graph6 import write_graph6
from .invariants import InvariantReport, report, sigma


def select_max_diff_edge(g: Graph) -> tuple[int, int]:
    """Edge ``(u, v)`` with ``d_u >= d_v`` maximizing ``|d_u - d_v|``.

    Among equal differences the lexicographically smallest edge wins.
    """
    edges = g.edges()
    if not edges:
        raise GraphError("graph has no edges")
    d = g.degrees()
    a, b = max(edges, key=lambda e: (abs(d[e[0]] - d[e[1]]), -e[0], -e[1]))
    return (b, a) if d[b] > d[a] else (a, b)


def moved_neighbors(g: Graph, v: int, vp: int) -> list[int]:
    """Neighbours of ``vp`` that are neither ``v`` nor adjacent to ``v``."""
    return list(_bits(g.rows[vp] & ~g.rows[v] & ~(1 << v)))


def shift_neighbors(g: Graph, v: int, vp: int) -> Graph:
    """Reattach every neighbour of ``vp`` outside ``N[v]`` to ``v``.

    Order, size and connectivity are preserved.  When ``v`` has maximum
    degree the sigma index strictly increases.
    """
    if not g.has_edge(v, vp):
        raise GraphError(f"{vp} is not a neighbour of {v}")
    moving = moved_neighbors(g, v, vp)
    if not moving:
        raise GraphError(f"no neighbour of {vp} can move to {v}")
    rows = list(g.rows)
    for u in moving:
        rows[u] ^= (1 << vp) | (1 << v)
    mask = sum(1 << u for u in moving)
    rows[vp] &= ~mask
    rows[v] |= mask
    return Graph._trusted(g.order, tuple(rows))


@dataclass(frozen=True)
class Step:
    graph6: str
    sigma: int
    v: int
    vp: int
    moved: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"graph6": self.graph6, "sigma": self.sigma, "v": self.v,
                "vp": self.vp, "moved": list(self.moved)}


@dataclass(frozen=True)
class TransformationTrace:
    initial_graph: Graph
    final_graph: Graph
    steps: tuple[Step, ...] = field(default=())

    @property
    def initial(self) -> InvariantReport:
        return report(self.initial_graph)

    @property
    def final(self) -> InvariantReport:
        return report(self.final_graph)

    def to_dict(self) -> dict[str, Any]:
        return {
            "initial_graph6": write_graph6(self.initial_graph),
            "initial": self.initial.to_dict(),
            "steps": [s.to_dict() for s in self.steps],
            "final_graph6": write_graph6(self.final_graph),
            "final": self.final.to_dict(),
        }


def hill_climb(g: Graph) -> TransformationTrace:
    """Shift neighbours onto a maximum-degree vertex until one dominates."""
    if g.order < 2:
        raise GraphError("hill climbing needs n >= 2")
    if not is_connected(g):
        raise GraphError("hill climbing needs a connected graph")
    start = g
    steps = []
    while True:
        d = g.degrees()
        top = max(d)
        if top == g.order - 1:
            break
        v = d.index(top)
        vp = next(w for w in _bits(g.rows[v]) if moved_neighbors(g, v, w))
        moved = tuple(moved_neighbors(g, v, vp))
        g = shift_neighbors(g, v, vp)
        steps.append(Step(write_graph6(g), sigma(g), v, vp, moved))
    return TransformationTrace(start, g, tuple(steps))
