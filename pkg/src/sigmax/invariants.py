"""Degree-based irregularity indices, computed with exact integer arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .graph import Graph, is_connected


def sigma(g: Graph) -> int:
    """Sum of ``(d_u - d_v)**2`` over the edges of ``g``."""
    d = g.degrees()
    return sum((d[u] - d[v]) ** 2 for u, v in g.edges())


def albertson(g: Graph) -> int:
    """Sum of ``|d_u - d_v|`` over the edges of ``g``."""
    d = g.degrees()
    return sum(abs(d[u] - d[v]) for u, v in g.edges())


def total_irregularity(g: Graph) -> int:
    """Sum of ``|d_u - d_v|`` over all unordered pairs of vertices."""
    d = sorted(g.degrees())
    # with sorted degrees, d[i] contributes +i times and -(n-1-i) times
    n = len(d)
    return sum((2 * i - n + 1) * x for i, x in enumerate(d))


def first_zagreb(g: Graph) -> int:
    return sum(x * x for x in g.degrees())


def max_degree(g: Graph) -> int:
    return max(g.degrees())


@dataclass(frozen=True)
class InvariantReport:
    order: int
    size: int
    cyclomatic: int | None
    sigma: int
    albertson: int
    total_irregularity: int
    first_zagreb: int
    max_degree: int
    degree_sequence: tuple[int, ...]
    connected: bool

    def to_dict(self) -> dict[str, Any]:
        """Flat JSON-ready mapping; ``cyclomatic`` is left out for disconnected graphs."""
        out: dict[str, Any] = {"order": self.order, "size": self.size}
        if self.cyclomatic is not None:
            out["cyclomatic"] = self.cyclomatic
        out.update(
            sigma=self.sigma,
            albertson=self.albertson,
            total_irregularity=self.total_irregularity,
            first_zagreb=self.first_zagreb,
            max_degree=self.max_degree,
            degree_sequence=list(self.degree_sequence),
            connected=self.connected,
        )
        return out


def report(g: Graph) -> InvariantReport:
    connected = is_connected(g)
    return InvariantReport(
        order=g.order,
        size=g.size,
        cyclomatic=g.size - g.order + 1 if connected else None,
        sigma=sigma(g),
        albertson=albertson(g),
        total_irregularity=total_irregularity(g),
        first_zagreb=first_zagreb(g),
        max_degree=max_degree(g),
        degree_sequence=g.degrees(),
        connected=connected,
    )
