"""Closed-form upper bounds and the exact identities behind them.

Every function here returns plain Python integers so results can be
compared against direct invariant computation without tolerance.
"""

from __future__ import annotations

import enum
from collections.abc import Callable
from dataclasses import dataclass

from .graph import Graph, GraphError, delete_vertex, is_connected, neighborhoods
from .invariants import first_zagreb, sigma


class BoundName(enum.Enum):
    LEMMA1_SIGMA = "lemma1"
    LEMMA3_ZAGREB = "lemma3"
    THEOREM1_SIGMA = "theorem1"


def lemma1_bound(m: int) -> int:
    """Largest sigma of a graph with ``m`` edges on at least ``m + 1`` vertices."""
    if m < 0:
        raise GraphError("size must be non-negative")
    return m * (m - 1) ** 2


def zagreb_bound(m: int) -> int:
    """Largest first Zagreb index of a graph with ``m`` edges on at least ``m + 1`` vertices."""
    if m < 1:
        raise GraphError("zagreb bound needs m >= 1")
    return m * (m + 1)


def theorem_bound(n: int, k: int) -> int:
    """Largest sigma over connected graphs of order ``n`` with ``n + k - 1`` edges."""
    if n < 4 or not 0 <= k <= n - 2:
        raise GraphError(f"theorem bound needs n >= 4 and 0 <= k <= n-2, got n={n}, k={k}")
    return (n - 1) * (n - 2) ** 2 - 2 * k * (2 * n - 5) + k * k * (k - 1)


@dataclass(frozen=True)
class BoundSpec:
    name: BoundName
    parameters: tuple[str, ...]
    domain: str
    evaluate: Callable[..., int]


BOUNDS: dict[BoundName, BoundSpec] = {
    BoundName.LEMMA1_SIGMA: BoundSpec(
        BoundName.LEMMA1_SIGMA, ("m",), "m >= 0", lemma1_bound),
    BoundName.LEMMA3_ZAGREB: BoundSpec(
        BoundName.LEMMA3_ZAGREB, ("m",), "m >= 1", zagreb_bound),
    BoundName.THEOREM1_SIGMA: BoundSpec(
        BoundName.THEOREM1_SIGMA, ("n", "k"), "n >= 4, 0 <= k <= n-2", theorem_bound),
}


def lookup_bound(name: str) -> BoundSpec:
    """Find a bound by its short name (``theorem1``) or enum name (``THEOREM1_SIGMA``)."""
    for key, spec in BOUNDS.items():
        if name in (key.value, key.name) or name.upper() == key.name:
            return spec
    raise KeyError(f"unknown bound {name!r}; choose from {[k.value for k in BOUNDS]}")


def edge_removal_delta(g: Graph, u: int, v: int) -> int:
    """``sigma(g) - sigma(g - uv)`` from the degrees of ``g`` alone.

    Only the edges at ``u`` and ``v`` change, each losing one unit of
    endpoint degree; the ``(X, Y, Z)`` split of the neighbourhoods counts
    common neighbours twice.
    """
    d = g.degrees()
    if d[u] < d[v]:
        u, v = v, u
    x, y, z = neighborhoods(g, u, v)
    du, dv = d[u], d[v]
    return (
        (du - dv) ** 2
        + sum(2 * (du - d[w]) - 1 for w in x)
        + sum(2 * (dv - d[w]) - 1 for w in y)
        + 2 * sum((du - d[w]) + (dv - d[w]) - 1 for w in z)
    )


def phi(t1: int, t2: int, cap: int) -> int:
    """``(t1 - t2)**2 + (t1 + t2 - 2) * (2 * (t1 - t2) - 1)`` on ``cap >= t1 >= t2 >= 1, t1 >= 2``."""
    if not (cap >= t1 >= t2 >= 1 and t1 >= 2):
        raise GraphError(f"phi undefined at t1={t1}, t2={t2}, cap={cap}")
    diff = t1 - t2
    return diff * diff + (t1 + t2 - 2) * (2 * diff - 1)


def dominating_decomposition(g: Graph, v: int) -> tuple[int, int, int]:
    """Split ``sigma(g)`` around a dominating vertex ``v``.

    Returns ``(base, zagreb_part, sigma_part)`` where ``base`` depends only on
    ``n`` and ``k`` and the other two are the first Zagreb and sigma indices
    of ``g - v``. The three always sum to ``sigma(g)``.
    """
    n = g.order
    if not is_connected(g):
        raise GraphError("graph must be connected")
    if g.rows[v].bit_count() != n - 1:
        raise GraphError(f"vertex {v} is not dominating")
    k = g.size - n + 1
    rest = delete_vertex(g, v)
    base = (n - 1) * (n - 2) ** 2 - 4 * k * (n - 2)
    return base, first_zagreb(rest), sigma(rest)
