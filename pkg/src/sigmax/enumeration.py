"""Isomorph-free generation of small graphs and exhaustive extremal sweeps.

The fast generator is canonical augmentation by edge addition: from each
graph one non-edge per automorphism orbit is added, and a child is kept
only if the added edge lies in the orbit of the child's canonical last
edge.  Every isomorphism class of a given order and size is produced
exactly once.  A labeled generate-and-dedupe generator is kept as the
obviously-correct reference for small orders.
"""

from __future__ import annotations

import enum
import random
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .bounds import lemma1_bound, theorem_bound, zagreb_bound
from .canon import Labeling, canonical_form, canonical_labeling, pair_orbit
from .constructions import h_graph, star_plus_isolated
from .graph import Graph, GraphError, is_connected
from .graph6 import write_graph6
from .invariants import first_zagreb, sigma

DEFAULT_CAP = 9
HARD_CAP = 12
LABELED_CAP = 7


class CapExceeded(GraphError):
    """Requested order is above the enumeration cap."""


class Claim(enum.Enum):
    LEMMA1 = "lemma1"
    LEMMA3_ZAGREB = "lemma3"
    THEOREM1 = "theorem1"


def _check_order(n: int, cap: int) -> None:
    if cap > HARD_CAP:
        raise CapExceeded(f"cap {cap} exceeds the hard limit {HARD_CAP}")
    if not 1 <= n <= cap:
        raise CapExceeded(f"order {n} outside 1..{cap}")


def _complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph._trusted(g.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def _components(g: Graph) -> int:
    unseen = (1 << g.order) - 1
    count = 0
    while unseen:
        frontier = seen = unseen & -unseen
        while frontier:
            reach = 0
            while frontier:
                low = frontier & -frontier
                reach |= g.rows[low.bit_length() - 1]
                frontier ^= low
            frontier = reach & ~seen
            seen |= frontier
        unseen &= ~seen
        count += 1
    return count


def _orbit_representatives(g: Graph, lab: Labeling) -> list[tuple[int, int]]:
    reps = []
    covered: set[tuple[int, int]] = set()
    for i, j in combinations(range(g.order), 2):
        if g.rows[i] >> j & 1 or (i, j) in covered:
            continue
        reps.append((i, j))
        covered |= pair_orbit(lab.generators, (i, j))
    return reps


def _is_canonical_child(h: Graph, edge: tuple[int, int], lab: Labeling) -> bool:
    perm = lab.perm
    last = max(h.edges(), key=lambda e: (max(perm[e[0]], perm[e[1]]), min(perm[e[0]], perm[e[1]])))
    return edge in pair_orbit(lab.generators, last)


def _children(g: Graph, lab: Labeling) -> Iterator[tuple[Graph, Labeling]]:
    for i, j in _orbit_representatives(g, lab):
        h = g._toggled(i, j)
        hlab = canonical_labeling(h)
        if _is_canonical_child(h, (i, j), hlab):
            yield h, hlab


def _grow(g: Graph, lab: Labeling, target: int, connected: bool) -> Iterator[Graph]:
    m = g.size
    if connected and target - m < _components(g) - 1:
        return
    if m == target:
        if not connected or is_connected(g):
            yield g
        return
    for h, hlab in _children(g, lab):
        yield from _grow(h, hlab, target, connected)


def generate_augmented(n: int, m: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class, by canonical augmentation."""
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise GraphError(f"size {m} outside 0..{total}")
    if 2 * m > total:
        for g in generate_augmented(n, total - m):
            h = _complement(g)
            if not connected_only or is_connected(h):
                yield h
        return
    root = Graph.empty(n)
    yield from _grow(root, canonical_labeling(root), m, connected_only)


def generate_labeled(n: int, m: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per class by canonicalizing every labeled graph."""
    if n > LABELED_CAP:
        raise CapExceeded(f"labeled generation is limited to n <= {LABELED_CAP}")
    seen: set[bytes] = set()
    for edges in combinations(combinations(range(n), 2), m):
        g = Graph.from_edges(n, edges)
        if connected_only and not is_connected(g):
            continue
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g


def enumerate_graphs(
    n: int,
    m: int,
    connected_only: bool,
    visitor: Callable[[Graph], Any],
    cap: int = DEFAULT_CAP,
    method: str = "augment",
) -> int:
    """Call ``visitor`` once per isomorphism class of ``(n, m)`` graphs; return the class count."""
    _check_order(n, cap)
    gen = {"augment": generate_augmented, "labeled": generate_labeled}[method]
    count = 0
    for g in gen(n, m, connected_only):
        visitor(g)
        count += 1
    return count


@dataclass
class Partial:
    """Mergeable summary of a sweep: class count, best score, argmax classes."""

    count: int = 0
    best: int | None = None
    maximizers: set[bytes] = field(default_factory=set)

    def add(self, g: Graph, score: int) -> None:
        self.count += 1
        if self.best is None or score > self.best:
            self.best = score
            self.maximizers = {canonical_form(g)}
        elif score == self.best:
            self.maximizers.add(canonical_form(g))

    def merge(self, other: Partial) -> Partial:
        out = Partial(self.count + other.count, self.best, set(self.maximizers))
        if other.best is None:
            return out
        if out.best is None or other.best > out.best:
            out.best, out.maximizers = other.best, set(other.maximizers)
        elif other.best == out.best:
            out.maximizers |= other.maximizers
        return out


_SCORES: dict[str, Callable[[Graph], int]] = {"sigma": sigma, "first_zagreb": first_zagreb}


def _sweep_subtree(args) -> Partial:
    g, target, connected, score_name = args
    score = _SCORES[score_name]
    part = Partial()
    for h in _grow(g, canonical_labeling(g), target, connected):
        part.add(h, score(h))
    return part


def sweep(n: int, m: int, connected_only: bool, score: str = "sigma", workers: int = 1) -> Partial:
    """Fold ``score`` over every class of ``(n, m)`` graphs.

    With ``workers > 1`` the augmentation tree is cut at a shallow level and
    the subtrees are farmed out; the merged result does not depend on the
    worker count.
    """
    total = n * (n - 1) // 2
    fn = _SCORES[score]
    if workers <= 1 or 2 * m > total or m < 3:
        part = Partial()
        for g in generate_augmented(n, m, connected_only):
            part.add(g, fn(g))
        return part
    # cut deep enough that there are several subtrees per worker
    level = [(Graph.empty(n), canonical_labeling(Graph.empty(n)))]
    depth = 0
    while depth < m - 1 and len(level) < 8 * workers:
        level = [child for g, lab in level for child in _children(g, lab)]
        depth += 1
    tasks = [(g, m, connected_only, score) for g, _ in level]
    result = Partial()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_sweep_subtree, tasks):
            result = result.merge(part)
    return result


@dataclass
class VerificationCertificate:
    claim: Claim
    parameters: dict[str, int]
    graphs_examined: int
    bound_value: int
    max_found: int
    maximizers: list[str]
    expected_maximizer: str
    matches_paper: bool
    wall_time: float = 0.0

    @property
    def unique(self) -> bool:
        return len(self.maximizers) == 1

    def to_dict(self, stable: bool = False) -> dict[str, Any]:
        out = {
            "claim": self.claim.value,
            "parameters": dict(self.parameters),
            "graphs_examined": self.graphs_examined,
            "bound_value": self.bound_value,
            "max_found": self.max_found,
            "maximizers": list(self.maximizers),
            "unique": self.unique,
            "expected_maximizer": self.expected_maximizer,
            "matches_paper": self.matches_paper,
        }
        if not stable:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def _certify(claim, params, n, m, connected, score, bound, expected, workers) -> VerificationCertificate:
    start = time.perf_counter()
    part = sweep(n, m, connected, score, workers)
    maximizers = sorted(key.decode("ascii") for key in part.maximizers)
    expected_key = canonical_form(expected).decode("ascii")
    matches = part.best == bound and maximizers == [expected_key]
    return VerificationCertificate(
        claim=claim,
        parameters=params,
        graphs_examined=part.count,
        bound_value=bound,
        max_found=part.best,
        maximizers=maximizers,
        expected_maximizer=write_graph6(expected),
        matches_paper=matches,
        wall_time=time.perf_counter() - start,
    )


def verify_theorem1(n: int, k: int, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationCertificate:
    """Maximum sigma over connected ``(n, n+k-1)`` graphs versus the closed form."""
    _check_order(n, cap)
    if n < 4 or not 0 <= k <= n - 2:
        raise GraphError(f"theorem1 needs n >= 4 and 0 <= k <= n-2, got n={n}, k={k}")
    return _certify(Claim.THEOREM1, {"n": n, "k": k}, n, n + k - 1, True, "sigma",
                    theorem_bound(n, k), h_graph(n, k), workers)


def verify_lemma1(n: int, m: int, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationCertificate:
    """Maximum sigma over all ``(n, m)`` graphs, disconnected ones included."""
    _check_order(n, cap)
    if not 0 <= m <= n - 1:
        raise GraphError(f"lemma1 needs 0 <= m <= n-1, got n={n}, m={m}")
    return _certify(Claim.LEMMA1, {"n": n, "m": m}, n, m, False, "sigma",
                    lemma1_bound(m), star_plus_isolated(n, m), workers)


def verify_lemma3(n: int, m: int, cap: int = DEFAULT_CAP, workers: int = 1) -> VerificationCertificate:
    """Maximum first Zagreb index over all ``(n, m)`` graphs."""
    _check_order(n, cap)
    if not 1 <= m <= n - 1:
        raise GraphError(f"lemma3 needs 1 <= m <= n-1, got n={n}, m={m}")
    return _certify(Claim.LEMMA3_ZAGREB, {"n": n, "m": m}, n, m, False, "first_zagreb",
                    zagreb_bound(m), star_plus_isolated(n, m), workers)


def random_tree(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform labeled spanning tree of ``K_n`` via a random Prüfer sequence."""
    if n <= 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    for x in seq:
        leaf = deg.index(1)
        edges.append((min(leaf, x), max(leaf, x)))
        deg[leaf] -= 1
        deg[x] -= 1
    u, v = (i for i in range(n) if deg[i] == 1)
    edges.append((u, v))
    return edges


def random_kcyclic(n: int, k: int, seed: int) -> Graph:
    """Connected graph with ``n + k - 1`` edges: random tree plus ``k`` random chords."""
    if n < 1:
        raise GraphError("order must be positive")
    spare = n * (n - 1) // 2 - (n - 1)
    if not 0 <= k <= spare:
        raise GraphError(f"k must lie in 0..{spare} for n={n}, got {k}")
    rng = random.Random(seed)
    tree = random_tree(n, rng)
    used = set(tree)
    others = [p for p in combinations(range(n), 2) if p not in used]
    return Graph.from_edges(n, tree + rng.sample(others, k))
