"""Exact canonical labeling by partition refinement and backtracking.

The search individualizes vertices of the first non-singleton cell of an
equitable ordered partition, refines, and keeps the leaf whose relabeled
adjacency (graph6 bit order) is smallest.  Automorphisms discovered at
leaves prune the tree: siblings in the same orbit of the pointwise
stabilizer of the current prefix are skipped, and a leaf equivalent to an
earlier one aborts the search back to where the two paths diverged.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import Graph
from .graph6 import write_graph6

CanonicalForm = bytes


@dataclass(frozen=True)
class Labeling:
    """Result of a canonical labeling run.

    ``order[i]`` is the vertex that receives canonical label ``i``;
    ``generators`` generate the automorphism group of the input graph.
    """

    order: tuple[int, ...]
    code: int
    generators: tuple[tuple[int, ...], ...]

    @property
    def perm(self) -> tuple[int, ...]:
        """Map from input vertex to canonical label."""
        p = [0] * len(self.order)
        for i, v in enumerate(self.order):
            p[v] = i
        return tuple(p)


def refine(rows: tuple[int, ...], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Refine an ordered partition until it is equitable.

    Each cell is split by the vector of neighbour counts into every cell and
    the fragments are ordered by that vector, so the result depends only on
    the structure, never on the vertex names.
    """
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[tuple[int, ...]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = rows[v]
                key = tuple((row & mk).bit_count() for mk in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                out.extend(tuple(groups[key]) for key in sorted(groups))
        cells = out
        if not changed:
            return cells


def _code(rows: tuple[int, ...], lab: list[int]) -> int:
    code = 0
    for j in range(1, len(lab)):
        vj = lab[j]
        for i in range(j):
            code = code << 1 | (rows[lab[i]] >> vj & 1)
    return code


class _Search:
    def __init__(self, g: Graph):
        self.rows = g.rows
        self.n = g.order
        self.first: tuple[list[int], int, list[int]] | None = None
        self.best: tuple[list[int], int, list[int]] | None = None
        self.generators: list[tuple[int, ...]] = []

    def run(self) -> Labeling:
        cells = refine(self.rows, [tuple(range(self.n))])
        self._node(cells, [])
        lab, code, _ = self.best
        return Labeling(tuple(lab), code, tuple(self.generators))

    def _node(self, cells, path):
        if len(cells) == self.n:
            return self._leaf(cells, path)
        depth = len(path)
        t = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[t]
        explored: list[int] = []
        for v in target:
            if explored and self._pruned(v, explored, path):
                continue
            rest = tuple(w for w in target if w != v)
            child = refine(self.rows, cells[:t] + [(v,), rest] + cells[t + 1:])
            explored.append(v)
            jump = self._node(child, path + [v])
            if jump is not None and jump < depth:
                return jump
        return None

    def _leaf(self, cells, path):
        lab = [c[0] for c in cells]
        code = _code(self.rows, lab)
        if self.first is None:
            self.first = self.best = (lab, code, path)
            return None
        for ref_lab, ref_code, ref_path in (self.first, self.best):
            if code == ref_code:
                gamma = [0] * self.n
                for a, b in zip(ref_lab, lab):
                    gamma[a] = b
                self.generators.append(tuple(gamma))
                return _common_prefix(path, ref_path)
        if code < self.best[1]:
            self.best = (lab, code, path)
        return None

    def _pruned(self, v: int, explored: list[int], path: list[int]) -> bool:
        gens = [g for g in self.generators if all(g[p] == p for p in path)]
        if not gens:
            return False
        orbit = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        return any(w in orbit for w in explored)


def _common_prefix(a: list[int], b: list[int]) -> int:
    i = 0
    while i < len(a) and i < len(b) and a[i] == b[i]:
        i += 1
    return i


def canonical_labeling(g: Graph) -> Labeling:
    return _Search(g).run()


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g).perm)


def canonical_form(g: Graph) -> CanonicalForm:
    """Bytes that are equal for two graphs iff they are isomorphic."""
    return write_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def orbits(generators, n: int) -> list[int]:
    """Label each vertex with the smallest vertex of its orbit."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def pair_orbit(generators, pair: tuple[int, int]) -> set[tuple[int, int]]:
    """Orbit of an unordered vertex pair under the group the generators span."""
    start = tuple(sorted(pair))
    seen = {start}
    stack = [start]
    while stack:
        a, b = stack.pop()
        for g in generators:
            image = (g[a], g[b]) if g[a] < g[b] else (g[b], g[a])
            if image not in seen:
                seen.add(image)
                stack.append(image)
    return seen


def brute_force_canonical_form(g: Graph) -> CanonicalForm:
    """Smallest graph6 code over all n! relabelings; a test oracle for n <= 8."""
    if g.order > 8:
        raise ValueError("brute-force canonical form is limited to n <= 8")
    best = None
    for lab in permutations(range(g.order)):
        code = _code(g.rows, list(lab))
        if best is None or code < best[0]:
            best = (code, lab)
    p = [0] * g.order
    for i, v in enumerate(best[1]):
        p[v] = i
    return write_graph6(g.relabel(p)).encode("ascii")
