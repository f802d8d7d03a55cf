"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
terminal summary, and then asserts at the stated (zero) tolerance."""

import os
import random
import time

import pytest

from sigmax import constructions as C
from sigmax.bounds import (
    dominating_decomposition,
    edge_removal_delta,
    phi,
    theorem_bound,
)
from sigmax.enumeration import generate_augmented, random_kcyclic, verify_lemma1, verify_lemma3, verify_theorem1
from sigmax.graph import Graph, is_connected
from sigmax.graph6 import parse_graph6, write_graph6
from sigmax.invariants import first_zagreb, sigma
from sigmax.transformations import hill_climb, moved_neighbors, shift_neighbors

import oracles
from conftest import ACCEPTANCE_LINES

SEED = 1729


def record(number, title, ok, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}" + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {number} failed: {detail}"


def _connected_classes(n):
    for m in range(n - 1, n * (n - 1) // 2 + 1):
        yield from generate_augmented(n, m, connected_only=True)


def _random_graph(rng, max_n=16):
    n = rng.randint(1, max_n)
    return Graph.from_edges(n, oracles.random_edges(rng, n, rng.random()))


@pytest.mark.slow
def test_01_theorem1_certification():
    start = time.perf_counter()
    failures = []
    runs = 0
    for n in range(4, 9):
        for k in range(n - 1):
            cert = verify_theorem1(n, k)
            runs += 1
            expected = theorem_bound(n, k)
            if not (cert.max_found == expected and cert.unique and cert.matches_paper):
                failures.append((n, k, cert.max_found, expected, cert.maximizers))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300
    record(1, "Theorem 1 max sigma = closed form, unique maximizer H_{n,k}, 4<=n<=8",
           ok, f"{runs} certificates, {len(failures)} failures, {elapsed:.1f}s")


@pytest.mark.skipif(not os.environ.get("SIGMAX_N9"), reason="set SIGMAX_N9=1 for the optional n = 9 sweep")
def test_01b_theorem1_order_nine():
    workers = os.cpu_count() or 1
    certs = [verify_theorem1(9, k, cap=9, workers=workers) for k in range(8)]
    assert all(c.matches_paper for c in certs)


@pytest.mark.slow
def test_02_lemma1_certification():
    start = time.perf_counter()
    failures = []
    for n in range(1, 9):
        for m in range(n):
            cert = verify_lemma1(n, m)
            if not (cert.max_found == m * (m - 1) ** 2 and cert.matches_paper):
                failures.append((n, m, cert.maximizers))
    elapsed = time.perf_counter() - start
    record(2, "Lemma 1 max sigma = m(m-1)^2, equality exactly at edgeless / S_{m+1}+isolated, n<=8",
           not failures and elapsed < 120, f"{len(failures)} failures, {elapsed:.1f}s")


@pytest.mark.slow
def test_03_lemma3_certification():
    start = time.perf_counter()
    bound_failures, equality_failures = [], []
    for n in range(2, 9):
        for m in range(1, n):
            cert = verify_lemma3(n, m)
            if cert.max_found != m * (m + 1):
                bound_failures.append((n, m))
            elif not cert.matches_paper:
                equality_failures.append((n, m, len(cert.maximizers)))
    elapsed = time.perf_counter() - start
    detail = (f"bound holds with equality everywhere: {not bound_failures}; "
              f"equality class differs from S_{{m+1}}+isolated at (n, m, #maximizers) = {equality_failures}; "
              f"{elapsed:.1f}s")
    record(3, "Lemma 3 max M1 = m(m+1), equality exactly at S_{m+1}+isolated, n<=8",
           not bound_failures and not equality_failures and elapsed < 120, detail)


def test_04_edge_removal_identity():
    rng = random.Random(SEED)
    checked = mismatches = 0
    while checked < 10_000:
        n = rng.randint(2, 16)
        edges = oracles.random_edges(rng, n, rng.random())
        if not edges:
            continue
        u, v = rng.choice(edges)
        rest = [e for e in edges if e != (u, v)]
        checked += 1
        if edge_removal_delta(Graph.from_edges(n, edges), u, v) != oracles.sigma(n, edges) - oracles.sigma(n, rest):
            mismatches += 1
    record(4, "edge-removal delta = sigma(G) - sigma(G-uv)", mismatches == 0,
           f"{checked} random (graph, edge) pairs, n<=16, {mismatches} mismatches")


def test_05_dominating_decomposition():
    exhaustive = mismatches = 0
    for n in range(2, 8):
        for g in _connected_classes(n):
            d = g.degrees()
            for v in range(n):
                if d[v] == n - 1:
                    exhaustive += 1
                    mismatches += sum(dominating_decomposition(g, v)) != oracles.sigma(n, g.edges())
    rng = random.Random(SEED)
    for i in range(1000):
        n = rng.randint(8, 16)
        g = random_kcyclic(n, rng.randint(0, n * (n - 1) // 2 - n + 1), seed=SEED + i)
        hub = rng.randrange(n)
        for w in range(n):
            if w != hub and not g.has_edge(hub, w):
                g = g.add_edge(hub, w)
        mismatches += sum(dominating_decomposition(g, hub)) != oracles.sigma(n, g.edges())
    record(5, "dominating-vertex decomposition sums to sigma", mismatches == 0,
           f"{exhaustive} exhaustive (n<=7) + 1000 random, {mismatches} mismatches")


def _shift_violations(g):
    bad = 0
    d = g.degrees()
    top = max(d)
    s = sigma(g)
    for v in range(g.order):
        if d[v] != top:
            continue
        for vp in g.neighbors(v):
            if moved_neighbors(g, v, vp):
                h = shift_neighbors(g, v, vp)
                bad += not (sigma(h) > s and is_connected(h) and h.size == g.size)
    return bad


def _climb_violations(g):
    trace = hill_climb(g)
    n = g.order
    ok = trace.final.max_degree == n - 1 and len(trace.steps) <= n - 1 - max(g.degrees())
    sigmas = [sigma(g)] + [step.sigma for step in trace.steps]
    ok = ok and all(a < b for a, b in zip(sigmas, sigmas[1:]))
    return 0 if ok else 1


def test_06_neighbor_shift_strict_increase():
    exhaustive = violations = 0
    for n in range(2, 8):
        for g in _connected_classes(n):
            if max(g.degrees()) < n - 1:
                exhaustive += 1
                violations += _shift_violations(g) + _climb_violations(g)
    rng = random.Random(SEED)
    sampled = 0
    for i in range(10_000):
        n = rng.randint(4, 16)
        g = random_kcyclic(n, rng.randint(0, min(2 * n, n * (n - 1) // 2 - n + 1)), seed=SEED + i)
        if max(g.degrees()) < n - 1:
            sampled += 1
            violations += _shift_violations(g) + _climb_violations(g)
    record(6, "neighbour shift from a max-degree vertex strictly raises sigma; climb reaches Delta=n-1",
           violations == 0, f"{exhaustive} exhaustive (n<=7) + {sampled} random with Delta<n-1, {violations} violations")


def test_07_parity_and_vanishing():
    corpus = []
    for n in range(1, 7):
        corpus.extend((n, edges) for edges in oracles.labeled_graphs(n))
    exhaustive = len(corpus)
    rng = random.Random(SEED)
    for _ in range(10_000):
        g = _random_graph(rng)
        corpus.append((g.order, g.edges()))
    odd = wrong = 0
    for n, edges in corpus:
        s = sigma(Graph.from_edges(n, edges))
        odd += s % 2
        wrong += (s == 0) != oracles.all_components_regular(n, edges)
    record(7, "sigma even; sigma = 0 iff every component regular", odd == 0 and wrong == 0,
           f"{exhaustive} labeled graphs n<=6 + 10000 random, {odd} odd, {wrong} vanishing mismatches")


def test_08_closed_forms():
    bad = 0
    for n in range(4, 31):
        for k in range(n - 1):
            bad += sigma(C.h_graph(n, k)) != theorem_bound(n, k)
    for n in range(1, 31):
        for m in range(n):
            g = C.star_plus_isolated(n, m)
            bad += sigma(g) != m * (m - 1) ** 2
            bad += first_zagreb(g) != m * (m + 1)
    record(8, "closed forms match H_{n,k} (n<=30) and S_{m+1}+isolated (n<=30)", bad == 0, f"{bad} mismatches")


REFERENCE_GRAPH6 = [
    ("Bw", C.complete(3)),
    ("@", Graph.empty(1)),
    ("C~", C.complete(4)),
    ("Cs", C.star(4)),
    ("Ch", C.path(4)),
    ("Cl", C.cycle(4)),
    ("D}_", C.h_graph(5, 2)),
]


def test_09_graph6_codec():
    rng = random.Random(SEED)
    roundtrip_bad = 0
    for _ in range(1000):
        g = _random_graph(rng)
        roundtrip_bad += parse_graph6(write_graph6(g)) != g
    ref_bad = sum(write_graph6(g) != text or parse_graph6(text) != g for text, g in REFERENCE_GRAPH6)
    record(9, "graph6 round trip and reference encodings", roundtrip_bad == 0 and ref_bad == 0,
           f"1000 random, {len(REFERENCE_GRAPH6)} references, {roundtrip_bad + ref_bad} failures")


def test_10_phi_monotone():
    cap = 40
    bad = checked = 0
    for t1 in range(2, cap + 1):
        for t2 in range(1, t1 + 1):
            if t1 + 1 <= cap:
                checked += 1
                bad += not phi(t1 + 1, t2, cap) > phi(t1, t2, cap)
            if t2 + 1 <= t1:
                checked += 1
                bad += not phi(t1, t2 + 1, cap) < phi(t1, t2, cap)
    record(10, "phi strictly increasing in t1, strictly decreasing in t2, t<=40", bad == 0,
           f"{checked} comparisons, {bad} violations")
