"""graph6 reader and writer for graphs of order at most 62."""

from __future__ import annotations

from .graph import MAX_ORDER, Graph, GraphError


class Graph6Error(GraphError):
    """Malformed graph6 text."""


def _pairs(n: int):
    # upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def write_graph6(g: Graph) -> str:
    bits = [g.rows[i] >> j & 1 for i, j in _pairs(g.order)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.order + 63)]
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"character out of range 63..126 in {text!r}")
    n = codes[0]
    if n == 63:
        raise Graph6Error("multi-byte order headers (n > 62) are not supported")
    if not 1 <= n <= MAX_ORDER:
        raise Graph6Error(f"unsupported order {n}")
    nbits = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != -(-nbits // 6):
        raise Graph6Error(f"expected {-(-nbits // 6)} data bytes for n={n}, got {len(body)}")
    bits = [c >> shift & 1 for c in body for shift in range(5, -1, -1)]
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    edges = [pair for pair, bit in zip(_pairs(n), bits) if bit]
    return Graph.from_edges(n, edges)
