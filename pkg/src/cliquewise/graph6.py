"""graph6 encoding (single-byte size field, n <= 62)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph

MAX_G6_ORDER = 62


class Graph6Error(ValueError):
    pass


def encode(g: Graph) -> str:
    if g.n > MAX_G6_ORDER:
        raise Graph6Error(f"order {g.n} needs a multi-byte size field (max {MAX_G6_ORDER})")
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        chars.append(chr(63 + value))
    return "".join(chars)


def decode(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 line")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"malformed graph6 character {ch!r}")
    n = ord(s[0]) - 63
    if n > MAX_G6_ORDER:
        raise Graph6Error("multi-byte size fields are not supported")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for ch in body:
        value = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k == nbits:
                break
            if value >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def read_lines(stream: TextIO | Iterable[str]) -> Iterator[Graph]:
    for raw in stream:
        if raw.strip():
            yield decode(raw)


def write_lines(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(encode(g) + "\n")
