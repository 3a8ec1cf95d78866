"""graph6 encoding and decoding.

Format: ``N(n) R(x)`` where ``N(n)`` is the vertex count and ``R(x)`` packs
the upper triangle of the adjacency matrix, column by column
((0,1), (0,2), (1,2), (0,3), ...), six bits per printable byte (value + 63).
"""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 68719476735


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


def _encode_order(n: int) -> str:
    if n < 0:
        raise Graph6Error(f"negative order {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= MAX_ORDER:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Error(f"order {n} too large for graph6")


def _sextets(text: str, start: int, count: int) -> int:
    value = 0
    for i in range(start, start + count):
        if i >= len(text):
            raise Graph6Error("truncated size field", i)
        c = ord(text[i]) - 63
        if not 0 <= c <= 63:
            raise Graph6Error(f"illegal character {text[i]!r}", i)
        value = (value << 6) | c
    return value


def _decode_order(text: str) -> tuple[int, int]:
    """Return (order, offset of the first adjacency byte)."""
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    if text[0] != "~":
        return _sextets(text, 0, 1), 1
    if len(text) > 1 and text[1] == "~":
        return _sextets(text, 2, 6), 8
    return _sextets(text, 1, 3), 4


def write_graph6(g: Graph) -> str:
    """Canonical graph6 line for ``g``, without header or newline."""
    n = g.order
    out = [_encode_order(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        nbrs = g.neighbors[j]
        for i in range(j):
            acc = (acc << 1) | (i in nbrs)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; a leading ``>>graph6<<`` header is accepted."""
    line = text.strip()
    base = 0
    if line.startswith(HEADER):
        line = line[len(HEADER):]
        base = len(HEADER)
    n, pos = _decode_order(line)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = line[pos:]
    if len(body) < need:
        raise Graph6Error(
            f"truncated adjacency bits: order {n} needs {need} bytes, got {len(body)}", base + pos + len(body)
        )
    if len(body) > need:
        raise Graph6Error(f"{len(body) - need} trailing bytes after adjacency data", base + pos + need)

    adj: list[set[int]] = [set() for _ in range(n)]
    i, j = 0, 1
    for k, ch in enumerate(body):
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise Graph6Error(f"illegal character {ch!r}", base + pos + k)
        for b in range(5, -1, -1):
            bit = (c >> b) & 1
            if j >= n:
                if bit:
                    raise Graph6Error("nonzero padding bits", base + pos + k)
                continue
            if bit:
                adj[i].add(j)
                adj[j].add(i)
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(frozenset(s) for s in adj))
