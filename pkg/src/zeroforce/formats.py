"""graph6 and plain edge-list text formats."""

from __future__ import annotations

from .graph import Graph, GraphError

HEADER = ">>graph6<<"


class FormatError(ValueError):
    pass


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return ``(n, bytes consumed)`` for a graph6 size prefix."""
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated 6-character length prefix")
        width, start = 6, 2
    else:
        if len(data) < 4:
            raise FormatError("truncated 3-character length prefix")
        width, start = 3, 1
    n = 0
    for c in data[start : start + width]:
        n = (n << 6) | (c - 63)
    if width == 3 and n < 63 or width == 6 and n < 258048:
        raise FormatError("non-canonical length prefix")
    return n, start + width


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ``>>graph6<<`` header is stripped)."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise FormatError("graph6 must be ASCII") from None
    bad = [c for c in data if not 63 <= c <= 126]
    if bad:
        raise FormatError(f"character {chr(bad[0])!r} outside graph6 range 63..126")
    n, used = _decode_n(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        raise FormatError(f"expected {need} data characters for n={n}, got {len(body)}")
    value = 0
    for c in body:
        value = (value << 6) | (c - 63)
    pad = need * 6 - nbits
    if value & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits")
    value >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                edges.append((i, j))
            k -= 1
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def encode_graph6(G: Graph) -> str:
    bits = []
    for j in range(1, G.n):
        for i in range(j):
            bits.append(G.adj[i] >> j & 1)
    bits += [0] * (-len(bits) % 6)
    chars = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return _encode_n(G.n) + "".join(chars)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n u1 v1 u2 v2 ...`` (any whitespace, duplicates collapsed)."""
    tokens = text.split()
    if not tokens:
        raise FormatError("empty edge list")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    n, rest = nums[0], nums[1:]
    if n < 0:
        raise FormatError("negative vertex count")
    if len(rest) % 2:
        raise FormatError("odd number of endpoint tokens")
    pairs = list(zip(rest[::2], rest[1::2]))
    try:
        return Graph.from_edges(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def encode_edge_list(G: Graph) -> str:
    return " ".join([str(G.n)] + [f"{u} {v}" for u, v in G.edges()])


def parse_line(text: str, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edges":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")
