"""graph6 encoding and decoding (McKay's format), restricted to n <= 64."""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, GraphError

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    # 18-bit big-endian form, 6 bits per byte
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def graph6_encode(G: Graph) -> str:
    bits = []
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start : start + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_n(G.n) + "".join(body)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 byte {ch!r}")
    if s[0] != "~":
        n, body = ord(s[0]) - 63, s[1:]
    else:
        if len(s) < 4 or s[1] == "~":
            raise Graph6Error("unsupported graph6 size prefix")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph has {n} vertices; at most {MAX_VERTICES} supported")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, found {len(body)}"
        )
    adj = [0] * n
    k = 0
    values = [ord(ch) - 63 for ch in body]
    for j in range(1, n):
        for i in range(j):
            if values[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))
