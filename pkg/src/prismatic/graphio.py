"""graph6 codec, DOT export, and 0/1-grid fixture parsing.

graph6 is the standard printable-ASCII encoding: a size prefix N(n) followed
by the upper triangle of the adjacency matrix in column-major order, packed
6 bits per character with offset 63.  We support n < 2^18 (one- and
four-byte size prefixes).
"""

from __future__ import annotations

from .graphs import Graph, from_adjacency

_MAX_N = 1 << 18


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n < _MAX_N:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise ValueError("graph6 size %d out of supported range" % n)


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, bytes consumed)."""
    if not data:
        raise ValueError("empty graph6 string")
    b = data[0]
    if b == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graph6 sizes >= 2^18 are not supported")
        if len(data) < 4:
            raise ValueError("truncated graph6 size prefix")
        vals = []
        for c in data[1:4]:
            if not 63 <= c <= 126:
                raise ValueError("non-printable byte %d in graph6 size" % c)
            vals.append(c - 63)
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        if n >= _MAX_N:
            raise ValueError("graph6 size %d out of supported range" % n)
        return n, 4
    if not 63 <= b <= 125:
        raise ValueError("invalid graph6 leading byte %d" % b)
    return b - 63, 1


def write_graph6(g: Graph) -> str:
    out = bytearray(_encode_size(g.n))
    acc = 0
    nbits = 0
    for col in range(1, g.n):
        for row in range(col):
            acc = (acc << 1) | ((g.adj[row] >> col) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    data = text.strip().encode("ascii")
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<") :]
    n, pos = _decode_size(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise ValueError(
            "graph6 body has %d bytes, expected %d for n=%d" % (len(body), nbytes, n)
        )
    adj = [0] * n
    k = 0
    for c in body:
        if not 63 <= c <= 126:
            raise ValueError("non-printable byte %d in graph6 body" % c)
    for col in range(1, n):
        for row in range(col):
            byte = body[k // 6]
            bit = ((byte - 63) >> (5 - (k % 6))) & 1
            k += 1
            if bit:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
    # padding bits must be zero
    if nbits % 6:
        byte = body[-1] - 63
        if byte & ((1 << (6 - nbits % 6)) - 1):
            raise ValueError("nonzero padding bits in graph6 body")
    return Graph(n, adj)


def write_dot(g: Graph, name: str = "G") -> str:
    """Lossy pretty-printer (labels only, no layout).  graph6 is canonical."""
    lines = ["graph %s {" % (g.name or name)]
    for v in range(g.n):
        lines.append("  %d;" % v)
    for u, v in g.edges():
        lines.append("  %d -- %d;" % (u, v))
    lines.append("}")
    return "\n".join(lines)


def parse_grid(text: str, name: str = "") -> Graph:
    """Parse a whitespace-separated 0/1 adjacency grid (fixture format)."""
    rows = []
    for line in text.strip().splitlines():
        entries = line.split()
        if not entries:
            continue
        rows.append([int(tok) for tok in entries])
    return from_adjacency(rows, name)


def load_fixture(stem: str) -> Graph:
    """Load a packaged data/<stem>.txt adjacency grid."""
    from importlib.resources import files

    text = files("prismatic.data").joinpath(stem + ".txt").read_text()
    return parse_grid(text, stem)
