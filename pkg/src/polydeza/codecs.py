"""graph6 text and planar_code binary codecs."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import MalformedGraph6, MalformedPlanarCode, OrderOverflow, PolydezaError
from .graph import AbstractGraph, PlaneGraph

G6_HEADER = b">>graph6<<"
PC_HEADER = b">>planar_code<<"


# graph6 ----------------------------------------------------------------

def _g6_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def encode_graph6(g: AbstractGraph) -> str:
    """One graph6 line (without trailing newline)."""
    bits = []
    for j in range(1, g.n):
        aj = g.adj[j]
        bits.extend(1 if i in aj else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i : i + 6]))
        for i in range(0, len(bits), 6)
    )
    return (_g6_size(g.n) + body).decode("ascii")


def decode_graph6(line: str | bytes) -> AbstractGraph:
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(G6_HEADER):
        data = data[len(G6_HEADER) :]
    if not data:
        raise MalformedGraph6("empty graph6 line")
    if any(not 63 <= c <= 126 for c in data):
        raise MalformedGraph6("graph6 bytes must lie in 63..126")
    if data[0] != 126:
        n, rest = data[0] - 63, data[1:]
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated size field")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        rest = data[8:]
    else:
        if len(data) < 4:
            raise MalformedGraph6("truncated size field")
        n = 0
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
        rest = data[4:]
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"expected {(nbits + 5) // 6} edge bytes for n={n}, got {len(rest)}"
        )
    adj = [set() for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[k // 6] - 63) >> (5 - k % 6) & 1:
                adj[i].add(j)
                adj[j].add(i)
            k += 1
    for k in range(nbits, 6 * len(rest)):
        if (rest[k // 6] - 63) >> (5 - k % 6) & 1:
            raise MalformedGraph6("non-zero padding bits")
    return AbstractGraph(n, adj)


def read_graph6(text: str | bytes) -> list[AbstractGraph]:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    return [decode_graph6(line) for line in text.splitlines() if line.strip()]


def write_graph6(graphs: Iterable[AbstractGraph]) -> str:
    return "".join(encode_graph6(g) + "\n" for g in graphs)


# planar_code -----------------------------------------------------------

def encode_planar_code_one(g: PlaneGraph) -> bytes:
    if g.n > 255:
        raise OrderOverflow(f"planar_code here supports n <= 255, got {g.n}")
    out = bytearray([g.n])
    for r in g.rot:
        out.extend(w + 1 for w in r)
        out.append(0)
    return bytes(out)


def encode_planar_code(graphs: Iterable[PlaneGraph], header: bool = True) -> bytes:
    out = bytearray(PC_HEADER if header else b"")
    for g in graphs:
        out += encode_planar_code_one(g)
    return bytes(out)


def iter_planar_code(data: bytes) -> Iterator[PlaneGraph]:
    if data.startswith(PC_HEADER):
        i = len(PC_HEADER)
    elif data.startswith(b">>planar_code"):
        raise MalformedPlanarCode("bad planar_code header")
    else:
        i = 0
    end = len(data)
    while i < end:
        n = data[i]
        i += 1
        if n == 0:
            raise MalformedPlanarCode("order 0 (two-byte entries) is not supported")
        rot = []
        for _ in range(n):
            r = []
            while True:
                if i >= end:
                    raise MalformedPlanarCode("truncated planar_code stream")
                c = data[i]
                i += 1
                if c == 0:
                    break
                if c > n:
                    raise MalformedPlanarCode(f"neighbour {c} exceeds order {n}")
                r.append(c - 1)
            rot.append(r)
        try:
            g = PlaneGraph(rot)
        except PolydezaError as exc:
            raise MalformedPlanarCode(f"invalid rotation system: {exc}") from exc
        yield g


def decode_planar_code(data: bytes) -> list[PlaneGraph]:
    return list(iter_planar_code(data))
