"""graph6 and edge-list codecs."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import GraphError, SubcubicGraph

HEADER = ">>graph6<<"


class ParseError(GraphError):
    pass


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError("graph6 order limit exceeded")


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) < 4 or data[1] == 126:
        raise ParseError("graph6 orders above 258047 are not supported")
    n = 0
    for b in data[1:4]:
        n = n << 6 | (b - 63)
    return n, 4


def encode_graph6(G: SubcubicGraph) -> str:
    """graph6 string (no header, no newline)."""
    n = G.n
    bits = []
    nbr = G.nbr_masks
    for j in range(1, n):
        for i in range(j):
            bits.append(nbr[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        body.append(val + 63)
    return (_encode_n(n) + bytes(body)).decode("ascii")


def decode_graph6(text: str | bytes) -> SubcubicGraph:
    """Parse one graph6 line; raises :class:`ParseError` on malformed input.

    Degree violations surface as :class:`~indom.graph.DegreeExceedsThree`.
    """
    if isinstance(text, str):
        text = text.strip()
        if text.startswith(HEADER):
            text = text[len(HEADER):]
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("graph6 must be ASCII") from exc
    else:
        data = bytes(text).strip()
        if data.startswith(HEADER.encode()):
            data = data[len(HEADER):]
    if any(b < 63 or b > 126 for b in data):
        raise ParseError("graph6 bytes must lie in 63..126")
    n, start = _decode_n(data)
    nbits = n * (n - 1) // 2
    body = data[start:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("graph6 padding bits must be zero")
    return SubcubicGraph(n, edges)


def format_edge_list(G: SubcubicGraph) -> str:
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> SubcubicGraph:
    """Parse ``n`` on the first line followed by ``u v`` lines (``#`` comments allowed)."""
    rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows:
        raise ParseError("empty edge list")
    try:
        n = int(rows[0])
        edges = []
        for r in rows[1:]:
            parts = r.split()
            if len(parts) != 2:
                raise ParseError(f"bad edge line {r!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return SubcubicGraph(n, edges)


def read_graphs(stream: TextIO, fmt: str = "g6") -> Iterator[SubcubicGraph]:
    """Yield graphs from a stream: one graph6 per line, or blank-line separated edge lists."""
    if fmt == "g6":
        for line in stream:
            line = line.strip()
            if line:
                yield decode_graph6(line)
    elif fmt == "edges":
        block: list[str] = []
        for line in stream.read().splitlines() + [""]:
            if line.strip():
                block.append(line)
            elif block:
                yield parse_edge_list("\n".join(block))
                block = []
    else:
        raise ValueError(f"unknown format {fmt!r}")


def write_graphs(graphs: Iterable[SubcubicGraph], stream: TextIO, fmt: str = "g6") -> int:
    count = 0
    for G in graphs:
        if fmt == "g6":
            stream.write(encode_graph6(G) + "\n")
        elif fmt == "edges":
            if count:
                stream.write("\n")
            stream.write(format_edge_list(G))
        else:
            raise ValueError(f"unknown format {fmt!r}")
        count += 1
    return count
