"""graph6 encoding and decoding (Brendan McKay's format, orders up to 64)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Base class for graph6 parse failures."""


class Graph6LengthError(Graph6Error):
    """Input ends before the size field or adjacency bits are complete."""


class Graph6ByteError(Graph6Error):
    """A byte lies outside the printable range 63..126."""


class Graph6TrailingError(Graph6Error):
    """Bytes remain after the adjacency data."""


class Graph6PaddingError(Graph6Error):
    """The unused low bits of the final group are not zero."""


def _size_field(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> shift & 63)) for shift in (12, 6, 0))


def encode(g: Graph) -> str:
    """Encode ``g`` without the optional header or trailing newline."""
    out = [_size_field(g.n)]
    acc = 0
    width = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(63 + acc))
                acc = width = 0
    if width:
        out.append(chr(63 + (acc << (6 - width))))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6LengthError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ByteError(f"byte {ord(ch)!r} at offset {pos} outside 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] == 63:
        if len(vals) < 4:
            raise Graph6LengthError("truncated long size field")
        if vals[1] == 63:
            raise Graph6LengthError(f"orders above {MAX_ORDER} are not supported")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if not 1 <= n <= MAX_ORDER:
        raise Graph6LengthError(f"order {n} outside [1, {MAX_ORDER}]")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) < need:
        raise Graph6LengthError(f"expected {need} data bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise Graph6TrailingError(f"{len(body) - need} bytes after the adjacency data")
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6PaddingError("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_lines(stream: TextIO) -> Iterator[Graph]:
    """Decode one graph per non-blank line."""
    for line in stream:
        if line.strip():
            yield decode(line)


def write_lines(graphs: Iterable[Graph], stream: TextIO) -> None:
    for g in graphs:
        stream.write(encode(g) + "\n")
