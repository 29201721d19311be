"""Bit-exact graph6 and edge-list parsing and serialization.

graph6 encodes the upper adjacency triangle column by column, pair order
(0,1), (0,2), (1,2), (0,3), ..., six bits per printable byte (offset 63),
zero-padded to a byte boundary, preceded by a 1-, 4-, or 8-byte vertex
count. That pair order matches Graph bitmasks, so encoding is a direct
repack of the mask bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import CapacityError, ConsistencyError, FormatError
from .graphs import Graph

GRAPH6_HEADER = ">>graph6<<"

_N_MAX = 1 << 36


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise FormatError(f"vertex count must be >= 0, got {n}")
    if n >= _N_MAX:
        raise CapacityError(f"graph6 caps the vertex count below 2^36, got {n}")
    if n <= 62:
        return bytes([n + 63])
    if n < (1 << 18):
        return bytes(
            [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
        )
    return bytes(
        [
            126,
            126,
            ((n >> 30) & 63) + 63,
            ((n >> 24) & 63) + 63,
            ((n >> 18) & 63) + 63,
            ((n >> 12) & 63) + 63,
            ((n >> 6) & 63) + 63,
            (n & 63) + 63,
        ]
    )


def _decode_size(data: bytes):
    """(n, bytes consumed) from the size prefix."""
    if not data:
        raise FormatError("empty graph6 string", offset=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated 8-byte size prefix", offset=len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise FormatError("truncated 4-byte size prefix", offset=len(data))
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def encode_graph6_mask(n: int, mask: int) -> str:
    """graph6 line for an upper-triangle bitmask in pair order."""
    out = bytearray(_encode_size(n))
    npairs = n * (n - 1) // 2
    for base in range(0, npairs, 6):
        byte = 0
        for bit in range(6):
            k = base + bit
            if k < npairs and (mask >> k) & 1:
                byte |= 1 << (5 - bit)
        out.append(byte + 63)
    return out.decode("ascii")


def write_graph6(g: Graph) -> str:
    return encode_graph6_mask(g.n, g.to_bitmask())


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line; an optional '>>graph6<<' header is stripped.

    Byte offsets in errors are relative to the string after header
    removal. Padding bits beyond the last pair must be zero.
    """
    body = line.strip()
    if body.startswith(GRAPH6_HEADER):
        body = body[len(GRAPH6_HEADER):]
    if not body:
        raise FormatError("empty graph6 string", offset=0)
    for pos, ch in enumerate(body):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(
                f"byte {ord(ch)} at offset {pos} outside graph6 range 63..126",
                offset=pos,
            )
    data = body.encode("ascii")
    n, consumed = _decode_size(data)
    if n >= _N_MAX:
        raise CapacityError(f"graph6 vertex count {n} exceeds 2^36 - 1")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    payload = data[consumed:]
    if len(payload) != need:
        raise FormatError(
            f"graph6 payload for n={n} needs {need} bytes, found {len(payload)}",
            offset=consumed + min(len(payload), need),
        )
    mask = 0
    for k in range(npairs):
        byte = payload[k // 6] - 63
        if (byte >> (5 - k % 6)) & 1:
            mask |= 1 << k
    # reject dirty padding so parse/write is a true bijection
    if npairs % 6:
        last = payload[-1] - 63
        pad = 6 - npairs % 6
        if last & ((1 << pad) - 1):
            raise FormatError(
                "nonzero padding bits in final graph6 byte",
                offset=len(data) - 1,
            )
    return Graph.from_bitmask(n, mask)


@dataclass(frozen=True)
class GraphDocument:
    """One parsed graph plus where it came from."""

    source: str
    index: int
    graph: Graph


def iter_graph6(text: str, source: str = "<input>") -> Iterator[GraphDocument]:
    """Parse a graph6 file body, one graph per non-empty line."""
    index = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped == GRAPH6_HEADER:
            continue
        try:
            g = parse_graph6(stripped)
        except FormatError as exc:
            raise FormatError(
                f"{source}:{lineno}: {exc.args[0]}", offset=exc.offset, line=lineno
            ) from exc
        yield GraphDocument(source=source, index=index, graph=g)
        index += 1


def parse_edge_list(text: str, source: str = "<input>") -> Graph:
    """Parse 'n m' then m lines 'i j' (0-based); '#' starts a comment."""
    header: Optional[tuple] = None
    edges = []
    declared_m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise FormatError(
                f"{source}:{lineno}: expected integers, got {body!r}", line=lineno
            )
        if header is None:
            if len(nums) != 2:
                raise FormatError(
                    f"{source}:{lineno}: header must be 'n m', got {body!r}",
                    line=lineno,
                )
            header = (nums[0], nums[1])
            declared_m = nums[1]
            continue
        if len(nums) != 2:
            raise FormatError(
                f"{source}:{lineno}: edge line must be 'i j', got {body!r}",
                line=lineno,
            )
        if len(edges) >= declared_m:
            raise FormatError(
                f"{source}:{lineno}: more than the declared {declared_m} edges",
                line=lineno,
            )
        edges.append((nums[0], nums[1]))
    if header is None:
        raise FormatError(f"{source}: no 'n m' header line found")
    g = Graph(header[0], edges)
    if g.m != declared_m:
        raise ConsistencyError(
            f"{source}: declared m={declared_m} but distinct edges={g.m}"
        )
    return g
