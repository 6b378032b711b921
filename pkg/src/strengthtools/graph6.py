"""graph6 text codec for graphs of order up to 64.

The layout is the de-facto standard for small simple graphs: an order header
(one offset-63 character for n <= 62, or ``~`` followed by three characters
carrying 18 big-endian bits for larger n), then the upper adjacency triangle
in column-major order -- bit (i, j) for j = 1..n-1, i = 0..j-1 -- packed six
bits per printable character and zero-padded to a sextet boundary.

``parse_graph6(emit_graph6(g)) == g`` exactly (same vertex indexing), and
emitting a parsed canonical-length token reproduces it byte for byte.
"""

from __future__ import annotations

from .errors import (
    Graph6Error,
    Graph6HeaderError,
    Graph6TrailingError,
    Graph6TruncatedError,
)
from .graphs import MAX_ORDER, Graph

_OFFSET = 63
_MAX_CHAR = 126


def _sextet(token: str, pos: int) -> int:
    ch = ord(token[pos])
    if not _OFFSET <= ch <= _MAX_CHAR:
        raise Graph6Error(f"character {token[pos]!r} outside graph6 range", pos)
    return ch - _OFFSET


def parse_graph6(token: str) -> Graph:
    """Decode one graph6 token into a :class:`Graph`.

    Raises :class:`Graph6HeaderError`, :class:`Graph6TruncatedError`, or
    :class:`Graph6TrailingError` (all carrying a byte offset) on bad input.
    """
    if not token:
        raise Graph6HeaderError("empty token", 0)
    if token[0] == "~":
        if len(token) >= 2 and token[1] == "~":
            # 8-byte header form encodes n >= 258048, far past the order cap
            raise Graph6HeaderError("order exceeds the supported maximum", 0)
        if len(token) < 4:
            raise Graph6HeaderError("long-form header needs 3 more characters", len(token))
        n = (_sextet(token, 1) << 12) | (_sextet(token, 2) << 6) | _sextet(token, 3)
        body_start = 4
    else:
        n = _sextet(token, 0)
        body_start = 1
    if n < 1 or n > MAX_ORDER:
        raise Graph6HeaderError(f"order {n} outside [1, {MAX_ORDER}]", 0)

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(token) < body_start + nchars:
        raise Graph6TruncatedError(
            f"bit body needs {nchars} characters, found {len(token) - body_start}",
            len(token),
        )
    if len(token) > body_start + nchars:
        raise Graph6TrailingError("trailing characters after bit body", body_start + nchars)

    adj = [0] * n
    bit = 0
    acc = 0
    for j in range(1, n):
        for i in range(j):
            if bit % 6 == 0:
                acc = _sextet(token, body_start + bit // 6)
            if (acc >> (5 - bit % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    # padding bits of the final sextet must be zero
    if nbits % 6 and acc & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", body_start + nchars - 1)
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a canonical-length graph6 token."""
    n = g.order
    if n <= 62:
        out = [chr(_OFFSET + n)]
    else:
        out = ["~", chr(_OFFSET + (n >> 12)), chr(_OFFSET + ((n >> 6) & 63)), chr(_OFFSET + (n & 63))]
    acc = 0
    filled = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(_OFFSET + acc))
                acc = 0
                filled = 0
    if filled:
        out.append(chr(_OFFSET + (acc << (6 - filled))))
    return "".join(out)
