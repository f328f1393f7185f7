"""Hypercube vertices as machine words, and the set file format.

A vertex of ``Q_n`` is an unsigned integer whose bit ``i`` holds coordinate
``c_i``.  The dimension is not stored per vertex; it travels with the
enclosing :class:`VertexSet`.  Functions that take bare vertices accept either
ints or bit strings (most significant coordinate first), and bit strings carry
their own dimension.
"""

from __future__ import annotations

import io
from typing import IO, Iterable, Iterator, Union

import numpy as np

MAX_DIMENSION = 62

Vertex = Union[int, str]


class DimensionError(ValueError):
    """A vertex or set does not fit the requested dimension."""


class SetFormatError(ValueError):
    """Malformed set file.  ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def check_dimension(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise DimensionError(f"dimension must be an integer, got {n!r}")
    if not 1 <= n <= MAX_DIMENSION:
        raise DimensionError(f"dimension {n} outside 1..{MAX_DIMENSION}")
    return int(n)


def parse_vertex(text: str) -> int:
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"not a binary word: {text!r}")
    return int(text, 2)


def format_vertex(v: int, n: int) -> str:
    return format(v, f"0{n}b")


def _as_word(v: Vertex, n: int | None) -> tuple[int, int | None]:
    if isinstance(v, str):
        if n is not None and len(v) != n:
            raise DimensionError(f"{v!r} has length {len(v)}, expected {n}")
        return parse_vertex(v), len(v)
    v = int(v)
    if v < 0 or (n is not None and v >> n):
        raise DimensionError(f"vertex {v} does not fit dimension {n}")
    return v, n


def hamming_distance(u: Vertex, v: Vertex, n: int | None = None) -> int:
    """Number of coordinates where ``u`` and ``v`` differ.

    Bit strings of different lengths, or ints outside ``n`` bits when ``n`` is
    given, raise :class:`DimensionError`.
    """
    a, na = _as_word(u, n)
    b, nb = _as_word(v, n if n is not None else na)
    if na is not None and nb is not None and na != nb:
        raise DimensionError(f"dimension mismatch: {na} vs {nb}")
    if na is None and nb is not None:
        _as_word(a, nb)
    return (a ^ b).bit_count()


def neighbors(v: Vertex, n: int) -> list[int]:
    """The ``n`` vertices adjacent to ``v``, flipping bit 0 first."""
    n = check_dimension(n)
    w, _ = _as_word(v, n)
    return [w ^ (1 << i) for i in range(n)]


def parity(v: Vertex) -> int:
    """0 if ``v`` has an even number of ones, else 1."""
    w, _ = _as_word(v, None)
    return w.bit_count() & 1


class VertexSet:
    """Ordered, duplicate-free vertices of ``Q_dimension``.

    Members live in a read-only ``uint64`` array so that sets with millions of
    members stay compact.  Iteration yields plain ints.
    """

    __slots__ = ("dimension", "_members")

    def __init__(self, dimension: int, members: Iterable[Vertex] | np.ndarray):
        self.dimension = check_dimension(dimension)
        if isinstance(members, np.ndarray):
            arr = np.array(members, dtype=np.uint64)
        else:
            arr = np.fromiter(
                (_as_word(m, self.dimension)[0] for m in members), dtype=np.uint64
            )
        if arr.ndim != 1:
            raise ValueError("members must be one-dimensional")
        if arr.size and int(arr.max()) >> self.dimension:
            raise DimensionError(
                f"member {int(arr.max())} does not fit dimension {self.dimension}"
            )
        if arr.size != np.unique(arr).size:
            raise ValueError("duplicate vertex in set")
        arr.flags.writeable = False
        self._members = arr

    @classmethod
    def _trusted(cls, dimension: int, members: np.ndarray) -> "VertexSet":
        # Kernel outputs are in range and duplicate-free by construction.
        obj = cls.__new__(cls)
        obj.dimension = dimension
        members.flags.writeable = False
        obj._members = members
        return obj

    @classmethod
    def from_strings(cls, words: Iterable[str]) -> "VertexSet":
        words = list(words)
        if not words:
            raise ValueError("cannot infer dimension of an empty set")
        return cls(len(words[0]), words)

    @property
    def members(self) -> np.ndarray:
        return self._members

    def __len__(self) -> int:
        return int(self._members.size)

    def __iter__(self) -> Iterator[int]:
        return (int(m) for m in self._members)

    def __contains__(self, v: object) -> bool:
        if not isinstance(v, (int, str)):
            return False
        try:
            w, _ = _as_word(v, self.dimension)
        except (DimensionError, ValueError):
            return False
        return bool(np.any(self._members == np.uint64(w)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.dimension == other.dimension and np.array_equal(
            self._members, other._members
        )

    def __hash__(self):
        return hash((self.dimension, self._members.tobytes()))

    def to_strings(self) -> list[str]:
        return [format_vertex(m, self.dimension) for m in self]

    def __repr__(self) -> str:
        if len(self) <= 8:
            body = ", ".join(self.to_strings())
        else:
            body = ", ".join(self.to_strings()[:4]) + f", ... ({len(self)} members)"
        return f"VertexSet(n={self.dimension}, [{body}])"


# -- set file format ---------------------------------------------------------
#
#   # optional comments
#   n=<N>
#   <N chars of 0/1, MSB first>   (one per line, trailing newline required)

_CHUNK = 1 << 18


def _render_rows(members: np.ndarray, n: int) -> bytes:
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    rows = np.empty((members.size, n + 1), dtype=np.uint8)
    rows[:, :n] = ((members[:, None] >> shifts) & np.uint64(1)).astype(np.uint8)
    rows[:, :n] += ord("0")
    rows[:, n] = ord("\n")
    return rows.tobytes()


def write_set(s: VertexSet, sink: IO) -> None:
    """Write ``s`` to a binary or text stream."""
    binary = not isinstance(sink, io.TextIOBase)
    header = f"n={s.dimension}\n"
    sink.write(header.encode() if binary else header)
    members = s.members
    for start in range(0, members.size, _CHUNK):
        chunk = _render_rows(members[start:start + _CHUNK], s.dimension)
        sink.write(chunk if binary else chunk.decode("ascii"))


def dumps(s: VertexSet) -> str:
    buf = io.StringIO()
    write_set(s, buf)
    return buf.getvalue()


def _parse_body_fast(body: bytes, n: int) -> np.ndarray | None:
    width = n + 1
    if len(body) % width:
        return None
    rows = np.frombuffer(body, dtype=np.uint8).reshape(-1, width)
    weights = np.uint64(1) << np.arange(n - 1, -1, -1, dtype=np.uint64)
    out = np.empty(rows.shape[0], dtype=np.uint64)
    for start in range(0, rows.shape[0], _CHUNK):
        chunk = rows[start:start + _CHUNK]
        if not np.all(chunk[:, n] == ord("\n")):
            return None
        digits = chunk[:, :n] - np.uint8(ord("0"))
        if np.any(digits > 1):
            return None
        out[start:start + _CHUNK] = (digits.astype(np.uint64) * weights).sum(
            axis=1, dtype=np.uint64
        )
    return out


def _parse_body_slow(lines: list[bytes], first_lineno: int, n: int) -> np.ndarray:
    seen: set[int] = set()
    out = []
    for offset, raw in enumerate(lines):
        lineno = first_lineno + offset
        if not raw:
            raise SetFormatError(lineno, "blank line")
        text = raw.decode("ascii", errors="replace")
        if len(text) != n:
            raise SetFormatError(lineno, f"length {len(text)} != {n}")
        if set(text) - {"0", "1"}:
            raise SetFormatError(lineno, f"non-binary character in {text!r}")
        v = int(text, 2)
        if v in seen:
            raise SetFormatError(lineno, f"duplicate vertex {text}")
        seen.add(v)
        out.append(v)
    return np.array(out, dtype=np.uint64)


def read_set(source: IO) -> VertexSet:
    """Parse a set file from a binary or text stream."""
    data = source.read()
    if isinstance(data, str):
        data = data.encode("utf-8")
    if not data:
        raise SetFormatError(1, "missing header n=<N>")
    if not data.endswith(b"\n"):
        raise SetFormatError(data.count(b"\n") + 1, "missing trailing newline")

    pos, lineno = 0, 1
    n = None
    while pos < len(data):
        end = data.index(b"\n", pos)
        line = data[pos:end]
        if line.startswith(b"#"):
            pos, lineno = end + 1, lineno + 1
            continue
        if not line.startswith(b"n=") or not line[2:].isdigit():
            raise SetFormatError(lineno, "expected header n=<N>")
        n = int(line[2:])
        if not 1 <= n <= MAX_DIMENSION:
            raise SetFormatError(lineno, f"dimension {n} outside 1..{MAX_DIMENSION}")
        pos, lineno = end + 1, lineno + 1
        break
    if n is None:
        raise SetFormatError(lineno, "missing header n=<N>")

    body = data[pos:]
    members = _parse_body_fast(body, n)
    if members is None or members.size != np.unique(members).size:
        members = _parse_body_slow(body.split(b"\n")[:-1], lineno, n)
    return VertexSet._trusted(n, members)


def loads(text: str) -> VertexSet:
    return read_set(io.StringIO(text))
