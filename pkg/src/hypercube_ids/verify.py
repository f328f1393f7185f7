"""Exhaustive certification of independent dominating sets.

Domination is checked with a dense coverage bitmap of ``2^n`` bits, so it is
only attempted up to ``max_dense_n`` (default 30, a 128 MiB map).  Above that
the answer is ``None`` -- unchecked -- and never ``False``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .construct import lower_bound, upper_bound
from .core import VertexSet

DEFAULT_MAX_DENSE_N = 30

# Brute-force pairwise distances only below this many members.
_PAIRWISE_LIMIT = 4096


@dataclass(frozen=True)
class DominationCheck:
    dominating: bool | None
    uncovered: int | None = None
    witness: int | None = None
    overlaps: int | None = None
    bitmap_bytes: int = 0
    message: str = ""

    @property
    def unchecked(self) -> bool:
        return self.dominating is None


@dataclass
class VerifyReport:
    dimension: int
    cardinality: int
    independent: bool
    adjacent_pair: tuple[int, int] | None
    domination: DominationCheck
    min_pairwise_distance: int | None
    lower_bound: int
    upper_bound: int
    elapsed: float
    peak_coverage_bytes: int
    notes: list[str] = field(default_factory=list)

    @property
    def dominating(self) -> bool | None:
        return self.domination.dominating

    @property
    def ok(self) -> bool:
        return self.independent and self.dominating is True

    @property
    def bound(self) -> str:
        if self.cardinality < self.lower_bound:
            return "below-lower"
        if self.cardinality > self.upper_bound:
            return "exceeds"
        return "meets"

    @property
    def provably_minimum(self) -> bool:
        # |S| = floor(2^n/(n+1)) for a real IDS forces n = 2^k - 1 and a
        # perfect code; nothing smaller can dominate.
        return self.ok and self.cardinality == self.lower_bound

    def lines(self) -> list[str]:
        dom = {True: "true", False: "false", None: "unchecked"}[self.dominating]
        dist = "none" if self.min_pairwise_distance is None else self.min_pairwise_distance
        out = [
            f"n={self.dimension}",
            f"independent={str(self.independent).lower()}",
            f"dominating={dom}",
            f"size={self.cardinality}",
            f"min_distance={dist}",
            f"bound={self.bound}",
            f"lower_bound={self.lower_bound}",
            f"upper_bound={self.upper_bound}",
            f"minimum={'proven' if self.provably_minimum else 'unknown'}",
        ]
        if self.adjacent_pair is not None:
            u, v = self.adjacent_pair
            out.append(f"adjacent_pair={u:0{self.dimension}b},{v:0{self.dimension}b}")
        if self.domination.uncovered:
            out.append(f"uncovered={self.domination.uncovered}")
            out.append(f"uncovered_witness={self.domination.witness:0{self.dimension}b}")
        if self.domination.overlaps is not None:
            out.append(f"overlaps={self.domination.overlaps}")
        out.append(f"coverage_bytes={self.peak_coverage_bytes}")
        out.append(f"elapsed={self.elapsed:.3f}s")
        out.extend(f"note={n}" for n in self.notes)
        return out


def _first_adjacent_sparse(members: np.ndarray, n: int) -> tuple[int, int]:
    ordered = np.sort(members)
    best = (-1, -1)
    for i in range(n):
        flipped = members ^ (np.uint64(1) << np.uint64(i))
        pos = np.minimum(np.searchsorted(ordered, flipped), ordered.size - 1)
        hits = np.flatnonzero(ordered[pos] == flipped)
        if hits.size and (best[0] < 0 or hits[0] < best[0]):
            best = (int(hits[0]), i)
    return best


def is_independent(
    s: VertexSet, max_dense_n: int = DEFAULT_MAX_DENSE_N
) -> tuple[bool, tuple[int, int] | None]:
    """Check that no two members are adjacent.

    On failure the witness pair is the lowest-index member that has an
    adjacent member, with its lowest flipped bit.  Cost is ``O(|s| n)``.
    """
    if len(s) < 2:
        return True, None
    if s.dimension <= max_dense_n:
        k, bit = _backend.kernels.first_adjacent(s.members, s.dimension)
    else:
        k, bit = _first_adjacent_sparse(s.members, s.dimension)
    if k < 0:
        return True, None
    u = int(s.members[k])
    return False, (u, u ^ (1 << bit))


def is_dominating(
    s: VertexSet, max_dense_n: int = DEFAULT_MAX_DENSE_N
) -> DominationCheck:
    n = s.dimension
    if n > max_dense_n:
        return DominationCheck(
            None,
            message=f"dimension {n} above dense cap {max_dense_n}; "
                    f"a {1 << n}-bit coverage map was not allocated",
        )
    bitmap = _backend.kernels.mark_coverage(s.members, n)
    covered = int(np.bitwise_count(bitmap).sum(dtype=np.int64))
    total = 1 << n
    overlaps = len(s) * (n + 1) - covered
    if covered == total:
        return DominationCheck(True, 0, None, overlaps, bitmap.nbytes)
    witness = _lowest_clear_bit(bitmap, total)
    return DominationCheck(False, total - covered, witness, overlaps, bitmap.nbytes)


def _lowest_clear_bit(bitmap: np.ndarray, nbits: int) -> int:
    byte = int(np.flatnonzero(bitmap != 0xFF)[0])
    b = int(bitmap[byte])
    bit = ((~b) & (b + 1)).bit_length() - 1
    v = 8 * byte + bit
    assert v < nbits
    return v


def pairwise_min_distance(s: VertexSet) -> int | None:
    """Brute-force minimum Hamming distance over all member pairs."""
    m = s.members
    if m.size < 2:
        return None
    best = s.dimension
    for i in range(m.size - 1):
        d = int(np.bitwise_count(m[i + 1:] ^ m[i]).min())
        best = min(best, d)
        if best == 1:
            break
    return best


def _min_distance(
    s: VertexSet, independent: bool, dom: DominationCheck
) -> int | None:
    if len(s) < 2:
        return None
    if not independent:
        return 1
    # independent: an overlapping mark means two closed neighbourhoods meet,
    # i.e. two members at distance 2.  Without overlaps a dominating set has
    # every distance-2 vertex of u covered by another member within 3.
    if dom.overlaps:
        return 2
    if dom.dominating is True and s.dimension >= 2:
        return 3
    if len(s) <= _PAIRWISE_LIMIT:
        return pairwise_min_distance(s)
    return None


def certify(s: VertexSet, max_dense_n: int = DEFAULT_MAX_DENSE_N) -> VerifyReport:
    start = time.perf_counter()
    independent, pair = is_independent(s, max_dense_n)
    dom = is_dominating(s, max_dense_n)
    dist = _min_distance(s, independent, dom)
    n = s.dimension
    notes = [dom.message] if dom.message else []
    membership_bytes = (
        _backend.kernels.bitmap_bytes(n) if len(s) >= 2 and n <= max_dense_n else 0
    )
    return VerifyReport(
        dimension=n,
        cardinality=len(s),
        independent=independent,
        adjacent_pair=pair,
        domination=dom,
        min_pairwise_distance=dist,
        lower_bound=lower_bound(n),
        upper_bound=upper_bound(n).value,
        elapsed=time.perf_counter() - start,
        peak_coverage_bytes=max(dom.bitmap_bytes, membership_bytes),
        notes=notes,
    )
