"""Pure-Python/numpy kernels.

Same signatures and results as the compiled ``_ckernels`` module, which is
preferred when importable.  Members are ``uint64`` arrays throughout.
"""

from __future__ import annotations

import time

import numpy as np

NAME = "python"

_U1 = np.uint64(1)
_CHUNK = 1 << 20


def expand_odd(members: np.ndarray, p: int) -> np.ndarray:
    codes = np.arange(1 << p, dtype=np.uint64)
    top = (np.bitwise_count(codes) & np.uint8(1)).astype(np.uint64)
    high = (top << np.uint64(2 * p)) | (codes << np.uint64(p))
    # row N holds l = N*|s| + k, so ravel() gives the required order
    return (high[:, None] | (members[None, :] ^ codes[:, None])).ravel()


def extend_by_one(members: np.ndarray, n: int) -> np.ndarray:
    out = np.empty(2 * members.size, dtype=np.uint64)
    out[0::2] = members
    out[1::2] = (members ^ _U1) | (_U1 << np.uint64(n))
    return out


def bitmap_bytes(n: int) -> int:
    return max(1, (1 << n) >> 3)


def _set_bits(bitmap: np.ndarray, idx: np.ndarray) -> None:
    np.bitwise_or.at(
        bitmap, idx >> np.uint64(3), (_U1 << (idx & np.uint64(7))).astype(np.uint8)
    )


def _test_bits(bitmap: np.ndarray, idx: np.ndarray) -> np.ndarray:
    return (bitmap[idx >> np.uint64(3)] >> (idx & np.uint64(7)).astype(np.uint8)) & 1


def mark_coverage(members: np.ndarray, n: int) -> np.ndarray:
    """Bitmap of 2^n bits with every member and each of its neighbours set."""
    bitmap = np.zeros(bitmap_bytes(n), dtype=np.uint8)
    for start in range(0, members.size, _CHUNK):
        chunk = members[start:start + _CHUNK]
        _set_bits(bitmap, chunk)
        for i in range(n):
            _set_bits(bitmap, chunk ^ (_U1 << np.uint64(i)))
    return bitmap


def first_adjacent(members: np.ndarray, n: int) -> tuple[int, int]:
    """``(index, bit)`` of the first member whose bit-flip neighbour is also a
    member, lowest index then lowest bit; ``(-1, -1)`` if none."""
    bitmap = np.zeros(bitmap_bytes(n), dtype=np.uint8)
    _set_bits(bitmap, members)
    best = (-1, -1)
    for i in range(n):
        hits = np.flatnonzero(_test_bits(bitmap, members ^ (_U1 << np.uint64(i))))
        if hits.size and (best[0] < 0 or hits[0] < best[0]):
            best = (int(hits[0]), i)
    return best


def search(n: int, incumbent: int, budget: float):
    """Branch and bound for a minimum independent dominating set of Q_n.

    Only sets smaller than ``incumbent`` are sought.  Returns
    ``(best_size, best_members, nodes, timed_out)``; ``best_members`` is None
    when nothing below ``incumbent`` was found.
    """
    nv = 1 << n
    full = (1 << nv) - 1
    closed = []
    for v in range(nv):
        m = 1 << v
        for i in range(n):
            m |= 1 << (v ^ (1 << i))
        closed.append(m)
    deadline = time.monotonic() + budget
    state = {"best": incumbent, "set": None, "nodes": 0, "timeout": False}

    def rec(size, chosen, dom, excl):
        state["nodes"] += 1
        if state["nodes"] & 0xFFFF == 1 and time.monotonic() > deadline:
            state["timeout"] = True
        if state["timeout"]:
            return
        if dom == full:
            if size < state["best"]:
                state["best"], state["set"] = size, chosen
            return
        undominated = full & ~dom
        if size + -(-undominated.bit_count() // (n + 1)) >= state["best"]:
            return
        u = (undominated & -undominated).bit_length() - 1
        cand = closed[u] & ~dom & ~excl
        if size == 0:
            # vertex transitivity: some optimum contains vertex 0
            cand &= 1
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            rec(size + 1, chosen | low, dom | closed[w], excl)
            if state["timeout"]:
                return
            excl |= low
            cand ^= low

    rec(0, 0, 0, 0)
    found = None
    if state["set"] is not None:
        found = [v for v in range(nv) if state["set"] >> v & 1]
    return state["best"], found, state["nodes"], state["timeout"]
