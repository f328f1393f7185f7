"""Exact independent domination number of small hypercubes.

Depth-first branch and bound.  At each node the lowest undominated vertex
``u`` must end up dominated by some member of its closed neighbourhood, so
the search branches over the eligible ones (not yet dominated, not excluded)
in ascending order, excluding each from later siblings.  A branch is cut when
``|S| + ceil(undominated / (n+1)) >= incumbent``, since one new member covers
at most ``n+1`` vertices.  The root branch is fixed to vertex 0: translating
any independent dominating set by one of its members gives one containing 0.

The search is single-threaded so ``nodes_explored`` is reproducible.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass

from . import _backend
from .core import DimensionError, VertexSet
from .verify import is_dominating, is_independent

MAX_SOLVE_DIMENSION = 7


class Status(str, enum.Enum):
    OPTIMAL = "optimal"
    TIMED_OUT = "timed-out"


class SearchTimeout(RuntimeError):
    """The search ran out of budget before it could settle the question."""


@dataclass
class SolveResult:
    n: int
    alpha: int | None
    witness: VertexSet | None
    nodes_explored: int
    elapsed: float
    status: Status

    def lines(self) -> list[str]:
        out = [
            f"n={self.n}",
            f"status={self.status.value}",
            f"alpha={'none' if self.alpha is None else self.alpha}",
            f"nodes={self.nodes_explored}",
            f"elapsed={self.elapsed:.3f}s",
        ]
        if self.witness is not None:
            out.append("witness=" + ",".join(self.witness.to_strings()))
        return out


def _check_args(n: int, time_budget: float) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_SOLVE_DIMENSION:
        raise DimensionError(f"exact search supports 1 <= n <= {MAX_SOLVE_DIMENSION}, got {n}")
    if not time_budget > 0:
        raise ValueError("time budget must be positive")


def _run(n: int, incumbent: int, time_budget: float):
    return _backend.kernels.search(n, incumbent, float(time_budget))


def min_ids(n: int, time_budget: float = 600.0) -> SolveResult:
    """Minimum independent dominating set of ``Q_n`` for ``n <= 7``."""
    _check_args(n, time_budget)
    start = time.perf_counter()
    best, found, nodes, timed_out = _run(n, (1 << n) + 1, time_budget)
    elapsed = time.perf_counter() - start
    witness = VertexSet(n, found) if found is not None else None
    if witness is not None:
        independent, _ = is_independent(witness)
        if not (independent and is_dominating(witness).dominating):
            raise AssertionError(f"search returned an invalid witness for n={n}")
    return SolveResult(
        n=n,
        alpha=len(witness) if witness is not None else None,
        witness=witness,
        nodes_explored=nodes,
        elapsed=elapsed,
        status=Status.TIMED_OUT if timed_out else Status.OPTIMAL,
    )


def verify_no_smaller(n: int, size: int, time_budget: float = 600.0) -> bool:
    """True iff no independent dominating set of ``Q_n`` has fewer than
    ``size`` members.  Raises :class:`SearchTimeout` if undecided."""
    _check_args(n, time_budget)
    if size <= 1:
        return True
    _, found, _, timed_out = _run(n, size, time_budget)
    if found is not None:
        return False
    if timed_out:
        raise SearchTimeout(f"no decision for n={n}, size<{size} within {time_budget}s")
    return True
