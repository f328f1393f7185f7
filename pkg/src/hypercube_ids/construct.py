"""Constructions of independent dominating sets, bounds, and the planner.

Two growth steps are available:

* ``extend_by_one``: ``Q_n -> Q_{n+1}``, doubling the set.
* ``expand_odd``: ``Q_p -> Q_{2p+1}``, multiplying the set by ``2^p``.

Chaining them from a small seed gives a set for any dimension up to 62 whose
size equals :func:`upper_bound`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import _backend
from .core import MAX_DIMENSION, DimensionError, VertexSet, check_dimension


class Case(str, enum.Enum):
    EXACT = "exact"    # n = 2^k - 1
    CASE1 = "case1"    # 2^k - 1 < n < 7*2^(k-2) - 1
    CASE2 = "case2"    # 7*2^(k-2) - 1 <= n < 2^(k+1) - 1, k > 1


@dataclass(frozen=True)
class DimensionClass:
    n: int
    k: int
    case: Case


def classify(n: int) -> DimensionClass:
    """Find ``k`` with ``2^k - 1 <= n < 2^(k+1) - 1`` and the case of ``n``.

    For ``k = 1`` the case-2 threshold ``7*2^(k-2) - 1`` is not an integer and
    the case-2 range is empty, so ``n = 2`` lands in case 1.
    """
    n = check_dimension(n)
    k = (n + 1).bit_length() - 1
    if n == (1 << k) - 1:
        case = Case.EXACT
    elif k > 1 and n >= 7 * (1 << (k - 2)) - 1:
        case = Case.CASE2
    else:
        case = Case.CASE1
    return DimensionClass(n, k, case)


def lower_bound(n: int) -> int:
    """Sphere-packing bound ``floor(2^n / (n+1))``."""
    n = check_dimension(n)
    return (1 << n) // (n + 1)


class BoundForm(str, enum.Enum):
    EXACT = "exact 2^(n-k)"
    POW = "2^(n-k)"
    THREE_POW = "3*2^(n-k-2)"


@dataclass(frozen=True)
class Bound:
    value: int
    form: BoundForm


def upper_bound(n: int) -> Bound:
    c = classify(n)
    if c.case is Case.EXACT:
        return Bound(1 << (n - c.k), BoundForm.EXACT)
    if c.case is Case.CASE2:
        return Bound(3 << (n - c.k - 2), BoundForm.THREE_POW)
    return Bound(1 << (n - c.k), BoundForm.POW)


def prior_bound(n: int) -> int:
    """The earlier ``2^(n-k)`` bound, valid across the whole range."""
    c = classify(n)
    return 1 << (n - c.k)


# Minimum independent dominating sets for n = 1..6, as found by
# ``solve.min_ids`` (tests re-derive them).  Sizes 1, 2, 2, 4, 8, 12.
_SEEDS = {
    1: ["0"],
    2: ["00", "11"],
    3: ["000", "111"],
    4: ["0000", "0011", "1101", "1110"],
    5: ["00000", "00011", "00101", "00110", "11001", "11010", "11100", "11111"],
    6: ["000000", "000011", "000101", "001110", "010110", "011001",
        "100110", "101001", "110001", "111010", "111100", "111111"],
}


def seed_set(n: int) -> VertexSet:
    if n not in _SEEDS:
        raise DimensionError(f"no seed for dimension {n}; seeds cover 1..6")
    return VertexSet(n, _SEEDS[n])


def _require_room(s: VertexSet, new_dimension: int) -> None:
    if len(s) == 0:
        raise ValueError("cannot grow an empty set")
    if new_dimension > MAX_DIMENSION:
        raise DimensionError(
            f"dimension {new_dimension} exceeds {MAX_DIMENSION}"
        )


def extend_by_one(s: VertexSet) -> VertexSet:
    """Lift an independent dominating set of ``Q_n`` to ``Q_{n+1}``.

    Each member ``v`` yields ``0.v`` and ``1.v'`` where ``v'`` is ``v`` with
    bit 0 flipped; pairs stay in input order.  The prefix bit is fixed to 0
    for every ``v`` -- mixing prefixes per member can break independence.
    """
    _require_room(s, s.dimension + 1)
    out = _backend.kernels.extend_by_one(s.members, s.dimension)
    return VertexSet._trusted(s.dimension + 1, out)


def expand_odd(s: VertexSet) -> VertexSet:
    """Expand an independent dominating set of ``Q_p`` to ``Q_{2p+1}``.

    For every ``p``-bit code ``A`` (ascending) and every member ``b`` (input
    order) the output word is ``parity(A) | A | b xor A``, top bit to bottom,
    so member ``l = A*|s| + k`` sits at index ``l``.
    """
    p = s.dimension
    _require_room(s, 2 * p + 1)
    out = _backend.kernels.expand_odd(s.members, p)
    return VertexSet._trusted(2 * p + 1, out)


# -- planning ----------------------------------------------------------------

class Step(str, enum.Enum):
    EXPAND_ODD = "ExpandOdd"
    EXTEND_BY_ONE = "ExtendByOne"


def _after(step: Step, d: int) -> int:
    return 2 * d + 1 if step is Step.EXPAND_ODD else d + 1


@dataclass(frozen=True)
class Recipe:
    seed: int
    steps: tuple[Step, ...]
    target: int
    predicted_size: int

    @property
    def seed_tag(self) -> str:
        return f"S{self.seed}"

    def dimensions(self) -> list[int]:
        dims = [self.seed]
        for step in self.steps:
            dims.append(_after(step, dims[-1]))
        return dims

    def __str__(self) -> str:
        steps = ",".join(s.value for s in self.steps) or "-"
        return (
            f"seed={self.seed_tag} steps={steps} "
            f"target={self.target} size={self.predicted_size}"
        )


def _recipe(seed: int, steps: list[Step]) -> Recipe:
    d, size = seed, len(_SEEDS[seed])
    for step in steps:
        size <<= d if step is Step.EXPAND_ODD else 1
        d = _after(step, d)
    return Recipe(seed, tuple(steps), d, size)


def _chain(seed: int, n: int) -> list[Step] | None:
    """ExpandOdd steps from ``seed`` up to the largest chain dimension <= n."""
    if seed > n:
        return None
    steps, d = [], seed
    while 2 * d + 1 <= n:
        steps.append(Step.EXPAND_ODD)
        d = 2 * d + 1
    return steps + [Step.EXTEND_BY_ONE] * (n - d)


def plan(n: int) -> Recipe:
    """Cheapest recipe for ``Q_n`` from the perfect chain (1, 3, 7, 15, 31)
    or the 6-chain (6, 13, 27, 55), ties going to the perfect chain."""
    n = check_dimension(n)
    candidates = [
        _recipe(seed, steps)
        for seed in (1, 6)
        if (steps := _chain(seed, n)) is not None
    ]
    return min(candidates, key=lambda r: r.predicted_size)


def build(recipe: Recipe) -> VertexSet:
    s = seed_set(recipe.seed)
    for step in recipe.steps:
        s = expand_odd(s) if step is Step.EXPAND_ODD else extend_by_one(s)
    if s.dimension != recipe.target:
        raise ValueError(f"recipe reaches {s.dimension}, not {recipe.target}")
    return s


__all__ = [
    "Bound", "BoundForm", "Case", "DimensionClass", "Recipe", "Step",
    "build", "classify", "expand_odd", "extend_by_one",
    "lower_bound", "plan", "prior_bound", "seed_set", "upper_bound",
]
