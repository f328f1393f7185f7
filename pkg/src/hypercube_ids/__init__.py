"""Independent dominating sets of hypercubes.

Constructions that grow a set from ``Q_p`` to ``Q_{2p+1}`` or ``Q_{n+1}``,
the bounds they achieve, exhaustive verification, and an exact solver for
``n <= 7``.
"""

from ._backend import kernels as _kernels
from .construct import (
    Bound,
    BoundForm,
    Case,
    DimensionClass,
    Recipe,
    Step,
    build,
    classify,
    expand_odd,
    extend_by_one,
    lower_bound,
    plan,
    prior_bound,
    seed_set,
    upper_bound,
)
from .core import (
    MAX_DIMENSION,
    DimensionError,
    SetFormatError,
    VertexSet,
    dumps,
    hamming_distance,
    loads,
    neighbors,
    parity,
    read_set,
    write_set,
)
from .solve import SearchTimeout, SolveResult, Status, min_ids, verify_no_smaller
from .verify import DominationCheck, VerifyReport, certify, is_dominating, is_independent

BACKEND = _kernels.NAME

__version__ = "0.1.0"
