"""Exact computations for the principal subspace of the twisted A2 level-one module.

Modes are passed in quarter units: ("u", -3) is u(-3/4), ("z", -4) is z(-1).
Gaussian rationals come back as (Fraction, Fraction) pairs.
"""

import json

from ._a2twist import (
    ConfigError,
    CutoffOverflow,
    __version__,
    cocycle_epsC,
    commutator_C,
    graded_dimension,
    ideal_rank,
    normal_order,
    partition_oracle,
    pbw_count,
    psi,
    relation_generator,
    sigma,
    tau_shift,
    u_bracket,
)
from . import _a2twist

SUITES = (
    "group",
    "relations",
    "brackets",
    "quadratic",
    "oracle",
    "recursion",
    "exactness",
    "presentation",
    "shift",
    "stability",
)


def dims(cutoff, parallelism=1):
    """Dimension table with the partition oracle column, as a dict."""
    return json.loads(_a2twist.dims_json(cutoff, parallelism))


def verify(
    suites=(),
    cutoff=40,
    presentation_cutoff=None,
    exactness_cutoff=None,
    relations_cutoff=24,
    mode_bound=12,
    t_max_quarters=24,
    shift_cutoff=16,
    parallelism=1,
):
    """Run verification suites and return the report document."""
    if presentation_cutoff is None:
        presentation_cutoff = min(16, cutoff)
    if exactness_cutoff is None:
        exactness_cutoff = min(30, cutoff)
    doc = _a2twist.verify_json(
        list(suites),
        cutoff,
        presentation_cutoff,
        exactness_cutoff,
        relations_cutoff,
        mode_bound,
        t_max_quarters,
        shift_cutoff,
        parallelism,
    )
    return json.loads(doc)


__all__ = [
    "ConfigError",
    "CutoffOverflow",
    "SUITES",
    "__version__",
    "cocycle_epsC",
    "commutator_C",
    "dims",
    "graded_dimension",
    "ideal_rank",
    "normal_order",
    "partition_oracle",
    "pbw_count",
    "psi",
    "relation_generator",
    "sigma",
    "tau_shift",
    "u_bracket",
    "verify",
]
