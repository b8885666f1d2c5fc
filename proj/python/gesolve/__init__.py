"""Python interface to the gesolve C++ core.

Exposes problem loading, the diagnostic checks, the implicit-branch solver
and the tangent-cone certification. Results come back as plain dicts
mirroring the CLI's JSON report schema.
"""

from ._core import (
    HypothesisError,
    ParseError,
    Problem,
    approximation_delta,
    builtin,
    certify_tangent,
    degeneracy_profile,
    kernel_check,
    load,
    parse,
    robinson_check,
    scaling_study,
    serialize,
    solve,
    solve_banach,
    strong_regularity_estimate,
)

__all__ = [
    "HypothesisError",
    "ParseError",
    "Problem",
    "approximation_delta",
    "builtin",
    "certify_tangent",
    "degeneracy_profile",
    "kernel_check",
    "load",
    "parse",
    "robinson_check",
    "scaling_study",
    "serialize",
    "solve",
    "solve_banach",
    "strong_regularity_estimate",
]
