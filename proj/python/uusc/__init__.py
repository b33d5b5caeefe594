"""Solvers and exact LP certificates for (p,k)-uniform unweighted set cover."""

from ._uusc import (
    Instance,
    InstanceTooLarge,
    InvalidParams,
    InvalidSeedPacking,
    PreconditionViolated,
    canonicalized,
    exact_min_cover,
    gen_biclique,
    gen_random,
    gen_tight,
    greedy,
    rho,
    seed_a2,
    solve_a1,
    solve_a2,
    transform_lemma1,
    validate,
    verify_theory,
)

__all__ = [
    "Instance",
    "InstanceTooLarge",
    "InvalidParams",
    "InvalidSeedPacking",
    "PreconditionViolated",
    "canonicalized",
    "exact_min_cover",
    "gen_biclique",
    "gen_random",
    "gen_tight",
    "greedy",
    "rho",
    "seed_a2",
    "solve_a1",
    "solve_a2",
    "transform_lemma1",
    "validate",
    "verify_theory",
]
