"""Finite topologized semilattices: closure operators, completeness and claim checks."""

from tsl._core import (
    FiniteSpace,
    ParseError,
    UsageError,
    closure,
    count_topologies_by_families,
    enumerate_meet_tables,
    enumerate_models,
    enumerate_topologies,
    eval_op,
    find_witness,
    interior,
    is_complete,
    is_h_set,
    is_semitopological,
    is_topological,
    is_updown_closed,
    run_claim_suite,
    run_ledger,
    separation,
)

__all__ = [
    "FiniteSpace",
    "ParseError",
    "UsageError",
    "closure",
    "count_topologies_by_families",
    "enumerate_meet_tables",
    "enumerate_models",
    "enumerate_topologies",
    "eval_op",
    "find_witness",
    "interior",
    "is_complete",
    "is_h_set",
    "is_semitopological",
    "is_topological",
    "is_updown_closed",
    "run_claim_suite",
    "run_ledger",
    "separation",
]
