"""Steiner quadruple systems invariant under PSL_2(q) and its overgroups."""

from ._core import (
    Construction,
    Design,
    DomainError,
    Field,
    ParseError,
    ResourceError,
    VerificationReport,
    Violation,
    block_stabilizer,
    build_example1,
    build_example2,
    build_example3,
    classify,
    derived,
    group_order,
    hanani_admissible,
    invariant_sqs_search,
    orbits_on_k_subsets,
    sqs_block_count,
    verify,
)

__all__ = [
    "Construction",
    "Design",
    "DomainError",
    "Field",
    "ParseError",
    "ResourceError",
    "VerificationReport",
    "Violation",
    "block_stabilizer",
    "build_example1",
    "build_example2",
    "build_example3",
    "classify",
    "derived",
    "group_order",
    "hanani_admissible",
    "invariant_sqs_search",
    "orbits_on_k_subsets",
    "sqs_block_count",
    "verify",
]
