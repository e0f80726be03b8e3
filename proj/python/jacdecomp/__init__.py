"""Isogeny decomposition of Jacobians with finite group action."""

from ._jacdecomp import (
    DEFAULT_SEED,
    BoundExceeded,
    InvariantError,
    UsageError,
    __version__,
    character_table,
    decompose,
    group_order,
    idempotents,
    isotypical_ranks,
    prym_exponents,
    run,
    subgroup_count,
)

__all__ = [
    "DEFAULT_SEED",
    "BoundExceeded",
    "InvariantError",
    "UsageError",
    "__version__",
    "character_table",
    "decompose",
    "group_order",
    "idempotents",
    "isotypical_ranks",
    "prym_exponents",
    "run",
    "subgroup_count",
]
