"""Greedy sibling-group cover with a subset-enumeration cap c.

Each round picks a largest sibling subset of the uncovered members of size
at most c and charges it two fresh parents.  For max group size a this
yields an (a/c + ln c)*sqrt(n) approximation of the minimum parent count,
using polynomially many oracle queries for fixed c.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .genotypes import CoverSolution, Individual, Population
from .mendel import OracleCounter, is_sibling_set, materialize_parents


@dataclass(frozen=True)
class GreedyConfig:
    """c is the largest subset size the greedy will query the oracle with."""

    c: int

    def __post_init__(self) -> None:
        if self.c < 1:
            raise ValueError("enumeration cap c must be >= 1")


def next_group(
    pop: Population,
    uncovered: Iterable[int],
    cfg: GreedyConfig,
    counter: OracleCounter | None = None,
) -> tuple[int, ...]:
    """A maximum-cardinality sibling subset of `uncovered` of size <= c.

    Sizes are scanned descending (valid by subset closure of sibling
    sets); within a size, index tuples in lexicographic order, first
    feasible wins, so the result is deterministic.
    """
    idx = sorted(set(uncovered))
    if not idx:
        raise ValueError("uncovered set is empty")
    for size in range(min(cfg.c, len(idx)), 0, -1):
        for combo in combinations(idx, size):
            if is_sibling_set(pop, combo, counter):
                return combo
    raise AssertionError("unreachable: singletons are always sibling sets")


def greedy_cover(pop: Population, cfg: GreedyConfig) -> CoverSolution:
    """Cover the population greedily, two fresh parent slots per group."""
    counter = OracleCounter()
    uncovered = set(range(pop.n))
    groups: list[tuple[int, ...]] = []
    while uncovered:
        g = next_group(pop, uncovered, cfg, counter)
        groups.append(g)
        uncovered -= set(g)
    families: list[tuple[int, int]] = []
    slots: list[Individual] = []
    for gi, g in enumerate(groups):
        sa, sb = 2 * gi, 2 * gi + 1
        pa, pb = materialize_parents(pop, g, ids=(f"S{sa}", f"S{sb}"))
        families.append((sa, sb))
        slots.extend([pa, pb])
    return CoverSolution(
        groups=tuple(groups),
        slot_count=2 * len(groups),
        family_of_group=tuple(families),
        slot_genotypes=tuple(slots),
        oracle_calls=counter.calls,
    )
