"""Exact desk-scale solvers.

MIN-PARENT is solved by searching over parent *slots*: pick k abstract
slots, assign every member an unordered pair of two distinct slots (its
family), and verify per locus that each slot can be given one genotype
making every member Mendelian-derivable from its pair.  A slot set with a
per-member family assignment induces the cover whose groups are the
members sharing a family, and conversely, so the first feasible k
(searched ascending from 2) is the minimum parent count.

FIND-MIN-PARENT is solved by ascending-size subset search over the
candidate pool, with per-cell feasible parent pairs precomputed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .genotypes import (
    CoverSolution,
    FindMinParentInstance,
    Genotype,
    Individual,
    Population,
)
from .mendel import (
    _genotypes_over,
    _locus_domain,
    can_be_child_of,
    is_sibling_set,
    materialize_parents,
)


class InfeasibleError(Exception):
    """No valid solution exists for the given instance."""


class BudgetExceededError(Exception):
    """The search ran out of its time budget before proving optimality."""


@dataclass(frozen=True)
class FamilyAssignment:
    """k parent slots plus, per member, an unordered pair of distinct slots."""

    slot_count: int
    family_of_member: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for a, b in self.family_of_member:
            if a == b:
                raise ValueError("a family needs two distinct slots")
            if not (0 <= a < self.slot_count and 0 <= b < self.slot_count):
                raise ValueError(f"slot pair ({a}, {b}) out of range")


@dataclass(frozen=True)
class ParentSelection:
    """Chosen pool indices plus the serving parent pair for each cell."""

    chosen: tuple[int, ...]
    pair_of_group: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ExactResult:
    solution: CoverSolution
    optimal: bool


def _locus_witness(
    locus_children: Sequence[Genotype],
    families: Sequence[tuple[int, int]],
    domain: Sequence[int],
) -> dict[int, Genotype] | None:
    """Genotype per slot making every member derivable, or None.

    Backtracking over the slots that occur in `families`, ascending; a
    partial assignment is pruned as soon as a member with one assigned
    parent cannot take either of its alleles from that parent.
    """
    slots = sorted({s for fam in families for s in fam})
    gts = _genotypes_over(domain)
    assign: dict[int, Genotype] = {}

    # members touching each slot, with the co-parent slot
    touching: dict[int, list[tuple[Genotype, int]]] = {s: [] for s in slots}
    for child, (a, b) in zip(locus_children, families):
        touching[a].append((child, b))
        touching[b].append((child, a))

    def ok_after(s: int) -> bool:
        g = assign[s]
        for (x, y), other in touching[s]:
            go = assign.get(other)
            if go is None:
                if x not in g and y not in g:
                    return False
            else:
                if not ((x in g and y in go) or (y in g and x in go)):
                    return False
        return True

    def rec(i: int) -> bool:
        if i == len(slots):
            return True
        s = slots[i]
        for g in gts:
            assign[s] = g
            if ok_after(s) and rec(i + 1):
                return True
        del assign[s]
        return False

    return dict(assign) if rec(0) else None


def locus_slot_assignment_exists(
    locus_children: Sequence[Genotype],
    fa: FamilyAssignment,
    domain: Sequence[int] | None = None,
) -> bool:
    """Can each slot take one genotype over `domain` satisfying every member?"""
    if domain is None:
        domain = _locus_domain(locus_children)
    return _locus_witness(locus_children, fa.family_of_member, domain) is not None


def _candidate_pairs(used: int, k: int) -> list[tuple[int, int]]:
    """Slot pairs allowed next under first-use symmetry breaking."""
    pairs = [
        (a, b) for a in range(used) for b in range(a + 1, min(used + 1, k))
    ]
    if used + 1 < k:
        pairs.append((used, used + 1))
    return pairs


def _pairing_fallback(pop: Population) -> CoverSolution:
    """The always-feasible solution pairing members arbitrarily."""
    groups: list[tuple[int, ...]] = []
    i = 0
    while i + 1 < pop.n:
        groups.append((i, i + 1))
        i += 2
    if i < pop.n:
        groups.append((i,))
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
    )


def _solution_from_assignment(
    pop: Population, k: int, fams: Sequence[tuple[int, int]]
) -> CoverSolution:
    slot_loci: list[list[Genotype]] = [[] for _ in range(k)]
    for j in range(pop.ell):
        children = [m.loci[j] for m in pop.members]
        domain = _locus_domain(children)
        witness = _locus_witness(children, fams, domain)
        assert witness is not None, "assignment lost feasibility at materialization"
        for s in range(k):
            slot_loci[s].append(witness[s])
    slots = tuple(
        Individual(f"S{s}", tuple(slot_loci[s])) for s in range(k)
    )
    group_of: dict[tuple[int, int], list[int]] = {}
    order: list[tuple[int, int]] = []
    for i, fam in enumerate(fams):
        if fam not in group_of:
            group_of[fam] = []
            order.append(fam)
        group_of[fam].append(i)
    groups = tuple(tuple(group_of[fam]) for fam in order)
    return CoverSolution(
        groups=groups,
        slot_count=k,
        family_of_group=tuple(order),
        slot_genotypes=slots,
    )


def exact_min_parent(
    pop: Population,
    max_slots: int | None = None,
    budget_ms: float | None = None,
) -> ExactResult:
    """Provably minimum parent count for desk-size populations.

    Tries k = 2, 3, ... slots; within each k, family assignments are
    enumerated with first-use symmetry breaking (member 0 takes slots
    (0, 1); slot s may appear only after all smaller indices have) and a
    partial assignment is pruned when some locus has no slot-genotype
    witness.  On budget exhaustion the arbitrary-pairing solution is
    returned flagged non-optimal.
    """
    n = pop.n
    if n == 0:
        return ExactResult(CoverSolution((), 0, (), (), 0), True)
    upper = n if n % 2 == 0 else n + 1
    if max_slots is None:
        max_slots = upper
    deadline = time.monotonic() + budget_ms / 1000.0 if budget_ms else None

    loci_children = [
        tuple(m.loci[j] for m in pop.members) for j in range(pop.ell)
    ]
    domains = [_locus_domain(ch) for ch in loci_children]
    # most-constrained loci first
    locus_order = sorted(range(pop.ell), key=lambda j: -len(domains[j]))
    cache: dict[tuple, bool] = {}

    def loci_ok(fams: list[tuple[int, int]]) -> bool:
        i = len(fams)
        key_f = tuple(fams)
        for j in locus_order:
            key = (j, key_f)
            ok = cache.get(key)
            if ok is None:
                ok = (
                    _locus_witness(loci_children[j][:i], fams, domains[j])
                    is not None
                )
                cache[key] = ok
            if not ok:
                return False
        return True

    def search(k: int) -> list[tuple[int, int]] | None:
        fams: list[tuple[int, int]] = []

        def rec(i: int, used: int) -> bool:
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceededError
            if i == n:
                return used == k
            if used + 2 * (n - i) < k:
                return False
            for pair in _candidate_pairs(used, k):
                fams.append(pair)
                if loci_ok(fams) and rec(i + 1, max(used, pair[1] + 1)):
                    return True
                fams.pop()
            return False

        return fams if rec(0, 0) else None

    try:
        for k in range(2, min(max_slots, upper) + 1):
            fams = search(k)
            if fams is not None:
                return ExactResult(_solution_from_assignment(pop, k, fams), True)
    except BudgetExceededError:
        return ExactResult(_pairing_fallback(pop), False)
    # max_slots below the pairing bound: report the fallback, not proven optimal
    return ExactResult(_pairing_fallback(pop), False)


def validate_instance(inst: FindMinParentInstance) -> None:
    """Every partition cell must be a valid sibling set."""
    for ci, cell in enumerate(inst.partition):
        if not is_sibling_set(inst.pop, cell):
            ids = " ".join(inst.pop.members[i].id for i in cell)
            raise ValueError(f"partition cell {ci} ({ids}) is not a sibling set")


def feasible_pairs_for_group(
    inst: FindMinParentInstance, cell: Iterable[int]
) -> list[tuple[int, int]]:
    """All unordered pool pairs that can parent every member of the cell."""
    cell = list(cell)
    kids = [inst.pop.members[i] for i in cell]
    pairs: list[tuple[int, int]] = []
    for i, j in combinations(range(len(inst.parent_pool)), 2):
        pi, pj = inst.parent_pool[i], inst.parent_pool[j]
        if all(can_be_child_of(k, pi, pj) for k in kids):
            pairs.append((i, j))
    return pairs


def exact_find_min_parent(
    inst: FindMinParentInstance,
    budget_ms: float | None = None,
) -> ParentSelection:
    """Minimum pool subset supplying a feasible parent pair to every cell."""
    cell_pairs = [feasible_pairs_for_group(inst, cell) for cell in inst.partition]
    for ci, pairs in enumerate(cell_pairs):
        if not pairs:
            raise InfeasibleError(f"partition cell {ci} has no feasible parent pair")
    m = len(inst.parent_pool)
    pair_masks = [
        [(1 << i) | (1 << j) for i, j in pairs] for pairs in cell_pairs
    ]
    deadline = time.monotonic() + budget_ms / 1000.0 if budget_ms else None
    for size in range(0, m + 1):
        for chosen in combinations(range(m), size):
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceededError
            mask = 0
            for i in chosen:
                mask |= 1 << i
            if all(
                any(pm & ~mask == 0 for pm in masks) for masks in pair_masks
            ):
                picked = tuple(
                    next(p for p in pairs if _pair_in(p, mask))
                    for pairs in cell_pairs
                )
                return ParentSelection(chosen, picked)
    raise InfeasibleError("no pool subset covers every cell")


def _pair_in(pair: tuple[int, int], mask: int) -> bool:
    return ((1 << pair[0]) | (1 << pair[1])) & ~mask == 0


def greedy_find_min_parent(inst: FindMinParentInstance) -> ParentSelection:
    """Heuristic: repeatedly add the pool pair feasible for the most cells.

    No approximation ratio is claimed; the problem is strongly
    inapproximable in general.  Ties break lexicographically on the pair.
    """
    cell_pairs = [feasible_pairs_for_group(inst, cell) for cell in inst.partition]
    for ci, pairs in enumerate(cell_pairs):
        if not pairs:
            raise InfeasibleError(f"partition cell {ci} has no feasible parent pair")
    m = len(inst.parent_pool)
    chosen: set[int] = set()

    def served(ci: int) -> bool:
        return any(p[0] in chosen and p[1] in chosen for p in cell_pairs[ci])

    unserved = [ci for ci in range(len(cell_pairs)) if cell_pairs[ci]]
    while True:
        unserved = [ci for ci in unserved if not served(ci)]
        if not unserved:
            break
        best: tuple[int, int] | None = None
        best_count = -1
        for pair in combinations(range(m), 2):
            count = sum(1 for ci in unserved if pair in cell_pairs[ci])
            if count > best_count:
                best, best_count = pair, count
        assert best is not None and best_count > 0
        chosen.update(best)
    picked = tuple(
        next(p for p in pairs if p[0] in chosen and p[1] in chosen)
        for pairs in cell_pairs
    )
    return ParentSelection(tuple(sorted(chosen)), picked)
