"""Mendelian feasibility oracle for sibling sets.

A set of individuals is a full sibling group iff a single pair of parents
can produce every member under the Mendelian rule (one allele from each
parent per locus).  Feasibility decomposes exactly per locus: the parent
pair is an independent unordered pair of genotypes at every locus, so
per-locus witnesses compose into two parent individuals.

Parent genotypes are enumerated over the alleles observed in the children
plus one wildcard symbol per locus.  Every allele a parent actually
contributes is observed in some child, and uncontributed parent alleles
are arbitrary, so replacing all of them by a single fresh symbol loses no
feasible pair.  The wildcard is (max observed allele at the locus) + 1.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .genotypes import CoverSolution, Genotype, Individual, Population

LocusParentPair = tuple[Genotype, Genotype]


class OracleCounter:
    """Counts sibling-set oracle queries.

    Shared mutable state across a solver run; the increment is a single
    attribute update and is exact under any interleaving of CPython
    threads.
    """

    __slots__ = ("calls",)

    def __init__(self) -> None:
        self.calls = 0

    def bump(self) -> None:
        self.calls += 1


def can_be_child_of(child: Individual, a: Individual, b: Individual) -> bool:
    """Mendelian child check: one allele from each parent at every locus."""
    if child.ell != a.ell or child.ell != b.ell:
        raise ValueError("locus-count mismatch between child and parents")
    for (x, y), ga, gb in zip(child.loci, a.loci, b.loci):
        if not ((x in ga and y in gb) or (y in ga and x in gb)):
            return False
    return True


def _locus_domain(children: Sequence[Genotype]) -> list[int]:
    """Observed alleles plus one wildcard; wildcard = max observed + 1."""
    observed = sorted({al for g in children for al in g})
    wildcard = observed[-1] + 1 if observed else 0
    return observed + [wildcard]


def _genotypes_over(domain: Sequence[int]) -> list[Genotype]:
    return list(combinations_with_replacement(domain, 2))


def _pair_fits(children: Sequence[Genotype], p: Genotype, q: Genotype) -> bool:
    for x, y in children:
        if not ((x in p and y in q) or (y in p and x in q)):
            return False
    return True


def locus_feasible(children: Sequence[Genotype]) -> list[LocusParentPair]:
    """All feasible unordered parent-genotype pairs at one locus.

    Non-empty iff some parent pair over any allele universe exists.  Pairs
    come out in canonical (lexicographic) sort order.
    """
    gts = _genotypes_over(_locus_domain(children))
    pairs: list[LocusParentPair] = []
    for i, p in enumerate(gts):
        for q in gts[i:]:
            if _pair_fits(children, p, q):
                pairs.append((p, q))
    return pairs


def _first_feasible_pair(children: Sequence[Genotype]) -> LocusParentPair | None:
    gts = _genotypes_over(_locus_domain(children))
    for i, p in enumerate(gts):
        for q in gts[i:]:
            if _pair_fits(children, p, q):
                return (p, q)
    return None


def is_sibling_set(
    pop: Population,
    members: Iterable[int],
    counter: OracleCounter | None = None,
) -> bool:
    """The oracle: can one parent pair produce every listed member?"""
    members = list(members)
    for i in members:
        if not 0 <= i < pop.n:
            raise IndexError(f"member index {i} out of range")
    if counter is not None:
        counter.bump()
    for j in range(pop.ell):
        children = [pop.members[i].loci[j] for i in members]
        if _first_feasible_pair(children) is None:
            return False
    return True


def materialize_parents(
    pop: Population,
    members: Iterable[int],
    ids: tuple[str, str] = ("P0", "P1"),
) -> tuple[Individual, Individual]:
    """Two concrete parents for a sibling set.

    Per locus the first pair in locus_feasible's canonical order is chosen,
    so the result is deterministic.  Wildcard alleles materialize as (max
    observed allele at that locus) + 1.
    """
    members = list(members)
    loci_a: list[Genotype] = []
    loci_b: list[Genotype] = []
    for j in range(pop.ell):
        children = [pop.members[i].loci[j] for i in members]
        pair = _first_feasible_pair(children)
        if pair is None:
            raise ValueError("materialize_parents called on a non-sibling set")
        loci_a.append(pair[0])
        loci_b.append(pair[1])
    return Individual(ids[0], tuple(loci_a)), Individual(ids[1], tuple(loci_b))


def brute_sibling_check(pop: Population, members: Iterable[int]) -> bool:
    """Independent reference oracle: enumerate whole parent pairs.

    Searches parent genotype sequences locus by locus over the
    observed-plus-wildcard domain, pruning a partial pair as soon as some
    member's genotype at an assigned locus is not derivable from it; a
    completed pair is confirmed with can_be_child_of on every member.
    Intended for small inputs (<= 6 members, <= 4 loci); the pruning only
    skips extensions of pairs that already fail a member.
    """
    members = list(members)
    kids = [pop.members[i] for i in members]
    ell = pop.ell
    # Most-constrained loci first: more distinct alleles fail faster.
    order = sorted(
        range(ell),
        key=lambda j: -len({al for k in kids for al in k.loci[j]}),
    )
    per_locus: list[list[tuple[Genotype, Genotype]]] = []
    for j in order:
        children = [k.loci[j] for k in kids]
        gts = _genotypes_over(_locus_domain(children))
        per_locus.append([(p, q) for i, p in enumerate(gts) for q in gts[i:]])

    acc_a: list[Genotype] = []
    acc_b: list[Genotype] = []

    def extend(depth: int) -> bool:
        if depth == ell:
            loci_a = [None] * ell
            loci_b = [None] * ell
            for pos, j in enumerate(order):
                loci_a[j] = acc_a[pos]
                loci_b[j] = acc_b[pos]
            pa = Individual("bruteA", tuple(loci_a))
            pb = Individual("bruteB", tuple(loci_b))
            return all(can_be_child_of(k, pa, pb) for k in kids)
        j = order[depth]
        for p, q in per_locus[depth]:
            ok = True
            for k in kids:
                x, y = k.loci[j]
                if not ((x in p and y in q) or (y in p and x in q)):
                    ok = False
                    break
            if not ok:
                continue
            acc_a.append(p)
            acc_b.append(q)
            if extend(depth + 1):
                return True
            acc_a.pop()
            acc_b.pop()
        return False

    return extend(0)


def verify_cover(pop: Population, sol: CoverSolution) -> None:
    """Raise ValueError unless sol is a valid Mendelian partition cover."""
    covered: list[int] = []
    for g in sol.groups:
        covered.extend(g)
    if sorted(covered) != list(range(pop.n)):
        raise ValueError("groups do not partition the population")
    for group, (sa, sb) in zip(sol.groups, sol.family_of_group):
        pa = sol.slot_genotypes[sa]
        pb = sol.slot_genotypes[sb]
        for i in group:
            if not can_be_child_of(pop.members[i], pa, pb):
                raise ValueError(
                    f"member {pop.members[i].id!r} fails the Mendelian check "
                    f"against slots ({sa}, {sb})"
                )
