"""Independent brute-force reference solvers used only by the tests.

These deliberately avoid the production solver's machinery: no symmetry
breaking, no first-use slot ordering, no caching.  Every member is
assigned any unordered slot pair, and per-locus slot genotypes are found
by plain recursive enumeration.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, product

from sibcover.genotypes import Population


def _locus_feasible_for(children, fams, k) -> bool:
    alleles = sorted({a for g in children for a in g})
    domain = alleles + [alleles[-1] + 1 if alleles else 0]
    gts = list(combinations_with_replacement(domain, 2))

    assign = [None] * k

    def ok(slot: int) -> bool:
        g = assign[slot]
        for (x, y), (a, b) in zip(children, fams):
            if slot not in (a, b):
                continue
            other = b if slot == a else a
            go = assign[other]
            if go is None:
                if x not in g and y not in g:
                    return False
            elif not ((x in g and y in go) or (y in g and x in go)):
                return False
        return True

    def rec(slot: int) -> bool:
        if slot == k:
            return True
        for g in gts:
            assign[slot] = g
            if ok(slot) and rec(slot + 1):
                return True
        assign[slot] = None
        return False

    return rec(0)


def _assignment_feasible(pop: Population, fams, k) -> bool:
    for j in range(pop.ell):
        children = [m.loci[j] for m in pop.members]
        if not _locus_feasible_for(children, fams, k):
            return False
    return True


def brute_min_parent_value(pop: Population, kmax: int | None = None) -> int:
    """Minimum slot count by enumerating every member->pair assignment."""
    n = pop.n
    if n == 0:
        return 0
    if kmax is None:
        kmax = n if n % 2 == 0 else n + 1
    for k in range(2, kmax + 1):
        pairs = list(combinations(range(k), 2))
        for fams in product(pairs, repeat=n):
            used = {s for fam in fams for s in fam}
            if len(used) != k:
                continue
            if _assignment_feasible(pop, fams, k):
                return k
    raise AssertionError(f"no solution up to kmax={kmax}")
