from itertools import combinations_with_replacement

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sibcover.genotypes import Individual, genotype, individual, population
from sibcover.mendel import (
    OracleCounter,
    brute_sibling_check,
    can_be_child_of,
    is_sibling_set,
    locus_feasible,
    materialize_parents,
)


def ind(ident, *pairs):
    return individual(ident, pairs)


class TestCanBeChildOf:
    def test_worked_example_parents(self):
        child = ind("c", (1, 2), (1, 1))
        a = ind("a", (1, 3), (1, 6))
        b = ind("b", (2, 4), (1, 6))
        assert can_be_child_of(child, a, b)

    def test_missing_allele(self):
        assert not can_be_child_of(
            ind("c", (3, 3)), ind("a", (1, 1)), ind("b", (1, 2))
        )

    def test_identity_case(self):
        p = ind("p", (1, 2))
        assert can_be_child_of(ind("c", (1, 2)), p, p)

    def test_homozygous_parent_contributes_once_per_draw(self):
        # {1,1} can come from {1,1} x {1,2}: one allele from each parent
        assert can_be_child_of(ind("c", (1, 1)), ind("a", (1, 1)), ind("b", (1, 2)))
        # but {1,1} cannot come from {1,2} x {3,4}
        assert not can_be_child_of(ind("c", (1, 1)), ind("a", (1, 2)), ind("b", (3, 4)))

    def test_locus_count_mismatch(self):
        with pytest.raises(ValueError):
            can_be_child_of(ind("c", (1, 1)), ind("a", (1, 1), (2, 2)), ind("b", (1, 1)))


def reference_locus_pairs(children):
    """Independent enumeration for comparison with locus_feasible."""
    alleles = sorted({a for g in children for a in g})
    domain = alleles + [alleles[-1] + 1 if alleles else 0]
    gts = list(combinations_with_replacement(domain, 2))
    out = []
    for i, p in enumerate(gts):
        for q in gts[i:]:
            if all(
                (x in p and y in q) or (y in p and x in q) for x, y in children
            ):
                out.append((p, q))
    return out


class TestLocusFeasible:
    def test_three_children_four_alleles(self):
        children = [(1, 2), (3, 4), (1, 3)]
        pairs = locus_feasible(children)
        assert pairs
        assert ((1, 4), (2, 3)) in pairs
        assert pairs == reference_locus_pairs(children)

    def test_six_distinct_alleles_infeasible(self):
        assert locus_feasible([(1, 2), (3, 4), (5, 6)]) == []

    def test_empty_children(self):
        assert locus_feasible([]) == [((0, 0), (0, 0))]

    def test_canonical_sort_order(self):
        pairs = locus_feasible([(1, 2)])
        assert pairs == sorted(pairs)


class TestIsSiblingSet:
    def test_worked_triple(self, example_pop):
        assert is_sibling_set(example_pop, [0, 1, 2])

    def test_any_pair_is_a_sibling_group(self):
        rng = np.random.default_rng(5)
        members = [
            individual(f"x{i}", [(int(rng.integers(1, 9)), int(rng.integers(1, 9))) for _ in range(3)])
            for i in range(6)
        ]
        pop = population(members)
        for i in range(6):
            for j in range(i + 1, 6):
                assert is_sibling_set(pop, [i, j])

    def test_four_allele_bound(self):
        pop = population([ind("a", (1, 2)), ind("b", (3, 4)), ind("c", (5, 6))])
        assert not is_sibling_set(pop, [0, 1, 2])

    def test_empty_and_singleton(self, example_pop):
        assert is_sibling_set(example_pop, [])
        assert is_sibling_set(example_pop, [1])

    def test_counter_counts_every_query(self, example_pop):
        counter = OracleCounter()
        is_sibling_set(example_pop, [0, 1], counter)
        is_sibling_set(example_pop, [0, 1, 2], counter)
        assert counter.calls == 2

    def test_invalid_index(self, example_pop):
        with pytest.raises(IndexError):
            is_sibling_set(example_pop, [0, 7])


class TestMaterializeParents:
    def test_worked_triple_parents_verify(self, example_pop):
        pa, pb = materialize_parents(example_pop, [0, 1, 2])
        for m in example_pop.members:
            assert can_be_child_of(m, pa, pb)

    def test_singleton_homozygous(self):
        pop = population([ind("a", (1, 1))])
        pa, pb = materialize_parents(pop, [0])
        assert 1 in pa.loci[0] and 1 in pb.loci[0]
        assert can_be_child_of(pop.members[0], pa, pb)

    def test_disjoint_pair(self):
        pop = population([ind("a", (1, 2)), ind("b", (3, 4))])
        pa, pb = materialize_parents(pop, [0, 1])
        for m in pop.members:
            assert can_be_child_of(m, pa, pb)

    def test_rejects_non_sibling_set(self):
        pop = population([ind("a", (1, 2)), ind("b", (3, 4)), ind("c", (5, 6))])
        with pytest.raises(ValueError):
            materialize_parents(pop, [0, 1, 2])

    def test_deterministic(self, example_pop):
        assert materialize_parents(example_pop, [0, 1, 2]) == materialize_parents(
            example_pop, [0, 1, 2]
        )


def random_population(rng, n, ell, alleles):
    members = [
        individual(
            f"r{i}",
            [
                (int(rng.integers(1, alleles + 1)), int(rng.integers(1, alleles + 1)))
                for _ in range(ell)
            ],
        )
        for i in range(n)
    ]
    return population(members, ell=ell)


class TestBruteAgreement:
    def test_worked_triple(self, example_pop):
        assert brute_sibling_check(example_pop, [0, 1, 2])

    def test_four_allele_bound(self):
        pop = population([ind("a", (1, 2)), ind("b", (3, 4)), ind("c", (5, 6))])
        assert not brute_sibling_check(pop, [0, 1, 2])

    def test_agreement_on_random_member_sets(self):
        rng = np.random.default_rng(99)
        for _ in range(600):
            n = int(rng.integers(2, 8))
            pop = random_population(
                rng, n, int(rng.integers(1, 4)), int(rng.integers(2, 7))
            )
            size = int(rng.integers(1, min(n, 5) + 1))
            members = sorted(rng.choice(n, size=size, replace=False).tolist())
            assert is_sibling_set(pop, members) == brute_sibling_check(pop, members)


@st.composite
def sibling_scenarios(draw):
    ell = draw(st.integers(1, 3))
    n = draw(st.integers(1, 6))
    members = []
    for i in range(n):
        loci = [
            genotype(draw(st.integers(1, 6)), draw(st.integers(1, 6)))
            for _ in range(ell)
        ]
        members.append(Individual(f"h{i}", tuple(loci)))
    return population(members, ell=ell)


@given(sibling_scenarios(), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_subset_closure(pop, pyrandom):
    all_members = list(range(pop.n))
    if not is_sibling_set(pop, all_members):
        return
    size = pyrandom.randint(0, pop.n)
    subset = sorted(pyrandom.sample(all_members, size))
    assert is_sibling_set(pop, subset)


def test_oversized_locus_never_feasible():
    # more than 4 distinct alleles at a locus can never come from two parents
    pop = population(
        [ind("a", (1, 2)), ind("b", (3, 4)), ind("c", (5, 5)), ind("d", (1, 4))]
    )
    assert not is_sibling_set(pop, [0, 1, 2, 3])
    assert not brute_sibling_check(pop, [0, 1, 2, 3])
