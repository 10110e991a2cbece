"""Seeded synthetic populations with ground-truth parents.

Randomness comes from numpy's PCG64 generator (a named, portable
algorithm), seeded directly from the config, so identical configs yield
byte-identical serialized populations on any platform.  Draw order is
fixed: founder parents by family index (two uniform alleles per locus,
first parent then second), then children by family then birth index (per
family a single count draw when a range is configured, then per child per
locus one allele index from each parent, first parent's draw first).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .genotypes import Individual, Population, genotype


@dataclass(frozen=True)
class SimConfig:
    families: int
    children_per_family: int | tuple[int, int]
    loci: int
    alleles_per_locus: int
    seed: int

    def __post_init__(self) -> None:
        lo, hi = self.children_range
        if self.families < 1 or lo < 1 or hi < lo:
            raise ValueError("family and child counts must be >= 1")
        if self.loci < 1 or self.alleles_per_locus < 1:
            raise ValueError("loci and alleles_per_locus must be >= 1")

    @property
    def children_range(self) -> tuple[int, int]:
        c = self.children_per_family
        return (c, c) if isinstance(c, int) else (c[0], c[1])


@dataclass(frozen=True)
class Family:
    parents: tuple[Individual, Individual]
    child_ids: tuple[str, ...]


def mendelian_child(
    a: Individual, b: Individual, rng: np.random.Generator, ident: str = "child"
) -> Individual:
    """Sample a child: per locus one uniform allele from each parent."""
    if a.ell != b.ell:
        raise ValueError("parents must have equal locus counts")
    loci = []
    for ga, gb in zip(a.loci, b.loci):
        x = ga[int(rng.integers(2))]
        y = gb[int(rng.integers(2))]
        loci.append(genotype(x, y))
    return Individual(ident, tuple(loci))


def random_population(cfg: SimConfig) -> tuple[Population, list[Family]]:
    """Children of random founder pairs, plus the ground-truth families."""
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    pool = cfg.alleles_per_locus

    def founder(ident: str) -> Individual:
        loci = []
        for _ in range(cfg.loci):
            x = int(rng.integers(1, pool + 1))
            y = int(rng.integers(1, pool + 1))
            loci.append(genotype(x, y))
        return Individual(ident, tuple(loci))

    parents = [
        (founder(f"F{f}P0"), founder(f"F{f}P1")) for f in range(cfg.families)
    ]
    lo, hi = cfg.children_range
    members: list[Individual] = []
    families: list[Family] = []
    for f, (pa, pb) in enumerate(parents):
        count = lo if lo == hi else int(rng.integers(lo, hi + 1))
        ids = []
        for i in range(count):
            child = mendelian_child(pa, pb, rng, ident=f"F{f}C{i}")
            members.append(child)
            ids.append(child.id)
        families.append(Family((pa, pb), tuple(ids)))
    return Population(tuple(members), cfg.loci), families


def serialize_truth(families: list[Family]) -> str:
    """One line per family: the two parent ids, then the child ids."""
    lines = []
    for fam in families:
        lines.append(
            " ".join([fam.parents[0].id, fam.parents[1].id, *fam.child_ids])
        )
    return "\n".join(lines) + "\n"
