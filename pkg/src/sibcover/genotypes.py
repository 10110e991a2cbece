"""Core domain types for genotyped populations and the text instance format.

A genotype is the unordered pair of alleles an individual carries at one
locus; it is stored canonically as a tuple (lo, hi) with lo <= hi so that
multiset equality is plain tuple equality.  Alleles are non-negative
integers; string alleles from field data must be dictionary-encoded before
they reach this layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

Genotype = tuple[int, int]


class ParseError(ValueError):
    """Malformed instance file.  The message carries the 1-based line number."""


def genotype(a: int, b: int) -> Genotype:
    """Canonicalize an allele pair: unordered, lo <= hi, non-negative."""
    if a < 0 or b < 0:
        raise ValueError(f"negative allele in genotype ({a}, {b})")
    return (a, b) if a <= b else (b, a)


def format_genotype(g: Genotype) -> str:
    return f"{g[0]}/{g[1]}"


@dataclass(frozen=True)
class Individual:
    """One genotyped individual: an id token and one genotype per locus."""

    id: str
    loci: tuple[Genotype, ...]

    def __post_init__(self) -> None:
        if not self.id or any(ch.isspace() for ch in self.id):
            raise ValueError(f"individual id must be a non-empty token: {self.id!r}")

    @property
    def ell(self) -> int:
        return len(self.loci)


def individual(ident: str, pairs: Iterable[tuple[int, int]]) -> Individual:
    """Build an Individual, canonicalizing every genotype."""
    return Individual(ident, tuple(genotype(a, b) for a, b in pairs))


@dataclass(frozen=True)
class Population:
    """A universe of individuals, all with the same number of loci."""

    members: tuple[Individual, ...]
    ell: int

    def __post_init__(self) -> None:
        ids = [m.id for m in self.members]
        if len(set(ids)) != len(ids):
            dup = next(i for i in ids if ids.count(i) > 1)
            raise ValueError(f"duplicate individual id {dup!r}")
        for m in self.members:
            if m.ell != self.ell:
                raise ValueError(
                    f"individual {m.id!r} has {m.ell} loci, expected {self.ell}"
                )

    @property
    def n(self) -> int:
        return len(self.members)

    def index_of(self, ident: str) -> int:
        for i, m in enumerate(self.members):
            if m.id == ident:
                return i
        raise KeyError(ident)


def population(members: Iterable[Individual], ell: int | None = None) -> Population:
    members = tuple(members)
    if ell is None:
        ell = members[0].ell if members else 0
    return Population(members, ell)


@dataclass(frozen=True)
class CoverSolution:
    """A sibling-group cover with materialized parent slots.

    ``groups`` partitions the population index set.  Each group is assigned
    an unordered pair of two distinct parent slots; the objective value is
    ``slot_count``.  Slots are identities: two slots may carry equal
    genotypes and still count as two parents.
    """

    groups: tuple[tuple[int, ...], ...]
    slot_count: int
    family_of_group: tuple[tuple[int, int], ...]
    slot_genotypes: tuple[Individual, ...]
    oracle_calls: int = 0

    def __post_init__(self) -> None:
        if len(self.family_of_group) != len(self.groups):
            raise ValueError("one slot pair required per group")
        for a, b in self.family_of_group:
            if a == b:
                raise ValueError("a family is a pair of two distinct slots")
            if not (0 <= a < self.slot_count and 0 <= b < self.slot_count):
                raise ValueError(f"slot pair ({a}, {b}) out of range")
        if len(self.slot_genotypes) != self.slot_count:
            raise ValueError("one materialized parent required per slot")

    @property
    def parents(self) -> int:
        return self.slot_count

    def max_group_size(self) -> int:
        return max((len(g) for g in self.groups), default=0)


@dataclass(frozen=True)
class FindMinParentInstance:
    """A fixed sibling-group partition plus a candidate parent pool.

    ``partition`` holds disjoint index-sets into ``pop`` covering it
    exactly.  Mendelian validity of the cells is checked separately (see
    ``exact.validate_instance``) because it needs the feasibility oracle.
    """

    pop: Population
    parent_pool: tuple[Individual, ...]
    partition: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for p in self.parent_pool:
            if p.ell != self.pop.ell:
                raise ValueError(f"pool member {p.id!r} has wrong locus count")
        pool_ids = {p.id for p in self.parent_pool}
        if len(pool_ids) != len(self.parent_pool):
            raise ValueError("duplicate id in parent pool")
        if pool_ids & {m.id for m in self.pop.members}:
            raise ValueError("parent pool ids must be disjoint from population ids")
        seen: set[int] = set()
        for cell in self.partition:
            for i in cell:
                if not 0 <= i < self.pop.n:
                    raise ValueError(f"partition index {i} out of range")
                if i in seen:
                    raise ValueError(f"index {i} appears in two partition cells")
                seen.add(i)
        if seen != set(range(self.pop.n)):
            raise ValueError("partition cells must cover the population exactly")


def parse_population(text: str) -> Population:
    """Parse the population text format.

    Format: optional ``#`` comment lines; first data line ``n ell``; then n
    lines ``ID a0/b0 a1/b1 ...`` with alleles as decimal non-negative
    integers.  Genotypes are canonicalized (lo <= hi) on the way in.
    """
    header: tuple[int, int] | None = None
    members: list[Individual] = []
    seen_ids: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected 'n ell' header")
            try:
                n, ell = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer header") from None
            if n < 0 or ell < 0:
                raise ParseError(f"line {lineno}: negative count in header")
            header = (n, ell)
            continue
        n, ell = header
        if len(members) >= n:
            raise ParseError(f"line {lineno}: declared n={n} but found more rows")
        tokens = line.split()
        ident = tokens[0]
        if ident in seen_ids:
            raise ParseError(f"line {lineno}: duplicate id {ident!r}")
        if len(tokens) - 1 != ell:
            raise ParseError(
                f"line {lineno}: expected {ell} genotypes, found {len(tokens) - 1}"
            )
        loci: list[Genotype] = []
        for tok in tokens[1:]:
            a_str, sep, b_str = tok.partition("/")
            if not sep:
                raise ParseError(f"line {lineno}: malformed genotype {tok!r}")
            try:
                a, b = int(a_str), int(b_str)
            except ValueError:
                raise ParseError(f"line {lineno}: malformed genotype {tok!r}") from None
            if a < 0 or b < 0:
                raise ParseError(f"line {lineno}: negative allele in {tok!r}")
            loci.append(genotype(a, b))
        seen_ids.add(ident)
        members.append(Individual(ident, tuple(loci)))
    if header is None:
        raise ParseError("line 1: empty input, expected 'n ell' header")
    if len(members) != header[0]:
        raise ParseError(
            f"declared n={header[0]} but found {len(members)} rows"
        )
    return Population(tuple(members), header[1])


def serialize_population(p: Population) -> str:
    """Canonical text form; parse_population round-trips it structurally."""
    lines = [f"{p.n} {p.ell}"]
    for m in p.members:
        lines.append(" ".join([m.id] + [format_genotype(g) for g in m.loci]))
    return "\n".join(lines) + "\n"
