"""Hardness-reduction gadget generators with brute-force source solvers.

Two constructions are mechanized:

* triangle packing -> MIN-PARENT: one individual per graph node, all
  genotypes homozygous "labels".  Distance loci (one per node, label =
  shortest-path distance) plus one locus per non-triangle vertex triple
  (labels 1/2/3) make a triple a sibling set iff it is a triangle, so a
  packing of t triangles corresponds to a cover with n - t parents.

* MINREP -> FIND-MIN-PARENT: one candidate parent per vertex, one
  individual per edge, with forbid-pair loci ensuring a pool pair can
  parent a super-edge's cell iff the pair is an edge between the right
  vertex groups.  The minimum parent selection then equals the minimum
  MINREP witness set.

The forbid-pair locus deviates from a literal two-value assignment: with
alleles {1,2} on the forbidden pair and {1,3} everywhere else, the
forbidden pair could produce nobody at all, which would sterilize the
intended parents whenever any such locus exists.  The four-value
assignment used here (forbidden pair {1,2}; targeted child {1,3}; other
pool members {1,3}; untargeted children {1,1}) forbids exactly the
targeted combination and nothing else; unit tests check this exhaustively.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .genotypes import (
    FindMinParentInstance,
    Genotype,
    Individual,
    ParseError,
    Population,
)

#: sentinel for forbid_pair_child_locus: forbid the pair for every child
ALL = None


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes 0..node_count-1."""

    node_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (0 <= u < v < self.node_count):
                raise ValueError(f"bad edge ({u}, {v})")

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, u: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == u:
                out.append(b)
            elif b == u:
                out.append(a)
        return sorted(out)

    def max_degree(self) -> int:
        deg = [0] * self.node_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return max(deg, default=0)

    def is_connected(self) -> bool:
        if self.node_count == 0:
            return True
        return len(self._bfs(0)) == self.node_count

    def _bfs(self, src: int) -> dict[int, int]:
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in self.neighbors(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def is_triangle(self, u: int, v: int, w: int) -> bool:
        return self.has_edge(u, v) and self.has_edge(u, w) and self.has_edge(v, w)

    def triangles(self) -> list[tuple[int, int, int]]:
        return [
            t
            for t in combinations(range(self.node_count), 3)
            if self.is_triangle(*t)
        ]


def graph(node_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(node_count, frozenset((min(u, v), max(u, v)) for u, v in edges))


@dataclass(frozen=True)
class MinRepInstance:
    """Bipartite graph with equal-size vertex groups on each side.

    Vertices are 0-based within each side; ``edges`` holds (a, b) pairs.
    """

    a_count: int
    b_count: int
    group_of_a: tuple[int, ...]
    group_of_b: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if len(self.group_of_a) != self.a_count or len(self.group_of_b) != self.b_count:
            raise ValueError("one group index required per vertex")
        for side, count in ((self.group_of_a, self.a_count), (self.group_of_b, self.b_count)):
            groups = sorted(set(side))
            if groups != list(range(len(groups))):
                raise ValueError("group indices must be 0..g-1 with none unused")
            sizes = {g: sum(1 for x in side if x == g) for g in groups}
            if len(set(sizes.values())) > 1:
                raise ValueError("vertex groups must have equal sizes")
        for a, b in self.edges:
            if not (0 <= a < self.a_count and 0 <= b < self.b_count):
                raise ValueError(f"bad edge ({a}, {b})")

    def super_edges(self) -> dict[tuple[int, int], list[tuple[int, int]]]:
        """Super-edge (i, j) -> the edges witnessing it, sorted."""
        out: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for a, b in sorted(self.edges):
            out.setdefault((self.group_of_a[a], self.group_of_b[b]), []).append((a, b))
        return dict(sorted(out.items()))


def parse_graph(text: str) -> Graph:
    """Graph file: ``n m`` then m lines ``u v`` (0-based, u < v)."""
    lines = _data_lines(text)
    if not lines:
        raise ParseError("line 1: empty graph file")
    lineno, first = lines[0]
    parts = first.split()
    if len(parts) != 2:
        raise ParseError(f"line {lineno}: expected 'n m' header")
    n, m = _ints(parts, lineno)
    if len(lines) - 1 != m:
        raise ParseError(f"declared m={m} but found {len(lines) - 1} edge lines")
    edges = []
    for lineno, line in lines[1:]:
        u, v = _ints(line.split(), lineno, expect=2)
        if not 0 <= u < v < n:
            raise ParseError(f"line {lineno}: bad edge {u} {v}")
        edges.append((u, v))
    return Graph(n, frozenset(edges))


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.node_count} {len(g.edges)}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_minrep(text: str) -> MinRepInstance:
    """MINREP file: ``|A| |B| gA gB m``; A group row; B group row; m edges."""
    lines = _data_lines(text)
    if not lines:
        raise ParseError("line 1: empty MINREP file")
    lineno, first = lines[0]
    na, nb, ga, gb, m = _ints(first.split(), lineno, expect=5)
    if len(lines) != 3 + m:
        raise ParseError(f"expected {3 + m} data lines, found {len(lines)}")
    lineno_a, row_a = lines[1]
    lineno_b, row_b = lines[2]
    groups_a = _ints(row_a.split(), lineno_a, expect=na)
    groups_b = _ints(row_b.split(), lineno_b, expect=nb)
    if ga and sorted(set(groups_a)) != list(range(ga)):
        raise ParseError(f"line {lineno_a}: A-group indices must be 0..{ga - 1}")
    if gb and sorted(set(groups_b)) != list(range(gb)):
        raise ParseError(f"line {lineno_b}: B-group indices must be 0..{gb - 1}")
    edges = []
    for lineno, line in lines[3:]:
        a, b = _ints(line.split(), lineno, expect=2)
        edges.append((a, b))
    return MinRepInstance(na, nb, tuple(groups_a), tuple(groups_b), frozenset(edges))


def serialize_minrep(m: MinRepInstance) -> str:
    ga = len(set(m.group_of_a))
    gb = len(set(m.group_of_b))
    lines = [f"{m.a_count} {m.b_count} {ga} {gb} {len(m.edges)}"]
    lines.append(" ".join(str(g) for g in m.group_of_a))
    lines.append(" ".join(str(g) for g in m.group_of_b))
    lines += [f"{a} {b}" for a, b in sorted(m.edges)]
    return "\n".join(lines) + "\n"


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((lineno, line))
    return out


def _ints(parts: Sequence[str], lineno: int, expect: int | None = None) -> list[int]:
    if expect is not None and len(parts) != expect:
        raise ParseError(f"line {lineno}: expected {expect} integers")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer token") from None


@dataclass(frozen=True)
class TpSolution:
    triangles: tuple[tuple[int, int, int], ...]

    @property
    def t(self) -> int:
        return len(self.triangles)


def reduce_tp(g: Graph) -> Population:
    """Triangle-packing gadget population: one individual per node.

    Distance loci (one per origin node, by node index) are followed by one
    locus per non-triangle vertex triple (sorted-triple lexicographic
    order).  All genotypes are homozygous labels, so a set of individuals
    is a sibling set iff every locus shows at most two distinct labels.
    """
    if not g.is_connected():
        raise ValueError("distance loci need a connected graph")
    if g.max_degree() > 4:
        raise ValueError("gadget requires maximum degree 4")
    n = g.node_count
    loci: list[list[int]] = []
    for origin in range(n):
        dist = g._bfs(origin)
        loci.append([dist[v] for v in range(n)])
    for u, v, w in combinations(range(n), 3):
        if g.is_triangle(u, v, w):
            continue
        # lexicographically smallest non-adjacent pair gets labels 1 and 2
        for a, b in ((u, v), (u, w), (v, w)):
            if not g.has_edge(a, b):
                break
        labels = [3] * n
        labels[a] = 1
        labels[b] = 2
        loci.append(labels)
    members = tuple(
        Individual(f"v{i}", tuple((col[i], col[i]) for col in loci))
        for i in range(n)
    )
    return Population(members, len(loci))


def brute_tp(g: Graph) -> TpSolution:
    """Maximum node-disjoint triangle packing by exhaustive search."""
    tris = g.triangles()
    best: list[tuple[int, int, int]] = []

    def rec(start: int, used: set[int], acc: list[tuple[int, int, int]]) -> None:
        nonlocal best
        if len(acc) > len(best):
            best = list(acc)
        for i in range(start, len(tris)):
            t = tris[i]
            if used.isdisjoint(t):
                acc.append(t)
                rec(i + 1, used | set(t), acc)
                acc.pop()

    rec(0, set(), [])
    return TpSolution(tuple(best))


def forbid_pair_child_locus(
    pool_size: int,
    child_count: int,
    forbidden_parents: tuple[int, int],
    forbidden_child: int | None = ALL,
) -> tuple[list[Genotype], list[Genotype]]:
    """One locus column forbidding exactly one parent-pair/child combination.

    Returns (pool column, child column).  The forbidden pair gets {1,2};
    the targeted child (or, with ALL, every child) gets {1,3}, which the
    pair cannot produce since 3 is absent from both; all other pool
    members get {1,3} and untargeted children {1,1}, so every other
    combination stays producible.
    """
    fu, fv = forbidden_parents
    if fu == fv:
        raise ValueError("forbidden parent indices must be distinct")
    if not (0 <= fu < pool_size and 0 <= fv < pool_size):
        raise ValueError("forbidden parent index out of range")
    pool = [(1, 3)] * pool_size
    pool[fu] = (1, 2)
    pool[fv] = (1, 2)
    if forbidden_child is ALL:
        children = [(1, 3)] * child_count
    else:
        if not 0 <= forbidden_child < child_count:
            raise ValueError("forbidden child index out of range")
        children = [(1, 1)] * child_count
        children[forbidden_child] = (1, 3)
    return pool, children


def reduce_minrep(m: MinRepInstance, faithful: bool = False) -> FindMinParentInstance:
    """MINREP gadget: parents per vertex, individuals per edge.

    Loci come from two rules.  For every edge (u, v) between groups
    (i, j), every edge individual outside the (i, j) edge set is forbidden
    as a child of (p_u, p_v).  For every vertex pair that is not an edge
    (including same-side pairs), the pair is forbidden for all children --
    one compact locus per pair by default, or one locus per (pair, child)
    with ``faithful=True``.  The partition has one cell per super-edge,
    holding its witnessing edge individuals.
    """
    if not m.edges:
        raise ValueError("MINREP instance needs at least one edge")
    edges = sorted(m.edges)
    edge_index = {e: i for i, e in enumerate(edges)}
    pool_size = m.a_count + m.b_count
    child_count = len(edges)

    def vtx_a(a: int) -> int:
        return a

    def vtx_b(b: int) -> int:
        return m.a_count + b

    super_edges = m.super_edges()
    edge_set_of_groups = {ij: set(es) for ij, es in super_edges.items()}

    pool_cols: list[list[Genotype]] = []
    child_cols: list[list[Genotype]] = []

    def add(pair: tuple[int, int], child: int | None) -> None:
        pc, cc = forbid_pair_child_locus(pool_size, child_count, pair, child)
        pool_cols.append(pc)
        child_cols.append(cc)

    # forbid cross-group children for edge pairs
    for u, v in edges:
        ij = (m.group_of_a[u], m.group_of_b[v])
        inside = edge_set_of_groups[ij]
        for e in edges:
            if e not in inside:
                add((vtx_a(u), vtx_b(v)), edge_index[e])
    # forbid every non-edge vertex pair outright
    for p, q in combinations(range(pool_size), 2):
        if p < m.a_count and q >= m.a_count:
            if (p, q - m.a_count) in m.edges:
                continue
        if faithful:
            for e in edges:
                add((p, q), edge_index[e])
        else:
            add((p, q), ALL)

    def column(cols: list[list[Genotype]], idx: int) -> tuple[Genotype, ...]:
        return tuple(col[idx] for col in cols)

    pool = tuple(
        Individual(
            f"pA{a}" if a < m.a_count else f"pB{a - m.a_count}",
            column(pool_cols, a),
        )
        for a in range(pool_size)
    )
    members = tuple(
        Individual(f"s_a{a}_b{b}", column(child_cols, edge_index[(a, b)]))
        for a, b in edges
    )
    partition = tuple(
        tuple(edge_index[e] for e in es) for es in super_edges.values()
    )
    return FindMinParentInstance(
        Population(members, len(pool_cols)), pool, partition
    )


def brute_minrep(m: MinRepInstance) -> tuple[int, tuple[int, ...]]:
    """Minimum vertex set witnessing every super-edge, by subset search.

    Vertices are numbered as in reduce_minrep's pool (A first, then B).
    Returns (gamma, lexicographically smallest witness of that size).
    """
    super_edges = list(m.super_edges().values())
    total = m.a_count + m.b_count
    for size in range(0, total + 1):
        for subset in combinations(range(total), size):
            sset = set(subset)
            if all(
                any(a in sset and m.a_count + b in sset for a, b in es)
                for es in super_edges
            ):
                return size, subset
    raise AssertionError("unreachable: the full vertex set witnesses everything")
