"""Solution report text format and the benchmark harness.

The report is a diffable plain-text block:

    status OPTIMAL
    parents 2
    slot 0 1/3 1/6
    slot 1 2/4 1/6
    groups 1
    0 1 : I1 I2 I3
    oracle_calls 12
    wall_ms 3.170

The bench harness runs a checked-in suite manifest (instances are either
files or seeded generator configs, so there is no hidden randomness) and
emits delimited rows; optionally it renders summary figures next to the
CSV.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .exact import ParentSelection, exact_min_parent
from .genotypes import (
    CoverSolution,
    FindMinParentInstance,
    Individual,
    ParseError,
    Population,
    format_genotype,
    genotype,
)
from .greedy import GreedyConfig, greedy_cover
from .simgen import SimConfig, random_population

BENCH_FIELDS = [
    "instance",
    "n",
    "l",
    "algorithm",
    "c",
    "parents",
    "optimal",
    "oracle_calls",
    "millis",
]


@dataclass(frozen=True)
class SolveReport:
    status: str  # OPTIMAL | FEASIBLE | INFEASIBLE
    parents: int
    slots: tuple[Individual, ...]
    groups: tuple[tuple[int, int, tuple[str, ...]], ...]
    oracle_calls: int = 0
    wall_ms: float = 0.0


def report_from_cover(
    pop: Population, sol: CoverSolution, status: str, wall_ms: float
) -> SolveReport:
    groups = tuple(
        (sa, sb, tuple(pop.members[i].id for i in g))
        for g, (sa, sb) in zip(sol.groups, sol.family_of_group)
    )
    return SolveReport(
        status, sol.slot_count, sol.slot_genotypes, groups, sol.oracle_calls, wall_ms
    )


def report_from_selection(
    inst: FindMinParentInstance, sel: ParentSelection, status: str, wall_ms: float
) -> SolveReport:
    pos = {pool_idx: i for i, pool_idx in enumerate(sel.chosen)}
    slots = tuple(inst.parent_pool[i] for i in sel.chosen)
    groups = tuple(
        (pos[a], pos[b], tuple(inst.pop.members[i].id for i in cell))
        for cell, (a, b) in zip(inst.partition, sel.pair_of_group)
    )
    return SolveReport(status, len(sel.chosen), slots, groups, 0, wall_ms)


def format_report(r: SolveReport) -> str:
    lines = [f"status {r.status}", f"parents {r.parents}"]
    for i, slot in enumerate(r.slots):
        lines.append(
            " ".join(["slot", str(i)] + [format_genotype(g) for g in slot.loci])
        )
    lines.append(f"groups {len(r.groups)}")
    for sa, sb, ids in r.groups:
        lines.append(f"{sa} {sb} : " + " ".join(ids))
    lines.append(f"oracle_calls {r.oracle_calls}")
    lines.append(f"wall_ms {r.wall_ms:.3f}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> SolveReport:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    it = iter(lines)

    def expect(keyword: str) -> str:
        line = next(it, None)
        if line is None or not line.startswith(keyword + " "):
            raise ParseError(f"report: expected '{keyword} ...', got {line!r}")
        return line[len(keyword) + 1 :]

    status = expect("status")
    parents = int(expect("parents"))
    slots = []
    for i in range(parents):
        rest = expect("slot").split()
        if int(rest[0]) != i:
            raise ParseError(f"report: slot lines out of order at {rest[0]}")
        loci = []
        for tok in rest[1:]:
            a, _, b = tok.partition("/")
            loci.append(genotype(int(a), int(b)))
        slots.append(Individual(f"S{i}", tuple(loci)))
    group_count = int(expect("groups"))
    groups = []
    for _ in range(group_count):
        line = next(it, None)
        if line is None:
            raise ParseError("report: missing group line")
        head, _, tail = line.partition(" : ")
        sa, sb = (int(x) for x in head.split())
        groups.append((sa, sb, tuple(tail.split())))
    oracle_calls = int(expect("oracle_calls"))
    wall_ms = float(expect("wall_ms"))
    return SolveReport(
        status, parents, tuple(slots), tuple(groups), oracle_calls, wall_ms
    )


# --- benchmark harness -------------------------------------------------

#: bench suites: every instance is a file path or a fully-seeded generator
#: config, and every algorithm/parameter combination is listed explicitly.
SUITES: dict[str, dict] = {
    "smoke": {
        "instances": [
            {"name": "rand-f1c3", "gen": {"families": 1, "children": 3, "loci": 2, "alleles": 4, "seed": 101}},
            {"name": "rand-f2c2", "gen": {"families": 2, "children": 2, "loci": 2, "alleles": 4, "seed": 102}},
            {"name": "rand-f2c3", "gen": {"families": 2, "children": 3, "loci": 3, "alleles": 5, "seed": 103}},
            {"name": "rand-f3c2", "gen": {"families": 3, "children": 2, "loci": 2, "alleles": 6, "seed": 104}},
        ],
        "algorithms": [
            {"algorithm": "greedy", "c": 2},
            {"algorithm": "greedy", "c": 3},
            {"algorithm": "exact"},
        ],
    },
}


def _load_instance(entry: dict) -> Population:
    if "gen" in entry:
        g = entry["gen"]
        cfg = SimConfig(
            families=g["families"],
            children_per_family=g["children"],
            loci=g["loci"],
            alleles_per_locus=g["alleles"],
            seed=g["seed"],
        )
        pop, _ = random_population(cfg)
        return pop
    from .genotypes import parse_population

    return parse_population(Path(entry["file"]).read_text())


def run_suite(name: str, exact_budget_ms: float | None = None) -> list[dict]:
    if name not in SUITES:
        raise KeyError(f"unknown bench suite {name!r}")
    suite = SUITES[name]
    rows: list[dict] = []
    for entry in suite["instances"]:
        pop = _load_instance(entry)
        for algo in suite["algorithms"]:
            start = time.perf_counter()
            if algo["algorithm"] == "greedy":
                sol = greedy_cover(pop, GreedyConfig(algo["c"]))
                optimal = False
                c = algo["c"]
                calls = sol.oracle_calls
                parents = sol.slot_count
            else:
                res = exact_min_parent(pop, budget_ms=exact_budget_ms)
                optimal = res.optimal
                c = ""
                calls = 0
                parents = res.solution.slot_count
            millis = (time.perf_counter() - start) * 1000.0
            rows.append(
                {
                    "instance": entry["name"],
                    "n": pop.n,
                    "l": pop.ell,
                    "algorithm": algo["algorithm"],
                    "c": c,
                    "parents": parents,
                    "optimal": int(optimal),
                    "oracle_calls": calls,
                    "millis": f"{millis:.3f}",
                }
            )
    return rows


def rows_to_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def render_bench_figures(rows: Sequence[dict], outdir: str | Path) -> list[Path]:
    """Summary figures for a bench run, written as PNG files."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    by_algo: dict[str, list[dict]] = {}
    for row in rows:
        label = row["algorithm"]
        if row["c"] != "":
            label = f"{label} c={row['c']}"
        by_algo.setdefault(label, []).append(row)

    paths = []

    fig, ax = plt.subplots(figsize=(6, 4))
    for label, rs in sorted(by_algo.items()):
        xs = [int(r["n"]) for r in rs]
        ys = [int(r["parents"]) for r in rs]
        ax.plot(xs, ys, "o-", label=label, alpha=0.8)
    ax.set_xlabel("population size n")
    ax.set_ylabel("parents")
    ax.set_title("Parent count by algorithm")
    ax.legend()
    fig.tight_layout()
    path = outdir / "parents_vs_n.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(6, 4))
    for label, rs in sorted(by_algo.items()):
        xs = [int(r["n"]) for r in rs]
        ys = [float(r["millis"]) for r in rs]
        ax.plot(xs, ys, "o-", label=label, alpha=0.8)
    ax.set_xlabel("population size n")
    ax.set_ylabel("wall time (ms)")
    ax.set_yscale("log")
    ax.set_title("Runtime by algorithm")
    ax.legend()
    fig.tight_layout()
    path = outdir / "millis_vs_n.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    paths.append(path)

    greedy_rows = [r for r in rows if r["algorithm"] == "greedy"]
    if greedy_rows:
        fig, ax = plt.subplots(figsize=(6, 4))
        for c in sorted({r["c"] for r in greedy_rows}):
            rs = [r for r in greedy_rows if r["c"] == c]
            xs = [int(r["n"]) for r in rs]
            ys = [int(r["oracle_calls"]) for r in rs]
            ax.plot(xs, ys, "o-", label=f"c={c}", alpha=0.8)
        ax.set_xlabel("population size n")
        ax.set_ylabel("oracle queries")
        ax.set_title("Greedy oracle usage")
        ax.legend()
        fig.tight_layout()
        path = outdir / "oracle_calls_vs_n.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        paths.append(path)

    return paths
