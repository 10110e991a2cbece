"""Command-line driver for the sibling-cover solver suite."""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import reductions
from .exact import (
    BudgetExceededError,
    InfeasibleError,
    exact_find_min_parent,
    exact_min_parent,
    greedy_find_min_parent,
    validate_instance,
)
from .genotypes import (
    FindMinParentInstance,
    ParseError,
    Population,
    parse_population,
    serialize_population,
)
from .greedy import GreedyConfig, greedy_cover
from .mendel import OracleCounter, is_sibling_set
from .report import (
    format_report,
    report_from_cover,
    report_from_selection,
    render_bench_figures,
    rows_to_csv,
    run_suite,
)
from .simgen import SimConfig, random_population, serialize_truth


def _load_population(path: str) -> Population:
    return parse_population(Path(path).read_text())


def parse_partition(text: str, pop: Population) -> tuple[tuple[int, ...], ...]:
    """Partition file: one line per cell, member ids whitespace-separated."""
    cells = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            cells.append(tuple(pop.index_of(tok) for tok in line.split()))
        except KeyError as e:
            raise ParseError(f"line {lineno}: unknown member id {e.args[0]!r}") from None
    return tuple(cells)


def serialize_partition(inst: FindMinParentInstance) -> str:
    lines = [
        " ".join(inst.pop.members[i].id for i in cell) for cell in inst.partition
    ]
    return "\n".join(lines) + "\n"


def _write_or_stdout(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _children_spec(spec: str) -> int | tuple[int, int]:
    if "-" in spec:
        lo, _, hi = spec.partition("-")
        return (int(lo), int(hi))
    return int(spec)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sibcover",
        description="Sibling-group cover solvers under Mendelian constraints",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="is a member subset a full sibling group?")
    p.add_argument("population")
    p.add_argument("--members", required=True, help="comma-separated member ids")

    p = sub.add_parser("solve-greedy", help="greedy cover with enumeration cap c")
    p.add_argument("population")
    p.add_argument("--c", type=int, default=3)

    p = sub.add_parser("solve-exact", help="exact minimum-parent search")
    p.add_argument("population")
    p.add_argument("--max-slots", type=int, default=None)
    p.add_argument("--budget-ms", type=float, default=None)

    p = sub.add_parser(
        "find-parents", help="select parents from a pool for a fixed partition"
    )
    p.add_argument("population")
    p.add_argument("pool")
    p.add_argument("partition")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--greedy", dest="exact", action="store_false")
    p.add_argument("--budget-ms", type=float, default=None)

    p = sub.add_parser("gen-random", help="seeded synthetic population")
    p.add_argument("--families", type=int, required=True)
    p.add_argument("--children", required=True, help="count or 'lo-hi' range")
    p.add_argument("--loci", type=int, required=True)
    p.add_argument("--alleles", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--truth", default=None)

    p = sub.add_parser("reduce-tp", help="triangle-packing gadget population")
    p.add_argument("graph")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("reduce-minrep", help="MINREP gadget instance")
    p.add_argument("minrep")
    p.add_argument("-o", "--outdir", default=None)
    p.add_argument("--faithful", action="store_true")

    p = sub.add_parser("solve-tp-brute", help="exhaustive triangle packing")
    p.add_argument("graph")

    p = sub.add_parser("solve-minrep-brute", help="exhaustive MINREP witness")
    p.add_argument("minrep")

    p = sub.add_parser("bench", help="run a checked-in benchmark suite")
    p.add_argument("--suite", default="smoke")
    p.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p.add_argument("--figures", default=None, help="directory for summary figures")
    p.add_argument("--budget-ms", type=float, default=None)

    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "check":
        pop = _load_population(args.population)
        members = [pop.index_of(tok) for tok in args.members.split(",") if tok]
        counter = OracleCounter()
        ok = is_sibling_set(pop, members, counter)
        print(f"SIBLING {'true' if ok else 'false'}")
        return 0 if ok else 1

    if args.command == "solve-greedy":
        pop = _load_population(args.population)
        start = time.perf_counter()
        sol = greedy_cover(pop, GreedyConfig(args.c))
        ms = (time.perf_counter() - start) * 1000.0
        sys.stdout.write(format_report(report_from_cover(pop, sol, "FEASIBLE", ms)))
        return 0

    if args.command == "solve-exact":
        pop = _load_population(args.population)
        start = time.perf_counter()
        res = exact_min_parent(pop, max_slots=args.max_slots, budget_ms=args.budget_ms)
        ms = (time.perf_counter() - start) * 1000.0
        status = "OPTIMAL" if res.optimal else "FEASIBLE"
        sys.stdout.write(format_report(report_from_cover(pop, res.solution, status, ms)))
        return 0

    if args.command == "find-parents":
        pop = _load_population(args.population)
        pool = _load_population(args.pool)
        cells = parse_partition(Path(args.partition).read_text(), pop)
        inst = FindMinParentInstance(pop, pool.members, cells)
        validate_instance(inst)
        start = time.perf_counter()
        if args.exact:
            sel = exact_find_min_parent(inst, budget_ms=args.budget_ms)
            status = "OPTIMAL"
        else:
            sel = greedy_find_min_parent(inst)
            status = "FEASIBLE"
        ms = (time.perf_counter() - start) * 1000.0
        sys.stdout.write(format_report(report_from_selection(inst, sel, status, ms)))
        return 0

    if args.command == "gen-random":
        cfg = SimConfig(
            families=args.families,
            children_per_family=_children_spec(args.children),
            loci=args.loci,
            alleles_per_locus=args.alleles,
            seed=args.seed,
        )
        pop, families = random_population(cfg)
        _write_or_stdout(serialize_population(pop), args.output)
        if args.truth is not None:
            Path(args.truth).write_text(serialize_truth(families))
        return 0

    if args.command == "reduce-tp":
        g = reductions.parse_graph(Path(args.graph).read_text())
        pop = reductions.reduce_tp(g)
        _write_or_stdout(serialize_population(pop), args.output)
        return 0

    if args.command == "reduce-minrep":
        m = reductions.parse_minrep(Path(args.minrep).read_text())
        inst = reductions.reduce_minrep(m, faithful=args.faithful)
        universe = serialize_population(inst.pop)
        pool = serialize_population(Population(inst.parent_pool, inst.pop.ell))
        partition = serialize_partition(inst)
        if args.outdir is None:
            sys.stdout.write("# universe\n" + universe)
            sys.stdout.write("# pool\n" + pool)
            sys.stdout.write("# partition\n" + partition)
        else:
            outdir = Path(args.outdir)
            outdir.mkdir(parents=True, exist_ok=True)
            (outdir / "universe.txt").write_text(universe)
            (outdir / "pool.txt").write_text(pool)
            (outdir / "partition.txt").write_text(partition)
        return 0

    if args.command == "solve-tp-brute":
        g = reductions.parse_graph(Path(args.graph).read_text())
        sol = reductions.brute_tp(g)
        print(f"t {sol.t}")
        for tri in sol.triangles:
            print(" ".join(str(v) for v in tri))
        return 0

    if args.command == "solve-minrep-brute":
        m = reductions.parse_minrep(Path(args.minrep).read_text())
        gamma, witness = reductions.brute_minrep(m)
        print(f"gamma {gamma}")
        print(" ".join(str(v) for v in witness))
        return 0

    if args.command == "bench":
        rows = run_suite(args.suite, exact_budget_ms=args.budget_ms)
        csv_text = rows_to_csv(rows)
        _write_or_stdout(csv_text, args.out)
        if args.figures is not None:
            for path in render_bench_figures(rows, args.figures):
                print(f"figure {path}", file=sys.stderr)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    try:
        return run(argv)
    except (BudgetExceededError, InfeasibleError) as e:
        print(f"infeasible: {e}", file=sys.stderr)
        return 1
    except (ParseError, OSError, KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
