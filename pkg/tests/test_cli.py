import pytest

from conftest import WORKED_EXAMPLE
from sibcover.cli import main, parse_partition
from sibcover.genotypes import parse_population
from sibcover.report import (
    SolveReport,
    format_report,
    parse_report,
    render_bench_figures,
    rows_to_csv,
    run_suite,
)


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.txt"
    path.write_text(WORKED_EXAMPLE)
    return str(path)


class TestCheck:
    def test_worked_example_is_sibling(self, example_file, capsys):
        assert main(["check", example_file, "--members", "I1,I2,I3"]) == 0
        assert capsys.readouterr().out.strip() == "SIBLING true"

    def test_non_sibling_exits_one(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text("3 1\nA 1/2\nB 3/4\nC 5/6\n")
        assert main(["check", str(path), "--members", "A,B,C"]) == 1
        assert capsys.readouterr().out.strip() == "SIBLING false"

    def test_unknown_id_is_usage_error(self, example_file, capsys):
        assert main(["check", example_file, "--members", "nope"]) == 2


class TestSolveCommands:
    def test_exact_single_individual(self, tmp_path, capsys):
        path = tmp_path / "one.txt"
        path.write_text("1 1\nX 1/2\n")
        assert main(["solve-exact", str(path)]) == 0
        report = parse_report(capsys.readouterr().out)
        assert report.status == "OPTIMAL"
        assert report.parents == 2

    def test_greedy_report_round_trips(self, example_file, capsys):
        assert main(["solve-greedy", example_file, "--c", "2"]) == 0
        out = capsys.readouterr().out
        report = parse_report(out)
        assert report.status == "FEASIBLE"
        assert format_report(report).splitlines()[:-1] == out.splitlines()[:-1]
        assert report.oracle_calls >= 1

    def test_exact_worked_example(self, example_file, capsys):
        assert main(["solve-exact", example_file]) == 0
        report = parse_report(capsys.readouterr().out)
        assert report.parents == 2
        assert report.groups[0][2] == ("I1", "I2", "I3")

    def test_malformed_population_is_parse_error(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("not a population")
        assert main(["solve-exact", str(path)]) == 2


class TestFindParents:
    @pytest.fixture
    def toy_files(self, tmp_path):
        (tmp_path / "u.txt").write_text("2 1\ns1 1/3\ns2 1/3\n")
        (tmp_path / "p.txt").write_text("3 1\npa1 1/2\npa2 1/2\npb1 1/3\n")
        (tmp_path / "cells.txt").write_text("s1 s2\n")
        return tmp_path

    def test_exact(self, toy_files, capsys):
        args = [
            "find-parents",
            str(toy_files / "u.txt"),
            str(toy_files / "p.txt"),
            str(toy_files / "cells.txt"),
            "--exact",
        ]
        assert main(args) == 0
        report = parse_report(capsys.readouterr().out)
        assert report.status == "OPTIMAL"
        assert report.parents == 2

    def test_greedy(self, toy_files, capsys):
        args = [
            "find-parents",
            str(toy_files / "u.txt"),
            str(toy_files / "p.txt"),
            str(toy_files / "cells.txt"),
            "--greedy",
        ]
        assert main(args) == 0
        assert parse_report(capsys.readouterr().out).status == "FEASIBLE"

    def test_infeasible_exit_code(self, tmp_path, capsys):
        (tmp_path / "u.txt").write_text("1 1\nkid 1/1\n")
        (tmp_path / "p.txt").write_text("2 1\np0 9/9\np1 9/9\n")
        (tmp_path / "cells.txt").write_text("kid\n")
        args = [
            "find-parents",
            str(tmp_path / "u.txt"),
            str(tmp_path / "p.txt"),
            str(tmp_path / "cells.txt"),
        ]
        assert main(args) == 1


class TestGenerateAndReduce:
    def test_gen_random_deterministic(self, tmp_path, capsys):
        args = [
            "gen-random", "--families", "2", "--children", "2", "--loci", "2",
            "--alleles", "4", "--seed", "7",
        ]
        assert main(args) == 0
        first = capsys.readouterr().out
        assert main(args) == 0
        assert capsys.readouterr().out == first
        parse_population(first)

    def test_gen_random_truth_file(self, tmp_path):
        out = tmp_path / "pop.txt"
        truth = tmp_path / "truth.txt"
        args = [
            "gen-random", "--families", "1", "--children", "2-3", "--loci", "1",
            "--alleles", "2", "--seed", "3", "-o", str(out), "--truth", str(truth),
        ]
        assert main(args) == 0
        assert truth.read_text().startswith("F0P0 F0P1 F0C0")
        parse_population(out.read_text())

    def test_reduce_tp_and_brute(self, tmp_path, capsys):
        gpath = tmp_path / "k3.txt"
        gpath.write_text("3 3\n0 1\n0 2\n1 2\n")
        assert main(["reduce-tp", str(gpath)]) == 0
        pop = parse_population(capsys.readouterr().out)
        assert pop.n == 3 and pop.ell == 3
        assert main(["solve-tp-brute", str(gpath)]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "t 1"

    def test_reduce_minrep_files_then_find_parents(self, tmp_path, capsys):
        mpath = tmp_path / "toy.txt"
        mpath.write_text("2 1 1 1 2\n0 0\n0\n0 0\n1 0\n")
        outdir = tmp_path / "inst"
        assert main(["reduce-minrep", str(mpath), "-o", str(outdir)]) == 0
        args = [
            "find-parents",
            str(outdir / "universe.txt"),
            str(outdir / "pool.txt"),
            str(outdir / "partition.txt"),
            "--exact",
        ]
        assert main(args) == 0
        assert parse_report(capsys.readouterr().out).parents == 2

    def test_solve_minrep_brute(self, tmp_path, capsys):
        mpath = tmp_path / "toy.txt"
        mpath.write_text("2 1 1 1 2\n0 0\n0\n0 0\n1 0\n")
        assert main(["solve-minrep-brute", str(mpath)]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "gamma 2"


class TestBench:
    def test_smoke_suite_csv(self, capsys):
        assert main(["bench", "--suite", "smoke"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "instance,n,l,algorithm,c,parents,optimal,oracle_calls,millis"
        assert len(lines) > 1

    def test_unknown_suite(self, capsys):
        assert main(["bench", "--suite", "nope"]) == 2

    def test_figures_rendered(self, tmp_path):
        rows = run_suite("smoke")
        paths = render_bench_figures(rows, tmp_path / "figs")
        assert paths and all(p.exists() and p.stat().st_size > 0 for p in paths)
        assert rows_to_csv(rows).startswith("instance,")


class TestPartitionFile:
    def test_unknown_member_id(self):
        pop = parse_population("1 1\nA 1/1\n")
        with pytest.raises(Exception, match="unknown member id"):
            parse_partition("A B\n", pop)


class TestReportFormat:
    def test_round_trip(self):
        from sibcover.genotypes import individual

        report = SolveReport(
            "OPTIMAL",
            2,
            (individual("S0", [(1, 3), (1, 6)]), individual("S1", [(2, 4), (1, 6)])),
            ((0, 1, ("I1", "I2", "I3")),),
            oracle_calls=5,
            wall_ms=1.25,
        )
        assert parse_report(format_report(report)) == report
