import json

import pytest

from graphlets import cli, families
from graphlets.fivecounts import FIVE_IDS, count_five
from graphlets.graph import format_edge_list, parse_edge_list
from graphlets.induced import induced_from_noninduced


@pytest.fixture()
def k5_file(tmp_path):
    path = tmp_path / "k5.txt"
    path.write_text(format_edge_list(families.complete(5)))
    return str(path)


def test_count_json_report(k5_file, capsys):
    assert cli.main(["count", k5_file]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["graph"] == {"n": 5, "m": 10, "density": "1"}
    assert report["noninduced"]["M86_5"] == 60
    assert report["induced"]["M1023_5"] == 1
    assert report["induced"]["M86_5"] == 0
    assert len(report["noninduced"]) == 21


def test_count_no_induced_flag(k5_file, capsys):
    assert cli.main(["count", k5_file, "--no-induced"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert "induced" not in report


def test_count_csv_rows(k5_file, capsys):
    assert cli.main(["count", k5_file, "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "section,key,value"
    assert "graph,n,5" in lines
    assert "noninduced,M86_5,60" in lines
    assert "induced,M1023_5,1" in lines
    # header + 3 graph rows + two 21-slot sections
    assert len(lines) == 1 + 3 + 42


def test_count_reads_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("nodes 5\n0 1\n1 2\n2 3\n3 4\n"))
    assert cli.main(["count", "-"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["noninduced"]["M86_5"] == 1


def test_compare_report_and_determinism(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text(format_edge_list(families.erdos_renyi(14, 0.5, 6)))
    args = ["compare", str(path), "--replicates", "6", "--seed", "11"]
    assert cli.main(args) == 0
    first = capsys.readouterr().out
    assert cli.main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    report = json.loads(first)
    null = report["null_model"]
    assert null["replicates"] == 6
    assert null["seed"] == 11
    assert set(null["slots"]) == {f"M{a}_5" for a in FIVE_IDS}
    for slot in null["slots"].values():
        assert set(slot) == {"sum", "mean", "ratio"}
        assert isinstance(slot["sum"], int)


def test_compare_ratio_sentinels(tmp_path, capsys):
    # a sparse star: many slots are zero in both the graph and the null
    path = tmp_path / "star.txt"
    path.write_text(format_edge_list(families.star(6)))
    assert cli.main(["compare", str(path), "--replicates", "2", "--seed", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    for key, slot in report["null_model"]["slots"].items():
        observed = report["noninduced"][key]
        if slot["sum"] == 0:
            assert slot["ratio"] == ("inf" if observed else "nan")
        else:
            assert float(slot["ratio"]) >= 0.0


def test_compare_rejects_degenerate_inputs(tmp_path, capsys):
    single = tmp_path / "one.txt"
    single.write_text("nodes 1\n")
    assert cli.main(["compare", str(single)]) == 2
    path = tmp_path / "g.txt"
    path.write_text(format_edge_list(families.complete(5)))
    assert cli.main(["compare", str(path), "--replicates", "0"]) == 2


def test_gen_round_trips_through_count(tmp_path, capsys):
    out = tmp_path / "ring.txt"
    assert cli.main(["gen", "ring", "9", "2", "--out", str(out)]) == 0
    g = parse_edge_list(out.read_text())
    assert g.n == 9 and g.m == 18
    assert cli.main(["count", str(out)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["noninduced"]["M119_5"] == count_five(g)[119]


def test_gen_er_is_seeded(capsys):
    assert cli.main(["gen", "er", "10", "0.5", "--seed", "4"]) == 0
    first = capsys.readouterr().out
    assert cli.main(["gen", "er", "10", "0.5", "--seed", "4"]) == 0
    assert capsys.readouterr().out == first
    assert parse_edge_list(first).n == 10


def test_gen_npartite(capsys):
    assert cli.main(["gen", "npartite", "3", "2", "--out", "-"]) == 0
    g = parse_edge_list(capsys.readouterr().out)
    assert g.n == 6 and g.m == 12


def test_analytic_outputs(capsys):
    assert cli.main(["analytic", "walks", "20", "4"]) == 0
    assert json.loads(capsys.readouterr().out) == {"closed": 6517, "distinct": 6516}
    assert cli.main(["analytic", "fivepaths", "7"]) == 0
    assert json.loads(capsys.readouterr().out) == {"count": 1260}
    assert cli.main(["analytic", "bulls", "5", "3"]) == 0
    assert json.loads(capsys.readouterr().out) == {"count": 74520}
    assert cli.main(["analytic", "spintops", "29", "10"]) == 0
    assert json.loads(capsys.readouterr().out) == {"count": 912108}


def test_exit_codes(tmp_path, capsys):
    assert cli.main(["nope"]) == 1
    assert cli.main([]) == 1
    assert cli.main(["count"]) == 1
    assert cli.main(["count", str(tmp_path / "missing.txt")]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("0 x\n")
    assert cli.main(["count", str(bad)]) == 2
    assert cli.main(["analytic", "spintops", "10", "5"]) == 2
    big = tmp_path / "big.txt"
    big.write_text(format_edge_list(families.path(50)))
    assert cli.main(["count", str(big), "--max-nodes", "49"]) == 3
    assert cli.main(["count", str(big), "--max-nodes", "50"]) == 0
    capsys.readouterr()


def test_help_exits_zero():
    assert cli.main(["--help"]) == 0


def test_selftest_passes(capsys):
    assert cli.main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "selftest passed" in out
    assert out.count("ok ") == 8


def test_run_count_matches_library():
    g = families.erdos_renyi(10, 0.5, 5)
    report = cli.run_count(g)
    y = count_five(g)
    t = induced_from_noninduced(y)
    assert report["noninduced"] == {f"M{a}_5": y[a] for a in FIVE_IDS}
    assert report["induced"] == {f"M{a}_5": t[a] for a in FIVE_IDS}
