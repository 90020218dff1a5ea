import csv
import io
import json

import pytest

from wfs import cli
from wfs.bench import CSV_HEADER, growth_exponent
from wfs.generators import PAPER_EXAMPLE


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def paper_file(tmp_path):
    path = tmp_path / "paper_example.lp"
    path.write_text(PAPER_EXAMPLE)
    return path


def test_solve_paper_example(capsys, paper_file):
    code, out, _ = run(capsys, "solve", str(paper_file), "--algorithm", "topdown")
    assert code == 0
    assert out == "true: a b c\nfalse: d e f g h i j k\nunknown:\n"


def test_solve_json_all_algorithms_agree(capsys, paper_file):
    outs = set()
    for algorithm in ("vg", "alg2", "topdown"):
        code, out, _ = run(capsys, "solve", str(paper_file), "--algorithm", algorithm, "--format", "json")
        assert code == 0
        outs.add(out)
    assert len(outs) == 1
    assert json.loads(outs.pop())["false"] == list("defghijk")


def test_solve_two_cycle(capsys, tmp_path):
    path = tmp_path / "two_cycle.lp"
    path.write_text("a :- not b.\nb :- not a.\n")
    code, out, _ = run(capsys, "solve", str(path))
    assert (code, out) == (0, "true:\nfalse:\nunknown: a b\n")


def test_solve_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.lp"
    path.write_text("a.\nx :- not.\n")
    code, out, err = run(capsys, "solve", str(path))
    assert code == 1 and out == ""
    assert "line 2" in err


def test_solve_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "solve", str(tmp_path / "nope.lp"))
    assert code == 1 and err


def test_solve_not_lp1(capsys, tmp_path):
    path = tmp_path / "nonlp1.lp"
    path.write_text("a :- b, c.\nb.\nc.\n")
    code, out, err = run(capsys, "solve", str(path), "--algorithm", "topdown")
    assert code == 2 and out == "" and "fallback" in err
    code, out, _ = run(capsys, "solve", str(path), "--algorithm", "topdown", "--fallback")
    assert code == 0 and out.startswith("true: a b c")


def test_trace_json(capsys, tmp_path, paper_file):
    trace = tmp_path / "trace.jsonl"
    code, _, _ = run(capsys, "solve", str(paper_file), "--algorithm", "topdown", "--trace-json", str(trace))
    assert code == 0
    events = [json.loads(line) for line in trace.read_text().splitlines()]
    kinds = {e["event"] for e in events}
    assert kinds == {"iter", "merge", "back_edge", "report"}
    reports = [e["v"] for e in events if e["event"] == "report"]
    assert reports[0] == ["g", "h", "j", "k"]
    merges = [e["members"] for e in events if e["event"] == "merge"]
    assert ["g", "h", "j", "k"] in merges
    first_iter = next(e for e in events if e["event"] == "iter")
    assert first_iter == {"event": "iter", "i": 1, "dt": ["a", "b", "c"], "df": ["g", "h", "j", "k"]}


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--count", "40", "--max-atoms", "12", "--seed", "7")
    assert code == 0 and "40" in out
    code, _, _ = run(capsys, "check", "--count", "0")
    assert code == 0


def test_check_detects_broken_solver(capsys, monkeypatch):
    from wfs.core import WfsResult

    def broken(p, stats=None, trace=None):
        return WfsResult.of(p, (), ())

    monkeypatch.setattr(cli, "solve_vg", broken)
    code, out, _ = run(capsys, "check", "--count", "30", "--seed", "1")
    assert code == 3
    assert out.strip()


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--family", "chain", "--sizes", "10,20",
                       "--algorithms", "vg,topdown", "--reps", "3")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == CSV_HEADER
    assert out.splitlines()[0] == "family,n,algorithm,atoms,size,iterations,wall_time_ns,in_list_inspections"
    assert len(rows) == 1 + 2 * 2 * 3
    assert {r[2] for r in rows[1:]} == {"vg", "topdown"}


def test_bench_unknown_algorithm(capsys):
    code, _, err = run(capsys, "bench", "--algorithms", "nope")
    assert code == 1 and "nope" in err


def test_gen_roundtrips_through_solve(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--family", "guarded_chain", "--n", "3")
    assert code == 0
    path = tmp_path / "g.lp"
    path.write_text(out)
    code, out, _ = run(capsys, "solve", str(path), "--algorithm", "topdown")
    assert out == "true: c1 c2 c3\nfalse: b1 b2 b3\nunknown:\n"


def test_gen_is_deterministic(capsys):
    a = run(capsys, "gen", "--family", "random_lp1", "--n", "9", "--seed", "4")[1]
    b = run(capsys, "gen", "--family", "random_lp1", "--n", "9", "--seed", "4")[1]
    assert a == b and a


def test_gen_paper_example(capsys):
    assert run(capsys, "gen", "--family", "paper_example")[1] == PAPER_EXAMPLE


def test_growth_exponent():
    ns = [10, 20, 40, 80]
    assert growth_exponent(ns, [n ** 2 for n in ns]) == pytest.approx(2.0)
    assert growth_exponent(ns, [5 * n for n in ns]) == pytest.approx(1.0)
