import json
import subprocess
import sys

import pytest

from specmine.automata import accepts, from_json_dict
from specmine.cli import EXIT_INVARIANT, EXIT_IO, EXIT_USAGE, main
from specmine.traces import parse_traces

TWO = "regLogin,order,inv,pay,ship\npremLogin,order,ship,inv,pay\n"


@pytest.fixture
def two(tmp_path):
    p = tmp_path / "two.traces"
    p.write_text(TWO)
    return p


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_mine_eval_round_trip(tmp_path, capsys):
    code, out, _ = run(["gen", "--model", "retailer", "--strategy", "path", "--visit-limit", "2"], capsys)
    assert code == 0 and len(out.splitlines()) == 6
    traces = tmp_path / "r.traces"
    traces.write_text(out)
    model = tmp_path / "m.json"
    assert run(["mine", "--algo", "specminer", "--rc", "2", "--in", traces, "--out", model], capsys)[0] == 0
    code, out, _ = run(["eval", "--model", "retailer", "--mined", model, "--format", "csv"], capsys)
    assert code == 0
    assert out.splitlines()[1].split(",")[3:5] == ["1.000", "1.000"]


def test_ktail_spurious_flagged(two, tmp_path, capsys):
    model = tmp_path / "k1.json"
    assert run(["mine", "--algo", "ktail", "--k", "1", "--in", two, "--out", model], capsys)[0] == 0
    code, out, _ = run(["eval", "--model", "retailer", "--mined", model, "--spurious", "50"], capsys)
    assert code == 0
    assert "spurious retailer: regLogin,order,ship\n" in out


def test_mine_stdin_dot(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(TWO))
    code, out, _ = run(["mine", "--in", "-", "--format", "dot"], capsys)
    assert code == 0 and out.startswith("digraph")


def test_mined_json_accepts_input(two, capsys):
    code, out, _ = run(["mine", "--in", two], capsys)
    m = from_json_dict(json.loads(out))
    assert all(accepts(m, t) for t in parse_traces(TWO))


def test_pta_minimize_export(two, tmp_path, capsys):
    pta = tmp_path / "pta.json"
    assert run(["pta", "--in", two, "--out", pta], capsys)[0] == 0
    assert len(json.loads(pta.read_text())["states"]) == 11
    code, out, _ = run(["minimize", "--in", pta], capsys)
    assert code == 0 and len(json.loads(out)["states"]) == 10
    code, out, _ = run(["export", "--in", pta, "--format", "dot"], capsys)
    assert code == 0 and "doublecircle" in out


def test_rules(two, capsys):
    code, out, _ = run(["rules", "--in", two], capsys)
    assert code == 0
    assert "inv -> pay\n" in out and "order <- ship\n" in out
    assert out.splitlines() == sorted(out.splitlines())


def test_eval_all_reproducible(capsys):
    first = run(["eval", "--all", "--no-timing", "--format", "csv"], capsys)
    second = run(["eval", "--all", "--no-timing", "--format", "csv"], capsys)
    assert first == second and first[0] == 0
    assert len(first[1].splitlines()) == 1 + 6 * 3


def test_eval_model_file(tmp_path, capsys):
    code, out, _ = run(["gen", "--model", "StringTokenizer"], capsys)
    assert code == 0
    model = tmp_path / "st.json"
    traces = tmp_path / "st.traces"
    traces.write_text(out)
    run(["mine", "--in", traces, "--out", model], capsys)
    code, out, _ = run(["eval", "--model", model, "--algo", "ktail", "--k", "1", "--no-timing"], capsys)
    assert code == 0 and "st" in out


@pytest.mark.parametrize("argv,code", [
    (["mine", "--in", "missing.traces"], EXIT_IO),
    (["mine", "--rc", "1", "--in", "x"], EXIT_USAGE),
    (["mine", "--k", "0", "--in", "x"], EXIT_USAGE),
    (["eval", "--model", "nope"], EXIT_USAGE),
    (["eval"], EXIT_USAGE),
    (["gen", "--model", "retailer", "--visit-limit", "999"], EXIT_USAGE),
    (["frobnicate"], EXIT_USAGE),
])
def test_error_codes(argv, code, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    try:
        got = main(argv)
    except SystemExit as exc:  # argparse usage errors
        got = exc.code
    assert got == code
    _, err = capsys.readouterr()
    assert "Traceback" not in err
    assert err.strip().splitlines()[-1].startswith("specmine")


def test_parse_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.traces"
    bad.write_text("a,b\n , \n")
    code, out, err = run(["mine", "--in", bad], capsys)
    assert code == EXIT_USAGE and "line 2" in err and out == ""
    bad.write_text("{not json")
    assert run(["export", "--in", bad], capsys)[0] == EXIT_USAGE


def test_invariant_exit(two, monkeypatch, capsys):
    import specmine.cli as cli
    from specmine.automata import Fsa
    monkeypatch.setattr(cli, "specminer", lambda traces, rc: Fsa.from_transitions([], "q0"))
    code, _, err = run(["mine", "--in", two], capsys)
    assert code == EXIT_INVARIANT and "internal error" in err


def test_unwritable_output(two, tmp_path, capsys):
    code, _, _ = run(["mine", "--in", two, "--out", tmp_path / "no" / "such" / "dir.json"], capsys)
    assert code == EXIT_IO


def test_console_script(two):
    proc = subprocess.run([sys.executable, "-m", "specmine.cli", "rules", "--in", str(two)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "regLogin -> ship" in proc.stdout
