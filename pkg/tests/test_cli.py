"""Command-line contract: subcommands, exit codes, replayable witnesses."""

import pytest

from amalgam.cli import main
from amalgam.graphs import cycle_graph
from amalgam.io import format_graph, load_graph, parse_graph


@pytest.fixture()
def cycle4(tmp_path):
    path = tmp_path / "cycle4.g"
    path.write_text(format_graph(cycle_graph(4)))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classes_lists_registry(capsys):
    code, out, _ = run(capsys, "classes")
    assert code == 0
    assert "kd" in out and "kp-forall" in out and "kalpha" in out


def test_check_strong_pass_and_fail(capsys, cycle4):
    code, out, _ = run(capsys, "check-strong", "--class", "kd", "--ambient", cycle4, "--set", "0,1")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "check-strong", "--class", "kd", "--ambient", cycle4, "--set", "0,2")
    assert code == 1 and out.startswith("FAIL")
    # the printed witness replays to the same verdict
    witness = parse_graph("\n".join(ln for ln in out.splitlines() if not ln.startswith(("PASS", "FAIL"))))
    assert witness == cycle_graph(4)


def test_usage_errors_exit_two(capsys, cycle4, tmp_path):
    code, _, err = run(capsys, "check-strong", "--class", "nope", "--ambient", cycle4, "--set", "0")
    assert code == 2 and "unknown class" in err
    bad = tmp_path / "bad.g"
    bad.write_text("e 0 1\n")
    code, _, err = run(capsys, "check-strong", "--class", "kd", "--ambient", str(bad), "--set", "0")
    assert code == 2 and "line 1" in err


def test_budget_exit_three(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("AMALGAM_BUDGET", "4")
    big = tmp_path / "big.g"
    big.write_text(format_graph(cycle_graph(9)))
    code, _, err = run(capsys, "closure", "--class", "kd", "--mode", "enumerate", "--ambient", str(big), "--set", "0,3")
    assert code == 3 and "budget" in err


def test_axioms_exit_codes(capsys):
    code, out, _ = run(capsys, "axioms", "--class", "kh", "--max-n", "4")
    assert code == 0 and "A6 PASS" in out
    code, out, _ = run(capsys, "axioms", "--class", "kd", "--max-n", "4")
    assert code == 1 and "A6 FAIL" in out


def test_closure_modes(capsys, cycle4):
    code, out, _ = run(capsys, "closure", "--class", "kd", "--mode", "mcl", "--ambient", cycle4, "--set", "0,2")
    assert code == 0 and "(0, 1, 2, 3)" in out
    code, out, _ = run(capsys, "closure", "--class", "kd", "--mode", "resolve", "--ambient", cycle4, "--set", "0,2")
    assert "(0, 1, 2)" in out
    code, out, _ = run(
        capsys, "closure", "--class", "kd", "--mode", "resolve", "--tiebreak", "revlex", "--ambient", cycle4, "--set", "0,2"
    )
    assert "(0, 2, 3)" in out
    code, out, _ = run(capsys, "closure", "--class", "kd", "--mode", "enumerate", "--ambient", cycle4, "--set", "0,2")
    assert "2 minimal resolution(s)" in out


def test_biminimal_command(capsys, tmp_path):
    base = tmp_path / "pair.g"
    base.write_text("n 2\n")
    code, out, _ = run(capsys, "biminimal", "--class", "kd", "--base", str(base), "--max-new", "2")
    assert code == 0 and out.startswith("2 biminimal extension(s)")


def test_amalgam_command(capsys, tmp_path):
    left = tmp_path / "b.g"
    left.write_text("n 3\ne 0 2\ne 1 2\n")
    code, out, _ = run(
        capsys, "amalgam", "--class", "kd", "--mode", "free", "--left", str(left), "--right", str(left), "--shared", "0,1"
    )
    assert code == 0 and out.startswith("PASS")


def test_generic_build_writes_snapshot(capsys, tmp_path):
    out_path = tmp_path / "gen.g"
    code, out, _ = run(
        capsys, "generic", "build", "--class", "kd", "--stages", "12", "--bound", "2",
        "--seed", "5", "--out", str(out_path), "--verify",
    )
    assert code == 0
    assert "digest" in out
    g = load_graph(str(out_path))
    assert g.n > 0


def test_moss_growth_csv(capsys):
    code, out, _ = run(
        capsys, "moss", "growth", "--class", "kp-lt", "--paths", "1", "--path-len", "20",
        "--filler", "2", "--margin", "8", "--radii", "1..4", "--csv",
    )
    assert code == 0
    assert out.splitlines()[:3] == ["radius,size", "1,2", "2,3"]


def test_moss_inject_and_chain(capsys):
    code, out, _ = run(
        capsys, "moss", "inject", "--class", "kp-lt", "--paths", "2", "--path-len", "8",
        "--filler", "6", "--margin", "2", "--bound", "2",
    )
    assert code == 0 and "unmet 0" in out
    code, out, _ = run(capsys, "moss", "chain", "--class", "kp-lt", "--length", "6")
    assert code == 0 and "chain of 6" in out


def test_companion_commands(capsys):
    code, out, _ = run(capsys, "companion", "roundtrip", "--class", "kc", "--other", "kd", "--bound", "4")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "companion", "break-free", "--class", "km", "--max-a", "3", "--max-ext", "1")
    assert code == 1 and out.startswith("FAIL")
    code, out, _ = run(capsys, "companion", "break-free", "--class", "kh", "--max-a", "3", "--max-ext", "1")
    assert code == 0


def test_break_free_witness_replays(capsys, tmp_path):
    code, out, _ = run(capsys, "companion", "break-free", "--class", "km", "--max-a", "3", "--max-ext", "1")
    assert code == 1
    blocks = out.split("# ")
    graphs = {}
    for block in blocks[1:]:
        header, _, body = block.partition("\n")
        graphs[header.split(";")[0]] = parse_graph(body)
    from amalgam.kernel import check_free_amalgamation
    from amalgam.zoo import get_class

    a = graphs["shared part"]
    verdict = check_free_amalgamation(
        get_class("km"), tuple(range(a.n)), graphs["left extension"], graphs["right extension"]
    )
    assert not verdict.passed


def test_dot_command(capsys, cycle4):
    code, out, _ = run(capsys, "dot", "--graph", cycle4, "--set", "0")
    assert code == 0 and "graph G {" in out and "0 -- 1;" in out


def test_alpha_flag(capsys, tmp_path):
    g = tmp_path / "k5.g"
    from amalgam.graphs import complete_graph

    g.write_text(format_graph(complete_graph(5)))
    code, out, _ = run(capsys, "check-strong", "--class", "kalpha", "--alpha", "618/1000", "--ambient", str(g), "--set", "0,1")
    assert code in (0, 1)
    code, _, err = run(capsys, "check-strong", "--class", "kalpha", "--alpha", "1/2", "--ambient", str(g), "--set", "")
    assert code == 2 and "zero" in err
