"""CLI surface: subcommands, JSON stability, exit codes, corpus run."""
import json

import pytest

from knotoids import cli

from conftest import SING1, STRING_G5, STRING_G6, VK4


@pytest.fixture
def run(capsys):
    def go(*argv):
        rc = cli.main(list(argv))
        out = capsys.readouterr().out
        return rc, json.loads(out)
    return go


@pytest.fixture
def codefile(tmp_path):
    def write(text, name="code.gauss"):
        p = tmp_path / name
        p.write_text(text + "\n")
        return str(p)
    return write


def test_validate(run, codefile):
    rc, out = run("validate", codefile(VK4))
    assert rc == 0
    assert out["ok"] and out["kind"] == "Classical" and out["chords"] == 4


def test_validate_error_exit_code(run, codefile):
    rc, out = run("validate", codefile("O1+ U2+ / O2+"))
    assert rc == 1
    assert out["error"] == "ValidityError"


def test_usage_error_exit_code(codefile):
    with pytest.raises(SystemExit) as exc:
        cli.main(["invariant", "bogus", "nofile"])
    assert exc.value.code == 2


def test_invariant_flat_affine(run, codefile):
    rc, out = run("invariant", "flat-affine", codefile("B1 B3 A2 A3 A1 B2"))
    assert rc == 0
    assert out == {"Q": {"1": -2, "2": 1}}


def test_invariant_report(run, codefile):
    rc, out = run("invariant", "report", codefile(VK4))
    assert rc == 0
    assert out["writhe"] == -2
    assert {c["id"]: c["sign"] for c in out["crossings"]} == {1: -1, 2: -1, 3: -1, 4: 1}
    assert "P" in out and "decomposition" in out


def test_smooth_commands(run, codefile):
    rc, out = run("smooth", "zero", "--at", "1", codefile(VK4))
    assert rc == 0 and out["code"] == "B2 B3 A4 A3 A2 B4"
    rc, out = run("smooth", "one", "--at", "1", codefile("O2+ O1+ U2+ U1+"))
    assert rc == 0 and out["intersection_index"] == 1


def test_glue_command(run, codefile):
    rc, out = run("glue", "--at", "1", codefile("O1+ U1+"))
    assert rc == 0 and out["code"] == "SA1* SB1*"


def test_vassiliev_commands(run, codefile):
    rc, out = run("vassiliev", "f", codefile(VK4))
    assert rc == 0
    assert sorted(t["coef"] for t in out["terms"]) == [-2, 2]
    rc, out = run("vassiliev", "derivative", "--inv", "f", codefile(SING1))
    assert rc == 0
    assert sorted(t["coef"] for t in out["terms"]) == [-2, 2]


def test_sbm_commands(run, codefile, tmp_path):
    rc, built = run("sbm", "build", codefile(STRING_G5))
    assert rc == 0
    assert built["elements"] == ["s", "1", "2", "3", "4", "6", "5"]
    a = tmp_path / "a.json"
    a.write_text(json.dumps(built))
    rc, out = run("sbm", "primitive", str(a))
    assert rc == 0 and out["primitive"] is True
    assert out["d_annihilating_like"] is False and out["d_core_like"] is False
    b = tmp_path / "b.json"
    rc, built6 = run("sbm", "build", codefile(STRING_G6, "g6.gauss"))
    b.write_text(json.dumps(built6))
    rc, out = run("sbm", "compare", str(a), str(b))
    assert rc == 0
    assert out == {"certificate": "none", "homologous": False}


def test_walk_deterministic(run, codefile):
    f = codefile(VK4)
    rc1, out1 = run("walk", "--steps", "5", "--seed", "9", f)
    rc2, out2 = run("walk", "--steps", "5", "--seed", "9", f)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_output_byte_stable(codefile, capsys):
    f = codefile(VK4)
    cli.main(["invariant", "report", f])
    first = capsys.readouterr().out
    cli.main(["invariant", "report", f])
    second = capsys.readouterr().out
    assert first == second


def test_corpus_shipped(run):
    rc, out = run("corpus")
    assert rc == 0
    assert out["ok"] and out["cases"] >= 50 and not out["failures"]


def test_corpus_detects_mismatch(run, tmp_path):
    bad = [{"name": "broken", "check": "writhe_signs", "source": "trivial",
            "input": "O1+ U1+", "w": -7, "signs": {"1": 1}}]
    d = tmp_path / "fixtures"
    d.mkdir()
    (d / "bad.json").write_text(json.dumps(bad))
    rc, out = run("corpus", str(d))
    assert rc == 1
    assert not out["ok"] and out["failures"]
