"""Command line behavior: outputs, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

import skelkit as sk
from skelkit.cli import main
from conftest import bundled_path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def path(name):
    return str(bundled_path(name))


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", path("cusp"))
    assert code == 0 and out == "valid\n"


def test_validate_reports_violations(tmp_path, capsys):
    doc = json.loads(bundled_path("edge_23").read_text())
    doc["strata"] = [s for s in doc["strata"] if s["id"] != "v_A"]
    bad = tmp_path / "bad.model"
    bad.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1
    assert "missing-singleton" in out


def test_parse_error_is_exit_2(tmp_path, capsys):
    f = tmp_path / "broken.model"
    f.write_text("{nope")
    code, _, err = run(capsys, "validate", str(f))
    assert code == 2
    assert "parse error" in err and "line 1" in err
    code, _, err = run(capsys, "info", str(tmp_path / "missing.model"))
    assert code == 2


def test_info(capsys):
    code, out, _ = run(capsys, "info", path("kodaira_IIstar"))
    assert code == 0
    assert "components: 9" in out
    assert "C6: N=6 mu=1" in out


def test_weight_and_retract(capsys):
    code, out, _ = run(
        capsys, "weight", path("edge_23"), "--stratum", "e_A_B", "--alpha", "1/4,1/6"
    )
    assert code == 0 and out == "5/12\n"
    code, out, _ = run(
        capsys, "retract", path("edge_23"), "--stratum", "e_A_B", "--values", "0,1/3"
    )
    assert code == 0 and out == "stratum=v_B; alpha=B=1/3\n"


def test_weight_rejects_bad_points(capsys):
    code, _, err = run(
        capsys, "weight", path("edge_23"), "--stratum", "e_A_B", "--alpha", "1/4,1/4"
    )
    assert code == 1 and "5/4" in err
    code, _, err = run(
        capsys, "weight", path("edge_23"), "--stratum", "e_A_B", "--alpha", "1/4"
    )
    assert code == 1 and "2 vertices" in err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", path("edge_23"), "--stratum", "e_A_B")
    assert code == 0 and out == "affine\n"


def test_blowup_stratum_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "blown.model"
    code, out, _ = run(
        capsys, "blowup", path("edge_23"), "--stratum", "e_A_B", "-o", str(out_path)
    )
    assert code == 0
    assert out == "new vertex: exc1 (N=5, mu=2)\n"
    blown = sk.load_model(out_path)
    assert sk.validate(blown).ok


def test_blowup_to_stdout_is_a_model(capsys):
    code, out, _ = run(capsys, "blowup", path("edge_23"), "--stratum", "e_A_B")
    assert code == 0
    model = sk.parse_model(out)
    assert sk.validate(model).ok


def test_blowup_point(tmp_path, capsys):
    out_path = tmp_path / "blown.model"
    code, out, _ = run(
        capsys,
        "blowup",
        path("reduced_fiber"),
        "--point",
        "s_A_B_C",
        "A,B",
        "3",
        "-o",
        str(out_path),
    )
    assert code == 0
    assert out == "new vertex: exc1 (N=2, mu=3)\n"
    assert sk.validate(sk.load_model(out_path)).ok
    code, _, err = run(
        capsys, "blowup", path("reduced_fiber"), "--point", "s_A_B_C", "A", "x"
    )
    assert code == 1 and "integer" in err


def test_blowup_requires_a_center(capsys):
    code, _, err = run(capsys, "blowup", path("edge_23"))
    assert code == 1 and "needs" in err


def test_reduce(capsys):
    code, out, _ = run(
        capsys, "reduce", path("edge_23"), "--stratum", "e_A_B", "--alpha", "1/5,1/5"
    )
    assert code == 0
    assert out.splitlines() == [
        "step 1: center={A,B} codim=2 -> exc1 (N=5, mu=2)",
        "final: exc1 (N=5, mu=2)",
    ]


def test_ks_and_essential(tmp_path, capsys):
    code, out, _ = run(capsys, "ks", path("kodaira_I0star"))
    assert code == 0 and out == "min=1/2; strata={v_C}; connected=true\n"

    form = tmp_path / "form.json"
    form.write_text(json.dumps({"m": 1, "mu": {"A": 1, "B": 5}}))
    code, out, _ = run(capsys, "ks", path("edge_23"), "--form", str(form))
    assert code == 0 and out == "min=1/2; strata={v_A}; connected=true\n"

    other = tmp_path / "other.json"
    other.write_text(json.dumps({"m": 1, "mu": {"A": 3, "B": 4}}))
    code, out, _ = run(
        capsys,
        "essential",
        path("edge_23"),
        "--form",
        str(form),
        "--form",
        str(other),
    )
    assert code == 0 and out == "strata={v_A,v_B}; connected=false\n"


def test_ks_empty_skeleton_is_flagged(tmp_path, capsys):
    form = tmp_path / "form.json"
    form.write_text(
        json.dumps(
            {
                "m": 1,
                "mu": {"A": 1, "B": 1},
                "touches_zero": {"v_B": True, "e_A_B": True},
            }
        )
    )
    code, out, _ = run(capsys, "ks", path("edge_23"), "--form", str(form))
    assert code == 0 and out == "min=1/3; strata={}; connected=false (empty)\n"


def test_bad_form_file(tmp_path, capsys):
    form = tmp_path / "form.json"
    form.write_text(json.dumps({"m": 1, "mu": {"A": 1, "B": 1}, "extra": 2}))
    code, _, err = run(capsys, "ks", path("edge_23"), "--form", str(form))
    assert code == 2 and "unknown keys" in err
    form.write_text(json.dumps({"m": "x", "mu": {}}))
    code, _, err = run(capsys, "ks", path("edge_23"), "--form", str(form))
    assert code == 2


def test_lct_and_report(capsys):
    code, out, _ = run(capsys, "lct", path("cusp"))
    assert code == 0 and out == "lct=5/6; sk_pair={v_E3}\n"
    code, out, _ = run(capsys, "lct", path("node"))
    assert code == 0 and out == "lct=1; sk_pair={e_A_B,v_A,v_B}\n"
    code, out, _ = run(capsys, "report", path("cusp"))
    assert code == 0 and "connected=true" in out
    code, _, err = run(capsys, "lct", path("edge_23"))
    assert code == 1 and "log-resolution" in err


def test_export_graph_marks_the_minimal_locus(capsys):
    code, out, _ = run(capsys, "export", path("kodaira_I0star"))
    assert code == 0
    assert out.startswith("graph dual_complex {")
    assert '"v_C" [label="v_C: C (N=2, mu=1)", style=filled' in out
    assert '"e_C_T1" -- "v_C";' in out


def test_export_structured_roundtrip(tmp_path, capsys):
    out_path = tmp_path / "copy.model"
    code, _, _ = run(
        capsys, "export", path("cusp"), "--format", "structured", "-o", str(out_path)
    )
    assert code == 0
    assert out_path.read_text() == bundled_path("cusp").read_text()


def test_outputs_are_deterministic(capsys):
    for argv in (
        ["export", path("kodaira_I2star")],
        ["ks", path("kodaira_I5")],
        ["report", path("cusp")],
        ["blowup", path("edge_23"), "--stratum", "e_A_B"],
    ):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second and first[0] == 0


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "skelkit.cli"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2  # argparse usage error: no subcommand

    proc = subprocess.run(
        [sys.executable, "-c", "from skelkit.cli import main; raise SystemExit(main(['lct', r'''" + path("cusp") + "''']))"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "lct=5/6; sk_pair={v_E3}\n"
