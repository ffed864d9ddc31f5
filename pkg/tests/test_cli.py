"""Command line behavior: apply output, verify exit codes, report schema,
determinism, and config file handling.

Everything runs in process through main(argv) so exit codes and streams are
captured exactly; one smoke test goes through the installed console script
to cover the entry point wiring.
"""

import json
import shutil
import subprocess

import pytest

import dunklops
from dunklops import cli
from dunklops.calogero import OperatorReport


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def strip_timing(doc):
    """Drop the wall-clock fields; everything else must be reproducible."""
    doc = json.loads(json.dumps(doc))
    doc.pop("wall_clock", None)
    for rep in doc["reports"]:
        rep.pop("seconds", None)
    return doc


# ---------------------------------------------------------------- apply


@pytest.mark.parametrize(
    "k_text,expr,expected",
    [
        ("1", "x1", "3"),  # 1 + 2k on the coordinate
        ("1", "1", "0"),
        ("1/2", "x1", "2"),
        ("0", "x1", "1"),
    ],
)
def test_apply_dunkl_first_simple_root(capsys, k_text, expr, expected):
    code, out, err = run_cli(
        capsys, ["apply", "--group", "A1", "--k", k_text, "dunkl", expr]
    )
    assert code == 0
    assert out.strip() == expected
    assert err == ""


def test_apply_drift_on_constant(capsys):
    code, out, _ = run_cli(capsys, ["apply", "--group", "A1", "--k", "1", "drift", "1"])
    assert code == 0
    assert out.strip() == "1/x1"


def test_apply_twisted_sign(capsys):
    code, out, _ = run_cli(
        capsys,
        ["apply", "--group", "A1", "--k", "1", "--rep", "sign", "twisted-dunkl", "1"],
    )
    assert code == 0
    assert out.strip() == "2/x1"

    code, out, _ = run_cli(
        capsys,
        ["apply", "--group", "A1", "--k", "1", "--rep", "sign", "twisted-dunkl", "x1"],
    )
    assert code == 0
    assert out.strip() == "1"


def test_apply_twisted_defaults_to_trivial(capsys):
    # with the trivial twist the operator coincides with the scalar one
    code, out, _ = run_cli(
        capsys, ["apply", "--group", "A1", "--k", "1", "twisted-dunkl", "x1"]
    )
    assert code == 0
    assert out.strip() == "3"


def test_apply_dirac_contraction(capsys):
    code, out, _ = run_cli(
        capsys, ["apply", "--group", "A1", "--k", "1", "dirac", "x1, 0"]
    )
    assert code == 0
    assert out.strip() == "(3*i, 0)"


# -------------------------------------------------------- usage errors


def test_apply_unknown_tag_is_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["apply", "--group", "A1", "--k", "1", "laplace", "x1"])
    assert exc.value.code == 2
    capsys.readouterr()


@pytest.mark.parametrize(
    "argv",
    [
        ["apply", "--group", "A1", "--k", "1", "dunkl", "x1 +"],
        ["apply", "--group", "A1", "--k", "1", "dunkl", "y2"],
        ["apply", "--group", "A1", "--k", "banana", "dunkl", "x1"],
        ["apply", "--group", "A1", "--k", "1/0", "dunkl", "x1"],
        ["apply", "--group", "B2", "--k", "1", "dunkl", "x1"],
        ["apply", "--group", "A1", "dunkl", "x1"],  # missing --k
        ["apply", "--k", "1", "dunkl", "x1"],  # missing --group
        # irrep2d is a rank-2 construction
        ["apply", "--group", "A1", "--k", "1", "--rep", "irrep2d", "twisted-dunkl", "1"],
        # wrong component count for a matrix-valued operator
        ["apply", "--group", "A2", "--k", "1", "--rep", "irrep2d", "twisted-dunkl", "x1"],
        ["apply", "--group", "A1", "--k", "1", "dirac", "x1"],
        ["apply", "--group", "A1", "--k", "1", "dirac", "x1,,0"],
    ],
)
def test_apply_bad_input_exits_two(capsys, argv):
    code, out, err = run_cli(capsys, argv)
    assert code == 2
    assert err.startswith("error:")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--k", "1"],
        ["verify", "--group", "A2"],
        ["verify", "--group", "A2", "--k", "1", "--suite", "nope"],
        ["verify", "--group", "A2", "--k", "1", "--suite", " , "],
        ["verify", "--group", "A7", "--k", "1"],
        ["verify", "--group", "A2", "--k", "1", "--degree-cap", "0"],
        ["verify", "--group", "A2", "--k", "1", "--degree-cap", "three"],
        ["verify", "--group", "A2", "--k", "1", "--mc-samples", "0"],
        ["verify", "--group", "A2", "--k", "1", "--seed", "pi"],
        ["verify", "--group", "A2", "--k", "1", "--config", "/no/such/file"],
    ],
)
def test_verify_bad_input_exits_two(capsys, argv):
    code, out, err = run_cli(capsys, argv)
    assert code == 2
    assert err.startswith("error:")


# ------------------------------------------------------------- verify


def test_verify_exact_suite_passes_and_validates(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    code, out, err = run_cli(
        capsys, ["verify", "--group", "A1", "--k", "1", "--suite", "clifford"]
    )
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, cli.REPORT_SCHEMA)
    assert doc["version"] == dunklops.__version__
    assert doc["summary"]["failed"] == 0
    assert doc["summary"]["passed"] >= 1
    assert doc["config"]["group"] == "A1"
    assert doc["config"]["k"] == "1"
    assert "clifford" in doc["wall_clock"]


def test_verify_suite_subset_order_and_echo(capsys):
    # suites run in canonical order no matter how the list is spelled
    code, out, _ = run_cli(
        capsys,
        [
            "verify", "--group", "A2", "--k", "1",
            "--suite", "clifford,commutativity", "--degree-cap", "3",
        ],
    )
    assert code == 0
    doc = json.loads(out)
    assert set(doc["wall_clock"]) == {"commutativity", "clifford"}
    # canonical execution order shows in the report stream
    idents = [r["identity"] for r in doc["reports"]]
    assert "commutator" in idents[0]
    assert "generator relations" in idents[-1]
    # the echoed config keeps the user's spelling
    assert doc["config"]["suites"] == ["clifford", "commutativity"]
    assert doc["config"]["degree_cap"] == 3
    assert doc["summary"]["failed"] == 0


def test_verify_schema_roundtrip(capsys):
    jsonschema = pytest.importorskip("jsonschema")
    code, schema_text, _ = run_cli(capsys, ["schema"])
    assert code == 0
    schema = json.loads(schema_text)
    jsonschema.Draft202012Validator.check_schema(schema)
    assert schema["properties"]["version"]["const"] == dunklops.__version__

    code, out, _ = run_cli(
        capsys,
        [
            "verify", "--group", "A2", "--k", "1/2",
            "--suite", "skew", "--mc-samples", "3000", "--seed", "5",
        ],
    )
    assert code == 0
    jsonschema.validate(json.loads(out), schema)


def test_verify_out_file(capsys, tmp_path):
    jsonschema = pytest.importorskip("jsonschema")
    out_path = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys,
        [
            "verify", "--group", "A1", "--k", "1",
            "--suite", "clifford", "--out", str(out_path),
        ],
    )
    assert code == 0
    assert out.startswith(f"wrote {out_path}:")
    assert "failed" in out
    doc = json.loads(out_path.read_text())
    jsonschema.validate(doc, cli.REPORT_SCHEMA)
    assert doc["summary"]["failed"] == 0


def test_verify_deterministic_given_seed(capsys):
    argv = [
        "verify", "--group", "A1", "--k", "1/2",
        "--suite", "skew", "--seed", "9", "--mc-samples", "2000",
    ]
    code1, out1, _ = run_cli(capsys, argv)
    code2, out2, _ = run_cli(capsys, argv)
    assert code1 == code2 == 0
    doc1, doc2 = strip_timing(json.loads(out1)), strip_timing(json.loads(out2))
    assert json.dumps(doc1, sort_keys=True) == json.dumps(doc2, sort_keys=True)
    # the half-integer multiplicity forces the sampled pairing path
    assert any(r.get("path") == "mc" for r in doc1["reports"])


def test_verify_seed_reaches_sampled_path(capsys):
    base = [
        "verify", "--group", "A1", "--k", "1/2",
        "--suite", "skew", "--mc-samples", "2000",
    ]
    _, out1, _ = run_cli(capsys, base + ["--seed", "9"])
    _, out2, _ = run_cli(capsys, base + ["--seed", "10"])
    doc1, doc2 = strip_timing(json.loads(out1)), strip_timing(json.loads(out2))
    assert json.dumps(doc1, sort_keys=True) != json.dumps(doc2, sort_keys=True)


# ------------------------------------------- exit code for failed identities


def fake_run_suites(reports):
    def runner(names, system, k, **kwargs):
        return list(reports), {"fake": 0.0}

    return runner


def test_verify_exit_one_on_asserted_failure(capsys, monkeypatch):
    failing = OperatorReport(
        identity="synthetic identity",
        status="residual nonzero",
        ok=False,
        asserted=True,
        witness="f = x1",
    )
    monkeypatch.setattr(cli, "run_suites", fake_run_suites([failing]))
    code, out, _ = run_cli(capsys, ["verify", "--group", "A1", "--k", "1"])
    assert code == 1
    doc = json.loads(out)
    assert doc["summary"] == {"passed": 0, "failed": 1, "measured": 0}
    assert doc["reports"][0]["witness"] == "f = x1"


def test_verify_measured_entries_never_affect_exit(capsys, monkeypatch):
    measured = OperatorReport(
        identity="synthetic sampled identity",
        status="estimate out of band",
        ok=False,
        asserted=False,
        witness="f = x1",
        path="mc",
        samples=10,
    )
    passing = OperatorReport(
        identity="synthetic exact identity", status="verified", ok=True
    )
    monkeypatch.setattr(cli, "run_suites", fake_run_suites([measured, passing]))
    code, out, _ = run_cli(capsys, ["verify", "--group", "A1", "--k", "1"])
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"] == {"passed": 1, "failed": 0, "measured": 1}


# --------------------------------------------------------- config file


def test_config_file_supplies_values(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# fast exact run\n"
        "group = A1\n"
        "k = 2\n"
        "suite = clifford\n"
        "\n"
        "seed = 11\n"
    )
    code, out, _ = run_cli(capsys, ["verify", "--config", str(cfg)])
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["group"] == "A1"
    assert doc["config"]["k"] == "2"
    assert doc["config"]["suites"] == ["clifford"]
    assert doc["config"]["seed"] == 11


def test_flags_win_over_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("group = A1\nk = 2\nsuite = clifford\nseed = 11\n")
    code, out, _ = run_cli(
        capsys, ["verify", "--config", str(cfg), "--k", "1", "--seed", "3"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["config"]["k"] == "1"
    assert doc["config"]["seed"] == 3
    assert doc["config"]["group"] == "A1"  # still from the file


def test_config_file_accepts_dashed_keys(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("group = A1\nk = 1\nsuite = clifford\nmc-samples = 5000\n")
    code, out, _ = run_cli(capsys, ["verify", "--config", str(cfg)])
    assert code == 0
    assert json.loads(out)["config"]["mc_samples"] == 5000


@pytest.mark.parametrize("body", ["group A1\n", "colour = red\n"])
def test_config_file_rejects_bad_lines(capsys, tmp_path, body):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(body)
    code, _, err = run_cli(capsys, ["verify", "--config", str(cfg), "--k", "1"])
    assert code == 2
    assert err.startswith("error:")


def test_config_applies_to_apply_too(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("group = A1\nk = 1\nrep = sign\n")
    code, out, _ = run_cli(
        capsys, ["apply", "--config", str(cfg), "twisted-dunkl", "1"]
    )
    assert code == 0
    assert out.strip() == "2/x1"


# ------------------------------------------------------- entry points


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == dunklops.__version__


def test_console_script_smoke():
    exe = shutil.which("dunklops")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run(
        [exe, "apply", "--group", "A1", "--k", "1", "dunkl", "x1"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3"
