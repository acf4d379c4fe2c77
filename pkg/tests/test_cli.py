"""Command-line front-end: subcommand dispatch, scenario files,
deterministic reports, and exit-code contract."""

import json

import pytest

from pncalc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


# ------------------------------------------------------------ subcommands

def test_convolve_steps(capsys):
    doc = run_json(capsys, "convolve", "--tnorm", "prod", "--lhs", "step:1", "--rhs", "step:2")
    assert doc["result"]["result"]["breakpoints"] == [3.0]
    assert doc["result"]["result"]["levels"] == [0.0, 1.0]
    assert doc["config"]["kind"] == "sup"  # defaults expanded into the report


def test_convolve_inf_kind(capsys):
    doc = run_json(capsys, "convolve", "--kind", "inf", "--tnorm", "lukasiewicz",
                   "--lhs", "step:1", "--rhs", "step:2")
    assert doc["result"]["result"]["breakpoints"] == [3.0]


def test_convolve_sampled_result_summarized(capsys):
    doc = run_json(capsys, "convolve", "--tnorm", "prod", "--lhs", "ratio:1", "--rhs", "step:0.5",
                   "--grid", "128", "--xmax", "16")
    r = doc["result"]["result"]
    assert r["family"] == "grid"
    assert r["n"] == 128


def test_grid_file_operand(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("0.5 0.2\n1.0 0.6\n2.0 1.0\n")
    doc = run_json(capsys, "convolve", "--kind", "max", "--lhs", f"grid:@{path}", "--rhs", "step:0")
    assert doc["result"]["result"]["family"] == "grid" or doc["result"]["result"]["family"] == "step"


def test_axioms_subcommand(capsys):
    doc = run_json(capsys, "axioms", "--space", "E12", "--tau", "sup:prod",
                   "--taustar", "inf:prod", "--tol", "1e-9")
    assert doc["result"]["all_hold"] is True
    assert doc["result"]["axioms"]["N3"] is True


def test_serstnev_subcommand_reports_witness(capsys):
    doc = run_json(capsys, "serstnev", "--space", "E9:a=1")
    assert doc["result"]["holds"] is False
    assert "witness" in doc["result"]


def test_classify_subcommand(capsys):
    doc = run_json(capsys, "classify", "--space", "E9:a=1", "--set", "all_reals")
    assert doc["result"]["class"] == "certainly_bounded"
    assert doc["result"]["x0"] == 1.0


def test_radius_subcommand(capsys):
    doc = run_json(capsys, "radius", "--space", "E25",
                   "--set", "interval:1.4142136,3.1622777")
    assert doc["result"]["radius"]["family"] == "ratio"
    assert doc["result"]["radius"]["beta"] == pytest.approx(1.77827941, abs=1e-6)


def test_converge_subcommand_divergence_verdict(capsys):
    doc = run_json(capsys, "converge", "--space", "E21", "--seq", "harmonic",
                   "--target", "0", "--lambdas", "0.25", "--horizon", "64")
    assert doc["result"]["verdict"] == "diverges"
    assert doc["result"]["per_lambda"][0]["N"] is None


def test_cauchy_subcommand(capsys):
    doc = run_json(capsys, "cauchy", "--space", "E9:a=1", "--seq", "geometric",
                   "--lambdas", "0.25")
    assert doc["result"]["verdict"] == "not_cauchy"


def test_equiv_subcommand(capsys):
    doc = run_json(capsys, "equiv", "--a", "E19:l2", "--b", "E19b:a=1,l2")
    assert doc["result"]["equivalent_on_battery"] is True


def test_find_c_subcommand(capsys):
    doc = run_json(capsys, "find_c", "--space", "E19:l2,dim=2", "--basis", "1,0;0,1",
                   "--field", "E19")
    assert doc["result"]["c"] == pytest.approx(0.707107, abs=0.01)


def test_compact_subcommand(capsys):
    doc = run_json(capsys, "compact", "--space", "E9:a=1", "--set", "seq:geometric")
    assert doc["result"]["refuted"] is True


def test_lgprobe_subcommand(capsys):
    doc = run_json(capsys, "lgprobe", "--space", "E12")
    assert doc["result"]["has_lg_property"] is True


# ------------------------------------------------------------ scenarios

def test_scenario_file_runs_task(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"task": "convolve", "tnorm": "prod",
                                "lhs": "step:1", "rhs": "step:2"}))
    doc = run_json(capsys, "--scenario", str(path))
    assert doc["result"]["result"]["breakpoints"] == [3.0]


def test_scenario_unknown_key_rejected(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"task": "convolve", "lhs": "step:1", "rhs": "step:2",
                                "mystery": 1}))
    code, out, err = run_cli(capsys, "--scenario", str(path))
    assert code == 2
    assert "mystery" in err


def test_scenario_malformed_json_gives_line_number(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text('{"task": "convolve",\n "lhs": oops}')
    code, out, err = run_cli(capsys, "--scenario", str(path))
    assert code == 2
    assert ":2:" in err  # line number of the parse failure


def test_scenario_unknown_task(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"task": "frobnicate"}))
    code, _, err = run_cli(capsys, "--scenario", str(path))
    assert code == 2
    assert "frobnicate" in err


SCENARIOS = [
    ({"task": "convolve", "tnorm": "min", "lhs": "step:0.5", "rhs": "step:0.5"},
     lambda r: r["result"]["breakpoints"] == [1.0]),
    ({"task": "axioms", "space": "E21"},
     lambda r: r["all_hold"] is True),
    ({"task": "serstnev", "space": "E19"},
     lambda r: r["holds"] is True),
    ({"task": "classify", "space": "E12", "set": "finite:1"},
     lambda r: r["class"] == "perhaps_unbounded"),
    ({"task": "radius", "space": "E19", "set": "finite:0.5;1;2"},
     lambda r: r["radius"]["breakpoints"] == [2.0]),
    ({"task": "converge", "space": "E19", "seq": "harmonic", "target": "0",
      "lambdas": "0.25"},
     lambda r: r["per_lambda"][0]["N"] == 5),
    ({"task": "cauchy", "space": "E19", "seq": "harmonic", "lambdas": "0.25"},
     lambda r: r["verdict"] == "cauchy"),
    ({"task": "equiv", "a": "E19", "b": "E19b:a=1"},
     lambda r: r["equivalent_on_battery"] is True),
    ({"task": "find_c", "space": "E19:linf,dim=2", "basis": "1,0;0,1"},
     lambda r: abs(r["c"] - 0.5) < 0.01),
    ({"task": "compact", "space": "E27:a=1", "set": "finite:-1;0;1"},
     lambda r: r["refuted"] is True),
    ({"task": "lgprobe", "space": "E9:a=1"},
     lambda r: r["has_lg_property"] is False),
]


@pytest.mark.parametrize("doc,check", SCENARIOS, ids=[s[0]["task"] for s in SCENARIOS])
def test_every_task_runs_from_a_scenario(capsys, tmp_path, doc, check):
    path = tmp_path / "s.json"
    path.write_text(json.dumps(doc))
    report = run_json(capsys, "--scenario", str(path))
    assert report["task"] == doc["task"]
    assert check(report["result"]), report["result"]


# ------------------------------------------------------------ determinism

def test_reports_are_byte_stable(capsys, tmp_path):
    s = tmp_path / "s.json"
    s.write_text(json.dumps({"task": "classify", "space": "E9:a=1", "set": "all_reals"}))
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert main(["--scenario", str(s), "--out", str(out1)]) == 0
    assert main(["--scenario", str(s), "--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


def test_report_embeds_resolved_config(capsys):
    doc = run_json(capsys, "classify", "--space", "E9:a=1", "--set", "all_reals")
    cfg = doc["config"]
    assert cfg["tol"] == 1e-9  # default expanded
    assert cfg["samples"] == 200
    assert cfg["seed"] == 7


def test_env_seed_respected(capsys, monkeypatch):
    monkeypatch.setenv("PNCALC_SEED", "123")
    doc = run_json(capsys, "classify", "--space", "E9:a=1", "--set", "all_reals")
    assert doc["config"]["seed"] == 123


# ------------------------------------------------------------ errors & suites

def test_missing_required_option(capsys):
    code, _, err = run_cli(capsys, "classify", "--space", "E9:a=1")
    assert code == 2
    assert "set" in err


def test_bad_distfn_spec(capsys):
    code, _, err = run_cli(capsys, "convolve", "--lhs", "step:", "--rhs", "step:1")
    assert code == 2


def test_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "suite", "nonesuch")
    assert code == 2
    assert "nonesuch" in err


def test_laws_suite_clean(capsys):
    doc = run_json(capsys, "suite", "laws", "--seed", "7")
    assert doc["result"]["violations"] == 0
    assert {t["name"] for t in doc["result"]["tnorms"]} == {"min", "prod", "lukasiewicz", "t2"}
