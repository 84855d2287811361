"""Command-line interface: subcommands, artifact files, and exit codes."""
from __future__ import annotations

import json
import shutil
import subprocess

import pytest

import negsim as ns
from negsim.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def gen_scenario(capsys, tmp_path, name="scenario.json", **kw):
    path = str(tmp_path / name)
    args = {
        "--issues": "2",
        "--values-per-issue": "3",
        "--parties": "3",
        "--seed": "5",
    }
    args.update({k: str(v) for k, v in kw.items()})
    argv = ["gen-scenario", "--out", path]
    for k, v in args.items():
        argv += [k, v]
    code, out, _ = run_cli(capsys, *argv)
    assert code == 0
    return path, json.loads(out)


# ---------------------------------------------------------------------------
# gen-scenario


def test_gen_scenario_writes_a_loadable_file(capsys, tmp_path):
    path, report = gen_scenario(capsys, tmp_path)
    assert report["out"] == path
    assert len(report["hash"]) == 64
    domain, profiles = ns.load_scenario(path)
    assert len(profiles) == 3
    assert len(domain.issues) == 2
    assert ns.scenario_hash(domain, profiles) == report["hash"]


def test_gen_scenario_is_seed_deterministic(capsys, tmp_path):
    _, a = gen_scenario(capsys, tmp_path, name="a.json")
    _, b = gen_scenario(capsys, tmp_path, name="b.json")
    _, c = gen_scenario(capsys, tmp_path, name="c.json", **{"--seed": "6"})
    assert a["hash"] == b["hash"]
    assert a["hash"] != c["hash"]


def test_gen_scenario_missing_required_flag_is_a_config_error(capsys, tmp_path):
    code, _, err = run_cli(capsys, "gen-scenario", "--issues", "2")
    assert code == 1
    assert "error" in err.lower()


# ---------------------------------------------------------------------------
# run-session


def test_run_session_reports_outcome(capsys, tmp_path):
    scenario, _ = gen_scenario(capsys, tmp_path)
    code, out, _ = run_cli(
        capsys,
        "run-session",
        "--scenario", scenario,
        "--agents", "herbt,frequency,random",
        "--rounds", "20",
        "--seed", "3",
    )
    assert code == 0
    report = json.loads(out)
    assert report["agents"] == ["herbt", "frequency", "random"]
    assert len(report["utilities"]) == 3
    assert len(report["stats"]) == 3
    assert report["rounds_used"] >= 1
    for s in report["stats"]:
        assert set(s) == {"offers", "accepts", "opportunities", "declines"}


def test_run_session_duplicate_agent_types_get_distinct_ids(capsys, tmp_path):
    scenario, _ = gen_scenario(capsys, tmp_path)
    code, out, _ = run_cli(
        capsys,
        "run-session",
        "--scenario", scenario,
        "--agents", "random,random,random",
        "--rounds", "5",
    )
    assert code == 0
    assert json.loads(out)["agents"] == ["random", "random_2", "random_3"]


def test_run_session_trace_roundtrips_through_analyze(capsys, tmp_path):
    scenario, _ = gen_scenario(capsys, tmp_path)
    trace_path = str(tmp_path / "run.trace")
    code, out, _ = run_cli(
        capsys,
        "run-session",
        "--scenario", scenario,
        "--agents", "herbt,time_dependent,random",
        "--rounds", "15",
        "--seed", "8",
        "--trace-out", trace_path,
    )
    assert code == 0
    live = json.loads(out)

    code, out, _ = run_cli(
        capsys, "analyze", "metrics", "--trace", trace_path, "--scenario", scenario
    )
    assert code == 0
    replayed = json.loads(out)
    assert replayed["utilities"] == live["utilities"]
    assert replayed["discounted_utilities"] == live["discounted_utilities"]
    assert replayed["agreement"] == live["agreement"]
    assert replayed["stats"] == live["stats"]


def test_analyze_metrics_rejects_mismatched_scenario(capsys, tmp_path):
    scen_a, _ = gen_scenario(capsys, tmp_path, name="a.json")
    scen_b, _ = gen_scenario(capsys, tmp_path, name="b.json", **{"--seed": "99"})
    trace_path = str(tmp_path / "a.trace")
    code, _, _ = run_cli(
        capsys,
        "run-session",
        "--scenario", scen_a,
        "--agents", "random,random,random",
        "--rounds", "5",
        "--trace-out", trace_path,
    )
    assert code == 0
    code, _, err = run_cli(
        capsys, "analyze", "metrics", "--trace", trace_path, "--scenario", scen_b
    )
    assert code == 1
    assert "different scenario" in err


def test_run_session_writes_model_dumps(capsys, tmp_path):
    scenario, _ = gen_scenario(capsys, tmp_path)
    models_path = str(tmp_path / "models.jsonl")
    code, _, _ = run_cli(
        capsys,
        "run-session",
        "--scenario", scenario,
        "--agents", "herbt,random,random",
        "--rounds", "10",
        "--models-out", models_path,
    )
    assert code == 0
    lines = [json.loads(l) for l in open(models_path) if l.strip()]
    assert lines
    for rec in lines:
        assert set(rec) >= {"agent", "opponent", "round", "weights", "bias"}
        assert rec["agent"] == 0  # only the model-guided seat dumps


def test_run_session_agent_count_must_match(capsys, tmp_path):
    scenario, _ = gen_scenario(capsys, tmp_path)
    code, _, err = run_cli(
        capsys,
        "run-session",
        "--scenario", scenario,
        "--agents", "random,random",
    )
    assert code == 1
    assert "3 profiles" in err


def test_run_session_rejects_bad_beta(capsys, tmp_path):
    scenario, _ = gen_scenario(capsys, tmp_path)
    code, _, err = run_cli(
        capsys,
        "run-session",
        "--scenario", scenario,
        "--agents", "herbt,random,random",
        "--beta", "2.0",
    )
    assert code == 1
    assert "beta" in err


def test_run_session_unknown_agent_type(capsys, tmp_path):
    scenario, _ = gen_scenario(capsys, tmp_path)
    code, _, err = run_cli(
        capsys,
        "run-session",
        "--scenario", scenario,
        "--agents", "herbt,random,mystery",
    )
    assert code == 1
    assert "unknown agent type" in err


def test_missing_scenario_file_is_a_config_error(capsys, tmp_path):
    code, _, err = run_cli(
        capsys,
        "run-session",
        "--scenario", str(tmp_path / "nope.json"),
        "--agents", "random,random",
    )
    assert code == 1
    assert "error" in err


# ---------------------------------------------------------------------------
# exit codes 2 and 3


def test_protocol_violation_maps_to_exit_2(capsys, tmp_path, monkeypatch):
    scenario, _ = gen_scenario(capsys, tmp_path)

    def boom(*args, **kwargs):
        raise ns.ProtocolViolation(1, "scripted failure")

    monkeypatch.setattr("negsim.cli.run_session", boom)
    code, _, err = run_cli(
        capsys,
        "run-session",
        "--scenario", scenario,
        "--agents", "random,random,random",
    )
    assert code == 2
    assert err.startswith("protocol violation:")
    assert "agent 1" in err


def test_oversized_bid_space_maps_to_exit_3(capsys, tmp_path):
    # 8 issues x 8 values = 16.7M bids, far past the enumeration cap; the
    # model-guided agent needs the full space and must refuse cleanly
    scenario, _ = gen_scenario(
        capsys, tmp_path, name="huge.json",
        **{"--issues": "8", "--values-per-issue": "8"},
    )
    code, _, err = run_cli(
        capsys,
        "run-session",
        "--scenario", scenario,
        "--agents", "herbt,random,random",
        "--rounds", "5",
    )
    assert code == 3
    assert err.startswith("capacity error:")


def test_random_agents_handle_oversized_spaces(capsys, tmp_path):
    # sampling strategies never enumerate, so the same huge scenario runs
    scenario, _ = gen_scenario(
        capsys, tmp_path, name="huge2.json",
        **{"--issues": "8", "--values-per-issue": "8"},
    )
    code, out, _ = run_cli(
        capsys,
        "run-session",
        "--scenario", scenario,
        "--agents", "random,random,random",
        "--rounds", "5",
    )
    assert code == 0
    assert len(json.loads(out)["utilities"]) == 3


# ---------------------------------------------------------------------------
# run-tournament and analyze


@pytest.fixture
def tournament_dir(capsys, tmp_path):
    config = {
        "roster": [{"type": "herbt"}, {"type": "random"}],
        "scenario": {"generator": {"issues": 2, "values_per_issue": 2}},
        "party_count": 2,
        "round_limit": 6,
        "repetitions": 2,
        "beta_grid": [0.0, 1.0],
        "delta_grid": [1.0],
        "master_seed": 7,
        "dump_models": True,
    }
    cfg_path = tmp_path / "tournament.json"
    cfg_path.write_text(json.dumps(config))
    out_dir = tmp_path / "results"
    code, out, _ = run_cli(
        capsys,
        "run-tournament",
        "--config", str(cfg_path),
        "--out-dir", str(out_dir),
    )
    assert code == 0
    return out_dir, json.loads(out)


def test_run_tournament_writes_artifacts(tournament_dir):
    out_dir, report = tournament_dir
    assert report["sessions"] == 12
    assert (out_dir / "sessions.jsonl").exists()
    for name in ("beta_score", "discount_sweep", "acceptance",
                 "agreement_rate", "ttest", "model_quality"):
        assert name in report["reports"]
        assert (out_dir / f"{name}.csv").exists()
    records = ns.read_records(str(out_dir / "sessions.jsonl"))
    assert len(records) == 12


def test_analyze_ttest_from_artifacts(capsys, tournament_dir):
    out_dir, _ = tournament_dir
    sessions = str(out_dir / "sessions.jsonl")
    code, out, _ = run_cli(capsys, "analyze", "ttest", "--sessions", sessions)
    assert code == 0
    rows = json.loads(out)
    assert rows and set(rows[0]) == {"agent_a", "agent_b", "t", "p", "n"}

    code, out, _ = run_cli(
        capsys, "analyze", "ttest", "--sessions", sessions,
        "--agent-a", "herbt", "--agent-b", "random",
    )
    assert code == 0
    assert len(json.loads(out)) == 1

    code, _, err = run_cli(
        capsys, "analyze", "ttest", "--sessions", sessions, "--agent-a", "herbt"
    )
    assert code == 1
    assert "together" in err

    code, _, err = run_cli(
        capsys, "analyze", "ttest", "--sessions", sessions,
        "--agent-a", "herbt", "--agent-b", "nobody",
    )
    assert code == 1
    assert "no sessions pairing" in err


def test_analyze_model_quality_from_artifacts(capsys, tournament_dir):
    out_dir, _ = tournament_dir
    code, out, _ = run_cli(
        capsys, "analyze", "model-quality",
        "--sessions", str(out_dir / "sessions.jsonl"),
    )
    assert code == 0
    rows = json.loads(out)
    assert rows
    for row in rows:
        assert set(row) == {"round", "pearson", "mae", "count"}
        assert row["mae"] is not None


# ---------------------------------------------------------------------------
# bad invocations and the installed entry point


def test_unknown_subcommand_is_a_config_error(capsys):
    code, _, err = run_cli(capsys, "frobnicate")
    assert code == 1
    assert "error" in err.lower()


def test_unknown_flag_is_a_config_error(capsys, tmp_path):
    code, _, err = run_cli(
        capsys, "gen-scenario", "--issues", "2", "--values-per-issue", "2",
        "--out", str(tmp_path / "s.json"), "--frobnicate", "1",
    )
    assert code == 1


@pytest.mark.skipif(shutil.which("negsim") is None, reason="entry point not installed")
def test_console_script_smoke(tmp_path):
    out = tmp_path / "s.json"
    proc = subprocess.run(
        ["negsim", "gen-scenario", "--issues", "2", "--values-per-issue", "2",
         "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert out.exists()
    assert json.loads(proc.stdout)["hash"]
