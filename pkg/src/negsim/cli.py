"""Command-line front end.

Subcommands:
  gen-scenario    write a synthetic scenario JSON file
  run-session     run one negotiation session and print a JSON report
  run-tournament  run a tournament config and write sessions.jsonl + CSVs
  analyze         recompute metrics from persisted artifacts

Exit codes: 0 success, 1 configuration error, 2 protocol violation,
3 bid-space capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .domain import (
    CapacityError,
    generate_domain,
    generate_profile,
    load_scenario,
    save_scenario,
    scenario_hash,
)
from .protocol import ProtocolViolation, replay, run_session, write_trace, read_trace
from .roster import ConfigError, agent_from_config, agent_id, bind_beta
from .seeds import derive_seed
from .tournament import (
    analyze_trace,
    beta_score_ttests,
    config_from_json,
    model_quality_curves,
    read_records,
    run_tournament,
    write_metric_csvs,
    write_records,
)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as ConfigError so the CLI
    can map them to exit code 1 (2 is reserved for protocol violations)."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="negsim",
        description="Deterministic multilateral negotiation simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-scenario", help="generate a synthetic scenario file")
    g.add_argument("--issues", type=int, required=True)
    g.add_argument("--values-per-issue", type=int, required=True)
    g.add_argument("--parties", type=int, default=3)
    g.add_argument("--reservation", type=float, default=0.0)
    g.add_argument("--discount", type=float, default=1.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--name", type=str, default=None)
    g.add_argument("--out", type=str, required=True)

    r = sub.add_parser("run-session", help="run one session")
    r.add_argument("--scenario", type=str, required=True)
    src = r.add_mutually_exclusive_group(required=True)
    src.add_argument(
        "--agents",
        type=str,
        help="comma-separated agent types, e.g. herbt,frequency,random",
    )
    src.add_argument(
        "--agents-file", type=str, help="JSON file holding a list of agent blocks"
    )
    r.add_argument("--rounds", type=int, default=180)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--beta", type=float, default=None)
    r.add_argument("--trace-out", type=str, default=None)
    r.add_argument("--models-out", type=str, default=None)

    t = sub.add_parser("run-tournament", help="run a tournament config")
    t.add_argument("--config", type=str, required=True)
    t.add_argument("--out-dir", type=str, required=True)
    t.add_argument("--workers", type=int, default=1)

    a = sub.add_parser("analyze", help="recompute metrics from artifacts")
    asub = a.add_subparsers(dest="analysis", required=True)

    am = asub.add_parser("metrics", help="replay a trace and print seat metrics")
    am.add_argument("--trace", type=str, required=True)
    am.add_argument("--scenario", type=str, required=True)

    at = asub.add_parser("ttest", help="paired t-tests over a sessions file")
    at.add_argument("--sessions", type=str, required=True)
    at.add_argument("--agent-a", type=str, default=None)
    at.add_argument("--agent-b", type=str, default=None)

    aq = asub.add_parser("model-quality", help="model quality curves")
    aq.add_argument("--sessions", type=str, required=True)

    return parser


def _agent_blocks(args: argparse.Namespace) -> list[dict]:
    if args.agents_file is not None:
        with open(args.agents_file, "r", encoding="utf-8") as fh:
            blocks = json.load(fh)
        if not isinstance(blocks, list):
            raise ConfigError("agents file must hold a JSON list of blocks")
        return blocks
    blocks = []
    seen: dict[str, int] = {}
    for token in args.agents.split(","):
        kind = token.strip()
        if not kind:
            raise ConfigError("empty agent type in --agents")
        seen[kind] = seen.get(kind, 0) + 1
        block = {"type": kind}
        if seen[kind] > 1:
            block["id"] = f"{kind}_{seen[kind]}"
        blocks.append(block)
    return blocks


def _cmd_gen_scenario(args: argparse.Namespace) -> int:
    domain = generate_domain(args.issues, args.values_per_issue, args.name)
    profiles = tuple(
        generate_profile(
            domain,
            args.reservation,
            args.discount,
            derive_seed(args.seed, seat),
        )
        for seat in range(args.parties)
    )
    save_scenario(args.out, domain, profiles)
    print(json.dumps({"out": args.out, "hash": scenario_hash(domain, profiles)}))
    return 0


def _cmd_run_session(args: argparse.Namespace) -> int:
    domain, profiles = load_scenario(args.scenario)
    blocks = _agent_blocks(args)
    if len(blocks) != len(profiles):
        raise ConfigError(
            f"{len(blocks)} agents for {len(profiles)} profiles"
        )
    if args.beta is not None:
        blocks = [bind_beta(b, args.beta) for b in blocks]
    dump = args.models_out is not None
    agents = [agent_from_config(b, dump_models=dump) for b in blocks]
    outcome = run_session(agents, profiles, args.rounds, args.seed)
    stats = analyze_trace(outcome.trace, profiles)
    if args.trace_out:
        write_trace(
            args.trace_out,
            outcome.trace,
            scenario_hash=scenario_hash(domain, profiles),
            round_limit=args.rounds,
            seed=args.seed,
            n_agents=len(profiles),
        )
    if args.models_out:
        dumps = []
        for seat, agent in enumerate(agents):
            for d in getattr(agent, "model_dumps", []):
                dumps.append({"agent": seat, **d})
        with open(args.models_out, "w", encoding="utf-8") as fh:
            for d in dumps:
                fh.write(json.dumps(d, sort_keys=True) + "\n")
    report = {
        "agents": [agent_id(b) for b in blocks],
        "agreement": (
            None
            if outcome.agreement is None
            else {
                "bid": list(outcome.agreement.bid.values),
                "proposer": outcome.agreement.proposer,
                "round": outcome.agreement.round,
            }
        ),
        "utilities": list(outcome.utilities),
        "discounted_utilities": list(outcome.discounted_utilities),
        "rounds_used": outcome.rounds_used,
        "stats": [
            {
                "offers": s.offers,
                "accepts": s.accepts,
                "opportunities": s.opportunities,
                "declines": s.declines,
            }
            for s in stats
        ],
    }
    print(json.dumps(report, sort_keys=True))
    return 0


def _cmd_run_tournament(args: argparse.Namespace) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        cfg = config_from_json(json.load(fh))
    records = run_tournament(cfg, workers=args.workers)
    os.makedirs(args.out_dir, exist_ok=True)
    write_records(os.path.join(args.out_dir, "sessions.jsonl"), records)
    paths = write_metric_csvs(records, args.out_dir)
    print(
        json.dumps(
            {
                "sessions": len(records),
                "out_dir": args.out_dir,
                "reports": sorted(paths),
            }
        )
    )
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    if args.analysis == "metrics":
        domain, profiles = load_scenario(args.scenario)
        header, trace = read_trace(args.trace)
        expect = scenario_hash(domain, profiles)
        if header.get("scenario_hash") not in (None, expect):
            raise ConfigError(
                "trace was recorded against a different scenario "
                f"(hash {header.get('scenario_hash')}, expected {expect})"
            )
        outcome = replay(trace, profiles, int(header["round_limit"]))
        stats = analyze_trace(outcome.trace, profiles)
        print(
            json.dumps(
                {
                    "agreement": (
                        None
                        if outcome.agreement is None
                        else {
                            "bid": list(outcome.agreement.bid.values),
                            "proposer": outcome.agreement.proposer,
                            "round": outcome.agreement.round,
                        }
                    ),
                    "utilities": list(outcome.utilities),
                    "discounted_utilities": list(outcome.discounted_utilities),
                    "rounds_used": outcome.rounds_used,
                    "stats": [
                        {
                            "offers": s.offers,
                            "accepts": s.accepts,
                            "opportunities": s.opportunities,
                            "declines": s.declines,
                        }
                        for s in stats
                    ],
                },
                sort_keys=True,
            )
        )
        return 0
    if args.analysis == "ttest":
        records = read_records(args.sessions)
        rows = beta_score_ttests(records)
        if args.agent_a is not None or args.agent_b is not None:
            if args.agent_a is None or args.agent_b is None:
                raise ConfigError("--agent-a and --agent-b must be given together")
            pair = tuple(sorted((args.agent_a, args.agent_b)))
            rows = tuple(r for r in rows if (r.agent_a, r.agent_b) == pair)
            if not rows:
                raise ConfigError(f"no sessions pairing {pair[0]} and {pair[1]}")
        print(
            json.dumps(
                [
                    {"agent_a": r.agent_a, "agent_b": r.agent_b, "t": r.t, "p": r.p, "n": r.n}
                    for r in rows
                ],
                sort_keys=True,
            )
        )
        return 0
    if args.analysis == "model-quality":
        records = read_records(args.sessions)
        rows = model_quality_curves(records)
        print(
            json.dumps(
                [
                    {"round": r.round, "pearson": r.pearson, "mae": r.mae, "count": r.count}
                    for r in rows
                ],
                sort_keys=True,
            )
        )
        return 0
    raise ConfigError(f"unknown analysis: {args.analysis}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "gen-scenario":
            return _cmd_gen_scenario(args)
        if args.command == "run-session":
            return _cmd_run_session(args)
        if args.command == "run-tournament":
            return _cmd_run_tournament(args)
        if args.command == "analyze":
            return _cmd_analyze(args)
        raise ConfigError(f"unknown command: {args.command}")
    except ProtocolViolation as exc:
        print(f"protocol violation: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except (ConfigError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
