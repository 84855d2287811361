#!/usr/bin/env python3
"""Compare fresh-per-turn vs continuous opponent-model training.

Runs two tournaments with matched seeds (identical lineups, profiles, and
session seeds) that differ only in the training mode forced onto every
model-based agent, then reports agreement speed and social welfare side by
side together with a paired one-sided t-test on per-session rounds used
(alternative: fresh < continuous).

Defaults reproduce the frozen ablation configuration used by the acceptance
suite: a mixed four-agent roster on a generated 3-issue domain, beta = 1,
no discounting, 15 repetitions x 20 lineups = 300 sessions per arm.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import negsim as ns

MIXED_ROSTER = (
    {"type": "herbt", "id": "herbt"},
    {"type": "frequency", "id": "frequency"},
    {"type": "time_dependent", "id": "time_dependent", "e": 0.2},
    {"type": "random", "id": "random"},
)
SELF_PLAY_ROSTER = ({"type": "herbt", "id": "herbt"},)


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repetitions", type=int, default=15,
                        help="repetitions per lineup (mixed roster: 20 lineups, so 15 -> 300 sessions/arm)")
    parser.add_argument("--issues", type=int, default=3)
    parser.add_argument("--values-per-issue", type=int, default=4)
    parser.add_argument("--rounds", type=int, default=40)
    parser.add_argument("--delta", type=float, default=1.0)
    parser.add_argument("--beta", type=float, default=1.0)
    parser.add_argument("--seed", type=int, default=20240817)
    parser.add_argument("--self-play", action="store_true",
                        help="use a pure self-play roster (one lineup) instead of the mixed roster")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--out-dir", type=Path, default=Path("results/fresh_vs_continuous"))
    return parser.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    roster = SELF_PLAY_ROSTER if args.self_play else MIXED_ROSTER
    cfg = ns.TournamentConfig(
        roster=roster,
        generator=ns.GeneratorSpec(issues=args.issues, values_per_issue=args.values_per_issue),
        party_count=3,
        round_limit=args.rounds,
        repetitions=args.repetitions,
        beta_grid=(args.beta,),
        delta_grid=(args.delta,),
        master_seed=args.seed,
    )
    result = ns.ablation_random_init(cfg, workers=args.workers)

    args.out_dir.mkdir(parents=True, exist_ok=True)
    table = args.out_dir / "ablation.csv"
    ns.write_csv(
        table,
        ("mode", "sessions", "agreement_sessions", "avg_agreement_round",
         "social_welfare", "social_welfare_raw"),
        [(r.mode, r.sessions, r.agreement_sessions, r.avg_agreement_round,
          r.social_welfare, r.social_welfare_raw) for r in result.rows],
    )

    fresh = [float(r.rounds_used) for r in result.records["fresh"]]
    cont = [float(r.rounds_used) for r in result.records["continuous"]]
    report: dict[str, object] = {
        "sessions_per_arm": len(fresh),
        "rows": {r.mode: {"avg_agreement_round": r.avg_agreement_round,
                          "social_welfare": r.social_welfare,
                          "agreement_sessions": r.agreement_sessions}
                 for r in result.rows},
        "table": str(table),
    }
    try:
        tt = ns.dependent_t_test(fresh, cont, alternative="less")
        report["rounds_used_ttest"] = {"t": tt.t, "p": tt.p, "n": tt.n, "alternative": "less"}
    except ns.DegenerateSamplesError:
        report["rounds_used_ttest"] = None
    print(json.dumps(report, indent=2))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
