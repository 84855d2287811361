#!/usr/bin/env python3
"""Per-round opponent-model quality on a mixed roster.

Runs sessions with model dumping enabled, then compares every dumped model's
predictions over the whole bid space against the modeled opponent's true
utilities. Writes model_quality.csv (round, pearson, mae) and sessions.jsonl
into --out-dir.
"""
from __future__ import annotations

import argparse
import os

from negsim import (
    GeneratorSpec,
    TournamentConfig,
    model_quality_curves,
    run_tournament,
    write_csv,
    write_records,
)

ROSTER = (
    {"type": "herbt", "id": "herbt"},
    {"type": "frequency", "id": "frequency"},
    {"type": "time_dependent", "id": "time_dependent", "e": 0.2},
    {"type": "random", "id": "random"},
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", required=True)
    ap.add_argument("--issues", type=int, default=3)
    ap.add_argument("--values-per-issue", type=int, default=4)
    ap.add_argument("--rounds", type=int, default=40)
    ap.add_argument("--repetitions", type=int, default=5)
    ap.add_argument("--delta", type=float, default=1.0)
    ap.add_argument("--seed", type=int, default=20240817)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    cfg = TournamentConfig(
        roster=ROSTER,
        generator=GeneratorSpec(
            issues=args.issues, values_per_issue=args.values_per_issue
        ),
        party_count=3,
        round_limit=args.rounds,
        repetitions=args.repetitions,
        beta_grid=(1.0,),
        delta_grid=(args.delta,),
        master_seed=args.seed,
        dump_models=True,
    )
    records = run_tournament(cfg, workers=args.workers)
    rows = model_quality_curves(records)

    os.makedirs(args.out_dir, exist_ok=True)
    write_records(os.path.join(args.out_dir, "sessions.jsonl"), records)
    write_csv(
        os.path.join(args.out_dir, "model_quality.csv"),
        ["round", "pearson", "mae"],
        [(r.round, r.pearson, r.mae) for r in rows],
    )
    print(f"{len(records)} sessions, {len(rows)} round rows")
    if rows:
        last = rows[-1]
        print(f"final round {last.round}: pearson={last.pearson} mae={last.mae}")


if __name__ == "__main__":
    main()
