#!/usr/bin/env python3
"""Discount sweep of the model-guided agent against the baseline roster.

Runs one tournament per generated domain over a delta grid with beta = 1,
then writes the full CSV report suite (social welfare, decline rates,
agreement rounds, acceptance quality, t-tests) into --out-dir.
"""
from __future__ import annotations

import argparse
import os

from negsim import (
    GeneratorSpec,
    TournamentConfig,
    run_tournament,
    write_metric_csvs,
    write_records,
)

ROSTER = (
    {"type": "herbt", "id": "herbt"},
    {"type": "always_accept", "id": "always_accept"},
    {"type": "frequency", "id": "frequency"},
    {"type": "time_dependent", "id": "time_dependent", "e": 0.2},
    {"type": "random", "id": "random"},
)

DOMAINS = (
    (2, 5),   # 25 outcomes
    (3, 4),   # 64 outcomes
    (4, 4),   # 256 outcomes
    (4, 8),   # 4096 outcomes
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", required=True)
    ap.add_argument("--rounds", type=int, default=40)
    ap.add_argument("--repetitions", type=int, default=6)
    ap.add_argument("--beta", type=float, default=1.0)
    ap.add_argument(
        "--deltas", type=float, nargs="+", default=[0.2, 0.4, 0.6, 0.8, 1.0]
    )
    ap.add_argument("--seed", type=int, default=20240817)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    os.makedirs(args.out_dir, exist_ok=True)
    records = []
    for issues, values in DOMAINS:
        cfg = TournamentConfig(
            roster=ROSTER,
            generator=GeneratorSpec(issues=issues, values_per_issue=values),
            party_count=3,
            round_limit=args.rounds,
            repetitions=args.repetitions,
            beta_grid=(args.beta,),
            delta_grid=tuple(args.deltas),
            master_seed=args.seed,
        )
        records.extend(run_tournament(cfg, workers=args.workers))
        print(f"domain {issues}x{values}: {len(records)} sessions total")

    write_records(os.path.join(args.out_dir, "sessions.jsonl"), records)
    paths = write_metric_csvs(records, args.out_dir)
    print("reports:", ", ".join(sorted(paths)))


if __name__ == "__main__":
    main()
