"""Multiset tournaments over an agent roster, plus the metric suite.

A tournament enumerates every n-multiset of the roster (self-play line-ups
included), binds each (beta, delta) grid point to both the strategies and
the scoring, and runs `repetitions` seeded sessions per cell. Per-session
records keep the full trace and profiles, so every reported number can be
recomputed offline from the persisted artifacts.
"""
from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from .domain import (
    UtilityProfile,
    encoded_matrix,
    generate_domain,
    generate_profile,
    load_scenario,
    scenario_from_json,
    scenario_to_json,
    social_welfare,
    utilities_over_space,
    utility,
)
from .opponent_model import model_from_record, predict_all
from .protocol import (
    Accept,
    Agreement,
    Offer,
    TraceStep,
    run_session,
    trace_step_from_json,
    trace_step_to_json,
)
from .roster import ConfigError, agent_from_config, agent_id, bind_beta
from .seeds import derive_seed
from .stats import (
    DegenerateSamplesError,
    dependent_t_test,
    mean_absolute_error,
    pearson,
)

DEFAULT_BETA_GRID = tuple(round(0.1 * i, 1) for i in range(11))

_PROFILE_TAG = 1001
_SESSION_TAG = 2002


@dataclass(frozen=True, slots=True)
class GeneratorSpec:
    issues: int
    values_per_issue: int
    reservation: float = 0.0
    discount: float = 1.0
    name: Optional[str] = None


@dataclass(frozen=True)
class TournamentConfig:
    roster: tuple[dict, ...]
    generator: Optional[GeneratorSpec] = None
    scenario_file: Optional[str] = None
    party_count: int = 3
    round_limit: int = 180
    repetitions: int = 1
    beta_grid: tuple[float, ...] = DEFAULT_BETA_GRID
    delta_grid: Optional[tuple[float, ...]] = None
    master_seed: int = 0
    dump_models: bool = False

    def __post_init__(self) -> None:
        if not self.roster:
            raise ConfigError("empty roster")
        ids = [agent_id(b) for b in self.roster]
        if len(set(ids)) != len(ids):
            raise ConfigError(f"duplicate roster ids: {ids}")
        if (self.generator is None) == (self.scenario_file is None):
            raise ConfigError("exactly one of generator/scenario_file is required")
        if self.party_count < 2:
            raise ConfigError("party_count must be >= 2")
        if self.round_limit < 1:
            raise ConfigError("round_limit must be >= 1")
        if self.repetitions < 1:
            raise ConfigError("repetitions must be >= 1")
        if not self.beta_grid or any(not 0.0 <= b <= 1.0 for b in self.beta_grid):
            raise ConfigError("beta grid values must lie in [0, 1]")
        if self.delta_grid is not None and any(
            not 0.0 < d <= 1.0 for d in self.delta_grid
        ):
            raise ConfigError("delta grid values must lie in (0, 1]")
        if self.master_seed < 0:
            raise ConfigError("master_seed must be non-negative")


def config_from_json(obj: dict) -> TournamentConfig:
    try:
        gen = None
        if "generator" in obj.get("scenario", {}):
            g = obj["scenario"]["generator"]
            gen = GeneratorSpec(
                issues=int(g["issues"]),
                values_per_issue=int(g["values_per_issue"]),
                reservation=float(g.get("reservation", 0.0)),
                discount=float(g.get("discount", 1.0)),
                name=g.get("name"),
            )
        return TournamentConfig(
            roster=tuple(obj["roster"]),
            generator=gen,
            scenario_file=obj.get("scenario", {}).get("file"),
            party_count=int(obj.get("party_count", 3)),
            round_limit=int(obj.get("round_limit", 180)),
            repetitions=int(obj.get("repetitions", 1)),
            beta_grid=tuple(obj.get("beta_grid", DEFAULT_BETA_GRID)),
            delta_grid=(
                tuple(obj["delta_grid"]) if obj.get("delta_grid") else None
            ),
            master_seed=int(obj.get("master_seed", 0)),
            dump_models=bool(obj.get("dump_models", False)),
        )
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"malformed tournament config: {exc}") from exc


@dataclass(frozen=True, slots=True)
class SeatStats:
    offers: int
    accepts: int
    opportunities: int
    declines: int
    # (social welfare, own utility) of each bid this seat accepted, raw
    accepted: tuple[tuple[float, float], ...]


def analyze_trace(
    trace: Sequence[TraceStep], profiles: Sequence[UtilityProfile]
) -> tuple[SeatStats, ...]:
    """Per-seat action counts and accepted-bid utility logs, derived purely
    from the trace so offline recomputation matches the live run exactly."""
    n = len(profiles)
    offers = [0] * n
    accepts = [0] * n
    opportunities = [0] * n
    declines = [0] * n
    accepted: list[list[tuple[float, float]]] = [[] for _ in range(n)]
    standing = None
    for step in trace:
        seat = step.agent
        if isinstance(step.action, Offer):
            offers[seat] += 1
            if standing is not None:
                opportunities[seat] += 1
                declines[seat] += 1
            standing = step.action.bid
        elif isinstance(step.action, Accept):
            opportunities[seat] += 1
            accepts[seat] += 1
            assert standing is not None
            sw = social_welfare([utility(p, standing) for p in profiles])
            accepted[seat].append((sw, utility(profiles[seat], standing)))
    return tuple(
        SeatStats(
            offers=offers[i],
            accepts=accepts[i],
            opportunities=opportunities[i],
            declines=declines[i],
            accepted=tuple(accepted[i]),
        )
        for i in range(n)
    )


@dataclass(frozen=True)
class SessionRecord:
    session_index: int
    domain_name: str
    beta: float
    delta: float
    lineup: tuple[str, ...]
    seed: int
    round_limit: int
    profiles: tuple[UtilityProfile, ...]
    profile_seeds: tuple[int, ...]
    agreement: Optional[Agreement]
    utilities: tuple[float, ...]
    discounted_utilities: tuple[float, ...]
    rounds_used: int
    trace: tuple[TraceStep, ...]
    stats: tuple[SeatStats, ...]
    model_dumps: tuple[dict, ...]


def session_beta_score(record: SessionRecord, seat: int, discounted: bool = True) -> float:
    """beta * social welfare + (1 - beta) * own utility for one seat."""
    us = record.discounted_utilities if discounted else record.utilities
    return record.beta * social_welfare(us) + (1.0 - record.beta) * us[seat]


@dataclass(frozen=True)
class SessionTask:
    index: int
    profiles: tuple[UtilityProfile, ...]
    blocks: tuple[dict, ...]
    lineup: tuple[str, ...]
    round_limit: int
    seed: int
    beta: float
    delta: float
    dump_models: bool
    profile_seeds: tuple[int, ...]


def _run_task(task: SessionTask) -> SessionRecord:
    agents = [agent_from_config(b, dump_models=task.dump_models) for b in task.blocks]
    outcome = run_session(agents, task.profiles, task.round_limit, task.seed)
    stats = analyze_trace(outcome.trace, task.profiles)
    dumps: list[dict] = []
    if task.dump_models:
        for seat, agent in enumerate(agents):
            for d in getattr(agent, "model_dumps", []):
                dumps.append({"agent": seat, **d})
    return SessionRecord(
        session_index=task.index,
        domain_name=task.profiles[0].domain.name,
        beta=task.beta,
        delta=task.delta,
        lineup=task.lineup,
        seed=task.seed,
        round_limit=task.round_limit,
        profiles=task.profiles,
        profile_seeds=task.profile_seeds,
        agreement=outcome.agreement,
        utilities=outcome.utilities,
        discounted_utilities=outcome.discounted_utilities,
        rounds_used=outcome.rounds_used,
        trace=outcome.trace,
        stats=stats,
        model_dumps=tuple(dumps),
    )


def plan_tournament(cfg: TournamentConfig) -> list[SessionTask]:
    """Expand the config into the full deterministic task list."""
    if cfg.generator is not None:
        domain = generate_domain(
            cfg.generator.issues, cfg.generator.values_per_issue, cfg.generator.name
        )
        base_profiles: Optional[tuple[UtilityProfile, ...]] = None
    else:
        domain, base_profiles = load_scenario(cfg.scenario_file)
        if len(base_profiles) != cfg.party_count:
            raise ConfigError(
                f"scenario has {len(base_profiles)} profiles, "
                f"party_count is {cfg.party_count}"
            )

    lineups = list(
        itertools.combinations_with_replacement(range(len(cfg.roster)), cfg.party_count)
    )
    deltas: tuple[Optional[float], ...] = cfg.delta_grid or (None,)
    tasks: list[SessionTask] = []
    index = 0
    for b_i, beta in enumerate(cfg.beta_grid):
        for d_i, delta in enumerate(deltas):
            for l_i, lineup in enumerate(lineups):
                blocks = tuple(bind_beta(cfg.roster[j], beta) for j in lineup)
                ids = tuple(agent_id(cfg.roster[j]) for j in lineup)
                for rep in range(cfg.repetitions):
                    if base_profiles is not None:
                        profiles = tuple(
                            p if delta is None else replace(p, discount_factor=delta)
                            for p in base_profiles
                        )
                        profile_seeds: tuple[int, ...] = ()
                    else:
                        gen = cfg.generator
                        assert gen is not None
                        eff_delta = gen.discount if delta is None else delta
                        profile_seeds = tuple(
                            derive_seed(
                                cfg.master_seed, _PROFILE_TAG, d_i, l_i, rep, seat
                            )
                            for seat in range(cfg.party_count)
                        )
                        profiles = tuple(
                            generate_profile(domain, gen.reservation, eff_delta, ps)
                            for ps in profile_seeds
                        )
                    tasks.append(
                        SessionTask(
                            index=index,
                            profiles=profiles,
                            blocks=blocks,
                            lineup=ids,
                            round_limit=cfg.round_limit,
                            seed=derive_seed(
                                cfg.master_seed, _SESSION_TAG, b_i, d_i, l_i, rep
                            ),
                            beta=beta,
                            delta=(
                                profiles[0].discount_factor if delta is None else delta
                            ),
                            dump_models=cfg.dump_models,
                            profile_seeds=profile_seeds,
                        )
                    )
                    index += 1
    return tasks


def run_tournament(
    cfg: TournamentConfig, workers: int = 1
) -> tuple[SessionRecord, ...]:
    """Run every planned session. workers > 1 farms sessions out to
    processes; results are identical to the sequential run, byte for byte."""
    tasks = plan_tournament(cfg)
    if workers <= 1 or len(tasks) < 2:
        return tuple(_run_task(t) for t in tasks)
    chunk = max(1, len(tasks) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return tuple(pool.map(_run_task, tasks, chunksize=chunk))


# ---------------------------------------------------------------------------
# metric aggregation


@dataclass(frozen=True)
class MetricsRow:
    agent: str
    domain: str
    beta: float
    delta: Optional[float]
    sessions: int
    beta_score: float
    beta_score_raw: float
    social_welfare: float
    social_welfare_raw: float
    individual_utility: float
    individual_utility_raw: float
    declines: int
    opportunities: int
    decline_rate: Optional[float]
    avg_agreement_round: Optional[float]
    agreement_sessions: int
    no_agreement_sessions: int
    acceptance_social_welfare: Optional[float]
    acceptance_individual_utility: Optional[float]
    negotiation_agreement_rate: float
    chosen_offer_beta_score: Optional[float]


class _Accum:
    __slots__ = (
        "beta_scores",
        "beta_scores_raw",
        "sw",
        "sw_raw",
        "own",
        "own_raw",
        "declines",
        "opportunities",
        "agreement_rounds",
        "sessions",
        "no_agreement",
        "accepted_sw",
        "accepted_own",
        "proposed",
        "proposed_scores",
    )

    def __init__(self) -> None:
        self.beta_scores: list[float] = []
        self.beta_scores_raw: list[float] = []
        self.sw: list[float] = []
        self.sw_raw: list[float] = []
        self.own: list[float] = []
        self.own_raw: list[float] = []
        self.declines = 0
        self.opportunities = 0
        self.agreement_rounds: list[int] = []
        self.sessions = 0
        self.no_agreement = 0
        self.accepted_sw: list[float] = []
        self.accepted_own: list[float] = []
        self.proposed = 0
        self.proposed_scores: list[float] = []


def _mean(xs: Sequence[float]) -> Optional[float]:
    return float(np.mean(xs)) if len(xs) else None


def summarize(
    records: Sequence[SessionRecord], group_delta: bool = True
) -> tuple[MetricsRow, ...]:
    """Per-agent aggregates keyed by (agent, domain, beta[, delta]).

    Session-level quantities (agreement round, proposal rate) count each
    session once per participating agent; utility-valued quantities count
    one entry per seat instance, so self-play line-ups weigh accordingly.
    """
    groups: dict[tuple, _Accum] = {}

    def acc_for(record: SessionRecord, agent: str) -> _Accum:
        key = (
            agent,
            record.domain_name,
            record.beta,
            record.delta if group_delta else None,
        )
        return groups.setdefault(key, _Accum())

    for rec in records:
        sw_disc = social_welfare(rec.discounted_utilities)
        sw_raw = social_welfare(rec.utilities)
        for seat, agent in enumerate(rec.lineup):
            a = acc_for(rec, agent)
            a.beta_scores.append(session_beta_score(rec, seat, discounted=True))
            a.beta_scores_raw.append(session_beta_score(rec, seat, discounted=False))
            a.sw.append(sw_disc)
            a.sw_raw.append(sw_raw)
            a.own.append(rec.discounted_utilities[seat])
            a.own_raw.append(rec.utilities[seat])
            a.declines += rec.stats[seat].declines
            a.opportunities += rec.stats[seat].opportunities
            for sw_acc, own_acc in rec.stats[seat].accepted:
                a.accepted_sw.append(sw_acc)
                a.accepted_own.append(own_acc)
        for agent in set(rec.lineup):
            a = acc_for(rec, agent)
            a.sessions += 1
            if rec.agreement is None:
                a.no_agreement += 1
            else:
                a.agreement_rounds.append(rec.agreement.round)
                if rec.lineup[rec.agreement.proposer] == agent:
                    a.proposed += 1
                    a.proposed_scores.append(
                        session_beta_score(rec, rec.agreement.proposer)
                    )

    rows = []
    for key in sorted(groups):
        agent, domain_name, beta, delta = key
        a = groups[key]
        rows.append(
            MetricsRow(
                agent=agent,
                domain=domain_name,
                beta=beta,
                delta=delta,
                sessions=a.sessions,
                beta_score=float(np.mean(a.beta_scores)),
                beta_score_raw=float(np.mean(a.beta_scores_raw)),
                social_welfare=float(np.mean(a.sw)),
                social_welfare_raw=float(np.mean(a.sw_raw)),
                individual_utility=float(np.mean(a.own)),
                individual_utility_raw=float(np.mean(a.own_raw)),
                declines=a.declines,
                opportunities=a.opportunities,
                decline_rate=(
                    a.declines / a.opportunities if a.opportunities else None
                ),
                avg_agreement_round=_mean(a.agreement_rounds),
                agreement_sessions=len(a.agreement_rounds),
                no_agreement_sessions=a.no_agreement,
                acceptance_social_welfare=_mean(a.accepted_sw),
                acceptance_individual_utility=_mean(a.accepted_own),
                negotiation_agreement_rate=(
                    a.proposed / a.sessions if a.sessions else 0.0
                ),
                chosen_offer_beta_score=_mean(a.proposed_scores),
            )
        )
    return tuple(rows)


@dataclass(frozen=True, slots=True)
class TTestRow:
    agent_a: str
    agent_b: str
    t: Optional[float]
    p: Optional[float]
    n: int


def beta_score_ttests(records: Sequence[SessionRecord]) -> tuple[TTestRow, ...]:
    """Paired t-tests on per-session beta scores for every agent pair,
    matched over the sessions both agents played in."""
    per_session: dict[int, dict[str, list[float]]] = {}
    agents: set[str] = set()
    for rec in records:
        by_agent: dict[str, list[float]] = {}
        for seat, agent in enumerate(rec.lineup):
            by_agent.setdefault(agent, []).append(session_beta_score(rec, seat))
            agents.add(agent)
        per_session[rec.session_index] = by_agent

    rows = []
    for a, b in itertools.combinations(sorted(agents), 2):
        xs, ys = [], []
        for idx in sorted(per_session):
            d = per_session[idx]
            if a in d and b in d:
                xs.append(float(np.mean(d[a])))
                ys.append(float(np.mean(d[b])))
        if len(xs) < 2:
            rows.append(TTestRow(agent_a=a, agent_b=b, t=None, p=None, n=len(xs)))
            continue
        try:
            res = dependent_t_test(xs, ys)
            rows.append(TTestRow(agent_a=a, agent_b=b, t=res.t, p=res.p, n=res.n))
        except DegenerateSamplesError:
            rows.append(TTestRow(agent_a=a, agent_b=b, t=None, p=None, n=len(xs)))
    return tuple(rows)


@dataclass(frozen=True, slots=True)
class ModelQualityRow:
    round: int
    pearson: Optional[float]
    mae: Optional[float]
    count: int


def model_quality_curves(
    records: Sequence[SessionRecord],
) -> tuple[ModelQualityRow, ...]:
    """Per-round model quality over all (session, modeler, opponent) triples.

    For every dumped model, its predictions across the whole bid space are
    compared against the modeled opponent's true utilities: Pearson
    correlation (absent for constant predictions) and mean absolute error.
    """
    pearsons: dict[int, list[float]] = {}
    maes: dict[int, list[float]] = {}
    counts: dict[int, int] = {}
    for rec in records:
        if not rec.model_dumps:
            continue
        domain = rec.profiles[0].domain
        X = encoded_matrix(domain)
        true_u = {
            seat: utilities_over_space(p) for seat, p in enumerate(rec.profiles)
        }
        for dump in rec.model_dumps:
            model = model_from_record(dump)
            preds = predict_all(model, X)
            r = int(dump["round"])
            opp = int(dump["opponent"])
            counts[r] = counts.get(r, 0) + 1
            rho = pearson(preds, true_u[opp])
            if rho is not None:
                pearsons.setdefault(r, []).append(rho)
            maes.setdefault(r, []).append(mean_absolute_error(preds, true_u[opp]))
    return tuple(
        ModelQualityRow(
            round=r,
            pearson=_mean(pearsons.get(r, [])),
            mae=_mean(maes.get(r, [])),
            count=counts[r],
        )
        for r in sorted(counts)
    )


@dataclass(frozen=True, slots=True)
class AblationRow:
    mode: str
    sessions: int
    agreement_sessions: int
    avg_agreement_round: Optional[float]
    social_welfare: float
    social_welfare_raw: float


@dataclass(frozen=True)
class AblationResult:
    rows: tuple[AblationRow, ...]
    records: dict


def ablation_random_init(
    cfg: TournamentConfig, workers: int = 1
) -> AblationResult:
    """Matched-seed tournaments differing only in the model training mode.

    Every herbt block is forced to fresh in one arm and continuous in the
    other; seeds, profiles, and line-ups are otherwise identical.
    """
    if not any(b.get("type") == "herbt" for b in cfg.roster):
        raise ConfigError("ablation needs at least one herbt block in the roster")
    rows = []
    by_mode: dict = {}
    for mode in ("fresh", "continuous"):
        roster = tuple(
            {**b, "training_mode": mode} if b.get("type") == "herbt" else b
            for b in cfg.roster
        )
        records = run_tournament(replace(cfg, roster=roster), workers=workers)
        by_mode[mode] = records
        rounds = [r.agreement.round for r in records if r.agreement is not None]
        rows.append(
            AblationRow(
                mode=mode,
                sessions=len(records),
                agreement_sessions=len(rounds),
                avg_agreement_round=_mean(rounds),
                social_welfare=float(
                    np.mean([social_welfare(r.discounted_utilities) for r in records])
                ),
                social_welfare_raw=float(
                    np.mean([social_welfare(r.utilities) for r in records])
                ),
            )
        )
    return AblationResult(rows=tuple(rows), records=by_mode)


# ---------------------------------------------------------------------------
# persistence


def record_to_json(rec: SessionRecord) -> dict:
    return {
        "session": rec.session_index,
        "domain": rec.domain_name,
        "beta": rec.beta,
        "delta": rec.delta,
        "lineup": list(rec.lineup),
        "seed": rec.seed,
        "round_limit": rec.round_limit,
        "scenario": scenario_to_json(rec.profiles[0].domain, rec.profiles),
        "profile_seeds": list(rec.profile_seeds),
        "agreement": (
            None
            if rec.agreement is None
            else {
                "bid": list(rec.agreement.bid.values),
                "proposer": rec.agreement.proposer,
                "round": rec.agreement.round,
            }
        ),
        "utilities": list(rec.utilities),
        "discounted_utilities": list(rec.discounted_utilities),
        "rounds_used": rec.rounds_used,
        "trace": [trace_step_to_json(s) for s in rec.trace],
        "stats": [
            {
                "offers": s.offers,
                "accepts": s.accepts,
                "opportunities": s.opportunities,
                "declines": s.declines,
                "accepted": [list(pair) for pair in s.accepted],
            }
            for s in rec.stats
        ],
        "models": list(rec.model_dumps),
    }


def record_from_json(obj: dict) -> SessionRecord:
    from .domain import Bid

    domain, profiles = scenario_from_json(obj["scenario"])
    agreement = None
    if obj["agreement"] is not None:
        a = obj["agreement"]
        agreement = Agreement(
            bid=Bid(values=tuple(a["bid"])),
            proposer=int(a["proposer"]),
            round=int(a["round"]),
        )
    return SessionRecord(
        session_index=int(obj["session"]),
        domain_name=obj["domain"],
        beta=float(obj["beta"]),
        delta=float(obj["delta"]),
        lineup=tuple(obj["lineup"]),
        seed=int(obj["seed"]),
        round_limit=int(obj["round_limit"]),
        profiles=profiles,
        profile_seeds=tuple(int(s) for s in obj["profile_seeds"]),
        agreement=agreement,
        utilities=tuple(float(u) for u in obj["utilities"]),
        discounted_utilities=tuple(float(u) for u in obj["discounted_utilities"]),
        rounds_used=int(obj["rounds_used"]),
        trace=tuple(trace_step_from_json(s) for s in obj["trace"]),
        stats=tuple(
            SeatStats(
                offers=int(s["offers"]),
                accepts=int(s["accepts"]),
                opportunities=int(s["opportunities"]),
                declines=int(s["declines"]),
                accepted=tuple(
                    (float(a_), float(b_)) for a_, b_ in s["accepted"]
                ),
            )
            for s in obj["stats"]
        ),
        model_dumps=tuple(obj.get("models", [])),
    )


def write_records(path: str, records: Sequence[SessionRecord]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(record_to_json(rec), sort_keys=True) + "\n")


def read_records(path: str) -> tuple[SessionRecord, ...]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                out.append(record_from_json(json.loads(line)))
    return tuple(out)


# ---------------------------------------------------------------------------
# CSV reports (6 significant digits, absent values as empty cells)

DECLINE_NOTE = (
    "# decline_rate = declines / decision opportunities; opening offers are "
    "neither declines nor opportunities"
)


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v)
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def write_csv(
    path: str,
    header: Sequence[str],
    rows: Sequence[Sequence],
    comment: Optional[str] = None,
) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if comment:
            fh.write(comment + "\n")
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def write_metric_csvs(
    records: Sequence[SessionRecord], out_dir: str
) -> dict[str, str]:
    """Write the full report suite into out_dir; returns {name: path}."""
    os.makedirs(out_dir, exist_ok=True)
    paths: dict[str, str] = {}

    rows_beta = summarize(records, group_delta=False)
    p = os.path.join(out_dir, "beta_score.csv")
    write_csv(
        p,
        ["agent", "domain", "beta", "score"],
        [(r.agent, r.domain, r.beta, r.beta_score) for r in rows_beta],
    )
    paths["beta_score"] = p

    rows = summarize(records, group_delta=True)
    p = os.path.join(out_dir, "discount_sweep.csv")
    write_csv(
        p,
        ["agent", "domain", "delta", "beta", "score", "decline_rate", "avg_agreement_round"],
        [
            (r.agent, r.domain, r.delta, r.beta, r.beta_score, r.decline_rate, r.avg_agreement_round)
            for r in rows
        ],
        comment=DECLINE_NOTE,
    )
    paths["discount_sweep"] = p

    p = os.path.join(out_dir, "acceptance.csv")
    write_csv(
        p,
        ["agent", "domain", "beta", "delta", "acceptance_social_welfare", "acceptance_individual_utility"],
        [
            (r.agent, r.domain, r.beta, r.delta, r.acceptance_social_welfare, r.acceptance_individual_utility)
            for r in rows
        ],
    )
    paths["acceptance"] = p

    p = os.path.join(out_dir, "agreement_rate.csv")
    write_csv(
        p,
        ["agent", "domain", "beta", "delta", "negotiation_agreement_rate", "chosen_offer_beta_score"],
        [
            (r.agent, r.domain, r.beta, r.delta, r.negotiation_agreement_rate, r.chosen_offer_beta_score)
            for r in rows
        ],
    )
    paths["agreement_rate"] = p

    p = os.path.join(out_dir, "ttest.csv")
    write_csv(
        p,
        ["agent_a", "agent_b", "t", "p", "n"],
        [(r.agent_a, r.agent_b, r.t, r.p, r.n) for r in beta_score_ttests(records)],
    )
    paths["ttest"] = p

    quality = model_quality_curves(records)
    if quality:
        p = os.path.join(out_dir, "model_quality.csv")
        write_csv(
            p,
            ["round", "pearson", "mae"],
            [(r.round, r.pearson, r.mae) for r in quality],
        )
        paths["model_quality"] = p

    return paths
