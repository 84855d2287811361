"""Stacked alternating offers engine for n >= 2 agents.

Agents act in cyclic index order. An Offer replaces the standing offer and
resets the running accept count; an Accept increments it. The session ends
with an agreement as soon as n - 1 agents in a row have accepted the
standing offer, or with the reservation outcome when round_limit full
cycles complete without one. One round = one full cycle of n actions.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .domain import Bid, UtilityProfile, discount, utility, validate_bid
from .seeds import derive_seed


@dataclass(frozen=True, slots=True)
class Offer:
    bid: Bid


@dataclass(frozen=True, slots=True)
class Accept:
    pass


Action = Offer | Accept


@dataclass(frozen=True, slots=True)
class TraceStep:
    round: int
    agent: int
    action: Action


@dataclass(frozen=True, slots=True)
class Agreement:
    bid: Bid
    proposer: int
    round: int


@dataclass(frozen=True, slots=True)
class SessionOutcome:
    agreement: Optional[Agreement]
    utilities: tuple[float, ...]
    discounted_utilities: tuple[float, ...]
    trace: tuple[TraceStep, ...]
    rounds_used: int


@dataclass(frozen=True, slots=True)
class AgentContext:
    """Everything an agent may see about its seat: its own profile, the
    session geometry, and the session seed its private streams derive from."""

    index: int
    n_agents: int
    round_limit: int
    profile: UtilityProfile
    session_seed: int


@dataclass(frozen=True, slots=True)
class TurnView:
    round: int
    standing_offer: Optional[Bid]
    standing_proposer: Optional[int]
    trace: tuple[TraceStep, ...]


class ProtocolViolation(RuntimeError):
    def __init__(self, agent: int, message: str):
        super().__init__(f"agent {agent}: {message}")
        self.agent = agent


class Agent:
    """Base strategy. Subclasses override act(); observe() is called once
    for every action by another agent, in trace order."""

    ctx: AgentContext
    rng: np.random.Generator

    def reset(self, ctx: AgentContext) -> None:
        self.ctx = ctx
        self.rng = np.random.default_rng(derive_seed(ctx.session_seed, ctx.index))

    def observe(self, actor: int, action: Action, round_: int) -> None:
        pass

    def act(self, view: TurnView) -> Action:
        raise NotImplementedError


def run_session(
    agents: Sequence[Agent],
    profiles: Sequence[UtilityProfile],
    round_limit: int,
    seed: int,
) -> SessionOutcome:
    """Run one negotiation to agreement or deadline.

    Deterministic: identical (agents, profiles, round_limit, seed) produce
    identical outcomes. Protocol violations abort the session with an error
    naming the offending agent.
    """
    n = len(agents)
    if n < 2:
        raise ValueError("a session needs at least 2 agents")
    if len(profiles) != n:
        raise ValueError(f"{n} agents but {len(profiles)} profiles")
    if round_limit < 1:
        raise ValueError("round limit must be >= 1")
    domain = profiles[0].domain
    if any(p.domain != domain for p in profiles):
        raise ValueError("profiles disagree on the domain")

    for i, (agent, profile) in enumerate(zip(agents, profiles)):
        agent.reset(
            AgentContext(
                index=i,
                n_agents=n,
                round_limit=round_limit,
                profile=profile,
                session_seed=seed,
            )
        )

    trace: list[TraceStep] = []
    standing: Optional[Bid] = None
    proposer: Optional[int] = None
    accepts = 0
    agreement: Optional[Agreement] = None

    for idx in range(n * round_limit):
        r, turn = divmod(idx, n)
        view = TurnView(
            round=r,
            standing_offer=standing,
            standing_proposer=proposer,
            trace=tuple(trace),
        )
        action = agents[turn].act(view)
        if isinstance(action, Accept):
            if standing is None:
                raise ProtocolViolation(turn, "accepted with no standing offer")
            assert proposer is not None and proposer != turn
            accepts += 1
            assert 1 <= accepts <= n - 1
        elif isinstance(action, Offer):
            try:
                validate_bid(domain, action.bid)
            except ValueError as exc:
                raise ProtocolViolation(turn, f"illegal bid: {exc}") from exc
            standing, proposer, accepts = action.bid, turn, 0
        else:
            raise ProtocolViolation(turn, f"unknown action {action!r}")
        trace.append(TraceStep(round=r, agent=turn, action=action))
        for j, other in enumerate(agents):
            if j != turn:
                other.observe(turn, action, r)
        if accepts == n - 1:
            assert standing is not None and proposer is not None
            agreement = Agreement(bid=standing, proposer=proposer, round=r)
            break

    return _outcome(agreement, tuple(trace), profiles, round_limit)


def _outcome(
    agreement: Optional[Agreement],
    trace: tuple[TraceStep, ...],
    profiles: Sequence[UtilityProfile],
    round_limit: int,
) -> SessionOutcome:
    n = len(profiles)
    if agreement is not None:
        utilities = tuple(utility(p, agreement.bid) for p in profiles)
        discounted = tuple(
            discount(u, agreement.round, round_limit, p.discount_factor)
            for u, p in zip(utilities, profiles)
        )
        rounds_used = agreement.round + 1
    else:
        utilities = tuple(p.reservation for p in profiles)
        discounted = tuple(
            discount(p.reservation, round_limit, round_limit, p.discount_factor)
            for p in profiles
        )
        rounds_used = math.ceil(len(trace) / n)
    return SessionOutcome(
        agreement=agreement,
        utilities=utilities,
        discounted_utilities=discounted,
        trace=trace,
        rounds_used=rounds_used,
    )


def replay(
    trace: Sequence[TraceStep],
    profiles: Sequence[UtilityProfile],
    round_limit: int,
) -> SessionOutcome:
    """Recompute a session outcome from its trace alone.

    Malformed traces (empty, out-of-order steps, accepts without a standing
    offer, illegal bids, or actions after agreement) raise ValueError.
    """
    n = len(profiles)
    if n < 2:
        raise ValueError("a session needs at least 2 profiles")
    if not trace:
        raise ValueError("empty trace: sessions always contain at least one action")
    if len(trace) > n * round_limit:
        raise ValueError("trace longer than the round limit allows")
    domain = profiles[0].domain

    standing: Optional[Bid] = None
    proposer: Optional[int] = None
    accepts = 0
    agreement: Optional[Agreement] = None
    for idx, step in enumerate(trace):
        if agreement is not None:
            raise ValueError(f"action at index {idx} after agreement")
        r, turn = divmod(idx, n)
        if step.round != r or step.agent != turn:
            raise ValueError(
                f"trace step {idx} claims round {step.round} agent {step.agent}, "
                f"expected round {r} agent {turn}"
            )
        if isinstance(step.action, Accept):
            if standing is None:
                raise ValueError(f"trace step {idx}: accept with no standing offer")
            if proposer == turn:
                raise ValueError(f"trace step {idx}: agent accepted its own offer")
            accepts += 1
            if accepts == n - 1:
                agreement = Agreement(bid=standing, proposer=proposer, round=r)
        elif isinstance(step.action, Offer):
            validate_bid(domain, step.action.bid)
            standing, proposer, accepts = step.action.bid, turn, 0
        else:
            raise ValueError(f"trace step {idx}: unknown action {step.action!r}")
    return _outcome(agreement, tuple(trace), profiles, round_limit)


# ---------------------------------------------------------------------------
# trace files: one JSON header line, then one JSON object per action


def write_trace(
    path: str,
    trace: Sequence[TraceStep],
    *,
    scenario_hash: str,
    round_limit: int,
    seed: int,
    n_agents: int,
) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        header = {
            "scenario_hash": scenario_hash,
            "round_limit": round_limit,
            "seed": seed,
            "n_agents": n_agents,
        }
        fh.write(json.dumps(header, sort_keys=True) + "\n")
        for step in trace:
            fh.write(json.dumps(trace_step_to_json(step), sort_keys=True) + "\n")


def trace_step_to_json(step: TraceStep) -> dict:
    if isinstance(step.action, Offer):
        return {
            "round": step.round,
            "agent": step.agent,
            "action": "offer",
            "bid": list(step.action.bid.values),
        }
    return {"round": step.round, "agent": step.agent, "action": "accept", "bid": None}


def trace_step_from_json(obj: dict) -> TraceStep:
    kind = obj["action"]
    if kind == "offer":
        action: Action = Offer(bid=Bid(values=tuple(obj["bid"])))
    elif kind == "accept":
        action = Accept()
    else:
        raise ValueError(f"unknown action kind {kind!r}")
    return TraceStep(round=int(obj["round"]), agent=int(obj["agent"]), action=action)


def read_trace(path: str) -> tuple[dict, tuple[TraceStep, ...]]:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line for line in fh.read().splitlines() if line.strip()]
    if not lines:
        raise ValueError(f"trace file {path} is empty")
    header = json.loads(lines[0])
    if not isinstance(header, dict) or "round_limit" not in header:
        raise ValueError(f"trace file {path} is missing its header line")
    steps = tuple(trace_step_from_json(json.loads(line)) for line in lines[1:])
    return header, steps
