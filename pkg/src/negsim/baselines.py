"""Baseline strategies the main agent is measured against."""
from __future__ import annotations

from enum import Enum
from typing import Optional

import numpy as np

from .domain import (
    Bid,
    DiscreteIssue,
    Domain,
    UtilityProfile,
    encoded_length,
    enumerate_bids,
    utilities_over_space,
    utility,
)
from .herbt import HerbTConfig, select_bid
from .opponent_model import extract_samples, model_for_turn
from .protocol import Accept, Action, Agent, AgentContext, Offer, TurnView
from .seeds import derive_seed

SAMPLING_CAP = 1000


def random_bid(domain: Domain, rng: np.random.Generator) -> Bid:
    """Uniformly random legal bid (uniform per issue, hence over the space)."""
    values: list[str | int] = []
    for iss in domain.issues:
        if isinstance(iss, DiscreteIssue):
            values.append(iss.values[int(rng.integers(len(iss.values)))])
        else:
            values.append(int(rng.integers(iss.lo, iss.hi + 1)))
    return Bid(values=tuple(values))


def _best_own_bid(profile: UtilityProfile) -> Bid:
    u = utilities_over_space(profile)
    return enumerate_bids(profile.domain)[int(np.argmax(u))]


def _draw_above(
    profile: UtilityProfile, floor_: float, rng: np.random.Generator
) -> Bid:
    """Rejection-sample a bid with utility >= floor_, falling back to the
    agent's best bid after SAMPLING_CAP draws."""
    for _ in range(SAMPLING_CAP):
        b = random_bid(profile.domain, rng)
        if utility(profile, b) >= floor_:
            return b
    return _best_own_bid(profile)


class OpeningMode(str, Enum):
    MAX_OWN_UTILITY = "max_own_utility"
    HERBT_BIDDING = "herbt_bidding"


class AlwaysAcceptAgent(Agent):
    """Accepts any standing offer. Its only decision is the opening bid:
    either its own best bid, or whatever the model-guided bidding strategy
    would open with."""

    def __init__(
        self,
        opening: OpeningMode = OpeningMode.MAX_OWN_UTILITY,
        herbt_cfg: Optional[HerbTConfig] = None,
    ):
        self.opening = opening
        self.herbt_cfg = herbt_cfg or HerbTConfig()

    def act(self, view: TurnView) -> Action:
        if view.standing_offer is not None:
            return Accept()
        if self.opening is OpeningMode.MAX_OWN_UTILITY:
            return Offer(bid=_best_own_bid(self.ctx.profile))
        return Offer(bid=self._herbt_opening(view))

    def _herbt_opening(self, view: TurnView) -> Bid:
        ctx = self.ctx
        dim = encoded_length(ctx.profile.domain)
        models = []
        for opp in range(ctx.n_agents):
            if opp == ctx.index:
                continue
            samples = extract_samples(view.trace, opp, ctx.profile.domain)
            seed = derive_seed(ctx.session_seed, ctx.index, opp, view.round)
            models.append(
                model_for_turn(samples, self.herbt_cfg.training, seed, dim)
            )
        bid, _ = select_bid(
            ctx.profile, view.round, ctx.round_limit, models, self.herbt_cfg, self.rng
        )
        return bid


class FrequencyAgent(Agent):
    """Keeps per-issue counts of the values seen in opponents' offers and
    proposes bids tilted toward the most frequent ones, subject to a time-
    falling own-utility threshold."""

    def reset(self, ctx: AgentContext) -> None:
        super().reset(ctx)
        self._counts: list[dict[str | int, int]] = [
            {} for _ in ctx.profile.domain.issues
        ]

    def observe(self, actor: int, action: Action, round_: int) -> None:
        if isinstance(action, Offer):
            for i, v in enumerate(action.bid.values):
                self._counts[i][v] = self._counts[i].get(v, 0) + 1

    def _floor(self, r: int) -> float:
        p = self.ctx.profile
        return max(p.reservation * p.discount_factor, 1.0 - r / self.ctx.round_limit)

    def _most_frequent(self, issue_idx: int) -> Optional[str | int]:
        counts = self._counts[issue_idx]
        if not counts:
            return None
        iss = self.ctx.profile.domain.issues[issue_idx]
        order = iss.values if isinstance(iss, DiscreteIssue) else sorted(counts)
        best, best_count = None, 0
        for v in order:
            c = counts.get(v, 0)
            if c > best_count:
                best, best_count = v, c
        return best

    def _generate(self, floor_: float) -> Bid:
        profile = self.ctx.profile
        candidate = _draw_above(profile, floor_, self.rng)
        values = list(candidate.values)
        for i in range(len(values)):
            mf = self._most_frequent(i)
            if mf is None or mf == values[i]:
                continue
            old = values[i]
            values[i] = mf
            if utility(profile, Bid(values=tuple(values))) < floor_:
                values[i] = old
        return Bid(values=tuple(values))

    def act(self, view: TurnView) -> Action:
        floor_ = self._floor(view.round)
        if (
            view.standing_offer is not None
            and utility(self.ctx.profile, view.standing_offer) >= floor_
        ):
            return Accept()
        return Offer(bid=self._generate(floor_))


class TimeDependentAgent(Agent):
    """Classic time-dependent concession: the utility target falls from 1 to
    the discounted reservation along (r/R)**(1/e). e < 1 concedes late
    (boulware), e = 1 is linear, e > 1 concedes early."""

    def __init__(self, e: float = 0.2):
        if e <= 0:
            raise ValueError("concession exponent e must be positive")
        self.e = e

    def target(self, r: int) -> float:
        p = self.ctx.profile
        floor_ = p.reservation * p.discount_factor
        return floor_ + (1.0 - floor_) * (
            1.0 - (r / self.ctx.round_limit) ** (1.0 / self.e)
        )

    def act(self, view: TurnView) -> Action:
        t = self.target(view.round)
        if (
            view.standing_offer is not None
            and utility(self.ctx.profile, view.standing_offer) >= t
        ):
            return Accept()
        return Offer(bid=_draw_above(self.ctx.profile, t, self.rng))


class RandomAgent(Agent):
    """Accepts when the standing offer clears the discounted reservation and
    a fair coin lands heads; otherwise offers a uniformly random bid."""

    def act(self, view: TurnView) -> Action:
        p = self.ctx.profile
        if (
            view.standing_offer is not None
            and utility(p, view.standing_offer) >= p.reservation * p.discount_factor
            and self.rng.random() < 0.5
        ):
            return Accept()
        return Offer(bid=random_bid(p.domain, self.rng))
