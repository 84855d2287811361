"""Shared fixtures and scripted agents for the test suite."""
from __future__ import annotations

import math

import numpy as np
import pytest

import negsim as ns


# ---------------------------------------------------------------------------
# hand-built domains and profiles


@pytest.fixture
def colors_domain() -> ns.Domain:
    """Two discrete issues: 2 colors x 3 sizes = 6 bids."""
    return ns.Domain(
        name="colors",
        issues=(
            ns.DiscreteIssue(name="color", values=("red", "blue")),
            ns.DiscreteIssue(name="size", values=("small", "medium", "large")),
        ),
    )


@pytest.fixture
def colors_profile(colors_domain: ns.Domain) -> ns.UtilityProfile:
    return ns.UtilityProfile(
        domain=colors_domain,
        weights=(0.6, 0.4),
        value_utils=((0.5, 1.0), (1.0, 0.0, 0.25)),
    )


@pytest.fixture
def mixed_domain() -> ns.Domain:
    """One discrete and one integer issue."""
    return ns.Domain(
        name="mixed",
        issues=(
            ns.DiscreteIssue(name="color", values=("red", "blue")),
            ns.IntegerIssue(name="count", lo=0, hi=4),
        ),
    )


@pytest.fixture
def pair_domain() -> ns.Domain:
    """A single binary issue: the smallest non-trivial bid space."""
    return ns.Domain(
        name="pair",
        issues=(ns.DiscreteIssue(name="choice", values=("a", "b")),),
    )


def make_pair_profile(
    domain: ns.Domain,
    u_a: float,
    u_b: float,
    reservation: float = 0.0,
    discount: float = 1.0,
) -> ns.UtilityProfile:
    return ns.UtilityProfile(
        domain=domain,
        weights=(1.0,),
        value_utils=((u_a, u_b),),
        reservation=reservation,
        discount_factor=discount,
    )


def gen_profiles(
    domain: ns.Domain,
    n: int,
    seed: int = 0,
    reservation: float = 0.0,
    discount: float = 1.0,
) -> tuple[ns.UtilityProfile, ...]:
    return tuple(
        ns.generate_profile(domain, reservation, discount, ns.derive_seed(seed, i))
        for i in range(n)
    )


# ---------------------------------------------------------------------------
# scripted agents


class ScriptedAgent(ns.Agent):
    """Plays a fixed list of actions, in order."""

    def __init__(self, actions):
        self.actions = list(actions)

    def reset(self, ctx: ns.AgentContext) -> None:
        super().reset(ctx)
        self._at = 0

    def act(self, view: ns.TurnView) -> ns.Offer | ns.Accept:
        action = self.actions[self._at]
        self._at += 1
        return action


class StubbornAgent(ns.Agent):
    """Always re-offers its own best bid; never accepts anything."""

    def act(self, view: ns.TurnView) -> ns.Offer:
        u = ns.utilities_over_space(self.ctx.profile)
        best = ns.enumerate_bids(self.ctx.profile.domain)[int(np.argmax(u))]
        return ns.Offer(bid=best)


def logit(p: float) -> float:
    return math.log(p / (1.0 - p))


def constant_model(dim: int, p: float) -> ns.LogisticModel:
    """Model predicting probability p for every bid (zero weights)."""
    w = np.zeros(dim)
    w.setflags(write=False)
    return ns.LogisticModel(weights=w, bias=logit(p))


def valuewise_model(values: int, probs) -> ns.LogisticModel:
    """For a one-issue discrete domain: model predicting probs[i] on value i."""
    assert len(probs) == values
    w = np.asarray([logit(p) for p in probs], dtype=float)
    w.setflags(write=False)
    return ns.LogisticModel(weights=w, bias=0.0)
