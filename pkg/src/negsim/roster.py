"""Build agents from JSON config blocks.

Block shapes:

    {"type": "herbt", "beta": 1.0, "scorer": "heuristic" | "expected_sw",
     "training_mode": "fresh" | "continuous", "learning_rate": 0.5,
     "init_low": -1.0, "init_high": 0.0}
    {"type": "always_accept", "opening": "max_own_utility" | "herbt_bidding"}
    {"type": "frequency"}
    {"type": "time_dependent", "e": 0.2}
    {"type": "random"}

Every block may also carry an "id" used in reports (defaults to the type).
"""
from __future__ import annotations

from .baselines import (
    AlwaysAcceptAgent,
    FrequencyAgent,
    OpeningMode,
    RandomAgent,
    TimeDependentAgent,
)
from .herbt import HerbTAgent, HerbTConfig, Scorer
from .opponent_model import TrainingConfig, TrainingMode
from .protocol import Agent


class ConfigError(ValueError):
    pass


_ALLOWED_KEYS = {
    "herbt": {
        "id",
        "type",
        "beta",
        "scorer",
        "training_mode",
        "learning_rate",
        "init_low",
        "init_high",
        "discount_whole_score",
    },
    "always_accept": {"id", "type", "opening", "beta"},
    "frequency": {"id", "type"},
    "time_dependent": {"id", "type", "e"},
    "random": {"id", "type"},
}


def _check_keys(block: dict) -> str:
    kind = block.get("type")
    if kind not in _ALLOWED_KEYS:
        raise ConfigError(f"unknown agent type {kind!r}")
    extra = set(block) - _ALLOWED_KEYS[kind]
    if extra:
        raise ConfigError(f"unknown keys for {kind!r}: {sorted(extra)}")
    return kind


def _herbt_config(block: dict) -> HerbTConfig:
    try:
        training = TrainingConfig(
            learning_rate=float(block.get("learning_rate", 0.5)),
            init_low=float(block.get("init_low", -1.0)),
            init_high=float(block.get("init_high", 0.0)),
            mode=TrainingMode(block.get("training_mode", "fresh")),
        )
        return HerbTConfig(
            beta=float(block.get("beta", 1.0)),
            scorer=Scorer(block.get("scorer", "heuristic")),
            training=training,
            discount_whole_score=bool(block.get("discount_whole_score", True)),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def agent_from_config(block: dict, dump_models: bool = False) -> Agent:
    kind = _check_keys(block)
    if kind == "herbt":
        return HerbTAgent(cfg=_herbt_config(block), dump_models=dump_models)
    if kind == "always_accept":
        try:
            opening = OpeningMode(block.get("opening", "max_own_utility"))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        cfg = HerbTConfig(beta=float(block.get("beta", 1.0)))
        return AlwaysAcceptAgent(opening=opening, herbt_cfg=cfg)
    if kind == "frequency":
        return FrequencyAgent()
    if kind == "time_dependent":
        e = float(block.get("e", 0.2))
        if e <= 0:
            raise ConfigError("concession exponent e must be positive")
        return TimeDependentAgent(e=e)
    return RandomAgent()


def agent_id(block: dict) -> str:
    return str(block.get("id", block.get("type", "agent")))


def bind_beta(block: dict, beta: float) -> dict:
    """Copy of the block with the tournament grid's beta bound into it, for
    the block types whose behavior depends on beta."""
    if block.get("type") == "herbt" or (
        block.get("type") == "always_accept"
        and block.get("opening") == "herbt_bidding"
    ):
        out = dict(block)
        out["beta"] = beta
        return out
    return block
