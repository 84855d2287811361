"""Per-opponent acceptance models.

Each opponent is modeled by logistic regression over encoded bids: the
model output estimates the probability that this opponent would accept the
bid. Training data comes straight from the public trace (offers made are
positive evidence, offers countered away are negative evidence) and is
consumed in a single chronological SGD pass.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from .domain import Bid, Domain, encode
from .protocol import Accept, Offer, TraceStep

LOSS_EPS = 1e-12


class TrainingMode(str, Enum):
    FRESH = "fresh"
    CONTINUOUS = "continuous"


@dataclass(frozen=True, slots=True)
class TrainingConfig:
    learning_rate: float = 0.5
    init_low: float = -1.0
    init_high: float = 0.0
    mode: TrainingMode = TrainingMode.FRESH

    def __post_init__(self) -> None:
        if self.learning_rate <= 0:
            raise ValueError("learning rate must be positive")
        if not self.init_low < self.init_high <= 0.0:
            raise ValueError("init range must satisfy init_low < init_high <= 0")


@dataclass(frozen=True, eq=False)
class LogisticModel:
    weights: np.ndarray
    bias: float


@dataclass(frozen=True, eq=False)
class TrainingSample:
    features: np.ndarray
    label: int


def _sigmoid(z: float) -> float:
    # branch on sign so the exp never overflows
    if z >= 0:
        return 1.0 / (1.0 + math.exp(-z))
    ez = math.exp(z)
    return ez / (1.0 + ez)


_P_LO = 1e-300
_P_HI = float(np.nextafter(1.0, 0.0))


def predict(model: LogisticModel, x: np.ndarray) -> float:
    """Acceptance probability for one encoded bid, strictly inside (0, 1)."""
    z = float(model.weights @ x + model.bias)
    return min(max(_sigmoid(z), _P_LO), _P_HI)


def predict_all(model: LogisticModel, X: np.ndarray) -> np.ndarray:
    """Vectorized predict over stacked encoded bids (rows)."""
    z = X @ model.weights + model.bias
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return np.clip(out, _P_LO, _P_HI)


def log_loss(h: float, y: int) -> float:
    """Cross-entropy of one prediction, with h clamped away from 0 and 1."""
    if y not in (0, 1):
        raise ValueError(f"label must be 0 or 1, got {y!r}")
    hc = min(max(h, LOSS_EPS), 1.0 - LOSS_EPS)
    return -math.log(hc) if y == 1 else -math.log(1.0 - hc)


def _one_pass(
    w: np.ndarray, b: float, samples: Sequence[TrainingSample], eta: float
) -> tuple[np.ndarray, float]:
    dim = w.shape[0]
    for s in samples:
        if s.features.shape[0] != dim:
            raise ValueError(
                f"sample dimension {s.features.shape[0]} does not match model {dim}"
            )
        h = _sigmoid(float(w @ s.features + b))
        g = eta * (h - s.label)
        w -= g * s.features
        b -= g
    return w, b


def sgd_train(
    samples: Sequence[TrainingSample],
    cfg: TrainingConfig,
    rng_seed: int,
    dim: int,
) -> LogisticModel:
    """Initialize weights and bias uniformly in [init_low, init_high), then
    make exactly one chronological pass of per-sample gradient steps.

    An empty sample list returns the bare initialization; with the default
    all-negative range that model predicts below 0.5 everywhere on one-hot
    or normalized (hence non-negative) features.
    """
    rng = np.random.default_rng(rng_seed)
    theta = rng.uniform(cfg.init_low, cfg.init_high, dim + 1)
    w, b = _one_pass(theta[:dim].copy(), float(theta[dim]), samples, cfg.learning_rate)
    w.setflags(write=False)
    return LogisticModel(weights=w, bias=b)


def update_model(
    model: LogisticModel, new_samples: Sequence[TrainingSample], cfg: TrainingConfig
) -> LogisticModel:
    """One SGD pass over new samples only, continuing from the given model."""
    w, b = _one_pass(model.weights.copy(), model.bias, new_samples, cfg.learning_rate)
    w.setflags(write=False)
    return LogisticModel(weights=w, bias=b)


def model_for_turn(
    samples: Sequence[TrainingSample],
    cfg: TrainingConfig,
    turn_seed: int,
    dim: int,
    previous: Optional[LogisticModel] = None,
    already_trained: int = 0,
) -> LogisticModel:
    """The model an agent should use this turn.

    Fresh mode retrains from a new turn-seeded initialization over the full
    sample history. Continuous mode initializes once (first turn) and then
    folds in only the samples that arrived since, which makes the final
    model identical to one single-pass training over the concatenation.
    """
    if cfg.mode is TrainingMode.FRESH or previous is None:
        return sgd_train(samples, cfg, turn_seed, dim)
    return update_model(previous, samples[already_trained:], cfg)


def extract_samples(
    trace: Sequence[TraceStep], opponent: int, domain: Domain
) -> tuple[TrainingSample, ...]:
    """Training samples about one opponent, in trace order.

    The opponent offering b yields a positive sample for b, preceded by a
    negative sample for the standing offer it walked away from (when one
    existed). The opponent accepting yields a positive sample for the
    standing offer. Other agents' decisions contribute nothing.
    """
    out: list[TrainingSample] = []
    standing: Optional[Bid] = None
    for step in trace:
        if step.agent == opponent:
            if isinstance(step.action, Offer):
                if standing is not None:
                    out.append(TrainingSample(encode(domain, standing), 0))
                out.append(TrainingSample(encode(domain, step.action.bid), 1))
            elif isinstance(step.action, Accept):
                if standing is None:
                    raise ValueError("trace has an accept with no standing offer")
                out.append(TrainingSample(encode(domain, standing), 1))
        if isinstance(step.action, Offer):
            standing = step.action.bid
    return tuple(out)


def model_record(model: LogisticModel, opponent: int, round_: int) -> dict:
    """JSON-ready dump of one per-opponent model."""
    return {
        "opponent": opponent,
        "round": round_,
        "weights": [float(w) for w in model.weights],
        "bias": float(model.bias),
    }


def model_from_record(obj: dict) -> LogisticModel:
    w = np.asarray([float(v) for v in obj["weights"]])
    w.setflags(write=False)
    return LogisticModel(weights=w, bias=float(obj["bias"]))
