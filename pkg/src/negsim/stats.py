"""Paired comparisons and model-quality statistics for report tables.

The Student-t p-value is computed from the regularized incomplete beta
function, evaluated with the standard continued-fraction expansion, so the
test works without pulling in a stats dependency.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np


class DegenerateSamplesError(ValueError):
    """Raised when a paired test is asked about samples it cannot judge."""


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if a <= 0 or b <= 0:
        raise ValueError("shape parameters must be positive")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    # Use the expansion on whichever side converges fast, and the symmetry
    # I_x(a, b) = 1 - I_{1-x}(b, a) on the other.
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cf(a, b, x) / a
    return 1.0 - front * _beta_cf(b, a, 1.0 - x) / b


def _beta_cf(a: float, b: float, x: float) -> float:
    # modified Lentz evaluation of the continued fraction
    max_iter = 300
    eps = 3e-14
    fpmin = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < fpmin:
        d = fpmin
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < fpmin:
            d = fpmin
        c = 1.0 + aa / c
        if abs(c) < fpmin:
            c = fpmin
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < fpmin:
            d = fpmin
        c = 1.0 + aa / c
        if abs(c) < fpmin:
            c = fpmin
        d = 1.0 / d
        step = d * c
        h *= step
        if abs(step - 1.0) < eps:
            return h
    raise RuntimeError("incomplete beta continued fraction did not converge")


def student_t_sf(t: float, df: float) -> float:
    """P(T > t) for T Student-t distributed with df degrees of freedom."""
    if df <= 0:
        raise ValueError("degrees of freedom must be positive")
    x = df / (df + t * t)
    tail = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x)
    return tail if t >= 0 else 1.0 - tail


@dataclass(frozen=True, slots=True)
class TTestResult:
    t: float
    p: float
    n: int
    df: int


def dependent_t_test(
    x: Sequence[float],
    y: Sequence[float],
    alternative: str = "two-sided",
) -> TTestResult:
    """Paired t-test on matched samples.

    t = mean(d) / (sd(d) / sqrt(n)) with d = x - y and the sample standard
    deviation (ddof = 1). Needs n >= 2 pairs and non-constant differences;
    anything else raises DegenerateSamplesError instead of fabricating a
    p-value.
    """
    xs = np.asarray(x, dtype=float)
    ys = np.asarray(y, dtype=float)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise ValueError("paired samples must be equal-length 1-d sequences")
    n = xs.size
    if n < 2:
        raise DegenerateSamplesError(f"need at least 2 pairs, got {n}")
    d = xs - ys
    sd = float(d.std(ddof=1))
    if sd == 0.0:
        raise DegenerateSamplesError("differences have zero variance")
    t = float(d.mean()) / (sd / math.sqrt(n))
    df = n - 1
    if alternative == "two-sided":
        p = 2.0 * student_t_sf(abs(t), df)
    elif alternative == "greater":
        p = student_t_sf(t, df)
    elif alternative == "less":
        p = 1.0 - student_t_sf(t, df)
    else:
        raise ValueError(f"unknown alternative {alternative!r}")
    return TTestResult(t=t, p=min(p, 1.0), n=n, df=df)


def pearson(a: Sequence[float], b: Sequence[float]) -> Optional[float]:
    """Pearson correlation, or None when either side has zero variance."""
    xs = np.asarray(a, dtype=float)
    ys = np.asarray(b, dtype=float)
    if xs.shape != ys.shape or xs.ndim != 1 or xs.size < 2:
        raise ValueError("pearson needs two equal-length 1-d samples, n >= 2")
    xc = xs - xs.mean()
    yc = ys - ys.mean()
    sx = float(np.sqrt((xc * xc).sum()))
    sy = float(np.sqrt((yc * yc).sum()))
    if sx == 0.0 or sy == 0.0:
        return None
    r = float((xc * yc).sum() / (sx * sy))
    return max(-1.0, min(1.0, r))


def mean_absolute_error(a: Sequence[float], b: Sequence[float]) -> float:
    xs = np.asarray(a, dtype=float)
    ys = np.asarray(b, dtype=float)
    if xs.shape != ys.shape:
        raise ValueError("mismatched shapes")
    return float(np.abs(xs - ys).mean())
