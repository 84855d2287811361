"""Paired t-test, incomplete beta, Pearson correlation, MAE.

scipy appears here only as an independent second route for cross-checks;
the library itself never imports it.
"""
from __future__ import annotations

import numpy as np
import pytest
import scipy.special
import scipy.stats
from hypothesis import given, settings
from hypothesis import strategies as st

import negsim as ns


# ---------------------------------------------------------------------------
# dependent t-test


def test_ttest_worked_example_df3():
    # differences 1, 2, 3, 4: mean 2.5, sd sqrt(5/3), n=4
    res = ns.dependent_t_test([1.0, 2.0, 3.0, 4.0], [0.0, 0.0, 0.0, 0.0])
    assert res.n == 4
    assert res.df == 3
    assert res.t == pytest.approx(3.872983346207417, abs=1e-12)
    assert res.p == pytest.approx(0.030466291662170977, abs=1e-12)


def test_ttest_zero_mean_differences():
    res = ns.dependent_t_test([1.0, -1.0, 2.0, -2.0], [0.0, 0.0, 0.0, 0.0])
    assert res.t == 0.0
    assert res.p == 1.0


def test_ttest_degenerate_inputs():
    with pytest.raises(ns.DegenerateSamplesError, match="zero variance"):
        ns.dependent_t_test([1.0, 2.0, 3.0], [0.0, 1.0, 2.0])
    with pytest.raises(ns.DegenerateSamplesError, match="at least 2"):
        ns.dependent_t_test([1.0], [0.0])
    with pytest.raises(ValueError, match="equal-length"):
        ns.dependent_t_test([1.0, 2.0], [0.0])
    with pytest.raises(ValueError, match="alternative"):
        ns.dependent_t_test([1.0, 2.0], [0.0, 0.5], alternative="sideways")


def test_ttest_one_sided_directions():
    x, y = [0.1, 0.2, 0.15, 0.3], [0.5, 0.6, 0.55, 0.7]
    less = ns.dependent_t_test(x, y, alternative="less")
    greater = ns.dependent_t_test(x, y, alternative="greater")
    assert less.t < 0
    assert less.p < 0.05
    assert greater.p > 0.95
    assert less.p + greater.p == pytest.approx(1.0, abs=1e-12)


@st.composite
def paired_samples(draw):
    n = draw(st.integers(min_value=2, max_value=25))
    xs = draw(
        st.lists(
            st.floats(min_value=-100, max_value=100),
            min_size=n,
            max_size=n,
        )
    )
    ys = draw(
        st.lists(
            st.floats(min_value=-100, max_value=100),
            min_size=n,
            max_size=n,
        )
    )
    d = np.asarray(xs) - np.asarray(ys)
    if float(d.std(ddof=1)) < 1e-6:
        # avoid degenerate pairs; they are tested explicitly above
        xs[0] += 1.0
    return xs, ys


@given(paired_samples())
@settings(max_examples=60, deadline=None)
def test_ttest_antisymmetry(pair):
    xs, ys = pair
    fwd = ns.dependent_t_test(xs, ys)
    rev = ns.dependent_t_test(ys, xs)
    assert fwd.t == pytest.approx(-rev.t, rel=1e-9, abs=1e-12)
    assert fwd.p == pytest.approx(rev.p, rel=1e-9, abs=1e-12)
    less = ns.dependent_t_test(xs, ys, alternative="less")
    greater = ns.dependent_t_test(ys, xs, alternative="greater")
    assert less.p == pytest.approx(greater.p, rel=1e-9, abs=1e-12)


def test_ttest_matches_scipy():
    rng = np.random.default_rng(42)
    for n in (2, 3, 5, 12, 40):
        x = rng.normal(0.2, 1.0, n)
        y = rng.normal(0.0, 1.0, n)
        mine = ns.dependent_t_test(x, y)
        ref = scipy.stats.ttest_rel(x, y)
        assert mine.t == pytest.approx(float(ref.statistic), abs=1e-10)
        assert mine.p == pytest.approx(float(ref.pvalue), abs=1e-10)
        for alt in ("less", "greater"):
            mine1 = ns.dependent_t_test(x, y, alternative=alt)
            ref1 = scipy.stats.ttest_rel(x, y, alternative=alt)
            assert mine1.p == pytest.approx(float(ref1.pvalue), abs=1e-10)


# ---------------------------------------------------------------------------
# incomplete beta / Student-t survival function


def test_incomplete_beta_matches_scipy_grid():
    for a in (0.5, 1.0, 2.5, 7.0):
        for b in (0.5, 1.0, 3.0, 9.5):
            for x in np.linspace(0.0, 1.0, 11):
                mine = ns.regularized_incomplete_beta(a, b, float(x))
                ref = float(scipy.special.betainc(a, b, x))
                assert mine == pytest.approx(ref, abs=1e-12)


def test_incomplete_beta_edges():
    assert ns.regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0
    assert ns.regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0
    with pytest.raises(ValueError):
        ns.regularized_incomplete_beta(0.0, 1.0, 0.5)


def test_student_t_sf_matches_scipy_grid():
    for df in (1, 2, 3, 10, 30):
        for t in (-5.0, -1.5, -0.2, 0.0, 0.7, 2.0, 6.0):
            mine = ns.student_t_sf(t, df)
            ref = float(scipy.stats.t.sf(t, df))
            assert mine == pytest.approx(ref, abs=1e-12)


def test_student_t_sf_symmetry():
    assert ns.student_t_sf(0.0, 5) == pytest.approx(0.5, abs=1e-12)
    assert ns.student_t_sf(1.7, 8) + ns.student_t_sf(-1.7, 8) == pytest.approx(
        1.0, abs=1e-12
    )


# ---------------------------------------------------------------------------
# pearson / MAE


def test_pearson_hand_pair():
    r = ns.pearson([0.1, 0.4, 0.6, 0.9], [0.2, 0.3, 0.7, 0.8])
    # cov = 0.07, var_a = 0.085, var_b = 0.065 (per-n): r = 0.28/sqrt(0.34*0.26)
    assert r == pytest.approx(0.9417419115948373, abs=1e-12)


def test_mae_hand_pair():
    assert ns.mean_absolute_error(
        [0.1, 0.4, 0.6, 0.9], [0.2, 0.3, 0.7, 0.8]
    ) == pytest.approx(0.1, abs=1e-15)
    with pytest.raises(ValueError):
        ns.mean_absolute_error([0.1], [0.2, 0.3])


def test_pearson_identity_and_sign():
    x = [0.3, 0.1, 0.9, 0.5]
    assert ns.pearson(x, x) == 1.0
    inverted = [1.0 - v for v in x]
    assert ns.pearson(x, inverted) == -1.0


def test_pearson_none_on_constant():
    assert ns.pearson([0.5, 0.5, 0.5], [0.1, 0.2, 0.3]) is None
    assert ns.pearson([0.1, 0.2, 0.3], [2.0, 2.0, 2.0]) is None


def test_pearson_matches_scipy_and_stays_bounded():
    rng = np.random.default_rng(3)
    for _ in range(25):
        n = int(rng.integers(2, 30))
        x = rng.random(n)
        y = 0.4 * x + rng.normal(0, 0.2, n)
        mine = ns.pearson(x, y)
        assert mine is not None
        assert -1.0 <= mine <= 1.0
        ref = float(scipy.stats.pearsonr(x, y).statistic)
        assert mine == pytest.approx(ref, abs=1e-12)


def test_pearson_input_validation():
    with pytest.raises(ValueError):
        ns.pearson([1.0], [1.0])
    with pytest.raises(ValueError):
        ns.pearson([1.0, 2.0], [1.0, 2.0, 3.0])
