import math

import numpy as np
import pytest

from levyfp.specfun import StabilityIndex, c_alpha, gamma_fn, mp_threshold, riemann_zeta

from oracles import oracle_c_alpha, oracle_threshold, oracle_zeta


def test_stability_index_accepts_open_interval():
    assert StabilityIndex(0.5).alpha == 0.5
    assert StabilityIndex(1.999).alpha == 1.999


@pytest.mark.parametrize("bad", [0.0, 2.0, -0.3, 2.4, float("nan")])
def test_stability_index_rejects(bad):
    with pytest.raises(ValueError):
        StabilityIndex(bad)


def test_gamma_positive_domain():
    assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert gamma_fn(5.0) == 24.0
    with pytest.raises(ValueError):
        gamma_fn(0.0)
    with pytest.raises(ValueError):
        gamma_fn(-1.5)


def test_zeta_known_values():
    assert riemann_zeta(0.0) == pytest.approx(-0.5, abs=1e-13)
    assert riemann_zeta(-1.0) == pytest.approx(-1.0 / 12.0, abs=1e-13)
    assert riemann_zeta(-2.0) == pytest.approx(0.0, abs=1e-13)
    assert riemann_zeta(0.5) == pytest.approx(-1.4603545088095868, abs=1e-12)


def test_zeta_against_mpmath_grid():
    # the stepping threshold evaluates zeta(alpha-1) on (-1, 1)
    for s in np.linspace(-1.0, 0.999, 241):
        assert riemann_zeta(float(s)) == pytest.approx(oracle_zeta(float(s)), abs=1e-12)


def test_zeta_rejects_pole_and_beyond():
    with pytest.raises(ValueError):
        riemann_zeta(1.0)
    with pytest.raises(ValueError):
        riemann_zeta(1.4)


@pytest.mark.parametrize(
    "alpha,expected",
    [
        (1.0, 1.0 / math.pi),
        (0.5, 0.19947114020071635),
        (1.5, 0.29920671030107454),
    ],
)
def test_c_alpha_values(alpha, expected):
    assert c_alpha(alpha) == pytest.approx(expected, rel=1e-12)


def test_c_alpha_matches_oracle():
    for alpha in np.linspace(0.05, 1.95, 39):
        assert c_alpha(float(alpha)) == pytest.approx(oracle_c_alpha(float(alpha)), rel=1e-13)


def test_threshold_reference_point():
    # alpha=1, eps=1: 1/(2*(1/pi)*(1 + 1 + 1/2)) = pi/5
    assert mp_threshold(1.0, 1.0) == pytest.approx(math.pi / 5.0, rel=1e-14)


def test_threshold_matches_oracle():
    for alpha in np.linspace(0.05, 1.95, 39):
        assert mp_threshold(float(alpha), 1.0) == pytest.approx(
            oracle_threshold(float(alpha), 1.0), rel=1e-12
        )


def test_threshold_monotone_decreasing_in_alpha():
    alphas = np.linspace(0.02, 1.98, 99)
    values = [mp_threshold(float(a), 1.0) for a in alphas]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_threshold_limits():
    # approaches 1 as alpha -> 0 and 1/2 as alpha -> 2 (mpmath-checked limits)
    assert mp_threshold(1e-4, 1.0) == pytest.approx(1.0, abs=2e-3)
    assert mp_threshold(2.0 - 1e-6, 1.0) == pytest.approx(0.5, abs=1e-3)


def test_threshold_scales_inversely_with_eps():
    for eps in (0.5, 2.0, 7.3):
        assert mp_threshold(1.2, eps) == pytest.approx(mp_threshold(1.2, 1.0) / eps, rel=1e-14)


def test_threshold_rejects_bad_eps():
    with pytest.raises(ValueError):
        mp_threshold(1.0, 0.0)
    with pytest.raises(ValueError):
        mp_threshold(1.0, -1.0)
