"""Log-gamma, rising factorial, and the discrete Mittag-Leffler series."""

import cmath
import math

import numpy as np
import pytest
from scipy.special import loggamma as scipy_loggamma

from nablainv import (
    MittagLefflerParams,
    ParameterDomainError,
    discrete_mittag_leffler,
    log_gamma,
    rising_factorial,
)


def brute_force_ml(alpha, beta, lam, m, terms=3000):
    """Direct summation oracle, independent of the library's stopping rule."""
    total = 0j
    for i in range(terms):
        if lam == 0 and i > 0:
            break
        log_lam = cmath.log(lam) if lam != 0 else 0.0
        total += cmath.exp(
            i * log_lam
            + scipy_loggamma(m + i * alpha + beta - 1)
            - scipy_loggamma(m)
            - scipy_loggamma(i * alpha + beta)
        )
    return total


class TestLogGamma:
    def test_gamma_one(self):
        assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-14)

    def test_gamma_five(self):
        assert log_gamma(5.0).real == pytest.approx(math.log(24.0), rel=1e-14)

    def test_gamma_half(self):
        assert log_gamma(0.5).real == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-14)

    @pytest.mark.parametrize("z", [0.0, -1.0, -2.0, -7.0])
    def test_poles_rejected(self, z):
        with pytest.raises(ParameterDomainError):
            log_gamma(z)

    def test_recurrence_identity(self, rng):
        """exp(logGamma(x+1)) = x exp(logGamma(x)) away from the poles."""
        xs = np.concatenate([
            rng.uniform(0.1, 8.0, 40),
            rng.uniform(0.1, 4.0, 20) + 1j * rng.uniform(-3.0, 3.0, 20),
            rng.uniform(-3.9, -0.1, 20) + 1j * rng.uniform(0.2, 2.0, 20),
        ])
        for x in xs:
            lhs = cmath.exp(log_gamma(x + 1))
            rhs = x * cmath.exp(log_gamma(x))
            assert abs(lhs - rhs) <= 1e-10 * abs(rhs)


class TestRisingFactorial:
    def test_integer_case(self):
        assert rising_factorial(3, 2) == pytest.approx(12.0)

    def test_gamma_shift_at_one(self):
        # (1)^(rising 0.5) = Gamma(1.5) = sqrt(pi)/2
        assert rising_factorial(1, 0.5).real == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-12)

    def test_empty_product(self):
        assert rising_factorial(2, 0) == 1.0

    def test_nonpositive_base_rejected(self):
        with pytest.raises(ValueError):
            rising_factorial(0.0, 0.5)

    def test_matches_gamma_ratio(self, rng):
        for _ in range(30):
            n = float(rng.uniform(0.2, 9.0))
            alpha = float(rng.uniform(-0.9, 3.0))
            direct = cmath.exp(scipy_loggamma(n + alpha) - scipy_loggamma(n))
            assert rising_factorial(n, alpha) == pytest.approx(direct, rel=1e-12)


class TestDiscreteMittagLeffler:
    def test_lambda_zero_beta_one(self):
        p = MittagLefflerParams(0.7, 1.0, 0.0)
        assert discrete_mittag_leffler(p, 5) == pytest.approx(1.0)

    def test_first_step_is_geometric_sum(self):
        # at k = a+1 every term is lam^i, so the sum is 1/(1-lam) = 1.25
        p = MittagLefflerParams(0.5, 0.5, 0.2)
        got = discrete_mittag_leffler(p, 1)
        assert got.real == pytest.approx(1.25, rel=1e-12)
        assert got == pytest.approx(brute_force_ml(0.5, 0.5, 0.2, 1, 200), rel=1e-12)

    def test_alpha_beta_one_is_geometric_sequence(self):
        # 2.44140625 = 0.8^-4
        p = MittagLefflerParams(1.0, 1.0, 0.2)
        got = discrete_mittag_leffler(p, 4)
        assert got.real == pytest.approx(2.44140625, rel=1e-12)
        assert got == pytest.approx(brute_force_ml(1.0, 1.0, 0.2, 4), rel=1e-12)

    @pytest.mark.parametrize("lam", [0.2, -0.5, 0.5j])
    def test_order_one_reduces_to_geometric(self, lam):
        p = MittagLefflerParams(1.0, 1.0, lam)
        for m in range(1, 21):
            expected = (1.0 - lam) ** (-m)
            got = discrete_mittag_leffler(p, m)
            assert abs(got - expected) <= 1e-10 * abs(expected)

    def test_lambda_zero_is_first_term(self):
        for alpha, beta in [(0.5, 0.5), (0.7, 1.3), (1.2, 0.4)]:
            p = MittagLefflerParams(alpha, beta, 0.0)
            for m in (1, 3, 7):
                expected = rising_factorial(m, beta - 1) / cmath.exp(log_gamma(beta))
                assert discrete_mittag_leffler(p, m) == pytest.approx(expected, rel=1e-13)

    def test_first_step_geometric_for_any_orders(self):
        lam = 0.37
        for alpha in (0.3, 0.5, 0.7, 1.2):
            for beta in (0.3, 0.5, 0.7, 1.2):
                p = MittagLefflerParams(alpha, beta, lam)
                got = discrete_mittag_leffler(p, 1)
                assert got.real == pytest.approx(1.0 / (1.0 - lam), rel=1e-10)

    def test_truncation_converged_against_long_oracle(self, rng):
        """The stopping rule loses nothing against a far longer summation."""
        for _ in range(25):
            alpha = float(rng.uniform(0.2, 1.5))
            beta = float(rng.uniform(0.2, 1.5))
            lam = complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3))
            if abs(lam) > 0.5:
                lam *= 0.5 / abs(lam)
            m = int(rng.integers(1, 12))
            got = discrete_mittag_leffler(MittagLefflerParams(alpha, beta, lam), m)
            ref = brute_force_ml(alpha, beta, lam, m)
            assert abs(got - ref) <= 1e-12 * (1.0 + abs(ref))

    def test_base_point_offsets(self):
        p = MittagLefflerParams(0.5, 0.5, 0.2, base_point=2.0)
        q = MittagLefflerParams(0.5, 0.5, 0.2, base_point=0.0)
        assert discrete_mittag_leffler(p, 3.0) == discrete_mittag_leffler(q, 1)

    def test_domain_errors(self):
        with pytest.raises(ParameterDomainError):
            MittagLefflerParams(0.5, 0.5, 1.0)
        with pytest.raises(ParameterDomainError):
            MittagLefflerParams(0.5, 0.5, -2.0)
        with pytest.raises(ValueError):
            MittagLefflerParams(-0.5, 0.5, 0.2)
        with pytest.raises(ValueError):
            MittagLefflerParams(0.5, 0.0, 0.2)

    def test_k_outside_index_set(self):
        p = MittagLefflerParams(0.5, 0.5, 0.2)
        with pytest.raises(ValueError):
            discrete_mittag_leffler(p, 0)
