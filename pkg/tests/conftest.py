"""Shared builders for the test suite."""

import numpy as np
import pytest

from nablainv import Polynomial, RationalFunction


def rational_from_factors(numerator_coeffs, pole_multiplicities):
    """Rational function with the denominator built from (root, multiplicity)."""
    roots = [r for r, m in pole_multiplicities for _ in range(m)]
    return RationalFunction(Polynomial(numerator_coeffs), Polynomial.from_roots(roots))


def example1():
    """9/((s+1)^2 (s-2)); denominator expanded as s^3 - 3s - 2."""
    return RationalFunction(Polynomial([9.0]), Polynomial([-2.0, -3.0, 0.0, 1.0]))


def example1_closed_form(m):
    """(-1)^(k-a) - 2^(a-k) + 3(a-k) 2^(a-k-1) at m = k - a."""
    return (-1.0) ** m - 2.0 ** (-m) + 3.0 * (-m) * 2.0 ** (-m - 1)


def random_real_rational_from_factors(rng, max_degree=6, min_dist_from_one=0.15,
                                      max_multiplicity=3, separation=0.3):
    """Strictly proper real-coefficient rational built from known pole factors.

    Complex poles come in conjugate pairs so the coefficients stay real;
    repeated poles exercise the multiple-pole paths.
    """
    degree = int(rng.integers(1, max_degree + 1))
    roots = []

    def acceptable(z):
        if abs(z - 1.0) < min_dist_from_one:
            return False
        return all(abs(z - r) > separation for r in roots)

    guard = 0
    while len(roots) < degree and guard < 500:
        guard += 1
        remaining = degree - len(roots)
        mult = int(rng.integers(1, max_multiplicity + 1))
        if remaining >= 2 and rng.random() < 0.4:
            mult = min(mult, remaining // 2)
            if mult == 0:
                continue
            z = complex(rng.uniform(-1.2, 2.2), rng.uniform(0.18, 1.3))
            if acceptable(z) and acceptable(z.conjugate()):
                roots.extend([z] * mult + [z.conjugate()] * mult)
        else:
            mult = min(mult, remaining)
            z = complex(rng.uniform(-1.4, 2.6), 0.0)
            if acceptable(z):
                roots.extend([z] * mult)
    if not roots:
        roots = [complex(rng.uniform(1.4, 2.4), 0.0)]
    num_degree = int(rng.integers(0, len(roots)))
    num = rng.uniform(-5.0, 5.0, num_degree + 1)
    while abs(num[-1]) < 0.2:
        num[-1] = float(rng.uniform(0.2, 5.0))
    return RationalFunction(Polynomial(num), Polynomial.from_roots(roots)), roots


def random_coefficient_rational(rng, max_degree=6, min_dist_from_one=0.15, bound=5.0):
    """Strictly proper rational with all coefficients drawn uniformly in [-5, 5].

    Resamples until every pole keeps the required distance from s = 1.
    """
    for _ in range(200):
        degree = int(rng.integers(1, max_degree + 1))
        den = rng.uniform(-bound, bound, degree + 1)
        if abs(den[-1]) < 0.3:
            den[-1] = float(rng.uniform(0.3, bound))
        num_degree = int(rng.integers(0, degree))
        num = rng.uniform(-bound, bound, num_degree + 1)
        while abs(num[-1]) < 0.2:
            num[-1] = float(rng.uniform(0.2, bound))
        rf = RationalFunction(Polynomial(num), Polynomial(den))
        if rf.distance_of_poles_to_one() >= min_dist_from_one:
            return rf
    raise RuntimeError("could not draw an admissible rational")


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
