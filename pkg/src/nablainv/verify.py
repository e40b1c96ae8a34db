"""Independent numerical oracles: forward series, contour quadrature, value checks.

Everything here deliberately avoids the analytic machinery it is used to
check: the forward transform is a plain truncated sum, the inverse is
trapezoidal quadrature of the contour integral, and the initial-value and
reindexing checks are direct evaluations.
"""

import cmath
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, PoleAtOneError, TruncationWarning
from .inversion import FractionalSumForm
from .rational import RationalFunction
from .special import step_offset

FORWARD_TOL = 1e-12
FORWARD_NMAX = 100_000
_CONSECUTIVE_SMALL = 5
_CONSECUTIVE_GROWING = 50

__all__ = [
    "CausalSequence",
    "forward_transform",
    "numeric_inverse",
    "initial_value",
    "z_correspondence",
    "roc_contains",
    "orientation_check",
    "default_rho",
]


@dataclass(frozen=True)
class CausalSequence:
    """A sequence on {a+1, a+2, ...}: a base point and an evaluation rule."""

    base_point: float
    fn: object  # callable k -> complex

    def __call__(self, k):
        step_offset(k, self.base_point)  # validates k
        return complex(self.fn(k))

    @classmethod
    def from_closed_form(cls, cf):
        return cls(cf.base_point, cf.evaluate_complex)


def forward_transform(seq, s, tol=FORWARD_TOL, n_max=FORWARD_NMAX):
    """Truncated sum of (1-s)^(k-1) f(k+a) over k >= 1.

    Stops once five consecutive increments fall below tol * (1 + |sum|);
    hitting n_max first emits TruncationWarning.  Fifty consecutive growing
    increments raise ConvergenceError (s is outside the ROC).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = seq.base_point
    w = 1.0 - complex(s)
    total = 0j
    wp = 1.0 + 0j
    small = growing = 0
    last_mag = None
    for k in range(1, n_max + 1):
        inc = wp * seq(a + k)
        total += inc
        wp *= w
        mag = abs(inc)
        if mag < tol * (1.0 + abs(total)):
            small += 1
            if small >= _CONSECUTIVE_SMALL:
                return total
        else:
            small = 0
        if last_mag is not None and mag > last_mag and mag > tol:
            growing += 1
            if growing >= _CONSECUTIVE_GROWING:
                raise ConvergenceError(
                    f"forward series diverges at s = {s} (|1-s| = {abs(w):g})"
                )
        else:
            growing = 0
        last_mag = mag
    warnings.warn(
        f"forward series truncated at {n_max} terms before meeting tol = {tol:g}",
        TruncationWarning,
        stacklevel=2,
    )
    return total


def _evaluator(F):
    if isinstance(F, (RationalFunction, FractionalSumForm)):
        return F.evaluate
    return F


def default_rho(F):
    """min(0.5, 0.9 * distance from 1 to the nearest singularity of F).

    For a rational function the singularities are its poles; for a fractional
    sum they are the principal-branch pole radii |lam|^(1/alpha) and the
    branch point at the origin.  Callables without structure get 0.5.
    """
    if isinstance(F, RationalFunction):
        dist = F.distance_of_poles_to_one()
    elif isinstance(F, FractionalSumForm):
        dist = 1.0  # branch point at s = 0
        for atom in F.atoms:
            if atom.lam != 0:
                dist = min(dist, abs(1.0 - abs(atom.lam) ** (1.0 / atom.alpha)))
    else:
        return 0.5
    if dist == float("inf"):
        return 0.5
    return min(0.5, 0.9 * dist)


def numeric_inverse(F, k, a=0.0, rho=None, nodes=None, roc=None):
    """Contour-quadrature inversion of F at step k.

    Substituting w = 1 - s turns the clockwise contour around (1, 0j) into the
    standard anticlockwise coefficient-extraction circle |w| = rho, giving

        f(k) = (1/2 pi) * integral_0^{2 pi}
               F(1 - rho e^{j t}) rho^{-(k-a-1)} e^{-j (k-a-1) t} dt,

    evaluated by the trapezoid rule, which converges geometrically for
    periodic analytic integrands.  ``nodes`` must be at least 4(k-a) to keep
    aliasing below the leading coefficients.
    """
    m = step_offset(k, a)
    if rho is None:
        rho = default_rho(F)
    if not 0 < rho:
        raise ValueError("rho must be positive")
    if nodes is None:
        nodes = max(256, 8 * m)
    if nodes < 4 * m:
        raise ValueError(f"nodes = {nodes} is below the anti-aliasing bound {4 * m}")
    disk = roc.disk_radius() if roc is not None else None
    if roc is not None and (disk is None or rho >= disk):
        raise ValueError(
            f"rho = {rho:g} does not fit inside the region of convergence "
            f"({roc.describe()})"
        )
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    w = rho * np.exp(1j * theta)
    if roc is not None and not all(roc.contains(1.0 - wi) for wi in w):
        raise ValueError("quadrature circle leaves the region of convergence")
    if isinstance(F, RationalFunction):
        s_vals = 1.0 - w
        den = F.denominator(s_vals)
        if np.any(den == 0):
            raise ValueError("quadrature circle passes through a pole")
        values = F.numerator(s_vals) / den
    else:
        fe = _evaluator(F)
        values = np.array([fe(1.0 - wi) for wi in w], dtype=complex)
    kernel = rho ** (-(m - 1)) * np.exp(-1j * (m - 1) * theta)
    return complex(np.mean(values * kernel))


def initial_value(F):
    """f(a+1) = lim_{s->1} F(s), evaluated directly when s = 1 is regular."""
    if isinstance(F, RationalFunction):
        if F.has_pole_at_one():
            raise PoleAtOneError()
        return F.evaluate(1.0)
    if isinstance(F, FractionalSumForm):
        return sum((atom.coefficient / (1.0 - atom.lam) for atom in F.atoms), start=0j)
    v = complex(F(1.0))
    if not (cmath.isfinite(v)):
        raise PoleAtOneError()
    return v


def z_correspondence(seq, s, tol=FORWARD_TOL):
    """Residual of the reindexing identity between the two transform sums.

    With g(k) = f(k+1) and z^{-1} = 1 - s, the z-style sum over k >= 0 of
    (1-s)^k g(k+a) and the nabla sum over k >= 1 of (1-s)^(k-1) f(k+a) are the
    same series; both are summed to a matched truncation length and the
    absolute difference is returned (zero up to rounding).
    """
    a = seq.base_point
    w = 1.0 - complex(s)

    nabla_total = 0j
    wp = 1.0 + 0j
    small = growing = 0
    last_mag = None
    n_used = 0
    for k in range(1, FORWARD_NMAX + 1):
        inc = wp * seq(a + k)
        nabla_total += inc
        wp *= w
        n_used = k
        mag = abs(inc)
        if mag < tol * (1.0 + abs(nabla_total)):
            small += 1
            if small >= _CONSECUTIVE_SMALL:
                break
        else:
            small = 0
        if last_mag is not None and mag > last_mag and mag > tol:
            growing += 1
            if growing >= _CONSECUTIVE_GROWING:
                raise ConvergenceError(
                    f"forward series diverges at s = {s} (|1-s| = {abs(w):g})"
                )
        else:
            growing = 0
        last_mag = mag

    z_total = 0j
    wp = 1.0 + 0j
    for k in range(0, n_used):
        z_total += wp * seq(k + 1 + a)
        wp *= w
    return abs(nabla_total - z_total)


def roc_contains(roc, s):
    """Conjunction of the region's primitive membership predicates."""
    return roc.contains(s)


def orientation_check():
    """Contour-orientation self-test on the impulse pair (F = 1 -> f(a+1) = 1).

    The sign convention of the quadrature is fixed by the clockwise contour in
    s becoming anticlockwise in w = 1 - s; a flipped orientation would return
    the k = a+1 value as 0 instead of 1.  Raises ConvergenceError on failure.
    """
    got = numeric_inverse(lambda s: 1.0 + 0j, 1, a=0.0, rho=0.5, nodes=64)
    if abs(got - 1.0) > 1e-12:
        raise ConvergenceError(
            f"orientation self-test failed: impulse pair returned {got}"
        )
