"""Inversion strategies: values from the series at s=1, closed forms from poles.

Three routes recover the causal sequence of a rational F(s):

* ``invert_inside`` sums the residue at the order-(k-a) pole the kernel
  (1-s)^(a-k) places at s = 1.  That residue is, up to the orientation sign,
  the coefficient of w^(k-a-1) in F(1-w), so the whole k-grid drops out of one
  power-series division -- no repeated differentiation.
* ``invert_outside`` sums residues at the finite poles of F itself, which for
  a rational F is exactly its partial fraction expansion mapped term by term
  onto geometric and rising-factorial-times-geometric sequences.
* ``invert_partial_fractions`` is the table route: expand, then map each atom.

The last two produce a symbolic ClosedFormSequence, evaluable at any causal
step; fractional-power sums go through ``invert_fractional`` instead, whose
atoms map onto discrete Mittag-Leffler terms.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterDomainError, PoleAtOneError, RealnessError
from .expansion import expand
from .rational import DiskAroundOne, OriginExclusion, Roc
from .special import (
    MittagLefflerParams,
    discrete_mittag_leffler,
    rising_factorial,
    step_offset,
)

REALNESS_TOL = 1e-9
POLE_ONE_GUARD = 1e-9

__all__ = [
    "ImpulseTerm",
    "GeometricTerm",
    "PolyGeometricTerm",
    "MittagLefflerTerm",
    "ClosedFormSequence",
    "FractionalAtom",
    "FractionalSumForm",
    "invert_inside",
    "invert_outside",
    "invert_partial_fractions",
    "invert_fractional",
]


def _num(x):
    x = complex(x)
    if x.imag == 0:
        return f"{x.real:g}" if x.real >= 0 else f"({x.real:g})"
    return f"({x.real:g}{x.imag:+g}j)"


@dataclass(frozen=True)
class ImpulseTerm:
    """coefficient * delta(k - a - 1 - shift)."""

    coefficient: complex
    shift: int

    def value(self, m):
        return self.coefficient if m == self.shift + 1 else 0j

    def describe(self):
        off = f"-{self.shift + 1}" if self.shift + 1 else ""
        return f"{_num(self.coefficient)}*delta(k-a{off})"


@dataclass(frozen=True)
class GeometricTerm:
    """coefficient * (1 - pole)^-(k-a); requires pole != 1."""

    coefficient: complex
    pole: complex

    def __post_init__(self):
        if abs(1.0 - self.pole) <= POLE_ONE_GUARD:
            raise PoleAtOneError()

    def value(self, m):
        return self.coefficient * (1.0 - self.pole) ** (-m)

    def describe(self):
        return f"{_num(self.coefficient)}*{_num(1 - self.pole)}^-(k-a)"


@dataclass(frozen=True)
class PolyGeometricTerm:
    """coefficient * rising(k-a, order-1) / ((order-1)! (1-pole)^(k-a+order-1))."""

    coefficient: complex
    pole: complex
    order: int

    def __post_init__(self):
        if abs(1.0 - self.pole) <= POLE_ONE_GUARD:
            raise PoleAtOneError()
        if self.order < 1:
            raise ValueError("order must be >= 1")

    def value(self, m):
        n = self.order
        return (
            self.coefficient
            * rising_factorial(m, n - 1)
            / (math.factorial(n - 1) * (1.0 - self.pole) ** (m + n - 1))
        )

    def describe(self):
        n = self.order
        if n == 1:
            return f"{_num(self.coefficient)}*{_num(1 - self.pole)}^-(k-a)"
        return (
            f"{_num(self.coefficient)}*rising(k-a,{n - 1})"
            f"/({math.factorial(n - 1)}*{_num(1 - self.pole)}^(k-a+{n - 1}))"
        )


@dataclass(frozen=True)
class MittagLefflerTerm:
    """coefficient * F_{alpha,beta}(lambda, k, a) (discrete Mittag-Leffler)."""

    coefficient: complex
    params: MittagLefflerParams

    def value(self, m):
        p = self.params
        return self.coefficient * discrete_mittag_leffler(
            MittagLefflerParams(p.alpha, p.beta, p.lam, 0.0), m
        )

    def describe(self):
        p = self.params
        return (
            f"{_num(self.coefficient)}*ML(alpha={p.alpha:g},beta={p.beta:g},"
            f"lambda={_num(p.lam)};k-a)"
        )


@dataclass(frozen=True)
class ClosedFormSequence:
    """A causal sequence written as a finite sum of symbolic terms.

    Defined on the index set {a+1, a+2, ...} where a is ``base_point``.
    ``evaluate`` returns the real value and rejects a significant imaginary
    residue (conjugate terms of a real problem must cancel);
    ``evaluate_complex`` skips that check for genuinely complex data.
    """

    base_point: float
    terms: tuple

    def evaluate_complex(self, k):
        m = step_offset(k, self.base_point)
        return sum((t.value(m) for t in self.terms), start=0j)

    def evaluate(self, k):
        m = step_offset(k, self.base_point)
        parts = [t.value(m) for t in self.terms]
        v = sum(parts, start=0j)
        # conjugate terms cancel to rounding of the summands, which may dwarf
        # the sum itself (large residues at close conjugate poles)
        scale = max(1.0, abs(v.real), max((abs(p) for p in parts), default=0.0))
        if abs(v.imag) > REALNESS_TOL * scale:
            raise RealnessError(
                f"imaginary residue {v.imag:.3e} at k = {k}; term set is not "
                "conjugate-consistent"
            )
        return v.real

    def sample(self, ks):
        return np.array([self.evaluate(k) for k in ks])

    def describe(self):
        if not self.terms:
            return "0"
        return " + ".join(t.describe() for t in self.terms)

    def __str__(self):
        return f"f(k) = {self.describe()}  on k in {{a+1, a+2, ...}}, a = {self.base_point:g}"


def invert_inside(rf, k_max, a=0.0):
    """Values f(a+1)..f(a+k_max) via the residue at the contour's inner pole.

    The kernel (1-s)^(a-k) has an order-(k-a) pole at s = 1; the (negated)
    residue there equals the coefficient of w^(k-a-1) in F(1-w), so the values
    are exactly the leading series coefficients of F at s = 1.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    return rf.series_at_one(k_max - 1)


def invert_outside(rf, a=0.0):
    """Closed form from the residues at the finite poles of rational F.

    A simple pole s_n with residue r_n contributes r_n/(1-s_n)^(k-a); an
    order-N pole contributes its partial-fraction coefficients q_1..q_N mapped
    onto rising-factorial-times-geometric terms, the same decomposition the
    residue derivative formula produces.  Any polynomial (improper) part
    becomes impulses, which the finite-pole residues cannot see.
    """
    return _sequence_from_expansion(expand(rf), a)


def invert_partial_fractions(rf, a=0.0):
    """Closed form via partial fraction expansion and the pair table."""
    return _sequence_from_expansion(expand(rf), a)


def _sequence_from_expansion(pfe, a):
    terms = []
    for n, c in pfe.impulse_part:
        terms.append(ImpulseTerm(c, n))
    for pole, r in pfe.simple_terms:
        terms.append(GeometricTerm(r, pole))
    for pole, order, q in pfe.multiple_terms:
        terms.append(PolyGeometricTerm(q, pole, order))
    return ClosedFormSequence(float(a), tuple(terms))


@dataclass(frozen=True)
class FractionalAtom:
    """coefficient * s^(alpha-beta) / (s^alpha - lam), alpha, beta > 0, |lam| < 1."""

    coefficient: complex
    alpha: float
    beta: float
    lam: complex

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0):
            raise ValueError("alpha and beta must be positive")
        if abs(self.lam) >= 1:
            raise ParameterDomainError(
                f"|lambda| = {abs(self.lam):g} >= 1 is outside the invertible range"
            )

    def evaluate(self, s):
        s = complex(s)
        return self.coefficient * s ** (self.alpha - self.beta) / (s**self.alpha - self.lam)


@dataclass(frozen=True)
class FractionalSumForm:
    """F(s) as a finite sum of fractional-power atoms."""

    atoms: tuple

    def evaluate(self, s):
        return sum((atom.evaluate(s) for atom in self.atoms), start=0j)

    def __call__(self, s):
        return self.evaluate(s)

    def roc(self):
        """Unit disk around 1, punctured at the origin up to each pole radius.

        The principal-branch pole of s^alpha - lam sits at |s| = |lam|^(1/alpha),
        so |s| must exceed every such radius.
        """
        constraints = [DiskAroundOne(1.0)]
        for atom in self.atoms:
            if atom.lam != 0:
                constraints.append(OriginExclusion(abs(atom.lam) ** (1.0 / atom.alpha)))
        return Roc(tuple(constraints))


def invert_fractional(form, a=0.0):
    """One discrete Mittag-Leffler term per fractional atom."""
    terms = tuple(
        MittagLefflerTerm(
            atom.coefficient,
            MittagLefflerParams(atom.alpha, atom.beta, atom.lam, float(a)),
        )
        for atom in form.atoms
    )
    return ClosedFormSequence(float(a), terms)
