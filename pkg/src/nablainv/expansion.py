"""Partial fraction expansion of rational F(s) over its complex poles."""

from dataclasses import dataclass

from .errors import PoleAtOneError
from .polynomial import series_divide

__all__ = ["PartialFractionExpansion", "expand"]


@dataclass(frozen=True)
class PartialFractionExpansion:
    """F(s) split into (1-s)-power, simple-pole, and repeated-pole parts.

    impulse_part    : tuple of (shift n, coefficient c) meaning c * (1-s)^n
    simple_terms    : tuple of (pole s_i, residue r_i) meaning r_i / (s - s_i)
    multiple_terms  : tuple of (pole lam, order i, q_i) meaning q_i / (s - lam)^i;
                      for each repeated pole all orders 1..N are present
                      (zero coefficients included).
    """

    impulse_part: tuple
    simple_terms: tuple
    multiple_terms: tuple

    def evaluate(self, s):
        """Reconstruct F(s) from the expansion terms."""
        s = complex(s)
        total = 0j
        for n, c in self.impulse_part:
            total += c * (1.0 - s) ** n
        for pole, r in self.simple_terms:
            total += r / (s - pole)
        for pole, order, q in self.multiple_terms:
            total += q / (s - pole) ** order
        return total


def expand(rf):
    """Partial fraction expansion of a rational function.

    Simple-pole residues come from the deflated denominator evaluated at the
    pole.  For an order-N pole, the coefficients q_i are the Taylor
    coefficients of the cancelled quotient (s - lam)^N F(s) around the pole
    (q_i is the coefficient of (s - lam)^(N-i)), computed by exact polynomial
    recentering followed by power-series division -- the same numbers as the
    repeated-differentiation limit formula, without numerical differentiation.

    An improper rational is first divided; the polynomial quotient is
    rewritten in powers of (1 - s) and returned as the impulse part, since
    (1-s)^n is the transform of a delta at step n+1.
    """
    if rf.has_pole_at_one():
        raise PoleAtOneError()

    num, den, poles = rf._reduced
    impulse = ()
    if num.degree >= den.degree and not num.is_zero():
        quotient, num = num.divmod(den)
        in_w = quotient.in_one_minus_w()
        impulse = tuple(
            (n, complex(c)) for n, c in enumerate(in_w.coeffs) if c != 0
        )

    simple = []
    multiple = []
    for rc in poles:
        lam, mult = rc.value, rc.multiplicity
        deflated = den
        for _ in range(mult):
            deflated = deflated.deflate(lam)
        # Taylor coefficients of num/deflated at s = lam + t.
        g = series_divide(num.shifted(lam), deflated.shifted(lam), mult - 1)
        if mult == 1:
            simple.append((lam, complex(g[0])))
        else:
            for order in range(1, mult + 1):
                multiple.append((lam, order, complex(g[mult - order])))

    return PartialFractionExpansion(impulse, tuple(simple), tuple(multiple))
