"""Expression grammar, classification, and pretty-print canonicity."""

import math

import pytest

from nablainv import (
    ExpressionSyntaxError,
    Kind,
    UnsupportedExpressionError,
    classify,
    parse_expression,
    pretty,
    reference_pairs,
)
from nablainv.parsing import Neg, Num, Pow, Var


class TestParseExamples:
    def test_rational_input(self):
        cls = classify(parse_expression("9/((s+1)^2*(s-2))"))
        assert cls.kind is Kind.RATIONAL
        assert cls.rational.denominator.degree == 3
        assert cls.rational.evaluate(1.0) == pytest.approx(-2.25)

    def test_fractional_input(self):
        cls = classify(parse_expression("1/(s^0.5-0.2) - s^0.2/(s^0.7-0.3)"))
        assert cls.kind is Kind.FRACTIONAL_SUM
        atoms = cls.fractional.atoms
        assert len(atoms) == 2
        assert (atoms[0].coefficient, atoms[0].alpha, atoms[0].beta) == (1, 0.5, 0.5)
        assert atoms[0].lam == pytest.approx(0.2)
        assert atoms[1].coefficient == -1
        assert atoms[1].alpha == pytest.approx(0.7)
        assert atoms[1].beta == pytest.approx(0.5)
        assert atoms[1].lam == pytest.approx(0.3)

    def test_irrational_rejected(self):
        with pytest.raises(UnsupportedExpressionError):
            parse_expression("1/(e^s-0.5)")
        with pytest.raises(UnsupportedExpressionError):
            parse_expression("1/(exp(s)-0.5)")
        with pytest.raises(UnsupportedExpressionError):
            parse_expression("sin(s)")


class TestGrammar:
    def test_power_binds_tighter_than_unary_minus(self):
        node = parse_expression("-s^2")
        assert isinstance(node, Neg) and isinstance(node.operand, Pow)

    def test_negative_exponent(self):
        node = parse_expression("s^-0.5")
        assert isinstance(node, Pow) and node.exponent == -0.5

    def test_constant_folding(self):
        assert parse_expression("2^-3") == Num(0.125)
        assert parse_expression("sin(0)") == Num(0.0)
        assert parse_expression("10/7").value.real == pytest.approx(10 / 7)

    def test_rational_exponent(self):
        node = parse_expression("s^(10/7)")
        assert isinstance(node, Pow)
        assert node.exponent == pytest.approx(10 / 7)

    def test_imaginary_literals(self):
        assert parse_expression("0.5j") == Num(0.5j)
        assert parse_expression("2*j").value == 2j
        assert parse_expression("pi").value.real == pytest.approx(math.pi)

    def test_scientific_notation(self):
        assert parse_expression("2e3") == Num(2000.0)

    def test_trivial_powers_normalize(self):
        assert parse_expression("s^1") == Var()
        assert parse_expression("s^0") == Num(1.0)

    def test_no_implicit_multiplication(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_expression("2 s")


class TestSyntaxErrors:
    def test_position_and_expectation(self):
        with pytest.raises(ExpressionSyntaxError) as err:
            parse_expression("9/((s+1)^2*(s-2")
        assert err.value.line == 1
        assert err.value.column == 16
        assert "')'" in err.value.expected

    def test_empty(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_expression("   ")

    def test_unknown_identifier(self):
        with pytest.raises(ExpressionSyntaxError) as err:
            parse_expression("1/(x-2)")
        assert "s" in err.value.expected

    def test_unexpected_character(self):
        with pytest.raises(ExpressionSyntaxError) as err:
            parse_expression("s + @")
        assert err.value.column == 5

    def test_division_by_constant_zero(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_expression("1/(2-2)")


class TestClassification:
    def test_pure_fractional_power_is_atom(self):
        cls = classify(parse_expression("1/s^1.5"))
        assert cls.kind is Kind.FRACTIONAL_SUM
        (atom,) = cls.fractional.atoms
        assert atom.lam == 0 and atom.beta == pytest.approx(1.5)

    def test_positive_fractional_power_is_candidate(self):
        assert classify(parse_expression("s^0.5")).kind is Kind.TABLE_CANDIDATE

    def test_squared_atom_is_candidate(self):
        cls = classify(parse_expression("1/(s^0.5-0.2)^2"))
        assert cls.kind is Kind.TABLE_CANDIDATE

    def test_linear_base_power_is_candidate(self):
        cls = classify(parse_expression("1/(1-0.5+0.5*s)^1.5"))
        assert cls.kind is Kind.TABLE_CANDIDATE

    def test_nonlinear_base_unsupported(self):
        cls = classify(parse_expression("(s^2+1)^0.5"))
        assert cls.kind is Kind.UNSUPPORTED
        assert "non-linear base" in cls.reason

    def test_every_reference_transform_is_classified(self):
        for tp in reference_pairs():
            cls = classify(parse_expression(tp.transform_text))
            assert cls.kind is not Kind.UNSUPPORTED, tp.transform_text

    def test_mixed_atom_and_rational_term(self):
        cls = classify(parse_expression("1/(s^0.5-0.2) + 1/(s-0.3)"))
        assert cls.kind is Kind.FRACTIONAL_SUM
        alphas = sorted(a.alpha for a in cls.fractional.atoms)
        assert alphas == [0.5, 1.0]

    def test_lambda_outside_unit_disk_raises(self):
        from nablainv import ParameterDomainError

        with pytest.raises(ParameterDomainError):
            classify(parse_expression("1/(s^0.5-2)"))


class TestPretty:
    CORPUS = [
        "9/((s+1)^2*(s-2))",
        "1/(s^0.5-0.2) - s^0.2/(s^0.7-0.3)",
        "-s^2+3*s-1/(2*s)",
        "(1-s)/(1-2*0.5*(1-s)+(1-s)^2)",
        "s^-1.5",
        "1/(s--0.5)",
    ] + [tp.transform_text for tp in reference_pairs()]

    @pytest.mark.parametrize("text", CORPUS)
    def test_roundtrip_idempotent(self, text):
        once = pretty(parse_expression(text))
        twice = pretty(parse_expression(once))
        assert once == twice

    @pytest.mark.parametrize("text", CORPUS)
    def test_roundtrip_preserves_ast(self, text):
        first = parse_expression(text)
        again = parse_expression(pretty(first))
        assert first == again

    def test_rendering(self):
        assert pretty(parse_expression("1/(s-0.3)")) == "1/(s-0.3)"
        assert pretty(parse_expression("(s+1)^2")) == "(s+1)^2"
