"""Exact scalar ring: arithmetic, evaluation, parsing, printing."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homyb import (
    EvalError,
    NonInvertibleError,
    ParamMismatchError,
    ParamSet,
    ParseError,
    Scalar,
    format_scalar,
    parse_scalar,
)
from conftest import PS2, PS3, monomials, random_assignment, scalars

import random


def S(text, params=PS3):
    return parse_scalar(text, params)


class TestArithmetic:
    def test_difference_of_squares(self):
        assert S("lam + nu") * S("lam - nu") == S("lam^2 - nu^2")

    def test_monomial_inverse_cancels(self):
        l = Scalar.variable(PS3, "l")
        assert l ** -2 == S("l^-2")
        assert (l ** -2) * (l ** 2) == Scalar.one(PS3)

    def test_two_term_laurent_sum(self):
        # lam*nu^-1 + lam^-1*nu, term map built by hand
        got = S("lam") * (S("nu") ** -1) + S("nu") * (S("lam") ** -1)
        assert got.terms == {
            (0, 1, -1): Fraction(1),
            (0, -1, 1): Fraction(1),
        }

    def test_neg_and_sub(self):
        a = S("2*lam - 3")
        assert a + (-a) == Scalar.zero(PS3)
        assert a - a == Scalar.zero(PS3)

    def test_int_pow_zero_and_positive(self):
        a = S("lam + 1")
        assert a ** 0 == Scalar.one(PS3)
        assert a ** 3 == a * a * a

    def test_negative_power_of_polynomial_rejected(self):
        with pytest.raises(NonInvertibleError):
            S("lam + 1") ** -1

    def test_param_set_mismatch(self):
        with pytest.raises(ParamMismatchError):
            S("lam", PS2) + S("lam", PS3)

    def test_int_coercion(self):
        assert 2 * S("lam") == S("2*lam")
        assert S("lam") + 1 == S("lam + 1")


class TestEvaluate:
    def test_direct_substitution(self):
        assert S("-lam*l^2").evaluate({"lam": 1, "l": 2}) == -4

    def test_zero_polynomial(self):
        assert Scalar.zero(PS3).evaluate({}) == 0

    def test_zero_at_negative_exponent(self):
        a = S("lam") * (S("nu") ** -1)
        with pytest.raises(EvalError):
            a.evaluate({"lam": 3, "nu": 0})

    def test_missing_assignment(self):
        with pytest.raises(EvalError):
            S("lam*nu").evaluate({"lam": 1})

    def test_unused_parameter_not_required(self):
        assert S("lam^2").evaluate({"lam": Fraction(1, 2)}) == Fraction(1, 4)

    def test_substitute_is_partial(self):
        a = S("lam*l^2 + nu")
        assert a.substitute({"l": 1}) == S("lam + nu")
        assert a.substitute({"l": 0}) == S("nu")

    def test_extend(self):
        small = parse_scalar("lam*nu", PS2)
        assert small.extend(PS3) == S("lam*nu")


class TestParser:
    def test_negated_square(self):
        got = S("-l^2")
        assert got.terms == {(2, 0, 0): Fraction(-1)}

    def test_rational_and_negative_exponent(self):
        ps = ParamSet(["k"])
        got = parse_scalar("1/2*k^-1 + 3", ps)
        assert got.terms == {(-1,): Fraction(1, 2), (0,): Fraction(3)}

    def test_commutativity_cancellation(self):
        assert parse_scalar("lam*nu - nu*lam", PS2).is_zero()

    def test_parentheses_and_unary_minus(self):
        assert S("-(lam - nu)") == S("nu - lam")
        assert S("(-l)^2") == S("l^2")

    def test_unknown_identifier(self):
        with pytest.raises(ParseError, match="unknown parameter"):
            S("zz + 1")

    def test_syntax_error_reports_position(self):
        with pytest.raises(ParseError) as err:
            S("lam + ")
        assert err.value.position == 6
        with pytest.raises(ParseError) as err:
            S("lam + ) + nu")
        assert err.value.position == 6

    def test_slash_outside_rational_literal(self):
        with pytest.raises(ParseError, match="rational literal"):
            S("lam/2")

    def test_non_integer_exponent(self):
        with pytest.raises(ParseError, match="integer"):
            S("l^lam")

    def test_no_implicit_multiplication(self):
        with pytest.raises(ParseError):
            S("2 lam")

    def test_zero_denominator(self):
        with pytest.raises(ParseError, match="zero denominator"):
            S("1/0")

    def test_negative_power_of_sum_rejected_at_parse_time(self):
        with pytest.raises(NonInvertibleError):
            S("(1 + l)^-1")

    def test_format_examples(self):
        assert format_scalar(Scalar.zero(PS3)) == "0"
        assert format_scalar(S("-l^2")) == "-l^2"
        ps = ParamSet(["k"])
        assert format_scalar(parse_scalar("3 + 1/2*k^-1", ps)) == "1/2*k^-1 + 3"


class TestProperties:
    @settings(max_examples=150)
    @given(scalars(), scalars(), scalars())
    def test_ring_laws(self, a, b, c):
        zero = Scalar.zero(PS2)
        one = Scalar.one(PS2)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero

    @given(monomials())
    def test_monomial_laurent_inverse(self, m):
        assert m * (m ** -1) == Scalar.one(PS2)

    @settings(max_examples=100)
    @given(scalars(), scalars(), scalars(), st.integers(0, 2 ** 32))
    def test_evaluation_is_ring_homomorphism(self, a, b, c, seed):
        point = random_assignment(PS2, random.Random(seed))
        lhs = (a * b + c).evaluate(point)
        assert lhs == a.evaluate(point) * b.evaluate(point) + c.evaluate(point)

    @settings(max_examples=200)
    @given(scalars(PS3))
    def test_parser_round_trip(self, s):
        assert parse_scalar(format_scalar(s), PS3) == s
