"""Expression language: parsing, typing, evaluation, round trips."""

import random
from fractions import Fraction

import pytest

from intshuffle.errors import ArityMismatch, ExprSyntaxError
from intshuffle.expr import as_element, eval_text, parse, parse_poly
from intshuffle.poly import Q1, Q2, LaurentPoly, render, z
from intshuffle.shuffle import ShuffleElement, shuffle_word


def test_word_literal():
    value = eval_text("sh[0,0]")
    assert isinstance(value, ShuffleElement)
    assert value.arity == 2
    assert value.poly == shuffle_word([0, 0]).poly


def test_empty_word_literal():
    value = eval_text("sh[]")
    assert value.arity == 0 and value.poly == LaurentPoly.constant(1)


def test_one_variable_monomials():
    assert eval_text("z^3").poly == z(1) ** 3
    assert eval_text("z^-2").poly == z(1) ** -2
    assert eval_text("z").poly == z(1)
    assert eval_text("z^0").poly == LaurentPoly.constant(1)


def test_scalars_and_sugar():
    assert eval_text("q") == Q1 * Q2
    assert eval_text("q1^2 q2") == Q1**2 * Q2
    assert eval_text("3/2") == LaurentPoly.constant(Fraction(3, 2))
    assert eval_text("2 - 3") == LaurentPoly.constant(-1)


def test_word_equals_fold_of_shuffles():
    assert eval_text("sh[0] * sh[0]").poly == eval_text("sh[0,0]").poly
    assert eval_text("z^1 * sh[0]").poly == shuffle_word([1, 0]).poly


def test_scalar_juxtaposition():
    value = eval_text("(z1+z2) sh[0,0]")
    assert value.poly == (z(1) + z(2)) * shuffle_word([0, 0]).poly
    value = eval_text("2 sh[1]")
    assert value.poly == 2 * z(1)


def test_module_action_expression_vanishes():
    # the first arity-3 rewrite, as an expression: lhs - rhs = 0
    lhs = eval_text("(z1+z2+z3) sh[0,0,0] - sh[1,0,0] - sh[0,1,0]")
    assert lhs.poly == shuffle_word([0, 0, 1]).poly
    diff = eval_text("(z1+z2+z3) sh[0,0,0] - sh[1,0,0] - sh[0,1,0] - sh[0,0,1]")
    assert not diff.poly


def test_precedence_juxt_tighter_than_star():
    # (2 sh[0]) * sh[0], not 2 (sh[0] * sh[0]) -- same value, different tree
    value = eval_text("2 sh[0] * sh[0]")
    assert value.poly == 2 * shuffle_word([0, 0]).poly
    # shuffle binds tighter than minus
    value = eval_text("sh[0] * sh[0] - sh[0,0]")
    assert not value.poly


def test_scalar_shuffle_coercion():
    value = eval_text("q1 * sh[0]")
    assert value.arity == 1 and value.poly == Q1


def test_parse_errors_carry_positions():
    with pytest.raises(ExprSyntaxError) as err:
        parse("sh[0,0] +")
    assert err.value.position == 9
    with pytest.raises(ExprSyntaxError) as err:
        parse("sh[0 0]")
    assert err.value.position == 5
    with pytest.raises(ExprSyntaxError) as err:
        parse("foo")
    assert err.value.position == 0
    with pytest.raises(ExprSyntaxError) as err:
        parse("z1 $ z2")
    assert err.value.position == 3


def test_arity_mismatch_is_parse_time():
    with pytest.raises(ArityMismatch):
        parse("sh[0,0] + sh[0]")
    with pytest.raises(ArityMismatch):
        parse("sh[0,0] + q1")
    with pytest.raises(ArityMismatch):
        parse("z1 * sh[0]")  # z-dependent scalar is not an element
    with pytest.raises(ArityMismatch):
        parse("(z1+z2+z3) sh[0,0]")  # scalar overruns the element arity
    with pytest.raises(ArityMismatch):
        parse("sh[0] sh[0]")  # juxtaposition of two elements
    with pytest.raises(ArityMismatch):
        parse("sh[0,0]^2")


def test_asymmetric_scaling_rejected_at_eval():
    with pytest.raises(ArityMismatch):
        eval_text("z1 sh[0,0]")


def test_as_element_symmetry_guard():
    assert as_element(eval_text("z1 + z2")).arity == 2
    with pytest.raises(ValueError):
        as_element(eval_text("z1 z2^2"))


def test_render_parse_round_trip_random():
    rng = random.Random(13)
    for _ in range(25):
        terms = {}
        for _ in range(rng.randint(0, 6)):
            mono = tuple(rng.randint(-2, 2) for _ in range(4))
            coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            terms[mono] = coeff
        p = LaurentPoly(terms)
        assert parse_poly(render(p)) == p


def test_parse_poly_rejects_elements():
    with pytest.raises(ArityMismatch):
        parse_poly("sh[0,0]")


def test_golden_round_trip():
    text = render(shuffle_word([0, 0]).poly)
    assert parse_poly(text) == shuffle_word([0, 0]).poly
