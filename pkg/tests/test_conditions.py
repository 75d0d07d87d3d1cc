"""Wheel conditions, kernel decomposition, ideal and divisibility certificates."""

import random
from fractions import Fraction

import pytest

from intshuffle.conditions import (
    IdealCertificate,
    corollary_check,
    ideal_certificate,
    ideal_generators,
    ideal_wheel_check,
    omega_decomposition,
    verify_ideal_certificate,
    wheel_check,
)
from intshuffle.errors import ArityTooSmall
from intshuffle.generators import GeneratorWord
from intshuffle.poly import Q1, Q2, LaurentPoly, substitute, z
from intshuffle.shuffle import ShuffleElement, omega_numerator, shuffle_word, sym

Q = Q1 * Q2


def test_ideal_generators_match_products():
    gens = ideal_generators()
    assert gens.g1 == shuffle_word([0, 0]).poly
    assert z(1) * z(2) * gens.g2 == 2 * shuffle_word([1, 0]).poly - (
        z(1) + z(2)
    ) * gens.g1


def test_wheel_check_on_words():
    assert wheel_check(shuffle_word([0, 0, 0]))
    assert wheel_check(shuffle_word([2, 1, 0]))
    assert wheel_check(shuffle_word([1, 0, 2, 1]))


def test_wheel_check_vacuous_below_arity_three():
    assert wheel_check(shuffle_word([1, 0]))
    assert wheel_check(ShuffleElement(0, LaurentPoly.constant(3)))


def test_wheel_check_rejects_constants():
    assert not wheel_check(ShuffleElement(3, LaurentPoly.constant(1)))


def test_ideal_wheel_check_examples():
    assert ideal_wheel_check(shuffle_word([1, 0, 0]))
    assert not ideal_wheel_check(ShuffleElement(3, LaurentPoly.constant(2)))
    with pytest.raises(ArityTooSmall):
        ideal_wheel_check(shuffle_word([0, 0]))


def _random_symmetric(rng: random.Random, k: int) -> ShuffleElement:
    mono = LaurentPoly.constant(rng.randint(1, 3))
    for i in range(1, k + 1):
        mono = mono * z(i, rng.randint(-1, 2))
    if rng.random() < 0.5:
        mono = mono * Q1 ** rng.randint(0, 2) * Q2 ** rng.randint(0, 1)
    return ShuffleElement(k, sym(mono, k))


def test_wheel_formulations_agree():
    rng = random.Random(20)
    agree = 0
    for trial in range(50):
        if trial % 2 == 0:
            word = [rng.randint(0, 2) for _ in range(3)]
            element = shuffle_word(word)  # member: both formulations true
        else:
            element = _random_symmetric(rng, 3)  # generic: usually not
        assert wheel_check(element) == ideal_wheel_check(element)
        agree += 1
    assert agree == 50


def test_omega_decomposition_identity():
    record = omega_decomposition()
    assert record.holds()
    lhs = 2 * omega_numerator(1, 2)
    rhs = (z(1) - z(2)) * record.g1 + z(1) * z(2) * record.g2
    assert lhs == rhs


def test_omega_decomposition_at_unit_parameters():
    # g2 vanishes at q1 = q2 = 1, leaving 2*omega_num = (z1 - z2) g1
    record = omega_decomposition()
    at_unit = {"q1": 1, "q2": 1}
    assert not substitute(record.g2, at_unit)
    assert substitute(2 * record.omega_num, at_unit) == substitute(
        (z(1) - z(2)) * record.g1, at_unit
    )


def test_omega_decomposition_swapped_orientation():
    record = omega_decomposition()
    swapped = substitute(record.omega_num, {"z1": z(2), "z2": z(1)})
    assert 2 * swapped == (z(2) - z(1)) * record.g1 + z(1) * z(2) * record.g2


def test_ideal_certificate_unit_word():
    cert = ideal_certificate([0, 0])
    assert cert.A == LaurentPoly.constant(1)
    assert cert.B == LaurentPoly.zero()
    assert verify_ideal_certificate(cert)


def test_ideal_certificate_letter_word():
    cert = ideal_certificate([1, 0])
    assert cert.A == Fraction(1, 2) * (z(1) + z(2))
    assert cert.B == Fraction(1, 2) * z(1) * z(2)
    assert verify_ideal_certificate(cert)


def test_ideal_certificate_arity_three():
    cert = ideal_certificate([0, 0, 0])
    assert verify_ideal_certificate(cert)
    cert = ideal_certificate([2, -1, 1])
    assert verify_ideal_certificate(cert)


def test_ideal_certificate_arity_error():
    with pytest.raises(ArityTooSmall):
        ideal_certificate([3])


def test_verify_rejects_zero_cofactors():
    cert = IdealCertificate(
        GeneratorWord((1, 0)), LaurentPoly.zero(), LaurentPoly.zero()
    )
    assert not verify_ideal_certificate(cert)


def test_ideal_certificate_json_round_trip():
    cert = ideal_certificate([1, 0, 1])
    back = IdealCertificate.from_json(cert.to_json())
    assert back.target == cert.target
    assert back.A == cert.A and back.B == cert.B
    assert verify_ideal_certificate(back)


def test_ideal_certificate_polynomial_target():
    # a target given as a canonical polynomial instead of a word
    gens = ideal_generators()
    cert = IdealCertificate(
        ShuffleElement(2, gens.g1), LaurentPoly.constant(1), LaurentPoly.zero()
    )
    assert verify_ideal_certificate(cert)
    back = IdealCertificate.from_json(cert.to_json())
    assert isinstance(back.target, ShuffleElement)
    assert verify_ideal_certificate(back)
    wrong = IdealCertificate(
        ShuffleElement(2, gens.g2), LaurentPoly.constant(1), LaurentPoly.zero()
    )
    assert not verify_ideal_certificate(wrong)


def test_corollary_on_generators():
    gens = ideal_generators()
    ok, cofactor = corollary_check(ShuffleElement(2, gens.g1))
    assert ok and cofactor == z(1) ** 2
    ok, cofactor = corollary_check(ShuffleElement(2, gens.g2))
    assert ok and cofactor == LaurentPoly.zero()


def test_corollary_on_words():
    ok, cofactor = corollary_check(shuffle_word([2, 1, 0]))
    assert ok and cofactor is not None
    divisor = (1 + Q1) * (1 + Q2) * (1 + Q)
    image = substitute(shuffle_word([2, 1, 0]).poly, {"z2": -z(1)})
    assert cofactor * divisor == image


def test_corollary_rejects_nonmembers():
    ok, cofactor = corollary_check(ShuffleElement(2, z(1) * z(2)))
    assert not ok and cofactor is None


def test_corollary_arity_error():
    with pytest.raises(ArityTooSmall):
        corollary_check(shuffle_word([4]))


def test_corollary_consistent_with_ideal_certificate():
    # substituting z2 := -z1 into A g1 + B g2 kills the g2 part, so the
    # divisibility cofactor is the substituted A times z1^2
    for word in ((1, 0), (2, 1), (0, -1)):
        cert = ideal_certificate(word)
        ok, cofactor = corollary_check(shuffle_word(word))
        assert ok
        assert cofactor == substitute(cert.A, {"z2": -z(1)}) * z(1) ** 2
