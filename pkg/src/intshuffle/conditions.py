"""Necessary-condition checkers and ideal-membership certificates.

Every expanded product of one-variable elements lies in the ideal generated
by the two arity-2 products

    g1 = 2q z1^2 - (1 + q1 + q2 - 2q + q1 q + q2 q + q^2) z1 z2 + 2q z2^2
    g2 = (1 - q1)(1 - q2)(1 - q)(z1 + z2),          q = q1 q2,

inside the full Laurent ring in z1..zk.  The key identity is the kernel
decomposition

    2 * omega_num(zm, zn) = (zm - zn) g1(zm, zn) + zm zn g2(zm, zn),

which routes any cross-block kernel factor through (g1, g2).

`ideal_certificate` builds explicit cofactors (A, B) with
expand(word) = A g1 + B g2.  The construction expands the product over the
placements of the last letter with everything held over the common
denominator V = prod_{i<j}(z_i - z_j): placements at z1 or z2 go through
the kernel decomposition, any other placement recurses into the prefix
word (whose certificate keeps z1, z2 in place).  The resulting cofactors
have denominator V, so a repair pass walks the linear factors f of V and
shifts (A, B) by a multiple of (g2, -g1) until both are divisible by f,
then divides f out; solvability at each step follows from g1 and g2 being
coprime modulo every z_i - z_j.  `verify_ideal_certificate` is the
authority on the result.

Wheel conditions: an element of arity >= 3 must vanish whenever
{z1/z2, z2/z3, z3/z1} = {q1, q2, 1/q}; both the direct substitution form
and the two-ideal reduction form are provided and agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from .errors import ArityTooSmall, IdentityViolated, NotDivisible
from .generators import GeneratorWord, WordLike, as_word
from .poly import (
    ONE,
    Q1,
    Q2,
    LaurentPoly,
    exact_div,
    relabel_z,
    render,
    substitute,
    z,
)
from .shuffle import ShuffleElement, omega_numerator, shuffle_word

_Q = Q1 * Q2
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class IdealGenerators:
    g1: LaurentPoly
    g2: LaurentPoly


@lru_cache(maxsize=None)
def ideal_generators() -> IdealGenerators:
    g1 = (
        2 * _Q * z(1) ** 2
        - (1 + Q1 + Q2 - 2 * _Q + Q1 * _Q + Q2 * _Q + _Q * _Q) * z(1) * z(2)
        + 2 * _Q * z(2) ** 2
    )
    g2 = (1 - Q1) * (1 - Q2) * (1 - _Q) * (z(1) + z(2))
    return IdealGenerators(g1, g2)


# -- wheel conditions ---------------------------------------------------------


def wheel_check(element: ShuffleElement) -> bool:
    """Vanishing under both ratio assignments; vacuous below arity 3.

    By symmetry it is enough to pin the first three variables: substitute
    (z1, z2, z3) = (q1 q2 t, q2 t, t) and (q1 q2 t, q1 t, t), with z3 kept
    as the free parameter t, and demand both images vanish identically.
    """
    if element.arity < 3:
        return True
    p = element.poly
    first = substitute(p, {"z1": _Q * z(3), "z2": Q2 * z(3)})
    if first:
        return False
    second = substitute(p, {"z1": _Q * z(3), "z2": Q1 * z(3)})
    return not second


def ideal_wheel_check(element: ShuffleElement) -> bool:
    """Membership in both wheel ideals, by reduction along the generators.

    Reduces modulo (q1 z1 - z2, q2 z2 - z3) via z2 := q1 z1, z3 := q2 z2 and
    modulo (q2 z1 - z2, q1 z2 - z3) via z2 := q2 z1, z3 := q1 z2; agrees with
    `wheel_check` on every input.
    """
    if element.arity < 3:
        raise ArityTooSmall("the wheel ideals live in arity >= 3")
    p = element.poly
    first = substitute(p, {"z2": Q1 * z(1), "z3": Q1 * Q2 * z(1)})
    if first:
        return False
    second = substitute(p, {"z2": Q2 * z(1), "z3": Q1 * Q2 * z(1)})
    return not second


# -- kernel decomposition -------------------------------------------------------


@dataclass(frozen=True)
class OmegaDecomposition:
    """The cleared identity 2*omega_num = (z1 - z2) g1 + z1 z2 g2."""

    omega_num: LaurentPoly
    g1: LaurentPoly
    g2: LaurentPoly

    def holds(self) -> bool:
        lhs = 2 * self.omega_num
        rhs = (z(1) - z(2)) * self.g1 + z(1) * z(2) * self.g2
        return lhs == rhs


def omega_decomposition() -> OmegaDecomposition:
    gens = ideal_generators()
    record = OmegaDecomposition(omega_numerator(1, 2), gens.g1, gens.g2)
    if not record.holds():
        raise IdentityViolated("kernel decomposition failed to verify")
    return record


# -- ideal certificates ---------------------------------------------------------


@dataclass(frozen=True)
class IdealCertificate:
    """Asserts expand(target) == A*g1 + B*g2 over the full Laurent ring.

    The target is either a generator word (expanded on demand) or an
    explicit shuffle element.
    """

    target: GeneratorWord | ShuffleElement
    A: LaurentPoly
    B: LaurentPoly

    def target_poly(self) -> LaurentPoly:
        if isinstance(self.target, GeneratorWord):
            return shuffle_word(self.target.exponents).poly
        return self.target.poly

    def to_json(self) -> str:
        if isinstance(self.target, GeneratorWord):
            target = list(self.target.exponents)
        else:
            target = render(self.target.poly)
        payload = {
            "schema": 1,
            "target": target,
            "A": render(self.A),
            "B": render(self.B),
        }
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "IdealCertificate":
        from .expr import as_element, parse_poly

        payload = json.loads(text)
        if payload.get("schema") != 1:
            raise ValueError("unsupported certificate schema")
        raw = payload["target"]
        if isinstance(raw, str):
            target: GeneratorWord | ShuffleElement = as_element(parse_poly(raw))
        else:
            target = GeneratorWord(tuple(raw))
        return cls(target, parse_poly(payload["A"]), parse_poly(payload["B"]))


def verify_ideal_certificate(cert: IdealCertificate) -> bool:
    gens = ideal_generators()
    return cert.A * gens.g1 + cert.B * gens.g2 == cert.target_poly()


@lru_cache(maxsize=None)
def _vandermonde_pairs(k: int) -> tuple[tuple[int, int], ...]:
    return tuple(
        (i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)
    )


@lru_cache(maxsize=None)
def _vandermonde(k: int) -> LaurentPoly:
    out = ONE
    for i, j in _vandermonde_pairs(k):
        out = out * (z(i) - z(j))
    return out


@lru_cache(maxsize=None)
def _cofactors(word: tuple[int, ...]) -> tuple[LaurentPoly, LaurentPoly]:
    k = len(word)
    if k == 2:
        # Directly from the kernel decomposition applied to both placements:
        # A is the symmetrization of the letter monomials, B the divided
        # antisymmetrization (exactly divisible by z1 - z2).
        d1, d2 = word
        m = z(1, d1) * z(2, d2)
        m_swap = z(1, d2) * z(2, d1)
        a = _HALF * (m + m_swap)
        b = _HALF * z(1) * z(2) * exact_div(m - m_swap, z(1) - z(2))
        return (a, b)

    prefix = word[:-1]
    d_last = word[-1]
    gens = ideal_generators()
    vandermonde = _vandermonde(k)
    a_hat = LaurentPoly.zero()
    b_hat = LaurentPoly.zero()
    prefix_poly = shuffle_word(prefix).poly

    for b_var in range(1, k + 1):
        others = [i for i in range(1, k + 1) if i != b_var]
        p_rel = relabel_z(
            prefix_poly, {i + 1: others[i] for i in range(k - 1)}
        )
        multiplier = vandermonde
        for a_var in others:
            multiplier = exact_div(multiplier, z(a_var) - z(b_var))
        if b_var <= 2:
            # Kernel factor against the other special variable routes the
            # placement through the decomposition of omega(z_c, z_b).
            c_var = 3 - b_var
            carried = p_rel * z(b_var, d_last)
            for a_var in others:
                if a_var != c_var:
                    carried = carried * omega_numerator(a_var, b_var)
            # the g1 half keeps no (z_c - z_b) denominator, so restore the
            # factor that `multiplier` already divided out
            a_hat = a_hat + _HALF * carried * multiplier * (z(c_var) - z(b_var))
            b_hat = b_hat + _HALF * z(1) * z(2) * carried * multiplier
        else:
            sub_a, sub_b = _cofactors(prefix)
            mapping = {i + 1: others[i] for i in range(k - 1)}
            carried = z(b_var, d_last) * multiplier
            for a_var in others:
                carried = carried * omega_numerator(a_var, b_var)
            a_hat = a_hat + relabel_z(sub_a, mapping) * carried
            b_hat = b_hat + relabel_z(sub_b, mapping) * carried

    # Repair pass: make both cofactors divisible by each linear factor of the
    # common denominator, then divide it out.
    for i, j in _vandermonde_pairs(k):
        f = z(i) - z(j)
        merge = {f"z{j}": z(i)}
        a_mod = substitute(a_hat, merge)
        g2_mod = substitute(gens.g2, merge)
        h = exact_div(a_mod, g2_mod)
        a_hat = exact_div(a_hat - h * gens.g2, f)
        b_hat = exact_div(b_hat + h * gens.g1, f)
    return (a_hat, b_hat)


def ideal_certificate(word: WordLike | GeneratorWord) -> IdealCertificate:
    """Cofactors (A, B) with expand(word) == A*g1 + B*g2, arity >= 2."""
    w = as_word(word)
    if w.arity < 2:
        raise ArityTooSmall("ideal membership needs arity >= 2")
    a, b = _cofactors(w.exponents)
    return IdealCertificate(w, a, b)


# -- corollary divisibility ------------------------------------------------------


def corollary_check(element: ShuffleElement) -> tuple[bool, LaurentPoly | None]:
    """Divisibility of the z2 := -z1 image by (1 + q1)(1 + q2)(1 + q).

    Returns (True, cofactor) on success and (False, None) otherwise.
    """
    if element.arity < 2:
        raise ArityTooSmall("the divisibility condition needs arity >= 2")
    image = substitute(element.poly, {"z2": -z(1)})
    divisor = (1 + Q1) * (1 + Q2) * (1 + _Q)
    try:
        return (True, exact_div(image, divisor))
    except NotDivisible:
        return (False, None)
