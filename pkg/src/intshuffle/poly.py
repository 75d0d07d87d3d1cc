"""Exact sparse Laurent-polynomial arithmetic over the rationals.

Values live in Q[q1^{±1}, q2^{±1}, z1^{±1}, ..., zk^{±1}]: the two parameter
variables q1, q2 and arity-indexed variables z1, z2, ...  Coefficients are
exact rationals (python int when integral, `fractions.Fraction` otherwise;
the two hash and compare consistently so term maps stay canonical).

Representation: a mapping from exponent tuples to nonzero coefficients.
Slot 0 of a tuple is the q1 exponent, slot 1 the q2 exponent, slot i+1 the
z_i exponent; trailing zeros are trimmed, so equal monomials always share a
single key and the zero polynomial is the empty map.

The parameter q of the algebra is never a variable: it is everywhere the
product q1*q2.

Monomial order (used for exact division and for canonical printing): graded
lexicographic on exponent vectors, scanning q1, q2, z1, ..., zk, taken after
shifting exponents to be nonnegative where well-foundedness matters.  The
canonical text rendering sorts terms descending in this order, prints
coefficients as reduced fractions and exponents as `q1^a q2^b z1^c ...`,
omitting exponent 1 and unit factors.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Mapping, Union

from . import _kernel
from .errors import NonInvertibleImage, NotDivisible

Coefficient = Union[int, Fraction]
Scalar = Union[int, Fraction, "LaurentPoly"]

_Q_SLOTS = 2


def _slot(name: str) -> int:
    """Map a variable name (q1, q2, z<i>) to its exponent-tuple slot."""
    if name == "q1":
        return 0
    if name == "q2":
        return 1
    if name.startswith("z") and name[1:].isdigit():
        index = int(name[1:])
        if index >= 1:
            return index + 1
    raise ValueError(f"unknown variable name {name!r}")


def _slot_name(slot: int) -> str:
    if slot == 0:
        return "q1"
    if slot == 1:
        return "q2"
    return f"z{slot - 1}"


def _trim(exps: list) -> tuple:
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _norm_coeff(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """An immutable exact Laurent polynomial."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Coefficient] | None = None):
        clean: dict = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = _norm_coeff(
                    coeff if isinstance(coeff, (int, Fraction)) else Fraction(coeff)
                )
                if not coeff:
                    continue
                key = _trim(list(mono))
                prev = clean.get(key)
                if prev is None:
                    clean[key] = coeff
                else:
                    total = prev + coeff
                    if total:
                        clean[key] = total
                    else:
                        del clean[key]
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        """Wrap a dict already in canonical form (kernel output)."""
        self = object.__new__(cls)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def constant(cls, c: Coefficient) -> "LaurentPoly":
        c = _norm_coeff(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def variable(cls, name: str, exponent: int = 1) -> "LaurentPoly":
        if exponent == 0:
            return cls.constant(1)
        slot = _slot(name)
        mono = [0] * (slot + 1)
        mono[slot] = exponent
        return cls._raw({tuple(mono): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: Coefficient = 1) -> "LaurentPoly":
        coeff = _norm_coeff(coeff)
        if not coeff:
            return cls.zero()
        width = max((_slot(n) for n, e in exps.items() if e), default=-1) + 1
        mono = [0] * width
        for name, e in exps.items():
            if e:
                mono[_slot(name)] = e
        return cls._raw({tuple(mono): coeff})

    # -- basic protocol ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == LaurentPoly.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        return render(self)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._raw(_kernel.impl.add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._raw(_kernel.impl.sub_terms(self.terms, other.terms))

    def __rsub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPoly._raw(_kernel.impl.sub_terms(other.terms, self.terms))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(_kernel.impl.neg_terms(self.terms))

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly.zero()
            return LaurentPoly._raw(_kernel.impl.scale_terms(self.terms, other))
        if isinstance(other, LaurentPoly):
            return LaurentPoly._raw(_kernel.impl.mul_terms(self.terms, other.terms))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return LaurentPoly.constant(1)
        base = self
        if n < 0:
            base = self.inverse_monomial()
            n = -n
        result = LaurentPoly.constant(1)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse_monomial(self) -> "LaurentPoly":
        """Inverse of a single-term polynomial; ValueError otherwise."""
        if len(self.terms) != 1:
            raise ValueError("only a single-term monomial is invertible")
        (mono, coeff), = self.terms.items()
        return LaurentPoly._raw(
            {_trim([-e for e in mono]): _norm_coeff(Fraction(1, 1) / coeff)}
        )

    # -- structure queries --------------------------------------------------

    def z_span(self) -> int:
        """Largest z-index that occurs (0 when no z variable occurs)."""
        span = 0
        for mono in self.terms:
            if len(mono) > _Q_SLOTS:
                width = len(mono)
                if width - _Q_SLOTS > span:
                    span = width - _Q_SLOTS
        return span

    def is_z_free(self) -> bool:
        return all(len(m) <= _Q_SLOTS for m in self.terms)

    def total_z_degrees(self) -> set[int]:
        """Set of total z-degrees over the terms (for homogeneity checks)."""
        return {sum(m[_Q_SLOTS:]) for m in self.terms} if self.terms else set()


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.constant(1)
Q1 = LaurentPoly.variable("q1")
Q2 = LaurentPoly.variable("q2")
Q = Q1 * Q2


def z(index: int, exponent: int = 1) -> LaurentPoly:
    """The variable z_index (1-based), optionally raised to an exponent."""
    if index < 1:
        raise ValueError("z-indices are 1-based")
    return LaurentPoly.variable(f"z{index}", exponent)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


# -- exact division ---------------------------------------------------------


def _min_exponents(terms: dict, width: int) -> list:
    mins = [0] * width
    first = True
    for mono in terms:
        for i in range(width):
            e = mono[i] if i < len(mono) else 0
            if first or e < mins[i]:
                mins[i] = e
        first = False
    return mins


def _shift_pad(terms: dict, shift: list, width: int) -> dict:
    out = {}
    for mono, c in terms.items():
        out[
            tuple(
                (mono[i] if i < len(mono) else 0) - shift[i] for i in range(width)
            )
        ] = c
    return out


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Quotient t with t*d == p exactly; raises NotDivisible otherwise.

    Both operands are Laurent-shifted to ordinary polynomials, divided by
    leading terms under the graded-lex order, and the quotient is shifted
    back.  The remainder must vanish.
    """
    if not d.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p.terms:
        return ZERO
    if len(d.terms) == 1:
        (mono, coeff), = d.terms.items()
        inv = _norm_coeff(Fraction(1, 1) / coeff)
        neg = _trim([-e for e in mono])
        return LaurentPoly._raw(_kernel.impl.mul_monomial(p.terms, neg, inv))
    binomial = _binomial_slots(d.terms)
    if binomial is not None:
        sa, sb, lead = binomial
        try:
            quotient = _kernel.impl.div_binomial(p.terms, sa, sb)
        except ValueError:
            raise NotDivisible(f"{render(d)} does not divide {render(p)}") from None
        if lead != 1:
            quotient = _kernel.impl.scale_terms(
                quotient, _norm_coeff(Fraction(1, 1) / lead)
            )
        return LaurentPoly._raw(quotient)

    width = max(len(m) for m in p.terms)
    width = max(width, max(len(m) for m in d.terms))
    sp = _min_exponents(p.terms, width)
    sd = _min_exponents(d.terms, width)
    num = _shift_pad(p.terms, sp, width)
    den = _shift_pad(d.terms, sd, width)

    def order(mono: tuple):
        return (sum(mono), mono)

    lead = max(den, key=order)
    lead_coeff = den[lead]
    # heap entries encode the monomial directly: entry[1:] are negated exponents
    heap = [(-sum(m),) + tuple(-e for e in m) for m in num]
    heapq.heapify(heap)
    quotient: dict = {}
    addmul_into = _kernel.impl.addmul_into
    while num:
        entry = heapq.heappop(heap)
        mono = tuple(-e for e in entry[1:])
        c = num.get(mono)
        if c is None:
            continue
        qm = tuple(a - b for a, b in zip(mono, lead))
        if any(e < 0 for e in qm):
            raise NotDivisible(f"{render(d)} does not divide {render(p)}")
        qc = _norm_coeff(c / lead_coeff if isinstance(c, Fraction) else Fraction(c) / lead_coeff)
        quotient[qm] = qc
        created = addmul_into(num, den, qm, -qc)
        for m in created:
            heapq.heappush(heap, (-sum(m),) + tuple(-e for e in m))
    back = [a - b for a, b in zip(sp, sd)]
    result = {}
    for mono, c in quotient.items():
        result[_trim([e + s for e, s in zip(mono, back)])] = c
    return LaurentPoly._raw(result)


def _binomial_slots(d_terms: dict):
    """Recognize a c*(v_a - v_b) divisor; returns (slot_a, slot_b, c) or None."""
    if len(d_terms) != 2:
        return None
    (m1, c1), (m2, c2) = d_terms.items()
    if c1 + c2 != 0:
        return None

    def pure_slot(m: tuple):
        found = None
        for i, e in enumerate(m):
            if e:
                if found is not None or e != 1:
                    return None
                found = i
        return found

    s1 = pure_slot(m1)
    s2 = pure_slot(m2)
    if s1 is None or s2 is None:
        return None
    return (s1, s2, c1)


# -- substitution and z-relabelling ------------------------------------------


def _coerce_poly(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.constant(value)
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


def substitute(p: LaurentPoly, images: Mapping[str, Scalar]) -> LaurentPoly:
    """Simultaneously replace variables by polynomials.

    Ring-homomorphism contract: distributes over + and *.  A variable that
    occurs with a negative exponent must map to an invertible (single-term)
    monomial, otherwise NonInvertibleImage is raised.
    """
    slot_images = {_slot(name): _coerce_poly(value) for name, value in images.items()}
    if not slot_images or not p.terms:
        return p
    power_cache: dict = {}

    def image_power(slot: int, e: int) -> LaurentPoly:
        key = (slot, e)
        got = power_cache.get(key)
        if got is None:
            img = slot_images[slot]
            if e < 0 and len(img.terms) != 1:
                raise NonInvertibleImage(
                    f"{_slot_name(slot)}^{e}: image is not an invertible monomial"
                )
            got = img**e
            power_cache[key] = got
        return got

    total: dict = {}
    for mono, coeff in p.terms.items():
        kept = list(mono)
        factors: list[LaurentPoly] = []
        for slot, e in enumerate(mono):
            if e and slot in slot_images:
                kept[slot] = 0
                factors.append(image_power(slot, e))
        term = LaurentPoly._raw({_trim(kept): coeff})
        for f in factors:
            term = term * f
        total = _kernel.impl.add_terms(total, term.terms)
    return LaurentPoly._raw(total)


def relabel_z(p: LaurentPoly, mapping: Mapping[int, int]) -> LaurentPoly:
    """Rename z-variables by an injective index map (key surgery, exact)."""
    if not mapping:
        return p
    if len(mapping) == 2:
        (i, ii), (j, jj) = mapping.items()
        if ii == j and jj == i and i != j:
            return LaurentPoly._raw(
                _kernel.impl.swap_z(p.terms, i + _Q_SLOTS - 1, j + _Q_SLOTS - 1)
            )
    if set(mapping.keys()) == set(mapping.values()):
        # a genuine permutation: identity fill keeps the slot map bijective
        width = max(mapping) + _Q_SLOTS
        perm = list(range(width))
        for index, target in mapping.items():
            perm[index + _Q_SLOTS - 1] = target + _Q_SLOTS - 1
        return LaurentPoly._raw(_kernel.impl.permute_slots(p.terms, tuple(perm)))
    out: dict = {}
    for mono, coeff in p.terms.items():
        width = len(mono)
        if width <= _Q_SLOTS:
            out[mono] = coeff
            continue
        new_width = width
        for i in range(_Q_SLOTS, width):
            if mono[i]:
                j = mapping.get(i - _Q_SLOTS + 1)
                if j is not None and j + _Q_SLOTS > new_width:
                    new_width = j + _Q_SLOTS
        exps = [0] * new_width
        exps[0] = mono[0]
        exps[1] = mono[1]
        for i in range(_Q_SLOTS, width):
            e = mono[i]
            if e:
                index = i - _Q_SLOTS + 1
                target = mapping.get(index, index)
                exps[target + _Q_SLOTS - 1] = e
        out[_trim(exps)] = coeff
    if len(out) != len(p.terms):
        raise ValueError("z-relabelling must be injective")
    return LaurentPoly._raw(out)


def permute_z(p: LaurentPoly, sigma: Mapping[int, int] | Iterable[int]) -> LaurentPoly:
    """Relabel z_i -> z_{sigma(i)} for a permutation sigma of {1..k}.

    sigma may be a dict (missing indices are fixed) or a sequence listing
    sigma(1), sigma(2), ...  Group-action contract:
    permute_z(permute_z(p, s), t) == permute_z(p, t∘s).
    """
    if not isinstance(sigma, Mapping):
        sigma = {i + 1: image for i, image in enumerate(sigma)}
    if set(sigma.values()) != set(sigma.keys()):
        raise ValueError("sigma is not a permutation")
    return relabel_z(p, dict(sigma))


def is_symmetric(p: LaurentPoly, k: int) -> bool:
    """True iff p is invariant under all adjacent z-transpositions of {1..k}."""
    if p.z_span() > k:
        raise ValueError(f"polynomial uses z-index above arity {k}")
    for i in range(1, k):
        if relabel_z(p, {i: i + 1, i + 1: i}).terms != p.terms:
            return False
    return True


# -- canonical rendering ------------------------------------------------------


def _sort_key(width: int):
    def key(item):
        mono = item[0]
        padded = mono + (0,) * (width - len(mono))
        return (sum(mono), padded)

    return key


def _coeff_str(c: Coefficient) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def render(p: LaurentPoly) -> str:
    """Canonical text form: descending monomial order, reduced fractions."""
    if not p.terms:
        return "0"
    width = max(len(m) for m in p.terms)
    pieces: list[str] = []
    for mono, coeff in sorted(p.terms.items(), key=_sort_key(width), reverse=True):
        factors = [
            _slot_name(slot) + (f"^{e}" if e != 1 else "")
            for slot, e in enumerate(mono)
            if e
        ]
        negative = coeff < 0
        mag = -coeff if negative else coeff
        if not factors:
            body = _coeff_str(mag)
        elif mag == 1:
            body = " ".join(factors)
        else:
            body = _coeff_str(mag) + " " + " ".join(factors)
        if not pieces:
            pieces.append("-" + body if negative else body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)


class RationalFunction:
    """A numerator/denominator pair, used transiently during expansion."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPoly, denominator: LaurentPoly):
        if not denominator.terms:
            raise ZeroDivisionError("rational function with zero denominator")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def __repr__(self) -> str:
        return f"RationalFunction(({self.numerator}) / ({self.denominator}))"

    def cancel(self) -> LaurentPoly:
        """Exact quotient numerator/denominator (NotDivisible if not exact)."""
        return exact_div(self.numerator, self.denominator)
