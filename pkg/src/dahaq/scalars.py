"""Exact coefficient ring for the whole engine.

A Scalar is a Gaussian-rational Laurent polynomial in five commuting central
units: q2 (the square root of q), k0, k1, u1 and the degeneration tracker
eps.  All engine identities are decided by exact normal-form arithmetic in
this ring; there is no floating point anywhere.

Unit exponents are plain integers.  q itself never appears as a unit: it is
q2^2, so half-integer powers of q cost nothing.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DivergentLimit,
    NonMonomialImage,
    NotAMonomial,
    NotInvertibleCoefficient,
)

UNIT_NAMES = ("q2", "k0", "k1", "u1", "eps")
Q2, K0, K1, U1, EPS = range(5)
ZERO_EXP = (0, 0, 0, 0, 0)


class GaussianRational:
    """Exact complex rational re + im*i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def inverse(self):
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise NotInvertibleCoefficient("zero coefficient has no inverse")
        return GaussianRational(self.re / norm, -self.im / norm)

    def power(self, n: int) -> "GaussianRational":
        base = self if n >= 0 else self.inverse()
        out = GR_ONE
        for _ in range(abs(n)):
            out = out * base
        return out

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, GaussianRational)
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


def _coerce_coeff(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError(f"cannot use {value!r} as a coefficient")


class Scalar:
    """Finite sum of unit monomials with Gaussian-rational coefficients.

    Terms map a 5-tuple of unit exponents (q2, k0, k1, u1, eps) to a nonzero
    coefficient.  Equal scalars always hold equal term dictionaries, which is
    what makes zero-residual testing and canonical printing exact.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = _coerce_coeff(coeff)
                if not coeff.is_zero():
                    clean[tuple(exps)] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({ZERO_EXP: GR_ONE})

    @classmethod
    def from_int(cls, n):
        return cls({ZERO_EXP: GaussianRational(n)})

    @classmethod
    def from_coeff(cls, coeff):
        return cls({ZERO_EXP: _coerce_coeff(coeff)})

    @classmethod
    def i(cls):
        return cls({ZERO_EXP: GR_I})

    @classmethod
    def unit(cls, index, power=1):
        exps = [0, 0, 0, 0, 0]
        exps[index] = power
        return cls({tuple(exps): GR_ONE})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        other = _as_scalar(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps)
            coeff = coeff if acc is None else acc + coeff
            if coeff.is_zero():
                terms.pop(exps, None)
            else:
                terms[exps] = coeff
        out = Scalar.__new__(Scalar)
        out.terms = terms
        return out

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_scalar(other))

    def __rsub__(self, other):
        return _as_scalar(other) + (-self)

    def __neg__(self):
        out = Scalar.__new__(Scalar)
        out.terms = {exps: -coeff for exps, coeff in self.terms.items()}
        return out

    def __mul__(self, other):
        other = _as_scalar(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = (
                    e1[0] + e2[0],
                    e1[1] + e2[1],
                    e1[2] + e2[2],
                    e1[3] + e2[3],
                    e1[4] + e2[4],
                )
                coeff = c1 * c2
                acc = terms.get(exps)
                if acc is not None:
                    coeff = acc + coeff
                if coeff.is_zero():
                    terms.pop(exps, None)
                else:
                    terms[exps] = coeff
        out = Scalar.__new__(Scalar)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n == 0:
            return Scalar.one()
        base = self if n > 0 else self.monomial_inverse()
        out = Scalar.one()
        for _ in range(abs(n)):
            out = out * base
        return out

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {ZERO_EXP: GR_ONE}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Scalar.from_coeff(other)
        return isinstance(other, Scalar) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- monomial operations -----------------------------------------------

    def is_monomial(self):
        return len(self.terms) == 1

    def monomial(self):
        """Return (exponents, coefficient) of a one-term scalar."""
        if len(self.terms) != 1:
            raise NotAMonomial(f"{self.text()!r} has {len(self.terms)} terms")
        return next(iter(self.terms.items()))

    def monomial_inverse(self):
        exps, coeff = self.monomial()
        inv = coeff.inverse()
        return Scalar({tuple(-e for e in exps): inv})

    def bar(self):
        """x -> x^-1 - x for an invertible monomial x."""
        return self.monomial_inverse() - self

    # -- substitutions and limits -------------------------------------------

    def substitute_units(self, subs):
        """Ring homomorphism replacing units by invertible monomial images.

        subs maps unit index -> Scalar; images must be single-term invertible
        monomials so that negative exponents substitute consistently.
        """
        images = {}
        for index, image in subs.items():
            image = _as_scalar(image)
            if not image.is_monomial():
                raise NonMonomialImage(
                    f"substitution image {image.text()!r} is not a monomial"
                )
            images[index] = image
        out = Scalar.zero()
        for exps, coeff in self.terms.items():
            kept = list(exps)
            factor = Scalar.from_coeff(coeff)
            for index, image in images.items():
                power = exps[index]
                kept[index] = 0
                if power:
                    factor = factor * image ** power
            out = out + factor * Scalar({tuple(kept): GR_ONE})
        return out

    def eps_shift(self, k: int):
        """Multiply by eps^k (exponent bookkeeping only)."""
        if k == 0:
            return self
        out = Scalar.__new__(Scalar)
        out.terms = {
            (e[0], e[1], e[2], e[3], e[4] + k): c for e, c in self.terms.items()
        }
        return out

    def eps_degrees(self):
        return {e[4] for e in self.terms}

    def limit_eps(self):
        """Drop positive-eps terms; error if any eps exponent is negative."""
        bad = sorted(e for e in self.terms if e[4] < 0)
        if bad:
            raise DivergentLimit(
                f"divergent terms {[_term_text(e, self.terms[e]) for e in bad]}",
                terms=bad,
            )
        out = Scalar.__new__(Scalar)
        out.terms = {e: c for e, c in self.terms.items() if e[4] == 0}
        return out

    def has_eps(self):
        return any(e[4] for e in self.terms)

    def q_invert(self):
        """Formal bar map q2 -> q2^-1 on the normal form."""
        out = Scalar.__new__(Scalar)
        out.terms = {(-e[0],) + e[1:]: c for e, c in self.terms.items()}
        return out

    # -- canonical text ------------------------------------------------------

    def text(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms):
            parts.append((exps, self.terms[exps]))
        return join_terms(_term_text(e, c) for e, c in parts)

    def __repr__(self):
        return f"<Scalar {self.text()}>"


def _as_scalar(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return Scalar.from_coeff(value)
    raise TypeError(f"cannot coerce {value!r} to Scalar")


# -- canonical text helpers ---------------------------------------------------
#
# The printed form is part of the tool contract: it is deterministic and the
# expression language parses it back to an equal value.  Rational parts with
# a denominator d print as "n*d^-1" so the grammar needs no '/' token.


def _frac_text(value: Fraction) -> str:
    sign = "-" if value < 0 else ""
    value = abs(value)
    if value.denominator == 1:
        return f"{sign}{value.numerator}"
    if value.numerator == 1:
        return f"{sign}{value.denominator}^-1"
    return f"{sign}{value.numerator}*{value.denominator}^-1"


def coeff_text(coeff: GaussianRational) -> str:
    """Canonical, re-parseable text of a Gaussian rational."""
    if coeff.im == 0:
        return _frac_text(coeff.re)
    if coeff.re == 0:
        if coeff.im == 1:
            return "i"
        if coeff.im == -1:
            return "-i"
        return f"{_frac_text(coeff.im)}*i"
    imag = "i" if abs(coeff.im) == 1 else f"{_frac_text(abs(coeff.im))}*i"
    op = "+" if coeff.im > 0 else "-"
    return f"({_frac_text(coeff.re)}{op}{imag})"


def _unit_factors(exps):
    factors = []
    for name, power in zip(UNIT_NAMES, exps):
        if power == 1:
            factors.append(name)
        elif power:
            factors.append(f"{name}^{power}")
    return factors


def _term_text(exps, coeff):
    factors = _unit_factors(exps)
    if not factors:
        return coeff_text(coeff)
    if coeff == GR_ONE:
        return "*".join(factors)
    if coeff == -GR_ONE:
        return "-" + "*".join(factors)
    return "*".join([coeff_text(coeff)] + factors)


def join_terms(term_texts) -> str:
    """Join signed term strings with ' + ' / ' - '."""
    out = []
    for text in term_texts:
        if not out:
            out.append(text)
        elif text.startswith("-"):
            out.append(" - " + text[1:])
        else:
            out.append(" + " + text)
    return "".join(out)


# Handy module-level constants.
ONE = Scalar.one()
I = Scalar.i()
Q = Scalar.unit(Q2)
QINV = Scalar.unit(Q2, -1)
k0 = Scalar.unit(K0)
k1 = Scalar.unit(K1)
u1 = Scalar.unit(U1)
eps = Scalar.unit(EPS)
