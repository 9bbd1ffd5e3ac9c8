"""Noncommutative Laurent polynomials in three q-commuting exponentials.

An exponent vector v = (v1, v2, v3) denotes the Weyl-ordered exponential
e^(v1*S1 + v2*S2 + v3*S3), where the generators satisfy

    [S1, S2] = [S2, S3] = [S3, S1] = i*pi*hbar,      q = e^(-i*pi*hbar).

Baker-Campbell-Hausdorff then gives the product rule

    X^u * X^v = Q^(SIGMA * omega(u, v)) * X^(u+v),   Q = q^(1/2),

with the cyclic symplectic pairing omega below.  SIGMA = -1 is the unique
sign for which the monodromy quadruple multiplies to q^(-1/2) times the
identity; families.sign_oracle re-derives this at test time so the constant
cannot silently rot.
"""

from __future__ import annotations

from .classical import ClassicalElement, parameter_bridge
from .errors import DivergentLimit
from .scalars import GR_I, GR_ONE, GaussianRational, Scalar, join_terms

SIGMA = -1

ZERO3 = (0, 0, 0)


def omega(u, v) -> int:
    """Antisymmetric pairing induced by the S-commutators."""
    return (
        (u[0] * v[1] - u[1] * v[0])
        + (u[1] * v[2] - u[2] * v[1])
        + (u[2] * v[0] - u[0] * v[2])
    )


class TorusElement:
    """Finite sum of Scalar-weighted Weyl monomials X^v."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for vec, scalar in terms.items():
                if not isinstance(scalar, Scalar):
                    scalar = _as_scalar_coeff(scalar)
                if not scalar.is_zero():
                    clean[tuple(vec)] = scalar
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({ZERO3: Scalar.one()})

    @classmethod
    def from_scalar(cls, scalar):
        return cls({ZERO3: _as_scalar_coeff(scalar)})

    @classmethod
    def monomial(cls, vec, scalar=None):
        return cls({tuple(vec): Scalar.one() if scalar is None else scalar})

    @classmethod
    def gen(cls, i, power=1):
        """e^(power * S_i) for i in 1..3."""
        vec = [0, 0, 0]
        vec[i - 1] = power
        return cls.monomial(vec)

    # -- additive structure ---------------------------------------------------

    def __add__(self, other):
        other = as_torus(other)
        terms = dict(self.terms)
        for vec, scalar in other.terms.items():
            acc = terms.get(vec)
            scalar = scalar if acc is None else acc + scalar
            if scalar.is_zero():
                terms.pop(vec, None)
            else:
                terms[vec] = scalar
        out = TorusElement.__new__(TorusElement)
        out.terms = terms
        return out

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-as_torus(other))

    def __rsub__(self, other):
        return as_torus(other) + (-self)

    def __neg__(self):
        out = TorusElement.__new__(TorusElement)
        out.terms = {vec: -scalar for vec, scalar in self.terms.items()}
        return out

    # -- multiplicative structure ---------------------------------------------

    def mul_with_sign(self, other, sigma):
        other = as_torus(other)
        terms = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                vec = (u[0] + v[0], u[1] + v[1], u[2] + v[2])
                scalar = cu * cv * Scalar.unit(0, sigma * omega(u, v))
                acc = terms.get(vec)
                if acc is not None:
                    scalar = acc + scalar
                if scalar.is_zero():
                    terms.pop(vec, None)
                else:
                    terms[vec] = scalar
        out = TorusElement.__new__(TorusElement)
        out.terms = terms
        return out

    def __mul__(self, other):
        return self.mul_with_sign(other, SIGMA)

    def __rmul__(self, other):
        return as_torus(other).mul_with_sign(self, SIGMA)

    def __pow__(self, n: int):
        if n == 0:
            return TorusElement.one()
        base = self if n > 0 else self.inverse()
        out = TorusElement.one()
        for _ in range(abs(n)):
            out = out * base
        return out

    def inverse(self):
        """Inverse of a single Weyl monomial (omega(v, -v) = 0)."""
        if len(self.terms) != 1:
            raise ValueError("only torus monomials are invertible")
        vec, scalar = next(iter(self.terms.items()))
        return TorusElement({tuple(-x for x in vec): scalar.monomial_inverse()})

    # -- predicates ------------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            other = as_torus(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((v, s) for v, s in self.terms.items()))

    def is_central(self):
        """Central iff every support vector lies on the diagonal v1=v2=v3."""
        return all(v[0] == v[1] == v[2] for v in self.terms)

    def is_scalar(self):
        return all(v == ZERO3 for v in self.terms)

    def scalar_part(self) -> Scalar:
        return self.terms.get(ZERO3, Scalar.zero())

    # -- substitutions, limits, images ------------------------------------------

    def substitute(self, unit_subs=None, gen_rescales=(0, 0, 0)):
        """Apply unit substitutions and generator eps-rescalings.

        gen_rescales m declares e^(S_i) -> eps^(m_i) e^(S_i), so the term X^v
        gains eps exponent m . v.  Unit substitutions act on each Scalar.
        """
        unit_subs = unit_subs or {}
        out_terms = {}
        m1, m2, m3 = gen_rescales
        for vec, scalar in self.terms.items():
            if unit_subs:
                scalar = scalar.substitute_units(unit_subs)
            shift = m1 * vec[0] + m2 * vec[1] + m3 * vec[2]
            scalar = scalar.eps_shift(shift)
            if not scalar.is_zero():
                acc = out_terms.get(vec)
                out_terms[vec] = scalar if acc is None else acc + scalar
        return TorusElement(out_terms)

    def eps_limit(self):
        """eps -> 0 termwise; divergent monomials are collected and reported."""
        terms = {}
        divergent = []
        for vec in sorted(self.terms):
            try:
                lim = self.terms[vec].limit_eps()
            except DivergentLimit:
                divergent.append(vec)
                continue
            if not lim.is_zero():
                terms[vec] = lim
        if divergent:
            raise DivergentLimit(
                f"divergent monomials at exponents {divergent}", terms=divergent
            )
        return TorusElement(terms)

    def classicalize(self) -> ClassicalElement:
        """q -> 1 image in the commutative shear ring, through the unit bridge."""
        out = ClassicalElement.zero()
        for vec, scalar in self.terms.items():
            flat = Scalar.zero()  # q2 -> 1, accumulating collided terms
            for e, c in scalar.terms.items():
                flat = flat + Scalar({(0,) + e[1:]: c})
            image = parameter_bridge(flat)
            mono = ClassicalElement.exp((2 * vec[0], 2 * vec[1], 2 * vec[2], 0, 0, 0))
            out = out + image * mono
        return out

    def q_invert(self):
        """Formal bar map q2 -> q2^-1 applied to the normal form."""
        return TorusElement(
            {vec: scalar.q_invert() for vec, scalar in self.terms.items()}
        )

    def has_eps(self):
        return any(s.has_eps() for s in self.terms.values())

    # -- canonical text -----------------------------------------------------------

    def text(self):
        if not self.terms:
            return "0"
        return join_terms(
            _torus_term_text(vec, self.terms[vec]) for vec in sorted(self.terms)
        )

    def __repr__(self):
        return f"<TorusElement {self.text()}>"


def as_torus(value) -> TorusElement:
    if isinstance(value, TorusElement):
        return value
    if isinstance(value, (int, Scalar, GaussianRational)):
        return TorusElement.from_scalar(value)
    raise TypeError(f"cannot coerce {value!r} to TorusElement")


def _as_scalar_coeff(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, int):
        return Scalar.from_int(value)
    if isinstance(value, GaussianRational):
        return Scalar.from_coeff(value)
    raise TypeError(f"cannot coerce {value!r} to Scalar")


def _torus_term_text(vec, scalar):
    factors = []
    for name, power in zip(("e1", "e2", "e3"), vec):
        if power == 1:
            factors.append(name)
        elif power:
            factors.append(f"{name}^{power}")
    if not factors:
        return scalar.text()
    # The printed product e1^a*e2^b*e3^c re-multiplies with an ordering
    # factor; compensate the coefficient so the text parses back equal.
    ordering = vec[0] * vec[1] + vec[1] * vec[2] - vec[0] * vec[2]
    scalar = scalar * Scalar.unit(0, -SIGMA * ordering)
    body = "*".join(factors)
    if scalar.is_one():
        return body
    if (-scalar).is_one():
        return "-" + body
    if len(scalar.terms) == 1:
        return f"{scalar.text()}*{body}"
    return f"({scalar.text()})*{body}"


def u0_element() -> TorusElement:
    """The central unit u0 = -i e^(-S1-S2-S3)."""
    return TorusElement({(-1, -1, -1): Scalar({(0, 0, 0, 0, 0): -GR_I})})


def u0_inverse() -> TorusElement:
    return u0_element().inverse()


def ordered_exp(v1, v2, v3) -> TorusElement:
    """Left-to-right product e^(v1 S1) e^(v2 S2) e^(v3 S3).

    Differs from the Weyl monomial X^v by an explicit power of Q; formulas
    quoted with factored exponentials are entered through this helper.
    """
    out = TorusElement.one()
    for i, power in enumerate((v1, v2, v3), start=1):
        if power:
            out = out * TorusElement.gen(i, power)
    return out


# Frequently used elements.
def q_scalar(power=1) -> TorusElement:
    """Q^power as a torus element (Q = q^(1/2))."""
    return TorusElement.from_scalar(Scalar.unit(0, power))


def i_scalar() -> TorusElement:
    return TorusElement.from_scalar(Scalar.i())
