"""Commutative shear-coordinate layer.

Laurent ring in e^(s1), e^(s2), e^(s3) and the perimeter exponentials
e^(p1/2), e^(p2/2), e^(p3/2), with Gaussian-rational coefficients.  Exponents
of all six variables are stored doubled so that half steps stay integral:
a stored exponent d means e^((d/2) * var).

This layer carries the monodromy parameterisation, the geodesic trace
polynomials, the Fricke cubic and the Poisson structure, and is the classical
oracle against which the quantum layer is cross-checked.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import EpsPresent
from .matrices import Matrix2
from .scalars import (
    EPS,
    GR_I,
    GR_ONE,
    GaussianRational,
    Scalar,
    coeff_text,
    join_terms,
)

VAR_NAMES = ("s1", "s2", "s3", "p1", "p2", "p3")
ZERO6 = (0, 0, 0, 0, 0, 0)


class ClassicalElement:
    """Laurent polynomial in the shear and perimeter exponentials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if not isinstance(coeff, GaussianRational):
                    coeff = GaussianRational(coeff)
                if not coeff.is_zero():
                    clean[tuple(exps)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({ZERO6: GR_ONE})

    @classmethod
    def from_coeff(cls, coeff):
        return cls({ZERO6: coeff})

    @classmethod
    def exp(cls, doubled_exps):
        """Monomial e^(sum (d_i/2) var_i) for a doubled exponent 6-vector."""
        return cls({tuple(doubled_exps): GR_ONE})

    @classmethod
    def exp_s(cls, i, halves):
        exps = [0] * 6
        exps[i - 1] = halves
        return cls.exp(exps)

    @classmethod
    def exp_p(cls, i, halves):
        exps = [0] * 6
        exps[2 + i] = halves
        return cls.exp(exps)

    def __add__(self, other):
        other = _as_classical(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps)
            coeff = coeff if acc is None else acc + coeff
            if coeff.is_zero():
                terms.pop(exps, None)
            else:
                terms[exps] = coeff
        out = ClassicalElement.__new__(ClassicalElement)
        out.terms = terms
        return out

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_classical(other))

    def __rsub__(self, other):
        return _as_classical(other) + (-self)

    def __neg__(self):
        out = ClassicalElement.__new__(ClassicalElement)
        out.terms = {exps: -coeff for exps, coeff in self.terms.items()}
        return out

    def __mul__(self, other):
        other = _as_classical(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                coeff = c1 * c2
                acc = terms.get(exps)
                if acc is not None:
                    coeff = acc + coeff
                if coeff.is_zero():
                    terms.pop(exps, None)
                else:
                    terms[exps] = coeff
        out = ClassicalElement.__new__(ClassicalElement)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers need a monomial")
            exps, coeff = next(iter(self.terms.items()))
            base = ClassicalElement({tuple(-e for e in exps): coeff.inverse()})
            n = -n
        else:
            base = self
        out = ClassicalElement.one()
        for _ in range(n):
            out = out * base
        return out

    def is_zero(self):
        return not self.terms

    def inverse(self):
        """Monomial inverse; sums are not invertible here."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible")
        exps, coeff = next(iter(self.terms.items()))
        return ClassicalElement({tuple(-e for e in exps): coeff.inverse()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ClassicalElement.from_coeff(GaussianRational(other))
        return isinstance(other, ClassicalElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def partial_s(self, i):
        """Derivative with respect to s_i (doubled exponent d gives d/2)."""
        terms = {}
        for exps, coeff in self.terms.items():
            d = exps[i - 1]
            if d:
                terms[exps] = coeff * GaussianRational(Fraction(d, 2))
        return ClassicalElement(terms)

    def poisson(self, other):
        """{f, g} from {s1,s2} = {s2,s3} = {s3,s1} = 1; perimeters are Casimirs."""
        out = ClassicalElement.zero()
        for i in (1, 2, 3):
            j = i % 3 + 1
            out = out + self.partial_s(i) * other.partial_s(j)
            out = out - self.partial_s(j) * other.partial_s(i)
        return out

    def shift_shear(self):
        """Rewrite in shifted coordinates: substitute s_i -> s_i - p_i/2.

        Requires integer s-exponents (doubled even); the trace words this is
        applied to always close up to integral powers of e^(s_i).
        """
        terms = {}
        for exps, coeff in self.terms.items():
            new = list(exps)
            for i in range(3):
                if exps[i] % 2:
                    raise ValueError("shift needs integer s exponents")
                new[3 + i] -= exps[i] // 2
            key = tuple(new)
            acc = terms.get(key)
            coeff = coeff if acc is None else acc + coeff
            if coeff.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = coeff
        out = ClassicalElement.__new__(ClassicalElement)
        out.terms = terms
        return out

    def text(self):
        if not self.terms:
            return "0"
        return join_terms(
            _classical_term_text(exps, self.terms[exps]) for exps in sorted(self.terms)
        )

    def __repr__(self):
        return f"<ClassicalElement {self.text()}>"


def _as_classical(value) -> ClassicalElement:
    if isinstance(value, ClassicalElement):
        return value
    if isinstance(value, int):
        return ClassicalElement.from_coeff(GaussianRational(value))
    if isinstance(value, GaussianRational):
        return ClassicalElement.from_coeff(value)
    raise TypeError(f"cannot coerce {value!r} to ClassicalElement")


def _classical_term_text(exps, coeff):
    factors = []
    for name, d in zip(VAR_NAMES, exps):
        if d == 0:
            continue
        if d % 2 == 0:
            power = d // 2
            factors.append(name if power == 1 else f"{name}^{power}")
        else:
            factors.append(f"{name}^({d}/2)")
    if not factors:
        return coeff_text(coeff)
    body = "exp(" + "+".join(factors) + ")"
    if coeff == GR_ONE:
        return body
    if coeff == -GR_ONE:
        return "-" + body
    return f"{coeff_text(coeff)}*{body}"


# -- parameter bridge ---------------------------------------------------------


def parameter_bridge(x: Scalar) -> ClassicalElement:
    """Map a unit scalar into the classical ring.

    k0 -> -i e^(-p3/2), k1 -> -i e^(-p2/2), u1 -> -i e^(-p1/2), q2 -> 1.
    The eps tracker has no classical meaning and is rejected.
    """
    out = ClassicalElement.zero()
    minus_i = GaussianRational(0, -1)
    for exps, coeff in x.terms.items():
        if exps[EPS]:
            raise EpsPresent("eps has no classical image")
        nk0, nk1, nu1 = exps[1], exps[2], exps[3]
        factor = coeff * minus_i.power(nk0 + nk1 + nu1)
        doubled = (0, 0, 0, -nu1, -nk1, -nk0)
        out = out + ClassicalElement({doubled: factor})
    return out


# -- generator matrices -------------------------------------------------------


def rle_matrices():
    """Right, left and edge matrix constructors over the classical ring."""
    one = ClassicalElement.one()
    zero = ClassicalElement.zero()
    R = Matrix2(one, one, -one, zero)
    L = Matrix2(zero, one, -one, -one)

    def E(var_index):
        # var_index: 1..3 for s_i, 4..6 for p_{i-3}
        exps = [0] * 6
        exps[var_index - 1] = 1
        plus = ClassicalElement.exp(exps)
        exps[var_index - 1] = -1
        minus = ClassicalElement.exp(exps)
        return Matrix2(zero, -plus, minus, zero)

    return R, L, E


def perimeter_g(i) -> ClassicalElement:
    """G_i = e^(p_i/2) + e^(-p_i/2)."""
    return ClassicalElement.exp_p(i, 1) + ClassicalElement.exp_p(i, -1)


def g_infinity() -> ClassicalElement:
    return ClassicalElement.exp((2, 2, 2, 0, 0, 0)) + ClassicalElement.exp(
        (-2, -2, -2, 0, 0, 0)
    )


def _exp_s_vec(v1, v2, v3):
    return ClassicalElement.exp((2 * v1, 2 * v2, 2 * v3, 0, 0, 0))


def closed_form_geodesics():
    """The shifted-coordinate closed forms of the three pair geodesics."""
    G1, G2, G3 = perimeter_g(1), perimeter_g(2), perimeter_g(3)
    g23 = (
        -_exp_s_vec(0, 1, 1)
        - _exp_s_vec(0, -1, -1)
        - _exp_s_vec(0, -1, 1)
        - G2 * _exp_s_vec(0, 0, 1)
        - G3 * _exp_s_vec(0, -1, 0)
    )
    g31 = (
        -_exp_s_vec(1, 0, 1)
        - _exp_s_vec(-1, 0, -1)
        - _exp_s_vec(1, 0, -1)
        - G3 * _exp_s_vec(1, 0, 0)
        - G1 * _exp_s_vec(0, 0, -1)
    )
    g12 = (
        -_exp_s_vec(1, 1, 0)
        - _exp_s_vec(-1, -1, 0)
        - _exp_s_vec(-1, 1, 0)
        - G1 * _exp_s_vec(0, 1, 0)
        - G2 * _exp_s_vec(-1, 0, 0)
    )
    return g23, g31, g12


def geodesic_trace_products():
    """Pair geodesics as minus traces of right/edge matrix words, shifted.

    Matches the closed forms returned by closed_form_geodesics exactly; the
    word computation is the independent route.
    """
    R, L, E = rle_matrices()
    s1, s2, s3, p1, p2, p3 = 1, 2, 3, 4, 5, 6

    def word(*mats):
        out = mats[0]
        for m in mats[1:]:
            out = out * m
        return out

    g23 = -word(R, E(s2), R, E(p2), R, E(s2), R, E(s3), R, E(p3), R, E(s3), R).trace()
    g31 = -word(L, E(s3), R, E(p3), R, E(s3), R, E(s1), R, E(p1), R, E(s1)).trace()
    g12 = -word(E(s1), R, E(p1), R, E(s1), R, E(s2), R, E(p2), R, E(s2), L).trace()
    return g23.shift_shear(), g31.shift_shear(), g12.shift_shear()


def omega_constants():
    """(omega1, omega2, omega3, omega_inf) of the cubic, in classical form."""
    G1, G2, G3, Ginf = perimeter_g(1), perimeter_g(2), perimeter_g(3), g_infinity()
    w3 = G1 * G2 + G3 * Ginf
    w1 = G2 * G3 + G1 * Ginf
    w2 = G3 * G1 + G2 * Ginf
    winf = (
        G1 * G1
        + G2 * G2
        + G3 * G3
        + Ginf * Ginf
        + G1 * G2 * G3 * Ginf
        - ClassicalElement.from_coeff(GaussianRational(4))
    )
    return w1, w2, w3, winf


def fricke_residual(g12, g23, g31) -> ClassicalElement:
    """Left side of the cubic; zero exactly on the geodesic triple."""
    w1, w2, w3, winf = omega_constants()
    return (
        g12 * g12
        + g23 * g23
        + g31 * g31
        + g12 * g23 * g31
        - w3 * g12
        - w1 * g23
        - w2 * g31
        + winf
    )


def classical_monodromy():
    """Monodromy quadruple in shifted shear coordinates, plus s_inf.

    Trace convention: Tr(M_i) = -G_i, as the matrices force; the entry of M3
    pairing e^(-s3) twice is corrected to e^(-s3) + e^(s3), the unique
    unimodular reading.
    """
    zero = ClassicalElement.zero()
    G1, G2, G3 = perimeter_g(1), perimeter_g(2), perimeter_g(3)
    m1 = Matrix2(
        zero,
        -_exp_s_vec(1, 0, 0),
        _exp_s_vec(-1, 0, 0),
        -G1,
    )
    m2 = Matrix2(
        -G2 - _exp_s_vec(0, 1, 0),
        -G2 - _exp_s_vec(0, 1, 0) - _exp_s_vec(0, -1, 0),
        _exp_s_vec(0, 1, 0),
        _exp_s_vec(0, 1, 0),
    )
    m3 = Matrix2(
        -G3 - _exp_s_vec(0, 0, -1),
        -_exp_s_vec(0, 0, -1),
        G3 + _exp_s_vec(0, 0, -1) + _exp_s_vec(0, 0, 1),
        _exp_s_vec(0, 0, -1),
    )
    s_inf = (
        G3 * _exp_s_vec(-1, -1, 0)
        + G2 * _exp_s_vec(-1, 0, 1)
        + G1 * _exp_s_vec(0, 1, 1)
        + _exp_s_vec(-1, -1, -1)
        + _exp_s_vec(-1, -1, 1)
        + _exp_s_vec(-1, 1, 1)
    )
    m_inf = Matrix2(
        -_exp_s_vec(-1, -1, -1),
        zero,
        s_inf,
        -_exp_s_vec(1, 1, 1),
    )
    return m1, m2, m3, m_inf


def monodromy_words():
    """The same quadruple from right/edge matrix words (independent route)."""
    R, L, E = rle_matrices()
    s1, s2, s3, p1, p2, p3 = 1, 2, 3, 4, 5, 6

    def word(sign, *mats):
        out = mats[0]
        for m in mats[1:]:
            out = out * m
        return out.map_entries(lambda e: sign * e)

    m1 = word(1, E(s1), R, E(p1), R, E(s1))
    m2 = word(-1, R, E(s2), R, E(p2), R, E(s2), L)
    m3 = word(-1, L, E(s3), R, E(p3), R, E(s3), R)
    m1 = m1.map_entries(lambda e: e.shift_shear())
    m2 = m2.map_entries(lambda e: e.shift_shear())
    m3 = m3.map_entries(lambda e: e.shift_shear())
    return m1, m2, m3
