import random
from fractions import Fraction

import pytest

from dahaq.errors import DivergentLimit
from dahaq.scalars import EPS, GaussianRational, K0, Scalar
from dahaq.torus import (
    SIGMA,
    TorusElement,
    omega,
    ordered_exp,
    q_scalar,
    u0_element,
    u0_inverse,
)


def rnd_torus(rng, terms=4, span=2):
    out = TorusElement.zero()
    for _ in range(rng.randint(1, terms)):
        vec = tuple(rng.randint(-span, span) for _ in range(3))
        coeff = GaussianRational(
            Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))
        )
        out = out + TorusElement.monomial(vec, Scalar.from_coeff(coeff))
    return out


def rnd_vec(rng, span=3):
    return tuple(rng.randint(-span, span) for _ in range(3))


def test_omega_values():
    assert omega((1, 0, 0), (0, 1, 0)) == 1
    rng = random.Random(0)
    for _ in range(300):
        u, v = rnd_vec(rng), rnd_vec(rng)
        assert omega((1, 1, 1), v) == 0
        assert omega(u, v) == -omega(v, u)


def test_monomial_products():
    e1, e2 = TorusElement.gen(1), TorusElement.gen(2)
    assert e1 * e1.inverse() == TorusElement.one()
    assert e1 * e2 == q_scalar(SIGMA) * TorusElement.monomial((1, 1, 0))
    diag = TorusElement.monomial((1, 1, 1))
    rng = random.Random(1)
    for _ in range(50):
        x = rnd_torus(rng)
        assert diag * x == x * diag


def test_q_commutation():
    rng = random.Random(2)
    for _ in range(300):
        u, v = rnd_vec(rng), rnd_vec(rng)
        xu, xv = TorusElement.monomial(u), TorusElement.monomial(v)
        assert xu * xv == q_scalar(2 * SIGMA * omega(u, v)) * (xv * xu)


def test_associativity_randomized():
    rng = random.Random(3)
    for _ in range(200):
        a, b, c = rnd_torus(rng), rnd_torus(rng), rnd_torus(rng)
        assert (a * b) * c == a * (b * c)


def test_u0_element():
    u0, u0i = u0_element(), u0_inverse()
    assert u0 * u0i == TorusElement.one()
    e1 = TorusElement.gen(1)
    assert u0 * e1 == e1 * u0
    i = TorusElement.from_scalar(Scalar.i())
    ginf = TorusElement.monomial((1, 1, 1)) + TorusElement.monomial((-1, -1, -1))
    assert i * (u0 - u0i) == ginf


def test_centrality_predicates():
    assert u0_element().is_central()
    assert not u0_element().is_scalar()
    assert not TorusElement.gen(1).is_central()
    s = TorusElement.from_scalar(Scalar.from_int(3) + Scalar.unit(0))
    assert s.is_scalar()
    # center characterization: commuting with all three generators
    rng = random.Random(4)
    gens = [TorusElement.gen(i) for i in (1, 2, 3)]
    for _ in range(60):
        a = rnd_torus(rng)
        commutes = all((a * g - g * a).is_zero() for g in gens)
        assert commutes == a.is_central()


def test_substitute_and_limit():
    e3 = TorusElement.gen(3)
    sub = e3.inverse().substitute({}, (0, 0, -1))
    assert sub == TorusElement.monomial((0, 0, -1), Scalar.unit(EPS))
    u0_scaled = u0_element().substitute({}, (0, 0, -1))
    assert u0_scaled == TorusElement.monomial(
        (-1, -1, -1), -Scalar.i() * Scalar.unit(EPS)
    )
    untouched = TorusElement.gen(2).substitute({}, (0, 0, -1))
    assert untouched == TorusElement.gen(2)
    with pytest.raises(DivergentLimit):
        e3.substitute({}, (0, 0, 1)).eps_limit()
    back = e3.substitute({}, (0, 0, 1)).substitute({}, (0, 0, -1))
    assert back.eps_limit() == e3


def test_substitution_is_multiplicative():
    rng = random.Random(5)
    eps = Scalar.unit(EPS)
    for _ in range(150):
        a, b = rnd_torus(rng), rnd_torus(rng)
        left = (a * b).substitute({K0: eps}, (0, -1, 0))
        right = a.substitute({K0: eps}, (0, -1, 0)) * b.substitute({K0: eps}, (0, -1, 0))
        assert left == right


def test_classicalize_homomorphism():
    rng = random.Random(6)
    for _ in range(150):
        a, b = rnd_torus(rng), rnd_torus(rng)
        assert (a * b).classicalize() == a.classicalize() * b.classicalize()


def test_classicalize_drops_q():
    q3e = q_scalar(3) * TorusElement.monomial((1, 1, 0))
    assert q3e.classicalize() == TorusElement.monomial((1, 1, 0)).classicalize()


def test_ordered_exp_vs_weyl():
    # every corner-sum monomial carries the same ordering constant
    for vec in ((-1, -1, 0), (-1, 0, 1), (0, 1, 1), (-1, -1, 1), (-1, 1, 1), (-1, -1, -1)):
        assert q_scalar(1) * ordered_exp(*vec) == TorusElement.monomial(vec)
