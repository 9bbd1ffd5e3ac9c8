import random
from fractions import Fraction

import pytest

from dahaq.errors import NotCentral, QuadraticNotSatisfied
from dahaq.matrices import Matrix2, inverse_via_quadratic, mat_scalar, quadratic_residual
from dahaq.scalars import GaussianRational, Scalar, U1
from dahaq.torus import TorusElement

from test_torus import rnd_torus


def identity():
    return mat_scalar(TorusElement.one())


def test_identity_neutral():
    rng = random.Random(0)
    for _ in range(30):
        a = Matrix2(*(rnd_torus(rng) for _ in range(4)))
        assert identity() * a == a
        assert a * identity() == a
        assert a + (identity() - identity()) == a


def test_mat_scalar_requires_central():
    assert mat_scalar(TorusElement.from_scalar(Scalar.unit(0, -1))).a11 == \
        TorusElement.from_scalar(Scalar.unit(0, -1))
    with pytest.raises(NotCentral):
        mat_scalar(TorusElement.gen(1))


def test_associativity_randomized():
    rng = random.Random(1)
    for _ in range(100):
        a, b, c = (Matrix2(*(rnd_torus(rng, terms=3) for _ in range(4))) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_quadratic_residual_diagonal():
    alpha = TorusElement.from_scalar(Scalar.from_coeff(GaussianRational(2)))
    beta = TorusElement.from_scalar(Scalar.from_coeff(GaussianRational(Fraction(1, 3))))
    zero = TorusElement.zero()
    m = Matrix2(-alpha, zero, zero, -beta)
    assert quadratic_residual(m, alpha, beta).is_zero()


def test_inverse_via_quadratic():
    from dahaq.families import build_family

    t = build_family("VI")
    u1 = t.u1
    inv = inverse_via_quadratic(t.vc1, -u1, u1.inverse())
    assert inv * t.vc1 == identity()
    assert t.vc1 * inv == identity()
    # Cayley-Hamilton consequence: V^-1 = V - (u - 1/u)
    expected = t.vc1 - mat_scalar(u1 - u1.inverse())
    assert inv == expected
    with pytest.raises(QuadraticNotSatisfied):
        inverse_via_quadratic(t.vc1, u1, u1.inverse())


def test_inverse_identity_case():
    one = TorusElement.one()
    m = identity()
    minus_one = -one
    inv = inverse_via_quadratic(m, minus_one, minus_one)
    assert inv == m
