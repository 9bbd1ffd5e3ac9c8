"""Braid-group and involution actions on generator quadruples.

Transforms act on the quantum tuple by conjugation words whose inverses come
from the certified generator quadratics, and on the classical monodromy
quadruple by the same formulas over the commutative ring.  Identities that a
transform may only satisfy up to the bar map are always evaluated twice:
verbatim, and with q -> 1/q applied to one side of the final normal forms.
"""

from __future__ import annotations

from dataclasses import replace

from .classical import ClassicalElement
from .errors import InverseNotFound
from .families import (
    GeneratorTuple,
    RelationResidual,
    build_family,
    relation_pairs,
)
from .matrices import Matrix2, inverse_via_quadratic, mat_scalar
from .torus import TorusElement, q_scalar

TRANSFORM_NAMES = ("b1", "b2", "r", "pi", "pi_inv", "sigma", "tau", "eta")

_SLOT_PARAM = {"vc1": "u1", "v1": "k1", "v0": "k0", "vc0": "u0"}


def slot_inverse(t: GeneratorTuple, slot: str) -> Matrix2:
    """Invert one generator through its quadratic; certified two-sided."""
    param = getattr(t, _SLOT_PARAM[slot])
    if param is None:
        raise InverseNotFound(f"slot {slot} of family {t.family} has no quadratic")
    return inverse_via_quadratic(getattr(t, slot), -param, param.inverse())


def apply_transform(name: str, t: GeneratorTuple) -> GeneratorTuple:
    """One generator of the automorphism action, with parameter bookkeeping.

    The parameter quadruple follows the slots so that every image satisfies
    its quadratic with the parameter now stored for it; that keeps inverses
    certified under arbitrary composition.
    """
    vc1, v1, v0, vc0 = t.matrices()
    u1, k1, k0, u0 = t.params()
    inv = lambda slot: slot_inverse(t, slot)

    if name == "b1":
        return replace(t, vc1=vc1 * v1 * inv("vc1"), v1=vc1, u1=k1, k1=u1)
    if name == "b2":
        return replace(t, v1=v1 * v0 * inv("v1"), v0=v1, k1=k0, k0=k1)
    if name == "r":
        return replace(
            t,
            vc1=inv("v0"),
            v1=inv("v1"),
            v0=inv("vc1"),
            vc0=inv("vc0"),
            u1=k0.inverse(),
            k1=k1.inverse(),
            k0=u1.inverse(),
            u0=u0.inverse(),
        )
    if name == "pi":
        return replace(t, vc1=vc0, v1=vc1, v0=v1, vc0=v0, u1=u0, k1=u1, k0=k1, u0=k0)
    if name == "pi_inv":
        return replace(t, vc1=v1, v1=v0, v0=vc0, vc0=vc1, u1=k1, k1=k0, k0=u0, u0=u1)
    if name == "sigma":
        return replace(
            t,
            vc1=v0,
            v1=v1,
            v0=inv("v1") * vc1 * v1,
            vc0=v0 * vc0 * inv("v0"),
            u1=k0,
            k1=k1,
            k0=u1,
            u0=u0,
        )
    if name == "tau":
        return replace(t, v0=v0 * vc0 * inv("v0"), vc0=v0, k0=u0, u0=k0)
    if name == "eta":
        return replace(
            t,
            vc1=inv("v1") * inv("vc1") * v1,
            v1=inv("v1"),
            v0=inv("v0"),
            vc0=v0 * inv("vc0") * inv("v0"),
            u1=u1.inverse(),
            k1=k1.inverse(),
            k0=k0.inverse(),
            u0=u0.inverse(),
        )
    raise ValueError(f"unknown transform {name!r}")


def apply_word(word, t: GeneratorTuple) -> GeneratorTuple:
    """Apply a composition word right to left, as functions compose."""
    for name in reversed(list(word)):
        t = apply_transform(name, t)
    return t


def _tuples_equal(a: GeneratorTuple, b: GeneratorTuple):
    return [
        (slot, (getattr(a, slot) - getattr(b, slot)).is_zero())
        for slot in ("vc1", "v1", "v0", "vc0")
    ]


def _tuples_equal_qinv(a: GeneratorTuple, b: GeneratorTuple):
    return [
        (
            slot,
            (
                getattr(a, slot).map_entries(lambda e: e.q_invert())
                - getattr(b, slot)
            ).is_zero(),
        )
        for slot in ("vc1", "v1", "v0", "vc0")
    ]


def composite_check(word, direct: str, t: GeneratorTuple | None = None):
    """Compare a braid word against a named abstract automorphism, slotwise.

    Returns per-slot verbatim equality and the same after q -> 1/q on the
    word image; disagreements are recorded outcomes, not errors.
    """
    t = build_family("VI") if t is None else t
    image_word = apply_word(word, t)
    image_direct = apply_transform(direct, t)
    return {
        "word": list(word),
        "direct": direct,
        "verbatim": _tuples_equal(image_word, image_direct),
        "q_inverted": _tuples_equal_qinv(image_word, image_direct),
    }


def relation_preservation(name: str, t: GeneratorTuple | None = None):
    """Run the full defining suite on a transformed tuple.

    Each relation is reported verbatim and with q -> 1/q applied to its left
    side, since involutive transforms invert the cyclic product's q-power.
    """
    t = build_family("VI") if t is None else t
    image = apply_transform(name, t)
    out = []
    for rid, lhs, rhs in relation_pairs(image):
        verbatim = (lhs - rhs).is_zero()
        inverted = (lhs.map_entries(lambda e: e.q_invert()) - rhs).is_zero()
        out.append((rid, verbatim, inverted))
    return out


def braid_relation_check(t: GeneratorTuple | None = None):
    """b1 b2 b1 = b2 b1 b2 on the quantum tuple, entrywise."""
    t = build_family("VI") if t is None else t
    left = apply_word(("b1", "b2", "b1"), t)
    right = apply_word(("b2", "b1", "b2"), t)
    return _tuples_equal(left, right)


def involution_check(name: str, t: GeneratorTuple | None = None, power: int = 2):
    """name^power = identity on the tuple slots."""
    t = build_family("VI") if t is None else t
    image = t
    for _ in range(power):
        image = apply_transform(name, image)
    return _tuples_equal(image, t)


def cyclic_product_value(t: GeneratorTuple):
    """Classify Vc1 V1 V0 Vc0 as q^(-1/2), q^(1/2), or neither."""
    product = t.vc1 * t.v1 * t.v0 * t.vc0
    for label, power in (("q^-1/2", -1), ("q^1/2", 1)):
        if (product - mat_scalar(q_scalar(power))).is_zero():
            return label
    return "other"


# -- classical braid action ------------------------------------------------------


def _classical_inverse(m: Matrix2) -> Matrix2:
    """Adjugate inverse; valid because the monodromy matrices have det 1."""
    return Matrix2(m.a22, -m.a12, -m.a21, m.a11)


def classical_braid(name: str, quad):
    """The same action on the classical quadruple (M1, M2, M3, Minf)."""
    m1, m2, m3, m_inf = quad
    if name == "b1":
        return (m1 * m2 * _classical_inverse(m1), m1, m3, m_inf)
    if name == "b2":
        return (m1, m2 * m3 * _classical_inverse(m2), m2, m_inf)
    if name == "r":
        return (
            _classical_inverse(m3),
            _classical_inverse(m2),
            _classical_inverse(m1),
            _classical_inverse(m_inf),
        )
    raise ValueError(f"unknown classical transform {name!r}")


def classical_braid_conservation(name: str, quad):
    """Product identity and cubic residual survive the transform."""
    from .classical import fricke_residual

    image = classical_braid(name, quad)
    m1, m2, m3, m_inf = image
    one = ClassicalElement.one()
    zero = ClassicalElement.zero()
    identity = Matrix2(one, zero, zero, one)
    product_ok = (m1 * m2 * m3 * m_inf - identity).is_zero()
    g12 = (m1 * m2).trace()
    g23 = (m2 * m3).trace()
    g31 = (m3 * m1).trace()
    residual = _transformed_fricke(image, g12, g23, g31)
    return {"product_identity": product_ok, "fricke_zero": residual.is_zero()}


def _transformed_fricke(quad, g12, g23, g31):
    """Cubic residual with all coefficients recomputed from the new tuple."""
    m1, m2, m3, m_inf = quad
    G = [-m.trace() for m in (m1, m2, m3)]
    Ginf = -m_inf.trace()
    w3 = G[0] * G[1] + G[2] * Ginf
    w1 = G[1] * G[2] + G[0] * Ginf
    w2 = G[2] * G[0] + G[1] * Ginf
    winf = (
        G[0] * G[0]
        + G[1] * G[1]
        + G[2] * G[2]
        + Ginf * Ginf
        + G[0] * G[1] * G[2] * Ginf
        - ClassicalElement.from_coeff(4)
    )
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
