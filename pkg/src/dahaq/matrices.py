"""2x2 matrices over an exact coefficient ring.

Entries are any ring elements supporting +, -, * and is_zero; the product
keeps left-factor entries on the left, which is the ordering that matters
over the quantum torus.  Inversion is only available through a certified
quadratic relation (M + a)(M + b) = 0 with central invertible a, b.
"""

from __future__ import annotations

from .errors import NotCentral, NotInvertibleParameter, QuadraticNotSatisfied


class Matrix2:
    __slots__ = ("a11", "a12", "a21", "a22")

    def __init__(self, a11, a12, a21, a22):
        self.a11 = a11
        self.a12 = a12
        self.a21 = a21
        self.a22 = a22

    def entries(self):
        return (self.a11, self.a12, self.a21, self.a22)

    def __add__(self, other):
        return Matrix2(
            self.a11 + other.a11,
            self.a12 + other.a12,
            self.a21 + other.a21,
            self.a22 + other.a22,
        )

    def __sub__(self, other):
        return Matrix2(
            self.a11 - other.a11,
            self.a12 - other.a12,
            self.a21 - other.a21,
            self.a22 - other.a22,
        )

    def __neg__(self):
        return Matrix2(-self.a11, -self.a12, -self.a21, -self.a22)

    def __mul__(self, other):
        return Matrix2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def scale(self, c):
        """Left-multiply every entry by the ring element c."""
        return Matrix2(c * self.a11, c * self.a12, c * self.a21, c * self.a22)

    def scale_right(self, c):
        return Matrix2(self.a11 * c, self.a12 * c, self.a21 * c, self.a22 * c)

    def map_entries(self, f):
        return Matrix2(f(self.a11), f(self.a12), f(self.a21), f(self.a22))

    def is_zero(self):
        return all(e.is_zero() for e in self.entries())

    def __eq__(self, other):
        return isinstance(other, Matrix2) and (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(self.entries()))

    def trace(self):
        return self.a11 + self.a22

    def det(self):
        """Determinant; meaningful over commutative entries only."""
        return self.a11 * self.a22 - self.a12 * self.a21

    def text(self):
        return "[{},{};{},{}]".format(*(e.text() for e in self.entries()))

    def __repr__(self):
        return f"<Matrix2 {self.text()}>"


def _require_central(c):
    if hasattr(c, "is_central") and not c.is_central():
        raise NotCentral(f"{c!r} is not central")
    return c


def mat_scalar(c) -> Matrix2:
    """c times the identity, for central c."""
    _require_central(c)
    zero = c - c
    return Matrix2(c, zero, zero, c)


def quadratic_residual(m: Matrix2, alpha, beta) -> Matrix2:
    """(M + alpha)(M + beta) for central alpha, beta; zero when M satisfies it."""
    _require_central(alpha)
    _require_central(beta)
    return (m + mat_scalar(alpha)) * (m + mat_scalar(beta))


def inverse_via_quadratic(m: Matrix2, alpha, beta) -> Matrix2:
    """Invert M from a certified quadratic (M + alpha)(M + beta) = 0.

    Then M^-1 = -(alpha*beta)^-1 (M + (alpha+beta)), a two-sided inverse.
    """
    if not quadratic_residual(m, alpha, beta).is_zero():
        raise QuadraticNotSatisfied("matrix does not satisfy the given quadratic")
    try:
        inv_ab = (alpha * beta).inverse()
    except Exception as exc:
        raise NotInvertibleParameter(str(exc)) from exc
    return (m + mat_scalar(alpha + beta)).scale(-inv_ab)
