"""Quaternion arithmetic, imaginary units and slice coordinates.

Everything in this module is an immutable value with pure operations, so
instances may be shared freely between threads.
"""

from __future__ import annotations

import dataclasses
import math

from .errors import NotASlicePoint

# |Im(q)| below this is treated as "on the real axis".
REAL_AXIS_TOL = 1e-12


@dataclasses.dataclass(frozen=True, slots=True)
class Quaternion:
    """An element of the skew field H with components along 1, i, j, k."""

    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.x0 + other.x0, self.x1 + other.x1,
                          self.x2 + other.x2, self.x3 + other.x3)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.x0 - other.x0, self.x1 - other.x1,
                          self.x2 - other.x2, self.x3 - other.x3)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(self.x0 * other, self.x1 * other,
                              self.x2 * other, self.x3 * other)
        if isinstance(other, Quaternion):
            a, b = self, other
            return Quaternion(
                a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
                a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
                a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
                a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0,
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self * (1.0 / other)
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def re(self) -> float:
        return self.x0

    def im(self) -> "Quaternion":
        return Quaternion(0.0, self.x1, self.x2, self.x3)

    def norm_sq(self) -> float:
        return self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3

    def norm(self) -> float:
        return math.sqrt(self.norm_sq())

    def im_norm(self) -> float:
        return math.sqrt(self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3)

    def inverse(self) -> "Quaternion":
        return quat_inv(self)

    def is_real(self, tol: float = REAL_AXIS_TOL) -> bool:
        return self.im_norm() <= tol

    def components(self) -> tuple[float, float, float, float]:
        return (self.x0, self.x1, self.x2, self.x3)

    def __repr__(self):
        return f"Quaternion({self.x0}, {self.x1}, {self.x2}, {self.x3})"


ONE = Quaternion(1.0)
ZERO = Quaternion()


def _coerce(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)):
        return Quaternion(float(value))
    return None


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product (i^2 = j^2 = k^2 = -1, ij = k and cyclic)."""
    return a * b


def quat_inv(q: Quaternion) -> Quaternion:
    """Multiplicative inverse conj(q)/|q|^2. Raises on the zero quaternion."""
    n2 = q.norm_sq()
    if n2 == 0.0:
        raise ZeroDivisionError("the zero quaternion has no inverse")
    return q.conjugate() * (1.0 / n2)


def dot(a: Quaternion, b: Quaternion) -> float:
    """Euclidean inner product of R^4."""
    return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3


@dataclasses.dataclass(frozen=True, slots=True)
class ImaginaryUnit:
    """A validated point of the sphere S of imaginary units.

    Construction normalizes the imaginary part of the given quaternion and
    rejects inputs whose imaginary part is below ``REAL_AXIS_TOL``.
    """

    u: Quaternion

    def __post_init__(self):
        q = self.u
        n = q.im_norm()
        if n < REAL_AXIS_TOL:
            raise NotASlicePoint("cannot build an imaginary unit from a (near-)real quaternion")
        object.__setattr__(self, "u", Quaternion(0.0, q.x1 / n, q.x2 / n, q.x3 / n))

    def as_quaternion(self) -> Quaternion:
        return self.u

    def __neg__(self):
        return ImaginaryUnit(-self.u)

    def __mul__(self, other):
        if isinstance(other, ImaginaryUnit):
            return self.u * other.u
        if isinstance(other, (int, float, Quaternion)):
            return self.u * other
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.u * other
        if isinstance(other, Quaternion):
            return other * self.u
        return NotImplemented


UNIT_I = ImaginaryUnit(Quaternion(0.0, 1.0, 0.0, 0.0))
UNIT_J = ImaginaryUnit(Quaternion(0.0, 0.0, 1.0, 0.0))
UNIT_K = ImaginaryUnit(Quaternion(0.0, 0.0, 0.0, 1.0))


@dataclasses.dataclass(frozen=True, slots=True)
class SlicePoint:
    """The decomposition q = x + y*I with y >= 0.

    ``unit_is_arbitrary`` marks real points, where any element of S would do
    and the canonical unit i is used by convention.
    """

    x: float
    y: float
    unit: ImaginaryUnit
    unit_is_arbitrary: bool = False

    def to_quaternion(self) -> Quaternion:
        return from_slice(self.x, self.y, self.unit)


def from_slice(x: float, y: float, unit: ImaginaryUnit) -> Quaternion:
    u = unit.u
    return Quaternion(x, y * u.x1, y * u.x2, y * u.x3)


def imaginary_unit_of(q: Quaternion) -> ImaginaryUnit:
    """Im(q)/|Im(q)|. Raises NotASlicePoint on (near-)real input."""
    if q.im_norm() <= REAL_AXIS_TOL:
        raise NotASlicePoint(f"imaginary unit of a (near-)real quaternion is undefined: {q!r}")
    return ImaginaryUnit(q)


def slice_coords(q: Quaternion) -> SlicePoint:
    """(x, y, I) with q = x + y*I and y >= 0.

    Real points get y = 0 and the canonical unit i, flagged as arbitrary.
    """
    y = q.im_norm()
    if y <= REAL_AXIS_TOL:
        return SlicePoint(q.x0, 0.0, UNIT_I, unit_is_arbitrary=True)
    return SlicePoint(q.x0, y, ImaginaryUnit(q))


def slice_conjugate(q: Quaternion) -> Quaternion:
    """The point x - y*I on the same slice (equals the quaternion conjugate)."""
    return q.conjugate()


_FALLBACK_UNITS = (UNIT_I, UNIT_J, UNIT_K)

# Two units are "parallel enough" to skip when |<e, I>| exceeds this.
_PARALLEL_TOL = 0.9


def orthogonal_unit(unit: ImaginaryUnit) -> ImaginaryUnit:
    """A deterministic J in S orthogonal to the given unit.

    Gram-Schmidt of the first element of the fixed list (i, j, k) that is not
    (nearly) parallel to the input, so splitting-based evaluations are
    reproducible.
    """
    u = unit.u
    for e in _FALLBACK_UNITS:
        if abs(dot(e.u, u)) < _PARALLEL_TOL:
            v = e.u - dot(e.u, u) * u
            return ImaginaryUnit(v)
    raise AssertionError("unreachable: a unit cannot be parallel to i, j and k at once")
