"""Polynomials with right quaternionic coefficients and a real center.

These are the concrete regular functions of the package: exact coefficient
algebra for the regular product, conjugate and symmetrization lives here and
doubles as the oracle for the pointwise splitting formulas.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable

from .errors import CenterMismatch
from .quaternion import ONE, Quaternion, ZERO, _coerce

_TRIM_TOL = 0.0  # only exact zeros are trimmed
_CENTER_TOL = 1e-12


def _as_quaternion(c) -> Quaternion:
    q = _coerce(c)
    if q is None:
        raise TypeError(f"not a quaternion coefficient: {c!r}")
    return q


@dataclasses.dataclass(frozen=True)
class SlicePolynomial:
    """f(q) = sum_n (q - center)^n a_n with right coefficients a_n.

    Trailing zero coefficients are trimmed; the zero polynomial keeps a
    single zero coefficient.
    """

    center: float = 0.0
    coeffs: tuple[Quaternion, ...] = (ZERO,)

    def __post_init__(self):
        cs = [_as_quaternion(c) for c in self.coeffs]
        while len(cs) > 1 and cs[-1].norm() <= _TRIM_TOL:
            cs.pop()
        if not cs:
            cs = [ZERO]
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "center", float(self.center))

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0].norm() == 0.0:
            return 0
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c.norm() == 0.0 for c in self.coeffs)

    def coeff_norm(self) -> float:
        return max(c.norm() for c in self.coeffs)

    def evaluate(self, q: Quaternion) -> Quaternion:
        """Horner evaluation, right-coefficient variant."""
        q = _as_quaternion(q)
        w = q - self.center
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = w * acc + c
        return acc

    def derivative(self) -> "SlicePolynomial":
        """Slice derivative: exact coefficient shift."""
        if len(self.coeffs) == 1:
            return SlicePolynomial(self.center, (ZERO,))
        return SlicePolynomial(
            self.center,
            tuple(c * float(n) for n, c in enumerate(self.coeffs) if n >= 1),
        )

    def __add__(self, other):
        if not isinstance(other, SlicePolynomial):
            return NotImplemented
        _require_same_center(self, other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return SlicePolynomial(self.center, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self):
        return SlicePolynomial(self.center, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, SlicePolynomial):
            return NotImplemented
        return self + (-other)

    def right_scaled(self, a: Quaternion) -> "SlicePolynomial":
        a = _as_quaternion(a)
        return SlicePolynomial(self.center, tuple(c * a for c in self.coeffs))


def _require_same_center(f: SlicePolynomial, g: SlicePolynomial):
    if abs(f.center - g.center) > _CENTER_TOL:
        raise CenterMismatch(
            f"polynomial centers differ: {f.center} vs {g.center} (re-centering is not supported)"
        )


def polynomial(coeffs: Iterable, center: float = 0.0) -> SlicePolynomial:
    """Convenience constructor accepting reals and quaternions."""
    return SlicePolynomial(center, tuple(_as_quaternion(c) for c in coeffs))


def monomial_minus(s: Quaternion) -> SlicePolynomial:
    """The polynomial q - s (center 0)."""
    return SlicePolynomial(0.0, (-_as_quaternion(s), ONE))


def star_poly(f: SlicePolynomial, g: SlicePolynomial) -> SlicePolynomial:
    """Regular product by coefficient convolution: c_n = sum_r a_r b_{n-r}."""
    _require_same_center(f, g)
    a, b = f.coeffs, g.coeffs
    out = [ZERO] * (len(a) + len(b) - 1)
    for r, ar in enumerate(a):
        for t, bt in enumerate(b):
            out[r + t] = out[r + t] + ar * bt
    return SlicePolynomial(f.center, tuple(out))


def conj_poly(f: SlicePolynomial) -> SlicePolynomial:
    """Regular conjugate: coefficient-wise quaternion conjugation."""
    return SlicePolynomial(f.center, tuple(c.conjugate() for c in f.coeffs))


def symm_poly(f: SlicePolynomial) -> SlicePolynomial:
    """Symmetrization f * f^c; its coefficients are real."""
    return star_poly(f, conj_poly(f))
