"""Expression trees of regular functions and their pointwise evaluators.

Every node evaluates through the Splitting Lemma: at a non-real point
q = x + y*I the value of a function restricted to L_I is decomposed into two
complex components F, G against the orthonormal basis {1, I, J, I*J} with
J orthogonal to I, the product/conjugate/symmetrization formulas are applied
in complex arithmetic, and the result is recombined.  At real points the
splitting plane is ambiguous and all product formulas reduce to pointwise
quaternion products, implemented as an explicit special case.

Trees are immutable and structurally shared; evaluation is a pure function.
"""

from __future__ import annotations

import dataclasses
from typing import Callable

from .errors import DomainError, NotASlicePoint, SingularPoint, ZeroBase
from .polynomial import SlicePolynomial
from .quaternion import (
    ImaginaryUnit,
    ONE,
    Quaternion,
    dot,
    from_slice,
    orthogonal_unit,
    quat_inv,
    slice_coords,
)

SPLIT_ORTHOGONALITY_TOL = 1e-9
RECIP_SINGULAR_TOL = 1e-10
COMPOSITION_ZERO_TOL = 1e-12
FD_STEP = 1e-5


# ---------------------------------------------------------------------------
# Splitting
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class SplitPair:
    """Complex components of a quaternion against the basis {1, I, J, I*J}."""

    f: complex
    g: complex
    i: ImaginaryUnit
    j: ImaginaryUnit

    def recombine(self) -> Quaternion:
        return from_split(self.f, self.g, self.i, self.j)


def split(v: Quaternion, i: ImaginaryUnit, j: ImaginaryUnit) -> SplitPair:
    """Decompose v = F + G*J with F, G in L_I; requires J orthogonal to I."""
    if abs(dot(i.u, j.u)) > SPLIT_ORTHOGONALITY_TOL:
        raise ValueError("split requires J orthogonal to I")
    ij = i.u * j.u
    f = complex(v.x0, dot(v, i.u))
    g = complex(dot(v, j.u), dot(v, ij))
    return SplitPair(f, g, i, j)


def from_split(f: complex, g: complex, i: ImaginaryUnit, j: ImaginaryUnit) -> Quaternion:
    ij = i.u * j.u
    return (Quaternion(f.real) + f.imag * i.u) + g.real * j.u + g.imag * ij


# ---------------------------------------------------------------------------
# Node types
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class StemFunction:
    """Slice data: an evaluation map (x, y) -> H on a declared slice.

    ``region`` is the declared domain on the slice (``None`` means the whole
    plane).  The slice Cauchy-Riemann property is not enforced at
    construction; it is checked numerically by :func:`regularity_residual`.
    """

    func: Callable[[float, float], Quaternion]
    unit: ImaginaryUnit
    region: object = None  # SliceRegion or None

    def __call__(self, x: float, y: float) -> Quaternion:
        if self.region is not None and not self.region.contains(x, y):
            raise DomainError(f"stem evaluated outside its declared domain at ({x}, {y})")
        return self.func(x, y)

    def point(self, x: float, y: float) -> Quaternion:
        return from_slice(x, y, self.unit)


class SliceExpr:
    """Base class of the expression tree."""

    __slots__ = ()

    def __call__(self, q: Quaternion) -> Quaternion:
        return evaluate(self, q)


@dataclasses.dataclass(frozen=True)
class Poly(SliceExpr):
    poly: SlicePolynomial


@dataclasses.dataclass(frozen=True)
class Ext(SliceExpr):
    """Extension of two slice data r (on L_J) and s (on L_K) with J != K."""

    r: StemFunction
    s: StemFunction
    j: ImaginaryUnit
    k: ImaginaryUnit
    domain: object = None  # AxialDomain or None


@dataclasses.dataclass(frozen=True)
class Star(SliceExpr):
    f: SliceExpr
    g: SliceExpr


@dataclasses.dataclass(frozen=True)
class Conj(SliceExpr):
    f: SliceExpr


@dataclasses.dataclass(frozen=True)
class Symm(SliceExpr):
    f: SliceExpr


@dataclasses.dataclass(frozen=True)
class Recip(SliceExpr):
    f: SliceExpr


@dataclasses.dataclass(frozen=True)
class Sum(SliceExpr):
    f: SliceExpr
    g: SliceExpr


@dataclasses.dataclass(frozen=True)
class RightScalar(SliceExpr):
    f: SliceExpr
    a: Quaternion


@dataclasses.dataclass(frozen=True)
class RawMap(SliceExpr):
    """Arbitrary pointwise map, used for non-regular control functions."""

    func: Callable[[Quaternion], Quaternion]


def poly_expr(p: SlicePolynomial) -> Poly:
    return Poly(p)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def evaluate(f: SliceExpr, q: Quaternion) -> Quaternion:
    """Pointwise value of an expression tree."""
    if isinstance(f, Poly):
        return f.poly.evaluate(q)
    if isinstance(f, RawMap):
        return f.func(q)
    if isinstance(f, Sum):
        return evaluate(f.f, q) + evaluate(f.g, q)
    if isinstance(f, RightScalar):
        return evaluate(f.f, q) * f.a
    if isinstance(f, Star):
        return star_eval(f.f, f.g, q)
    if isinstance(f, Conj):
        return conj_eval(f.f, q)
    if isinstance(f, Symm):
        return symm_eval(f.f, q)
    if isinstance(f, Recip):
        return recip_eval(f.f, q)
    if isinstance(f, Ext):
        return _ext_eval(f, q)
    raise TypeError(f"not a SliceExpr node: {f!r}")


def _ext_eval(node: Ext, q: Quaternion) -> Quaternion:
    # General Extension Formula:
    #   f(x+yI) = (J-K)^{-1}[J r(x+yJ) - K s(x+yK)]
    #           + I (J-K)^{-1}[r(x+yJ) - s(x+yK)]
    p = slice_coords(q)
    if node.domain is not None and not node.domain.contains_xy(p.x, p.y):
        raise DomainError(f"point {q!r} outside the extension's domain")
    v_j = node.r(p.x, p.y)
    v_k = node.s(p.x, p.y)
    d = node.j.u - node.k.u
    dinv = quat_inv(d)
    b = dinv * (node.j.u * v_j - node.k.u * v_k)
    c = dinv * (v_j - v_k)
    return b + p.unit.u * c


def _split_frame(q: Quaternion):
    p = slice_coords(q)
    i = p.unit
    j = orthogonal_unit(i)
    return p, i, j


def star_eval(f: SliceExpr, g: SliceExpr, q: Quaternion) -> Quaternion:
    """Regular product f*g at q via the splitting formula.

    With f_I = F + G*J and g_I = H + K*J on the slice of q:
      (f*g)_I(z) = [F(z)H(z) - G(z) conj(K(zbar))]
                 + [F(z)K(z) + G(z) conj(H(zbar))] J
    At real points this reduces to the pointwise product.
    """
    if q.is_real():
        return evaluate(f, q) * evaluate(g, q)
    p, i, j = _split_frame(q)
    qbar = q.conjugate()
    sf = split(evaluate(f, q), i, j)
    sg = split(evaluate(g, q), i, j)
    sgb = split(evaluate(g, qbar), i, j)
    a = sf.f * sg.f - sf.g * sgb.g.conjugate()
    b = sf.f * sg.g + sf.g * sgb.f.conjugate()
    return from_split(a, b, i, j)


def conj_eval(f: SliceExpr, q: Quaternion) -> Quaternion:
    """Regular conjugate f^c at q: (f^c)_I(z) = conj(F(zbar)) - G(z)*J."""
    if q.is_real():
        return evaluate(f, q).conjugate()
    p, i, j = _split_frame(q)
    sb = split(evaluate(f, q.conjugate()), i, j)
    s = split(evaluate(f, q), i, j)
    return from_split(sb.f.conjugate(), -s.g, i, j)


def symm_eval(f: SliceExpr, q: Quaternion) -> Quaternion:
    """Symmetrization f^s at q: F(z) conj(F(zbar)) + G(z) conj(G(zbar)).

    The value lies in L_{I_q} by construction.
    """
    if q.is_real():
        v = evaluate(f, q)
        return Quaternion(v.norm_sq())
    p, i, j = _split_frame(q)
    s = split(evaluate(f, q), i, j)
    sb = split(evaluate(f, q.conjugate()), i, j)
    a = s.f * sb.f.conjugate() + s.g * sb.g.conjugate()
    return from_split(a, 0j, i, j)


def recip_eval(f: SliceExpr, q: Quaternion) -> Quaternion:
    """Regular reciprocal f^{-*}(q) = f^s(q)^{-1} f^c(q), off Z_{f^s}."""
    s = symm_eval(f, q)
    c = conj_eval(f, q)
    if s.norm() <= RECIP_SINGULAR_TOL * max(1.0, c.norm()):
        p = slice_coords(q)
        raise SingularPoint(
            f"symmetrization vanishes on the sphere x={p.x}, y={p.y}", x=p.x, y=p.y
        )
    return quat_inv(s) * c


def star_via_composition(f: SliceExpr, g: SliceExpr, q: Quaternion) -> Quaternion:
    """Cross-check form f*g(q) = f(q) g(f(q)^{-1} q f(q)); needs f(q) != 0."""
    fq = evaluate(f, q)
    if fq.norm() <= COMPOSITION_ZERO_TOL:
        raise ZeroBase("composition form undefined where f(q) = 0")
    return fq * evaluate(g, quat_inv(fq) * q * fq)


def slice_derivative(f: SliceExpr, q: Quaternion, h: float = FD_STEP) -> Quaternion:
    """Slice derivative: exact coefficient shift for polynomials, central
    finite difference in x (step h) for every other node."""
    if isinstance(f, Poly):
        return f.poly.derivative().evaluate(q)
    plus = evaluate(f, q + Quaternion(h))
    minus = evaluate(f, q - Quaternion(h))
    return (plus - minus) * (1.0 / (2.0 * h))


def regularity_residual(f: SliceExpr, q: Quaternion, h: float = FD_STEP) -> float:
    """|1/2 (d/dx + I d/dy) f| at q = x + y*I, estimated by central differences.

    Near zero for regular f; order one for non-regular maps.  The point must
    be non-real (the slice is ambiguous at y = 0).
    """
    p = slice_coords(q)
    if p.unit_is_arbitrary:
        raise NotASlicePoint("regularity residual is undefined on the real axis")
    i = p.unit
    fxp = evaluate(f, from_slice(p.x + h, p.y, i))
    fxm = evaluate(f, from_slice(p.x - h, p.y, i))
    fyp = evaluate(f, from_slice(p.x, p.y + h, i))
    fym = evaluate(f, from_slice(p.x, p.y - h, i))
    dx = (fxp - fxm) * (1.0 / (2.0 * h))
    dy = (fyp - fym) * (1.0 / (2.0 * h))
    return ((dx + i.u * dy) * 0.5).norm()


def identity_expr() -> Poly:
    """The identity polynomial q."""
    return Poly(SlicePolynomial(0.0, (Quaternion(), ONE)))
