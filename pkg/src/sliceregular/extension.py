"""Extension operators: from slice data to axially symmetric domains."""

from __future__ import annotations

from .errors import (
    DegenerateUnits,
    DomainNotSymmetric,
    NoRealTrace,
    RealTraceMismatch,
)
from .expr import Ext, SliceExpr, StemFunction, evaluate
from .quaternion import ImaginaryUnit, Quaternion, UNIT_I, from_slice
from .representation import DEGENERATE_UNIT_TOL, symmetric_completion

REAL_TRACE_TOL = 1e-9
REAL_TRACE_SAMPLES = 32
# Real-axis window sampled when a stem declares no domain.
_DEFAULT_TRACE = (-1.0, 1.0)


def sphere_affine_coeffs(f: SliceExpr, x: float, y: float) -> tuple[Quaternion, Quaternion]:
    """(b, c) with f(x + y*I) = b + I*c for every I on the sphere x + y*S.

    Computed with the canonical unit i; independence of that choice is a
    tested property of regular functions, not an input degree of freedom.
    """
    v_plus = evaluate(f, from_slice(x, y, UNIT_I))
    v_minus = evaluate(f, from_slice(x, -y, UNIT_I))
    b = (v_plus + v_minus) * 0.5
    c = (UNIT_I.u * (v_minus - v_plus)) * 0.5
    return b, c


def _real_trace_points(r: StemFunction, s: StemFunction | None = None) -> list[float]:
    regions = [t.region for t in (r, s) if t is not None and t.region is not None]
    if not regions:
        lo, hi = _DEFAULT_TRACE
        return [lo + (hi - lo) * n / (REAL_TRACE_SAMPLES - 1) for n in range(REAL_TRACE_SAMPLES)]
    pts = regions[0].real_trace_samples(REAL_TRACE_SAMPLES)
    for region in regions[1:]:
        pts = [x for x in pts if region.contains(x, 0.0)]
    return pts


def extend(r: StemFunction, s: StemFunction, j: ImaginaryUnit, k: ImaginaryUnit) -> SliceExpr:
    """Unique regular extension of slice data r (on L_J) and s (on L_K).

    The two data must agree on the real trace of their (mirror) domains;
    agreement is sampled at evenly spaced real points.
    """
    if (j.u - k.u).norm() <= DEGENERATE_UNIT_TOL:
        raise DegenerateUnits("extension needs two distinct imaginary units")
    pts = _real_trace_points(r, s)
    if not pts:
        raise NoRealTrace("the slice domain does not meet the real axis")
    for x in pts:
        gap = (r(x, 0.0) - s(x, 0.0)).norm()
        if gap > REAL_TRACE_TOL:
            raise RealTraceMismatch(
                f"slice data disagree on the real axis at x={x} (|r-s| = {gap:.3e})"
            )
    domain = None
    if r.region is not None:
        domain = symmetric_completion(r.region)
    return Ext(r=r, s=s, j=j, k=k, domain=domain)


def ext_from_holomorphic(f: StemFunction) -> SliceExpr:
    """Unique regular extension of data on a single slice L_J.

    The stem domain must be symmetric with respect to the real axis and meet
    it.  Realized as a two-slice extension with K = -J and the mirrored stem
    s(x + yK) = f(x - yJ), which reproduces the single-slice formula
      f~(x+yI) = 1/2 [f(x+yJ) + f(x-yJ)] + I 1/2 [J (f(x-yJ) - f(x+yJ))].
    """
    if f.region is not None:
        if not f.region.is_axis_symmetric():
            raise DomainNotSymmetric(
                "single-slice extension needs a domain symmetric in the real axis"
            )
        if not f.region.real_trace_samples(REAL_TRACE_SAMPLES):
            raise NoRealTrace("the slice domain does not meet the real axis")
    mirror = StemFunction(
        func=lambda x, y, _f=f.func: _f(x, -y),
        unit=-f.unit,
        region=f.region.mirrored() if f.region is not None else None,
    )
    domain = symmetric_completion(f.region) if f.region is not None else None
    return Ext(r=f, s=mirror, j=f.unit, k=-f.unit, domain=domain)


def restriction_stem(f: SliceExpr, unit: ImaginaryUnit, region=None) -> StemFunction:
    """The restriction of an expression to the slice L_unit, as slice data."""
    def func(x: float, y: float) -> Quaternion:
        return evaluate(f, from_slice(x, y, unit))

    return StemFunction(func=func, unit=unit, region=region)
