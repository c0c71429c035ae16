"""Zero sets: per-sphere classification, polynomial roots, Cauchy kernel.

Polynomial zero finding goes through the symmetrization: f^s has real
coefficients, its restriction to L_i is a complex polynomial whose roots are
found by Aberth simultaneous iteration, conjugate pairs are folded to
candidate spheres (x, |y|), and each sphere is classified through the affine
structure f(x + y*I) = b + I*c.
"""

from __future__ import annotations

import cmath
import dataclasses
import enum
import math

from .errors import NonConvergence, SingularPoint
from .expr import Poly, SliceExpr, evaluate, recip_eval, star_eval
from .extension import sphere_affine_coeffs
from .polynomial import SlicePolynomial, symm_poly
from .quaternion import ImaginaryUnit, Quaternion, UNIT_I, from_slice, quat_inv, slice_coords

CLASSIFY_TOL = 1e-8
SPHERE_DEDUP_TOL = 1e-8
ABERTH_MAX_ITER = 200
ABERTH_TOL = 1e-13
KERNEL_SINGULAR_TOL = 1e-10


class ZeroKind(enum.Enum):
    NONE = "none"
    ISOLATED = "isolated"
    SPHERICAL = "spherical"


@dataclasses.dataclass(frozen=True)
class SphereZero:
    """Classification of the zero set of a regular function on x + y*S."""

    x: float
    y: float
    kind: ZeroKind
    unit: ImaginaryUnit | None = None
    residual: float = 0.0
    unit_is_arbitrary: bool = False
    converged: bool = True


def sphere_zero_classify(f: SliceExpr, x: float, y: float,
                         tol: float = CLASSIFY_TOL) -> SphereZero:
    """Classify the zero set of f on the sphere x + y*S.

    Spherical iff both affine coefficients vanish; otherwise the affine
    equation b + I*c = 0 is solved for I and accepted only when the solution
    lies on S and the residual |f| is below tolerance.  For y = 0 the sphere
    is a single real point, classified by |f(x)| alone.
    """
    if y < 0:
        raise ValueError("sphere radius y must be nonnegative")
    if y == 0.0:
        r = evaluate(f, Quaternion(x)).norm()
        if r < tol:
            return SphereZero(x, 0.0, ZeroKind.ISOLATED, unit=UNIT_I,
                              residual=r, unit_is_arbitrary=True)
        return SphereZero(x, 0.0, ZeroKind.NONE, residual=r)
    b, c = sphere_affine_coeffs(f, x, y)
    nb, nc = b.norm(), c.norm()
    if nb < tol and nc < tol:
        return SphereZero(x, y, ZeroKind.SPHERICAL, residual=max(nb, nc))
    if nc >= tol:
        cand = -(b * quat_inv(c))
        if abs(cand.re()) < tol and abs(cand.norm() - 1.0) < tol:
            unit = ImaginaryUnit(cand)
            r = evaluate(f, from_slice(x, y, unit)).norm()
            if r < tol:
                return SphereZero(x, y, ZeroKind.ISOLATED, unit=unit, residual=r)
    return SphereZero(x, y, ZeroKind.NONE, residual=min(nb, nc))


# ---------------------------------------------------------------------------
# Aberth simultaneous iteration on complex polynomials
# ---------------------------------------------------------------------------

def _poly_val_der(coeffs: list[complex], z: complex) -> tuple[complex, complex]:
    p = coeffs[-1]
    dp = 0j
    for c in reversed(coeffs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def aberth_roots(coeffs: list[complex], max_iter: int = ABERTH_MAX_ITER,
                 tol: float = ABERTH_TOL) -> list[complex]:
    """All roots of a complex polynomial (a_0 + a_1 z + ... + a_n z^n).

    Deterministic initialization on a circle of radius 1 + max|a_k/a_n| with
    a fixed angular offset.  Raises NonConvergence (with partial results)
    after ``max_iter`` sweeps.
    """
    n = len(coeffs) - 1
    while n > 0 and abs(coeffs[n]) == 0.0:
        n -= 1
    coeffs = list(coeffs[: n + 1])
    if n < 1:
        return []
    lead = coeffs[-1]
    coeffs = [c / lead for c in coeffs]
    radius = 1.0 + max(abs(c) for c in coeffs[:-1])
    z = [radius * cmath.exp(1j * (2.0 * math.pi * m / n + 0.4)) for m in range(n)]
    for _ in range(max_iter):
        done = True
        new = list(z)
        for m in range(n):
            p, dp = _poly_val_der(coeffs, z[m])
            if p == 0:
                continue
            # Backward-error stop: at multiple roots the Newton correction
            # stalls at eps^(1/multiplicity), so a step-size test alone never
            # fires.  |p| at rounding level of its own evaluation is as
            # converged as the coefficients allow; the polish pass sharpens.
            r, pw = abs(z[m]), 1.0
            backward = 0.0
            for c in coeffs:
                backward += abs(c) * pw
                pw *= r
            if abs(p) <= 1e-14 * backward:
                continue
            if dp == 0:
                new[m] = z[m] * (1.0 + 1e-6) + 1e-6
                done = False
                continue
            newton = p / dp
            s = sum(1.0 / (z[m] - z[l]) for l in range(n) if l != m)
            denom = 1.0 - newton * s
            w = newton if denom == 0 else newton / denom
            new[m] = z[m] - w
            if abs(w) > tol * max(1.0, abs(z[m])):
                done = False
        z = new
        if done:
            return z
    raise NonConvergence("Aberth iteration did not converge", partial=z)


def _polish_root(coeffs: list[complex], z: complex, steps: int = 8) -> complex:
    """Newton on p/p', which has simple zeros at every distinct root.

    Restores full accuracy at multiple roots, where plain Aberth stalls at
    ~sqrt(eps) distance.
    """
    d1 = [coeffs[n] * n for n in range(1, len(coeffs))]
    d2 = [d1[n] * n for n in range(1, len(d1))]
    for _ in range(steps):
        p, _ = _poly_val_der(coeffs, z)
        p1, _ = _poly_val_der(d1, z) if d1 else (0j, 0j)
        p2, _ = _poly_val_der(d2, z) if d2 else (0j, 0j)
        if p1 == 0:
            break
        u = p / p1
        du = 1.0 - p * p2 / (p1 * p1)
        if du == 0:
            break
        step = u / du
        z = z - step
        if abs(step) < 1e-15 * max(1.0, abs(z)):
            break
    return z


# ---------------------------------------------------------------------------
# Polynomial zero pipeline
# ---------------------------------------------------------------------------

def _refine_spherical_candidate(f: SliceExpr, x: float, y: float, tol: float,
                                steps: int = 6) -> tuple[float, float] | None:
    """Gauss-Newton on the affine coefficients (b, c) as a map R^2 -> R^8.

    Candidate spheres inherit ~sqrt(eps) error from multiple roots of the
    symmetrization; a spherical zero is a nonsingular root of (b, c) = 0 and
    refines to machine precision.  Returns the refined sphere only when both
    coefficients drop below tolerance, so spheres of isolated zeros (where
    (b, c) never vanishes) are left alone.
    """
    h = 1e-7 * (1.0 + abs(x) + y)
    cx, cy = x, y

    def residual_vec(px, py):
        b, c = sphere_affine_coeffs(f, px, py)
        return [*b.components(), *c.components()]

    for _ in range(steps):
        r0 = residual_vec(cx, cy)
        rx = residual_vec(cx + h, cy)
        ry = residual_vec(cx, cy + h)
        jx = [(a - b) / h for a, b in zip(rx, r0)]
        jy = [(a - b) / h for a, b in zip(ry, r0)]
        a11 = sum(v * v for v in jx)
        a12 = sum(u * v for u, v in zip(jx, jy))
        a22 = sum(v * v for v in jy)
        g1 = sum(u * v for u, v in zip(jx, r0))
        g2 = sum(u * v for u, v in zip(jy, r0))
        det = a11 * a22 - a12 * a12
        if det == 0.0:
            return None
        dx = (a22 * g1 - a12 * g2) / det
        dy = (a11 * g2 - a12 * g1) / det
        cx, cy = cx - dx, cy - dy
        if cy < 0.0:
            cy = -cy
        if abs(cx - x) > 1e-5 * (1.0 + abs(x)) or abs(cy - y) > 1e-5 * (1.0 + y):
            return None
    b, c = sphere_affine_coeffs(f, cx, cy)
    if b.norm() < tol and c.norm() < tol:
        return cx, cy
    return None

def _symm_complex_coeffs(f: SlicePolynomial) -> list[complex]:
    """Coefficients of f^s restricted to L_i (a real-coefficient polynomial)."""
    fs = symm_poly(f)
    return [complex(c.x0, c.x1) for c in fs.coeffs]


def poly_roots(f: SlicePolynomial, tol: float = CLASSIFY_TOL) -> list[SphereZero]:
    """Candidate zero spheres of a quaternionic polynomial, classified.

    Pipeline: form f^s by coefficient convolution, restrict to L_i, solve the
    complex polynomial by Aberth iteration, polish, fold conjugate pairs to
    spheres (x, |y|), deduplicate and classify each sphere.  The reported
    classification tolerance scales with max(1, coefficient norm).
    """
    if f.degree < 1 or f.coeffs[-1].norm() == 0.0:
        raise ValueError("root finding requires degree >= 1 with nonzero leading coefficient")
    coeffs = _symm_complex_coeffs(f)
    converged = True
    try:
        roots = aberth_roots(coeffs)
    except NonConvergence as exc:
        roots = list(exc.partial)
        converged = False
    roots = [_polish_root(coeffs, z) for z in roots]
    scale = max(1.0, f.coeff_norm())
    ctol = tol * scale
    spheres: list[tuple[float, float]] = []
    for z in roots:
        x = z.real + f.center
        y = abs(z.imag)
        if y < SPHERE_DEDUP_TOL:
            y = 0.0
        if any(abs(x - sx) <= SPHERE_DEDUP_TOL and abs(y - sy) <= SPHERE_DEDUP_TOL
               for sx, sy in spheres):
            continue
        spheres.append((x, y))
    spheres.sort()
    out = []
    expr = Poly(f)
    for x, y in spheres:
        if y > 0.0:
            refined = _refine_spherical_candidate(expr, x, y, ctol)
            if refined is not None:
                x, y = refined
        zero = sphere_zero_classify(expr, x, y, tol=ctol)
        if not converged:
            zero = dataclasses.replace(zero, converged=False)
        out.append(zero)
    if not converged:
        raise NonConvergence("root iteration did not converge", partial=out)
    return out


def star_zero_check(f: SliceExpr, g: SliceExpr, q: Quaternion, tol: float = CLASSIFY_TOL) -> bool:
    """Does the zero theorem's predicate match a direct star evaluation?

    Predicate: f(q) = 0, or f(q) != 0 and g(f(q)^{-1} q f(q)) = 0,
    all comparisons with tolerance ``tol``.
    """
    fq = evaluate(f, q)
    if fq.norm() < tol:
        predicate = True
    else:
        predicate = evaluate(g, quat_inv(fq) * q * fq).norm() < tol
    return predicate == (star_eval(f, g, q).norm() < tol)


def cauchy_kernel(s: Quaternion, q: Quaternion) -> Quaternion:
    """Closed-form regular reciprocal of q - s:

        S^{-*}(q) = (q^2 - 2 Re(s) q + |s|^2)^{-1} (q - conj(s))

    Singular exactly on the sphere Re(s) + |Im(s)|*S.
    """
    denom = q * q - (2.0 * s.re()) * q + Quaternion(s.norm_sq())
    numer = q - s.conjugate()
    scale = max(1.0, q.norm_sq(), s.norm_sq())
    if denom.norm() <= KERNEL_SINGULAR_TOL * scale:
        p = slice_coords(q)
        raise SingularPoint(
            f"q lies on the singular sphere of the kernel (x={p.x}, y={p.y})", x=p.x, y=p.y
        )
    return quat_inv(denom) * numer


def kernel_vs_recip_residual(s: Quaternion, q: Quaternion) -> float:
    """|closed form - reciprocal pipeline| for the kernel of q - s."""
    from .polynomial import monomial_minus

    direct = cauchy_kernel(s, q)
    via_recip = recip_eval(Poly(monomial_minus(s)), q)
    return (direct - via_recip).norm()
