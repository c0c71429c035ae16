"""Numerical verification harness: theorem-shaped checks with seeded sampling.

The generator is a self-contained splitmix-style 64-bit state machine so that
reports reproduce bit-identically across platforms for a given seed.
"""

from __future__ import annotations

import dataclasses
import math

from .expr import (
    Conj,
    Poly,
    Recip,
    SliceExpr,
    Star,
    conj_eval,
    evaluate,
    orthogonal_unit,
    split,
    star_eval,
    star_via_composition,
    symm_eval,
)
from .extension import ext_from_holomorphic, restriction_stem
from .polynomial import SlicePolynomial
from .quaternion import ImaginaryUnit, Quaternion, SlicePoint, from_slice, slice_coords
from .representation import general_representation

_MASK = (1 << 64) - 1

# Sampling box: x in [-2, 2], y in [0.1, 2]; y is bounded away from 0 because
# slice-dependent residuals are ill-defined on the real axis.
BOX_X = 2.0
BOX_Y_MIN = 0.1
BOX_Y_MAX = 2.0


class SplitMix64:
    """Deterministic 64-bit linear-state generator (splitmix style)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        u = (self.next_u64() >> 11) * (2.0 ** -53)
        return lo + (hi - lo) * u

    def gauss(self) -> float:
        # Box-Muller; u1 is kept away from 0.
        u1 = (self.next_u64() >> 11) * (2.0 ** -53)
        u2 = (self.next_u64() >> 11) * (2.0 ** -53)
        if u1 <= 0.0:
            u1 = 2.0 ** -53
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def unit(self) -> ImaginaryUnit:
        # Uniform on S via normalized Gaussian triples.
        while True:
            v = Quaternion(0.0, self.gauss(), self.gauss(), self.gauss())
            if v.im_norm() > 1e-6:
                return ImaginaryUnit(v)

    def unit_pair(self, min_gap: float = 1e-6) -> tuple[ImaginaryUnit, ImaginaryUnit]:
        while True:
            j, k = self.unit(), self.unit()
            if (j.u - k.u).norm() > min_gap:
                return j, k

    def sphere(self) -> tuple[float, float]:
        return self.uniform(-BOX_X, BOX_X), self.uniform(BOX_Y_MIN, BOX_Y_MAX)

    def point(self) -> Quaternion:
        x, y = self.sphere()
        return from_slice(x, y, self.unit())

    def quaternion(self, bound: float = 1.0) -> Quaternion:
        return Quaternion(
            self.uniform(-bound, bound), self.uniform(-bound, bound),
            self.uniform(-bound, bound), self.uniform(-bound, bound),
        )

    def polynomial(self, max_degree: int = 8, coeff_bound: float = 1.0,
                   center: float = 0.0) -> SlicePolynomial:
        degree = 1 + self.next_u64() % max_degree
        coeffs = [self.quaternion(coeff_bound) for _ in range(degree + 1)]
        if coeffs[-1].norm() < 1e-3:
            coeffs[-1] = coeffs[-1] + Quaternion(0.5)
        return SlicePolynomial(center, tuple(coeffs))


@dataclasses.dataclass(frozen=True)
class CheckReport:
    """Outcome of one theorem-shaped check over sampled inputs."""

    name: str
    samples: int
    max_residual: float
    tolerance: float
    passed: bool
    worst_case: tuple[str, float]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "samples": self.samples,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "worst_case": {"input": self.worst_case[0], "residual": self.worst_case[1]},
        }


def _report(name: str, samples: int, residuals: list[tuple[str, float]],
            tolerance: float) -> CheckReport:
    if residuals:
        worst = max(residuals, key=lambda t: t[1])
    else:
        worst = ("no samples", 0.0)
    max_res = worst[1]
    return CheckReport(
        name=name, samples=samples, max_residual=max_res,
        tolerance=tolerance, passed=max_res <= tolerance,
        worst_case=worst,
    )


def check_grf_invariance(f: SliceExpr, spheres: int = 20, unit_pairs: int = 20,
                         seed: int = 7, tolerance: float = 1e-9,
                         name: str = "grf_invariance") -> CheckReport:
    """Spread of the general representation across random unit pairs.

    For each sampled sphere and target point, the value rebuilt from the
    slices L_J and L_K must not depend on the choice of (J, K).
    """
    rng = SplitMix64(seed)
    residuals = []
    for _ in range(spheres):
        x, y = rng.sphere()
        target = SlicePoint(x, y, rng.unit())
        values = []
        for _ in range(unit_pairs):
            j, k = rng.unit_pair()
            v_j = evaluate(f, from_slice(x, y, j))
            v_k = evaluate(f, from_slice(x, y, k))
            values.append(general_representation(v_j, v_k, j, k, target))
        spread = max(
            (a - b).norm() for ai, a in enumerate(values) for b in values[ai + 1:]
        )
        residuals.append((f"sphere x={x:.6g} y={y:.6g}", spread))
    return _report(name, spheres, residuals, tolerance)


def check_identity_suite(f: SliceExpr, g: SliceExpr, points: int = 200,
                         seed: int = 7) -> list[CheckReport]:
    """Pointwise identities of the star calculus over sampled points.

    One report per identity: conjugate anti-homomorphism, the composition
    form of the product, multiplicativity (and commutation) of the
    symmetrization, left reciprocal identity, slice preservation of f^s.
    The right reciprocal identity is measured and reported as well.
    """
    rng = SplitMix64(seed)
    antihom, compose, multiplicative, commute = [], [], [], []
    left_recip, right_recip, slice_pres = [], [], []
    fg = Star(f, g)
    recip_f = Recip(f)
    for _ in range(points):
        q = rng.point()
        tag = f"q=({q.x0:.4g},{q.x1:.4g},{q.x2:.4g},{q.x3:.4g})"

        lhs = conj_eval(fg, q)
        rhs = star_eval(Conj(g), Conj(f), q)
        antihom.append((tag, (lhs - rhs).norm()))

        star = star_eval(f, g, q)
        if evaluate(f, q).norm() > 1e-6:
            compose.append((tag, (star_via_composition(f, g, q) - star).norm()))

        sf, sg = symm_eval(f, q), symm_eval(g, q)
        # Both symmetrization residuals are measured relative to the product
        # magnitude, which can reach ~1e5 inside the sampling box; an
        # absolute tolerance there would only measure rounding noise.
        scale = max(1.0, sf.norm() * sg.norm())
        multiplicative.append((tag, (symm_eval(fg, q) - sf * sg).norm() / scale))
        commute.append((tag, (sf * sg - sg * sf).norm() / scale))

        sp = slice_coords(q)
        if not sp.unit_is_arbitrary:
            j = orthogonal_unit(sp.unit)
            parts = split(sf, sp.unit, j)
            slice_pres.append((tag, abs(parts.g)))

        if sf.norm() > 1e-3:
            left_recip.append((tag, (star_eval(recip_f, f, q) - Quaternion(1.0)).norm()))
            right_recip.append((tag, (star_eval(f, recip_f, q) - Quaternion(1.0)).norm()))

    return [
        _report("conjugate_antihomomorphism", len(antihom), antihom, 1e-9),
        _report("star_composition_form", len(compose), compose, 1e-8),
        _report("symmetrization_multiplicative", len(multiplicative), multiplicative, 1e-9),
        _report("symmetrization_factors_commute", len(commute), commute, 1e-12),
        _report("symmetrization_slice_preservation", len(slice_pres), slice_pres, 1e-10),
        _report("reciprocal_left_identity", len(left_recip), left_recip, 1e-8),
        _report("reciprocal_right_identity", len(right_recip), right_recip, 1e-8),
    ]


def check_extension_roundtrip(f: SlicePolynomial, unit: ImaginaryUnit,
                              points: int = 100, seed: int = 7,
                              tolerance: float = 1e-9) -> CheckReport:
    """Extension of the slice restriction of a polynomial reproduces it."""
    rng = SplitMix64(seed)
    ext = ext_from_holomorphic(restriction_stem(Poly(f), unit))
    residuals = []
    for _ in range(points):
        q = rng.point()
        tag = f"q=({q.x0:.4g},{q.x1:.4g},{q.x2:.4g},{q.x3:.4g})"
        residuals.append((tag, (evaluate(ext, q) - f.evaluate(q)).norm()))
    return _report("extension_roundtrip", points, residuals, tolerance)
