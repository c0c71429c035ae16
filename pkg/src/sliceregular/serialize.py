"""JSON encodings for quaternions, polynomials, expressions and domains.

All numbers are IEEE-754 doubles; emitted values re-parse to equal in-memory
values (Python serializes floats with shortest round-trip representation).
"""

from __future__ import annotations

import math

from .expr import Conj, Ext, Poly, Recip, RightScalar, SliceExpr, Star, Sum, Symm
from .extension import ext_from_holomorphic, restriction_stem
from .polynomial import SlicePolynomial
from .quaternion import ImaginaryUnit, Quaternion
from .representation import AxialDomain, Disc, Rect, SliceRegion, symmetric_completion
from .zeros import SphereZero, ZeroKind


class DecodeError(ValueError):
    """Malformed JSON payload (wrong shape, missing key, non-finite number)."""


def _finite(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DecodeError(f"{what} must be a number, got {value!r}")
    x = float(value)
    if not math.isfinite(x):
        raise DecodeError(f"{what} must be finite, got {value!r}")
    return x


def quaternion_to_json(q: Quaternion) -> list[float]:
    return [q.x0, q.x1, q.x2, q.x3]


def quaternion_from_json(data) -> Quaternion:
    if not isinstance(data, list) or len(data) != 4:
        raise DecodeError(f"quaternion must be an array of 4 doubles, got {data!r}")
    return Quaternion(*(_finite(v, "quaternion component") for v in data))


def poly_to_json(p: SlicePolynomial) -> dict:
    return {"center": p.center, "coeffs": [quaternion_to_json(c) for c in p.coeffs]}


def poly_from_json(data) -> SlicePolynomial:
    if not isinstance(data, dict) or "coeffs" not in data:
        raise DecodeError(f"polynomial must be an object with 'coeffs', got {data!r}")
    coeffs = data["coeffs"]
    if not isinstance(coeffs, list) or not coeffs:
        raise DecodeError("polynomial 'coeffs' must be a non-empty array")
    center = _finite(data.get("center", 0.0), "polynomial center")
    return SlicePolynomial(center, tuple(quaternion_from_json(c) for c in coeffs))


def domain_from_json(data) -> AxialDomain:
    region = region_from_json(data)
    grid_step = _finite(data.get("grid_step", 1e-2), "grid step") if isinstance(data, dict) else 1e-2
    return symmetric_completion(region, grid_step=grid_step)


def region_from_json(data) -> SliceRegion:
    if not isinstance(data, dict):
        raise DecodeError(f"domain must be an object, got {data!r}")
    shapes = []
    for box in data.get("boxes", []):
        if not isinstance(box, dict):
            raise DecodeError(f"domain box must be an object, got {box!r}")
        x0 = _finite(box["x0"], "box x0") if "x0" in box else _missing("x0")
        x1 = _finite(box["x1"], "box x1") if "x1" in box else _missing("x1")
        y1 = _finite(box["y1"], "box y1") if "y1" in box else _missing("y1")
        y0 = _finite(box.get("y0", 0.0), "box y0")
        shapes.append(Rect(x0, x1, y0, y1))
    for disc in data.get("discs", []):
        if not isinstance(disc, dict):
            raise DecodeError(f"domain disc must be an object, got {disc!r}")
        if "r" not in disc:
            _missing("r")
        shapes.append(Disc(
            _finite(disc.get("cx", 0.0), "disc cx"),
            _finite(disc.get("cy", 0.0), "disc cy"),
            _finite(disc["r"], "disc r"),
        ))
    if not shapes:
        raise DecodeError("domain needs at least one box or disc")
    return SliceRegion(tuple(shapes))


def _missing(key: str):
    raise DecodeError(f"missing required key {key!r}")


def expr_to_json(f: SliceExpr) -> dict:
    if isinstance(f, Poly):
        out = poly_to_json(f.poly)
        out["op"] = "poly"
        return out
    if isinstance(f, Star):
        return {"op": "star", "f": expr_to_json(f.f), "g": expr_to_json(f.g)}
    if isinstance(f, Conj):
        return {"op": "conj", "f": expr_to_json(f.f)}
    if isinstance(f, Symm):
        return {"op": "symm", "f": expr_to_json(f.f)}
    if isinstance(f, Recip):
        return {"op": "recip", "f": expr_to_json(f.f)}
    if isinstance(f, Sum):
        return {"op": "sum", "f": expr_to_json(f.f), "g": expr_to_json(f.g)}
    if isinstance(f, RightScalar):
        return {"op": "rscale", "f": expr_to_json(f.f), "a": quaternion_to_json(f.a)}
    raise DecodeError(f"expression node has no JSON encoding: {type(f).__name__}")


def expr_from_json(data) -> SliceExpr:
    if not isinstance(data, dict) or "op" not in data:
        raise DecodeError(f"expression must be an object with an 'op' tag, got {data!r}")
    op = data["op"]
    if op == "poly":
        return Poly(poly_from_json(data))
    if op == "star":
        return Star(expr_from_json(data["f"]), expr_from_json(data["g"]))
    if op == "conj":
        return Conj(expr_from_json(data["f"]))
    if op == "symm":
        return Symm(expr_from_json(data["f"]))
    if op == "recip":
        return Recip(expr_from_json(data["f"]))
    if op == "sum":
        return Sum(expr_from_json(data["f"]), expr_from_json(data["g"]))
    if op == "rscale":
        return RightScalar(expr_from_json(data["f"]), quaternion_from_json(data["a"]))
    if op == "ext":
        # Stems are callables; over the wire an extension is specified by a
        # polynomial stem restricted to one slice (plus an optional domain).
        if "stem" not in data or "slice" not in data:
            raise DecodeError("ext expression needs 'stem' (polynomial) and 'slice' (unit)")
        poly = poly_from_json(data["stem"])
        unit_q = quaternion_from_json(data["slice"])
        try:
            unit = ImaginaryUnit(unit_q)
        except Exception as exc:
            raise DecodeError(f"'slice' is not an imaginary unit: {exc}") from exc
        region = region_from_json(data["domain"]) if "domain" in data else None
        return ext_from_holomorphic(restriction_stem(Poly(poly), unit, region=region))
    raise DecodeError(f"unknown expression op {op!r}")


def sphere_zero_to_json(z: SphereZero) -> dict:
    out = {"x": z.x, "y": z.y, "kind": z.kind.value, "residual": z.residual}
    if z.kind is ZeroKind.ISOLATED and z.unit is not None and not z.unit_is_arbitrary:
        out["unit"] = quaternion_to_json(z.unit.u)
    return out
