"""Representation formulas and axially symmetric domains.

The two formula operations are pure quaternion arithmetic on precomputed
slice values.  Domains are represented by their (x, y) picture on a single
slice (unions of discs and axis-aligned rectangles); the axially symmetric
set they describe depends on a point q only through (Re(q), |Im(q)|).
"""

from __future__ import annotations

import dataclasses
from collections import deque
from typing import Iterable

from .errors import DegenerateUnits
from .quaternion import ImaginaryUnit, Quaternion, SlicePoint, quat_inv, slice_coords

DEGENERATE_UNIT_TOL = 1e-9
DEFAULT_GRID_STEP = 1e-2


def representation(f_plus: Quaternion, f_minus: Quaternion, j: ImaginaryUnit,
                   target: SlicePoint) -> Quaternion:
    """Value at x + y*I from the values f(x + y*J) and f(x - y*J).

    f(x+yI) = 1/2 [f(x+yJ) + f(x-yJ)] + I * 1/2 [J (f(x-yJ) - f(x+yJ))]
    """
    b = (f_plus + f_minus) * 0.5
    c = (j.u * (f_minus - f_plus)) * 0.5
    return b + target.unit.u * c


def general_representation(v_j: Quaternion, v_k: Quaternion, j: ImaginaryUnit,
                           k: ImaginaryUnit, target: SlicePoint) -> Quaternion:
    """Value at x + y*I from the values f(x + y*J) and f(x + y*K), J != K.

    f(x+yI) = (J-K)^{-1} [J f(x+yJ) - K f(x+yK)]
            + I (J-K)^{-1} [f(x+yJ) - f(x+yK)]
    """
    d = j.u - k.u
    if d.norm() <= DEGENERATE_UNIT_TOL:
        raise DegenerateUnits("the two imaginary units must differ")
    dinv = quat_inv(d)
    b = dinv * (j.u * v_j - k.u * v_k)
    c = dinv * (v_j - v_k)
    return b + target.unit.u * c


# ---------------------------------------------------------------------------
# Slice regions and axially symmetric domains
# ---------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Disc:
    """Open disc in the (x, y) coordinates of one slice."""

    cx: float
    cy: float
    r: float

    def contains(self, x: float, y: float) -> bool:
        dx, dy = x - self.cx, y - self.cy
        return dx * dx + dy * dy < self.r * self.r

    def bounds(self):
        return (self.cx - self.r, self.cx + self.r, self.cy - self.r, self.cy + self.r)

    def mirrored(self):
        return Disc(self.cx, -self.cy, self.r)


@dataclasses.dataclass(frozen=True)
class Rect:
    """Open box (x0, x1) x (y0, y1) in the coordinates of one slice."""

    x0: float
    x1: float
    y0: float
    y1: float

    def contains(self, x: float, y: float) -> bool:
        return self.x0 < x < self.x1 and self.y0 < y < self.y1

    def bounds(self):
        return (self.x0, self.x1, self.y0, self.y1)

    def mirrored(self):
        return Rect(self.x0, self.x1, -self.y1, -self.y0)


@dataclasses.dataclass(frozen=True)
class SliceRegion:
    """Finite union of shapes on one slice (y may be negative)."""

    shapes: tuple

    def contains(self, x: float, y: float) -> bool:
        return any(s.contains(x, y) for s in self.shapes)

    def is_empty(self) -> bool:
        return not self.shapes

    def bounds(self):
        bs = [s.bounds() for s in self.shapes]
        return (
            min(b[0] for b in bs), max(b[1] for b in bs),
            min(b[2] for b in bs), max(b[3] for b in bs),
        )

    def mirrored(self) -> "SliceRegion":
        return SliceRegion(tuple(s.mirrored() for s in self.shapes))

    def is_axis_symmetric(self, step: float = DEFAULT_GRID_STEP) -> bool:
        """Sampled check that (x, y) in region iff (x, -y) in region."""
        x0, x1, y0, y1 = self.bounds()
        x0, x1 = x0 - step, x1 + step
        top = max(abs(y0), abs(y1)) + step
        x = x0
        while x <= x1:
            y = step / 2.0
            while y <= top:
                if self.contains(x, y) != self.contains(x, -y):
                    return False
                y += step
            x += step
        return True

    def real_trace_samples(self, count: int = 32) -> list[float]:
        """Evenly spaced points of the region's intersection with the real axis."""
        x0, x1, _, _ = self.bounds()
        if count < 2:
            count = 2
        pts = []
        for n in range(count * 8):
            x = x0 + (x1 - x0) * n / (count * 8 - 1)
            if self.contains(x, 0.0):
                pts.append(x)
        if len(pts) > count:
            stride = len(pts) / count
            pts = [pts[int(m * stride)] for m in range(count)]
        return pts


EVERYWHERE = None  # stand-in for "no declared domain restriction"


def region_from_discs_and_boxes(discs: Iterable[Disc] = (), boxes: Iterable[Rect] = ()) -> SliceRegion:
    return SliceRegion(tuple(discs) + tuple(boxes))


@dataclasses.dataclass(frozen=True)
class AxialDomain:
    """Axially symmetric set described by a slice region.

    Membership of q depends only on (Re(q), |Im(q)|): q belongs to the domain
    iff the generating region contains (x, y) or (x, -y) for y = |Im(q)|.
    """

    region: SliceRegion
    contains_real: bool
    is_s_domain: bool
    grid_step: float = DEFAULT_GRID_STEP
    axially_symmetric: bool = True

    def contains(self, q: Quaternion) -> bool:
        p = slice_coords(q)
        return self.region.contains(p.x, p.y) or self.region.contains(p.x, -p.y)

    def contains_xy(self, x: float, y: float) -> bool:
        y = abs(y)
        return self.region.contains(x, y) or self.region.contains(x, -y)


def _slice_components(region: SliceRegion, step: float) -> tuple[int, bool]:
    """Flood-fill count of connected components of the mirrored slice set.

    Returns (component count, touches real axis).  The slice set on any L_I is
    the region together with its mirror image across the real axis.
    """
    x0, x1, y0, y1 = region.bounds()
    top = max(abs(y0), abs(y1))
    x0, x1 = x0 - step, x1 + step
    ylo, yhi = -top - step, top + step
    nx = max(2, int((x1 - x0) / step) + 1)
    ny = max(2, int((yhi - ylo) / step) + 1)

    def inside(ix, iy):
        x = x0 + ix * step
        y = ylo + iy * step
        return region.contains(x, abs(y)) or region.contains(x, -abs(y))

    grid = [[inside(ix, iy) for iy in range(ny)] for ix in range(nx)]
    touches_real = any(
        grid[ix][iy] and abs(ylo + iy * step) < step
        for ix in range(nx) for iy in range(ny)
    )
    seen = [[False] * ny for _ in range(nx)]
    components = 0
    for sx in range(nx):
        for sy in range(ny):
            if not grid[sx][sy] or seen[sx][sy]:
                continue
            components += 1
            queue = deque([(sx, sy)])
            seen[sx][sy] = True
            while queue:
                ix, iy = queue.popleft()
                for jx, jy in ((ix + 1, iy), (ix - 1, iy), (ix, iy + 1), (ix, iy - 1)):
                    if 0 <= jx < nx and 0 <= jy < ny and grid[jx][jy] and not seen[jx][jy]:
                        seen[jx][jy] = True
                        queue.append((jx, jy))
    return components, touches_real


def symmetric_completion(region: SliceRegion, grid_step: float = DEFAULT_GRID_STEP) -> AxialDomain:
    """Union of the spheres x + y*S over the points x + y*J of a slice region.

    The result is always axially symmetric; it is an s-domain iff it meets the
    real axis and its intersection with one (hence every) slice is connected,
    decided by a flood fill on a rasterized picture of the slice set.
    """
    if region.is_empty():
        return AxialDomain(region, contains_real=False, is_s_domain=False, grid_step=grid_step)
    components, touches_real = _slice_components(region, grid_step)
    is_s = touches_real and components == 1
    return AxialDomain(region, contains_real=touches_real, is_s_domain=is_s, grid_step=grid_step)
