"""Exact geometry of the hyperbolic plane in the Poincare disk and half-plane charts.

Both charts are conformal: disk with lambda = 2/(1 - x^2 - y^2), half-plane
with lambda = 1/y.  Curves of constant geodesic curvature kappa are Euclidean
circles or lines in either chart and are kept in that exact representation;
sampling happens only inside quadratures.  In the disk chart a Euclidean circle
with center c and radius R has

    kappa_g = (1 - |c|^2 + R^2) / (2R)

against the normal pointing at the center, and a chord at Euclidean distance
delta from the origin has kappa_g = delta toward the origin side.  |kappa| < 1
gives hypercycles, |kappa| = 1 horocycles, |kappa| > 1 metric circles,
kappa = 0 geodesics.

Areas come from Gauss-Bonnet at curvature -1,

    area = sum_arcs int kappa_g ds + sum corners eps - 2 pi,

for a disk-type region traversed with the region on the left and kappa_g
measured against the left (inward) co-normal.  Horodisk truncation at ideal
vertices is supported throughout; a horocycle arc seen from outside its
horodisk carries kappa_g = -1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import (
    ChartMismatch,
    IdealPointError,
    InfiniteLength,
    NonFinite,
    NoSuchArc,
    OpenBoundary,
)

DISK = "disk"
HALF_PLANE = "half_plane"

LEFT = 1    # arc bulges to the left of the directed chord
RIGHT = -1

_IDEAL_TOL = 1e-9


@dataclass(frozen=True)
class ModelPoint:
    chart: str
    x: float
    y: float
    ideal: bool = False

    def __post_init__(self):
        if self.chart not in (DISK, HALF_PLANE):
            raise ChartMismatch(f"unknown chart {self.chart!r}")

    @property
    def z(self):
        return complex(self.x, self.y)

    def close_to(self, other, tol=1e-12):
        if self.chart != other.chart:
            return False
        if math.isinf(self.y) or math.isinf(other.y):
            return math.isinf(self.y) and math.isinf(other.y)
        return abs(self.x - other.x) <= tol and abs(self.y - other.y) <= tol


def disk_point(x, y):
    return ModelPoint(DISK, x, y, ideal=(x * x + y * y >= 1.0 - _IDEAL_TOL))


def half_plane_point(x, y):
    return ModelPoint(HALF_PLANE, x, y, ideal=(y <= _IDEAL_TOL or math.isinf(y)))


def ideal_disk_point(angle):
    return ModelPoint(DISK, math.cos(angle), math.sin(angle), ideal=True)


HALF_PLANE_INFINITY = ModelPoint(HALF_PLANE, 0.0, math.inf, ideal=True)


def conformal_factor(chart, x, y):
    """lambda of the chart at (x, y); array friendly."""
    if chart == DISK:
        return 2.0 / (1.0 - x * x - y * y)
    return 1.0 / y


def to_disk(p: ModelPoint) -> ModelPoint:
    """Chart map half-plane -> disk, z -> (z - i)/(z + i); identity on disk points."""
    if p.chart == DISK:
        return p
    if math.isinf(p.y) or math.isinf(p.x):
        return ModelPoint(DISK, 1.0, 0.0, ideal=True)
    den = p.x * p.x + (p.y + 1.0) ** 2
    return ModelPoint(DISK, (p.x * p.x + p.y * p.y - 1.0) / den,
                      -2.0 * p.x / den, ideal=p.ideal)


def to_half_plane(p: ModelPoint) -> ModelPoint:
    """Chart map disk -> half-plane, z -> i(1 + z)/(1 - z); (1, 0) goes to infinity."""
    if p.chart == HALF_PLANE:
        return p
    den = (1.0 - p.x) ** 2 + p.y * p.y
    if den < 1e-30:
        return HALF_PLANE_INFINITY
    return ModelPoint(HALF_PLANE, -2.0 * p.y / den,
                      (1.0 - p.x * p.x - p.y * p.y) / den, ideal=p.ideal)


def hyp_distance(p: ModelPoint, q: ModelPoint) -> float:
    """Hyperbolic distance between interior points of a common chart."""
    if p.chart != q.chart:
        raise ChartMismatch(f"{p.chart} vs {q.chart}")
    if p.ideal or q.ideal:
        raise IdealPointError("distance to an ideal point is infinite")
    dx, dy = p.x - q.x, p.y - q.y
    if p.chart == DISK:
        den = (1.0 - p.x * p.x - p.y * p.y) * (1.0 - q.x * q.x - q.y * q.y)
        arg = 1.0 + 2.0 * (dx * dx + dy * dy) / den
    else:
        arg = 1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y)
    return math.acosh(max(arg, 1.0))


# ---------------------------------------------------------------------------
# Mobius transformations of the disk (used to normalize arc constructions)
# ---------------------------------------------------------------------------

class Mobius:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d

    def __call__(self, z):
        return (self.a * z + self.b) / (self.c * z + self.d)

    def inv(self):
        return Mobius(self.d, -self.b, -self.c, self.a)

    def compose(self, other):
        return Mobius(self.a * other.a + self.b * other.c,
                      self.a * other.b + self.b * other.d,
                      self.c * other.a + self.d * other.c,
                      self.c * other.b + self.d * other.d)

    @staticmethod
    def disk_center(w):
        """Disk automorphism sending w to 0."""
        return Mobius(1.0, -w, -w.conjugate(), 1.0)

    @staticmethod
    def rotation(phi):
        return Mobius(cmath.exp(1j * phi), 0.0, 0.0, 1.0)


def geodesic_midpoint(p: ModelPoint, q: ModelPoint) -> ModelPoint:
    """Hyperbolic midpoint of two interior disk points."""
    p, q = to_disk(p), to_disk(q)
    m = Mobius.disk_center(p.z)
    w = m(q.z)
    rho = 2.0 * math.atanh(min(abs(w), 1.0 - 1e-16))
    mid = math.tanh(rho / 4.0) * w / abs(w) if abs(w) > 0 else 0.0j
    z = m.inv()(mid)
    return disk_point(z.real, z.imag)


# ---------------------------------------------------------------------------
# Constant geodesic curvature arcs
# ---------------------------------------------------------------------------

class CurvatureArc:
    """Arc of constant geodesic curvature in the disk chart.

    `kappa` is signed against the left co-normal of the travel direction
    p -> q; reversing the arc negates it.  Geometry is an exact Euclidean
    circle (center, radius, endpoint angles, travel sense) or a straight
    segment (center is None).
    """

    def __init__(self, p, q, kappa, *, center=None, radius=None,
                 theta_p=None, theta_q=None, ccw=None):
        self.p = p
        self.q = q
        self.kappa = kappa
        self.center = center
        self.radius = radius
        self.theta_p = theta_p
        self.theta_q = theta_q
        self.ccw = ccw

    @property
    def is_line(self):
        return self.center is None

    @property
    def sweep(self):
        """Signed angular extent (positive for ccw travel)."""
        if self.is_line:
            return 0.0
        d = (self.theta_q - self.theta_p) % (2.0 * math.pi)
        if self.ccw:
            return d
        return d - 2.0 * math.pi if d > 0 else -2.0 * math.pi if d == 0 else d

    def point(self, t):
        """Point at parameter t in [0, 1] (uniform in chord / angle)."""
        if self.is_line:
            x = self.p.x + t * (self.q.x - self.p.x)
            y = self.p.y + t * (self.q.y - self.p.y)
        else:
            th = self.theta_p + t * self.sweep
            x = self.center[0] + self.radius * math.cos(th)
            y = self.center[1] + self.radius * math.sin(th)
        return disk_point(x, y)

    def xy(self, t):
        if self.is_line:
            return (self.p.x + t * (self.q.x - self.p.x),
                    self.p.y + t * (self.q.y - self.p.y))
        th = self.theta_p + t * self.sweep
        return (self.center[0] + self.radius * math.cos(th),
                self.center[1] + self.radius * math.sin(th))

    def tangent(self, t):
        """Unit Euclidean tangent along the travel direction at parameter t."""
        if self.is_line:
            dx, dy = self.q.x - self.p.x, self.q.y - self.p.y
        else:
            th = self.theta_p + t * self.sweep
            s = 1.0 if self.ccw else -1.0
            dx, dy = -s * math.sin(th), s * math.cos(th)
        n = math.hypot(dx, dy)
        return dx / n, dy / n

    def reversed(self):
        return CurvatureArc(self.q, self.p, -self.kappa, center=self.center,
                            radius=self.radius, theta_p=self.theta_q,
                            theta_q=self.theta_p,
                            ccw=None if self.ccw is None else not self.ccw)

    def is_left(self, x, y):
        """True if (x, y) lies on the left of the travel direction."""
        if self.is_line:
            dx, dy = self.q.x - self.p.x, self.q.y - self.p.y
            return dx * (y - self.p.y) - dy * (x - self.p.x) > 0
        inside = math.hypot(x - self.center[0], y - self.center[1]) < self.radius
        return inside == bool(self.ccw)

    def same_geometry(self, other, tol=1e-8):
        """Same point set (endpoints and supporting circle), either orientation."""
        ends = ((self.p.close_to(other.p, tol) and self.q.close_to(other.q, tol))
                or (self.p.close_to(other.q, tol) and self.q.close_to(other.p, tol)))
        if not ends:
            return False
        if self.is_line or other.is_line:
            return self.is_line == other.is_line
        return (abs(self.center[0] - other.center[0]) < tol
                and abs(self.center[1] - other.center[1]) < tol
                and abs(self.radius - other.radius) < tol)

    def __repr__(self):
        kind = "line" if self.is_line else f"circle(R={self.radius:.4g})"
        return (f"CurvatureArc(({self.p.x:.4g},{self.p.y:.4g})->"
                f"({self.q.x:.4g},{self.q.y:.4g}), kappa={self.kappa:.4g}, {kind})")


class IdealArc:
    """Counterclockwise arc of the ideal boundary circle from p to q.

    A boundary piece of unbounded regions only; it has no interior geometry.
    """

    def __init__(self, p, q):
        p, q = to_disk(p), to_disk(q)
        if not (p.ideal and q.ideal):
            raise IdealPointError("IdealArc endpoints must be ideal")
        self.p = p
        self.q = q
        self.kappa = None

    @property
    def angle_p(self):
        return math.atan2(self.p.y, self.p.x)

    @property
    def angle_q(self):
        return math.atan2(self.q.y, self.q.x)

    def point(self, t):
        sweep = (self.angle_q - self.angle_p) % (2.0 * math.pi)
        return ideal_disk_point(self.angle_p + t * sweep)

    def __repr__(self):
        return f"IdealArc({self.angle_p:.4f} -> {self.angle_q:.4f})"


def _circumcircle(z1, z2, z3):
    """Euclidean circumcircle of three complex points; None if collinear."""
    d = 2.0 * (z1.real * (z2.imag - z3.imag) + z2.real * (z3.imag - z1.imag)
               + z3.real * (z1.imag - z2.imag))
    scale = max(abs(z1 - z2), abs(z2 - z3), abs(z3 - z1))
    if abs(d) < 1e-12 * scale * scale:
        return None
    a1, a2, a3 = abs(z1) ** 2, abs(z2) ** 2, abs(z3) ** 2
    ux = (a1 * (z2.imag - z3.imag) + a2 * (z3.imag - z1.imag) + a3 * (z1.imag - z2.imag)) / d
    uy = (a1 * (z3.real - z2.real) + a2 * (z1.real - z3.real) + a3 * (z2.real - z1.real)) / d
    c = complex(ux, uy)
    return c, abs(z1 - c)


def _line_kappa_left(zp, zq):
    """kappa against the left normal for the straight segment zp -> zq."""
    d = zq - zp
    n = complex(-d.imag, d.real) / abs(d)
    m = 0.5 * (zp + zq)
    return -(m.real * n.real + m.imag * n.imag)


def arc_from_three_points(p: ModelPoint, q: ModelPoint, via) -> CurvatureArc:
    """CurvatureArc through disk points p -> q passing through `via` (complex
    or ModelPoint)."""
    p, q = to_disk(p), to_disk(q)
    zmid = via.z if isinstance(via, ModelPoint) else complex(via)
    circ = _circumcircle(p.z, q.z, zmid)
    if circ is None:
        return CurvatureArc(p, q, _line_kappa_left(p.z, q.z))
    c, r = circ
    thp = cmath.phase(p.z - c)
    thq = cmath.phase(q.z - c)
    thm = cmath.phase(zmid - c)
    ccw = ((thm - thp) % (2.0 * math.pi)) <= ((thq - thp) % (2.0 * math.pi))
    kappa_circle = (1.0 - abs(c) ** 2 + r * r) / (2.0 * r)
    kappa_left = kappa_circle if ccw else -kappa_circle
    return CurvatureArc(p, q, kappa_left, center=(c.real, c.imag), radius=r,
                        theta_p=thp, theta_q=thq, ccw=ccw)


def _geodesic_arc(p, q):
    """Geodesic through disk points p, q: diameter chord or orthogonal circle."""
    zp, zq = p.z, q.z
    cross = zp.real * zq.imag - zp.imag * zq.real
    if abs(cross) < 1e-14 * max(abs(zp - zq), 1e-30):
        return CurvatureArc(p, q, 0.0)
    # center solves 2 c . p = 1 + |p|^2 and 2 c . q = 1 + |q|^2
    ax, ay, b1 = 2.0 * zp.real, 2.0 * zp.imag, 1.0 + abs(zp) ** 2
    cx_, cy_, b2 = 2.0 * zq.real, 2.0 * zq.imag, 1.0 + abs(zq) ** 2
    det = ax * cy_ - ay * cx_
    cx = (b1 * cy_ - b2 * ay) / det
    cy = (ax * b2 - cx_ * b1) / det
    c = complex(cx, cy)
    r = math.sqrt(max(abs(c) ** 2 - 1.0, 0.0))
    zin = c * (1.0 - r / abs(c))    # circle point nearest the origin
    arc = arc_from_three_points(p, q, zin)
    arc.kappa = 0.0
    return arc


def _normalize(p, q):
    """Disk automorphism sending (p, q) to (-rho, 0), (rho, 0); returns (map, rho)."""
    if p.ideal and q.ideal:
        g = _geodesic_arc(p, q)
        zm = g.point(0.5).z
        m = Mobius.disk_center(zm)
        rho = 1.0
    elif not p.ideal and not q.ideal:
        zm = geodesic_midpoint(p, q).z
        m = Mobius.disk_center(zm)
        rho = abs(m(q.z))
    else:
        raise ValueError("mixed endpoint pair is normalized separately")
    w = m(q.z)
    return Mobius.rotation(-cmath.phase(w)).compose(m), rho


def arc_through(p: ModelPoint, q: ModelPoint, kappa: float, side: int = LEFT) -> CurvatureArc:
    """Arc of constant geodesic curvature |kappa| joining p and q.

    `side` fixes toward which side of the directed geodesic p -> q the arc
    bulges (LEFT or RIGHT).  Every such arc curves back toward the geodesic,
    so |kappa| together with the side determines it; the returned arc stores
    kappa against the left co-normal of travel (bulging left means
    arc.kappa = -|kappa|).  kappa = 0 returns the geodesic itself.
    """
    p, q = to_disk(p), to_disk(q)
    if p.close_to(q):
        raise NoSuchArc("coincident endpoints")
    if side not in (LEFT, RIGHT):
        raise ValueError("side must be LEFT (+1) or RIGHT (-1)")
    k = abs(kappa)

    both_ideal = p.ideal and q.ideal
    one_ideal = p.ideal != q.ideal
    if both_ideal and k >= 1.0 - 1e-14:
        raise NoSuchArc("|kappa| >= 1 cannot join two ideal points "
                        "(a horocycle has a single ideal point)")
    if one_ideal and k > 1.0 + 1e-14:
        raise NoSuchArc("|kappa| > 1 arcs do not reach the ideal boundary")

    if k < 1e-15:
        return _geodesic_arc(p, q)

    if one_ideal and p.ideal:
        return arc_through(q, p, kappa, -side).reversed()

    if one_ideal:
        # normalize interior p -> 0, ideal q -> 1: circles through both have
        # center (1/2, yc), R = 1/(2 kappa_circle)
        m = Mobius.disk_center(p.z)
        mob = Mobius.rotation(-cmath.phase(m(q.z))).compose(m)
        R = 1.0 / (2.0 * k)
        yc = -side * math.sqrt(max(R * R - 0.25, 0.0))
        zmid = complex(0.5, yc + side * R)
    else:
        # symmetric frame (+-rho on the real axis): center (0, yc),
        # kappa_circle = (1 + rho^2)/(2R)
        mob, rho = _normalize(p, q)
        R = (1.0 + rho * rho) / (2.0 * k)
        if R < rho * (1.0 - 1e-14):
            raise NoSuchArc(f"no arc of curvature {k:.6g} through these points "
                            f"(max {(1.0 + rho * rho) / (2.0 * rho):.6g})")
        yc = -side * math.sqrt(max(R * R - rho * rho, 0.0))
        zmid = complex(0.0, yc + side * R)

    return arc_from_three_points(p, q, mob.inv()(zmid))


def arc_with_inward_kappa(p, q, kappa_inward) -> CurvatureArc:
    """Arc for a positively oriented boundary cycle.

    kappa_inward is the geodesic curvature against the inward (left of
    travel) normal; positive values bulge away from the region.
    """
    if abs(kappa_inward) < 1e-15:
        return _geodesic_arc(to_disk(p), to_disk(q))
    side = RIGHT if kappa_inward > 0 else LEFT
    return arc_through(p, q, abs(kappa_inward), side=side)


# ---------------------------------------------------------------------------
# Horocycles and truncation families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Horocycle:
    """Horocycle tangent to the ideal circle; `size` is its Euclidean diameter
    in the disk chart."""
    ideal_point: ModelPoint
    size: float

    def __post_init__(self):
        if not self.ideal_point.ideal:
            raise IdealPointError("horocycle base point must be ideal")
        if not 0.0 < self.size < 2.0:
            raise ValueError("horocycle size must lie in (0, 2)")

    @property
    def center(self):
        p = to_disk(self.ideal_point)
        f = 1.0 - self.size / 2.0
        return (f * p.x, f * p.y)

    @property
    def radius(self):
        return self.size / 2.0

    def contains(self, x, y, slack=0.0):
        cx, cy = self.center
        return math.hypot(x - cx, y - cy) < self.radius + slack

    def scaled(self, factor):
        return Horocycle(self.ideal_point, self.size * factor)


class TruncationFamily:
    """One horocycle per ideal vertex; pairwise disjoint, clear of bounded edges."""

    def __init__(self, horocycles, bounded_edges=None):
        self.horocycles = list(horocycles)
        n = len(self.horocycles)
        for i in range(n):
            for j in range(i + 1, n):
                hi, hj = self.horocycles[i], self.horocycles[j]
                ci, cj = hi.center, hj.center
                if math.hypot(ci[0] - cj[0], ci[1] - cj[1]) <= hi.radius + hj.radius:
                    raise ValueError("horocycles must be pairwise disjoint")
        if bounded_edges:
            for arc in bounded_edges:
                for h in self.horocycles:
                    if any(h.contains(*arc.xy(t)) for t in np.linspace(0, 1, 33)):
                        raise ValueError("horocycle intersects a bounded edge")
        self.pairwise_disjoint = True

    def at(self, ideal_point, tol=1e-7):
        p = to_disk(ideal_point)
        for h in self.horocycles:
            if to_disk(h.ideal_point).close_to(p, tol):
                return h
        return None

    def scaled(self, factor):
        return TruncationFamily([h.scaled(factor) for h in self.horocycles])


def _clip_param_at_horocycle(arc, h, at_end):
    """Arc parameter where it crosses the horocycle guarding one ideal end.

    at_end = 0 clips near p, 1 near q.  Exact circle/line intersection; the
    crossing nearest the interior of the arc is returned.
    """
    cx, cy = h.center
    r = h.radius
    sols = []
    if arc.is_line:
        px, py = arc.p.x, arc.p.y
        dx, dy = arc.q.x - px, arc.q.y - py
        a = dx * dx + dy * dy
        b = 2.0 * (dx * (px - cx) + dy * (py - cy))
        c = (px - cx) ** 2 + (py - cy) ** 2 - r * r
        disc = b * b - 4 * a * c
        if disc < 0:
            return None
        for s in (-1.0, 1.0):
            t = (-b + s * math.sqrt(disc)) / (2 * a)
            if -1e-12 <= t <= 1.0 + 1e-12:
                sols.append(min(max(t, 0.0), 1.0))
    else:
        ax, ay = arc.center
        R = arc.radius
        d = math.hypot(cx - ax, cy - ay)
        if d > R + r or d < abs(R - r) or d == 0:
            return None
        aa = (R * R - r * r + d * d) / (2 * d)
        h2 = max(R * R - aa * aa, 0.0)
        hh = math.sqrt(h2)
        ux, uy = (cx - ax) / d, (cy - ay) / d
        sweep = arc.sweep
        for s in (-1.0, 1.0):
            ix = ax + aa * ux - s * hh * uy
            iy = ay + aa * uy + s * hh * ux
            th = math.atan2(iy - ay, ix - ax)
            dth = (th - arc.theta_p) % (2.0 * math.pi)
            if not arc.ccw and dth > 0:
                dth -= 2.0 * math.pi
            t = dth / sweep if sweep != 0 else 0.0
            if -1e-9 <= t <= 1.0 + 1e-9:
                sols.append(min(max(t, 0.0), 1.0))
    if not sols:
        return None
    return min(sols) if at_end == 1 else max(sols)


def arc_length(arc: CurvatureArc, trunc: TruncationFamily | None = None) -> float:
    """Hyperbolic length, minus the sub-arcs inside truncating horodisks.

    An ideal endpoint must be covered by a horocycle of `trunc`, otherwise the
    length is infinite and InfiniteLength is raised.
    """
    t0, t1 = 0.0, 1.0
    for at_end, pt in ((0, arc.p), (1, arc.q)):
        if pt.ideal:
            h = trunc.at(pt) if trunc is not None else None
            if h is None:
                raise InfiniteLength("ideal endpoint without a truncating horocycle")
            t = _clip_param_at_horocycle(arc, h, at_end)
            if t is None:
                raise InfiniteLength("horocycle does not meet the arc")
            if at_end == 0:
                t0 = t
            else:
                t1 = t
    if t1 <= t0:
        return 0.0
    return _arc_segment_length(arc, t0, t1)


def _arc_segment_length(arc, t0, t1):
    if arc.is_line:
        return hyp_distance(arc.point(t0), arc.point(t1))
    if abs(arc.kappa) < 1e-15:
        return hyp_distance(arc.point(t0), arc.point(t1))
    R, sweep = arc.radius, abs(arc.sweep)

    def integrand(t):
        x, y = arc.xy(t)
        return 2.0 / (1.0 - x * x - y * y) * R * sweep

    val, _ = quad(integrand, t0, t1, epsabs=1e-13, epsrel=1e-13, limit=200)
    return val


# ---------------------------------------------------------------------------
# Gauss-Bonnet areas
# ---------------------------------------------------------------------------

def _signed_turn(t_in, t_out):
    cross = t_in[0] * t_out[1] - t_in[1] * t_out[0]
    dot = t_in[0] * t_out[0] + t_in[1] * t_out[1]
    ang = math.atan2(cross, dot)
    if ang < -math.pi + 1e-9:
        ang = math.pi    # cusp turns count positively
    return ang


def _horocycle_arc_between(h, a, b, wedge_arcs=None):
    """Angles (th_a, sweep) of the horocycle arc a -> b inside the region cusp.

    Of the two arcs of the horocycle circle between the clip points, the cusp
    arc is the one avoiding the tangency with the ideal circle (the ideal
    vertex lies on the horocycle circle and always on the other arc).
    """
    cx, cy = h.center
    v = to_disk(h.ideal_point)
    th_a = math.atan2(a[1] - cy, a[0] - cx)
    th_b = math.atan2(b[1] - cy, b[0] - cx)
    th_v = math.atan2(v.y - cy, v.x - cx)
    sweep_ccw = (th_b - th_a) % (2.0 * math.pi)
    v_on_ccw = ((th_v - th_a) % (2.0 * math.pi)) <= sweep_ccw
    if v_on_ccw:
        return th_a, sweep_ccw - 2.0 * math.pi
    return th_a, sweep_ccw


def _horocycle_arc_hyp_length(h, th_a, sweep):
    cx, cy = h.center
    r = h.radius

    def integrand(t):
        th = th_a + t * sweep
        x, y = cx + r * math.cos(th), cy + r * math.sin(th)
        return 2.0 / (1.0 - x * x - y * y) * r * abs(sweep)

    val, _ = quad(integrand, 0.0, 1.0, epsabs=1e-13, epsrel=1e-13, limit=200)
    return val


def region_area(boundary, trunc: TruncationFamily | None = None,
                include_horodisk_pieces: bool = True) -> float:
    """Hyperbolic area of the region enclosed by a cyclic list of arcs.

    Arcs are traversed positively (region on the left), so each arc's kappa is
    measured against the inward normal.  With `trunc`, horodisk bites at ideal
    vertices are removed; the finite bites (both incident edges geodesic) are
    added back, realizing the horodisk-truncated area of the solvability
    checker.  Regions with IdealArc pieces are unbounded: math.inf with a
    truncation family, NonFinite without one.
    """
    arcs = list(boundary)
    n = len(arcs)
    if n == 0:
        raise OpenBoundary("empty boundary")
    for i, arc in enumerate(arcs):
        nxt = arcs[(i + 1) % n]
        if not arc.q.close_to(nxt.p, 1e-7):
            raise OpenBoundary(f"boundary arcs {i} and {(i + 1) % n} do not meet")

    if any(isinstance(a, IdealArc) for a in arcs):
        if trunc is None:
            raise NonFinite("region touching the ideal boundary has infinite area")
        return math.inf

    if trunc is None:
        for a in arcs:
            if (a.p.ideal or a.q.ideal) and abs(a.kappa) > 1e-14:
                raise NonFinite("hypercycle cusp at an ideal vertex diverges; "
                                "provide a truncation family")

    total = -2.0 * math.pi
    pieces = 0.0

    # clip parameters per arc
    clips = []
    for arc in arcs:
        t0, t1 = 0.0, 1.0
        if trunc is not None:
            if arc.p.ideal:
                h = trunc.at(arc.p)
                if h is not None:
                    t0 = _clip_param_at_horocycle(arc, h, 0)
                    if t0 is None:
                        raise InfiniteLength("horocycle misses an incident edge")
            if arc.q.ideal:
                h = trunc.at(arc.q)
                if h is not None:
                    t1 = _clip_param_at_horocycle(arc, h, 1)
                    if t1 is None:
                        raise InfiniteLength("horocycle misses an incident edge")
        clips.append((t0, t1))

    # edge integrals of kappa_g
    for arc, (t0, t1) in zip(arcs, clips):
        if abs(arc.kappa) < 1e-14:
            continue
        if (arc.p.ideal or arc.q.ideal) and trunc is None:
            raise NonFinite("divergent edge integral")
        total += arc.kappa * _arc_segment_length(arc, t0, t1)

    # corners
    for i, arc in enumerate(arcs):
        nxt = arcs[(i + 1) % n]
        vertex = arc.q
        h = trunc.at(vertex) if (trunc is not None and vertex.ideal) else None
        if h is None:
            total += _signed_turn(arc.tangent(1.0), nxt.tangent(0.0))
            continue
        t_exit = clips[i][1]
        t_entry = clips[(i + 1) % n][0]
        a = arc.xy(t_exit)
        b = nxt.xy(t_entry)
        th_a, sweep = _horocycle_arc_between(h, a, b, (arc, nxt))
        hl = _horocycle_arc_hyp_length(h, th_a, sweep)
        # region travels the horocycle with the horodisk on its right
        s = 1.0 if sweep >= 0 else -1.0
        th_b = th_a + sweep
        tan_a = (-s * math.sin(th_a), s * math.cos(th_a))
        tan_b = (-s * math.sin(th_b), s * math.cos(th_b))
        total += -hl    # kappa_g = -1 seen from outside the horodisk
        total += _signed_turn(arc.tangent(t_exit), tan_a)
        total += _signed_turn(tan_b, nxt.tangent(t_entry))
        if include_horodisk_pieces and abs(arc.kappa) < 1e-14 and abs(nxt.kappa) < 1e-14:
            pieces += _geodesic_cusp_area(arc, nxt, h, t_exit, t_entry,
                                          (th_a, sweep))
    area = total
    if area < -1e-8:
        raise NonFinite(f"Gauss-Bonnet gave negative area {area}; "
                        "check boundary orientation")
    return area + pieces


def _geodesic_cusp_area(arc_in, arc_out, h, t_exit, t_entry, horo):
    """Area of the horodisk bite at a geodesic-geodesic ideal vertex.

    Boundary of the bite, positively oriented: along arc_in from the crossing
    into the vertex, cusp turn pi, along arc_out back out, then the horocycle
    arc (kappa = +1 from inside the horodisk).
    """
    th_a, sweep = horo
    hl = _horocycle_arc_hyp_length(h, th_a, sweep)
    s = 1.0 if sweep >= 0 else -1.0
    th_b = th_a + sweep
    # piece traversal runs the horocycle from b to a (opposite the region)
    tan_b = (s * math.sin(th_b), -s * math.cos(th_b))
    tan_a = (s * math.sin(th_a), -s * math.cos(th_a))
    turn = math.pi
    turn += _signed_turn(arc_out.tangent(t_entry), tan_b)
    turn += _signed_turn(tan_a, arc_in.tangent(t_exit))
    return hl + turn - 2.0 * math.pi


# ---------------------------------------------------------------------------
# Base isometries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rotation:
    theta: float


@dataclass(frozen=True)
class HypTranslation:
    """(x0 + c (x - x0), c y) in the half-plane, along the geodesic x = x0."""
    c: float
    axis_x: float = 0.0


@dataclass(frozen=True)
class ParTranslation:
    c: float


def base_isometry(kind, p: ModelPoint) -> ModelPoint:
    """Apply a model isometry of the base; the result is in p's chart."""
    chart = p.chart
    if isinstance(kind, Rotation):
        q = to_disk(p)
        z = q.z * cmath.exp(1j * kind.theta)
        out = ModelPoint(DISK, z.real, z.imag, ideal=q.ideal)
    elif isinstance(kind, HypTranslation):
        if kind.c <= 0:
            raise ValueError("hyperbolic translation factor must be positive")
        q = to_half_plane(p)
        out = q if math.isinf(q.y) else ModelPoint(
            HALF_PLANE, kind.axis_x + kind.c * (q.x - kind.axis_x),
            kind.c * q.y, ideal=q.ideal)
    elif isinstance(kind, ParTranslation):
        q = to_half_plane(p)
        out = q if math.isinf(q.y) else ModelPoint(
            HALF_PLANE, q.x + kind.c, q.y, ideal=q.ideal)
    else:
        raise TypeError(f"unknown isometry kind {kind!r}")
    return to_disk(out) if chart == DISK else to_half_plane(out)


def reflect_across_geodesic(a: ModelPoint, b: ModelPoint, p: ModelPoint) -> ModelPoint:
    """Hyperbolic reflection of p across the geodesic through a and b (disk)."""
    a, b, p = to_disk(a), to_disk(b), to_disk(p)
    g = _geodesic_arc(a, b)
    z = p.z
    if g.is_line:
        d = (b.z - a.z) / abs(b.z - a.z)
        w = a.z + d * ((z - a.z) / d).conjugate()
    else:
        c = complex(*g.center)
        w = c + g.radius ** 2 / (z - c).conjugate()
    return ModelPoint(DISK, w.real, w.imag, ideal=p.ideal)


# ---------------------------------------------------------------------------
# Sampling and fitting utilities
# ---------------------------------------------------------------------------

def sample_arc(arc, n):
    """(n, 2) array of points along the arc, uniform in parameter."""
    return np.array([arc.xy(t) for t in np.linspace(0.0, 1.0, n)])


def sampled_geodesic_curvature(point_fn, t, dt=3e-3):
    """Finite-difference geodesic curvature of a disk-chart curve t -> (x, y),
    signed against the left normal of increasing t.

    Euclidean turning rate of the tangent angle corrected by the conformal
    factor, kappa_g = (k_e - d_n log lambda) / lambda, Richardson-extrapolated
    in the step size.
    """
    k1 = _sampled_kappa_once(point_fn, t, dt)
    k2 = _sampled_kappa_once(point_fn, t, dt / 2.0)
    return (4.0 * k2 - k1) / 3.0


def _sampled_kappa_once(point_fn, t, dt):
    p0 = np.asarray(point_fn(t - dt), dtype=float)
    p1 = np.asarray(point_fn(t), dtype=float)
    p2 = np.asarray(point_fn(t + dt), dtype=float)
    v1 = p1 - p0
    v2 = p2 - p1
    th1 = math.atan2(v1[1], v1[0])
    th2 = math.atan2(v2[1], v2[0])
    dth = (th2 - th1 + math.pi) % (2.0 * math.pi) - math.pi
    d1 = (p2 - p0) / (2.0 * dt)
    speed = math.hypot(d1[0], d1[1])
    k_e = dth / (dt * speed)
    x, y = p1
    lam = 2.0 / (1.0 - x * x - y * y)
    tx, ty = d1 / speed
    nx, ny = -ty, tx
    one = 1.0 - x * x - y * y
    dn = (2.0 * x / one) * nx + (2.0 * y / one) * ny   # grad log lambda . n
    return (k_e - dn) / lam


def fit_circle(points):
    """Algebraic least-squares circle fit; (center, radius) or None."""
    pts = np.asarray(points, dtype=float)
    if len(pts) < 3:
        return None
    x, y = pts[:, 0], pts[:, 1]
    A = np.column_stack([2 * x, 2 * y, np.ones_like(x)])
    b = x * x + y * y
    sol, *_ = np.linalg.lstsq(A, b, rcond=None)
    cx, cy, c = sol
    r2 = c + cx * cx + cy * cy
    if r2 <= 0:
        return None
    return (cx, cy), math.sqrt(r2)


def fitted_kappa(points):
    """|kappa_g| of the constant-curvature curve best fitting the points."""
    fit = fit_circle(points)
    if fit is None:
        return None
    (cx, cy), r = fit
    if r > 1e8:
        return 0.0
    return abs((1.0 - (cx * cx + cy * cy) + r * r) / (2.0 * r))


def polyline_winding(poly, x, y):
    """Winding number of a closed polyline around (x, y)."""
    total = 0.0
    n = len(poly)
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        total += math.atan2((x0 - x) * (y1 - y) - (y0 - y) * (x1 - x),
                            (x0 - x) * (x1 - x) + (y0 - y) * (y1 - y))
    return total / (2.0 * math.pi)


def region_boundary_polyline(boundary, n_per_arc=64, ideal_inset=1e-6):
    """Dense polyline along a cyclic boundary, for containment tests."""
    pts = []
    for arc in boundary:
        if isinstance(arc, IdealArc):
            for t in np.linspace(0.0, 1.0, n_per_arc, endpoint=False):
                p = arc.point(t)
                f = 1.0 - ideal_inset
                pts.append((f * p.x, f * p.y))
        else:
            for t in np.linspace(0.0, 1.0, n_per_arc, endpoint=False):
                pts.append(arc.xy(t))
    return pts


def point_in_region(boundary, x, y, n_per_arc=128):
    poly = region_boundary_polyline(boundary, n_per_arc)
    return abs(polyline_winding(poly, x, y)) > 0.5
