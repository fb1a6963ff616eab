"""Coordinate models of the twisted hyperbolic 3-space fibering over H^2.

Each model is a conformal chart (lambda) of the base plus connection
coefficients (a, b) fixing the horizontal distribution:

    ds^2 = lambda^2 (dx^2 + dy^2) + [lambda (a dx + b dy) + dt]^2.

Built-in specs:

  half_space:  lambda = 1/y,            a = -2 tau,   b = 0
  cylinder:    lambda = 2/(1 - r^2),    a = 2 tau y,  b = -2 tau x
  h_cylinder:  lambda = 2/(1 - r^2),
               a = 2 tau y + 2 H x g(r),  b = -2 tau x + 2 H y g(r),
               g = sqrt((1 + 4 r^2 tau^2) / (1 - 4 H^2 r^2)),  |H| < 1/2.

In the h_cylinder chart the slices {t = c} are the rotational graphs of mean
curvature H, obtained from the cylinder chart by shifting fibers with the
entire rotational profile (fiber_shift below); the bundle curvature

    tau = ((lambda a)_y - (lambda b)_x) / (2 lambda^2)

is a chart invariant, with orientation fixed so the three built-in specs all
report +tau.  The chart isometries psi, psi_inv lift the Cayley map between
half-plane and disk, shifting fibers by -4 tau arctan(x/(y+1)) and its inverse;
hyp_translation_3d implements the translation along the horizontal geodesic
through the origin in the cylinder chart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import geometry as geo
from .errors import CriticalH, DomainError, SingularPoint
from .geometry import DISK, HALF_PLANE, ModelPoint

HALF_SPACE = "half_space"
CYLINDER = "cylinder"
H_CYLINDER = "h_cylinder"

_CHART_OF_MODEL = {HALF_SPACE: HALF_PLANE, CYLINDER: DISK, H_CYLINDER: DISK}


@dataclass(frozen=True)
class ModelPoint3:
    base: ModelPoint
    t: float

    @property
    def x(self):
        return self.base.x

    @property
    def y(self):
        return self.base.y


@dataclass(frozen=True)
class KillingModelSpec:
    """Metric data of one chart: conformal factor and connection coefficients.

    The callables take raw coordinates (x, y) and accept numpy arrays.
    """
    model: str
    tau: float
    H: float
    lam: Callable
    a: Callable
    b: Callable

    @property
    def chart(self):
        return _CHART_OF_MODEL.get(self.model, DISK)

    def interior(self, x, y):
        if self.chart == DISK:
            return x * x + y * y < 1.0
        return y > 0.0


def half_space_spec(tau: float) -> KillingModelSpec:
    return KillingModelSpec(
        model=HALF_SPACE, tau=tau, H=0.0,
        lam=lambda x, y: 1.0 / y,
        a=lambda x, y: -2.0 * tau * np.ones_like(np.asarray(x, dtype=float)),
        b=lambda x, y: np.zeros_like(np.asarray(x, dtype=float)),
    )


def cylinder_spec(tau: float) -> KillingModelSpec:
    return KillingModelSpec(
        model=CYLINDER, tau=tau, H=0.0,
        lam=lambda x, y: 2.0 / (1.0 - x * x - y * y),
        a=lambda x, y: 2.0 * tau * np.asarray(y, dtype=float),
        b=lambda x, y: -2.0 * tau * np.asarray(x, dtype=float),
    )


def h_cylinder_spec(H: float, tau: float) -> KillingModelSpec:
    if abs(H) >= 0.5:
        raise CriticalH(f"|H| = {abs(H)} >= 1/2")

    def g(x, y):
        r2 = x * x + y * y
        return np.sqrt((1.0 + 4.0 * r2 * tau * tau) / (1.0 - 4.0 * H * H * r2))

    return KillingModelSpec(
        model=H_CYLINDER, tau=tau, H=H,
        lam=lambda x, y: 2.0 / (1.0 - x * x - y * y),
        a=lambda x, y: 2.0 * tau * np.asarray(y, dtype=float) + 2.0 * H * np.asarray(x, dtype=float) * g(x, y),
        b=lambda x, y: -2.0 * tau * np.asarray(x, dtype=float) + 2.0 * H * np.asarray(y, dtype=float) * g(x, y),
    )


def metric_coeffs(spec: KillingModelSpec, p: ModelPoint):
    """(lambda, a, b) of the spec at an interior point."""
    q = geo.to_disk(p) if spec.chart == DISK else geo.to_half_plane(p)
    if q.ideal or not spec.interior(q.x, q.y):
        raise DomainError("point is not interior to the chart")
    return (float(spec.lam(q.x, q.y)), float(spec.a(q.x, q.y)), float(spec.b(q.x, q.y)))


def bundle_curvature(spec: KillingModelSpec, p: ModelPoint, h: float = 1e-4) -> float:
    """tau recovered from the metric data by central differences,

        ((lambda a)_y - (lambda b)_x) / (2 lambda^2),

    with the orientation that renders the built-in specs at +tau.
    """
    q = geo.to_disk(p) if spec.chart == DISK else geo.to_half_plane(p)
    x, y = q.x, q.y

    def la(xx, yy):
        return spec.lam(xx, yy) * spec.a(xx, yy)

    def lb(xx, yy):
        return spec.lam(xx, yy) * spec.b(xx, yy)

    la_y = (la(x, y + h) - la(x, y - h)) / (2 * h)
    lb_x = (lb(x + h, y) - lb(x - h, y)) / (2 * h)
    lam2 = spec.lam(x, y) ** 2
    return float((la_y - lb_x) / (2.0 * lam2))


def fiber_shift(spec: KillingModelSpec, d: Callable, grad_d: Callable | None = None,
                h: float = 1e-5) -> KillingModelSpec:
    """Spec of the chart obtained by moving fibers t -> t - d(x, y).

    The graph of d becomes the zero section; the connection coefficients
    change by the scaled gradient, a' = a + d_x / lambda, b' = b + d_y / lambda,
    and the bundle curvature is unchanged.  grad_d(x, y) -> (d_x, d_y) may be
    supplied analytically; otherwise central differences with step h are used.
    """
    if grad_d is None:
        def grad_d(x, y):
            dx = (d(x + h, y) - d(x - h, y)) / (2 * h)
            dy = (d(x, y + h) - d(x, y - h)) / (2 * h)
            return dx, dy

    base_a, base_b, lam = spec.a, spec.b, spec.lam

    def a_new(x, y):
        return base_a(x, y) + grad_d(x, y)[0] / lam(x, y)

    def b_new(x, y):
        return base_b(x, y) + grad_d(x, y)[1] / lam(x, y)

    return KillingModelSpec(model=spec.model, tau=spec.tau, H=spec.H,
                            lam=lam, a=a_new, b=b_new)


# ---------------------------------------------------------------------------
# Chart isometries between half-space and cylinder
# ---------------------------------------------------------------------------

def psi(p: ModelPoint3, tau: float) -> ModelPoint3:
    """Half-space -> cylinder chart isometry.

    The base map is the Cayley transform z -> (z - i)/(z + i); the fiber
    shifts by -4 tau arctan(x/(y+1)).  Singular at the point at infinity,
    which has no single image on the disk boundary.
    """
    base = p.base
    if base.chart != HALF_PLANE:
        raise DomainError("psi expects half-plane base points")
    if math.isinf(base.y) or math.isinf(base.x):
        raise SingularPoint("psi is singular at the point at infinity")
    shift = 4.0 * tau * math.atan2(base.x, base.y + 1.0)
    return ModelPoint3(geo.to_disk(base), p.t - shift)


def psi_inv(p: ModelPoint3, tau: float) -> ModelPoint3:
    """Cylinder -> half-space chart isometry, inverse of psi.

    Base map z -> i(1 + z)/(1 - z); fiber shift -4 tau arctan(y/(1-x)).
    Singular at the disk boundary point (1, 0).
    """
    base = p.base
    if base.chart != DISK:
        raise DomainError("psi_inv expects disk base points")
    if base.close_to(ModelPoint(DISK, 1.0, 0.0, ideal=True), 1e-14):
        raise SingularPoint("psi_inv is singular at (1, 0)")
    shift = 4.0 * tau * math.atan2(base.y, 1.0 - base.x)
    return ModelPoint3(geo.to_half_plane(base), p.t - shift)


def umbrella_height(tau: float, x, y):
    """Height of the cylinder chart's zero section over the half-space chart,
    4 tau arctan(x / (y + 1)); bounded by 2 pi |tau|."""
    return 4.0 * tau * np.arctan2(x, y + 1.0)


# ---------------------------------------------------------------------------
# Hyperbolic translation of the 3-space along a horizontal geodesic
# ---------------------------------------------------------------------------

def hyp_translation_3d(c: float, p: ModelPoint3, tau: float) -> ModelPoint3:
    """Translation by parameter c along the horizontal geodesic
    t -> (0, -tanh(t/2), 0) of the cylinder chart.

    The base part is a disk isometry moving the origin to (0, -tanh(c/2)); the
    fiber displacement is bounded by 4|tau| |arctan(e^{-c/2}) - arctan(e^{c/2})|
    uniformly on the disk.
    """
    base = p.base
    if base.chart != DISK:
        base = geo.to_disk(base)
    x, y, z = base.x, base.y, p.t
    ch, sh = math.cosh(c), math.sinh(c)
    den = -1.0 + x * x + y * y - (1.0 + x * x + y * y) * ch + 2.0 * y * sh
    X = -2.0 * x / den
    Y = ((1.0 + x * x + y * y) * sh - 2.0 * y * ch) / den
    T = z + fiber_displacement(c, x, y, tau)
    return ModelPoint3(geo.disk_point(X, Y), T)


def fiber_displacement(c: float, x, y, tau: float):
    """Fiber shift of hyp_translation_3d at base point (x, y)."""
    ec = math.exp(c)
    return (-4.0 * tau * np.arctan2(x, 1.0 + y)
            + 4.0 * tau * np.arctan2(2.0 * ec * x,
                                     x * x + (1.0 + y) ** 2 - ec * (x * x + y * y - 1.0)))


def fiber_displacement_bound(c: float, tau: float) -> float:
    return 4.0 * abs(tau) * abs(math.atan(math.exp(-c / 2.0)) - math.atan(math.exp(c / 2.0)))


def transversality_report(H: float, tau: float, r: float = 1.0 - 1e-6):
    """Direct evaluation of the vertical normal component of a slice of the
    h_cylinder chart near the ideal boundary.

    Returns (computed, printed_claim, agree).  The direct evaluation of
    1/sqrt(1 + (lambda a)^2 + (lambda b)^2) tends to 0 because lambda diverges
    while a, b stay bounded away from zero; the claimed finite limit
    (1 - 4H^2)/(2H sqrt(1 + 4 tau^2)) is reported alongside for comparison.
    """
    spec = h_cylinder_spec(H, tau)
    lam = float(spec.lam(r, 0.0))
    a = float(spec.a(r, 0.0))
    b = float(spec.b(r, 0.0))
    computed = 1.0 / math.sqrt(1.0 + (lam * a) ** 2 + (lam * b) ** 2)
    claim = math.inf if H == 0 else (1.0 - 4.0 * H * H) / (2.0 * H * math.sqrt(1.0 + 4.0 * tau * tau))
    return computed, claim, abs(computed - claim) < 1e-6


# ---------------------------------------------------------------------------
# Boundary data translation between compactifications
# ---------------------------------------------------------------------------

STANDARD = "standard"
H_COMPACTIFICATION = "h_compactification"


@dataclass(frozen=True)
class GraphBoundaryDatum:
    ideal_point: ModelPoint
    value: float                      # may be +-inf in standard contexts
    compactification: str = H_COMPACTIFICATION
    H: float = 0.0


@dataclass(frozen=True)
class BoundaryTranslation:
    """Asymptotic datum together with the radial reference profile.

    A graph u in the cylinder chart has asymptotic value f at an ideal point
    of the H-compactification exactly when u - reference(rho) -> f radially;
    `reference` is the entire rotational profile of mean curvature H (the zero
    function when H = 0).
    """
    datum: GraphBoundaryDatum
    reference: Callable


def translate_boundary_data(datum: GraphBoundaryDatum, to: str,
                            reference: Callable | None = None) -> BoundaryTranslation:
    """Package an asymptotic boundary value for the solver.

    Finite values in the H-compactification correspond in the standard chart
    to divergence along the reference rotational profile; the translation
    therefore carries the profile rather than a bare number.  For H = 0 the
    two compactifications agree and the reference is zero.
    """
    H = datum.H
    if abs(H) >= 0.5:
        raise CriticalH(f"|H| = {abs(H)} >= 1/2")
    if H == 0.0 or datum.compactification == to:
        ref = (lambda rho: 0.0) if reference is None else reference
        return BoundaryTranslation(
            GraphBoundaryDatum(datum.ideal_point, datum.value, to, H), ref)
    if reference is None:
        from .profiles import rotational_profile
        prof = rotational_profile(H, -2.0 * H, 0.0, rho_max=30.0, n=400)
        reference = prof.value
    return BoundaryTranslation(
        GraphBoundaryDatum(datum.ideal_point, datum.value, to, H), reference)
