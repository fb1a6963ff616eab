"""Invariant families: quadrature profiles, closed forms, asymptotic fits."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from cmclab import profiles as pr
from cmclab.errors import CaseMismatch, CriticalH, OutsideDomain, WindowTooShort


# ---------------------------------------------------------------------------
# rotational family
# ---------------------------------------------------------------------------

def test_minimal_slice_is_zero():
    p = pr.rotational_profile(0.0, 0.0, 0.7, rho_max=15.0)
    rs = np.linspace(0.0, 15.0, 50)
    assert np.max(np.abs(p.value(rs))) < 1e-12
    assert p.klass == pr.ENTIRE_GRAPH


def test_entire_graph_tangent_at_origin():
    p = pr.rotational_profile(0.25, -0.5, 0.0, rho_max=20.0)
    assert p.klass == pr.ENTIRE_GRAPH
    assert p.value(0.0) == 0.0
    # one-sided derivative at 0 vanishes: v(h)/h -> 0
    for h in (1e-2, 1e-3):
        assert abs(p.value(h)) / h < 2 * h
    assert np.all(p.value(np.linspace(0.1, 20, 40)) > 0)


def test_entire_graph_slope_example():
    p = pr.rotational_profile(0.25, -0.5, 0.0, rho_max=20.0)
    # fitted tail slope carries the printed value; the ratio v(20)/20 retains
    # the finite additive offset of the v(0) = 0 anchoring
    assert p.value(20.0) / 20.0 == pytest.approx(0.5 / math.sqrt(0.75), abs=0.05)
    rep = pr.asymptotic_check(p, pr.ROT_SLOPE)
    assert rep.predicted == pytest.approx(0.57735026919, abs=1e-9)
    assert rep.ok


def test_embedded_annulus_rho_min():
    # bisection oracle: largest root of sinh^2 r = (0.5 cosh r)^2 is arctanh(0.5)
    p = pr.rotational_profile(0.25, 0.0, 0.0, rho_max=10.0)
    assert p.klass == pr.EMBEDDED_ANNULUS
    assert p.rho_min == pytest.approx(math.atanh(0.5), abs=1e-12)
    assert p.value(p.rho_min) == pytest.approx(0.0, abs=1e-12)
    # derivative blows up approaching rho_min from above
    d1 = p.derivative(p.rho_min + 1e-4)
    d2 = p.derivative(p.rho_min + 1e-8)
    assert d2 > d1 > 1.0


def test_classification_flips_at_threshold():
    H = 0.2
    base = -2.0 * H
    assert pr.rotational_profile(H, base, 0.0, rho_max=6.0).klass == pr.ENTIRE_GRAPH
    assert pr.rotational_profile(H, base + 1e-12, 0.0, rho_max=6.0).klass == pr.EMBEDDED_ANNULUS
    assert pr.rotational_profile(H, base - 1e-12, 0.0, rho_max=6.0).klass == pr.IMMERSED_ANNULUS


def test_critical_H_rejected():
    with pytest.raises(CriticalH):
        pr.rotational_profile(0.5, 0.0, 0.0)
    with pytest.raises(CriticalH):
        pr.rotational_profile(-0.6, 0.0, 0.0)


def test_rotational_ode_residual_zero_solution():
    p = pr.rotational_profile(0.0, 0.0, 0.4, rho_max=10.0)
    assert pr.rotational_ode_residual(p, window=(0.5, 9.0)) < 1e-10


def test_rotational_ode_residual_entire():
    p = pr.rotational_profile(0.25, -0.5, 0.3, rho_max=10.0)
    assert pr.rotational_ode_residual(p, window=(0.2, 8.0)) < 1e-6


def test_rotational_ode_residual_detects_perturbation():
    p = pr.rotational_profile(0.25, -0.5, 0.3, rho_max=10.0)
    bad = lambda r: p.value(r) + 0.01 * r * r
    assert pr.rotational_ode_residual(p, window=(0.5, 8.0), value_fn=bad) > 1e-3


def test_monotone_where_integrand_positive():
    # d >= -2H >= 0 region with constant integrand sign
    p = pr.rotational_profile(0.2, 0.1, 0.5, rho_max=8.0)
    rs = np.linspace(p.rho_min + 1e-3, 8.0, 60)
    vals = p.value(rs)
    assert np.all(np.diff(vals) > 0)


def test_samples_inside_validity_domain():
    p = pr.rotational_profile(0.3, 0.2, 0.8, rho_max=9.0)
    u = 2 * p.H * np.cosh(p.samples[:, 0]) + p.d
    rad = np.sinh(p.samples[:, 0]) ** 2 - u * u
    assert np.all(rad >= -1e-12)


# ---------------------------------------------------------------------------
# hyperbolic family: closed form
# ---------------------------------------------------------------------------

def test_w_zero_at_symmetric_point():
    for H in (0.1, 0.3, 0.49):
        assert pr.hyperbolic_w(H, 0.0, 0.0, 0.0) == 0.0


def test_roots_example():
    roots = pr.hyperbolic_roots(0.3, 1.0)
    assert roots == pytest.approx([-1.875, 0.0], abs=1e-14)
    with pytest.raises(OutsideDomain):
        pr.hyperbolic_w(0.3, 1.0, 0.0, -0.9)
    # finite well outside, divergent toward the roots
    assert abs(pr.hyperbolic_w(0.3, 1.0, 0.0, 1.0)) < 10
    assert abs(pr.hyperbolic_w(0.3, 1.0, 0.0, 1e-8)) > 1e3


def test_roots_match_quadratic_formula():
    rng = np.random.default_rng(2)
    for _ in range(40):
        H = rng.uniform(0.05, 0.45)
        d = rng.uniform(1.0, 3.0) * rng.choice([-1, 1])
        if d * d + 4 * H * H <= 1:
            continue
        roots = pr.hyperbolic_roots(H, d)
        sq = math.sqrt(d * d + 4 * H * H - 1)
        expect = sorted([(2 * d * H + sq) / (4 * H * H - 1),
                         (2 * d * H - sq) / (4 * H * H - 1)])
        assert roots == pytest.approx(expect, abs=1e-10)
        for r in roots:
            assert pr.hyperbolic_P(r, H, d) == pytest.approx(0.0, abs=1e-10)


def test_case_classification_flips():
    H = 0.25
    d0 = math.sqrt(1 - 4 * H * H)
    assert pr.hyperbolic_case(H, d0) == pr.SINGLE_ROOT
    assert pr.hyperbolic_case(H, d0 + 1e-12) == pr.TWO_ROOTS
    assert pr.hyperbolic_case(H, d0 - 1e-12) == pr.ENTIRE
    # threshold root agrees with the two-root formula at zero discriminant
    assert pr.hyperbolic_roots(H, -d0)[0] == pytest.approx(2 * H / d0, abs=1e-12)


@pytest.mark.parametrize("H,d,tau,spts", [
    (0.25, 0.1, 0.3, np.linspace(-3, 3, 12)),
    (0.25, 0.1, 0.0, np.linspace(-5, 5, 12)),
    (0.4, -0.2, 1.0, np.linspace(-2, 2, 12)),
    (-0.25, 0.1, 0.3, np.linspace(-3, 3, 12)),
    (0.25, -math.sqrt(0.75), 0.0, 0.5773502691896258 + np.geomspace(0.05, 5, 12)),
    (0.25, -math.sqrt(0.75), 0.5, 0.5773502691896258 - np.geomspace(0.05, 5, 12)),
    (0.3, 1.0, 0.0, np.geomspace(0.05, 20, 12)),
    (0.3, 1.0, 0.4, -1.875 - np.geomspace(0.05, 20, 12)),
    (0.1, 1.5, 0.7, pr.hyperbolic_roots(0.1, 1.5)[1] + np.geomspace(0.1, 30, 12)),
    (0.45, 0.05, 0.2, np.linspace(-4, 4, 12)),
    (0.2, -0.5, 0.9, np.linspace(-6, 6, 12)),
    (0.35, 2.0, 0.1, pr.hyperbolic_roots(0.35, 2.0)[0] - np.geomspace(0.1, 10, 12)),
])
def test_closed_form_satisfies_invariant_ode(H, d, tau, spts):
    for s in spts:
        assert abs(pr.hyperbolic_ode_residual(H, d, tau, float(s))) < 1e-8


# ---------------------------------------------------------------------------
# hyperbolic family: profiles
# ---------------------------------------------------------------------------

def test_entire_profile_log_growth():
    p = pr.hyperbolic_profile(0.25, 0.0, 0.0)
    assert p.case == pr.ENTIRE
    rep = pr.asymptotic_check(p, pr.HYP_LOG_COEFF)
    assert rep.predicted == pytest.approx(0.5 / math.sqrt(0.75), abs=1e-12)
    assert rep.ok, rep


def test_entire_profile_even_up_to_twist():
    # tau = 0, d = 0: u is even
    p = pr.hyperbolic_profile(0.25, 0.0, 0.0)
    ss = np.linspace(0.5, 30.0, 15)
    assert np.max(np.abs(p.value(ss) - p.value(-ss))) < 1e-9


def test_profile_antiderivative_matches_w():
    for (H, d, tau, branch) in [(0.25, 0.1, 0.3, pr.FULL),
                                (0.3, 1.0, 0.0, pr.PLUS),
                                (0.3, 1.0, 0.5, pr.MINUS)]:
        p = pr.hyperbolic_profile(H, d, tau, branch)
        roots = p.roots
        if branch == pr.FULL:
            ss = np.linspace(-8, 8, 25)
        elif branch == pr.PLUS:
            ss = roots[-1] + np.geomspace(0.05, 50, 25)
        else:
            ss = roots[0] - np.geomspace(0.05, 50, 25)
        h = 1e-3
        for s in ss:
            du = (p.value(s + h) - p.value(s - h)) / (2 * h)
            assert abs(du - p.w(s)) < 5e-5 * (1 + abs(p.w(s)))


def test_single_root_divergence():
    H = 0.25
    d = -math.sqrt(1 - 4 * H * H)
    p = pr.hyperbolic_profile(H, d, 0.0, pr.PLUS)
    assert p.case == pr.SINGLE_ROOT
    s0 = p.roots[0]
    assert s0 == pytest.approx(-2 * H / d, abs=1e-12)
    # |u| grows without bound approaching the root: log law
    vals = [abs(p.value(s0 + 10.0 ** (-k))) for k in (2, 4, 6)]
    assert vals[0] < vals[1] < vals[2]
    # increments consistent with C * log(10^2) per two decades, C sub-linear fit
    inc1, inc2 = vals[1] - vals[0], vals[2] - vals[1]
    assert inc2 == pytest.approx(inc1, rel=0.05)
    # the divergence magnitude matches the printed residue constant
    C = math.sqrt(1 + 16 * 0 * H * H) / math.sqrt(1 - 4 * H * H)
    assert inc1 / math.log(100.0) == pytest.approx(C, rel=1e-3)


def test_two_root_finite_vertical():
    p = pr.hyperbolic_profile(0.3, 1.0, 0.0, pr.PLUS)
    assert p.case == pr.TWO_ROOTS
    s0 = p.roots[-1]
    # oracle: quadrature after the square-root substitution t = sqrt(s - s0)
    def g(t):
        return 2.0 * t * pr.hyperbolic_w(0.3, 1.0, 0.0, s0 + t * t)
    val, _ = quad(g, 1e-9, 1.0, epsabs=1e-13, epsrel=1e-13)
    expect = -val   # u(base)=0 at base = s0 + 1
    assert p.u_at_root == pytest.approx(expect, abs=1e-8)
    # values converge to the finite limit
    assert p.value(s0 + 1e-8) == pytest.approx(p.u_at_root, abs=1e-3)
    # vertical tangent: w diverges like 1/sqrt
    assert abs(p.w(s0 + 1e-6)) > 1e2


def test_branch_case_mismatch():
    with pytest.raises(CaseMismatch):
        pr.hyperbolic_profile(0.25, 0.0, 0.0, pr.PLUS)
    with pytest.raises(CaseMismatch):
        pr.hyperbolic_profile(0.3, 1.0, 0.0, pr.FULL)


# ---------------------------------------------------------------------------
# asymptotic checks
# ---------------------------------------------------------------------------

def test_rot_slope_printed_example():
    p = pr.rotational_profile(0.2, -0.4, 0.5, rho_max=20.0)
    rep = pr.asymptotic_check(p, pr.ROT_SLOPE)
    assert rep.predicted == pytest.approx(0.4 * math.sqrt(2.0) / math.sqrt(0.84), abs=1e-5)
    assert rep.predicted == pytest.approx(0.61721, abs=1e-5)
    assert rep.ok


def test_zero_H_slope_zero():
    p = pr.rotational_profile(0.0, 0.3, 0.5, rho_max=20.0)
    rep = pr.asymptotic_check(p, pr.ROT_SLOPE)
    assert abs(rep.fitted) < 1e-3


def test_rot_correction_coefficient():
    for (H, d, tau) in [(0.25, -0.5, 0.3), (0.2, 0.1, 0.0), (0.1, -0.2, 1.0)]:
        p = pr.rotational_profile(H, d, tau, rho_max=16.0)
        rep = pr.asymptotic_check(p, pr.ROT_CORRECTION)
        assert rep.ok, (H, d, tau, rep)


def test_hyp_slope_equals_rot_slope():
    H, tau = 0.25, 0.4
    hyp = pr.hyperbolic_profile(H, 0.1, tau)
    rot = pr.rotational_profile(H, -2 * H, tau, rho_max=20.0)
    r1 = pr.asymptotic_check(hyp, pr.HYP_SLOPE)
    r2 = pr.asymptotic_check(rot, pr.ROT_SLOPE)
    assert r1.predicted == r2.predicted
    assert r1.ok and r2.ok
    assert r1.fitted == pytest.approx(r2.fitted, rel=2e-3)


def test_window_too_short():
    p = pr.rotational_profile(0.25, -0.5, 0.0, rho_max=8.0)
    with pytest.raises(WindowTooShort):
        pr.asymptotic_check(p, pr.ROT_SLOPE)


# ---------------------------------------------------------------------------
# radial reparameterization
# ---------------------------------------------------------------------------

def test_radial_reparam_special_case():
    assert pr.radial_reparam(0.0, 1.0, 0.0, 0.0) == 0.0
    assert pr.radial_reparam(0.0, 1.0, 0.0, 1.0) == pytest.approx(math.sinh(1.0), abs=1e-15)


def test_radial_reparam_direct_and_tail():
    # direct evaluation
    val = pr.radial_reparam(1.0, 2.0, 0.5, 3.0)
    expect = (1.0 * math.cosh(3.5) + 2.0 * math.sinh(3.0)) / (2.0 * math.cosh(0.5))
    assert val == pytest.approx(expect, abs=1e-12)
    # tail growth of u along this reparameterization has the same leading slope
    H, tau = 0.25, 0.3
    p = pr.hyperbolic_profile(H, 0.1, tau)
    rhos = np.linspace(15.0, 19.0, 40)
    ss = pr.radial_reparam(1.0, 2.0, 0.5, rhos)
    slope, _ = np.polyfit(rhos, p.value(ss), 1)
    assert slope == pytest.approx(pr.radial_slope(H, tau), rel=1e-3)


def test_radial_reparam_requires_upper_half():
    with pytest.raises(ValueError):
        pr.radial_reparam(0.0, -1.0, 0.0, 1.0)
