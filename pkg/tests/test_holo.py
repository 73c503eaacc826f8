import cmath
import math

import numpy as np
import pytest

from anyonstat import covergroup as cg
from anyonstat import holo
from anyonstat import minkowski as mk
from anyonstat import wigner as wg

S = 1 / 3
QUARTER = cg.lift_rotation(math.pi / 2)


def reflected_point(p):
    return mk.to_momentum(-mk.j_reflect(p.as_array()), p.m)


def closed_boundary(g, p, s):
    """The closed-form boundary value of the compensated family at i*pi."""
    gg0 = cg.compose(g, QUARTER)
    vec = mk.J @ cg.project(cg.inverse(gg0)) @ mk.J @ p.as_array()
    return (cmath.exp(1j * math.pi * s)
            * cmath.exp(1j * s * wg.wigner_angle(cg.j_conjugate(gg0), p))
            * wg.u_plain(mk.to_momentum(vec, p.m), s))


def test_constant_expression():
    e = holo.const(2.0 - 1.5j)
    assert holo.continue_along(e, holo.StripPath.vertical(0.0)) == 2.0 - 1.5j


def test_expression_arithmetic_sugar():
    p = mk.shell_point(0.3, 0.2, 1.0)
    k0 = holo.mom_comp(np.eye(3), p.as_array(), 0)
    expr = (k0 + 1.0) / (2.0 * holo.Exp(holo.Affine(0.5))) - k0
    z = 0.3 + 1.2j
    kv = (mk.boost1(-z) @ p.as_array())[0]
    expected = (kv + 1.0) / (2.0 * cmath.exp(0.5 * z)) - kv
    assert abs(holo.evaluate_along(expr, [0.0, z])[-1] - expected) < 1e-14


def test_momentum_node_at_ipi_is_reflection():
    p = mk.shell_point(0.6, -0.4, 1.0)
    vals = [holo.continue_along(holo.mom_comp(np.eye(3), p.as_array(), mu),
                                holo.StripPath.vertical(0.0)) for mu in range(3)]
    assert np.max(np.abs(np.array(vals) - mk.J @ p.as_array())) < 1e-13


def test_simple_power_continuation_and_halved_step():
    rest = mk.shell_point(0.0, 0.0, 1.0)
    k0 = holo.mom_comp(np.eye(3), rest.as_array(), 0)
    k1 = holo.mom_comp(np.eye(3), rest.as_array(), 1)
    expr = holo.Pow(k0 + (-k1), S)
    # base is exactly m e^z, so the continued power is m^s e^{s z}
    v = holo.continue_along(expr, holo.StripPath.vertical(0.0))
    assert abs(v - cmath.exp(1j * math.pi * S)) < 1e-13
    v2 = holo.continue_along(expr, holo.StripPath.vertical(0.0, samples=129))
    assert abs(v - v2) < 1e-11


def test_compensated_boundary_matches_closed_form():
    rng = np.random.default_rng(0)
    for _ in range(10):
        g = cg.compose(cg.lift_rotation(rng.uniform(-0.25, 0.25)),
                       cg.lift_boost(rng.uniform(0, 2 * math.pi), rng.uniform(0, 0.3)))
        if not __import__("anyonstat.conegeom", fromlist=["x"]).in_wedge_class(
                cg.compose(g, QUARTER)):
            continue
        p = mk.shell_point(rng.uniform(0.1, 0.8), rng.uniform(-0.8, 0.8), 1.0)
        f = holo.compensated_family_expr(g, p, S)
        v = holo.continue_robust(f, holo.StripPath.vertical(0.0))
        assert abs(v - closed_boundary(g, p, S)) < 1e-12


def test_cocycle_family_boundary_identities():
    p = mk.shell_point(0.4, -0.3, 1.0)
    gw = cg.compose(cg.lift_rotation(0.13), QUARTER)
    cf = holo.cocycle_family_expr(gw, p, S)
    v = holo.continue_along(cf, holo.StripPath.vertical(0.0))
    mjp = reflected_point(p)
    assert abs(v - cmath.exp(1j * math.pi * S) * wg.cocycle(gw, mjp, S).conjugate()) < 1e-13
    assert abs(v - cmath.exp(1j * math.pi * S)
               * wg.cocycle(cg.j_conjugate(gw), p, S)) < 1e-13


def test_schwarz_reflection_tree():
    # the reflected tree represents z -> conj(f(conj z)): real-axis values are
    # conjugated, and continuations mirror across the axis
    p = mk.shell_point(0.4, -0.3, 1.0)
    k0 = holo.mom_comp(np.eye(3), p.as_array(), 0)
    expr = holo.Pow(k0 + holo.const(0.3 + 0.2j), 0.4) * holo.Exp(holo.Const(0.1j) * k0)
    refl = holo.schwarz_reflect(expr)
    t = 0.7
    a = holo.evaluate_along(expr, [0.0, t])[-1]
    b = holo.evaluate_along(refl, [0.0, t])[-1]
    assert abs(b - a.conjugate()) < 1e-14
    z = 0.4 + 0.9j
    up = holo.evaluate_along(refl, [0.0, z])[-1]
    down = holo.evaluate_along(expr, [0.0, z.conjugate()])[-1]
    assert abs(up - down.conjugate()) < 1e-14


def test_morera_entire_node():
    # perimeter-4 rectangle strictly inside the open strip
    p = mk.shell_point(0.3, 0.5, 1.0)
    ent = holo.Exp(holo.Const(0.7j) * holo.mom_comp(np.eye(3), p.as_array(), 0))
    r = holo.morera_residual(ent, holo.StripPath.rectangle(-0.5, 0.5, 0.8, 1.8))
    assert r < 1e-10


def test_morera_quadrature_order_certificate():
    # at quadrature order 2 the composite rule converges like step^4
    p = mk.shell_point(0.3, 0.5, 1.0)
    osc = holo.Exp(holo.Const(3.0j) * holo.mom_comp(np.eye(3), p.as_array(), 1))
    rect = holo.StripPath.rectangle(-0.6, 0.6, 0.4, 2.8)
    r2 = holo.morera_residual(osc, rect, order=2, panels=2)
    r4 = holo.morera_residual(osc, rect, order=2, panels=4)
    assert r4 < r2 / 8.0 + 1e-13


def test_morera_compensated_family():
    p = mk.shell_point(0.4, -0.3, 1.0)
    f = holo.compensated_family_expr(cg.identity(), p, S)
    r = holo.morera_residual(f, holo.StripPath.rectangle(-0.4, 0.4, 0.15, math.pi - 0.15))
    assert r < 1e-8


def test_negative_control_uncompensated_phase():
    p = mk.shell_point(0.5, 1.0, 1.0)
    zstar = holo.boost_energy_branch_point(p)
    assert 0.0 < zstar.imag < math.pi
    bare = holo.uncompensated_phase_expr(cg.identity(), p, S)
    rect = holo.StripPath.rectangle(zstar.real - 0.3, zstar.real + 0.3,
                                    zstar.imag - 0.3, zstar.imag + 0.3)
    assert holo.morera_residual(bare, rect) > 1e-3
    zend = complex(zstar.real, min(zstar.imag + 0.5, 3.1))
    left = [0.0, complex(zstar.real - 0.4, 0), complex(zstar.real - 0.4, zend.imag), zend]
    right = [0.0, complex(zstar.real + 0.4, 0), complex(zstar.real + 0.4, zend.imag), zend]
    vl, vr = holo.continue_along(bare, left), holo.continue_along(bare, right)
    assert abs(vl - vr) > 1e-3
    # the monodromy is exactly a full turn of the energy-factor power
    assert abs(vl / vr - cmath.exp(2j * math.pi * S)) < 1e-10
    comp = holo.compensated_family_expr(cg.identity(), p, S)
    assert abs(holo.continue_along(comp, left) - holo.continue_along(comp, right)) < 1e-12


def test_negative_control_principal_branch():
    # evaluating a power without its ledger breaks analyticity across the cut
    p = mk.shell_point(0.5, 1.0, 1.0)
    zstar = holo.boost_energy_branch_point(p)
    bare = holo.uncompensated_phase_expr(cg.identity(), p, S)
    rect = holo.StripPath.rectangle(zstar.real - 0.3, zstar.real + 0.3,
                                    zstar.imag - 0.3, zstar.imag + 0.3)
    assert holo.morera_residual(bare, rect, principal=True) > 1e-3


def test_path_and_anchor_independence():
    p = mk.shell_point(0.4, -0.3, 1.0)
    f = holo.compensated_family_expr(cg.identity(), p, S)
    v0 = holo.continue_along(f, [0.0, 1j * math.pi])
    vz = holo.continue_along(f, [0.0, -0.4, -0.4 + 0.5j * math.pi,
                                 0.3 + 0.8j * math.pi, 1j * math.pi])
    assert abs(v0 - vz) < 1e-12
    # fresh principal anchoring at t=0.5 agrees with walking there from 0
    w = holo.Walker(f, 0.5)
    walked = holo.evaluate_along(f, [0.0, 0.25, 0.5])[-1]
    assert abs(w.value() - walked) < 1e-13
    for z in (0.5 + 0.5j * math.pi, 0.5 + 1j * math.pi, 1j * math.pi):
        w.step_to(z)
    assert abs(w.value() - v0) < 1e-12


def test_boundary_at_ipi_with_validation():
    p = mk.shell_point(0.4, -0.3, 1.0)
    f = holo.compensated_family_expr(cg.identity(), p, S)
    v = holo.boundary_at_ipi(f, 0.0, validate=True)
    assert abs(v - closed_boundary(cg.identity(), p, S)) < 1e-12


def test_vanishing_base_raises_and_robust_detour_succeeds():
    # p1 = 0 puts a compensator base zero right on the vertical path
    p = mk.shell_point(0.0, 0.5, 1.0)
    f = holo.compensated_family_expr(cg.identity(), p, S)
    with pytest.raises(holo.PowerBaseVanishes):
        holo.continue_along(f, holo.StripPath.vertical(0.0, samples=129))
    v = holo.continue_robust(f, holo.StripPath.vertical(0.0, samples=129))
    assert abs(v - closed_boundary(cg.identity(), p, S)) < 1e-9


def test_robust_detour_rejects_genuine_branch_point():
    # with p1 = 0 the energy-factor zero sits exactly on the vertical path;
    # for the bare phase the two lateral detours are inequivalent, so the
    # collision cannot be resolved and must be reported
    p = mk.shell_point(0.0, 1.0, 1.0)
    bare = holo.uncompensated_phase_expr(cg.identity(), p, S)
    with pytest.raises((holo.RefinementLimit, holo.PowerBaseVanishes)):
        holo.continue_robust(bare, holo.StripPath.vertical(0.0, samples=65))


def test_nested_power_rejected():
    with pytest.raises(ValueError):
        holo.Pow(holo.Pow(holo.const(2.0), 0.5), 0.5)


def test_morera_contour_must_be_interior():
    e = holo.const(1.0)
    with pytest.raises(ValueError):
        holo.morera_residual(e, holo.StripPath.rectangle(-1, 1, 0.0, 1.0))


# --- tube region and its polar decomposition --------------------------------

def region():
    from anyonstat import conegeom as cgm
    p1, p2 = cgm.antipodal_pair()
    return holo.gamma_region(p1.sector, p2.sector, 1.0)


def test_gamma_region_requires_salient_difference():
    from anyonstat import conegeom as cgm
    s = cgm.SpatialSector(-0.3, 0.4)
    with pytest.raises(ValueError):
        holo.gamma_region(s, s, 1.0)


def test_gamma_membership():
    reg = region()
    p = mk.shell_point(0.4, -0.3, 1.0)
    assert not holo.gamma_contains(p.as_array().astype(complex), reg)
    for z in (0.3 + 0.9j, -0.5 + 2.2j, 1.8j):
        k = mk.boost1(-z) @ p.as_array()
        assert holo.gamma_contains(k, reg)
        assert not holo.gamma_contains(k.conjugate(), reg)
    assert not holo.gamma_contains(np.array([1.0, 0.2, 0.3 + 0.1j]), reg)


def test_gamma0_decomposition_roundtrip():
    rng = np.random.default_rng(11)
    p = mk.shell_point(0.4, -0.3, 1.0)
    d = holo.gamma0_decompose(mk.boost1(-1.1j) @ p.as_array(), 1.0)
    assert abs(d.r) < 1e-9 or abs(abs(d.r) - math.pi) < 1e-9
    assert abs(d.theta - 1.1) < 1e-9
    for _ in range(100):
        r = rng.uniform(-math.pi, math.pi)
        theta = rng.uniform(0.05, math.pi - 0.05)
        q = mk.shell_point(rng.uniform(-1, 1), rng.uniform(-1, 1), 1.0)
        k = mk.rotation(r) @ mk.boost1(1j * theta) @ mk.rotation(-r) @ q.as_array()
        dec = holo.gamma0_decompose(k, 1.0)
        assert np.max(np.abs(dec.recompose() - k)) < 1e-10
        assert 0.0 < dec.theta < math.pi
    with pytest.raises(holo.NotInGamma0):
        holo.gamma0_decompose(p.as_array().astype(complex), 1.0)
    with pytest.raises(holo.NotInGamma0):
        holo.gamma0_decompose(np.array([1.0, 2.0, 3.0 + 1j]), 1.0)


# --- log-derivative ODE ------------------------------------------------------

def test_ode_scalar_exponential():
    a = 0.7
    val = holo.ode_continue(lambda z, t0: cmath.exp(1j * a * (z + t0)),
                            holo.StripPath.vertical(0.0, height=math.pi / 2))
    assert abs(val[0, 0] - cmath.exp(1j * a * 1j * math.pi / 2)) < 1e-8


def test_ode_singular_determinant_detour():
    # f1 = cosh has a zero exactly on the path; the shifted detour recovers it
    val = holo.ode_continue(lambda z, t0: cmath.cosh(z + t0),
                            holo.StripPath.vertical(0.0, height=2.2))
    assert abs(val[0, 0] - cmath.cosh(2.2j)) < 1e-5
