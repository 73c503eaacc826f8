import cmath
import math

import numpy as np
import pytest

from anyonstat import covergroup as cg
from anyonstat import holo
from anyonstat import minkowski as mk
from anyonstat import spinstat as ss

P = mk.shell_point(0.4, -0.3, 1.0)


@pytest.fixture(scope="module")
def family_third():
    _, fam = ss.build_toy_model(1 / 3, 1.0, 2, seed=5)
    return fam


def test_bosonic_point_target():
    model, fam = ss.build_toy_model(0.0, 1.0, 1, seed=1)
    assert model.omega_target == 1.0
    # with s = 0 the compensators are trivial and the family is exponential
    v = fam.psi1(P)[0, 0]
    assert abs(abs(v) - abs(cmath.exp(1j * mk.minkowski_product(model.b1, P.as_array()))
                            * model.a1[0, 0])) < 1e-14


def test_half_spin_target():
    model, _ = ss.build_toy_model(0.5, 1.0, 1, seed=1)
    assert abs(model.omega_target + 1.0) < 1e-15


def test_invertibility_scan():
    _, fam = ss.build_toy_model(1 / 3, 1.0, 2, seed=42)
    worst = np.inf
    for p1 in np.linspace(-1.2, 1.2, 30):
        for p2 in np.linspace(-1.2, 1.2, 30):
            p = mk.shell_point(p1, p2, 1.0)
            worst = min(worst, abs(np.linalg.det(fam.psi1(p))),
                        abs(np.linalg.det(fam.psi2(p))))
    assert worst > 1e-8


def test_dressed_family_at_zero(family_third):
    assert np.allclose(ss.dressed_family(family_third, 1, 0.0, P),
                       family_third.psi1(P), atol=1e-14)
    assert np.allclose(ss.dressed_family(family_third, 2, 0.0, P),
                       family_third.psi2(P), atol=1e-14)


def test_wigner_factor_cancellation(family_third):
    for t in (0.2, -0.7, 1.1):
        assert ss.wigner_cancellation(family_third, P, t) < 1e-11


def test_dressed_factors_are_analytic(family_third):
    q = ss._reflected_anchor(P)
    rect = holo.StripPath.rectangle(-0.4, 0.4, 0.15, math.pi - 0.15)
    assert holo.morera_residual(family_third.pref1_expr(q), rect) < 1e-8
    assert holo.morera_residual(family_third.pref2bar_expr(q), rect) < 1e-8


def test_tomita_routes_match_closed_forms(family_third):
    fam = family_third
    assert ss._rel(ss.tomita_hat(fam, P), fam.hat_closed(P)) < 1e-12
    assert ss._rel(ss.tomita_check(fam, P), fam.check_closed(P)) < 1e-12


def test_tomita_scalar_bosonic_reduction():
    # s = 0: the hat route is plainly the conjugated reflected evaluation
    model, fam = ss.build_toy_model(0.0, 1.0, 1, seed=3)
    hat = ss.tomita_hat(fam, P)
    expected = (cmath.exp(1j * mk.minkowski_product(model.b1, -P.as_array()))
                * model.a1[0, 0]).conjugate()
    assert abs(hat[0, 0] - expected) < 1e-12


def test_full_reflected_two_point_relation(family_third):
    fam = family_third
    lhs = ss.tomita_hat(fam, P).conj().T @ ss.tomita_check(fam, P)
    rhs = fam.model.omega_target * (fam.psi1_conj(P).conj().T @ fam.psi2_conj(P))
    assert ss._rel(lhs, rhs) < 1e-8


def test_two_point_boundary_and_controls(family_third):
    out = ss.two_point_boundary_check(family_third, P)
    assert out["whole_vs_closed"] < 1e-8
    assert out["whole_vs_factor"] < 1e-8
    assert out["transpose_control"] > 1e-3


def test_two_point_bosonic_reflection():
    _, fam = ss.build_toy_model(0.0, 1.0, 1, seed=2)
    out = ss.two_point_boundary_check(fam, P)
    assert out["whole_vs_closed"] < 1e-9


def test_kernel_morera(family_third):
    kernel = ss.TwoPointKernel(family_third)
    assert kernel.morera(ss._reflected_anchor(P)) < 1e-8


def test_transformation_law(family_third):
    ident = ss.verify_transformation_law(cg.identity(), P, family_third)
    assert ident["sides"] < 1e-10
    g = cg.lift_rotation(0.1)
    out = ss.verify_transformation_law(g, P, family_third)
    assert out["sides"] < 1e-8
    assert out["factor_lhs_vs_closed"] < 1e-8
    assert out["factor_rhs_vs_closed"] < 1e-8


def test_transformation_law_hypothesis_gate(family_third):
    with pytest.raises(ss.HypothesisViolation):
        ss.verify_transformation_law(cg.lift_rotation(2.5), P, family_third)


def test_extract_d_roundtrip():
    injected = np.diag([2.0, 1j])
    _, fam = ss.build_toy_model(1 / 3, 1.0, 2, seed=9, injected_d=injected)
    grid = ss.momentum_grid(1.0, 3)
    d, res = ss.extract_D(fam, grid)
    assert np.max(np.abs(d - injected)) < 1e-9
    assert res < 1e-8


def test_extract_d_scalar_case():
    _, fam = ss.build_toy_model(0.25, 1.0, 1, seed=4, injected_d=np.eye(1))
    d, res = ss.extract_D(fam, ss.momentum_grid(1.0, 3))
    assert abs(d[0, 0] - 1.0) < 1e-10
    assert res < 1e-8


def test_rotation_pi_relation(family_third):
    out = ss.rotation_pi_relation(family_third, P)
    assert max(out.values()) < 1e-8


def test_rotation_pi_bosonic():
    _, fam = ss.build_toy_model(0.0, 1.0, 1, seed=6)
    out = ss.rotation_pi_relation(fam, P)
    assert max(out.values()) < 1e-10


def test_rotation_pi_half_spin():
    _, fam = ss.build_toy_model(0.5, 1.0, 2, seed=6)
    out = ss.rotation_pi_relation(fam, P)
    assert max(out.values()) < 1e-8


def test_phase_extraction_values():
    grid = ss.momentum_grid(1.0, 3)
    for s, expected in ((0.0, 1.0), (0.5, -1.0), (1 / 3, cmath.exp(2j * math.pi / 3))):
        _, fam = ss.build_toy_model(s, 1.0, 2, seed=8)
        out = ss.extract_statistics_phase(fam, grid)
        assert abs(out.omega_hat - expected) < 1e-8
        assert out.mismatch < 1e-10
        assert out.min_eigenvalue > 1e-6


def test_phase_extraction_rejects_inconsistent_data():
    # a non-unitary injected D breaks the scalar relation between the routes
    _, fam = ss.build_toy_model(1 / 3, 1.0, 2, seed=8, injected_d=np.diag([2.0, 1j]))
    with pytest.raises(ss.NonScalarMismatch):
        ss.extract_statistics_phase(fam, ss.momentum_grid(1.0, 3))


def test_ode_route_agrees_with_engine(family_third):
    assert ss.ode_vs_engine(family_third, mk.shell_point(0.35, -0.2, 1.0)) < 1e-6


def test_boundary_values_anchor_invariant(family_third):
    # continue along two different strip paths to the same boundary point
    q = ss._reflected_anchor(P)
    expr = family_third.pref1_expr(q)
    v0 = holo.continue_robust(expr, [0.0, 1j * math.pi])
    v1 = holo.continue_robust(expr, [0.0, 0.5, 0.5 + 1j * math.pi, 1j * math.pi])
    assert abs(v0 - v1) < 1e-9


def test_pipeline_report_single_spin():
    rep = ss.run_pipeline(0.137, 1.0, 2, seed=3, grid_size=3)
    assert rep.phase_error < 1e-8
    assert rep.weak_error < 1e-7
    assert rep.residuals["d_constancy"] < 1e-8
    assert rep.residuals["pi_rotation"] < 1e-8
    assert rep.residuals["dual_route"] < 1e-8
    assert rep.residuals["transformation_law"] < 1e-8
    assert rep.residuals["dstar_d_min_eig"] > 1e-6


def test_build_rejects_bad_mass():
    with pytest.raises(ValueError):
        ss.build_toy_model(0.5, 0.0)
