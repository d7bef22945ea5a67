import math

import numpy as np
import pytest

import liedarboux as ld


def test_helix_constants():
    d = ld.helix_derived(3, 4)
    assert d.c == pytest.approx(5)
    assert d.w1 == pytest.approx(2)
    assert d.w2 == pytest.approx(-0.5)
    assert d.ck == pytest.approx(-4)
    assert d.kappa == pytest.approx(3 / 25)


def test_expression_and_profile():
    e = ld.Expression("1 + 0.5*cos(s)")
    assert e(0.0) == pytest.approx(1.5)
    p = ld.Profile.expression("1", "s/2")
    assert p(2.0) == pytest.approx((1.0, 1.0))
    assert ld.Profile.constant(1, 0.5).accumulated_torsion(0, 4, 8) == pytest.approx(2.0)
    with pytest.raises(ld.ParseError):
        ld.Expression("1 +")
    with pytest.raises(ld.UnknownIdentifier):
        ld.Expression("kappa")
    with pytest.raises(ld.Error):
        ld.Expression("1/s")(0.0)


def test_helix_reconstruction_lies_on_cylinder():
    d = ld.helix_derived(3, 4)
    s, xyz = ld.reconstruct_curve(ld.Profile.helix(3, 4), 0, 10 * math.pi, 4000)
    assert xyz.shape == (4001, 3)
    s_al, aligned = ld.align_to_axis(s, xyz)
    report = ld.cylinder_residual(s_al, aligned, d.a, 1e-6)
    assert report["passed"], report


def test_variants_and_routes_agree():
    p = ld.Profile.expression("1", "0.3 + 0.1*sin(s)")
    s, plus = ld.reconstruct_curve(p, 0, 5, 500, "plus")
    _, minus = ld.reconstruct_curve(p, 0, 5, 500, "minus")
    _, frenet = ld.reconstruct_frenet(p, 0, 5, 500)
    np.testing.assert_allclose(plus, minus, atol=1e-12)
    _, _, rmsd = ld.align_curves(s, frenet, plus)
    assert rmsd < 1e-8


def test_fundamental_matches_closed_form():
    d = ld.helix_derived(3, 4)
    s, mats = ld.integrate_fundamental(ld.Profile.helix(3, 4), 0, 10.0, 1000)
    assert mats.shape == (1001, 2, 2)
    assert mats.dtype == np.complex128
    np.testing.assert_allclose(mats[-1], ld.fundamental_closed_form(d, s[-1]), atol=1e-10)
    det = mats[:, 0, 0] * mats[:, 1, 1] - mats[:, 0, 1] * mats[:, 1, 0]
    np.testing.assert_allclose(det, 1.0, atol=1e-12)


def test_stereographic_round_trip():
    v = np.array([0.36, 0.48, 0.8])
    w, z = ld.wz_from_frame(v)
    np.testing.assert_allclose(ld.frame_from_wz(w, z).real, v, atol=1e-14)
    m = np.eye(2, dtype=complex)
    assert ld.mobius_eval(m, 2 + 1j) == pytest.approx(2 + 1j)
    assert ld.mobius_eval(np.array([[1, 0], [1, 1]], dtype=complex), None) == pytest.approx(1.0)
    a = ld.scheffers_tangent(m)
    assert np.sum(a * a) == pytest.approx(1.0)


def test_bad_variant_and_pole():
    with pytest.raises(ld.InvalidArgument):
        ld.reconstruct_curve(ld.Profile.constant(1, 1), 0, 1, 10, "sideways")
    with pytest.raises(ld.PoleError):
        ld.scheffers_tangent(np.zeros((2, 2), dtype=complex))


def test_run_command():
    code, out, err = ld.run_command(["helix", "--a", "3", "--b", "4", "--s1", "31.4159265", "--n", "4000"])
    assert code == 0, out + err
    assert "FAIL" not in out
    code, _, err = ld.run_command(["reconstruct", "--kappa", "1", "--tau", "0", "--s0", "0", "--s1", "1", "--n", "7"])
    assert code == 2 and err
