import math

import numpy as np
import pytest

import hcat


def test_necksize_closed_form():
    # alpha = (1 + 2Hd)/(1 - 4H^2) = 1.25/0.75 = 5/3, arccosh(5/3) = ln 3
    assert hcat.necksize(0.25, 0.5) == pytest.approx(math.log(3.0), abs=1e-15)
    assert hcat.necksize(0.25, -0.5) == 0.0
    p = hcat.CmcParams(0.25, 0.5)
    assert p.alpha == pytest.approx(5.0 / 3.0)
    assert not p.is_entire_graph
    assert hcat.CmcParams(0.25, -0.5).is_entire_graph


def test_lambda_and_inverse():
    eta = hcat.necksize(0.25, 0.5)
    assert hcat.lambda_(0.25, 0.5, eta) == 0.0
    prev = 0.0
    for rho in (eta + 0.1, eta + 0.5, eta + 2.0):
        lam = hcat.lambda_(0.25, 0.5, rho)
        assert lam > prev
        assert hcat.b_inverse(0.25, 0.5, lam) == pytest.approx(rho, abs=1e-8)
        prev = lam


def test_profile_arrays():
    rho, t = hcat.profile(0.25, 0.5, 3.0, 16)
    assert isinstance(rho, np.ndarray) and rho.shape == (16,)
    assert rho[0] == pytest.approx(math.log(3.0))
    assert t[0] == 0.0
    assert np.all(np.diff(rho) > 0)
    assert np.all(np.diff(t) > 0)


def test_geometry():
    assert hcat.hyp_distance((1.0, 0.0), (1.0, math.pi)) == pytest.approx(2.0)
    q = hcat.translate_along_geodesic((0.7, 1.1), 0.4)
    back = hcat.translate_along_geodesic(q, -0.4)
    assert back[0] == pytest.approx(0.7, abs=1e-12)
    assert back[1] == pytest.approx(1.1, abs=1e-12)
    assert hcat.classify_circle_intersection((0.0, 0.0), 1.0, (0.5, 0.0), 0.2) == "DisjointNested"
    assert hcat.classify_circle_intersection((0.0, 0.0), 1.0, (3.0, 0.0), 0.5) == "DisjointOutside"


def test_certify_and_strips():
    cert = hcat.certify(0.25, 3.0, t_max=10.0, grid_step=0.1)
    assert cert["kind"] == "disjointness_certificate"
    assert cert["delta0"] > 0
    assert cert["d0"] == pytest.approx(cert["d2"])
    reports = hcat.verify_strips(cert, t_max=5.0, step=0.5, d_points=3)
    assert reports["strip_claim"]["pass"]
    assert reports["c3_lemma"]["pass"]
    assert reports["remark"]["pass"]


def test_appendix_case():
    case = hcat.verify_appendix_case(0.25, 0.5)
    assert case["passed"]
    assert case["decomposition_error"] < 1e-12


def test_revolve_shapes():
    verts, faces = hcat.revolve(0.25, 0.5, 3.0, 8, 6, "poincare", True)
    assert verts.shape == ((2 * 8 - 1) * 6, 3)
    assert faces.shape == ((2 * 8 - 2) * 6, 4)
    assert faces.min() == 0 and faces.max() == verts.shape[0] - 1
    assert np.all(np.hypot(verts[:, 0], verts[:, 1]) < 1.0)


def test_errors():
    with pytest.raises(ValueError):
        hcat.necksize(0.6, 1.0)
    with pytest.raises(ValueError):
        hcat.necksize(0.25, -1.0)
    with pytest.raises(hcat.PreconditionError):
        hcat.necksize(0.6, 1.0)
    with pytest.raises(hcat.DomainError):
        hcat.integrand(0.25, -0.5, 0.0)
    with pytest.raises(hcat.PreconditionError):
        hcat.necksize(0.25, -1.0)


def test_run_cli():
    code, out, err = hcat.run_cli(["necksize", "--H", "0.25", "--d", "0.5"])
    assert code == 0
    assert float(out) == pytest.approx(math.log(3.0))
    code, _, _ = hcat.run_cli(["necksize", "--H", "0.25"])
    assert code == 1
