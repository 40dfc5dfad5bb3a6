import math

import pytest

import revolve


def test_version():
    assert revolve.__version__ == "1.0.0"


def test_parse_and_psi():
    ball = revolve.parse_body("ball")
    for x in (0.0, 0.7, 2.0):
        assert ball.psi(x) == pytest.approx(1.0 / math.sqrt(1.0 + x * x), rel=1e-12)
    cone = revolve.parse_body("cone")
    assert cone.psi(1.5) == pytest.approx(0.4, rel=1e-12)
    assert revolve.format_body(cone) == "cone"


def test_bad_spec_raises_value_error():
    with pytest.raises(ValueError):
        revolve.parse_body("bogus")


def test_cylinder_equator_value():
    cyl = revolve.parse_body("cylinder")
    for n in (4, 6):
        got = revolve.ik_radial(cyl, n, math.pi / 2)
        assert got == pytest.approx((n - 1) / (n - 2), rel=1e-9)


def test_operator_step_dict():
    step = revolve.intersection_body(revolve.parse_body("ball"), 5)
    assert step["n"] == 5
    assert len(step["theta"]) == len(step["rho"]) == 1024
    want = step["rho"][0]
    assert step["rho"][-1] == pytest.approx(want, rel=1e-9)
    assert step["profile"].radial(0.3) == pytest.approx(want, rel=1e-9)


def test_iterate_renormalizes():
    steps = revolve.iterate_intersection(revolve.parse_body("ball"), 5, 2)
    assert len(steps) == 2
    assert steps[0]["rho"][-1] == pytest.approx(steps[1]["rho"][-1], rel=1e-7)


def test_power_fit_dict():
    fit = revolve.power_type_fit(revolve.parse_body("pball:3"))
    assert fit["p"] == pytest.approx(3.0, abs=0.02)
    assert fit["c"] == pytest.approx(1.0 / 3.0, rel=0.05)


def test_equator_and_bm():
    rep = revolve.equator_convexity(revolve.parse_body("ball"))
    assert rep["verdict"] == "strictly-convex"
    assert rep["margin"] == pytest.approx(1.0, abs=1e-6)

    bm = revolve.bm_ball(revolve.dilate(revolve.parse_body("ball"), 2.0, 1.0))
    assert bm["distance"] == pytest.approx(1.0, abs=1e-8)
    assert bm["s_opt"] == pytest.approx(0.5, rel=1e-5)


def test_degenerate_profile_raises():
    caps = revolve.parse_body("capped:0.3")
    with pytest.raises(RuntimeError):
        revolve.bm_ball(caps)


def test_scenario_roundtrip(tmp_path):
    ids = revolve.scenario_ids()
    assert len(ids) == 15
    res = revolve.run_scenario("lemma2-upper-bound", out_dir=str(tmp_path))
    assert res["id"] == "lemma2-upper-bound"
    assert res["pass"] is True
    assert (tmp_path / "lemma2-upper-bound" / "verdict.json").exists()
