"""Chord-ratio functionals: independent routes that must reproduce alpha.

beta and rho are computed without the facet maximum that drives alpha, so
the identity checks here are genuine cross-validations, not tautologies.
Sampled quantities are one sided: inf-type ratios can only overshoot and
sup-type ratios can only undershoot their true values.
"""

import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, settings, strategies as st

from minkgauge import (Ball, BodyError, HPolytope, SupportOracle, VPolytope,
                       alpha, beta, brute_force_alpha, chord, contains,
                       far_radius, inscribed_ball, minkowski_phi,
                       ratio_functionals, rho, support)
from minkgauge.ratios import SAMPLING_SIDES

from conftest import polygons_with_exterior, polygons_with_interior


SQ = VPolytope(np.array([[1.0, 1.0], [1.0, -1.0], [-1.0, -1.0], [-1.0, 1.0]]))
TRI = VPolytope(np.array([[10.0, 10.0], [16.0, 10.0], [10.0, 16.0]]))


def test_chord_square_axis():
    c = chord(SQ, np.zeros(2), np.array([1.0, 0.0]))
    assert c is not None
    ends = {tuple(np.round(c.a, 12)), tuple(np.round(c.b, 12))}
    assert ends == {(1.0, 0.0), (-1.0, 0.0)}


def test_chord_orders_near_endpoint_second():
    c = chord(SQ, np.array([0.5, 0.0]), np.array([1.0, 0.0]))
    # b is the near endpoint
    assert np.linalg.norm(np.asarray(c.b) - np.array([0.5, 0.0])) <= \
        np.linalg.norm(np.asarray(c.a) - np.array([0.5, 0.0]))


def test_chord_line_missing_the_body_is_none():
    assert chord(SQ, np.array([3.0, 0.0]), np.array([0.0, 1.0])) is None


def test_chord_ball_quadratic():
    B = Ball(np.zeros(2), 2.0)
    c = chord(B, np.array([1.0, 0.0]), np.array([1.0, 0.0]))
    ends = {tuple(np.round(c.a, 12)), tuple(np.round(c.b, 12))}
    assert ends == {(2.0, 0.0), (-2.0, 0.0)}


def test_chord_halfspace_and_vertex_routes_agree():
    # same square, two representations, two clipping code paths
    SQ_H = HPolytope(np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]]),
                     np.ones(4))
    rng = np.random.default_rng(3)
    for _ in range(25):
        x = rng.uniform(-0.9, 0.9, size=2)
        v = rng.normal(size=2)
        ch, cv = chord(SQ_H, x, v), chord(SQ, x, v)
        npt.assert_allclose(np.asarray(ch.a), np.asarray(cv.a), atol=1e-7)
        npt.assert_allclose(np.asarray(ch.b), np.asarray(cv.b), atol=1e-7)


def test_chord_rejects_plain_oracle():
    o = SupportOracle(lambda v: float(np.linalg.norm(v)), np.zeros(2), 1.0, 1.0)
    with pytest.raises(BodyError):
        chord(o, np.zeros(2), np.array([1.0, 0.0]))


# beta


def test_beta_square_center_is_one():
    assert beta(SQ, np.zeros(2)) == pytest.approx(1.0, abs=1e-12)


def test_beta_triangle_frozen_value():
    assert beta(TRI, np.array([12.0, 12.0])) == pytest.approx(0.5, abs=1e-12)


def test_beta_vanishes_on_the_boundary():
    assert beta(SQ, np.array([1.0, 0.0])) == pytest.approx(0.0, abs=1e-12)


def test_beta_ball_closed_form():
    B = Ball(np.zeros(2), 2.0)
    assert beta(B, np.array([1.0, 0.0])) == pytest.approx(1.0 / 3.0, abs=1e-12)


def test_beta_outside_raises():
    with pytest.raises(BodyError):
        beta(SQ, np.array([2.0, 0.0]))


@given(polygons_with_interior())
@settings(max_examples=50)
def test_beta_alpha_identity(pair):
    K, x = pair
    a = alpha(K, x).alpha
    b = beta(K, x)
    npt.assert_allclose(a, (1.0 - b) / (1.0 + b), atol=1e-8)


@given(polygons_with_interior())
@settings(max_examples=20)
def test_beta_bisection_route_agrees(pair):
    K, x = pair
    exact = beta(K, x)
    # strip the facet data so beta falls back to the reflected-containment
    # bisection; vertices alone drive that route
    from minkgauge.ratios import _beta_bisect
    approx = _beta_bisect(K, x)
    npt.assert_allclose(approx, exact, atol=1e-7)


def test_beta_sampled_route_is_upper():
    c, r = inscribed_ball(TRI)
    O = SupportOracle(lambda v: support(TRI, v), c, r, far_radius(TRI) + 1.0)
    exact = beta(TRI, np.array([12.0, 12.0]))
    sampled = beta(O, np.array([12.0, 12.0]))
    assert sampled >= exact - 1e-9
    assert sampled <= exact + 0.05  # 2048 directions resolve a triangle well


# rho


def test_rho_square_frozen_value():
    assert rho(SQ, np.array([3.0, 0.0])) == pytest.approx(0.5, abs=1e-6)


def test_rho_ball_closed_form():
    B = Ball(np.zeros(2), 1.0)
    assert rho(B, np.array([3.0, 0.0])) == pytest.approx(0.5, abs=1e-12)


def test_rho_inside_raises():
    with pytest.raises(BodyError):
        rho(SQ, np.zeros(2))


@given(polygons_with_exterior())
@settings(max_examples=30)
def test_rho_alpha_identity(pair):
    K, x = pair
    a = alpha(K, x).alpha
    r = rho(K, x)
    npt.assert_allclose(a, (1.0 + r) / (1.0 - r), atol=1e-6 * max(1.0, a))


# aggregated ratio report


def test_ratio_report_triangle_interior_frozen():
    rep = ratio_functionals(TRI, np.array([12.0, 12.0]), n_lines=64, seed=0)
    assert rep.point_in_body
    assert rep.mu is None
    npt.assert_allclose(rep.sigma, 0.5, atol=1e-9)
    npt.assert_allclose(rep.nu, 1.0 / 3.0, atol=1e-9)
    npt.assert_allclose(rep.omega, 2.0 / 3.0, atol=1e-9)
    npt.assert_allclose(rep.gamma_sq, 8.0 / 9.0, atol=1e-9)


def test_ratio_report_square_exterior_frozen():
    rep = ratio_functionals(SQ, np.array([3.0, 0.0]), n_lines=64, seed=0)
    assert not rep.point_in_body
    assert rep.nu is None and rep.omega is None and rep.gamma_sq is None
    npt.assert_allclose(rep.sigma, 0.5, atol=1e-9)
    npt.assert_allclose(rep.mu, 3.0, atol=1e-9)


def test_ratio_report_sides_table():
    rep = ratio_functionals(SQ, np.zeros(2), n_lines=8, seed=1)
    assert rep.sides == SAMPLING_SIDES
    assert rep.n_chords > 0


def test_ratio_report_rejects_zero_lines():
    with pytest.raises(BodyError):
        ratio_functionals(SQ, np.zeros(2), n_lines=0)


@given(polygons_with_interior(), st.integers(min_value=0, max_value=2**31 - 1))
@settings(max_examples=30)
def test_interior_per_chord_identities(pair, seed):
    # nu = (1-sigma)/(1+sigma) and gamma^2 = 4 omega (1-omega) transfer from
    # single chords to the aggregated extremes because the maps are monotone
    K, x = pair
    rep = ratio_functionals(K, x, n_lines=32, seed=seed)
    npt.assert_allclose(rep.nu, (1.0 - rep.sigma) / (1.0 + rep.sigma), atol=1e-12)
    npt.assert_allclose(rep.gamma_sq, 4.0 * rep.omega * (1.0 - rep.omega), atol=1e-12)


@given(polygons_with_exterior(), st.integers(min_value=0, max_value=2**31 - 1))
@settings(max_examples=30)
def test_exterior_per_chord_identity(pair, seed):
    K, x = pair
    rep = ratio_functionals(K, x, n_lines=32, seed=seed)
    if rep.n_chords == 0:
        return
    npt.assert_allclose(rep.sigma, (rep.mu - 1.0) / (rep.mu + 1.0), atol=1e-12)


@given(polygons_with_interior(), st.integers(min_value=0, max_value=2**31 - 1))
@settings(max_examples=25)
def test_interior_sampling_sides(pair, seed):
    K, x = pair
    a = alpha(K, x).alpha
    rep = ratio_functionals(K, x, n_lines=48, seed=seed)
    true_sigma = (1.0 - a) / (1.0 + a)
    true_nu = a
    true_omega = (1.0 + a) / 2.0
    true_gamma_sq = 1.0 - a * a
    assert rep.sigma >= true_sigma - 1e-9
    assert rep.nu <= true_nu + 1e-9
    assert rep.omega <= true_omega + 1e-9
    assert rep.gamma_sq >= true_gamma_sq - 1e-9


@given(polygons_with_exterior(), st.integers(min_value=0, max_value=2**31 - 1))
@settings(max_examples=25)
def test_exterior_sampling_sides(pair, seed):
    K, x = pair
    a = alpha(K, x).alpha
    rep = ratio_functionals(K, x, n_lines=48, seed=seed)
    if rep.n_chords == 0:
        return
    assert rep.sigma >= (a - 1.0) / (a + 1.0) - 1e-9
    assert rep.mu >= a - 1e-9


@given(polygons_with_interior(), st.integers(min_value=0, max_value=2**31 - 1))
@settings(max_examples=25)
def test_more_lines_tighten_the_interior_report(pair, seed):
    K, x = pair
    small = ratio_functionals(K, x, n_lines=8, seed=seed)
    big = ratio_functionals(K, x, n_lines=64, seed=seed)
    assert big.sigma <= small.sigma + 1e-12
    assert big.nu >= small.nu - 1e-12


# brute force cross-check


@given(polygons_with_interior())
@settings(max_examples=25)
def test_brute_force_matches_alpha_in_the_plane(pair):
    # facet normals are part of the brute-force direction set, so the planar
    # value is recovered exactly
    K, x = pair
    npt.assert_allclose(brute_force_alpha(K, x, n_dirs=64), alpha(K, x).alpha,
                        atol=1e-10)


def test_brute_force_lower_bounds_alpha_elsewhere():
    tet = VPolytope(np.vstack([np.zeros(3), np.eye(3)]))
    x = np.array([1.0, 1.0, 1.0])
    assert brute_force_alpha(tet, x, n_dirs=512) <= alpha(tet, x).alpha + 1e-8


def test_minkowski_phi():
    assert minkowski_phi(SQ, np.zeros(2)) == pytest.approx(1.0, abs=1e-12)
    assert minkowski_phi(SQ, np.array([1.0, 1.0])) == pytest.approx(0.0, abs=1e-12)
    # phi treats the gauge symmetrically across the boundary
    assert minkowski_phi(SQ, np.array([3.0, 0.0])) == pytest.approx(0.5, abs=1e-12)
