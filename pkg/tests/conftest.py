"""Shared fixtures and hypothesis strategies for the test suite."""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from minkgauge import VPolytope
from minkgauge.shapes import random_polygon

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

MAX_SEED = 2**31 - 1


@st.composite
def polygons(draw, n_min=3, n_max=10, radius=1.0):
    """Random convex polygon (hull of uniform points in a disc)."""
    n = draw(st.integers(min_value=n_min, max_value=n_max))
    seed = draw(st.integers(min_value=0, max_value=MAX_SEED))
    cx = draw(st.floats(min_value=-2.0, max_value=2.0))
    cy = draw(st.floats(min_value=-2.0, max_value=2.0))
    return random_polygon(n, seed, radius=radius, center=(cx, cy))


@st.composite
def polygon_pairs(draw):
    return draw(polygons()), draw(polygons())


@st.composite
def polygons_with_interior(draw):
    """(polygon, strictly interior point) via a convex combination of vertices."""
    K = draw(polygons())
    seed = draw(st.integers(min_value=0, max_value=MAX_SEED))
    rng = np.random.default_rng(seed)
    V = K.vertices
    w = rng.dirichlet(np.full(len(V), 0.8))
    c = V.mean(axis=0)
    # pull toward the vertex centroid so the point stays off the boundary
    x = 0.9 * (w @ V) + 0.1 * c
    return K, x


@st.composite
def polygons_with_exterior(draw):
    """(polygon, exterior point) at a positive support margin."""
    K = draw(polygons())
    seed = draw(st.integers(min_value=0, max_value=MAX_SEED))
    margin = draw(st.floats(min_value=0.05, max_value=20.0))
    rng = np.random.default_rng(seed)
    u = rng.normal(size=2)
    u /= np.linalg.norm(u)
    h = max(float(u @ v) for v in K.vertices)
    return K, (h + margin) * u


@st.composite
def unit_dirs(draw, d=2):
    seed = draw(st.integers(min_value=0, max_value=MAX_SEED))
    rng = np.random.default_rng(seed)
    v = rng.normal(size=d)
    return v / np.linalg.norm(v)


@pytest.fixture
def paper_triangle():
    """The triangle conv{(10,10),(16,10),(10,16)} used by the regression tests."""
    return VPolytope(np.array([[10.0, 10.0], [16.0, 10.0], [10.0, 16.0]]))


@pytest.fixture
def unit_square():
    return VPolytope(np.array([[1.0, 1.0], [1.0, -1.0], [-1.0, -1.0], [-1.0, 1.0]]))
