"""Metric quantities of convex bodies: widths, chords, diameter, Hausdorff.

Planar bodies get exact answers (the relevant extrema over directions are
attained on known finite candidate sets).  In dimension three and higher the
direction sweeps fall back to seeded multi-start optimization and the result
carries an ``exact`` flag set to False.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
from scipy import optimize

from . import lp
from .body import (Ball, BodyError, HPolytope, Product, Reflected, Scaled, Sum,
                   SupportOracle, Translated, VPolytope, as_vector, contains, dim,
                   halfspaces, hull2d, lp_encoding, simplify, support,
                   vertex_candidates)


class WidthResult(NamedTuple):
    value: float
    direction: np.ndarray
    exact: bool


class HausdorffResult(NamedTuple):
    value: float
    exact: bool


def width_dir(K, v) -> float:
    """Width of K in direction v: h(K, v) + h(K, -v)."""
    v = as_vector(v, dim(K))
    if not np.any(v):
        raise ValueError("direction must be nonzero")
    return support(K, v) + support(K, -v)


def _exact_points(K):
    """A finite generating point set for K when one can be had exactly."""
    V = vertex_candidates(K)
    if V is not None:
        return V
    d = dim(K)
    if d == 1:
        return _interval_points(K).reshape(2, 1)
    if d == 2:
        hs = halfspaces(K)
        if hs is not None:
            return vertices2d(*hs)
    return None


def central_symm(K):
    """Central symmetrization (K + (-K)) / 2, an origin-symmetric body."""
    K = simplify(K)
    if isinstance(K, Ball):
        return Ball(np.zeros(dim(K)), K.radius)
    V = _exact_points(K)
    if V is not None:
        diffs = (V[:, None, :] - V[None, :, :]).reshape(-1, V.shape[1]) / 2.0
        diffs = np.unique(diffs, axis=0)
        if V.shape[1] == 2 and diffs.shape[0] > 3:
            try:
                diffs = hull2d(diffs)
            except BodyError:
                pass
        return VPolytope(diffs)
    return Sum((Scaled(K, 0.5), Scaled(Reflected(K), 0.5)))


def sphere_dirs(d, n, seed=0):
    """n pseudo-random unit directions; dirs(d, n, seed) is a prefix of dirs(d, 2n, seed)."""
    rng = np.random.default_rng(seed)
    U = rng.normal(size=(n, d))
    return U / np.linalg.norm(U, axis=1, keepdims=True)


def _axis_dirs(d):
    E = np.eye(d)
    return np.vstack([E, -E])


def _multistart_sphere(f, d, sense="min", n_starts=64, seed=0, extra_starts=None):
    """Optimize f over unit directions: dense prepass plus local polish.

    Returns (best unit direction, best value).  Deterministic for fixed seed.
    """
    sign = 1.0 if sense == "min" else -1.0

    def g(v):
        nv = np.linalg.norm(v)
        if nv < 1e-12:
            return np.inf
        return sign * f(v / nv)

    cands = [sphere_dirs(d, max(256, 32 * d), seed), _axis_dirs(d)]
    if extra_starts is not None and len(extra_starts):
        E = np.atleast_2d(np.asarray(extra_starts, dtype=float))
        E = E / np.linalg.norm(E, axis=1, keepdims=True)
        cands.append(E)
    C = np.vstack(cands)
    vals = np.array([g(v) for v in C])
    order = np.argsort(vals)
    best_v, best = C[order[0]], vals[order[0]]
    for idx in order[:n_starts]:
        res = optimize.minimize(g, C[idx], method="L-BFGS-B")
        if res.fun < best:
            best, best_v = res.fun, np.asarray(res.x, dtype=float)
    best_v = best_v / np.linalg.norm(best_v)
    return best_v, sign * best


def max_chord(K, v) -> float:
    """Longest translation parameter tau(K, v) = sup {t : K and K + t v intersect}.

    Equals twice the exit parameter of the ray {t v} from the central
    symmetrization.  Exact (one LP) for all linearly encodable bodies; for
    support oracles the infimum formula tau = inf_u w(K, u)/<u, v> is
    approximated over a direction sweep.
    """
    v = as_vector(v, dim(K))
    if not np.any(v):
        raise ValueError("direction must be nonzero")
    K = simplify(K)
    if isinstance(K, Ball):
        return 2.0 * K.radius / float(np.linalg.norm(v))
    if dim(K) == 1 and not isinstance(K, SupportOracle):
        # every chord of an interval is the interval itself
        return (support(K, np.ones(1)) + support(K, -np.ones(1))) / abs(float(v[0]))
    if isinstance(K, Product):
        out, at = np.inf, 0
        for f in K.factors:
            k = dim(f)
            block = v[at:at + k]
            if np.any(block):
                out = min(out, max_chord(f, block))
            at += k
        return float(out)
    if isinstance(K, (Translated,)):
        return max_chord(K.body, v)
    if isinstance(K, Reflected):
        return max_chord(K.body, -v)
    if isinstance(K, Scaled):
        return K.factor * max_chord(K.body, v)
    e = lp_encoding(K)
    if e is not None:
        # variables (u1, u2, t): P u2 + q = P u1 + q + t v, maximize t
        n = 2 * e.n + 1
        d = v.size
        A_eq = np.zeros((e.A_eq.shape[0] * 2 + d, n))
        b_eq = np.concatenate([e.b_eq, e.b_eq, np.zeros(d)])
        A_eq[:e.A_eq.shape[0], :e.n] = e.A_eq
        A_eq[e.A_eq.shape[0]:2 * e.A_eq.shape[0], e.n:2 * e.n] = e.A_eq
        A_eq[2 * e.A_eq.shape[0]:, :e.n] = e.P
        A_eq[2 * e.A_eq.shape[0]:, e.n:2 * e.n] = -e.P
        A_eq[2 * e.A_eq.shape[0]:, -1] = v
        A_ub = np.zeros((e.A_ub.shape[0] * 2, n))
        A_ub[:e.A_ub.shape[0], :e.n] = e.A_ub
        A_ub[e.A_ub.shape[0]:, e.n:2 * e.n] = e.A_ub
        b_ub = np.concatenate([e.b_ub, e.b_ub])
        c = np.zeros(n)
        c[-1] = 1.0
        res = lp.solve(c, A_ub=A_ub if A_ub.size else None,
                       b_ub=b_ub if b_ub.size else None,
                       A_eq=A_eq, b_eq=b_eq,
                       bounds=e.bounds + e.bounds + [(0, None)], sense="max")
        if not res.optimal:
            raise lp.NumericalError(f"chord LP ended with status {res.status}")
        return res.value
    # oracle fallback: tau = inf over u with <u,v> > 0 of w(K, u)/<u, v>
    d = v.size

    def ratio(u):
        s = float(u @ v)
        if s <= 1e-12:
            return np.inf
        return width_dir(K, u) / s
    _, val = _multistart_sphere(ratio, d, sense="min", n_starts=32, seed=5,
                                extra_starts=[v])
    return val


def global_width(K, n_starts=64, seed=0) -> WidthResult:
    """Minimal width over all directions, with the minimizing direction.

    Exact in dimensions 1 and 2 (the minimum over unit directions of the
    symmetrization's support is attained at one of its edge normals); a
    flagged multi-start upper bound otherwise.
    """
    d = dim(K)
    if d == 1:
        w = width_dir(K, np.ones(1))
        return WidthResult(float(w), np.ones(1), True)
    if d == 2:
        P = polygon_vertices(central_symm(K)) if _planar_vertexable(K) else None
        if P is not None:
            A, b = _edge_system(P)
            norms = np.linalg.norm(A, axis=1)
            vals = 2.0 * b / norms
            i = int(np.argmin(vals))
            return WidthResult(float(vals[i]), A[i] / norms[i], True)
    extra = None
    hs = halfspaces(K)
    if hs is not None:
        extra = hs[0]
    v, val = _multistart_sphere(lambda u: width_dir(K, u), d, sense="min",
                                n_starts=n_starts, seed=seed, extra_starts=extra)
    return WidthResult(float(val), v, False)


def diameter(K) -> float:
    """Largest distance between two points of K.

    Exact for vertex-accessible bodies, balls and products of such; equals
    the maximal width over directions, which is how the multi-start fallback
    computes it for oracles (a certified lower bound).
    """
    K = simplify(K)
    if isinstance(K, Ball):
        return 2.0 * K.radius
    if isinstance(K, Product):
        return float(np.sqrt(sum(diameter(f) ** 2 for f in K.factors)))
    V = _exact_points(K)
    if V is not None:
        if V.shape[1] == 2 and V.shape[0] > 64:
            V = hull2d(V)
        D = np.linalg.norm(V[:, None, :] - V[None, :, :], axis=2)
        return float(D.max())
    _, val = _multistart_sphere(lambda u: width_dir(K, u), dim(K), sense="max",
                                n_starts=32, seed=3)
    return float(val)


def far_radius(K) -> float:
    """sup of the euclidean norm over K: the reach from the origin.

    Exact for vertex-accessible bodies, balls and products of such; for
    H-polytopes and oracles the maximum of h over unit directions is taken
    by multi-start search (a certified lower bound).
    """
    K = simplify(K)
    if isinstance(K, Ball):
        return float(np.linalg.norm(K.center)) + K.radius
    if isinstance(K, Product):
        return float(np.sqrt(sum(far_radius(f) ** 2 for f in K.factors)))
    V = _exact_points(K)
    if V is not None:
        return float(np.max(np.linalg.norm(V, axis=1)))
    _, val = _multistart_sphere(lambda u: support(K, u), dim(K), sense="max",
                                n_starts=32, seed=4)
    return float(val)


# ---------------------------------------------------------------------------
# planar helpers


def _planar_vertexable(K):
    if dim(K) != 2:
        return False
    if vertex_candidates(K) is not None:
        return True
    return halfspaces(K) is not None


def polygon_vertices(K):
    """Hull-ordered (CCW) vertices of a planar body, exact.

    Accepts vertex-accessible bodies and H-polytopes (whose vertices are
    enumerated from facet intersections).
    """
    if dim(K) != 2:
        raise BodyError("polygon_vertices needs a planar body")
    V = vertex_candidates(K)
    if V is not None:
        return hull2d(V)
    hs = halfspaces(K)
    if hs is None:
        raise BodyError("planar body without polygon access")
    return hull2d(vertices2d(*hs))


def vertices2d(A, b, feas_tol=1e-7):
    """Vertices of a planar halfspace system from pairwise facet intersections."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    b = np.atleast_1d(np.asarray(b, dtype=float))
    m = A.shape[0]
    norms = np.linalg.norm(A, axis=1)
    scale = max(1.0, float(np.max(np.abs(b) / np.maximum(norms, 1e-30))))
    pts = []
    for i in range(m):
        for j in range(i + 1, m):
            M = np.vstack([A[i], A[j]])
            det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
            if abs(det) <= 1e-12 * norms[i] * norms[j]:
                continue
            p = np.linalg.solve(M, np.array([b[i], b[j]]))
            if np.all(A @ p <= b + feas_tol * scale * np.maximum(norms, 1.0)):
                pts.append(p)
    if not pts:
        raise BodyError("halfspace system has no planar vertices")
    return np.array(pts)


def _edge_system(P):
    # outward halfspaces of a CCW-ordered polygon
    edges = np.roll(P, -1, axis=0) - P
    A = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
    b = np.sum(A * P, axis=1)
    return A, b


def _planar_shape(K):
    """Unique extreme points of a planar (possibly degenerate) body."""
    V = _exact_points(K)
    if V is None:
        raise BodyError("planar shape needs polytope access")
    V = np.unique(V, axis=0)
    if V.shape[0] >= 3:
        try:
            return hull2d(V)
        except BodyError:
            pass
    if V.shape[0] > 2:
        # collinear: keep the two extreme points along the common line
        t = V @ (V[-1] - V[0])
        V = V[[int(np.argmin(t)), int(np.argmax(t))]]
    return V


def _point_to_segment(p, a, b):
    ab = b - a
    L2 = float(ab @ ab)
    if L2 == 0.0:
        return float(np.linalg.norm(p - a))
    t = float(np.clip((p - a) @ ab / L2, 0.0, 1.0))
    return float(np.linalg.norm(p - (a + t * ab)))


def _point_to_shape(p, W):
    n = W.shape[0]
    if n == 1:
        return float(np.linalg.norm(p - W[0]))
    if n == 2:
        return _point_to_segment(p, W[0], W[1])
    A, b = _edge_system(W)
    norms = np.linalg.norm(A, axis=1)
    if np.all(A @ p <= b + 1e-12 * np.maximum(norms, 1.0)):
        return 0.0
    return min(_point_to_segment(p, W[i], W[(i + 1) % n]) for i in range(n))


def _fan_angles(W):
    n = W.shape[0]
    if n == 1:
        return np.zeros(0)
    if n == 2:
        e = W[1] - W[0]
        a = np.arctan2(-e[0], e[1])
        return np.array([a, a + np.pi])
    A, _ = _edge_system(W)
    return np.arctan2(A[:, 1], A[:, 0])


def _hormander_planar(WK, WM):
    # sup over the circle of |h_K - h_M|; between consecutive breakpoints of
    # the merged normal fans the difference is a single sinusoid, so the
    # extrema are at fan angles or at the sinusoid's own critical angle.
    angles = np.concatenate([_fan_angles(WK), _fan_angles(WM)])
    angles = np.unique(np.mod(angles, 2.0 * np.pi))
    if angles.size == 0:
        angles = np.array([0.0])
    cands = list(angles)
    for k in range(angles.size):
        a0 = angles[k]
        a1 = angles[(k + 1) % angles.size] + (2.0 * np.pi if k + 1 == angles.size else 0.0)
        mid = 0.5 * (a0 + a1)
        u = np.array([np.cos(mid), np.sin(mid)])
        p = WK[int(np.argmax(WK @ u))]
        q = WM[int(np.argmax(WM @ u))]
        diff = p - q
        if np.linalg.norm(diff) > 0:
            phi = np.arctan2(diff[1], diff[0])
            for cand in (phi, phi + np.pi):
                c = np.mod(cand, 2.0 * np.pi)
                if a0 - 1e-12 <= c <= a1 + 1e-12 or a0 - 1e-12 <= c + 2.0 * np.pi <= a1 + 1e-12:
                    cands.append(c)
    best = 0.0
    for th in cands:
        u = np.array([np.cos(th), np.sin(th)])
        best = max(best, abs(float(np.max(WK @ u)) - float(np.max(WM @ u))))
    return best


def hausdorff(K, M, n_dirs=4096, seed=0) -> HausdorffResult:
    """Hausdorff distance between two convex bodies.

    Planar polytopal pairs are computed exactly twice over, by the
    set-distance definition (vertex-to-body maxima, both directions) and by
    the support-difference formula over the merged edge-normal fan; the two
    must agree to within 1e-9 of scale or a NumericalError is raised.  Balls
    against balls are closed form.  Everything else is a sampled
    support-difference lower bound over a nested direction family, flagged
    inexact.
    """
    if dim(K) != dim(M):
        raise BodyError("bodies must share a dimension")
    K, M = simplify(K), simplify(M)
    if isinstance(K, Ball) and isinstance(M, Ball):
        v = float(np.linalg.norm(K.center - M.center)) + abs(K.radius - M.radius)
        return HausdorffResult(v, True)
    if dim(K) == 1:
        try:
            WK, WM = _interval_points(K), _interval_points(M)
        except BodyError:
            WK = WM = None
        if WK is not None:
            v = max(abs(WK[0] - WM[0]), abs(WK[1] - WM[1]))
            return HausdorffResult(float(v), True)
    if dim(K) == 2:
        try:
            WK, WM = _planar_shape(K), _planar_shape(M)
        except BodyError:
            WK = WM = None
        if WK is not None:
            d1 = max(_point_to_shape(p, WM) for p in WK)
            d2 = max(_point_to_shape(q, WK) for q in WM)
            by_def = max(d1, d2)
            by_support = _hormander_planar(WK, WM)
            scale = max(1.0, by_def)
            if abs(by_def - by_support) > 1e-9 * scale:
                raise lp.NumericalError(
                    f"hausdorff cross-check failed: {by_def} vs {by_support}")
            return HausdorffResult(by_def, True)
    dirs = sphere_dirs(dim(K), n_dirs, seed)
    best = max(abs(support(K, u) - support(M, u)) for u in dirs)
    return HausdorffResult(float(best), False)


def _interval_points(K):
    lo = -support(K, -np.ones(1))
    hi = support(K, np.ones(1))
    return np.array([lo, hi])


def chord_witness_dir(K, v):
    """Direction v* pairing the maximal chord with a width: planar bodies only.

    The point (tau/2) v lies on the boundary of the central symmetrization;
    the outward normal of the edge through it satisfies
    w(K, v*) = tau(K, v) <v*, v>, the inequality-to-equality witness that
    turns the chord bound into an attained width.  Returns None outside
    dimension two or when no polygonal symmetrization is available.
    """
    if dim(K) != 2:
        return None
    v = as_vector(v, 2)
    tau = max_chord(K, v)
    C = simplify(central_symm(K))
    pts = _exact_points(C)
    if pts is None:
        return None
    try:
        P = hull2d(pts)
    except BodyError:
        return None
    A, b = _edge_system(P)
    p = 0.5 * tau * v
    margins = (A @ p - b) / np.linalg.norm(A, axis=1)
    row = int(np.argmax(margins))
    n = A[row]
    return n / np.linalg.norm(n)
