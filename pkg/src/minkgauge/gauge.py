"""The asymmetry gauge alpha(K, x), its level sets, and symmetry reports.

For an origin-symmetric body the gauge is the norm whose unit ball is K; in
general it is the supremum over directions v of the normalized functional

    t(K, v, x) = (2 <v, x> - h(K, v) + h(K, -v)) / w(K, v),

which is 0 at a symmetry center, 1 on the boundary, and grows linearly far
away.  Level sets K^lam = {x : alpha <= lam} have two exact polytope
constructions, used here both for computation and as cross-checks:

* lam <= 1: erode each tight facet row inward by (1 - lam) * w(K, a_i) / 2,
* lam >= 1: the points ((lam+1) u - (lam-1) w) / 2 over vertex pairs (u, w)
  generate K^lam, equivalently K^lam = (lam+1)/2 K + (lam-1)/2 (-K).

In dimensions 1 and 2 the supremum defining alpha is attained on the facet
normals of K and their negations (between consecutive merged-fan normals the
functional t is a monotone ratio of sinusoids), so alpha is closed form for
planar polytopes at every point, inside or out.  In higher dimension the
closed form is exact only on the membership branch (alpha <= 1) and exterior
points go through bisection on the sum construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import optimize

from . import lp
from .body import (Ball, BodyError, HPolytope, Product, SupportOracle, VPolytope,
                   as_vector, dim, encoding_feasible, halfspaces, hull2d,
                   inscribed_ball, interior_point, lp_encoding, simplify, support,
                   vertex_candidates)
from .geometry import _exact_points, sphere_dirs, vertices2d

BISECT_TOL = 1e-10
BISECT_MAX_ITER = 60
T_MEMBER_TOL = 1e-9


@dataclass
class GaugeResult:
    """Gauge value with a certified witness: t(K, witness_dir, x) >= alpha - tol."""

    alpha: float
    witness_dir: np.ndarray
    method: str            # closed_form | lp_bisection | sampled
    tol: float


@dataclass
class LevelSet:
    """The set {x : alpha(K, x) <= lam} with an explicit representation.

    ``body`` is an HPolytope (lam <= 1), a VPolytope (lam >= 1 with vertex
    access), a Ball, or a SupportOracle description; it may be lower
    dimensional.  ``empty`` marks lam below the symmetry constant of K.
    """

    lam: float
    body: object
    empty: bool
    source: object

    def contains(self, x, tol=T_MEMBER_TOL):
        if self.empty:
            return False
        return _level_membership(self.source, as_vector(x, dim(self.source)),
                                 self.lam, tol=tol)


@dataclass
class SymmetryReport:
    alpha_inf: float
    measure: float
    minimizer: np.ndarray
    critical_body: object
    critical_dim_estimate: int
    klee_lhs: float


def t_func(K, v, x) -> float:
    """The normalized linear functional whose sup over directions is alpha."""
    v = as_vector(v, dim(K))
    if not np.any(v):
        raise ValueError("direction must be nonzero")
    x = as_vector(x, dim(K))
    hp = support(K, v)
    hm = support(K, -v)
    return (2.0 * float(v @ x) - hp + hm) / (hp + hm)


def facet_profile(K):
    """Tight facet data (A, hplus, hminus) or None.

    hplus/hminus are the support values in the row directions and their
    negations, so each row is supporting.  For planar and one-dimensional
    bodies the rows are the canonical hull facets.
    """
    d = dim(K)
    if d == 1:
        hi = support(K, np.ones(1))
        lo = -support(K, -np.ones(1))
        A = np.array([[1.0], [-1.0]])
        return A, np.array([hi, -lo]), np.array([-lo, hi])
    V = vertex_candidates(K)
    hs = halfspaces(K)
    if d == 2:
        if V is None and hs is None:
            return None
        W = hull2d(V) if V is not None else hull2d(vertices2d(*hs))
        edges = np.roll(W, -1, axis=0) - W
        A = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
        M = A @ W.T
        return A, M.max(axis=1), (-M).max(axis=1)
    if hs is None:
        return None
    A, b = hs
    if V is not None:
        M = A @ V.T
        return A, M.max(axis=1), (-M).max(axis=1)
    hp = np.array([support(K, a) for a in A])
    hm = np.array([support(K, -a) for a in A])
    return A, hp, hm


def _t_values(profile, x):
    A, hp, hm = profile
    return (2.0 * (A @ x) - hp + hm) / (hp + hm)


# ---------------------------------------------------------------------------
# membership in level sets (independent of the alpha search paths)


def _ball_level_membership(K, x, lam, tol):
    return float(np.linalg.norm(x - K.center)) <= lam * K.radius + tol * max(1.0, K.radius)


def _schneider_membership(K, x, lam, tol):
    # x in (lam+1)/2 K + (lam-1)/2 (-K), the sum form, valid for lam >= 1
    e = lp_encoding(K)
    if e is None:
        raise BodyError("sum-form membership needs a linearly encodable body")
    d = x.size
    return encoding_feasible([e, e],
                             [np.eye(d) * (lam + 1.0) / 2.0,
                              -np.eye(d) * (lam - 1.0) / 2.0], x)


def _erosion_membership_vonly(K, x, lam, tol):
    # x + (1-lam) C(K) inside K, checked on the generators of C(K)
    V = vertex_candidates(K)
    if V is None:
        raise BodyError("erosion membership needs vertex or facet access")
    e = lp_encoding(K)
    C = np.unique((V[:, None, :] - V[None, :, :]).reshape(-1, V.shape[1]), axis=0) / 2.0
    for c in C:
        p = x + (1.0 - lam) * c
        pad = np.vstack([e.A_eq, e.P])
        rhs = np.concatenate([e.b_eq, p - e.q])
        if not lp.feasible(A_ub=e.A_ub if e.A_ub.size else None,
                           b_ub=e.b_ub if e.b_ub.size else None,
                           A_eq=pad, b_eq=rhs, bounds=e.bounds):
            return False
    return True


def _level_membership(K, x, lam, tol=T_MEMBER_TOL, profile=None):
    """Exact membership x in K^lam for polytopal bodies and balls."""
    K = simplify(K)
    if lam < 0:
        return False
    if isinstance(K, Ball):
        return _ball_level_membership(K, x, lam, tol)
    if isinstance(K, Product):
        at = 0
        for f in K.factors:
            k = dim(f)
            if not _level_membership(f, x[at:at + k], lam, tol):
                return False
            at += k
        return True
    if isinstance(K, SupportOracle):
        raise BodyError("level membership is not available for support oracles")
    if lam <= 1.0:
        profile = profile if profile is not None else facet_profile(K)
        if profile is not None:
            return bool(np.max(_t_values(profile, x)) <= lam + tol)
        return _erosion_membership_vonly(K, x, lam, tol)
    return _schneider_membership(K, x, lam, tol)


# ---------------------------------------------------------------------------
# alpha


def alpha(K, x, method="auto") -> GaugeResult:
    """Gauge value alpha(K, x) with witness direction.

    method="auto" picks the exact closed form whenever the representation
    admits one and falls back to bisection or sampling; method="bisect"
    forces the bisection path (used by the cross-check suites).
    """
    K = simplify(K)
    x = as_vector(x, dim(K))
    if isinstance(K, Ball):
        gap = x - K.center
        r = float(np.linalg.norm(gap))
        wdir = gap / r if r > 0 else np.eye(K.center.size)[0]
        return GaugeResult(r / K.radius, wdir, "closed_form", 1e-12)
    if isinstance(K, Product):
        return _alpha_product(K, x, method)
    if isinstance(K, SupportOracle):
        return _alpha_sampled(K, x)
    profile = facet_profile(K)
    if method == "auto" and profile is not None:
        tv = _t_values(profile, x)
        i = int(np.argmax(np.abs(tv)))
        a0 = float(abs(tv[i]))
        d = x.size
        if d <= 2 or a0 <= 1.0 + 1e-12:
            A = profile[0]
            w = A[i] * np.sign(tv[i]) if tv[i] != 0 else A[i]
            return GaugeResult(a0, w / np.linalg.norm(w), "closed_form", 1e-12)
        return _alpha_bisect(K, x, profile, lo=1.0)
    if profile is not None:
        return _alpha_bisect(K, x, profile, lo=0.0)
    # vertex-only body in dimension >= 3
    if vertex_candidates(K) is not None:
        return _alpha_bisect(K, x, None, lo=0.0)
    raise BodyError(f"alpha unsupported for {type(K).__name__}")


def _alpha_product(K, x, method):
    best, parts, at = None, [], 0
    for f in K.factors:
        k = dim(f)
        r = alpha(f, x[at:at + k], method)
        parts.append((r, at, k))
        if best is None or r.alpha > best[0].alpha:
            best = (r, at, k)
        at += k
    r, at, k = best
    wdir = np.zeros(x.size)
    wdir[at:at + k] = r.witness_dir
    rank = {"closed_form": 0, "lp_bisection": 1, "sampled": 2}
    meth = max((p[0].method for p in parts), key=lambda m: rank[m])
    return GaugeResult(r.alpha, wdir, meth, max(p[0].tol for p in parts))


def _alpha_bisect(K, x, profile, lo=0.0):
    """Bisection on lam with the exact level-set membership tests."""
    ball = inscribed_ball(K)
    if ball is not None:
        c, r = ball
        hi = 1.0 + 2.0 * float(np.linalg.norm(x - c)) / r
    else:
        hi = 2.0
        while not _level_membership(K, x, hi, profile=profile) and hi < 1e18:
            hi *= 2.0
    if _level_membership(K, x, lo, profile=profile):
        hi = lo
    it = 0
    while hi - lo > BISECT_TOL and it < BISECT_MAX_ITER:
        mid = 0.5 * (lo + hi)
        if _level_membership(K, x, mid, profile=profile):
            hi = mid
        else:
            lo = mid
        it += 1
    val = 0.5 * (lo + hi)
    wdir, wtol = _witness_for(K, x, val, profile)
    # the membership oracle is LP feasibility, fuzzy at solver tolerance times
    # problem scale; the bracket width alone would overstate the precision
    tol = max(0.5 * (hi - lo) + 1e-9, wtol, 1e-8 * max(1.0, abs(val)))
    return GaugeResult(val, wdir, "lp_bisection", tol)


def _witness_for(K, x, val, profile):
    """Direction approximating the sup; exact when a facet row attains it."""
    cands = []
    if profile is not None:
        A = profile[0]
        tv = _t_values(profile, x)
        i = int(np.argmax(np.abs(tv)))
        cands.append(A[i] * (np.sign(tv[i]) or 1.0))
    c = interior_point(K)
    if np.linalg.norm(x - c) > 1e-12:
        cands.append(x - c)
    V = vertex_candidates(K)
    if V is not None and val > 1.0 and V.shape[0] ** 2 <= 40000:
        v_sep = _separating_direction(V, x, val)
        if v_sep is not None:
            cands.append(v_sep)
    best_v, best_t = None, -np.inf
    for v in cands:
        nv = np.linalg.norm(v)
        if nv < 1e-12:
            continue
        t = t_func(K, v, x)
        if t > best_t:
            best_v, best_t = v / nv, t
    refined = _ascend_t(K, x, best_v)
    if refined is not None and refined[1] > best_t:
        best_v, best_t = refined
    return best_v, max(0.0, val - best_t)


def _separating_direction(V, x, val, shrink=1e-7):
    # max-margin direction between K and the almost-critical shrunk copy
    rho = (val - 1.0) / (val + 1.0) * (1.0 - shrink)
    M = x + rho * (V - x)
    D = (M[:, None, :] - V[None, :, :]).reshape(-1, V.shape[1])
    n = V.shape[1]
    A_ub = np.hstack([-D, np.ones((D.shape[0], 1))])
    c = np.zeros(n + 1)
    c[-1] = 1.0
    res = lp.solve(c, A_ub=A_ub, b_ub=np.zeros(D.shape[0]),
                   bounds=[(-1, 1)] * n + [(None, None)], sense="max")
    if not res.optimal or res.value <= 0:
        return None
    v = res.x[:n]
    return v if np.linalg.norm(v) > 1e-12 else None


def _ascend_t(K, x, v0):
    if v0 is None:
        return None
    d = x.size

    def neg_t(v):
        nv = np.linalg.norm(v)
        if nv < 1e-9:
            return np.inf
        return -t_func(K, v / nv, x)

    res = optimize.minimize(neg_t, v0, method="Nelder-Mead",
                            options={"maxiter": 200 * d, "xatol": 1e-10, "fatol": 1e-12})
    v = np.asarray(res.x, dtype=float)
    nv = np.linalg.norm(v)
    if nv < 1e-9:
        return None
    return v / nv, -float(res.fun)


def _alpha_sampled(K, x, n_dirs=2048, n_polish=16, seed=13):
    """Certified lower bound on alpha for support oracles, via direction search."""
    d = x.size
    dirs = [sphere_dirs(d, n_dirs, seed)]
    gap = x - K.center
    if np.linalg.norm(gap) > 1e-12:
        dirs.append((gap / np.linalg.norm(gap))[None, :])
    U = np.vstack(dirs)
    vals = np.array([t_func(K, u, x) for u in U])
    order = np.argsort(vals)[::-1]
    best_v, best_t = U[order[0]], float(vals[order[0]])
    pre = best_t
    for idx in order[:n_polish]:
        r = _ascend_t(K, x, U[idx])
        if r is not None and r[1] > best_t:
            best_v, best_t = r
    return GaugeResult(best_t, best_v, "sampled", max(1e-7, best_t - pre))


# ---------------------------------------------------------------------------
# level sets


def level_set(K, lam) -> LevelSet:
    """Construct K^lam = {x : alpha(K, x) <= lam} explicitly.

    lam <= 1 erodes the tight facet system (the result may be empty or lower
    dimensional); lam >= 1 builds the sum form from vertex pairs, falling
    back to a support-function description when only facets are available.
    """
    if not (np.isfinite(lam) and lam >= 0):
        raise ValueError("level must be a finite nonnegative number")
    lam = float(lam)
    K = simplify(K)
    if isinstance(K, Ball):
        if lam == 0:
            return LevelSet(lam, VPolytope(K.center[None, :]), False, K)
        return LevelSet(lam, Ball(K.center, lam * K.radius), False, K)
    if isinstance(K, Product):
        parts = [level_set(f, lam) for f in K.factors]
        if any(p.empty for p in parts):
            return LevelSet(lam, None, True, K)
        return LevelSet(lam, Product(tuple(p.body for p in parts)), False, K)
    if lam <= 1.0:
        profile = facet_profile(K)
        if profile is None:
            raise BodyError("erosion level set needs facet access")
        A, hp, hm = profile
        b = (1.0 + lam) / 2.0 * hp - (1.0 - lam) / 2.0 * hm
        try:
            _, r = lp.chebyshev_center(A, b)
        except lp.NumericalError:
            return LevelSet(lam, None, True, K)
        if r < -1e-12:
            return LevelSet(lam, None, True, K)
        return LevelSet(lam, HPolytope(A, b), False, K)
    V = vertex_candidates(K)
    if V is None and dim(K) <= 2:
        V = _exact_points(K)
    if V is not None:
        pairs = ((1.0 + lam) * V[:, None, :] - (lam - 1.0) * V[None, :, :]) / 2.0
        pts = pairs.reshape(-1, V.shape[1])
        if V.shape[1] == 2 and pts.shape[0] >= 3:
            try:
                pts = hull2d(pts)
            except BodyError:
                pass
        return LevelSet(lam, VPolytope(np.unique(pts, axis=0)), False, K)
    hs = halfspaces(K)
    if hs is not None:
        c0, r0 = lp.chebyshev_center(*hs)
        hi = np.array([support(K, e) for e in np.eye(dim(K))])
        lo = np.array([-support(K, -e) for e in np.eye(dim(K))])
        R = float(np.linalg.norm(np.maximum(np.abs(hi), np.abs(lo))))

        def h_lam(v, _K=K, _lam=lam):
            return (_lam + 1.0) / 2.0 * support(_K, v) + (_lam - 1.0) / 2.0 * support(_K, -v)

        body = SupportOracle(h_lam, c0, r0 * lam if lam >= 1 else r0,
                             R * lam + float(np.linalg.norm(c0)) * (lam + 1.0),
                             label=f"level-set lam={lam:g}")
        return LevelSet(lam, body, False, K)
    raise BodyError("level set needs polytope or ball structure")


# ---------------------------------------------------------------------------
# symmetry reports


def alpha_inf(K, seed=101) -> SymmetryReport:
    """Minimum of the gauge over x: the symmetry constant and critical set.

    Exact LP path for bodies with facet access (planar vertex bodies are
    converted); products recurse onto their factors when no merged facet
    system exists.  The critical set's dimension is estimated from the
    affine rank of LP optima under random objectives; it is an estimate,
    not a certificate.
    """
    K = simplify(K)
    if isinstance(K, Ball):
        c = K.center.copy()
        return SymmetryReport(0.0, 1.0, c, VPolytope(c[None, :]), 0, 1.0)
    profile = facet_profile(K)
    if profile is None and isinstance(K, Product):
        return _alpha_inf_product(K, seed)
    if profile is None:
        raise BodyError("alpha_inf needs facet access (or a product of such bodies)")
    A, hp, hm = profile
    w = hp + hm
    m, d = A.shape
    M = np.hstack([2.0 * A, -w[:, None]])
    rhs = hp - hm
    c = np.zeros(d + 1)
    c[-1] = 1.0
    res = lp.solve(c, A_ub=M, b_ub=rhs, sense="min")
    if not res.optimal:
        raise lp.NumericalError(f"symmetry LP ended with status {res.status}")
    s_star = float(res.value)
    x_star = res.x[:d]
    crit = LevelSet(s_star,
                    HPolytope(A, (1.0 + s_star) / 2.0 * hp - (1.0 - s_star) / 2.0 * hm),
                    False, K)
    dim_est = _critical_dim(A, hp, hm, w, s_star, seed, extra_point=x_star)
    if s_star >= 1.0 - 1e-12:
        raise lp.NumericalError("symmetry LP returned alpha_inf >= 1 for a full body")
    klee = (1.0 + s_star) / (1.0 - s_star)
    return SymmetryReport(s_star, 1.0 - s_star, x_star, crit, dim_est, klee)


def _critical_dim(A, hp, hm, w, lam, seed, extra_point=None, rank_tol=1e-7):
    d = A.shape[1]
    scale = max(1.0, float(np.max(np.abs(hp))), float(np.max(np.abs(hm))))
    b_face = hp - hm + w * lam + 1e-9 * scale
    rng = np.random.default_rng(seed)
    pts = [] if extra_point is None else [extra_point]
    for _ in range(2 * d + 1):
        obj = rng.normal(size=d)
        r = lp.solve(obj, A_ub=2.0 * A, b_ub=b_face, sense="min")
        if r.optimal:
            pts.append(r.x)
    if not pts:
        return 0
    P = np.array(pts)
    Q = P - P.mean(axis=0)
    s = np.linalg.svd(Q, compute_uv=False)
    return int(np.sum(s > rank_tol))


def _level_dim_estimate(f, lam, seed):
    f = simplify(f)
    if isinstance(f, Ball):
        return dim(f) if lam > 1e-12 else 0
    if isinstance(f, Product):
        return sum(_level_dim_estimate(g, lam, seed) for g in f.factors)
    prof = facet_profile(f)
    if prof is None:
        raise BodyError("dimension estimate needs facet access")
    A, hp, hm = prof
    return _critical_dim(A, hp, hm, hp + hm, lam, seed)


def _alpha_inf_product(K, seed):
    parts = [alpha_inf(f, seed) for f in K.factors]
    a = max(p.alpha_inf for p in parts)
    minimizer = np.concatenate([p.minimizer for p in parts])
    crit_parts = [level_set(f, a) for f in K.factors]
    crit = LevelSet(a, Product(tuple(p.body for p in crit_parts)), False, K)
    dim_est = sum(_level_dim_estimate(f, a, seed) for f in K.factors)
    if a >= 1.0 - 1e-12:
        raise lp.NumericalError("degenerate symmetry constant")
    return SymmetryReport(a, 1.0 - a, minimizer, crit, int(dim_est), (1.0 + a) / (1.0 - a))


# ---------------------------------------------------------------------------
# centroids


def centroid(K):
    """Center of mass, exact for planar polytopes, simplices, balls, boxes
    as interval products, and products/affine images of these."""
    from .body import Reflected, Scaled, Sum, Translated
    K = simplify(K)
    if isinstance(K, Ball):
        return K.center.copy()
    if isinstance(K, Product):
        return np.concatenate([centroid(f) for f in K.factors])
    if isinstance(K, Scaled):
        return K.factor * centroid(K.body)
    if isinstance(K, Translated):
        return centroid(K.body) + K.offset
    if isinstance(K, Reflected):
        return -centroid(K.body)
    d = dim(K)
    if d == 1:
        hi = support(K, np.ones(1))
        lo = -support(K, -np.ones(1))
        return np.array([0.5 * (lo + hi)])
    if d == 2:
        V = vertex_candidates(K)
        hs = halfspaces(K) if V is None else None
        if V is None and hs is None:
            raise BodyError("centroid needs polygon access in the plane")
        W = hull2d(V) if V is not None else hull2d(vertices2d(*hs))
        return _polygon_centroid(W)
    V = vertex_candidates(K)
    if V is not None:
        U = np.unique(V, axis=0)
        if U.shape[0] == d + 1:
            return U.mean(axis=0)
    raise BodyError("centroid supports planar bodies, simplices, balls, and products of these")


def _polygon_centroid(W):
    X, Y = W[:, 0], W[:, 1]
    Xn, Yn = np.roll(X, -1), np.roll(Y, -1)
    cross = X * Yn - Xn * Y
    area = 0.5 * float(np.sum(cross))
    cx = float(np.sum((X + Xn) * cross)) / (6.0 * area)
    cy = float(np.sum((Y + Yn) * cross)) / (6.0 * area)
    return np.array([cx, cy])
