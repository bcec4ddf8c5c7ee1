"""Convex body representations and the operations that depend on them.

A body is one of the variants below.  Polytopes carry an exact vertex or
halfspace description; composite variants (sums, products, affine images)
are evaluated lazily through recursion.  ``SupportOracle`` wraps a black-box
support function for bodies with no finite description, and every routine
that has to fall back to sampling on such a body says so in its result.

Conventions used throughout the package:

* directions are never normalized implicitly; all formulas are written to be
  scale-invariant in the direction argument,
* halfspace systems mean ``A x <= b`` row-wise,
* vertex arrays are ``(n, d)`` with one point per row and may contain
  redundant (non-extreme) points unless stated otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np
from scipy.spatial import ConvexHull
from scipy.spatial import QhullError

from . import lp


class BodyError(ValueError):
    """Invalid or degenerate body description."""


def as_vector(x, d=None):
    v = np.atleast_1d(np.asarray(x, dtype=float))
    if v.ndim != 1:
        raise BodyError(f"expected a flat vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise BodyError("vector contains non-finite entries")
    if d is not None and v.size != d:
        raise BodyError(f"vector has dimension {v.size}, expected {d}")
    return v


@dataclass(frozen=True, eq=False)
class HPolytope:
    """Bounded intersection of halfspaces A x <= b."""

    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "A", np.atleast_2d(np.asarray(self.A, dtype=float)))
        object.__setattr__(self, "b", np.atleast_1d(np.asarray(self.b, dtype=float)))
        if self.A.shape[0] != self.b.size:
            raise BodyError("A and b row counts differ")


@dataclass(frozen=True, eq=False)
class VPolytope:
    """Convex hull of finitely many points (redundant points allowed)."""

    vertices: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "vertices",
                           np.atleast_2d(np.asarray(self.vertices, dtype=float)))


@dataclass(frozen=True, eq=False)
class Ball:
    center: np.ndarray
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", as_vector(self.center))
        object.__setattr__(self, "radius", float(self.radius))


@dataclass(frozen=True, eq=False)
class SupportOracle:
    """Black-box body given by its support function h(v) = max over K of <v, x>.

    ``center`` together with ``inner_radius <= outer_radius`` must satisfy
    B(center, inner) <= K <= B(center, outer); the sandwich is what keeps the
    sampling fallbacks honest.
    """

    h: Callable[[np.ndarray], float]
    center: np.ndarray
    inner_radius: float
    outer_radius: float
    label: str = "oracle"

    def __post_init__(self):
        object.__setattr__(self, "center", as_vector(self.center))


@dataclass(frozen=True, eq=False)
class Product:
    """Cartesian product; the ambient dimension is the sum of factor dimensions."""

    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if len(self.factors) < 1:
            raise BodyError("product needs at least one factor")


@dataclass(frozen=True, eq=False)
class Sum:
    """Minkowski sum of bodies of equal dimension."""

    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if len(self.terms) < 1:
            raise BodyError("sum needs at least one term")


@dataclass(frozen=True, eq=False)
class Scaled:
    body: "Body"
    factor: float

    def __post_init__(self):
        object.__setattr__(self, "factor", float(self.factor))
        if not self.factor > 0:
            raise BodyError("scale factor must be positive; compose with Reflected for negation")


@dataclass(frozen=True, eq=False)
class Translated:
    body: "Body"
    offset: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "offset", as_vector(self.offset))


@dataclass(frozen=True, eq=False)
class Reflected:
    """The point reflection -K of the wrapped body through the origin."""

    body: "Body"


Body = Union[HPolytope, VPolytope, Ball, SupportOracle,
             Product, Sum, Scaled, Translated, Reflected]


def simplify(K):
    """Collapse affine images and sums of balls into Ball closed forms.

    Purely representational: the returned body is the same point set, but
    downstream code can hit its Ball fast paths.
    """
    if isinstance(K, Scaled):
        inner = simplify(K.body)
        if isinstance(inner, Ball):
            return Ball(K.factor * inner.center, K.factor * inner.radius)
        return Scaled(inner, K.factor)
    if isinstance(K, Translated):
        inner = simplify(K.body)
        if isinstance(inner, Ball):
            return Ball(inner.center + K.offset, inner.radius)
        return Translated(inner, K.offset)
    if isinstance(K, Reflected):
        inner = simplify(K.body)
        if isinstance(inner, Ball):
            return Ball(-inner.center, inner.radius)
        return Reflected(inner)
    if isinstance(K, Sum):
        terms = tuple(simplify(T) for T in K.terms)
        if all(isinstance(T, Ball) for T in terms):
            return Ball(np.sum([T.center for T in terms], axis=0),
                        sum(T.radius for T in terms))
        return Sum(terms)
    if isinstance(K, Product):
        return Product(tuple(simplify(f) for f in K.factors))
    return K


def dim(K) -> int:
    """Ambient dimension of a body."""
    if isinstance(K, HPolytope):
        return K.A.shape[1]
    if isinstance(K, VPolytope):
        return K.vertices.shape[1]
    if isinstance(K, (Ball, SupportOracle)):
        return K.center.size
    if isinstance(K, Product):
        return sum(dim(f) for f in K.factors)
    if isinstance(K, Sum):
        return dim(K.terms[0])
    if isinstance(K, (Scaled, Reflected)):
        return dim(K.body)
    if isinstance(K, Translated):
        return K.offset.size
    raise BodyError(f"not a body: {K!r}")


def support(K, v) -> float:
    """Support value h(K, v) = max over x in K of <v, x>."""
    v = as_vector(v, dim(K))
    if isinstance(K, VPolytope):
        return float(np.max(K.vertices @ v))
    if isinstance(K, HPolytope):
        res = lp.lp_solve(v, K.A, K.b, sense="max")
        if res.status is lp.LPStatus.UNBOUNDED:
            raise BodyError("halfspace system is unbounded in the queried direction")
        if res.status is lp.LPStatus.INFEASIBLE:
            raise BodyError("halfspace system is empty")
        return res.value
    if isinstance(K, Ball):
        return float(K.center @ v + K.radius * np.linalg.norm(v))
    if isinstance(K, SupportOracle):
        return float(K.h(v))
    if isinstance(K, Sum):
        return sum(support(T, v) for T in K.terms)
    if isinstance(K, Product):
        out, at = 0.0, 0
        for f in K.factors:
            k = dim(f)
            out += support(f, v[at:at + k])
            at += k
        return out
    if isinstance(K, Scaled):
        return K.factor * support(K.body, v)
    if isinstance(K, Translated):
        return support(K.body, v) + float(K.offset @ v)
    if isinstance(K, Reflected):
        return support(K.body, -v)
    raise BodyError(f"not a body: {K!r}")


# ---------------------------------------------------------------------------
# exact representation access


def hull2d(points):
    """Extreme points of a planar point set, counterclockwise.

    Raises BodyError when the set is affinely degenerate (all points on one
    line), since no polygon exists then.
    """
    P = np.atleast_2d(np.asarray(points, dtype=float))
    if P.shape[1] != 2:
        raise BodyError("hull2d expects planar points")
    P = np.unique(P, axis=0)
    if P.shape[0] < 3:
        raise BodyError("needs at least 3 distinct points")
    try:
        h = ConvexHull(P)
    except QhullError as exc:
        raise BodyError(f"degenerate planar point set: {exc}") from exc
    return P[h.vertices]          # Qhull orders 2-d hull vertices CCW


def _affine_rank(P, tol=1e-9):
    Q = P - P.mean(axis=0)
    if Q.shape[0] == 1:
        return 0
    s = np.linalg.svd(Q, compute_uv=False)
    scale = max(1.0, float(s[0]) if s.size else 1.0)
    return int(np.sum(s > tol * scale))

def vertex_candidates(K):
    """A finite set of points whose convex hull is K, or None.

    The set may contain redundant points.  Exists exactly for the polytopal
    variants: V-polytopes and sums/products/affine images built from them.
    """
    if isinstance(K, VPolytope):
        return K.vertices.copy()
    if isinstance(K, Sum):
        parts = [vertex_candidates(T) for T in K.terms]
        if any(p is None for p in parts):
            return None
        acc = parts[0]
        for p in parts[1:]:
            acc = (acc[:, None, :] + p[None, :, :]).reshape(-1, acc.shape[1])
        return acc
    if isinstance(K, Product):
        parts = [vertex_candidates(f) for f in K.factors]
        if any(p is None for p in parts):
            return None
        acc = parts[0]
        for p in parts[1:]:
            left = np.repeat(acc, p.shape[0], axis=0)
            right = np.tile(p, (acc.shape[0], 1))
            acc = np.hstack([left, right])
        return acc
    if isinstance(K, Scaled):
        v = vertex_candidates(K.body)
        return None if v is None else K.factor * v
    if isinstance(K, Translated):
        v = vertex_candidates(K.body)
        return None if v is None else v + K.offset
    if isinstance(K, Reflected):
        v = vertex_candidates(K.body)
        return None if v is None else -v
    return None


def _interval_halfspaces(V):
    lo, hi = float(np.min(V)), float(np.max(V))
    if hi - lo <= 0:
        raise BodyError("interval body has no interior")
    return np.array([[1.0], [-1.0]]), np.array([hi, -lo])


def _simplex_halfspaces(V):
    # n = d+1 affinely independent points: one facet per omitted vertex
    n, d = V.shape
    centroid = V.mean(axis=0)
    scale = max(1.0, float(np.max(np.abs(V))))
    A, b = [], []
    for i in range(n):
        F = np.delete(V, i, axis=0)
        base = F[0]
        # unit normal orthogonal to the facet's spanning directions
        _, _, vt = np.linalg.svd(F[1:] - base)
        normal = vt[-1]
        if normal @ (V[i] - base) > 0:
            normal = -normal
        A.append(normal)
        b.append(normal @ base)
        if normal @ (centroid - base) > -1e-12 * scale:
            raise BodyError("simplex points are affinely dependent")
    return np.array(A), np.array(b)


def halfspaces(K):
    """Exact halfspace description (A, b) of K, or None when unavailable.

    Covers H-polytopes and their affine images / products, plus V-polytopes
    in dimension <= 2 (via the hull) and simplices in any dimension.  The
    returned b is tight (each row supports the body) whenever the system
    was derived from vertex data.
    """
    if isinstance(K, HPolytope):
        return K.A.copy(), K.b.copy()
    if isinstance(K, VPolytope):
        V = K.vertices
        d = V.shape[1]
        if d == 1:
            return _interval_halfspaces(V)
        if d == 2:
            W = hull2d(V)
            edges = np.roll(W, -1, axis=0) - W
            A = np.stack([edges[:, 1], -edges[:, 0]], axis=1)   # outward for CCW order
            b = np.sum(A * W, axis=1)
            return A, b
        uniq = np.unique(V, axis=0)
        if uniq.shape[0] == d + 1 and _affine_rank(uniq) == d:
            return _simplex_halfspaces(uniq)
        return None
    if isinstance(K, Product):
        parts = [halfspaces(f) for f in K.factors]
        if any(p is None for p in parts):
            return None
        dims = [dim(f) for f in K.factors]
        total = sum(dims)
        rows_A, rows_b, at = [], [], 0
        for (A, b), k in zip(parts, dims):
            blk = np.zeros((A.shape[0], total))
            blk[:, at:at + k] = A
            rows_A.append(blk)
            rows_b.append(b)
            at += k
        return np.vstack(rows_A), np.concatenate(rows_b)
    if isinstance(K, Scaled):
        hs = halfspaces(K.body)
        if hs is None:
            return None
        A, b = hs
        return A, K.factor * b
    if isinstance(K, Translated):
        hs = halfspaces(K.body)
        if hs is None:
            return None
        A, b = hs
        return A, b + A @ K.offset
    if isinstance(K, Reflected):
        hs = halfspaces(K.body)
        if hs is None:
            return None
        A, b = hs
        return -A, b
    if isinstance(K, Sum):
        V = vertex_candidates(K)
        if V is not None and V.shape[1] <= 2:
            return halfspaces(VPolytope(V))
        return None
    return None


# ---------------------------------------------------------------------------
# LP encodings: linear systems whose solutions parametrize the body


@dataclass
class Encoding:
    """Auxiliary variables u with point = P u + q and linear constraints on u."""

    n: int
    A_ub: np.ndarray
    b_ub: np.ndarray
    A_eq: np.ndarray
    b_eq: np.ndarray
    bounds: list
    P: np.ndarray
    q: np.ndarray


def _empty(n):
    return np.zeros((0, n)), np.zeros(0)


def lp_encoding(K):
    """Encode membership of a point in K as a linear system, or None.

    Available for every variant built from polytope leaves; balls and
    support oracles are not linearly encodable.
    """
    d = dim(K)
    if isinstance(K, HPolytope):
        Aeq, beq = _empty(d)
        return Encoding(d, K.A.copy(), K.b.copy(), Aeq, beq,
                        [(None, None)] * d, np.eye(d), np.zeros(d))
    if isinstance(K, VPolytope):
        V = K.vertices
        n = V.shape[0]
        Aub, bub = _empty(n)
        return Encoding(n, Aub, bub, np.ones((1, n)), np.ones(1),
                        [(0, None)] * n, V.T.copy(), np.zeros(d))
    if isinstance(K, (Sum, Product)):
        children = K.terms if isinstance(K, Sum) else K.factors
        encs = [lp_encoding(c) for c in children]
        if any(e is None for e in encs):
            return None
        n = sum(e.n for e in encs)
        Aub = np.zeros((sum(e.A_ub.shape[0] for e in encs), n))
        Aeq = np.zeros((sum(e.A_eq.shape[0] for e in encs), n))
        bub = np.concatenate([e.b_ub for e in encs]) if encs else np.zeros(0)
        beq = np.concatenate([e.b_eq for e in encs]) if encs else np.zeros(0)
        bounds = []
        r_ub = r_eq = at = 0
        for e in encs:
            Aub[r_ub:r_ub + e.A_ub.shape[0], at:at + e.n] = e.A_ub
            Aeq[r_eq:r_eq + e.A_eq.shape[0], at:at + e.n] = e.A_eq
            r_ub += e.A_ub.shape[0]
            r_eq += e.A_eq.shape[0]
            bounds.extend(e.bounds)
            at += e.n
        if isinstance(K, Sum):
            P = np.hstack([e.P for e in encs])
            q = np.sum([e.q for e in encs], axis=0)
        else:
            P = np.zeros((d, n))
            q = np.concatenate([e.q for e in encs])
            row = col = 0
            for e in encs:
                P[row:row + e.P.shape[0], col:col + e.n] = e.P
                row += e.P.shape[0]
                col += e.n
        return Encoding(n, Aub, bub, Aeq, beq, bounds, P, q)
    if isinstance(K, Scaled):
        e = lp_encoding(K.body)
        if e is None:
            return None
        return Encoding(e.n, e.A_ub, e.b_ub, e.A_eq, e.b_eq, e.bounds,
                        K.factor * e.P, K.factor * e.q)
    if isinstance(K, Translated):
        e = lp_encoding(K.body)
        if e is None:
            return None
        return Encoding(e.n, e.A_ub, e.b_ub, e.A_eq, e.b_eq, e.bounds, e.P, e.q + K.offset)
    if isinstance(K, Reflected):
        e = lp_encoding(K.body)
        if e is None:
            return None
        return Encoding(e.n, e.A_ub, e.b_ub, e.A_eq, e.b_eq, e.bounds, -e.P, -e.q)
    return None


def encoding_feasible(encs, couplings, rhs):
    """Feasibility of several encoded points under linear coupling constraints.

    ``couplings`` is a list with one coefficient matrix per encoding; the
    system imposed is  sum_i  C_i (P_i u_i + q_i) = rhs  on top of each
    encoding's own constraints.
    """
    n = sum(e.n for e in encs)
    Aub = np.zeros((sum(e.A_ub.shape[0] for e in encs), n))
    Aeq_rows = sum(e.A_eq.shape[0] for e in encs)
    d_out = rhs.size
    Aeq = np.zeros((Aeq_rows + d_out, n))
    bub = np.concatenate([e.b_ub for e in encs])
    beq = np.concatenate([e.b_eq for e in encs] + [rhs.astype(float).copy()])
    bounds = []
    r_ub = r_eq = at = 0
    for e, C in zip(encs, couplings):
        Aub[r_ub:r_ub + e.A_ub.shape[0], at:at + e.n] = e.A_ub
        Aeq[r_eq:r_eq + e.A_eq.shape[0], at:at + e.n] = e.A_eq
        Aeq[Aeq_rows:, at:at + e.n] = C @ e.P
        beq[Aeq_rows:] -= C @ e.q
        r_ub += e.A_ub.shape[0]
        r_eq += e.A_eq.shape[0]
        bounds.extend(e.bounds)
        at += e.n
    return lp.feasible(A_ub=Aub, b_ub=bub, A_eq=Aeq, b_eq=beq, bounds=bounds)


# ---------------------------------------------------------------------------
# membership, interior points, validation

MEMBERSHIP_TOL = 1e-9


def contains(K, x, tol=MEMBERSHIP_TOL):
    """Membership test x in K, exact for polytopal variants.

    For SupportOracle bodies the test is a sampled separation check and can
    err near the boundary; see the module docstring.
    """
    x = as_vector(x, dim(K))
    if isinstance(K, Ball):
        return float(np.linalg.norm(x - K.center)) <= K.radius + tol
    if isinstance(K, Product):
        at = 0
        for f in K.factors:
            k = dim(f)
            if not contains(f, x[at:at + k], tol):
                return False
            at += k
        return True
    if isinstance(K, Translated):
        return contains(K.body, x - K.offset, tol)
    if isinstance(K, Scaled):
        return contains(K.body, x / K.factor, tol / K.factor)
    if isinstance(K, Reflected):
        return contains(K.body, -x, tol)
    hs = halfspaces(K)
    if hs is not None:
        A, b = hs
        norms = np.linalg.norm(A, axis=1)
        return bool(np.all(A @ x <= b + tol * np.maximum(norms, 1.0)))
    e = lp_encoding(K)
    if e is not None:
        d = x.size
        pad = np.vstack([e.A_eq, e.P])
        rhs = np.concatenate([e.b_eq, x - e.q])
        return lp.feasible(A_ub=e.A_ub if e.A_ub.size else None,
                           b_ub=e.b_ub if e.b_ub.size else None,
                           A_eq=pad, b_eq=rhs, bounds=e.bounds)
    if isinstance(K, SupportOracle):
        return _oracle_contains(K, x, tol)
    raise BodyError(f"membership unsupported for {type(K).__name__}")


def _oracle_contains(K, x, tol, n_dirs=512, seed=7):
    rng = np.random.default_rng(seed)
    dirs = rng.normal(size=(n_dirs, x.size))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    gap = x - K.center
    if np.linalg.norm(gap) > 1e-12:
        dirs = np.vstack([dirs, gap / np.linalg.norm(gap)])
    for v in dirs:
        if v @ x > K.h(v) + tol:
            return False
    return True


def interior_point(K):
    """Some point of K, interior whenever K is full-dimensional."""
    if isinstance(K, (Ball, SupportOracle)):
        return K.center.copy()
    if isinstance(K, Product):
        return np.concatenate([interior_point(f) for f in K.factors])
    if isinstance(K, Sum):
        return np.sum([interior_point(T) for T in K.terms], axis=0)
    if isinstance(K, Scaled):
        return K.factor * interior_point(K.body)
    if isinstance(K, Translated):
        return interior_point(K.body) + K.offset
    if isinstance(K, Reflected):
        return -interior_point(K.body)
    V = vertex_candidates(K)
    if V is not None:
        return np.unique(V, axis=0).mean(axis=0)
    c, _ = lp.chebyshev_center(K.A, K.b)
    return c


def inscribed_ball(K):
    """A certified pair (c, r) with B(c, r) inside K, or None.

    Not the largest such ball for composite bodies; any valid pair is enough
    for the bracketing arguments that consume it.
    """
    if isinstance(K, Ball):
        return K.center.copy(), K.radius
    if isinstance(K, SupportOracle):
        return K.center.copy(), K.inner_radius
    if isinstance(K, Product):
        parts = [inscribed_ball(f) for f in K.factors]
        if any(p is None for p in parts):
            return None
        c = np.concatenate([p[0] for p in parts])
        return c, min(p[1] for p in parts)
    if isinstance(K, Sum):
        parts = [inscribed_ball(T) for T in K.terms]
        if any(p is None for p in parts):
            return None
        return np.sum([p[0] for p in parts], axis=0), max(p[1] for p in parts)
    if isinstance(K, Scaled):
        p = inscribed_ball(K.body)
        return None if p is None else (K.factor * p[0], K.factor * p[1])
    if isinstance(K, Translated):
        p = inscribed_ball(K.body)
        return None if p is None else (p[0] + K.offset, p[1])
    if isinstance(K, Reflected):
        p = inscribed_ball(K.body)
        return None if p is None else (-p[0], p[1])
    hs = halfspaces(K)
    if hs is not None:
        c, r = lp.chebyshev_center(*hs)
        return (c, r) if r > 0 else None
    return None


def validate(K):
    """Check that K describes a bounded, full-dimensional convex body.

    Raises BodyError otherwise.  Operations that tolerate lower-dimensional
    bodies (level sets may degenerate to a face) skip this check on their
    intermediate results.
    """
    d = dim(K)
    if d < 1:
        raise BodyError("dimension must be at least 1")
    if isinstance(K, HPolytope):
        if not (np.all(np.isfinite(K.A)) and np.all(np.isfinite(K.b))):
            raise BodyError("halfspace data contains non-finite entries")
        norms = np.linalg.norm(K.A, axis=1)
        if np.any(norms == 0):
            raise BodyError("halfspace system has a zero row")
        for k in range(d):
            e = np.zeros(d)
            e[k] = 1.0
            for s in (e, -e):
                res = lp.lp_solve(s, K.A, K.b, sense="max")
                if res.status is lp.LPStatus.UNBOUNDED:
                    raise BodyError("halfspace system is unbounded")
                if res.status is lp.LPStatus.INFEASIBLE:
                    raise BodyError("halfspace system is empty")
        _, r = lp.chebyshev_center(K.A, K.b)
        if r <= 1e-9:
            raise BodyError("halfspace system has empty interior")
        return
    if isinstance(K, VPolytope):
        V = K.vertices
        if not np.all(np.isfinite(V)):
            raise BodyError("vertex data contains non-finite entries")
        if _affine_rank(np.unique(V, axis=0)) < d:
            raise BodyError("vertex set is not full-dimensional")
        return
    if isinstance(K, Ball):
        if not (np.isfinite(K.radius) and K.radius > 0):
            raise BodyError("ball radius must be positive")
        return
    if isinstance(K, SupportOracle):
        if not (0 < K.inner_radius <= K.outer_radius and np.isfinite(K.outer_radius)):
            raise BodyError("oracle needs 0 < inner_radius <= outer_radius")
        _probe_oracle(K)
        return
    if isinstance(K, Product):
        for f in K.factors:
            validate(f)
        return
    if isinstance(K, Sum):
        dims = {dim(T) for T in K.terms}
        if len(dims) != 1:
            raise BodyError("sum terms must share a dimension")
        for T in K.terms:
            validate(T)
        return
    if isinstance(K, (Scaled, Translated, Reflected)):
        validate(K.body)
        return
    raise BodyError(f"not a body: {K!r}")


def _probe_oracle(K, n=16, seed=11):
    # spot-check sublinearity and the declared ball sandwich
    rng = np.random.default_rng(seed)
    d = K.center.size
    for _ in range(n):
        u = rng.normal(size=d)
        v = rng.normal(size=d)
        hu, hv, huv = K.h(u), K.h(v), K.h(u + v)
        scale = max(1.0, abs(hu) + abs(hv))
        if huv > hu + hv + 1e-7 * scale:
            raise BodyError("oracle support function is not sublinear")
        if abs(K.h(2.0 * u) - 2.0 * hu) > 1e-7 * scale:
            raise BodyError("oracle support function is not positively homogeneous")
        nu = np.linalg.norm(u)
        centered = hu - K.center @ u
        if centered < K.inner_radius * nu - 1e-7 * scale:
            raise BodyError("oracle violates its declared inner ball")
        if centered > K.outer_radius * nu + 1e-7 * scale:
            raise BodyError("oracle violates its declared outer ball")
