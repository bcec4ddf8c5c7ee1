"""Chebyshev growth at exterior points, leading coefficients, gradient bounds.

The degree-n growth at x is T_n(alpha(K, x)) and the extremal polynomial is
T_n composed with the affine layer coordinate t(K, v*, .) of the witness
direction: |t| <= 1 on K keeps the sup norm at 1, while t(x) = alpha pushes
the value at x to the maximum.  The leading-coefficient growth in a fixed
direction v is 2^(2n-1) / tau(K, v)^n with tau the maximal chord.

Everything here works through a tiny explicit Polynomial type (a dict from
exponent multi-indices to coefficients) so gradients are exact and the
functional and expanded evaluations can be held against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .body import (BodyError, as_vector, dim, simplify, support,
                   vertex_candidates)
from .gauge import alpha, t_func
from .geometry import chord_witness_dir, global_width, max_chord

DEGREE_CAP = 64


def cheb_T(n, x):
    """T_n(x) by the stable branch for the argument's region."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    x = float(x)
    if n == 0:
        return 1.0
    if abs(x) <= 1.0:
        return float(np.cos(n * np.arccos(x)))
    s = np.sqrt(x * x - 1.0)
    return float(0.5 * ((x + s) ** n + (x - s) ** n))


def cheb_T_product(n, x):
    """Product form 2^(n-1) prod (x - cos((2j-1) pi / 2n)): cross-check path.

    Grows error with n; kept for validating the branch formulas, not for use.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n == 0:
        return 1.0
    j = np.arange(1, n + 1)
    roots = np.cos((2 * j - 1) * np.pi / (2 * n))
    return float(2.0 ** (n - 1) * np.prod(float(x) - roots))


def cheb_T_prime(n, x):
    """Derivative of T_n, stable in both regions."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    x = float(x)
    if n == 0:
        return 0.0
    if abs(x) < 1.0:
        th = np.arccos(x)
        sn = np.sin(th)
        if sn < 1e-8:
            return float(n * n * np.sign(x) ** (n + 1))
        return float(n * np.sin(n * th) / sn)
    if abs(x) == 1.0:
        return float(n * n * (np.sign(x) ** (n + 1)))
    s = np.sqrt(x * x - 1.0)
    return float(n * ((x + s) ** n - (x - s) ** n) / (2.0 * s))


@dataclass
class Polynomial:
    """Real polynomial on R^d as {exponent tuple: coefficient}."""

    coeffs: dict
    d: int

    @property
    def degree(self):
        return max((sum(k) for k, c in self.coeffs.items() if c != 0.0),
                   default=0)

    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = Polynomial({(0,) * self.d: float(other)}, self.d)
        if self.d != other.d:
            raise BodyError("polynomial dimension mismatch")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0.0) + c
        return Polynomial(out, self.d)

    def __sub__(self, other):
        return self + (other * -1.0 if isinstance(other, Polynomial)
                       else -other)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return Polynomial({k: c * float(other)
                               for k, c in self.coeffs.items()}, self.d)
        if self.d != other.d:
            raise BodyError("polynomial dimension mismatch")
        if self.degree + other.degree > DEGREE_CAP:
            raise BodyError(f"expanded degree exceeds cap {DEGREE_CAP}")
        out = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0.0) + c1 * c2
        return Polynomial(out, self.d)

    __rmul__ = __mul__

    @staticmethod
    def affine(gradient, constant):
        g = np.asarray(gradient, dtype=float)
        d = g.size
        coeffs = {(0,) * d: float(constant)}
        for i, gi in enumerate(g):
            if gi != 0.0:
                k = tuple(1 if j == i else 0 for j in range(d))
                coeffs[k] = float(gi)
        return Polynomial(coeffs, d)


def poly_eval(p, x):
    x = as_vector(x, p.d)
    total = 0.0
    for k, c in p.coeffs.items():
        total += c * np.prod([xi ** ki for xi, ki in zip(x, k)])
    return float(total)


def poly_grad(p, x):
    x = as_vector(x, p.d)
    g = np.zeros(p.d)
    for k, c in p.coeffs.items():
        for i, ki in enumerate(k):
            if ki == 0:
                continue
            term = c * ki * x[i] ** (ki - 1)
            for j, kj in enumerate(k):
                if j != i:
                    term *= x[j] ** kj
            g[i] += term
    return g


def t_polynomial(K, v):
    """The layer coordinate t(K, v, .) as a degree-1 Polynomial."""
    d = dim(K)
    v = as_vector(v, d)
    hp = support(K, v)
    hm = support(K, -v)
    w = hp + hm
    if w <= 0.0:
        raise BodyError("degenerate direction: zero width")
    return Polynomial.affine(2.0 * v / w, (hm - hp) / w)


def compose_cheb(n, p):
    """T_n(p) expanded by the three-term recurrence; degree-capped."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    one = Polynomial({(0,) * p.d: 1.0}, p.d)
    if n == 0:
        return one
    prev, cur = one, p
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * p * cur - prev
    return cur


def extremal_polynomial(K, v, n):
    """T_n(t(K, v, .)) in expanded form: sup-norm 1 on K by construction."""
    return compose_cheb(n, t_polynomial(K, v))


@dataclass
class ChebyshevReport:
    n: int
    alpha: float
    growth: float
    witness_dir: np.ndarray
    extremal_eval: Callable
    sup_norm_check: float
    witness_tol: float


def _body_samples(K, n_samples, seed):
    rng = np.random.default_rng(seed)
    gens = vertex_candidates(K)
    if gens is None:
        from .geometry import _exact_points
        gens = _exact_points(K)
    if gens is not None:
        gens = np.asarray(gens, dtype=float)
        m = gens.shape[0]
        W = rng.dirichlet(np.full(m, 0.6), size=n_samples)
        pts = W @ gens
        return np.vstack([gens, pts])
    # certified inner ball only: valid but conservative samples
    from .body import inscribed_ball
    ball = inscribed_ball(K)
    if ball is None:
        raise BodyError("cannot sample the body")
    c, r = ball
    d = c.size
    U = rng.standard_normal((n_samples, d))
    U /= np.linalg.norm(U, axis=1, keepdims=True)
    radii = r * rng.uniform(size=(n_samples, 1)) ** (1.0 / d)
    return c + U * radii


def cheb_growth(K, x, n, n_samples=10000, seed=29):
    """Largest value at x over degree-n polynomials bounded by 1 on K.

    Returns the report with the witness polynomial evaluator and a sampled
    sup-norm sanity value.  Interior and boundary points have growth 1.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    K = simplify(K)
    res = alpha(K, x)
    a = res.alpha
    v = res.witness_dir
    growth = cheb_T(n, a) if a > 1.0 else 1.0

    def evaluator(y, _K=K, _v=v, _n=n):
        return cheb_T(_n, t_func(_K, _v, y))

    samples = _body_samples(K, n_samples, seed)
    sup_check = max(abs(evaluator(s)) for s in samples)
    tol = res.tol * abs(cheb_T_prime(n, max(a, 1.0))) + 1e-12
    return ChebyshevReport(n, a, growth, v, evaluator, float(sup_check), tol)


@dataclass
class LeadingGrowthReport:
    n: int
    value: float
    tau: float
    witness_dir: np.ndarray | None
    extremal_eval: Callable | None


def leading_growth(K, v, n):
    """Largest leading coefficient in direction v: 2^(2n-1) / tau(K, v)^n.

    In the plane the witness direction v* (the edge normal of the central
    symmetrization at the maximal-chord midpoint) is attached, together with
    the evaluator of T_n(t(K, v*, .)) whose directional leading coefficient
    attains the value.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    K = simplify(K)
    v = as_vector(v, dim(K))
    if not np.any(v):
        raise BodyError("direction must be nonzero")
    tau = max_chord(K, v)
    value = 2.0 ** (2 * n - 1) / tau ** n
    wdir = chord_witness_dir(K, v)
    evaluator = None
    if wdir is not None:
        def evaluator(y, _K=K, _w=wdir, _n=n):
            return cheb_T(_n, t_func(_K, _w, y))
    return LeadingGrowthReport(n, float(value), float(tau), wdir, evaluator)


@dataclass
class BernsteinReport:
    theorem_bound: float
    conjecture_bound: float
    alpha: float
    width: float
    width_exact: bool


def bernstein_bound(K, x, n, norm_bound=1.0):
    """Gradient bounds at an interior point for degree-n polynomials.

    theorem_bound is the proved 2 n M / (w(K) sqrt(1 - alpha)); the
    conjectured sharper variant replaces 1 - alpha with 1 - alpha^2 and is
    reported for comparison, never asserted anywhere in this package.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    if norm_bound <= 0.0:
        raise ValueError("norm bound must be positive")
    K = simplify(K)
    a = alpha(K, x).alpha
    if a >= 1.0:
        raise BodyError("bernstein bound needs an interior point (alpha < 1)")
    wres = global_width(K)
    base = 2.0 * n * norm_bound / wres.value
    return BernsteinReport(
        theorem_bound=float(base / np.sqrt(1.0 - a)),
        conjecture_bound=float(base / np.sqrt(1.0 - a * a)),
        alpha=float(a),
        width=float(wres.value),
        width_exact=bool(wres.exact),
    )
