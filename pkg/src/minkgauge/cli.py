"""Command line front end.

Bodies come in as JSON (a file path or an inline document starting with
"{"), queries go out as JSON on stdout with 12 significant digits, grids
as CSV.  Exit codes: 0 success, 2 bad input, 3 numerical failure.  Every
sampled computation takes a seed and defaults are fixed, so identical
invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

import numpy as np

from .body import BodyError, dim
from .cheb import (bernstein_bound, cheb_growth, cheb_T_prime, leading_growth,
                   poly_eval, poly_grad, t_polynomial)
from .gauge import alpha, alpha_inf, level_set
from .geometry import (central_symm, diameter, far_radius, global_width,
                       hausdorff, max_chord, width_dir)
from .lp import NumericalError
from .ratios import (SAMPLING_SIDES, beta, brute_force_alpha, ratio_functionals,
                     rho)
from .shapes import SchemaError, parse_body, serialize_body
from .body import support as support_fn
from .geometry import sphere_dirs


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # vector values like "-3,-3" must parse as option arguments, not flags
        self._negative_number_matcher = re.compile(r"^-(\d|\.\d)")

    def error(self, message):
        raise _UsageError(message)


def _load_body(text):
    if text.lstrip().startswith("{"):
        doc = text
    else:
        try:
            with open(text, "r", encoding="utf-8") as fh:
                doc = fh.read()
        except OSError as exc:
            raise _UsageError(f"cannot read body file {text!r}: {exc}") from exc
    try:
        spec = json.loads(doc)
    except json.JSONDecodeError as exc:
        raise SchemaError("body", f"not valid JSON: {exc}") from exc
    return parse_body(spec)


def _vec(text, name):
    try:
        return np.array([float(p) for p in text.split(",")])
    except ValueError as exc:
        raise _UsageError(f"{name} must be comma-separated numbers") from exc


def _clean(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, (float, np.floating)):
        return float(f"{float(obj):.12g}")
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [_clean(v) for v in obj.tolist()]
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    return obj


def _emit(record, stream=None):
    print(json.dumps(_clean(record), sort_keys=True), file=stream or sys.stdout)


def _serialize_or_describe(body):
    if body is None:
        return None
    try:
        return serialize_body(body)
    except BodyError:
        return {"kind": "unserializable", "description": type(body).__name__}


# ---------------------------------------------------------------------------
# subcommand handlers; each returns the record to print (or None after
# printing its own output, as grid does)


def _cmd_alpha(ns):
    K = _load_body(ns.body)
    res = alpha(K, _vec(ns.point, "--point"))
    return {"alpha": res.alpha, "method": res.method, "tol": res.tol,
            "witness_dir": res.witness_dir}


def _cmd_levelset(ns):
    K = _load_body(ns.body)
    ls = level_set(K, ns.lam)
    return {"lambda": ls.lam, "empty": ls.empty,
            "body": _serialize_or_describe(ls.body)}


def _cmd_symmetry(ns):
    K = _load_body(ns.body)
    rep = alpha_inf(K)
    return {
        "alpha_inf": rep.alpha_inf,
        "measure": rep.measure,
        "minimizer": rep.minimizer,
        "critical_dim_estimate": rep.critical_dim_estimate,
        "klee_lhs": rep.klee_lhs,
        "critical_body": {
            "lambda": rep.critical_body.lam,
            "empty": rep.critical_body.empty,
            "body": _serialize_or_describe(rep.critical_body.body),
        },
    }


def _cmd_tau(ns):
    K = _load_body(ns.body)
    v = _vec(ns.dir, "--dir")
    return {"tau": max_chord(K, v), "dir": v}


def _cmd_width(ns):
    K = _load_body(ns.body)
    res = global_width(K)
    return {"width": res.value, "direction": res.direction, "exact": res.exact}


def _cmd_support(ns):
    K = _load_body(ns.body)
    v = _vec(ns.dir, "--dir")
    return {"support": support_fn(K, v), "width_dir": width_dir(K, v), "dir": v}


def _cmd_hausdorff(ns):
    K = _load_body(ns.body)
    M = _load_body(ns.body2)
    res = hausdorff(K, M, n_dirs=ns.n_dirs, seed=ns.seed)
    return {"hausdorff": res.value, "exact": res.exact}


def _cmd_oracle_check(ns):
    K = _load_body(ns.body)
    x = _vec(ns.point, "--point")
    res = alpha(K, x)
    brute = brute_force_alpha(K, x, n_dirs=ns.n_dirs, seed=ns.seed)
    ratios = ratio_functionals(K, x, n_lines=ns.n_lines, seed=ns.seed)
    record = {
        "alpha": res.alpha,
        "method": res.method,
        "alpha_brute_force": brute,
        "brute_force_gap": res.alpha - brute,
        "ratios": _ratio_dict(ratios),
    }
    if ratios.point_in_body:
        b = beta(K, x)
        record["beta"] = b
        record["identity_residuals"] = {
            "alpha_vs_beta": abs(res.alpha - (1.0 - b) / (1.0 + b)),
        }
        if ratios.sigma is not None:
            record["identity_residuals"]["alpha_vs_sigma_sampled"] = (
                res.alpha - (1.0 - ratios.sigma) / (1.0 + ratios.sigma))
    else:
        r = rho(K, x)
        record["rho"] = r
        record["identity_residuals"] = {
            "alpha_vs_rho": abs(res.alpha - (1.0 + r) / (1.0 - r)),
        }
        if ratios.mu is not None:
            record["identity_residuals"]["alpha_vs_mu_sampled"] = (
                ratios.mu - res.alpha)
    return record


def _ratio_dict(rep):
    return {"sigma": rep.sigma, "nu": rep.nu, "omega": rep.omega,
            "gamma_sq": rep.gamma_sq, "mu": rep.mu,
            "point_in_body": rep.point_in_body, "n_chords": rep.n_chords,
            "sides": dict(SAMPLING_SIDES)}


def _cmd_ratios(ns):
    K = _load_body(ns.body)
    rep = ratio_functionals(K, _vec(ns.point, "--point"),
                            n_lines=ns.n_lines, seed=ns.seed)
    return _ratio_dict(rep)


def _cmd_cheb_growth(ns):
    K = _load_body(ns.body)
    x = _vec(ns.point, "--point")
    rep = cheb_growth(K, x, ns.degree, n_samples=ns.n_samples, seed=ns.seed)
    return {"degree": rep.n, "alpha": rep.alpha, "growth": rep.growth,
            "witness_dir": rep.witness_dir,
            "value_at_point": rep.extremal_eval(x),
            "sup_norm_check": rep.sup_norm_check,
            "witness_tol": rep.witness_tol}


def _cmd_cheb_leading(ns):
    K = _load_body(ns.body)
    rep = leading_growth(K, _vec(ns.dir, "--dir"), ns.degree)
    return {"degree": rep.n, "value": rep.value, "tau": rep.tau,
            "witness_dir": rep.witness_dir}


def _cmd_bernstein(ns):
    K = _load_body(ns.body)
    rep = bernstein_bound(K, _vec(ns.point, "--point"), ns.degree,
                          ns.norm_bound)
    return {"theorem_bound": rep.theorem_bound,
            "conjecture_bound": rep.conjecture_bound,
            "conjecture_note": "reported for comparison only, not asserted",
            "alpha": rep.alpha, "width": rep.width,
            "width_exact": rep.width_exact, "degree": ns.degree,
            "norm_bound": ns.norm_bound}


def _cmd_grid(ns):
    K = _load_body(ns.body)
    lo = _vec(ns.low, "--low")
    hi = _vec(ns.high, "--high")
    d = dim(K)
    if lo.size != d or hi.size != d:
        raise _UsageError("--low/--high must match the body dimension")
    if ns.steps < 2:
        raise _UsageError("--steps must be >= 2")
    axes = [np.linspace(lo[i], hi[i], ns.steps) for i in range(d)]
    print(",".join([f"x{i + 1}" for i in range(d)] + ["alpha"]))
    for idx in np.ndindex(*(ns.steps,) * d):
        pt = np.array([axes[i][idx[i]] for i in range(d)])
        a = alpha(K, pt).alpha
        print(",".join(f"{v:.12g}" for v in pt) + f",{a:.12g}")
    return None


def _cmd_experiment_deltabound(ns):
    K = _load_body(ns.body)
    lams = (_vec(ns.lambdas, "--lambdas") if ns.lambdas
            else np.arange(0.1, 1.0, 0.1))
    C = central_symm(K)
    bound = far_radius(K) - 0.5 * global_width(K).value
    rows = []
    for lam in lams:
        lam = float(lam)
        if not 0.0 < lam < 1.0:
            raise _UsageError("--lambdas entries must lie in (0, 1)")
        ls = level_set(K, lam)
        if ls.empty:
            rows.append({"lambda": lam, "empty": True})
            continue
        from .body import Scaled
        delta = hausdorff(ls.body, Scaled(C, lam))
        rows.append({"lambda": lam, "empty": False, "delta": delta.value,
                     "exact": delta.exact, "ratio_to_bound": delta.value / bound})
    filled = [r["ratio_to_bound"] for r in rows if not r["empty"]]
    return {"bound_D_minus_half_w": bound, "rows": rows,
            "max_ratio": max(filled) if filled else None,
            "note": "no sharp bound is asserted below lambda = 1; "
                    "observational output only"}


def _cmd_experiment_conjecture(ns):
    K = _load_body(ns.body)
    d = dim(K)
    rng = np.random.default_rng(ns.seed)
    w_res = global_width(K)
    from .cheb import _body_samples
    pts = _body_samples(K, ns.n_queries, ns.seed + 1)
    dirs = sphere_dirs(d, max(8, ns.n_queries // 4), ns.seed + 2)
    worst = {"ratio": -np.inf}
    n_checked = 0
    for n in range(1, ns.max_degree + 1):
        for _ in range(ns.n_queries):
            x = pts[rng.integers(0, len(pts))]
            v = dirs[rng.integers(0, len(dirs))]
            a = alpha(K, x).alpha
            if a >= 1.0 - 1e-9:
                continue
            p1 = t_polynomial(K, v)
            t_val = poly_eval(p1, x)
            g1 = poly_grad(p1, x)
            grad_norm = abs(cheb_T_prime(n, min(max(t_val, -1.0), 1.0))) * \
                float(np.linalg.norm(g1))
            ratio = grad_norm * w_res.value * np.sqrt(1.0 - a * a) / (2.0 * n)
            n_checked += 1
            if ratio > worst["ratio"]:
                worst = {"ratio": ratio, "degree": n, "point": x.tolist(),
                         "dir": v.tolist(), "alpha": a}
    return {"max_ratio": worst["ratio"] if n_checked else None,
            "worst_case": worst if n_checked else None,
            "n_checked": n_checked,
            "width_exact": w_res.exact,
            "note": "ratios <= 1 are consistent with the conjectured "
                    "sharper bound; nothing is asserted either way"}


def _build_parser():
    p = _Parser(prog="minkgauge", description=__doc__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def cmd(name, handler, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(handler=handler)
        sp.add_argument("--body", required=True,
                        help="body JSON: file path or inline document")
        return sp

    sp = cmd("alpha", _cmd_alpha, help="generalized gauge at a point")
    sp.add_argument("--point", required=True)

    sp = cmd("levelset", _cmd_levelset, help="level body at a factor")
    sp.add_argument("--lambda", dest="lam", type=float, required=True)

    cmd("symmetry", _cmd_symmetry, help="symmetry report (infimum gauge)")

    sp = cmd("tau", _cmd_tau, help="maximal chord in a direction")
    sp.add_argument("--dir", required=True)

    cmd("width", _cmd_width, help="global width")

    sp = cmd("support", _cmd_support, help="support value in a direction")
    sp.add_argument("--dir", required=True)

    sp = cmd("hausdorff", _cmd_hausdorff, help="distance between two bodies")
    sp.add_argument("--body2", required=True)
    sp.add_argument("--n-dirs", type=int, default=4096)
    sp.add_argument("--seed", type=int, default=0)

    sp = cmd("oracle-check", _cmd_oracle_check,
             help="cross-validate the gauge on one instance")
    sp.add_argument("--point", required=True)
    sp.add_argument("--n-dirs", type=int, default=4096)
    sp.add_argument("--n-lines", type=int, default=128)
    sp.add_argument("--seed", type=int, default=0)

    sp = cmd("ratios", _cmd_ratios, help="chord ratio functionals")
    sp.add_argument("--point", required=True)
    sp.add_argument("--n-lines", type=int, default=64)
    sp.add_argument("--seed", type=int, default=0)

    sp = cmd("cheb-growth", _cmd_cheb_growth,
             help="pointwise polynomial growth at an exterior point")
    sp.add_argument("--point", required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--n-samples", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=29)

    sp = cmd("cheb-leading", _cmd_cheb_leading,
             help="leading coefficient growth in a direction")
    sp.add_argument("--dir", required=True)
    sp.add_argument("--degree", type=int, required=True)

    sp = cmd("bernstein", _cmd_bernstein, help="gradient bounds at a point")
    sp.add_argument("--point", required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--norm-bound", type=float, default=1.0)

    sp = cmd("grid", _cmd_grid, help="CSV of alpha over a lattice")
    sp.add_argument("--low", required=True)
    sp.add_argument("--high", required=True)
    sp.add_argument("--steps", type=int, required=True)

    sp = cmd("experiment-deltabound", _cmd_experiment_deltabound,
             help="distance of level bodies to scaled symmetrization, "
                  "factors below 1")
    sp.add_argument("--lambdas", default=None)

    sp = cmd("experiment-conjecture", _cmd_experiment_conjecture,
             help="search for violations of the conjectured gradient bound")
    sp.add_argument("--n-queries", type=int, default=100)
    sp.add_argument("--max-degree", type=int, default=6)
    sp.add_argument("--seed", type=int, default=11)

    return p


def run(argv):
    """Execute one invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    except _UsageError as exc:
        _emit({"error": "input", "message": str(exc)}, sys.stderr)
        return 2
    if getattr(ns, "handler", None) is None:
        _emit({"error": "input", "message": "no subcommand given"}, sys.stderr)
        return 2
    try:
        record = ns.handler(ns)
    except (_UsageError, SchemaError, BodyError, ValueError) as exc:
        _emit({"error": "input", "message": str(exc)}, sys.stderr)
        return 2
    except NumericalError as exc:
        _emit({"error": "numerical", "message": str(exc)}, sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - safety net
        _emit({"error": "internal", "message": f"{type(exc).__name__}: {exc}"},
              sys.stderr)
        return 3
    if record is not None:
        _emit(record)
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
