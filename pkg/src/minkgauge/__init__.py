"""Gauge asymmetry functionals of convex bodies and their consequences.

The package computes, for a convex body K in R^d and a point x:

* the asymmetry gauge alpha(K, x) together with a witness direction,
* the nested level-set family K^lambda and its algebra,
* the symmetry measure 1 - min alpha and the critical (most symmetric) set,
* independent chord-ratio functionals that must agree with alpha,
* Chebyshev-type polynomial growth and derivative bounds driven by alpha.
"""

from .body import (Ball, Body, BodyError, HPolytope, Product, Reflected, Scaled,
                   Sum, SupportOracle, Translated, VPolytope, contains, dim,
                   hull2d, inscribed_ball, interior_point, simplify, support,
                   validate, vertex_candidates)
from .lp import LPResult, LPStatus, NumericalError, lp_solve
from .geometry import (HausdorffResult, WidthResult, central_symm,
                       chord_witness_dir, diameter, far_radius, global_width,
                       hausdorff, max_chord, polygon_vertices, sphere_dirs,
                       width_dir)
from .gauge import (GaugeResult, LevelSet, SymmetryReport, alpha, alpha_inf,
                    centroid, level_set, t_func)
from .ratios import (Chord, RatioReport, beta, brute_force_alpha, chord,
                     minkowski_phi, ratio_functionals, rho)
from .cheb import (BernsteinReport, ChebyshevReport, LeadingGrowthReport,
                   Polynomial, bernstein_bound, cheb_T, cheb_T_prime,
                   cheb_T_product, cheb_growth, compose_cheb,
                   extremal_polynomial, leading_growth, poly_eval, poly_grad,
                   t_polynomial)
from .shapes import (SchemaError, make_ball, make_box, make_half_disc,
                     make_regular_polygon, make_simplex, make_sobczyk_prism,
                     make_weighted_l2_ball, parse_body, random_polygon,
                     serialize_body)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
