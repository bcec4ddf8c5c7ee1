"""
Measure of symmetry and critical sets
=====================================

alpha_inf(K) = min_x alpha(K, x) grades how asymmetric a body is: 0 for
centrally symmetric bodies, up to (d-1)/(d+1) for simplices, which are the
least symmetric bodies in dimension d.
"""

import numpy as np

from minkgauge import (alpha_inf, centroid, make_half_disc,
                       make_regular_polygon, make_simplex,
                       make_sobczyk_prism)

print("simplices attain the extreme value (d-1)/(d+1):")
for d in range(1, 5):
    rep = alpha_inf(make_simplex(d))
    print(f"  d={d}: alpha_inf = {rep.alpha_inf:.9f}   "
          f"target {(d - 1) / (d + 1):.9f}   minimizer {np.round(rep.minimizer, 6)}")

print("\ncentrally symmetric bodies sit at zero:")
for n in (4, 6, 8):
    print(f"  regular {n}-gon: alpha_inf = {alpha_inf(make_regular_polygon(n)).alpha_inf:.2e}")

# The critical set (where the minimum is attained) need not be a point.
# For this prism it is a vertical segment, and the codimension formula
# klee_lhs = d - dim(critical set) evaluates to 2.
P = make_sobczyk_prism()
rep = alpha_inf(P)
print(f"\nprism: alpha_inf = {rep.alpha_inf:.9f}")
print(f"  critical set dimension estimate = {rep.critical_dim_estimate}")
print(f"  klee lhs = {rep.klee_lhs:.6f} = 3 - {rep.critical_dim_estimate}")

# The minimizer is NOT the centroid in general.  The half disc separates
# them: minimizer near (0, sqrt(2)-1), centroid at (0, 4/(3 pi)).
H = make_half_disc(256)
rep = alpha_inf(H)
c = centroid(H)
print(f"\nhalf disc: alpha_inf = {rep.alpha_inf:.9f}   "
      f"(3 - 2 sqrt 2 = {3 - 2 * np.sqrt(2):.9f})")
print(f"  minimizer = {np.round(rep.minimizer, 6)}")
print(f"  centroid  = {np.round(c, 6)}")
print(f"  separation = {np.linalg.norm(rep.minimizer - c):.6f}")
