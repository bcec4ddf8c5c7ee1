"""
Equivalent chord-ratio functionals
==================================

Several classical quantities built from chords through x carry the same
information as alpha(K, x), each through an explicit change of variables.
This script evaluates all of them at one interior and one exterior point
and confirms the conversion formulas numerically.
"""

import numpy as np

from minkgauge import (VPolytope, alpha, brute_force_alpha, beta,
                       minkowski_phi, ratio_functionals, rho)

T = VPolytope(np.array([[10.0, 10.0], [16.0, 10.0], [10.0, 16.0]]))

x = np.array([12.0, 12.0])
a = alpha(T, x).alpha
b = beta(T, x)
print(f"interior point {x.tolist()}")
print(f"  alpha = {a:.9f}")
print(f"  beta  = {b:.9f}   (1-beta)/(1+beta) = {(1 - b) / (1 + b):.9f}")
print(f"  phi   = {minkowski_phi(T, x):.9f}")

rep = ratio_functionals(T, x, n_lines=64, seed=0)
print(f"  chord ratios over {rep.n_chords} sampled chords:")
print(f"    sigma    = {rep.sigma:.9f}")
print(f"    nu       = {rep.nu:.9f}     = (1-sigma)/(1+sigma)")
print(f"    omega    = {rep.omega:.9f}")
print(f"    gamma^2  = {rep.gamma_sq:.9f}  = 4 omega (1-omega)")

y = np.array([20.0, 10.0])
a = alpha(T, y).alpha
r = rho(T, y)
print(f"\nexterior point {y.tolist()}")
print(f"  alpha = {a:.9f}")
print(f"  rho   = {r:.9f}   (1+rho)/(1-rho) = {(1 + r) / (1 - r):.9f}")
rep = ratio_functionals(T, y, n_lines=64, seed=0)
print(f"  sigma = {rep.sigma:.9f}   mu = {rep.mu:.9f}"
      f"   (mu-1)/(mu+1) = {(rep.mu - 1) / (rep.mu + 1):.9f}")

# sampling only explores finitely many chords, so it approaches alpha
# from one side; the slab formula is exact
bf = brute_force_alpha(T, x, n_dirs=2048)
print(f"\nbrute force over 2048 directions = {bf:.9f} vs exact {alpha(T, x).alpha:.9f}")
