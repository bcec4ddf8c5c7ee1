"""
Quantitative bounds
===================

Lipschitz constants, growth estimates and asymptotics for alpha, plus the
truncated sequence-space bodies where the extrema are approached but never
attained.
"""

import numpy as np

from minkgauge import (alpha, diameter, far_radius, global_width, max_chord,
                       make_weighted_l2_ball, parse_body)

K = parse_body({"kind": "regular_polygon", "n": 5, "radius": 2.0})
w = global_width(K).value
D = far_radius(K)
print(f"pentagon: width = {w:.6f}  far radius = {D:.6f}  "
      f"diameter = {diameter(K):.6f}")

# global Lipschitz constant 2/w
rng = np.random.default_rng(2)
worst = 0.0
for _ in range(200):
    x, y = rng.normal(scale=2.0, size=(2, 2))
    worst = max(worst, abs(alpha(K, x).alpha - alpha(K, y).alpha)
                / np.linalg.norm(x - y))
print(f"observed Lipschitz ratio  = {worst:.6f}   bound 2/w = {2 / w:.6f}")

# directional version: along direction v the constant improves to
# 2 / max_chord(K, v)
v = np.array([1.0, 0.0])
tau = max_chord(K, v)
x = np.array([0.3, 0.1])
vals = [alpha(K, x + t * v).alpha for t in np.linspace(0, 3, 7)]
steps = np.abs(np.diff(vals)) / 0.5
print(f"chordwise ratio along e1  = {steps.max():.6f}   "
      f"bound 2/tau = {2 / tau:.6f}")

# far away alpha is linear: alpha(K, s u) ~ 2 s / tau(K, u)
u = np.array([0.6, 0.8])
for s in (1e2, 1e4, 1e6):
    r = alpha(K, s * u).alpha * max_chord(K, u) / (2 * s)
    print(f"s = {s:8.0e}: alpha / (2 s / tau) = {r:.9f}")

# sequence-space truncations: the supremum 2 and infimum sqrt(2) of
# diameter and width are approached monotonically but never reached
print("\nweighted l2 truncations:")
for d in (4, 16, 64):
    di = diameter(make_weighted_l2_ball(d, "i"))
    wi = global_width(make_weighted_l2_ball(d, "ii")).value
    print(f"  d = {d:3d}: diameter(mode i) = {di:.6f}   "
          f"width(mode ii) = {wi:.6f}")
print(f"  limits: 2.0 and sqrt(2) = {np.sqrt(2):.6f}")
