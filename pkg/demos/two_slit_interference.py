"""Two-slit interference, state by state.

A particle reaches the screen through one of two slits.  If the paths
cannot be distinguished, the system is not a probabilistic mixture of
the two slit states but a *superposition* of them, and the detection
probabilities pick up an interference term.  This script builds both
descriptions and prints them side by side.

Run:  python3 demos/two_slit_interference.py
"""

import math

import numpy as np

from raygeo import SuperpositionSpec, omega, p_sim, ray_from, superpose, theta

# The two slit states: non-orthogonal rays in C^2 (orthogonal slit
# states would make the paths distinguishable and the superposition
# undefined -- try ray_from([0.0, 1.0]) below to see the refusal).
y = ray_from([1.0, 0.35])
z = ray_from([0.35, 1.0])
r = 0.5  # equal slit weights

state = superpose(SuperpositionSpec(y=y, z=z, r=r))
print(f"slit overlap p(y,z) = {p_sim(y, z):.6f}")
print(f"normalization omega = {omega(r, y, z):.6f}")
print(f"superposed state    = {np.round(state.rep, 6)}")
print()

# Sweep detector states across the screen and compare:
#   quantum   : p(superposition, detector)
#   classical : r p(y, detector) + (1-r) p(z, detector)
# The gap is the interference term 2 cos(theta) sqrt(r(1-r) p p)/omega.
print(f"{'angle':>8}  {'quantum':>10}  {'classical':>10}  {'interference':>13}")
for k in range(9):
    angle = k * math.pi / 16.0
    detector = ray_from([math.cos(angle), math.sin(angle)])
    quantum = p_sim(state, detector)
    classical = r * p_sim(y, detector) + (1 - r) * p_sim(z, detector)
    print(f"{angle:8.4f}  {quantum:10.6f}  {classical:10.6f}  {quantum - classical:+13.6f}")

print()
# The interference term carries cos(theta(x, y, z)).  In this all-real
# configuration every triple phase is 0 or pi, so the term is maximal.
detector = ray_from([1.0, 1.0])
print(f"theta(detector, y, z) = {theta(detector, y, z):+.6f}  (real regime: 0 or pi)")

# A complex detector rotates the phase and weakens the interference.
detector_c = ray_from([1.0, 0.6 + 0.6j])
t = theta(detector_c, y, z)
print(f"theta(complex detector, y, z) = {t:+.6f},  cos = {math.cos(t):+.6f}")
