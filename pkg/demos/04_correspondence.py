"""
Maps with prescribed values
===========================

Any three distinct points can be sent to any other three.  With four
points the invariants must match, and a one-parameter family remains;
a fifth point in general position pins the map down.
"""

import math

from quatcross import INF, I, J, Quaternion, solve_five, solve_four, solve_three
from quatcross.errors import InvariantMismatch
from quatcross.oracle import RandomConfig, random_moebius, random_points_for

std = (Quaternion(0), Quaternion(1), INF)

# Three points
T = solve_three(std, (Quaternion(1), INF, Quaternion(0)))
print("0, 1, inf ->", [T.apply(p) for p in std])

# Four points: i -> j in the normalized chart
sol = solve_four(std + (I,), std + (J,))
print("base map sends i to", sol.base.apply(I), "; free rotation axis", sol.axis)
for angle in (0.0, math.pi / 2, 2.0):
    print(f"  member({angle:.2f}) sends i to", sol.member(angle).apply(I))

# Mismatched norms are infeasible, with a reason code
try:
    solve_four(std + (I,), std + (2 * I,))
except InvariantMismatch as exc:
    print("infeasible:", exc.reason, "-", exc)

# Five points: recover a random map from its values
cfg = RandomConfig(seed=5)
rng = cfg.rng()
T = random_moebius(cfg, rng)
src = random_points_for(T, 6, cfg, rng)
dst = [T.apply(p) for p in src[:5]]
a = solve_five(src[:5], dst, method="frame")
b = solve_five(src[:5], dst, method="twist")
print("unique:", a.unique)
print("two constructions at a sixth point:", a.map.apply(src[5]), b.map.apply(src[5]))
print("true image:                        ", T.apply(src[5]))
