"""
The cross-ratio and its invariants
==================================

Q(q1, q2, q3, q4) = (q2 - q1)^-1 (q4 - q1)(q4 - q3)^-1 (q2 - q3).
Under a fractional linear map Q changes by a conjugation, so its norm and
real part are invariant.
"""

from quatcross import INF, I, Quaternion, chain_invariant, cross_ratio, five_point_chain, r_invariant
from quatcross.oracle import RandomConfig, random_moebius, random_points_for

# With (0, 1, inf) in front, the cross-ratio of q is q itself
q = Quaternion(2, 1, 0, -3)
print("Q(0, 1, inf, q) =", cross_ratio(0, 1, INF, q))

# Two small values
print("Q(0, 1, 2, 3) =", cross_ratio(0, 1, 2, 3))
print("Q(0, 1, 2, i) =", cross_ratio(0, 1, 2, I))

# Push four points through a random map: Q moves, (|Q|, Re Q) does not
cfg = RandomConfig(seed=3)
rng = cfg.rng()
T = random_moebius(cfg, rng)
pts = random_points_for(T, 4, cfg, rng)
imgs = [T.apply(p) for p in pts]
print("Q before:", cross_ratio(*pts))
print("Q after: ", cross_ratio(*imgs))
print("invariant before:", r_invariant(*pts))
print("invariant after: ", r_invariant(*imgs))

# Longer alternating products are invariant in the same sense
print("chain of 0, 1, 2, 3:", chain_invariant([0, 1, 2, 3]))
print("five point chain of 0..4:", five_point_chain(0, 1, 2, 3, 4))
