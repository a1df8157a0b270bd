"""
Fractional linear maps of H u {inf}
===================================

q -> (aq + b)(cq + d)^-1 for an invertible quaternionic 2x2 matrix.
"""

from quatcross import INF, J, Moebius, Quaternion, make_matrix, theta_stabilizer
from quatcross.oracle import RandomConfig, random_moebius, random_points_for
from quatcross.moebius import difference_identity_residual

# The inversion q -> q^-1 swaps 0 and infinity
inversion = Moebius.from_entries(0, 1, 1, 0)
print("j^-1 =", inversion.apply(J), " 0 ->", inversion.apply(0), " inf ->", inversion.apply(INF))

# Composition is the matrix product: first double, then add one
T = Moebius.translation(1) @ Moebius.left_multiplication(2)
print("(2q + 1) at 3 =", T.apply(3))

# Singular matrices are rejected; this one has Schur complement 2
m = make_matrix(1, Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1))
print("accepted matrix with entries 1, i, j, k:", m)

# Points sent to infinity: the pole
S = Moebius.from_entries(1, 0, 1, -J)
print("pole of q (q - j)^-1:", S.pole(), "->", S.apply(S.pole()))

# The difference identity holds to rounding error on random samples
cfg = RandomConfig(seed=1)
rng = cfg.rng()
worst = 0.0
for _ in range(200):
    T = random_moebius(cfg, rng)
    q1, q2 = random_points_for(T, 2, cfg, rng)
    worst = max(worst, difference_identity_residual(T, q1, q2))
print(f"difference identity: worst residual {worst:.1e} over 200 samples")

# A family of maps fixing the unit imaginary sphere pointwise
g = theta_stabilizer(1.0)
u = Quaternion(0, 0.6, 0, 0.8)
print("fixes", u, "->", g.apply(u), " moves 2i ->", g.apply(Quaternion(0, 2)))
