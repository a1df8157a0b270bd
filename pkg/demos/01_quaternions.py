"""
Quaternion arithmetic
=====================

Products, inverses, the 2x2 complex picture and rotations of the
imaginary 3-space.
"""

import numpy as np

from quatcross import I, J, K, Quaternion, conj_by, inv, mul, rotation_from, to_complex_matrix

# Hamilton's units: ij = k but ji = -k
print("ij =", mul(I, J), " ji =", mul(J, I))

# Multiplication is not commutative, but the norm is multiplicative
p, q = Quaternion(1, 2, -1, 0.5), Quaternion(-0.3, 0, 4, 1)
print("|pq| =", abs(mul(p, q)), " |p||q| =", abs(p) * abs(q))

# The inverse is the conjugate over the squared norm
print("(-2 + i)^-1 =", inv(Quaternion(-2, 1)))

# Every quaternion is a 2x2 complex matrix; the product is the matrix product
lhs = to_complex_matrix(mul(p, q))
rhs = to_complex_matrix(p) @ to_complex_matrix(q)
print("realization respects products:", np.allclose(lhs, rhs))
print("det = |p|^2:", np.linalg.det(to_complex_matrix(p)).real, abs(p) ** 2)

# Conjugation q -> a q a^-1 keeps norm and real part and rotates Im q
a = I + J
print("(i+j) i (i+j)^-1 =", conj_by(a, I))
R = rotation_from(a)
print("rotation matrix of i + j:\n", np.round(R.matrix(), 12))
print("it swaps i and j and sends k to", R(K))
