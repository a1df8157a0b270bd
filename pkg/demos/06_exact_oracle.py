"""
Checking floating point against exact arithmetic
================================================

Rational quaternions give exact cross-ratios for integer inputs; the
double precision values agree to a few ulps.
"""

import numpy as np

from quatcross import Quaternion, cross_ratio, norm
from quatcross.errors import DuplicatePoints
from quatcross.oracle import exact_cross_ratio, rq

print("exact Q(0, 1, 2, i) =", exact_cross_ratio(rq(0), rq(1), rq(2), rq(0, 1)))

rng = np.random.default_rng(0)
worst, count = 0.0, 0
while count < 500:
    pts = [Quaternion.from_array(rng.integers(-5, 6, 4)) for _ in range(4)]
    try:
        exact = exact_cross_ratio(*pts).to_quaternion()
    except DuplicatePoints:
        continue
    count += 1
    worst = max(worst, norm(cross_ratio(*pts) - exact) / norm(exact))
print(f"worst relative error on {count} integer quadruples: {worst:.2e}")
