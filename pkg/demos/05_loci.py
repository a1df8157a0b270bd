"""
Circles, spheres and loci
=========================

Predicates read off the cross-ratio, then the sets of possible images
of a fourth or fifth point and images of spheres under maps.
"""

from quatcross import (
    INF,
    AffineSubspace,
    I,
    J,
    K,
    Moebius,
    Quaternion,
    SphereK,
    apollonius,
    is_cocircular,
    is_cospherical5,
    locus_fifth,
    locus_fourth,
    map_locus,
)

zero, one = Quaternion(0), Quaternion(1)

# Four points on a line or circle have a real cross-ratio
print("0, 1, 2, 3 cocircular:", is_cocircular(0, 1, 2, 3))
print("0, 1, inf, i cocircular:", is_cocircular(zero, one, INF, I))

# Five points on a 2-sphere: the two cross-ratios commute
print("0, 1, inf, i, 2i cospherical:", is_cospherical5(zero, one, INF, I, 2 * I))
print("0, 1, inf, i, j cospherical:", is_cospherical5(zero, one, INF, I, J))

# Where can the fourth point go once three are fixed?  A 2-sphere
print("fourth point locus:", locus_fourth((zero, one, INF, I), (zero, one, INF)))
print("real cross-ratio gives a point:", locus_fourth((zero, one, INF, Quaternion(2)), (zero, one, INF)))

# And the fifth point once four are fixed?  A circle
print("fifth point locus:", locus_fifth((zero, one, INF, I, J), (zero, one, INF, I)))

# Inversion sends the 3-plane Re q = 1/2 to the sphere |q - 1| = 1
plane = AffineSubspace.spanning(Quaternion(0.5), [I, J, K])
print("image of Re q = 1/2:", map_locus(Moebius.inversion(), plane))

# Moebius images of spheres through the pole are planes
print("image of |q| = 1 under (q - 1)^-1:", map_locus(Moebius.from_entries(0, 1, 1, -1), SphereK(zero, 1.0, 3)))

# Apollonius sets |s - p1|^2 = A |s - p2|^2
print("A = 4:", apollonius(0, 1, 4.0))
print("A = 1:", apollonius(0, 2, 1.0))
