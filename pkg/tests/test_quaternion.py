import math
from fractions import Fraction

import numpy as np
import pytest

from quatcross import quaternion as qt
from quatcross.errors import DivisionByZero
from quatcross.oracle import rq
from quatcross.quaternion import I, INF, J, K, ONE, ZERO, Quaternion, Rotation3

from conftest import exact, q


def test_hamilton_units():
    assert qt.mul(I, J) == K
    assert qt.mul(J, K) == I
    assert qt.mul(K, I) == J
    assert qt.mul(J, I) == -K
    for u in (I, J, K):
        assert qt.mul(u, u) == -ONE


def test_identity_element():
    p = q(2, 3, -1, 0)
    assert qt.mul(ONE, p) == p
    assert qt.mul(p, ONE) == p


def test_product_against_rational_oracle():
    assert qt.mul(I + J, I) == q(-1, 0, 0, -1)
    assert exact(I + J) * exact(I) == rq(-1, 0, 0, -1)


def test_inverse_values():
    assert qt.inv(I) == -I
    assert qt.inv(ONE) == ONE
    got = qt.inv(q(-2, 1))
    assert qt.isclose(got, q(-0.4, -0.2))
    assert rq(-2, 1).inv() == rq(-2, -1) * rq(Fraction(1, 5))
    with pytest.raises(DivisionByZero):
        qt.inv(ZERO)
    # DivisionByZero is also a ZeroDivisionError
    with pytest.raises(ZeroDivisionError):
        qt.inv(0)


def test_inverse_of_extreme_magnitudes():
    for s in (1e-200, 1e200):
        p = q(s, s, 0, -s)
        assert qt.isclose(qt.mul(p, qt.inv(p)), ONE)


def test_norm_conj_re_im():
    p = q(1, -2, 3, 4)
    assert qt.norm2(p) == 30.0
    assert qt.conj(p) == q(1, 2, -3, -4)
    assert qt.re(p) == 1.0
    assert qt.im(p) == q(0, -2, 3, 4)
    assert abs(p) == math.sqrt(30)


def test_conj_is_antimultiplicative_bitwise(rng):
    for _ in range(200):
        a = Quaternion.from_array(rng.normal(size=4))
        b = Quaternion.from_array(rng.normal(size=4))
        assert qt.conj(qt.mul(a, b)) == qt.mul(qt.conj(b), qt.conj(a))
        assert qt.re(qt.mul(a, b)) == qt.re(qt.mul(b, a))


def test_complex_realization():
    assert np.array_equal(qt.to_complex_matrix(1), np.eye(2))
    assert np.array_equal(qt.to_complex_matrix(J), np.array([[0, -1], [1, 0]]))
    t, x, y, z = 1.0, 2.0, 3.0, 4.0
    m = qt.to_complex_matrix(q(t, x, y, z))
    expected = np.array([[t - 1j * z, -y - 1j * x], [y - 1j * x, t + 1j * z]])
    assert np.array_equal(m, expected)
    assert qt.from_complex_matrix(m) == q(t, x, y, z)


def test_realization_is_a_homomorphism(rng):
    for _ in range(50):
        a = Quaternion.from_array(rng.normal(size=4))
        b = Quaternion.from_array(rng.normal(size=4))
        lhs = qt.to_complex_matrix(qt.mul(a, b))
        rhs = qt.to_complex_matrix(a) @ qt.to_complex_matrix(b)
        assert np.allclose(lhs, rhs, atol=1e-13)
        assert math.isclose(np.linalg.det(qt.to_complex_matrix(a)).real, qt.norm2(a), rel_tol=1e-12)


def test_conj_by_values():
    assert qt.conj_by(I, J) == -J
    assert qt.isclose(qt.conj_by(I + J, I), J)
    p = q(2, -1, 0.5, 3)
    assert qt.conj_by(3, p) == p
    assert exact(I) * exact(J) * exact(I).inv() == rq(0, 0, -1, 0)
    assert (rq(0, 1, 1) * rq(0, 1) * rq(0, 1, 1).inv()) == rq(0, 0, 1)


def test_rotation_from_scalar_is_identity():
    assert qt.rotation_from(5) == Rotation3(ONE)
    assert qt.rotation_from(-5) == Rotation3(ONE)


def test_rotation_canonical_sign():
    r = Rotation3.from_quaternion(q(-1, 2, 0, 0))
    assert r.unit.t > 0
    r = Rotation3.from_quaternion(q(0, -1, 1, 0))
    assert r.unit.x > 0
    assert Rotation3.from_quaternion(q(0, -3)) == Rotation3.from_quaternion(q(0, 3))


def test_rotation_matrix_matches_action(rng):
    for _ in range(20):
        r = Rotation3.from_quaternion(Quaternion.from_array(rng.normal(size=4)))
        v = Quaternion.from_vector(rng.normal(size=3))
        assert np.allclose(r.matrix() @ v.vector, r.rotate(v).vector, atol=1e-13)
        assert np.allclose(r.matrix() @ r.matrix().T, np.eye(3), atol=1e-13)
        assert math.isclose(np.linalg.det(r.matrix()), 1.0, rel_tol=1e-12)


def test_rotation_about_axis_and_compose():
    r = Rotation3.about_axis(K, math.pi / 2)
    assert qt.isclose(r(I), J)
    s = r.compose(r)
    assert qt.isclose(s(I), -I)
    assert qt.isclose(r.inverse()(J), I)
    with pytest.raises(DivisionByZero):
        Rotation3.about_axis(ONE, 1.0)


def test_isclose_and_infinity():
    assert qt.isclose(INF, INF)
    assert not qt.isclose(INF, ONE)
    assert qt.isclose(q(1), q(1 + 1e-12))
    assert not qt.isclose(q(1), q(1 + 1e-6))
    assert qt.isclose(q(1), q(1 + 1e-6), tol=1e-5)


def test_commutator():
    assert qt.commutator(I, J) == q(0, 0, 0, 2)
    assert qt.commutator(q(1, 1), q(3, -2)) == ZERO
    p = q(0.3, -1.2, 0.7, 2.0)
    assert qt.commutes(p, qt.mul(p, p))
    assert not qt.commutes(I, J)


def test_is_real():
    assert qt.is_real(q(3))
    assert qt.is_real(q(3, 1e-12))
    assert not qt.is_real(q(3, 1e-3))


def test_as_ext():
    assert qt.as_ext("inf") is INF
    assert qt.as_ext(float("inf")) is INF
    assert qt.as_ext(2) == q(2)
    assert qt.as_ext([1, 2, 3, 4]) == q(1, 2, 3, 4)


def test_infinity_singleton():
    import pickle

    assert qt.Infinity() is INF
    assert pickle.loads(pickle.dumps(INF)) is INF
    assert not INF.is_finite()
