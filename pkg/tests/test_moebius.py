import math

import numpy as np
import pytest

from quatcross import moebius as mb
from quatcross.errors import DegenerateInput, SingularMatrix
from quatcross.moebius import MatGL2H, Moebius
from quatcross.oracle import RandomConfig, random_moebius, random_points_for
from quatcross.quaternion import I, INF, J, K, ONE, ZERO, isclose

from conftest import q


def test_make_matrix_accepts_and_rejects():
    assert Moebius(mb.make_matrix(1, 0, 0, 1)).isclose(Moebius.identity())
    with pytest.raises(SingularMatrix):
        mb.make_matrix(1, 1, 1, 1)
    m = mb.make_matrix(1, I, J, K)
    # Schur complement 1 - i k^-1 j = 2, so the 4x4 determinant is |1|^2 |2|^2 = 4
    assert math.isclose(abs(np.linalg.det(m.realization())), 4.0, rel_tol=1e-12)


def test_apply_examples():
    inversion = Moebius.from_entries(0, 1, 1, 0)
    assert inversion.apply(J) == -J
    assert Moebius.inversion().apply(J) == -J
    p = q(0.5, -1, 2, 3)
    assert Moebius.identity().apply(p) == p
    q1, q3 = q(0, 1), q(2, 0, 0, 1)
    T = Moebius.from_entries(1, -q1, 1, -q3)
    assert T.apply(q3) is INF


def test_action_at_infinity():
    T = Moebius.from_entries(q(2), q(1), q(1), q(3))
    assert isclose(T.apply(INF), q(2))
    assert Moebius.from_entries(2, 1, 0, 1).apply(INF) is INF
    assert Moebius.inversion().apply(INF) == ZERO
    assert Moebius.inversion().apply(ZERO) is INF


def test_compose_example():
    shift = Moebius.translation(1)
    double = Moebius.left_multiplication(2)
    assert mb.compose(shift, double).apply(3) == q(7)
    assert (shift @ double).apply(3) == q(7)
    assert (double @ shift).apply(3) == q(8)


def test_compose_with_identity_is_projectively_equal():
    T = random_moebius(RandomConfig(seed=3))
    assert mb.compose(Moebius.identity(), T).isclose(T)
    assert mb.compose(T, Moebius.identity()).isclose(T)
    assert Moebius(T.matrix.scaled(3.0)).isclose(T)


def test_inverse_examples():
    assert mb.inverse(Moebius.identity()).isclose(Moebius.identity())
    a = q(1, 2, -1, 0.5)
    Ta = Moebius.left_multiplication(a)
    p = q(0.3, 0.1, -2, 1)
    from quatcross.quaternion import inv, mul

    assert isclose(Ta.inverse().apply(p), mul(inv(a), p))
    N = Moebius.from_entries(1, 0, 0, 1)
    back = N.inverse()
    for x in (ZERO, ONE, INF):
        assert isclose(back.apply(N.apply(x)), x)


def test_inverse_roundtrip_random():
    cfg = RandomConfig(seed=11)
    rng = cfg.rng()
    for _ in range(50):
        T = random_moebius(cfg, rng)
        Ti = T.inverse()
        for p in random_points_for(T, 3, cfg, rng):
            assert isclose(Ti.apply(T.apply(p)), p, tol=1e-9)
        assert (T @ Ti).isclose(Moebius.identity(), tol=1e-9)


def test_pole():
    T = Moebius.from_entries(1, 0, 1, -J)
    assert T.pole() == J
    assert T.apply(J) is INF
    assert Moebius.translation(1).pole() is INF


def test_difference_identity():
    assert mb.difference_identity_residual(Moebius.identity(), I, J) == 0.0
    assert mb.difference_identity_residual(Moebius.inversion(), q(1), q(2)) <= 1e-15
    with pytest.raises(DegenerateInput):
        mb.difference_identity_residual(Moebius.inversion(), ZERO, ONE)


def test_difference_identity_random():
    cfg = RandomConfig(seed=5)
    rng = cfg.rng()
    for _ in range(200):
        T = random_moebius(cfg, rng)
        p1, p2 = random_points_for(T, 2, cfg, rng)
        assert mb.difference_identity_residual(T, p1, p2) <= 1e-9


def test_theta_stabilizer():
    assert mb.theta_stabilizer(0.0).isclose(Moebius.identity())
    g = mb.theta_stabilizer(math.pi / 2)
    assert isclose(g.apply(I), I)
    g = mb.theta_stabilizer(math.pi / 3)
    for u in (I, J, K, (I + J) / math.sqrt(2)):
        assert isclose(g.apply(u), u)
    assert not isclose(g.apply(2 * I), 2 * I)


def test_matrix_realization_product():
    cfg = RandomConfig(seed=9)
    rng = cfg.rng()
    A = random_moebius(cfg, rng).matrix
    B = random_moebius(cfg, rng).matrix
    assert np.allclose((A @ B).realization(), A.realization() @ B.realization(), atol=1e-12)
    assert np.allclose(A.inverse().realization() @ A.realization(), np.eye(4), atol=1e-10)


def test_matgl2h_is_immutable():
    m = MatGL2H(ONE, ZERO, ZERO, ONE)
    with pytest.raises(Exception):
        m.a = ZERO
