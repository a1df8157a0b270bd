"""Algebraic identities checked on hypothesis-generated inputs."""

import json
import math

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from quatcross import jsonio
from quatcross.correspondence import align_vector, solve_four
from quatcross.crossratio import cross_ratio, r_invariant
from quatcross.geometry import is_cocircular
from quatcross.moebius import MatGL2H, Moebius
from quatcross.oracle import RationalQuaternion, exact_cross_ratio
from quatcross.quaternion import (
    INF,
    ONE,
    Quaternion,
    Rotation3,
    commutator,
    conj,
    conj_by,
    inv,
    isclose,
    mul,
    norm,
    re,
)

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
quats = st.builds(Quaternion, coord, coord, coord, coord)
nonzero = quats.filter(lambda q: norm(q) > 1e-3)
small_int = st.integers(-6, 6).map(float)
int_quats = st.builds(Quaternion, small_int, small_int, small_int, small_int)

SETTINGS = settings(max_examples=100, deadline=None, derandomize=True)


def separated(points, gap=1e-2):
    return all(norm(p - q) > gap for n, p in enumerate(points) for q in points[n + 1 :])


@SETTINGS
@given(quats, quats)
def test_conj_antimultiplicative_exactly(p, q):
    assert conj(mul(p, q)) == mul(conj(q), conj(p))
    assert re(mul(p, q)) == re(mul(q, p))


@SETTINGS
@given(quats, quats)
def test_norm_is_multiplicative(p, q):
    assert math.isclose(norm(mul(p, q)), norm(p) * norm(q), rel_tol=1e-12, abs_tol=1e-12)


@SETTINGS
@given(quats, quats, quats)
def test_associativity(p, q, r):
    lhs, rhs = mul(mul(p, q), r), mul(p, mul(q, r))
    assert norm(lhs - rhs) <= 1e-12 * (1 + norm(p) * norm(q) * norm(r))


@SETTINGS
@given(nonzero)
def test_inverse(q):
    assert isclose(mul(q, inv(q)), ONE, tol=1e-12)
    assert isclose(mul(inv(q), q), ONE, tol=1e-12)


@SETTINGS
@given(nonzero, quats)
def test_conjugation_preserves_norm_and_real_part(a, q):
    c = conj_by(a, q)
    assert math.isclose(norm(c), norm(q), rel_tol=1e-12, abs_tol=1e-12)
    assert math.isclose(c.t, q.t, rel_tol=1e-12, abs_tol=1e-11)


@SETTINGS
@given(quats, quats)
def test_commutator_is_twice_cross_product(p, q):
    c = commutator(p, q)
    u, v = p.vector, q.vector
    cross = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
    assert c.t == 0.0 or abs(c.t) <= 1e-12 * (1 + norm(p) * norm(q))
    for a, b in zip((c.x, c.y, c.z), cross):
        assert abs(a - 2 * b) <= 1e-12 * (1 + norm(p) * norm(q))


@SETTINGS
@given(quats)
def test_normalized_chart_identity(q):
    assume(norm(q) > 1e-6 and norm(q - ONE) > 1e-6)
    assert cross_ratio(0, 1, INF, q) == q


@SETTINGS
@given(int_quats, int_quats, int_quats, int_quats)
def test_cross_ratio_matches_rational_oracle(a, b, c, d):
    pts = [a, b, c, d]
    assume(separated(pts, 0.5))
    exact = exact_cross_ratio(*[RationalQuaternion.from_quaternion(p) for p in pts]).to_quaternion()
    assert norm(cross_ratio(*pts) - exact) <= 1e-12 * max(1.0, norm(exact))


@SETTINGS
@given(st.lists(quats, min_size=4, max_size=4), nonzero, quats, quats, nonzero)
def test_invariance_under_generators(pts, a, b, c, e):
    assume(separated(pts, 0.1))
    base = r_invariant(*pts)
    for T in (Moebius.translation(b), Moebius.left_multiplication(a), Moebius.conjugation(e)):
        img = [T.apply(p) for p in pts]
        assert r_invariant(*img).isclose(base, tol=1e-8)
    img = [INF if norm(p) < 1e-300 else inv(p) for p in pts]
    assume(all(norm(p) > 1e-2 for p in pts))
    assert r_invariant(*img).isclose(base, tol=1e-7)


@SETTINGS
@given(st.lists(quats, min_size=4, max_size=4), nonzero)
def test_solve_four_on_rotated_copy(pts, a):
    # Conjugation by a is a Moebius map, so its image is always feasible.
    assume(separated(pts, 0.1))
    dst = [conj_by(a, p) for p in pts]
    sol = solve_four(pts, dst)
    for s, d in zip(pts, dst):
        assert isclose(sol.base.apply(s), d, tol=1e-7)


@SETTINGS
@given(quats.filter(lambda q: norm(q.im) > 1e-3), nonzero)
def test_align_vector_hits_target(v, a):
    w = conj_by(a, v.im)
    r = align_vector(v, w)
    assert isclose(r(v.im), w, tol=1e-10)


@SETTINGS
@given(st.floats(0, 2 * math.pi), st.floats(0, 2 * math.pi), st.floats(0, 2 * math.pi), st.floats(0, 2 * math.pi), nonzero)
def test_points_on_a_circle_are_cocircular(t1, t2, t3, t4, a):
    angles = [t1, t2, t3, t4]
    assume(all(abs(math.sin((x - y) / 2)) > 0.05 for n, x in enumerate(angles) for y in angles[n + 1 :]))
    pts = [conj_by(a, Quaternion(1 + math.cos(t), 0, math.sin(t), 0)) for t in angles]
    assert is_cocircular(*pts, tol=1e-7)


@SETTINGS
@given(st.lists(quats, min_size=4, max_size=4))
def test_matrix_json_roundtrip(entries):
    try:
        m = MatGL2H(*entries)
    except Exception:
        assume(False)
    doc = json.loads(json.dumps(jsonio.matrix_to_json(m)))
    assert jsonio.matrix_from_json(doc) == m


@SETTINGS
@given(quats)
def test_rotation_canonical_form_is_idempotent(a):
    assume(norm(a) > 1e-6)
    r = Rotation3.from_quaternion(a)
    assert Rotation3.from_quaternion(r.unit).isclose(r, tol=1e-15)
