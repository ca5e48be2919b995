from fractions import Fraction as F

from hypothesis import given, strategies as st

from hopfmod import linalg as la

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n).map(la.as_matrix)


def test_clean_drops_zeros():
    assert la.clean({0: F(0), 1: F(2)}) == {1: F(2)}
    assert la.vsub({0: F(1)}, {0: F(1)}) == {}


def test_tensor_and_permute():
    t = la.tensor_product({0: F(1), 1: F(2)}, {3: F(-1)})
    assert t == {(0, 3): F(-1), (1, 3): F(-2)}
    assert la.permute_legs(t, (1, 0)) == {(3, 0): F(-1), (3, 1): F(-2)}


def test_apply_leg():
    t = {(0, 1): F(1)}
    out = la.apply_leg(t, 1, lambda i: {i: F(3), i + 1: F(1)})
    assert out == {(0, 1): F(3), (0, 2): F(1)}


def test_inverse_of_singular_is_none():
    assert la.inverse(la.as_matrix([[1, 2], [2, 4]])) is None


def test_solve_known_system():
    a = la.as_matrix([[1, 1], [1, -1]])
    assert la.solve(a, [F(3), F(1)]) == [F(2), F(1)]
    assert la.solve(la.as_matrix([[1], [1]]), [F(1), F(2)]) is None


@given(matrices(3))
def test_inverse_roundtrip(a):
    inv = la.inverse(a)
    if inv is None:
        assert la.rank(a) < 3
    else:
        assert la.matmul(a, inv) == la.identity(3)
        assert la.matmul(inv, a) == la.identity(3)


@given(matrices(2), matrices(2), matrices(2))
def test_matmul_associative(a, b, c):
    assert la.matmul(la.matmul(a, b), c) == la.matmul(a, la.matmul(b, c))


@given(matrices(2), matrices(2), matrices(2), matrices(2))
def test_kron_mixed_product(a, b, c, d):
    assert la.matmul(la.kron(a, b), la.kron(c, d)) == la.kron(la.matmul(a, c), la.matmul(b, d))


@given(matrices(3), st.lists(small, min_size=3, max_size=3))
def test_matvec_is_columns(a, xs):
    v = la.sparse(xs)
    expected = la.vsum(la.vscale(la.column(a, k), x) for k, x in v.items())
    assert la.matvec(a, v) == expected
