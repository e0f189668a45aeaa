import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ternalg.errors import DimensionMismatch, SingularMatrix
from ternalg.linalg import (
    InterMap,
    Matrix,
    Tensor3,
    Tensor4,
    Vec,
    apply_bilinear,
    apply_trilinear,
    invert,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def rand_vec(rng, n):
    return Vec([Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)])


def trunc_product(n):
    return Tensor3.build(n, lambda i, j, k: 1 if i + j == k else 0)


def fil4_bracket():
    from ternalg.catalog import fil4

    return fil4().bracket


# -- scalar layer sanity ----------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(rationals, rationals, rationals)
def test_scalar_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


def test_scalar_lowest_terms():
    x = Fraction(6, 4)
    assert (x.numerator, x.denominator) == (3, 2)
    assert Fraction(1, -2).denominator == 2


# -- apply_bilinear ----------------------------------------------------------

def test_bilinear_zero_tensor():
    t = Tensor3.zero(3)
    rng = random.Random(1)
    assert apply_bilinear(t, rand_vec(rng, 3), rand_vec(rng, 3)) == Vec.zero(3)


def test_bilinear_trunc3_monomial():
    t = trunc_product(3)
    e2 = Vec.basis(3, 1)  # t
    assert apply_bilinear(t, e2, e2) == Vec.basis(3, 2)  # t^2


def test_bilinear_matches_polynomial_product():
    # independent oracle: truncated coefficientwise polynomial multiplication
    n = 4
    t = trunc_product(n)
    rng = random.Random(7)
    for _ in range(25):
        x, y = rand_vec(rng, n), rand_vec(rng, n)
        conv = [Fraction(0)] * n
        for i in range(n):
            for j in range(n):
                if i + j < n:
                    conv[i + j] += x[i] * y[j]
        assert apply_bilinear(t, x, y) == Vec(conv)


def test_bilinear_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        apply_bilinear(trunc_product(3), Vec.zero(2), Vec.zero(3))


# -- apply_trilinear ---------------------------------------------------------

def test_trilinear_table_values():
    f = fil4_bracket()
    e = [Vec.basis(4, i) for i in range(4)]
    assert apply_trilinear(f, e[0], e[1], e[2]) == e[3]
    assert apply_trilinear(f, e[0], e[0], e[2]) == Vec.zero(4)
    assert apply_trilinear(f, e[1], e[0], e[2]) == -e[3]


@settings(max_examples=40, deadline=None)
@given(rationals, rationals, st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_multilinearity_first_slot(a, b, i, j, k):
    t = trunc_product(3)
    x, y, z = Vec.basis(3, i), Vec.basis(3, j), Vec.basis(3, k)
    lhs = apply_bilinear(t, x.scale(a) + y.scale(b), z)
    rhs = apply_bilinear(t, x, z).scale(a) + apply_bilinear(t, y, z).scale(b)
    assert lhs == rhs


def test_trilinearity_random_exact():
    f = fil4_bracket()
    rng = random.Random(3)
    for _ in range(20):
        x, y, z, w = (rand_vec(rng, 4) for _ in range(4))
        a = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        lhs = apply_trilinear(f, x, y.scale(a) + z, w)
        rhs = apply_trilinear(f, x, y, w).scale(a) + apply_trilinear(f, x, z, w)
        assert lhs == rhs


# -- invert -------------------------------------------------------------------

def test_invert_identity():
    assert invert(Matrix.identity(3)) == Matrix.identity(3)


def test_invert_rotation():
    m = Matrix([[0, 1], [-1, 0]])
    assert invert(m) == Matrix([[0, -1], [1, 0]])


def test_invert_singular():
    with pytest.raises(SingularMatrix):
        invert(Matrix([[1, 1], [1, 1]]))


def test_invert_non_square():
    with pytest.raises(DimensionMismatch):
        invert(Matrix.zero(2, 3))


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=9, max_size=9))
def test_invert_roundtrip(flat):
    m = Matrix([flat[0:3], flat[3:6], flat[6:9]])
    try:
        mi = invert(m)
    except SingularMatrix:
        return
    assert m @ mi == Matrix.identity(3)
    assert mi @ m == Matrix.identity(3)


# -- misc ----------------------------------------------------------------------

def test_matrix_apply_and_matmul():
    m = Matrix([[1, 2], [3, 4]])
    assert m.apply(Vec([1, 1])) == Vec([3, 7])
    assert m @ Matrix.identity(2) == m
    assert m.T == Matrix([[1, 3], [2, 4]])


def test_intermap_dims():
    t = InterMap(Matrix.zero(4, 2))
    assert t.src_dim == 2 and t.dst_dim == 4
    assert t.apply(Vec([1, 1])) == Vec.zero(4)


def test_tensor_shape_validation():
    with pytest.raises(DimensionMismatch):
        Tensor3([[[0]], [[0]]])
    with pytest.raises(DimensionMismatch):
        Tensor4([[[[0, 0]]]])
