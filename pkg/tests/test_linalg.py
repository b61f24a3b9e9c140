"""Exact linear algebra: rank / kernel / image / homology bookkeeping."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcyclic.errors import CompositionNotZero
from hopfcyclic.fields import Field
from hopfcyclic.linalg import (
    SparseMatrix, Subspace, homology_dim, image, invert, kernel, rank, solve,
)

QQ = Field.rationals()
F2 = Field.prime(2)


def test_field_parse_roundtrip():
    assert QQ.parse("-3/6") == QQ.parse("-1/2")
    assert QQ.to_str(QQ.parse("4/2")) == "2"
    assert F2.parse("3") == 1
    assert F2.parse("1/1") == 1
    with pytest.raises(ValueError):
        Field.prime(6)


def test_rank_empty_matrix():
    m = SparseMatrix.zeros(QQ, 0, 0)
    assert rank(m) == 0


def test_rank_identity():
    assert rank(SparseMatrix.identity(QQ, 3)) == 3


def test_rank_ones_over_f2():
    m = SparseMatrix.from_rows(F2, [[1, 1], [1, 1]])
    assert rank(m) == 1


def test_kernel_identity_and_zero():
    assert kernel(SparseMatrix.identity(QQ, 4)).dim == 0
    assert kernel(SparseMatrix.zeros(QQ, 2, 3)).dim == 3


def test_kernel_row_vector():
    m = SparseMatrix.from_rows(QQ, [[1, 1]])
    k = kernel(m)
    assert k.dim == 1
    # span{(1, -1)} in echelon form
    assert k.basis == [{0: QQ.one(), 1: QQ.of(-1)}]


def test_image_cases():
    assert image(SparseMatrix.zeros(QQ, 3, 2)).dim == 0
    assert image(SparseMatrix.identity(QQ, 3)).dim == 3
    col = SparseMatrix.from_rows(QQ, [[1], [1]])
    im = image(col)
    assert im.dim == 1 and im.basis == [{0: QQ.one(), 1: QQ.one()}]


def test_homology_point_complex():
    z = SparseMatrix.zeros(QQ, 1, 1)
    assert homology_dim(z, z) == 1


def test_homology_id_kills():
    i1 = SparseMatrix.identity(QQ, 1)
    z = SparseMatrix.zeros(QQ, 1, 1)
    assert homology_dim(i1, z) == 0


def test_homology_two_step():
    # k <-(0)- k <-(id)- k : middle homology 0
    z = SparseMatrix.zeros(QQ, 1, 1)
    i1 = SparseMatrix.identity(QQ, 1)
    assert homology_dim(z, i1) == 0


def test_homology_rejects_nonzero_composition():
    i1 = SparseMatrix.identity(QQ, 1)
    with pytest.raises(CompositionNotZero):
        homology_dim(i1, i1)


def _random_matrix(field, rows, cols, rng, density=0.4):
    ent = {}
    for i in range(rows):
        for j in range(cols):
            if rng.random() < density:
                v = field.of(rng.randint(-3, 3))
                if not field.is_zero(v):
                    ent[(i, j)] = v
    return SparseMatrix(field, rows, cols, ent)


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6),
       st.integers(min_value=0, max_value=10**6))
@settings(max_examples=40, deadline=None)
def test_rank_nullity(rows, cols, seed):
    rng = random.Random(seed)
    for field in (QQ, F2):
        m = _random_matrix(field, rows, cols, rng)
        assert rank(m) + kernel(m).dim == cols


def test_image_inside_kernel_when_composition_zero():
    rng = random.Random(7)
    for _ in range(20):
        m = _random_matrix(QQ, 4, 3, rng)
        k = kernel(m)
        # build N with columns spanned by kernel vectors, so M @ N = 0
        cols = [k.basis[i % max(k.dim, 1)] if k.dim else {} for i in range(2)]
        ent = {}
        for j, c in enumerate(cols):
            for i, v in c.items():
                ent[(i, j)] = v
        n = SparseMatrix(QQ, 3, 2, ent)
        assert (m @ n).is_zero()
        for j in range(2):
            assert k.contains(n.column(j))
        assert all(image(n).contains(b) for b in image(n).basis)


def test_subspace_sum_and_coefficients():
    a = Subspace(QQ, 3, [{0: QQ.one()}])
    b = Subspace(QQ, 3, [{1: QQ.one()}])
    s = a.sum(b)
    assert s.dim == 2
    coeffs = s.coefficients({0: QQ.of(2), 1: QQ.of(-5)})
    assert coeffs == [QQ.of(2), QQ.of(-5)]
    assert s.coefficients({2: QQ.one()}) is None


def test_solve_and_invert():
    m = SparseMatrix.from_rows(QQ, [[2, 1], [1, 1]])
    x = solve(m, {0: QQ.of(3), 1: QQ.of(2)})
    assert m.apply(x) == {0: QQ.of(3), 1: QQ.of(2)}
    inv = invert(m)
    assert inv @ m == SparseMatrix.identity(QQ, 2)
    sing = SparseMatrix.from_rows(QQ, [[1, 1], [1, 1]])
    assert invert(sing) is None


def test_matmul_and_kron_shapes():
    a = SparseMatrix.from_rows(QQ, [[1, 2], [0, 1]])
    b = SparseMatrix.from_rows(QQ, [[1, 0], [1, 1]])
    assert (a @ b).to_rows() == SparseMatrix.from_rows(QQ, [[3, 2], [1, 1]]).to_rows()
    k = a.kron(b)
    assert k.rows == 4 and k.cols == 4
    # leftmost factor varies slowest: k[i1*2+i2, j1*2+j2] = a[i1,j1] b[i2,j2]
    assert k[(0, 0)] == QQ.one() and k[(1, 0)] == QQ.one()
    assert k[(2, 2)] == QQ.one() and k[(0, 1)] == 0 and k[(0, 2)] == QQ.of(2)
