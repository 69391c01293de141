from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ihtools.exactla import (DimensionMismatch, QMatrix, Subspace, annihilator, apply_to_subspace, image_basis,
                             kernel_basis, preimage, rank, reduce_columns)

small = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return QMatrix.from_dense(draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


@st.composite
def subspaces(draw, max_dim=5):
    n = draw(st.integers(1, max_dim))
    vecs = draw(st.lists(st.lists(small, min_size=n, max_size=n), max_size=n + 1))
    return Subspace.span(n, vecs)


def test_rank_example():
    m = QMatrix.from_dense([[1, 2], [2, 4]])
    assert rank(m) == 1
    k = kernel_basis(m)
    assert k.rank == 1
    assert k.contains_vector([-2, 1])


def test_exact_rationals():
    m = QMatrix.from_dense([[Fraction(1, 3), Fraction(1, 2)], [Fraction(2, 3), 1]])
    assert rank(m) == 1
    assert m.apply([3, -2]) == [0, 0]


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        QMatrix.from_dense([[1, 2]]) @ QMatrix.from_dense([[1, 2]])
    with pytest.raises(DimensionMismatch):
        Subspace(2) + Subspace(3)


def test_canonical_form_is_syntactic():
    a = Subspace.span(3, [[1, 1, 0], [0, 1, 1]])
    b = Subspace.span(3, [[1, 2, 1], [2, 0, -2]])
    assert a == b and hash(a) == hash(b)
    assert a.pivots == b.pivots


def test_intersection_and_preimage():
    a = Subspace.span(3, [[1, 0, 0], [0, 1, 0]])
    b = Subspace.span(3, [[0, 1, 0], [0, 0, 1]])
    assert (a & b) == Subspace.span(3, [[0, 1, 0]])
    proj = QMatrix.from_dense([[1, 0, 0], [0, 0, 0]])
    pre = preimage(proj, Subspace.zero(2))
    assert pre == Subspace.span(3, [[0, 1, 0], [0, 0, 1]])


def test_reduce_columns_tracks_kernel():
    cols = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}]
    ech, ker = reduce_columns(cols, track=True)
    assert len(ech) == 2 and len(ker) == 1
    m = QMatrix.from_columns(3, cols)
    v = [ker[0].get(j, 0) for j in range(3)]
    assert m.apply(v) == [0, 0, 0]


@settings(max_examples=1000)
@given(matrices())
def test_rank_nullity(m):
    r = rank(m)
    k = kernel_basis(m)
    assert r + k.rank == m.cols
    assert r == image_basis(m).rank == rank(m.transpose())
    for v in k.dense_vectors():
        assert not any(m.apply(v))


@settings(max_examples=200)
@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == sympy.Matrix(m.to_dense()).rank()


@settings(max_examples=1000)
@given(subspaces())
def test_annihilator_involution(s):
    ann = annihilator(s)
    assert ann.rank + s.rank == s.ambient_dim
    assert annihilator(ann) == s
    for u in ann.dense_vectors():
        for v in s.dense_vectors():
            assert sum(a * b for a, b in zip(u, v)) == 0


@settings(max_examples=300)
@given(subspaces(4), subspaces(4))
def test_sum_intersection_dimensions(a, b):
    if a.ambient_dim != b.ambient_dim:
        return
    assert (a + b).rank + (a & b).rank == a.rank + b.rank
    assert (a & b) <= a and a <= a + b


@settings(max_examples=300)
@given(matrices(4), st.data())
def test_preimage_contract(m, data):
    vecs = data.draw(st.lists(st.lists(small, min_size=m.rows, max_size=m.rows), max_size=m.rows))
    s = Subspace.span(m.rows, vecs)
    pre = preimage(m, s)
    assert s.contains(apply_to_subspace(m, pre))
    assert kernel_basis(m) <= pre
    # maximality: pre is the whole preimage of s intersected with im(m)
    assert apply_to_subspace(m, pre) == (s & image_basis(m))
