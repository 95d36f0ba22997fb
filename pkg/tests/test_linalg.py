"""Exact linear algebra substrate: rref, inversion, quotient spaces."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebroid.linalg import (Mat, QuotientSpace, Singular, full_space, invert_map, kernel,
                              quotient_by, rank, rref, solve)
from algebroid.scalars import GF, QQ


def M(rows):
    return Mat.from_rows([[Fraction(x) for x in r] for r in rows], QQ)


def test_rref_zero_matrix():
    red, pivots = rref(M([[0, 0], [0, 0]]))
    assert red.dense() == [[0, 0], [0, 0]]
    assert pivots == []


def test_rref_identity():
    red, pivots = rref(M([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert red == Mat.identity(3, QQ)
    assert pivots == [0, 1, 2]


def test_rref_rank_one():
    # hand row-reduction: R2 -> R2 - (1/2) R1, then normalize R1
    red, pivots = rref(M([[2, 4], [1, 2]]))
    assert red.dense() == [[1, 2], [0, 0]]
    assert pivots == [0]


def test_invert_identity_and_swap():
    assert invert_map(Mat.identity(2, QQ)) == Mat.identity(2, QQ)
    swap = M([[0, 1], [1, 0]])
    assert invert_map(swap) == swap


def test_invert_triangular():
    # 2x2 inverse formula: [[1,1],[0,1]]^-1 = [[1,-1],[0,1]]
    assert invert_map(M([[1, 1], [0, 1]])) == M([[1, -1], [0, 1]])


def test_invert_singular_raises():
    with pytest.raises(Singular):
        invert_map(M([[1, 2], [2, 4]]))
    with pytest.raises(Singular):
        invert_map(Mat.zeros(2, 3, QQ))


def test_quotient_no_relations():
    q = quotient_by(2, [], QQ)
    assert q.dim == 2
    assert q.projection == Mat.identity(2, QQ)


def test_quotient_one_relation():
    # rank-nullity: dim = 2 - rank([[1,-1]]) = 1
    q = quotient_by(2, [[Fraction(1), Fraction(-1)]], QQ)
    assert q.dim == 1
    assert q.project([Fraction(1), Fraction(0)]) == q.project([Fraction(0), Fraction(1)])


def test_quotient_full_span():
    rels = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    q = quotient_by(3, rels, QQ)
    assert q.dim == 0


def _quotient_invariants(q: QuotientSpace):
    assert q.projection @ q.section == Mat.identity(q.dim, q.projection.field)
    for i in range(q.relations.nrows):
        assert not q.project_dict(q.relations.rows[i])


def test_quotient_invariants_examples():
    _quotient_invariants(quotient_by(4, [[1, 2, 3, 4], [0, 1, 0, 1]], QQ))
    _quotient_invariants(quotient_by(3, [[1, 1, 1]], QQ))
    _quotient_invariants(full_space(5, QQ))


small_entries = st.integers(min_value=-4, max_value=4)


@st.composite
def rational_matrices(draw):
    nrows = draw(st.integers(min_value=1, max_value=4))
    ncols = draw(st.integers(min_value=1, max_value=4))
    rows = [[Fraction(draw(small_entries)) for _ in range(ncols)] for _ in range(nrows)]
    return Mat.from_rows(rows, QQ)


@given(rational_matrices())
@settings(max_examples=60, deadline=None)
def test_rref_idempotent(m):
    red, _ = rref(m)
    red2, _ = rref(red)
    assert red == red2


@given(rational_matrices())
@settings(max_examples=60, deadline=None)
def test_quotient_projection_section_identity(m):
    q = quotient_by(m.ncols, m.dense(), QQ)
    _quotient_invariants(q)
    assert q.dim == m.ncols - rank(m)


@given(rational_matrices())
@settings(max_examples=40, deadline=None)
def test_kernel_is_annihilated(m):
    for v in kernel(m):
        assert not any(m.apply(v))


def test_invert_roundtrip_gf():
    f = GF(7)
    m = Mat.from_rows([[f.of(2), f.of(1)], [f.of(1), f.of(1)]], f)
    inv = invert_map(m)
    assert inv @ m == Mat.identity(2, f)
    assert m @ inv == Mat.identity(2, f)


def test_solve_consistent_and_inconsistent():
    m = M([[1, 2], [2, 4]])
    assert solve(m, [Fraction(1), Fraction(2)]) is not None
    assert solve(m, [Fraction(1), Fraction(3)]) is None
