"""Structure-constant algebras, algebra maps, opposite and enveloping."""

from fractions import Fraction

from algebroid.algebra import (AlgebraMap, FinDimAlgebra, check_algebra, check_algebra_map,
                               enveloping, images_commute, opposite)
from algebroid.linalg import Mat
from algebroid.scalars import QQ

F = Fraction


def ground_field():
    return FinDimAlgebra(1, [[[F(1)]]], [F(1)], QQ, name="k")


def group_algebra(table):
    """Algebra of a finite group given by its multiplication table (index 0 = e)."""
    n = len(table)
    z = F(0)
    mul = [[[F(1) if k == table[i][j] else z for k in range(n)] for j in range(n)]
           for i in range(n)]
    unit = [F(1)] + [z] * (n - 1)
    return FinDimAlgebra(n, mul, unit, QQ, name="group")


Z2 = [[0, 1], [1, 0]]


def qq_squared():
    z = F(0)
    mul = [[[F(1), z], [z, z]], [[z, z], [z, F(1)]]]
    return FinDimAlgebra(2, [[mul[i][j] if i == j else [z, z] for j in range(2)]
                             for i in range(2)], [F(1), F(1)], QQ, name="QxQ")


def matrix_algebra_2x2():
    """M_2 with basis E11,E12,E21,E22: E_ij E_kl = [j==k] E_il."""
    idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    z = F(0)
    mul = [[[z] * 4 for _ in range(4)] for _ in range(4)]
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                mul[a][b][idx[(i, l)]] = F(1)
    unit = [F(1), z, z, F(1)]
    return FinDimAlgebra(4, mul, unit, QQ, name="M2")


def test_ground_field_passes():
    assert check_algebra(ground_field()).ok


def test_group_algebra_z2_passes():
    # oracle: the group table itself is associative and unital
    assert check_algebra(group_algebra(Z2)).ok


def test_broken_unit_law_reported():
    # b1*b1 = b2, b2*b1 = b1, declared unit b1: unit law fails
    z = F(0)
    mul = [[[z, F(1)], [z, z]], [[F(1), z], [z, z]]]
    rep = check_algebra(FinDimAlgebra(2, mul, [F(1), z], QQ))
    assert not rep.ok
    assert any(v.clause.startswith("unit") for v in rep.violations)


def test_opposite_involution():
    a = matrix_algebra_2x2()
    assert opposite(opposite(a)).mul == a.mul
    c = qq_squared()
    assert opposite(c).mul == c.mul  # commutative


def test_enveloping_of_ground_field():
    e = enveloping(ground_field())
    assert e.dim == 1
    assert check_algebra(e).ok


def test_enveloping_qq_squared():
    # direct structure-constant computation: 4 orthogonal idempotents e_i (x) e_j
    e = enveloping(qq_squared())
    assert e.dim == 4
    assert check_algebra(e).ok
    for i in range(4):
        ei = e.basis_vec(i)
        assert e.multiply(ei, ei) == ei
        for j in range(4):
            if i != j:
                assert not any(e.multiply(ei, e.basis_vec(j)))


def test_enveloping_preserves_validity():
    assert check_algebra(enveloping(matrix_algebra_2x2())).ok


def test_identity_map_passes():
    a = group_algebra(Z2)
    assert check_algebra_map(AlgebraMap(a, a, Mat.identity(2, QQ))).ok


def test_group_inverse_is_anti_map():
    a = group_algebra(Z2)
    s = Mat.identity(2, QQ)  # g^-1 = g in Z2
    assert check_algebra_map(AlgebraMap(a, a, s, variant="anti")).ok


def test_swap_on_enveloping_is_anti_map():
    a = qq_squared()
    e = enveloping(a)
    n = a.dim
    swap = Mat.zeros(n * n, n * n, QQ)
    for i in range(n):
        for j in range(n):
            swap.rows[j * n + i][i * n + j] = F(1)
    assert check_algebra_map(AlgebraMap(e, e, swap, variant="anti")).ok


def test_non_multiplicative_map_reported():
    a = group_algebra(Z2)
    bad = Mat.from_rows([[F(1), F(1)], [F(0), F(1)]], QQ)
    rep = check_algebra_map(AlgebraMap(a, a, bad))
    assert not rep.ok


def test_images_commute_central_scalars():
    k = ground_field()
    a = group_algebra(Z2)
    unit_embed = Mat.from_cols([a.unit], 2, QQ)
    s = AlgebraMap(k, a, unit_embed)
    t = AlgebraMap(k, a, unit_embed, variant="anti")
    assert images_commute(s, t)


def test_images_commute_fails_on_m2():
    m2 = matrix_algebra_2x2()
    ident = AlgebraMap(m2, m2, Mat.identity(4, QQ))
    assert not images_commute(ident, ident)
