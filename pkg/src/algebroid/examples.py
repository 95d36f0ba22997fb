"""Built-in generators of Hopf algebroids and their modules at desk scale.

Three families:
  * group algebras kG (base = ground field, Delta(g) = g (x) g, S = inverse),
  * groupoid algebras (base = functions on objects, genuinely nontrivial
    balanced tensors; the counit of an arrow is the indicator of its target
    object),
  * enveloping algebroids A^e = A (x) A^op (source/target genuinely
    distinct, S = swap).

Every generator is deterministic: the same spec yields bit-identical
structure constants, so emitted bundles are byte-stable.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import AlgebraMap, FinDimAlgebra, enveloping, opposite
from .bialgebroid import LeftBialgebroid
from .hopf import HopfAlgebroid
from .linalg import Mat
from .scalars import QQ, Field


class InvalidTable(ValueError):
    pass


class NotGroupoid(ValueError):
    pass


def ground_field_algebra(field: Field) -> FinDimAlgebra:
    one = field.one()
    return FinDimAlgebra(1, [[[one]]], [one], field, name="k")


def group_algebra_hopf(table: list[list[int]], field: Field = QQ,
                       name: str = "group") -> HopfAlgebroid:
    """Hopf algebroid of a finite group given by its multiplication table;
    index 0 must be the identity."""
    n = len(table)
    for row in table:
        if len(row) != n or sorted(row) != list(range(n)):
            raise InvalidTable("table rows must be permutations of 0..n-1")
    if any(table[0][j] != j or table[j][0] != j for j in range(n)):
        raise InvalidTable("index 0 must be the identity element")
    inv = [0] * n
    for i in range(n):
        hits = [j for j in range(n) if table[i][j] == 0]
        if len(hits) != 1:
            raise InvalidTable(f"element {i} has no unique inverse")
        inv[i] = hits[0]
    z, one = field.zero(), field.one()
    mul = [[[one if k == table[i][j] else z for k in range(n)] for j in range(n)]
           for i in range(n)]
    unit = [one] + [z] * (n - 1)
    h = FinDimAlgebra(n, mul, unit, field, name=name)
    base = ground_field_algebra(field)
    embed = Mat.from_cols([h.unit], n, field)
    s = AlgebraMap(base, h, embed, variant="algebra")
    t = AlgebraMap(base, h, embed, variant="anti")
    cop = Mat(n * n, n, field)
    for g in range(n):
        cop.rows[g * n + g][g] = one
    counit = Mat(1, n, field)
    for g in range(n):
        counit.rows[0][g] = one
    left = LeftBialgebroid(h, base, s, t, cop, counit, name=name)
    smat = Mat(n, n, field)
    for g in range(n):
        smat.rows[inv[g]][g] = one
    return HopfAlgebroid.from_left(left, smat, name=name)


def groupoid_algebra_hopf(n_objects: int, arrows: list[tuple[int, int]],
                          compose: dict, inverse: list[int], field: Field = QQ,
                          name: str = "groupoid") -> HopfAlgebroid:
    """Hopf algebroid of a finite groupoid.

    arrows[i] = (source, target); compose[(i, j)] = index of arrow_i after
    arrow_j (defined exactly when source(i) == target(j)); inverse[i] is the
    inverse arrow.  The first n_objects arrows must be the identities.
    """
    n = len(arrows)
    for o in range(n_objects):
        if o >= n or arrows[o] != (o, o):
            raise NotGroupoid("identity arrows must come first, one per object")
    for i, (src, tgt) in enumerate(arrows):
        if not (0 <= src < n_objects and 0 <= tgt < n_objects):
            raise NotGroupoid(f"arrow {i} has bad endpoints")
        j = inverse[i]
        if arrows[j] != (tgt, src):
            raise NotGroupoid(f"inverse of arrow {i} has wrong endpoints")
        if compose.get((i, j)) != tgt:
            raise NotGroupoid(f"arrow {i} times its inverse is not an identity")
        if compose.get((j, i)) != src:
            raise NotGroupoid(f"inverse of arrow {i} times it is not an identity")
    for (i, j), k in compose.items():
        si, ti = arrows[i]
        sj, tj = arrows[j]
        if si != tj:
            raise NotGroupoid(f"composite ({i},{j}) declared but not composable")
        if arrows[k] != (sj, ti):
            raise NotGroupoid(f"composite ({i},{j}) has wrong endpoints")
    for i, (si, ti) in enumerate(arrows):
        for j, (sj, tj) in enumerate(arrows):
            if si == tj and (i, j) not in compose:
                raise NotGroupoid(f"missing composite ({i},{j})")

    z, one = field.zero(), field.one()
    mul = [[[one if (i, j) in compose and compose[(i, j)] == k else z for k in range(n)]
            for j in range(n)] for i in range(n)]
    unit = [one if i < n_objects else z for i in range(n)]
    h = FinDimAlgebra(n, mul, unit, field, name=name)
    base = FinDimAlgebra(
        n_objects,
        [[[one if i == j == k else z for k in range(n_objects)] for j in range(n_objects)]
         for i in range(n_objects)],
        [one] * n_objects, field, name=f"{name}-base")
    embed = Mat(n, n_objects, field)
    for o in range(n_objects):
        embed.rows[o][o] = one
    s = AlgebraMap(base, h, embed, variant="algebra")
    t = AlgebraMap(base, h, embed, variant="anti")
    cop = Mat(n * n, n, field)
    for g in range(n):
        cop.rows[g * n + g][g] = one
    counit = Mat(n_objects, n, field)
    for g, (_, tgt) in enumerate(arrows):
        counit.rows[tgt][g] = one
    left = LeftBialgebroid(h, base, s, t, cop, counit, name=name)
    smat = Mat(n, n, field)
    for g in range(n):
        smat.rows[inverse[g]][g] = one
    return HopfAlgebroid.from_left(left, smat, name=name)


def enveloping_hopf(a: FinDimAlgebra, name: str = "") -> HopfAlgebroid:
    """The enveloping Hopf algebroid H = A (x) A^op with s(a) = a (x) 1,
    t(b) = 1 (x) b, Delta(a (x) b) = (a (x) 1) (x) (1 (x) b), eps = mult,
    S = swap."""
    field = a.field
    n = a.dim
    h = enveloping(a)
    name = name or (f"env({a.name})" if a.name else "env")
    h.name = name
    base = FinDimAlgebra(n, a.mul, a.unit, field, name=a.name or "A")
    z = field.zero()
    s_cols = []
    t_cols = []
    for i in range(n):
        sv = [z] * (n * n)
        tv = [z] * (n * n)
        for k, c in enumerate(a.unit):
            if c:
                sv[i * n + k] = c
                tv[k * n + i] = c
        s_cols.append(sv)
        t_cols.append(tv)
    s = AlgebraMap(base, h, Mat.from_cols(s_cols, n * n, field), variant="algebra")
    t = AlgebraMap(base, h, Mat.from_cols(t_cols, n * n, field), variant="anti")
    cop = Mat(n * n * n * n, n * n, field)
    for i in range(n):
        for j in range(n):
            col = i * n + j
            for k, ck in enumerate(a.unit):
                if not ck:
                    continue
                for l, cl in enumerate(a.unit):
                    if cl:
                        row = (i * n + k) * (n * n) + (l * n + j)
                        cop.rows[row][col] = ck * cl
    counit = Mat(n, n * n, field)
    for i in range(n):
        for j in range(n):
            prod = a.mul[i][j]
            for k, c in enumerate(prod):
                if c:
                    counit.rows[k][i * n + j] = c
    left = LeftBialgebroid(h, base, s, t, cop, counit, name=name)
    smat = Mat(n * n, n * n, field)
    one = field.one()
    for i in range(n):
        for j in range(n):
            smat.rows[j * n + i][i * n + j] = one
    return HopfAlgebroid.from_left(left, smat, name=name)


# -- concrete base algebras ----------------------------------------------


def qq_squared(field: Field = QQ) -> FinDimAlgebra:
    """k x k: two orthogonal idempotents."""
    z, one = field.zero(), field.one()
    mul = [[[one, z], [z, z]], [[z, z], [z, one]]]
    return FinDimAlgebra(2, mul, [one, one], field, name="kxk")


def upper_triangular_2x2(field: Field = QQ) -> FinDimAlgebra:
    """Upper-triangular 2x2 matrices: basis E11, E12, E22 (noncommutative)."""
    z, one = field.zero(), field.one()
    zero3 = [z, z, z]
    mul = [[list(zero3) for _ in range(3)] for _ in range(3)]
    mul[0][0][0] = one  # E11 E11 = E11
    mul[0][1][1] = one  # E11 E12 = E12
    mul[1][2][1] = one  # E12 E22 = E12
    mul[2][2][2] = one  # E22 E22 = E22
    return FinDimAlgebra(3, mul, [one, z, one], field, name="tri2")


# -- group/groupoid tables -------------------------------------------------


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def s3_table() -> list[list[int]]:
    """S3 as permutations of {0,1,2} in lexicographic one-line order:
    0:(012) id, 1:(021), 2:(102), 3:(120), 4:(201), 5:(210)."""
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            comp = tuple(p[q[k]] for k in range(3))
            row.append(index[comp])
        table.append(row)
    return table


def two_object_groupoid():
    """Objects {0,1}, one invertible arrow each way: arrows id0, id1, f:0->1,
    g = f^{-1}:1->0."""
    arrows = [(0, 0), (1, 1), (0, 1), (1, 0)]
    compose = {}
    for i, (si, ti) in enumerate(arrows):
        for j, (sj, tj) in enumerate(arrows):
            if si != tj:
                continue
            # composite i after j: sj -> ti; pick the unique such arrow
            for k, (sk, tk) in enumerate(arrows):
                if (sk, tk) == (sj, ti):
                    compose[(i, j)] = k
                    break
    inverse = [0, 1, 3, 2]
    return 2, arrows, compose, inverse


EXAMPLES = ("z2", "z3", "s3", "groupoid2", "env_kxk", "env_tri2")


@lru_cache(maxsize=None)
def build_example(key: str, field_name: str = "q") -> HopfAlgebroid:
    from .scalars import field_from_name
    field = field_from_name(field_name)
    if key == "z2":
        return group_algebra_hopf(cyclic_table(2), field, name="z2")
    if key == "z3":
        return group_algebra_hopf(cyclic_table(3), field, name="z3")
    if key == "s3":
        return group_algebra_hopf(s3_table(), field, name="s3")
    if key == "groupoid2":
        n, arrows, compose, inverse = two_object_groupoid()
        return groupoid_algebra_hopf(n, arrows, compose, inverse, field, name="groupoid2")
    if key == "env_kxk":
        return enveloping_hopf(qq_squared(field), name="env_kxk")
    if key == "env_tri2":
        return enveloping_hopf(upper_triangular_2x2(field), name="env_tri2")
    raise KeyError(f"unknown example {key!r}")


def derived_yd_examples(h: HopfAlgebroid) -> dict:
    """The standard module bundle of one Hopf algebroid: the regular full
    Hopf bimodule, its two coinvariant YD modules, and the unit YD module."""
    from .modules import coinvariants, regular_hopf_bimodule, unit_yd
    regular = regular_hopf_bimodule(h, full=True)
    kl, coinv_l = coinvariants(regular, "left")
    kr, coinv_r = coinvariants(regular, "right")
    return {
        "regular": regular,
        "coinvariants_left": (kl, coinv_l),
        "coinvariants_right": (kr, coinv_r),
        "unit": unit_yd(h),
    }
