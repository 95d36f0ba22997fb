"""Finite-dimensional associative unital algebras given by structure constants.

An algebra is the table c[i][j] expanding basis_i * basis_j in the basis,
plus a unit vector.  Associativity and unit laws are decidable by finite
enumeration and `check_algebra` enumerates every violated triple.
"""

from __future__ import annotations

from .linalg import Mat
from .reports import Report
from .scalars import Field


class FinDimAlgebra:
    """Structure-constant algebra: mul[i][j] is the vector of b_i * b_j."""

    def __init__(self, dim: int, mul, unit, field: Field, name: str = ""):
        self.dim = dim
        self.field = field
        self.name = name
        if len(mul) != dim or any(len(r) != dim for r in mul):
            raise ValueError("structure constant table has wrong shape")
        self.mul = [[list(mul[i][j]) for j in range(dim)] for i in range(dim)]
        self.unit = list(unit)
        self._lmul: list[Mat] | None = None
        self._rmul: list[Mat] | None = None

    # -- multiplication -------------------------------------------------

    def multiply(self, u, v):
        """Bilinear extension of the structure constants."""
        z = self.field.zero()
        out = [z] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for k, s in enumerate(self.mul[i][j]):
                    if s:
                        out[k] = out[k] + c * s
        return out

    def left_mul(self, i: int) -> Mat:
        """Matrix of x -> b_i * x."""
        if self._lmul is None:
            self._lmul = [Mat.from_cols([self.mul[i][j] for j in range(self.dim)],
                                        self.dim, self.field)
                          for i in range(self.dim)]
        return self._lmul[i]

    def right_mul(self, j: int) -> Mat:
        """Matrix of x -> x * b_j."""
        if self._rmul is None:
            self._rmul = [Mat.from_cols([self.mul[i][j] for i in range(self.dim)],
                                        self.dim, self.field)
                          for j in range(self.dim)]
        return self._rmul[j]

    def left_mul_by(self, vec) -> Mat:
        """Matrix of x -> vec * x for a fixed element vec."""
        out = Mat.zeros(self.dim, self.dim, self.field)
        for i, a in enumerate(vec):
            if a:
                out = out + self.left_mul(i).scale(a)
        return out

    def right_mul_by(self, vec) -> Mat:
        out = Mat.zeros(self.dim, self.dim, self.field)
        for j, a in enumerate(vec):
            if a:
                out = out + self.right_mul(j).scale(a)
        return out

    def mult_mat(self) -> Mat:
        """Multiplication as a linear map A (x) A -> A (row-major pair index)."""
        out = Mat(self.dim, self.dim * self.dim, self.field)
        for i in range(self.dim):
            for j in range(self.dim):
                for k, s in enumerate(self.mul[i][j]):
                    if s:
                        out.rows[k][i * self.dim + j] = s
        return out

    def basis_vec(self, i: int):
        z = self.field.zero()
        v = [z] * self.dim
        v[i] = self.field.one()
        return v

    def __repr__(self):
        return f"FinDimAlgebra({self.name or '?'}, dim={self.dim})"


def check_algebra(a: FinDimAlgebra) -> Report:
    """Verify associativity on all basis triples and the two-sided unit law."""
    rep = Report(f"algebra:{a.name or '?'}")
    fmt = a.field.fmt
    for i in range(a.dim):
        lhs = a.multiply(a.unit, a.basis_vec(i))
        if lhs != a.basis_vec(i):
            rep.add("unit-left", {"i": i}, [fmt(x) for x in lhs])
        rhs = a.multiply(a.basis_vec(i), a.unit)
        if rhs != a.basis_vec(i):
            rep.add("unit-right", {"i": i}, [fmt(x) for x in rhs])
    for i in range(a.dim):
        for j in range(a.dim):
            ij = a.mul[i][j]
            for k in range(a.dim):
                lhs = a.multiply(ij, a.basis_vec(k))
                rhs = a.multiply(a.basis_vec(i), a.mul[j][k])
                if lhs != rhs:
                    rep.add("associativity", {"i": i, "j": j, "k": k},
                            [fmt(x) for x in lhs], [fmt(x) for x in rhs])
    return rep


def opposite(a: FinDimAlgebra) -> FinDimAlgebra:
    """Same space, reversed multiplication."""
    mul = [[a.mul[j][i] for j in range(a.dim)] for i in range(a.dim)]
    return FinDimAlgebra(a.dim, mul, a.unit, a.field, name=f"{a.name}^op" if a.name else "op")


def enveloping(a: FinDimAlgebra) -> FinDimAlgebra:
    """A^e = A (x) A^op with componentwise product; pair (i,j) -> i*dim+j."""
    n = a.dim
    z = a.field.zero()
    mul = []
    for i1 in range(n):
        for j1 in range(n):
            row = []
            for i2 in range(n):
                for j2 in range(n):
                    first = a.mul[i1][i2]
                    second = a.mul[j2][j1]  # opposite order in the second leg
                    vec = [z] * (n * n)
                    for k1, c1 in enumerate(first):
                        if not c1:
                            continue
                        for k2, c2 in enumerate(second):
                            if c2:
                                vec[k1 * n + k2] = c1 * c2
                    row.append(vec)
            mul.append(row)
    unit = [z] * (n * n)
    for i, ci in enumerate(a.unit):
        if not ci:
            continue
        for j, cj in enumerate(a.unit):
            if cj:
                unit[i * n + j] = ci * cj
    return FinDimAlgebra(n * n, mul, unit, a.field, name=f"{a.name}^e" if a.name else "env")


class AlgebraMap:
    """Linear map between algebras, flagged algebra or anti-algebra."""

    def __init__(self, source: FinDimAlgebra, target: FinDimAlgebra, matrix: Mat,
                 variant: str = "algebra"):
        if variant not in ("algebra", "anti"):
            raise ValueError(f"bad variant {variant!r}")
        if matrix.ncols != source.dim or matrix.nrows != target.dim:
            raise ValueError("matrix shape does not match algebras")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.variant = variant

    def apply(self, vec):
        return self.matrix.apply(vec)

    def __repr__(self):
        return f"AlgebraMap({self.variant}, {self.source.dim}->{self.target.dim})"


def check_algebra_map(f: AlgebraMap) -> Report:
    """f(1)=1 and multiplicativity (with the anti twist) on all basis pairs."""
    rep = Report("algebra-map")
    src, tgt = f.source, f.target
    fmt = tgt.field.fmt
    img_unit = f.apply(src.unit)
    if img_unit != tgt.unit:
        rep.add("unitality", None, [fmt(x) for x in img_unit], [fmt(x) for x in tgt.unit])
    images = [f.apply(src.basis_vec(i)) for i in range(src.dim)]
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = f.apply(src.mul[i][j])
            if f.variant == "algebra":
                rhs = tgt.multiply(images[i], images[j])
            else:
                rhs = tgt.multiply(images[j], images[i])
            if lhs != rhs:
                rep.add("multiplicativity", {"i": i, "j": j},
                        [fmt(x) for x in lhs], [fmt(x) for x in rhs])
    return rep


def images_commute(f: AlgebraMap, g: AlgebraMap) -> bool:
    if f.target is not g.target and f.target.mul != g.target.mul:
        raise ValueError("maps must share a target algebra")
    tgt = f.target
    fi = [f.apply(f.source.basis_vec(i)) for i in range(f.source.dim)]
    gi = [g.apply(g.source.basis_vec(i)) for i in range(g.source.dim)]
    for u in fi:
        for v in gi:
            if tgt.multiply(u, v) != tgt.multiply(v, u):
                return False
    return True
