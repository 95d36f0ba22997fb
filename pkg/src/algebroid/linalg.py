"""Exact sparse linear algebra: matrices, rref, kernels, quotient spaces.

Matrices follow the column convention fixed for the whole package: column j
is the image of basis vector j.  Rows are stored sparsely (dict of nonzero
entries); all arithmetic is exact field arithmetic.  Pivoting is
deterministic (first nonzero column, first nonzero row) so that every
derived basis and serialized output is bit-stable across runs.
"""

from __future__ import annotations

from .scalars import Field


class Singular(ValueError):
    """Raised when a map that must be invertible is not."""


class Mat:
    """Exact matrix with sparse rows over a `Field`."""

    __slots__ = ("nrows", "ncols", "field", "rows")

    def __init__(self, nrows: int, ncols: int, field: Field, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]

    # -- constructors -------------------------------------------------

    @staticmethod
    def identity(n: int, field: Field) -> "Mat":
        one = field.one()
        return Mat(n, n, field, [{i: one} for i in range(n)])

    @staticmethod
    def zeros(nrows: int, ncols: int, field: Field) -> "Mat":
        return Mat(nrows, ncols, field)

    @staticmethod
    def from_rows(rows, field: Field) -> "Mat":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        out = Mat(nrows, ncols, field)
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            out.rows[i] = {j: v for j, v in enumerate(row) if v}
        return out

    @staticmethod
    def from_cols(cols, nrows: int, field: Field) -> "Mat":
        out = Mat(nrows, len(cols), field)
        for j, col in enumerate(cols):
            for i, v in enumerate(col):
                if v:
                    out.rows[i][j] = v
        return out

    # -- basic views ---------------------------------------------------

    def dense(self):
        z = self.field.zero()
        return [[self.rows[i].get(j, z) for j in range(self.ncols)] for i in range(self.nrows)]

    def col(self, j: int):
        z = self.field.zero()
        return [self.rows[i].get(j, z) for i in range(self.nrows)]

    def entry(self, i: int, j: int):
        return self.rows[i].get(j, self.field.zero())

    def copy(self) -> "Mat":
        return Mat(self.nrows, self.ncols, self.field, [dict(r) for r in self.rows])

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def transpose(self) -> "Mat":
        out = Mat(self.ncols, self.nrows, self.field)
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                out.rows[j][i] = v
        return out

    # -- arithmetic ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        for r1, r2 in zip(self.rows, other.rows):
            keys = set(r1) | set(r2)
            z = self.field.zero()
            for k in keys:
                if r1.get(k, z) != r2.get(k, z):
                    return False
        return True

    def __add__(self, other: "Mat") -> "Mat":
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        out = self.copy()
        for i, row in enumerate(other.rows):
            tgt = out.rows[i]
            for j, v in row.items():
                nv = tgt.get(j)
                nv = v if nv is None else nv + v
                if nv:
                    tgt[j] = nv
                elif j in tgt:
                    del tgt[j]
        return out

    def __sub__(self, other: "Mat") -> "Mat":
        return self + other.scale(-self.field.one())

    def scale(self, c) -> "Mat":
        out = Mat(self.nrows, self.ncols, self.field)
        if not c:
            return out
        for i, row in enumerate(self.rows):
            out.rows[i] = {j: c * v for j, v in row.items()}
        return out

    def __matmul__(self, other: "Mat") -> "Mat":
        assert self.ncols == other.nrows, f"shape mismatch {self.ncols} vs {other.nrows}"
        out = Mat(self.nrows, other.ncols, self.field)
        for i, row in enumerate(self.rows):
            acc: dict = {}
            for k, a in row.items():
                for j, b in other.rows[k].items():
                    nv = acc.get(j)
                    prod = a * b
                    nv = prod if nv is None else nv + prod
                    acc[j] = nv
            out.rows[i] = {j: v for j, v in acc.items() if v}
        return out

    def apply(self, vec):
        """Apply to a dense vector, returning a dense vector."""
        assert len(vec) == self.ncols
        z = self.field.zero()
        out = []
        for row in self.rows:
            s = z
            for j, v in row.items():
                x = vec[j]
                if x:
                    s = s + v * x
            out.append(s)
        return out

    def apply_dict(self, vec: dict) -> dict:
        """Apply to a sparse vector {index: scalar}, returning a sparse vector."""
        acc: dict = {}
        for j, x in vec.items():
            if not x:
                continue
            for i, row in enumerate(self.rows):
                v = row.get(j)
                if v is not None:
                    nv = acc.get(i)
                    prod = v * x
                    acc[i] = prod if nv is None else nv + prod
        return {i: v for i, v in acc.items() if v}

    def kron(self, other: "Mat") -> "Mat":
        """Kronecker product; (A kron B)(e_i x e_j) = A e_i x B e_j."""
        out = Mat(self.nrows * other.nrows, self.ncols * other.ncols, self.field)
        for i1, r1 in enumerate(self.rows):
            for i2, r2 in enumerate(other.rows):
                if not r1 or not r2:
                    continue
                tgt = out.rows[i1 * other.nrows + i2]
                for j1, v1 in r1.items():
                    for j2, v2 in r2.items():
                        tgt[j1 * other.ncols + j2] = v1 * v2
        return out

    def stack_rows(self, other: "Mat") -> "Mat":
        assert self.ncols == other.ncols
        return Mat(self.nrows + other.nrows, self.ncols, self.field,
                   [dict(r) for r in self.rows] + [dict(r) for r in other.rows])

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols})"


# -- row reduction ------------------------------------------------------


def _eliminate(row: dict, f, prow: dict):
    """row -= f * prow, in place."""
    for j, v in prow.items():
        nv = row.get(j)
        dec = f * v
        nv = -dec if nv is None else nv - dec
        if nv:
            row[j] = nv
        elif j in row:
            del row[j]


def _rref_rows(rows: list[dict], ncols: int) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form on sparse rows; returns (rows, pivots).

    Incremental insertion against a pivot table: each row is reduced by the
    pivots seen so far and then registered under its leading column.  The
    rref of a matrix is unique, so this yields exactly the deterministic
    first-nonzero-column/first-nonzero-row reduction.
    """
    nrows = len(rows)
    piv: dict[int, dict] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            prow = piv.get(c)
            if prow is None:
                pv = row[c]
                one = pv / pv
                if pv != one:
                    inv = one / pv
                    row = {j: inv * v for j, v in row.items()}
                piv[c] = row
                break
            _eliminate(row, row[c], prow)
    pivots = sorted(piv)
    for c in reversed(pivots):
        prow = piv[c]
        for c2 in pivots:
            if c2 >= c:
                break
            f = piv[c2].get(c)
            if f is not None and f:
                _eliminate(piv[c2], f, prow)
    out = [piv[c] for c in pivots]
    out.extend({} for _ in range(nrows - len(out)))
    return out, pivots


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form with deterministic pivoting."""
    rows = [dict(r) for r in m.rows]
    rows, pivots = _rref_rows(rows, m.ncols)
    return Mat(m.nrows, m.ncols, m.field, rows), pivots


def kernel(m: Mat) -> list[list]:
    """Deterministic basis of the nullspace, as dense column vectors."""
    red, pivots = rref(m)
    pivset = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivset]
    z = m.field.zero()
    one = m.field.one()
    basis = []
    for f in free:
        v = [z] * m.ncols
        v[f] = one
        for i, p in enumerate(pivots):
            c = red.rows[i].get(f)
            if c is not None:
                v[p] = -c
        basis.append(v)
    return basis


def solve(m: Mat, b) -> list | None:
    """A particular solution of m x = b (dense vector b), or None."""
    rows = [dict(r) for r in m.rows]
    aug = m.ncols
    for i, x in enumerate(b):
        if x:
            rows[i][aug] = x
    rows, pivots = _rref_rows(rows, m.ncols + 1)
    z = m.field.zero()
    x = [z] * m.ncols
    for i, p in enumerate(pivots):
        if p == aug:
            return None  # inconsistent
        c = rows[i].get(aug)
        if c is not None:
            x[p] = c
    return x


def solve_matrix(m: Mat, b: Mat) -> Mat | None:
    """Solve m X = b column by column; None if any column is inconsistent."""
    cols = []
    for j in range(b.ncols):
        x = solve(m, b.col(j))
        if x is None:
            return None
        cols.append(x)
    return Mat.from_cols(cols, m.ncols, m.field)


def invert_map(m: Mat) -> Mat:
    """Exact inverse of a square matrix; raises Singular."""
    if m.nrows != m.ncols:
        raise Singular(f"not square: {m.nrows}x{m.ncols}")
    n = m.nrows
    rows = [dict(r) for r in m.rows]
    one = m.field.one()
    for i in range(n):
        rows[i][n + i] = one
    rows, pivots = _rref_rows(rows, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise Singular("matrix is singular")
    inv = Mat(n, n, m.field)
    for i in range(n):
        inv.rows[i] = {j - n: v for j, v in rows[i].items() if j >= n}
    return inv


def rank(m: Mat) -> int:
    return len(rref(m)[1])


# -- quotient spaces ----------------------------------------------------


class QuotientSpace:
    """An ambient space modulo the span of relation vectors.

    `projection` maps ambient coordinates onto the quotient, `section`
    embeds the quotient back choosing the canonical (non-pivot coordinate)
    representatives; projection @ section is the identity.
    """

    __slots__ = ("ambient_dim", "dim", "projection", "section", "relations", "name")

    def __init__(self, ambient_dim, dim, projection, section, relations, name: str = ""):
        self.ambient_dim = ambient_dim
        self.dim = dim
        self.projection = projection
        self.section = section
        self.relations = relations
        self.name = name

    def project(self, vec):
        return self.projection.apply(vec)

    def project_dict(self, vec: dict) -> dict:
        return self.projection.apply_dict(vec)

    def representative(self, qvec):
        return self.section.apply(qvec)

    def __repr__(self):
        return f"QuotientSpace({self.ambient_dim} -> {self.dim})"


def quotient_by(ambient_dim: int, relations, field: Field) -> QuotientSpace:
    """Quotient of k^ambient_dim by the span of `relations`.

    Relations may be dense vectors or sparse dicts.  The quotient basis is
    the set of non-pivot coordinates of the relation span under rref.
    """
    rows = []
    for rel in relations:
        if isinstance(rel, dict):
            row = {j: v for j, v in rel.items() if v}
        else:
            if len(rel) != ambient_dim:
                raise ValueError("relation has wrong length")
            row = {j: v for j, v in enumerate(rel) if v}
        if row:
            rows.append(row)
    rows, pivots = _rref_rows(rows, ambient_dim)
    pivset = set(pivots)
    free = [j for j in range(ambient_dim) if j not in pivset]
    qdim = len(free)
    one = field.one()
    proj = Mat(qdim, ambient_dim, field)
    sect = Mat(ambient_dim, qdim, field)
    for k, f in enumerate(free):
        proj.rows[k][f] = one
        sect.rows[f][k] = one
    for i, p in enumerate(pivots):
        row = rows[i]
        for k, f in enumerate(free):
            c = row.get(f)
            if c is not None and c:
                proj.rows[k][p] = -c
    rel_mat = Mat(len(rows), ambient_dim, field, [dict(r) for r in rows])
    return QuotientSpace(ambient_dim, qdim, proj, sect, rel_mat)


def full_space(dim: int, field: Field) -> QuotientSpace:
    """The trivial quotient (no relations)."""
    ident = Mat.identity(dim, field)
    return QuotientSpace(dim, dim, ident, ident, Mat(0, dim, field))
