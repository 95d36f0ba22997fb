"""Bimodules, balanced tensor products as quotients, Takeuchi subspaces.

A balanced tensor product V (x)_B W is realized concretely: the plain
tensor space V (x) W modulo the span of  (v.b) (x) w  -  v (x) (b.w)  over
all basis generators.  Each quotient carries a projection and a section, so
every formula from the literature is evaluated on canonical representatives
and re-projected; well-definedness of a map is asserted once (on the
relations), not per element.

`ProductSpace` generalizes this to n factors with relation families between
arbitrary factor pairs, which is what iterated and mixed tensor products
(e.g. (x)_B between factors 1,2 and (x)_A between 2,3) need.
"""

from __future__ import annotations

from .algebra import FinDimAlgebra
from .linalg import Mat, QuotientSpace, full_space, quotient_by, rank
from .reports import Report
from .scalars import Field


class BaseMismatch(ValueError):
    pass


class NotWellDefined(ValueError):
    """A formula that fails to factor through a balanced tensor product."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class Bimodule:
    """Vector space with a left action and a (commuting) right action of a base algebra."""

    def __init__(self, base: FinDimAlgebra, dim: int, left: list[Mat], right: list[Mat],
                 name: str = ""):
        if len(left) != base.dim or len(right) != base.dim:
            raise ValueError("need one action matrix per base basis element")
        self.base = base
        self.dim = dim
        self.left = left
        self.right = right
        self.name = name

    def left_by(self, bvec) -> Mat:
        out = Mat.zeros(self.dim, self.dim, self.base.field)
        for i, c in enumerate(bvec):
            if c:
                out = out + self.left[i].scale(c)
        return out

    def right_by(self, bvec) -> Mat:
        out = Mat.zeros(self.dim, self.dim, self.base.field)
        for i, c in enumerate(bvec):
            if c:
                out = out + self.right[i].scale(c)
        return out

    def __repr__(self):
        return f"Bimodule({self.name or '?'}, dim={self.dim})"


def check_bimodule(m: Bimodule) -> Report:
    """Left action is a representation, right action a right action, and they commute."""
    rep = Report(f"bimodule:{m.name or '?'}")
    base = m.base
    for i in range(base.dim):
        for j in range(base.dim):
            prod = base.mul[i][j]
            if m.left[i] @ m.left[j] != m.left_by(prod):
                rep.add("left-representation", {"i": i, "j": j})
            # right action: (v.b_i).b_j = v.(b_i b_j), i.e. R(b_j) R(b_i) = R(b_i b_j)
            if m.right[j] @ m.right[i] != m.right_by(prod):
                rep.add("right-representation", {"i": i, "j": j})
            if m.left[i] @ m.right[j] != m.right[j] @ m.left[i]:
                rep.add("actions-commute", {"i": i, "j": j})
    ident = Mat.identity(m.dim, base.field)
    if m.left_by(base.unit) != ident:
        rep.add("left-unital")
    if m.right_by(base.unit) != ident:
        rep.add("right-unital")
    return rep


class ProductSpace(QuotientSpace):
    """Tensor product of several factors modulo balancing relation families.

    A family is a tuple (i, j, P_mats, Q_mats): for every generator g the
    relation  P_g(on factor i) - Q_g(on factor j)  applied to every basis
    tensor is killed.
    """

    def __init__(self, dims: list[int], families, field: Field, name: str = ""):
        self.dims = list(dims)
        self.name = name
        ambient = 1
        for d in dims:
            ambient *= d
        rels = _family_relations(dims, families, field)
        q = quotient_by(ambient, rels, field)
        super().__init__(q.ambient_dim, q.dim, q.projection, q.section, q.relations, name)

    def __repr__(self):
        return f"ProductSpace({self.name or 'x'.join(map(str, self.dims))} -> {self.dim})"


def _embed_factor(dims: list[int], k: int, m: Mat) -> Mat:
    """id (x) ... (x) m (at slot k) (x) ... (x) id, without forming dense krons."""
    left = 1
    for d in dims[:k]:
        left *= d
    right = 1
    for d in dims[k + 1:]:
        right *= d
    n = dims[k]
    ambient = left * n * right
    out = Mat(ambient, ambient, m.field)
    for i, row in enumerate(m.rows):
        if not row:
            continue
        for a in range(left):
            for c in range(right):
                tgt = out.rows[(a * n + i) * right + c]
                for j, v in row.items():
                    tgt[(a * n + j) * right + c] = v
    return out


def _family_relations(dims, families, field: Field):
    """Sparse relation rows for all families on the full tensor basis."""
    rels = []
    total = 1
    for d in dims:
        total *= d
    strides = []
    acc = 1
    for d in reversed(dims):
        strides.append(acc)
        acc *= d
    strides.reverse()
    for (fi, fj, pmats, qmats) in families:
        if len(pmats) != len(qmats):
            raise ValueError("families need matching generator lists")
        for g in range(len(pmats)):
            p, q = pmats[g], qmats[g]
            pcols = [p.col(c) for c in range(p.ncols)]
            qcols = [q.col(c) for c in range(q.ncols)]
            for idx in range(total):
                multi = _unrank(idx, dims)
                rel: dict = {}
                ki = multi[fi]
                for out_i, v in enumerate(pcols[ki]):
                    if v:
                        j = idx + (out_i - ki) * strides[fi]
                        rel[j] = rel.get(j, field.zero()) + v
                kj = multi[fj]
                for out_j, v in enumerate(qcols[kj]):
                    if v:
                        j = idx + (out_j - kj) * strides[fj]
                        rel[j] = rel.get(j, field.zero()) - v
                rel = {k: v for k, v in rel.items() if v}
                if rel:
                    rels.append(rel)
    return rels


def _unrank(idx: int, dims) -> list[int]:
    multi = []
    for d in reversed(dims):
        multi.append(idx % d)
        idx //= d
    multi.reverse()
    return multi


class BalancedTensor(ProductSpace):
    """Two-factor balanced tensor V (x)_rule W over the declared bimodule pair."""

    def __init__(self, left_factor: Bimodule, right_factor: Bimodule, rule: str = ""):
        if left_factor.base.dim != right_factor.base.dim:
            raise BaseMismatch(
                f"base dims differ: {left_factor.base.dim} vs {right_factor.base.dim}")
        field = left_factor.base.field
        self.left_factor = left_factor
        self.right_factor = right_factor
        self.rule = rule
        fam = [(0, 1, left_factor.right, right_factor.left)]
        super().__init__([left_factor.dim, right_factor.dim], fam, field, name=rule)


def balanced_tensor(v: Bimodule, w: Bimodule, rule: str = "") -> BalancedTensor:
    return BalancedTensor(v, w, rule)


class TakeuchiSubspace:
    """Subspace of a balanced tensor cut out by a centrality condition.

    The condition is: for every base generator, moving `left_maps[g]`
    through the first factor equals moving `right_maps[g]` through the
    second, evaluated on canonical representatives in the quotient.
    """

    def __init__(self, ambient: ProductSpace, inclusion: Mat, condition: str = ""):
        self.ambient = ambient
        self.inclusion = inclusion
        self.condition = condition
        self.dim = inclusion.ncols

    def contains(self, qvec) -> bool:
        from .linalg import solve
        return solve(self.inclusion, qvec) is not None

    def __repr__(self):
        return f"TakeuchiSubspace(dim={self.dim} of {self.ambient.dim})"


def takeuchi_subspace(t: ProductSpace, left_maps: list[Mat], right_maps: list[Mat],
                      condition: str = "") -> TakeuchiSubspace:
    """Exact kernel of the stacked (P_g on factor 0) - (Q_g on factor 1) maps."""
    from .linalg import kernel
    field = t.projection.field
    dims = t.dims
    stacked: Mat | None = None
    for p, q in zip(left_maps, right_maps):
        amb = _embed_factor(dims, 0, p) - _embed_factor(dims, 1, q)
        step = t.projection @ amb @ t.section
        stacked = step if stacked is None else stacked.stack_rows(step)
    if stacked is None:
        stacked = Mat.zeros(0, t.dim, field)
    basis = kernel(stacked)
    incl = Mat.from_cols(basis, t.dim, field)
    return TakeuchiSubspace(t, incl, condition)


def induced_map(f: Mat, t_src: QuotientSpace, t_dst: QuotientSpace,
                what: str = "map") -> Mat:
    """Quotient-level map from an ambient formula, with well-definedness check.

    Fails (NotWellDefined) when f does not send source relations into target
    relations; the failing relation is reported as the witness.  This is the
    executable form of every "the map factors through" claim.
    """
    if f.ncols != t_src.ambient_dim or f.nrows != t_dst.ambient_dim:
        raise ValueError(f"{what}: ambient shape mismatch")
    for i in range(t_src.relations.nrows):
        rel = t_src.relations.rows[i]
        img = f.apply_dict(rel)
        if t_dst.project_dict(img):
            raise NotWellDefined(f"{what} does not factor through the balancing relations",
                                 witness={"relation_index": i})
    return t_dst.projection @ f @ t_src.section


def balanced_dim_check(t: ProductSpace) -> bool:
    """dim(quotient) = dim(ambient) - rank(relations), exact."""
    return t.dim == t.ambient_dim - rank(t.relations)


def space_from_operators(total_dim: int, ops: list[Mat], field: Field,
                         name: str = "") -> QuotientSpace:
    """Quotient of the total space by the columns of the given operators.

    Each operator is a full-space matrix whose column space spans one family
    of balancing relations (typically built as embed(P_g) - embed(Q_g)); this
    covers relation families acting across slot groups, where the per-slot
    `ProductSpace` families do not fit.
    """
    rels = []
    for op in ops:
        if op.nrows != total_dim or op.ncols != total_dim:
            raise ValueError("relation operators must be square on the total space")
        cols: dict[int, dict] = {}
        for i, row in enumerate(op.rows):
            for j, v in row.items():
                cols.setdefault(j, {})[i] = v
        for j in sorted(cols):
            rels.append(cols[j])
    q = quotient_by(total_dim, rels, field)
    q.name = name
    return q
