"""Left and right bialgebroids over a base algebra, with full axiom checks.

A left bialgebroid bundles a total algebra H, a base B, commuting source and
target maps, a coproduct into the balanced tensor H (x)_B H and a counit.
`check_left_bialgebroid` verifies every clause of the definition: source and
target are (anti-)algebra maps with commuting images, the coproduct is a
coassociative counital bimodule map landing in the Takeuchi product where it
is multiplicative and unital, and the counit is a left character.  The right
bialgebroid checker is the mirror image.
"""

from __future__ import annotations

from .algebra import AlgebraMap, FinDimAlgebra, check_algebra, check_algebra_map, images_commute
from .bimodules import ProductSpace, takeuchi_subspace
from .linalg import Mat, solve
from .reports import Report


def _tensor_vec(u, v, field):
    """Dense Kronecker of two dense vectors."""
    z = field.zero()
    n = len(v)
    out = [z] * (len(u) * n)
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if b:
                out[i * n + j] = a * b
    return out


def pair_mult(h: FinDimAlgebra, w1, w2):
    """Factorwise product of two elements of H (x) H given as plain vectors."""
    d = h.dim
    z = h.field.zero()
    out = [z] * (d * d)
    for p1, c1 in enumerate(w1):
        if not c1:
            continue
        a1, b1 = divmod(p1, d)
        for p2, c2 in enumerate(w2):
            if not c2:
                continue
            a2, b2 = divmod(p2, d)
            c = c1 * c2
            left = h.mul[a1][a2]
            right = h.mul[b1][b2]
            for k1, s1 in enumerate(left):
                if not s1:
                    continue
                cs = c * s1
                for k2, s2 in enumerate(right):
                    if s2:
                        out[k1 * d + k2] = out[k1 * d + k2] + cs * s2
    return out


class LeftBialgebroid:
    """(H, B, s_L, t_L, Delta_L, eps_L); the coproduct is stored as a plain
    matrix H -> H (x) H and projected into H (x)_B H on demand."""

    def __init__(self, total: FinDimAlgebra, base: FinDimAlgebra, s: AlgebraMap,
                 t: AlgebraMap, coproduct: Mat, counit: Mat, name: str = ""):
        d = total.dim
        if coproduct.nrows != d * d or coproduct.ncols != d:
            raise ValueError("coproduct must map H into the plain tensor square")
        if counit.nrows != base.dim or counit.ncols != d:
            raise ValueError("counit must map H to the base")
        self.total = total
        self.base = base
        self.s = s
        self.t = t
        self.coproduct = coproduct
        self.counit = counit
        self.name = name
        self._tensor: ProductSpace | None = None
        self._s_img = [s.apply(base.basis_vec(i)) for i in range(base.dim)]
        self._t_img = [t.apply(base.basis_vec(i)) for i in range(base.dim)]

    # The (x)_B relation family on a pair of H factors:
    # t_L(b) u (x) v  =  u (x) s_L(b) v.
    def family(self):
        h = self.total
        p = [h.left_mul_by(v) for v in self._t_img]
        q = [h.left_mul_by(v) for v in self._s_img]
        return p, q

    def tensor_square(self) -> ProductSpace:
        if self._tensor is None:
            p, q = self.family()
            d = self.total.dim
            self._tensor = ProductSpace([d, d], [(0, 1, p, q)], self.total.field, name="B")
        return self._tensor

    def takeuchi(self):
        h = self.total
        p = [h.right_mul_by(v) for v in self._t_img]
        q = [h.right_mul_by(v) for v in self._s_img]
        return takeuchi_subspace(self.tensor_square(), p, q, condition="x_B")

    def delta(self, vec):
        """Plain-tensor representative of Delta_L."""
        return self.coproduct.apply(vec)

    def eps(self, vec):
        return self.counit.apply(vec)

    def __repr__(self):
        return f"LeftBialgebroid({self.name or '?'}, H dim {self.total.dim} over B dim {self.base.dim})"


class RightBialgebroid:
    """(H, A, s_R, t_R, Delta_R, eps_R), the mirror-image structure."""

    def __init__(self, total: FinDimAlgebra, base: FinDimAlgebra, s: AlgebraMap,
                 t: AlgebraMap, coproduct: Mat, counit: Mat, name: str = ""):
        d = total.dim
        if coproduct.nrows != d * d or coproduct.ncols != d:
            raise ValueError("coproduct must map H into the plain tensor square")
        if counit.nrows != base.dim or counit.ncols != d:
            raise ValueError("counit must map H to the base")
        self.total = total
        self.base = base
        self.s = s
        self.t = t
        self.coproduct = coproduct
        self.counit = counit
        self.name = name
        self._tensor: ProductSpace | None = None
        self._s_img = [s.apply(base.basis_vec(i)) for i in range(base.dim)]
        self._t_img = [t.apply(base.basis_vec(i)) for i in range(base.dim)]

    # The (x)_A relation family: u s_R(a) (x) v  =  u (x) v t_R(a).
    def family(self):
        h = self.total
        p = [h.right_mul_by(v) for v in self._s_img]
        q = [h.right_mul_by(v) for v in self._t_img]
        return p, q

    def tensor_square(self) -> ProductSpace:
        if self._tensor is None:
            p, q = self.family()
            d = self.total.dim
            self._tensor = ProductSpace([d, d], [(0, 1, p, q)], self.total.field, name="A")
        return self._tensor

    def takeuchi(self):
        h = self.total
        p = [h.left_mul_by(v) for v in self._s_img]
        q = [h.left_mul_by(v) for v in self._t_img]
        return takeuchi_subspace(self.tensor_square(), p, q, condition="x_A")

    def delta(self, vec):
        return self.coproduct.apply(vec)

    def eps(self, vec):
        return self.counit.apply(vec)

    def __repr__(self):
        return f"RightBialgebroid({self.name or '?'}, H dim {self.total.dim} over A dim {self.base.dim})"


def _triple_space(bgd, fam_pairs) -> ProductSpace:
    d = bgd.total.dim
    p, q = bgd.family()
    fams = [(i, j, p, q) for (i, j) in fam_pairs]
    return ProductSpace([d, d, d], fams, bgd.total.field)


def check_left_bialgebroid(l: LeftBialgebroid) -> Report:
    rep = Report(f"left-bialgebroid:{l.name or '?'}")
    h, b = l.total, l.base
    d, db = h.dim, b.dim
    fmt = h.field.fmt

    rep.extend(check_algebra(h), prefix="total-")
    rep.extend(check_algebra(b), prefix="base-")
    if l.s.variant != "algebra":
        rep.add("source-variant")
    rep.extend(check_algebra_map(l.s), prefix="source-")
    if l.t.variant != "anti":
        rep.add("target-variant")
    rep.extend(check_algebra_map(l.t), prefix="target-")
    if not images_commute(l.s, l.t):
        rep.add("source-target-commute")

    t2 = l.tensor_square()
    ident_h = Mat.identity(d, h.field)

    # coproduct is a B-bimodule map for b.X.c = s_L(b) t_L(c) X:
    # Delta(s_L(b) X) = s_L(b) X1 (x) X2,  Delta(t_L(c) X) = X1 (x) t_L(c) X2
    for i in range(db):
        sl = h.left_mul_by(l._s_img[i])
        tl = h.left_mul_by(l._t_img[i])
        lhs = t2.projection @ l.coproduct @ sl
        rhs = t2.projection @ sl.kron(ident_h) @ l.coproduct
        if lhs != rhs:
            rep.add("coproduct-bimodule-s", {"b": i})
        lhs = t2.projection @ l.coproduct @ tl
        rhs = t2.projection @ ident_h.kron(tl) @ l.coproduct
        if lhs != rhs:
            rep.add("coproduct-bimodule-t", {"b": i})

    # coassociativity in H (x)_B H (x)_B H
    t3 = _triple_space(l, [(0, 1), (1, 2)])
    left = t3.projection @ l.coproduct.kron(ident_h) @ l.coproduct
    right = t3.projection @ ident_h.kron(l.coproduct) @ l.coproduct
    if left != right:
        for j in range(d):
            if left.col(j) != right.col(j):
                rep.add("coassociativity", {"X": j})

    # counit laws: s_L(eps(X1)) X2 = X = t_L(eps(X2)) X1
    for j in range(d):
        w = l.delta(h.basis_vec(j))
        acc1 = [h.field.zero()] * d
        acc2 = [h.field.zero()] * d
        for p, c in enumerate(w):
            if not c:
                continue
            u, v = divmod(p, d)
            part1 = h.multiply(l.s.apply(l.eps(h.basis_vec(u))), h.basis_vec(v))
            acc1 = [x + c * y for x, y in zip(acc1, part1)]
            part2 = h.multiply(l.t.apply(l.eps(h.basis_vec(v))), h.basis_vec(u))
            acc2 = [x + c * y for x, y in zip(acc2, part2)]
        if acc1 != h.basis_vec(j):
            rep.add("counit-left", {"X": j}, [fmt(x) for x in acc1])
        if acc2 != h.basis_vec(j):
            rep.add("counit-right", {"X": j}, [fmt(x) for x in acc2])

    # counit is a bimodule map: eps(s_L(b) t_L(c) X) = b eps(X) c
    for i in range(db):
        for k in range(db):
            mmat = h.left_mul_by(l._s_img[i]) @ h.left_mul_by(l._t_img[k])
            lhs = l.counit @ mmat
            rhs = b.left_mul(i) @ b.right_mul(k) @ l.counit
            if lhs != rhs:
                rep.add("counit-bimodule", {"b": i, "c": k})

    # image of Delta lies in the Takeuchi product L x_B L
    tak = l.takeuchi()
    for j in range(d):
        target = t2.project(l.delta(h.basis_vec(j)))
        if solve(tak.inclusion, target) is None:
            rep.add("takeuchi-membership", {"X": j})

    # Delta is multiplicative (factorwise on representatives) and unital
    for i in range(d):
        wi = l.delta(h.basis_vec(i))
        for j in range(d):
            wj = l.delta(h.basis_vec(j))
            prod = pair_mult(h, wi, wj)
            direct = l.delta(h.multiply(h.basis_vec(i), h.basis_vec(j)))
            if t2.project(prod) != t2.project(direct):
                rep.add("coproduct-multiplicative", {"i": i, "j": j})
    if t2.project(l.delta(h.unit)) != t2.project(_tensor_vec(h.unit, h.unit, h.field)):
        rep.add("coproduct-unital")

    # left character: eps(1)=1, eps(s_L(a)X)=a eps(X),
    # eps(X s_L(eps Y)) = eps(XY) = eps(X t_L(eps Y))
    if l.eps(h.unit) != b.unit:
        rep.add("counit-unit", None, [fmt(x) for x in l.eps(h.unit)])
    for i in range(db):
        lhs = l.counit @ h.left_mul_by(l._s_img[i])
        rhs = b.left_mul(i) @ l.counit
        if lhs != rhs:
            rep.add("counit-character-s", {"a": i})
    for i in range(d):
        for j in range(d):
            ej = h.basis_vec(j)
            exy = l.eps(h.multiply(h.basis_vec(i), ej))
            via_s = l.eps(h.multiply(h.basis_vec(i), l.s.apply(l.eps(ej))))
            via_t = l.eps(h.multiply(h.basis_vec(i), l.t.apply(l.eps(ej))))
            if via_s != exy:
                rep.add("counit-product-s", {"X": i, "Y": j},
                        [fmt(x) for x in via_s], [fmt(x) for x in exy])
            if via_t != exy:
                rep.add("counit-product-t", {"X": i, "Y": j},
                        [fmt(x) for x in via_t], [fmt(x) for x in exy])
    return rep


def check_right_bialgebroid(r: RightBialgebroid) -> Report:
    rep = Report(f"right-bialgebroid:{r.name or '?'}")
    h, a = r.total, r.base
    d, da = h.dim, a.dim
    fmt = h.field.fmt

    rep.extend(check_algebra(h), prefix="total-")
    rep.extend(check_algebra(a), prefix="base-")
    if r.s.variant != "algebra":
        rep.add("source-variant")
    rep.extend(check_algebra_map(r.s), prefix="source-")
    if r.t.variant != "anti":
        rep.add("target-variant")
    rep.extend(check_algebra_map(r.t), prefix="target-")
    if not images_commute(r.s, r.t):
        rep.add("source-target-commute")

    t2 = r.tensor_square()
    ident_h = Mat.identity(d, h.field)

    # coproduct is an A-bimodule map for a.X.a' = X s_R(a') t_R(a):
    # Delta(X t_R(a)) = X1 t_R(a) (x) X2,  Delta(X s_R(a')) = X1 (x) X2 s_R(a')
    for i in range(da):
        tr = h.right_mul_by(r._t_img[i])
        sr = h.right_mul_by(r._s_img[i])
        lhs = t2.projection @ r.coproduct @ tr
        rhs = t2.projection @ tr.kron(ident_h) @ r.coproduct
        if lhs != rhs:
            rep.add("coproduct-bimodule-t", {"a": i})
        lhs = t2.projection @ r.coproduct @ sr
        rhs = t2.projection @ ident_h.kron(sr) @ r.coproduct
        if lhs != rhs:
            rep.add("coproduct-bimodule-s", {"a": i})

    t3 = _triple_space(r, [(0, 1), (1, 2)])
    left = t3.projection @ r.coproduct.kron(ident_h) @ r.coproduct
    right = t3.projection @ ident_h.kron(r.coproduct) @ r.coproduct
    if left != right:
        for j in range(d):
            if left.col(j) != right.col(j):
                rep.add("coassociativity", {"X": j})

    # counit laws: X1 s_R(eps X2) = X = X2 t_R(eps X1)
    for j in range(d):
        w = r.delta(h.basis_vec(j))
        acc1 = [h.field.zero()] * d
        acc2 = [h.field.zero()] * d
        for p, c in enumerate(w):
            if not c:
                continue
            u, v = divmod(p, d)
            part1 = h.multiply(h.basis_vec(u), r.s.apply(r.eps(h.basis_vec(v))))
            acc1 = [x + c * y for x, y in zip(acc1, part1)]
            part2 = h.multiply(h.basis_vec(v), r.t.apply(r.eps(h.basis_vec(u))))
            acc2 = [x + c * y for x, y in zip(acc2, part2)]
        if acc1 != h.basis_vec(j):
            rep.add("counit-left", {"X": j}, [fmt(x) for x in acc1])
        if acc2 != h.basis_vec(j):
            rep.add("counit-right", {"X": j}, [fmt(x) for x in acc2])

    # counit bimodule map: eps(X s_R(a') t_R(a)) = a eps(X) a'
    for i in range(da):
        for k in range(da):
            mmat = h.right_mul_by(r._s_img[k]) @ h.right_mul_by(r._t_img[i])
            lhs = r.counit @ mmat
            rhs = a.left_mul(i) @ a.right_mul(k) @ r.counit
            if lhs != rhs:
                rep.add("counit-bimodule", {"a": i, "a'": k})

    tak = r.takeuchi()
    for j in range(d):
        target = t2.project(r.delta(h.basis_vec(j)))
        if solve(tak.inclusion, target) is None:
            rep.add("takeuchi-membership", {"X": j})

    for i in range(d):
        wi = r.delta(h.basis_vec(i))
        for j in range(d):
            wj = r.delta(h.basis_vec(j))
            prod = pair_mult(h, wi, wj)
            direct = r.delta(h.multiply(h.basis_vec(i), h.basis_vec(j)))
            if t2.project(prod) != t2.project(direct):
                rep.add("coproduct-multiplicative", {"i": i, "j": j})
    if t2.project(r.delta(h.unit)) != t2.project(_tensor_vec(h.unit, h.unit, h.field)):
        rep.add("coproduct-unital")

    # right character: eps(1)=1, eps(s_R(eps X) Y) = eps(XY) = eps(t_R(eps X) Y)
    if r.eps(h.unit) != a.unit:
        rep.add("counit-unit", None, [fmt(x) for x in r.eps(h.unit)])
    for i in range(d):
        ei = h.basis_vec(i)
        for j in range(d):
            ej = h.basis_vec(j)
            exy = r.eps(h.multiply(ei, ej))
            via_s = r.eps(h.multiply(r.s.apply(r.eps(ei)), ej))
            via_t = r.eps(h.multiply(r.t.apply(r.eps(ei)), ej))
            if via_s != exy:
                rep.add("counit-product-s", {"X": i, "Y": j},
                        [fmt(x) for x in via_s], [fmt(x) for x in exy])
            if via_t != exy:
                rep.add("counit-product-t", {"X": i, "Y": j},
                        [fmt(x) for x in via_t], [fmt(x) for x in exy])
    return rep
