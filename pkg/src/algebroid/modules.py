"""(Co)modules, Yetter-Drinfeld modules, Hopf bimodules, coinvariants and
the bimodule <-> YD equivalence maps.

Conventions (one comodule flavor per sidedness, each with its own carrier
bimodule and balanced tensor):

  left  over L:  d(r) = r(-1) (x)_B r(0)   in  H (x) V,   t_L(b)X (x) r = X (x) b.r
  right over L:  d(r) = r(0)  (x)_B r(1)   in  V (x) H,   (r*b) (x) X = r (x) t_L(b)X
  right over R:  d(r) = r[0]  (x)_A r[1]   in  V (x) H,   (r.a) (x) X = r (x) X t_R(a)
  left  over R:  d(r) = r[-1] (x)_A r[0]   in  H (x) V,   X s_R(a) (x) r = X (x) a.r

Every checker reports violations clause by clause; base-compatibility
clauses are verified before the main Yetter-Drinfeld equation since the
latter is only well-formed given them.
"""

from __future__ import annotations

from .algebra import FinDimAlgebra
from .bimodules import Bimodule, NotWellDefined, ProductSpace, check_bimodule, induced_map
from .hopf import HopfAlgebroid
from .linalg import Mat, kernel, solve
from .reports import Report
from .tensors import tvec


# -- structures ----------------------------------------------------------


class ModuleStructure:
    """Left or right module over the total algebra (one matrix per H basis)."""

    def __init__(self, hopf: HopfAlgebroid, side: str, act: list[Mat]):
        if side not in ("left", "right"):
            raise ValueError(side)
        self.hopf = hopf
        self.side = side
        self.act = act
        self.dim = act[0].nrows if act else 0

    def act_by(self, hvec) -> Mat:
        out = Mat.zeros(self.dim, self.dim, self.hopf.field)
        for i, c in enumerate(hvec):
            if c:
                out = out + self.act[i].scale(c)
        return out


def check_module(m: ModuleStructure) -> Report:
    rep = Report(f"module:{m.side}")
    h = m.hopf.H
    for i in range(h.dim):
        for j in range(h.dim):
            prod = m.act_by(h.mul[i][j])
            if m.side == "left":
                ok = m.act[i] @ m.act[j] == prod
            else:
                ok = m.act[j] @ m.act[i] == prod
            if not ok:
                rep.add("action-multiplicative", {"i": i, "j": j})
    if m.act_by(h.unit) != Mat.identity(m.dim, m.hopf.field):
        rep.add("action-unital")
    return rep


class ComoduleStructure:
    """A coaction with its carrier bimodule; the coaction matrix maps the
    carrier into the plain ambient tensor (H (x) V or V (x) H)."""

    def __init__(self, hopf: HopfAlgebroid, side: str, over: str, carrier: Bimodule,
                 coaction: Mat):
        if side not in ("left", "right") or over not in ("L", "R"):
            raise ValueError((side, over))
        self.hopf = hopf
        self.side = side
        self.over = over
        self.carrier = carrier
        self.coaction = coaction
        self.dim = carrier.dim
        d = hopf.H.dim
        expect = d * self.dim
        if coaction.nrows != expect or coaction.ncols != self.dim:
            raise ValueError("coaction has wrong shape")
        self._space: ProductSpace | None = None

    def family(self):
        """Balancing relation family (P on first slot, Q on second)."""
        h = self.hopf
        if (self.side, self.over) == ("left", "L"):
            return ([h.H.left_mul_by(v) for v in h.tL_img], self.carrier.left)
        if (self.side, self.over) == ("right", "L"):
            return (self.carrier.right, [h.H.left_mul_by(v) for v in h.sL_img])
        if (self.side, self.over) == ("right", "R"):
            return (self.carrier.right, [h.H.right_mul_by(v) for v in h.tR_img])
        # ("left", "R")
        return ([h.H.right_mul_by(v) for v in h.sR_img], self.carrier.left)

    def dims(self):
        d = self.hopf.H.dim
        return [d, self.dim] if self.side == "left" else [self.dim, d]

    def space(self) -> ProductSpace:
        if self._space is None:
            p, q = self.family()
            self._space = ProductSpace(self.dims(), [(0, 1, p, q)], self.hopf.field,
                                       name=f"{self.side}-{self.over}")
        return self._space

    def apply(self, vec):
        return self.coaction.apply(vec)


def _eps_contract(c: ComoduleStructure, vec):
    """Counit contraction of the coaction of `vec` back into the carrier."""
    h = c.hopf
    d = h.H.dim
    z = h.field.zero()
    out = [z] * c.dim
    w = c.apply(vec)
    for p, cc in enumerate(w):
        if not cc:
            continue
        if c.side == "left":
            x, g = divmod(p, c.dim)
        else:
            g, x = divmod(p, d)
        gv = [z] * c.dim
        gv[g] = h.field.one()
        if (c.side, c.over) == ("left", "L"):
            part = c.carrier.left_by(h.L.counit.apply(h.H.basis_vec(x))).apply(gv)
        elif (c.side, c.over) == ("right", "L"):
            part = c.carrier.right_by(h.L.counit.apply(h.H.basis_vec(x))).apply(gv)
        elif (c.side, c.over) == ("right", "R"):
            part = c.carrier.right_by(h.R.counit.apply(h.H.basis_vec(x))).apply(gv)
        else:
            part = c.carrier.left_by(h.R.counit.apply(h.H.basis_vec(x))).apply(gv)
        out = [a + cc * b for a, b in zip(out, part)]
    return out


def check_comodule(c: ComoduleStructure) -> Report:
    rep = Report(f"comodule:{c.side}-{c.over}")
    h = c.hopf
    H, d = h.H, h.H.dim
    field = h.field
    rep.extend(check_bimodule(c.carrier), prefix="carrier-")
    sp = c.space()
    ident_v = Mat.identity(c.dim, field)
    ident_h = Mat.identity(d, field)
    db = c.carrier.base.dim

    # coaction is a bimodule map in the flavor's sense
    for b in range(db):
        for b2 in range(db):
            inner = c.coaction @ c.carrier.left[b] @ c.carrier.right[b2]
            if (c.side, c.over) == ("left", "L"):
                outer = (H.left_mul_by(h.sL_img[b]) @ H.right_mul_by(h.sL_img[b2])).kron(ident_v)
            elif (c.side, c.over) == ("right", "L"):
                outer = ident_v.kron(H.left_mul_by(h.tL_img[b2]) @ H.right_mul_by(h.tL_img[b]))
            elif (c.side, c.over) == ("right", "R"):
                outer = ident_v.kron(H.left_mul_by(h.sR_img[b]) @ H.right_mul_by(h.sR_img[b2]))
            else:
                outer = (H.left_mul_by(h.tR_img[b2]) @ H.right_mul_by(h.tR_img[b])).kron(ident_v)
            if sp.projection @ inner != sp.projection @ outer @ c.coaction:
                rep.add("coaction-bimodule-map", {"b": b, "b'": b2})

    # coassociativity
    p, q = c.family()
    if c.side == "left":
        cop = h.L.coproduct if c.over == "L" else h.R.coproduct
        hfam = h.family("B" if c.over == "L" else "A")
        t3 = ProductSpace([d, d, c.dim], [(0, 1) + hfam, (1, 2, p, q)], field)
        lhs = t3.projection @ cop.kron(ident_v) @ c.coaction
        rhs = t3.projection @ ident_h.kron(c.coaction) @ c.coaction
    else:
        cop = h.L.coproduct if c.over == "L" else h.R.coproduct
        hfam = h.family("B" if c.over == "L" else "A")
        t3 = ProductSpace([c.dim, d, d], [(0, 1, p, q), (1, 2) + hfam], field)
        lhs = t3.projection @ c.coaction.kron(ident_h) @ c.coaction
        rhs = t3.projection @ ident_v.kron(cop) @ c.coaction
    if lhs != rhs:
        for j in range(c.dim):
            if lhs.col(j) != rhs.col(j):
                rep.add("coassociativity", {"r": j})

    # counit law
    for j in range(c.dim):
        ej = [field.zero()] * c.dim
        ej[j] = field.one()
        if _eps_contract(c, ej) != ej:
            rep.add("counit", {"r": j})

    # Takeuchi membership
    from .bimodules import takeuchi_subspace
    if (c.side, c.over) == ("left", "L"):
        tak_p = [H.right_mul_by(v) for v in h.tL_img]
        tak_q = c.carrier.right
    elif (c.side, c.over) == ("right", "L"):
        tak_p = c.carrier.left
        tak_q = [H.right_mul_by(v) for v in h.sL_img]
    elif (c.side, c.over) == ("right", "R"):
        tak_p = c.carrier.left
        tak_q = [H.left_mul_by(v) for v in h.tR_img]
    else:
        tak_p = [H.left_mul_by(v) for v in h.sR_img]
        tak_q = c.carrier.right
    tak = takeuchi_subspace(sp, tak_p, tak_q)
    for j in range(c.dim):
        target = sp.project(c.coaction.col(j))
        if solve(tak.inclusion, target) is None:
            rep.add("takeuchi-membership", {"r": j})
    return rep


class YDModule:
    """Module + comodule with the flavor's compatibility; `second` holds the
    complementary comodule of a full Yetter-Drinfeld module."""

    FLAVORS = {
        "ll": ("left", ("left", "L"), ("left", "R")),
        "rl": ("left", ("right", "L"), ("right", "R")),
        "rr": ("right", ("right", "R"), ("right", "L")),
        "lr": ("right", ("left", "R"), ("left", "L")),
    }

    def __init__(self, hopf: HopfAlgebroid, flavor: str, module: ModuleStructure,
                 comodule: ComoduleStructure, second: ComoduleStructure | None = None,
                 name: str = ""):
        if flavor not in self.FLAVORS:
            raise ValueError(flavor)
        mside, cflavor, sflavor = self.FLAVORS[flavor]
        if module.side != mside or (comodule.side, comodule.over) != cflavor:
            raise ValueError(f"structure sides do not match flavor {flavor}")
        if second is not None and (second.side, second.over) != sflavor:
            raise ValueError(f"second comodule must be {sflavor} for flavor {flavor}")
        self.hopf = hopf
        self.flavor = flavor
        self.module = module
        self.comodule = comodule
        self.second = second
        self.dim = module.dim
        self.name = name

    @property
    def full(self) -> bool:
        return self.second is not None

    def __repr__(self):
        return f"YDModule({self.name or self.flavor}, dim={self.dim}, full={self.full})"


def _yd_equation_sides(y: YDModule, xi: int, rj: int):
    """lhs/rhs of the flavor's Yetter-Drinfeld equation on basis (X, r)."""
    h = y.hopf
    H, d = h.H, h.H.dim
    field = h.field
    z = field.zero()
    n = y.dim
    act = y.module.act
    coa = y.comodule.coaction
    lhs = [z] * (d * n if y.flavor in ("ll", "lr") else n * d)
    rhs = list(lhs)
    rv = [z] * n
    rv[rj] = field.one()
    w = (h.L.coproduct if y.flavor in ("ll", "rl") else h.R.coproduct).col(xi)

    for p, c in enumerate(w):
        if not c:
            continue
        u, v = divmod(p, d)
        if y.flavor == "ll":
            # (X1 > r)(-1) X2 (x) (X1 > r)(0)  =  X1 r(-1) (x) X2 > r(0)
            r1 = act[u].apply(rv)
            dd = coa.apply(r1)
            for pp, cc in enumerate(dd):
                if not cc:
                    continue
                yk, g = divmod(pp, n)
                prod = H.mul[yk][v]
                for k, s in enumerate(prod):
                    if s:
                        lhs[k * n + g] = lhs[k * n + g] + c * cc * s
            dd = coa.apply(rv)
            for pp, cc in enumerate(dd):
                if not cc:
                    continue
                yk, g = divmod(pp, n)
                prod = H.mul[u][yk]
                g2 = act[v].apply([field.one() if t == g else z for t in range(n)])
                for k, s in enumerate(prod):
                    if not s:
                        continue
                    for gg, cg in enumerate(g2):
                        if cg:
                            rhs[k * n + gg] = rhs[k * n + gg] + c * cc * s * cg
        elif y.flavor == "rl":
            # (X2 > r)(0) (x) (X2 > r)(1) X1  =  X1 > r(0) (x) X2 r(1)
            r1 = act[v].apply(rv)
            dd = coa.apply(r1)
            for pp, cc in enumerate(dd):
                if not cc:
                    continue
                g, yk = divmod(pp, d)
                prod = H.mul[yk][u]
                for k, s in enumerate(prod):
                    if s:
                        lhs[g * d + k] = lhs[g * d + k] + c * cc * s
            dd = coa.apply(rv)
            for pp, cc in enumerate(dd):
                if not cc:
                    continue
                g, yk = divmod(pp, d)
                g2 = act[u].apply([field.one() if t == g else z for t in range(n)])
                prod = H.mul[v][yk]
                for k, s in enumerate(prod):
                    if not s:
                        continue
                    for gg, cg in enumerate(g2):
                        if cg:
                            rhs[gg * d + k] = rhs[gg * d + k] + c * cc * s * cg
        elif y.flavor == "rr":
            # (r < X[2])[0] (x) X[1] (r < X[2])[1]  =  r[0] < X[1] (x) r[1] X[2]
            r1 = act[v].apply(rv)
            dd = coa.apply(r1)
            for pp, cc in enumerate(dd):
                if not cc:
                    continue
                g, yk = divmod(pp, d)
                prod = H.mul[u][yk]
                for k, s in enumerate(prod):
                    if s:
                        lhs[g * d + k] = lhs[g * d + k] + c * cc * s
            dd = coa.apply(rv)
            for pp, cc in enumerate(dd):
                if not cc:
                    continue
                g, yk = divmod(pp, d)
                g2 = act[u].apply([field.one() if t == g else z for t in range(n)])
                prod = H.mul[yk][v]
                for k, s in enumerate(prod):
                    if not s:
                        continue
                    for gg, cg in enumerate(g2):
                        if cg:
                            rhs[gg * d + k] = rhs[gg * d + k] + c * cc * s * cg
        else:  # lr
            # X[2] (r < X[1])[-1] (x) (r < X[1])[0]  =  r[-1] X[1] (x) r[0] < X[2]
            r1 = act[u].apply(rv)
            dd = coa.apply(r1)
            for pp, cc in enumerate(dd):
                if not cc:
                    continue
                yk, g = divmod(pp, n)
                prod = H.mul[v][yk]
                for k, s in enumerate(prod):
                    if s:
                        lhs[k * n + g] = lhs[k * n + g] + c * cc * s
            dd = coa.apply(rv)
            for pp, cc in enumerate(dd):
                if not cc:
                    continue
                yk, g = divmod(pp, n)
                prod = H.mul[yk][u]
                g2 = act[v].apply([field.one() if t == g else z for t in range(n)])
                for k, s in enumerate(prod):
                    if not s:
                        continue
                    for gg, cg in enumerate(g2):
                        if cg:
                            rhs[k * n + gg] = rhs[k * n + gg] + c * cc * s * cg
    return lhs, rhs


def check_yd(y: YDModule) -> Report:
    rep = Report(f"yd:{y.name or y.flavor}")
    h = y.hopf
    d = h.H.dim
    rep.extend(check_module(y.module), prefix="module-")
    rep.extend(check_comodule(y.comodule), prefix="comodule-")

    # base compatibility before the main equation
    car = y.comodule.carrier
    for b in range(car.base.dim):
        if y.flavor == "ll":
            pairs = ((h.sL_img[b], car.left[b], "s-left"), (h.tL_img[b], car.right[b], "t-right"))
        elif y.flavor == "rl":
            pairs = ((h.sL_img[b], car.left[b], "s-left"), (h.tL_img[b], car.right[b], "t-right"))
        elif y.flavor == "rr":
            pairs = ((h.sR_img[b], car.right[b], "s-right"), (h.tR_img[b], car.left[b], "t-left"))
        else:
            pairs = ((h.sR_img[b], car.right[b], "s-right"), (h.tR_img[b], car.left[b], "t-left"))
        for (hv, mat, tag) in pairs:
            if y.module.act_by(hv) != mat:
                rep.add(f"base-compat-{tag}", {"b": b})

    sp = y.comodule.space()
    for xi in range(d):
        for rj in range(y.dim):
            lhs, rhs = _yd_equation_sides(y, xi, rj)
            if sp.project(lhs) != sp.project(rhs):
                rep.add("yd-equation", {"X": xi, "r": rj})

    if y.second is not None:
        rep.extend(check_comodule(y.second), prefix="second-comodule-")
        rep.extend(_check_full_comodule_pair(h, y.comodule, y.second), prefix="full-")
    return rep


def _check_full_comodule_pair(h: HopfAlgebroid, first: ComoduleStructure,
                              second: ComoduleStructure) -> Report:
    """Conditions making a (right or left) comodule pair a comodule of the
    whole Hopf algebroid: module-map twists, mixed cocommutativity, and the
    merged carrier-bimodule structures."""
    rep = Report("full-comodule")
    H, d = h.H, h.H.dim
    field = h.field
    n = first.dim
    ident_v = Mat.identity(n, field)
    if first.side == "right":
        coa_r = first if first.over == "R" else second
        coa_l = second if first.over == "R" else first
        dot, star = coa_r.carrier, coa_l.carrier
        spl, spr = coa_l.space(), coa_r.space()
        # d_L(r.a) = r(0) (x) r(1) s_R(a);  d_R(r*b) = r[0] (x) t_L(b) r[1]
        for a in range(dot.base.dim):
            lhs = spl.projection @ coa_l.coaction @ dot.right[a]
            rhs = spl.projection @ ident_v.kron(H.right_mul_by(h.sR_img[a])) @ coa_l.coaction
            if lhs != rhs:
                rep.add("L-coaction-right-A-module-map", {"a": a})
            lhs = spr.projection @ coa_r.coaction @ star.right[a]
            rhs = spr.projection @ ident_v.kron(H.left_mul_by(h.tL_img[a])) @ coa_r.coaction
            if lhs != rhs:
                rep.add("R-coaction-right-B-module-map", {"b": a})
            # merged bimodule structures: a.r = r*a and r.a = a*r
            if dot.left[a] != star.right[a]:
                rep.add("merged-left-dot-right-star", {"a": a})
            if dot.right[a] != star.left[a]:
                rep.add("merged-right-dot-left-star", {"a": a})
        # (id (x)_B D_R) d_L = (d_L (x)_A id) d_R  in V (x) H (x) H
        pl, ql = coa_l.family()
        pr, qr = coa_r.family()
        t3 = ProductSpace([n, d, d], [(0, 1, pl, ql), (1, 2) + h.family("A")], field)
        lhs = t3.projection @ ident_v.kron(h.R.coproduct) @ coa_l.coaction
        rhs = t3.projection @ coa_l.coaction.kron(Mat.identity(d, field)) @ coa_r.coaction
        if lhs != rhs:
            rep.add("mixed-cocommutativity-LR")
        t3 = ProductSpace([n, d, d], [(0, 1, pr, qr), (1, 2) + h.family("B")], field)
        lhs = t3.projection @ ident_v.kron(h.L.coproduct) @ coa_r.coaction
        rhs = t3.projection @ coa_r.coaction.kron(Mat.identity(d, field)) @ coa_l.coaction
        if lhs != rhs:
            rep.add("mixed-cocommutativity-RL")
    else:
        coa_l = first if first.over == "L" else second   # left over L (dot carrier)
        coa_r = second if first.over == "L" else first   # left over R (star carrier)
        dot, ast = coa_l.carrier, coa_r.carrier
        spl, spr = coa_l.space(), coa_r.space()
        # ld(a_* r) = r(-1) t_R(a) (x) r(0);  rd(b . r) = s_L(b) r[-1] (x) r[0]
        for a in range(dot.base.dim):
            lhs = spl.projection @ coa_l.coaction @ ast.left[a]
            rhs = spl.projection @ H.right_mul_by(h.tR_img[a]).kron(ident_v) @ coa_l.coaction
            if lhs != rhs:
                rep.add("L-coaction-left-A-module-map", {"a": a})
            lhs = spr.projection @ coa_r.coaction @ dot.left[a]
            rhs = spr.projection @ H.left_mul_by(h.sL_img[a]).kron(ident_v) @ coa_r.coaction
            if lhs != rhs:
                rep.add("R-coaction-left-B-module-map", {"b": a})
            # merged structures through s_L(b) = t_R(a): b.r.b' = a'_* r _* a
            avec = solve(h.R.t.matrix, h.sL_img[a])
            if avec is None:
                rep.add("merged-structure-unresolvable", {"b": a})
            else:
                if dot.left[a] != ast.right_by(avec):
                    rep.add("merged-left-dot-right-star", {"b": a})
                if dot.right[a] != ast.left_by(avec):
                    rep.add("merged-right-dot-left-star", {"b": a})
        pl, ql = coa_l.family()
        pr, qr = coa_r.family()
        # (D_R (x)_B id) ld = (id (x)_A ld) rd  in H (x) H (x) V
        t3 = ProductSpace([d, d, n], [(0, 1) + h.family("A"), (1, 2, pl, ql)], field)
        lhs = t3.projection @ h.R.coproduct.kron(ident_v) @ coa_l.coaction
        rhs = t3.projection @ Mat.identity(d, field).kron(coa_l.coaction) @ coa_r.coaction
        if lhs != rhs:
            rep.add("mixed-cocommutativity-LR")
        t3 = ProductSpace([d, d, n], [(0, 1) + h.family("B"), (1, 2, pr, qr)], field)
        lhs = t3.projection @ h.L.coproduct.kron(ident_v) @ coa_r.coaction
        rhs = t3.projection @ Mat.identity(d, field).kron(coa_r.coaction) @ coa_l.coaction
        if lhs != rhs:
            rep.add("mixed-cocommutativity-RL")
    return rep


class HopfBimodule:
    """H-bimodule with covariant coactions; kind 'hopf' carries (ld, d_R),
    'anti' carries (rd, d_L), 'full' carries all four."""

    def __init__(self, hopf: HopfAlgebroid, kind: str, left_act: list[Mat],
                 right_act: list[Mat], coactions: dict, name: str = ""):
        if kind not in ("hopf", "anti", "full"):
            raise ValueError(kind)
        need = {"hopf": ("lL", "rR"), "anti": ("lR", "rL"),
                "full": ("lL", "rR", "lR", "rL")}[kind]
        for key in need:
            if key not in coactions:
                raise ValueError(f"missing coaction {key} for kind {kind}")
        self.hopf = hopf
        self.kind = kind
        self.left_act = left_act
        self.right_act = right_act
        self.coactions = coactions
        self.dim = left_act[0].nrows if left_act else 0
        self.name = name

    def coa(self, key: str) -> ComoduleStructure:
        return self.coactions[key]

    def act_left_by(self, hvec) -> Mat:
        out = Mat.zeros(self.dim, self.dim, self.hopf.field)
        for i, c in enumerate(hvec):
            if c:
                out = out + self.left_act[i].scale(c)
        return out

    def act_right_by(self, hvec) -> Mat:
        out = Mat.zeros(self.dim, self.dim, self.hopf.field)
        for i, c in enumerate(hvec):
            if c:
                out = out + self.right_act[i].scale(c)
        return out

    def __repr__(self):
        return f"HopfBimodule({self.name or self.kind}, dim={self.dim})"


def _covariance_clause(g: HopfBimodule, coa: ComoduleStructure) -> list:
    """Violations of the coaction-vs-two-sided-action covariance equation."""
    h = g.hopf
    H, d = h.H, h.H.dim
    field = h.field
    n = g.dim
    z = field.zero()
    sp = coa.space()
    cop = h.L.coproduct if coa.over == "L" else h.R.coproduct
    bad = []
    for xi in range(d):
        wx = cop.col(xi)
        for yi in range(d):
            wy = cop.col(yi)
            act = g.left_act[xi] @ g.right_act[yi]
            for rj in range(n):
                rv = [z] * n
                rv[rj] = field.one()
                lhs = coa.apply(act.apply(rv))
                rhs = [z] * len(lhs)
                dd = coa.apply(rv)
                for px, cx in enumerate(wx):
                    if not cx:
                        continue
                    x1, x2 = divmod(px, d)
                    for py, cy in enumerate(wy):
                        if not cy:
                            continue
                        y1, y2 = divmod(py, d)
                        for pp, cc in enumerate(dd):
                            if not cc:
                                continue
                            if coa.side == "left":
                                hk, gk = divmod(pp, n)
                            else:
                                gk, hk = divmod(pp, d)
                            coef = cx * cy * cc
                            # h-leg: X_a r_leg Y_a ; carrier leg: X_b > r(0) < Y_b
                            ha, hb = (x1, x2) if coa.side == "left" else (x2, x1)
                            ya, yb = (y1, y2) if coa.side == "left" else (y2, y1)
                            gv = [z] * n
                            gv[gk] = field.one()
                            gacted = (g.left_act[hb] @ g.right_act[yb]).apply(gv)
                            hpart = H.multiply(H.multiply(H.basis_vec(ha), H.basis_vec(hk)),
                                               H.basis_vec(ya))
                            for hi, ch in enumerate(hpart):
                                if not ch:
                                    continue
                                for gi, cg in enumerate(gacted):
                                    if not cg:
                                        continue
                                    if coa.side == "left":
                                        rhs[hi * n + gi] = rhs[hi * n + gi] + coef * ch * cg
                                    else:
                                        rhs[gi * d + hi] = rhs[gi * d + hi] + coef * ch * cg
                if sp.project(lhs) != sp.project(rhs):
                    bad.append({"X": xi, "Y": yi, "r": rj})
    return bad


def check_hopf_bimodule(g: HopfBimodule) -> Report:
    rep = Report(f"hopf-bimodule:{g.name or g.kind}")
    h = g.hopf
    H, d = h.H, h.H.dim
    field = h.field
    n = g.dim
    ident_v = Mat.identity(n, field)

    # H-bimodule laws
    for i in range(d):
        for j in range(d):
            if g.left_act[i] @ g.left_act[j] != g.act_left_by(H.mul[i][j]):
                rep.add("left-action-multiplicative", {"i": i, "j": j})
            if g.right_act[j] @ g.right_act[i] != g.act_right_by(H.mul[i][j]):
                rep.add("right-action-multiplicative", {"i": i, "j": j})
            if g.left_act[i] @ g.right_act[j] != g.right_act[j] @ g.left_act[i]:
                rep.add("actions-commute", {"i": i, "j": j})
    if g.act_left_by(H.unit) != ident_v or g.act_right_by(H.unit) != ident_v:
        rep.add("actions-unital")

    for key, coa in g.coactions.items():
        rep.extend(check_comodule(coa), prefix=f"{key}-")

    # covariance clause (1): base actions agree with the carrier bimodule
    for key, coa in g.coactions.items():
        car = coa.carrier
        for b in range(car.base.dim):
            if key == "lL":
                lm, rm = h.sL_img[b], h.sL_img[b]
                ok = (g.act_left_by(lm) == car.left[b] and g.act_right_by(rm) == car.right[b])
            elif key == "rR":
                lm, rm = h.sR_img[b], h.sR_img[b]
                ok = (g.act_left_by(lm) == car.left[b] and g.act_right_by(rm) == car.right[b])
            elif key == "rL":
                # t_L(b) > r < t_L(b') = b'* r * b
                ok = (g.act_left_by(h.tL_img[b]) == car.right[b]
                      and g.act_right_by(h.tL_img[b]) == car.left[b])
            else:  # lR
                ok = (g.act_left_by(h.tR_img[b]) == car.right[b]
                      and g.act_right_by(h.tR_img[b]) == car.left[b])
            if not ok:
                rep.add(f"{key}-covariant-base", {"b": b})

    # covariance clause (2)
    for key, coa in g.coactions.items():
        for witness in _covariance_clause(g, coa):
            rep.add(f"{key}-covariance", witness)

    # the defining mixed cocommutativity
    if g.kind in ("hopf", "full"):
        lL, rR = g.coa("lL"), g.coa("rR")
        pl, ql = lL.family()
        pr, qr = rR.family()
        t3 = ProductSpace([d, n, d], [(0, 1, pl, ql), (1, 2, pr, qr)], field)
        lhs = t3.projection @ Mat.identity(d, field).kron(rR.coaction) @ lL.coaction
        rhs = t3.projection @ lL.coaction.kron(Mat.identity(d, field)) @ rR.coaction
        if lhs != rhs:
            rep.add("hopf-mixed-cocommutativity")
    if g.kind in ("anti", "full"):
        lR, rL = g.coa("lR"), g.coa("rL")
        pl, ql = lR.family()
        pr, qr = rL.family()
        t3 = ProductSpace([d, n, d], [(0, 1, pl, ql), (1, 2, pr, qr)], field)
        lhs = t3.projection @ Mat.identity(d, field).kron(rL.coaction) @ lR.coaction
        rhs = t3.projection @ lR.coaction.kron(Mat.identity(d, field)) @ rL.coaction
        if lhs != rhs:
            rep.add("anti-mixed-cocommutativity")

    # full: all four coactions pairwise cocommute and carriers merge
    if g.kind == "full":
        rep.extend(_check_full_comodule_pair(h, g.coa("rR"), g.coa("rL")), prefix="full-right-")
        rep.extend(_check_full_comodule_pair(h, g.coa("lL"), g.coa("lR")), prefix="full-left-")
        lL, rL = g.coa("lL"), g.coa("rL")
        pl, ql = lL.family()
        pr, qr = rL.family()
        t3 = ProductSpace([d, n, d], [(0, 1, pl, ql), (1, 2, pr, qr)], field)
        lhs = t3.projection @ Mat.identity(d, field).kron(rL.coaction) @ lL.coaction
        rhs = t3.projection @ lL.coaction.kron(Mat.identity(d, field)) @ rL.coaction
        if lhs != rhs:
            rep.add("cocommutativity-lL-rL")
        lR, rR = g.coa("lR"), g.coa("rR")
        pl, ql = lR.family()
        pr, qr = rR.family()
        t3 = ProductSpace([d, n, d], [(0, 1, pl, ql), (1, 2, pr, qr)], field)
        lhs = t3.projection @ Mat.identity(d, field).kron(rR.coaction) @ lR.coaction
        rhs = t3.projection @ lR.coaction.kron(Mat.identity(d, field)) @ rR.coaction
        if lhs != rhs:
            rep.add("cocommutativity-lR-rR")
    return rep


# -- canonical constructions ----------------------------------------------


def regular_hopf_bimodule(h: HopfAlgebroid, full: bool = True) -> HopfBimodule:
    """The total algebra as a (full) Hopf bimodule over itself: actions are
    multiplication, coactions are the two coproducts."""
    H, d = h.H, h.H.dim
    lmul = [H.left_mul(i) for i in range(d)]
    rmul = [H.right_mul(i) for i in range(d)]
    car_lL = Bimodule(h.B, d, [H.left_mul_by(v) for v in h.sL_img],
                      [H.right_mul_by(v) for v in h.sL_img], name="regular-lL")
    car_rR = Bimodule(h.A, d, [H.left_mul_by(v) for v in h.sR_img],
                      [H.right_mul_by(v) for v in h.sR_img], name="regular-rR")
    coactions = {
        "lL": ComoduleStructure(h, "left", "L", car_lL, h.L.coproduct),
        "rR": ComoduleStructure(h, "right", "R", car_rR, h.R.coproduct),
    }
    kind = "hopf"
    if full:
        car_rL = Bimodule(h.B, d, [H.right_mul_by(v) for v in h.tL_img],
                          [H.left_mul_by(v) for v in h.tL_img], name="regular-rL")
        car_lR = Bimodule(h.A, d, [H.right_mul_by(v) for v in h.tR_img],
                          [H.left_mul_by(v) for v in h.tR_img], name="regular-lR")
        coactions["rL"] = ComoduleStructure(h, "right", "L", car_rL, h.L.coproduct)
        coactions["lR"] = ComoduleStructure(h, "left", "R", car_lR, h.R.coproduct)
        kind = "full"
    return HopfBimodule(h, kind, lmul, rmul, coactions, name=f"{h.name}-regular")


def unit_yd(h: HopfAlgebroid) -> YDModule:
    """The monoidal unit of right-right Yetter-Drinfeld modules: the left
    coinvariants of the regular Hopf bimodule (the image of the base inside
    the total algebra, with the translation-map action)."""
    cached = getattr(h, "_unit_yd", None)
    if cached is not None:
        return cached
    reg = regular_hopf_bimodule(h, full=True)
    _, lam = coinvariants(reg, "left")
    lam.name = f"{h.name}-unit" if h.name else "unit"
    h._unit_yd = lam
    return lam


def _express(emb: Mat, rel_rows: Mat, target):
    """Coordinates q with emb @ q = target modulo the span of rel_rows."""
    k = emb.ncols
    nr = rel_rows.nrows
    aug = Mat(emb.nrows, k + nr, emb.field)
    for i in range(emb.nrows):
        row = dict(emb.rows[i])
        for rj in range(nr):
            v = rel_rows.rows[rj].get(i)
            if v is not None:
                row[k + rj] = v
        aug.rows[i] = row
    sol = solve(aug, target)
    if sol is None:
        return None
    return sol[:k]


def _restrict_action(kmat: Mat, mat: Mat) -> Mat:
    """Restriction of an ambient operator to the subspace spanned by kmat."""
    from .linalg import solve_matrix
    res = solve_matrix(kmat, mat @ kmat)
    if res is None:
        raise NotWellDefined("operator does not preserve the subspace")
    return res


def _restrict_comodule(h: HopfAlgebroid, coa: ComoduleStructure, kmat: Mat) -> ComoduleStructure:
    """Comodule structure induced on a coaction-stable subspace."""
    k = kmat.ncols
    d = h.H.dim
    field = h.field
    car = coa.carrier
    left = [_restrict_action(kmat, m) for m in car.left]
    right = [_restrict_action(kmat, m) for m in car.right]
    sub_car = Bimodule(car.base, k, left, right, name=f"{car.name}-restricted")
    ident_h = Mat.identity(d, field)
    emb = kmat.kron(ident_h) if coa.side == "right" else ident_h.kron(kmat)
    sp = coa.space()
    cols = []
    for j in range(k):
        target = coa.coaction.apply(kmat.col(j))
        q = _express(emb, sp.relations, target)
        if q is None:
            raise NotWellDefined("coaction does not restrict to the subspace")
        cols.append(q)
    sub_coa = Mat.from_cols(cols, k * d, field)
    return ComoduleStructure(h, coa.side, coa.over, sub_car, sub_coa)


def coinvariants(g: HopfBimodule, side: str = "left"):
    """Coinvariant subspace of a Hopf bimodule with its induced YD structure.

    side='left' solves ld(e) = 1 (x) e and equips the kernel with the action
    e < X = X^- > e < X^+ (an RR Yetter-Drinfeld module); side='right'
    solves d_R(e) = e (x) 1 with X > e = X+ > e < X- (an LL one).  Returns
    (inclusion matrix, YDModule).
    """
    h = g.hopf
    H, d = h.H, h.H.dim
    field = h.field
    n = g.dim
    t = h.translation()
    if side == "left":
        coa = g.coa("lL")
        sp = coa.space()
        embed = Mat(d * n, n, field)
        for gi in range(n):
            for k, c in enumerate(H.unit):
                if c:
                    embed.rows[k * n + gi][gi] = c
        diff = sp.projection @ (coa.coaction - embed)
        basis = kernel(diff)
        kmat = Mat.from_cols(basis, n, field)
        kdim = kmat.ncols
        act = []
        for i in range(d):
            w = t.hminus_hplus.col(i)  # X^- (x) X^+
            op = Mat.zeros(n, n, field)
            for p, c in enumerate(w):
                if not c:
                    continue
                u, v = divmod(p, d)
                op = op + (g.act_left_by(H.basis_vec(u)) @ g.act_right_by(H.basis_vec(v))).scale(c)
            act.append(_restrict_action(kmat, op))
        module = ModuleStructure(h, "right", act)
        comodule = _restrict_comodule(h, g.coa("rR"), kmat)
        second = None
        if g.kind == "full":
            second = _restrict_comodule(h, g.coa("rL"), kmat)
        return kmat, YDModule(h, "rr", module, comodule, second,
                              name=f"{g.name}-coinvL" if g.name else "coinvL")
    if side != "right":
        raise ValueError(side)
    coa = g.coa("rR")
    sp = coa.space()
    embed = Mat(n * d, n, field)
    for gi in range(n):
        for k, c in enumerate(H.unit):
            if c:
                embed.rows[gi * d + k][gi] = c
    diff = sp.projection @ (coa.coaction - embed)
    basis = kernel(diff)
    kmat = Mat.from_cols(basis, n, field)
    act = []
    for i in range(d):
        w = t.plus_minus.col(i)  # X+ (x) X-
        op = Mat.zeros(n, n, field)
        for p, c in enumerate(w):
            if not c:
                continue
            u, v = divmod(p, d)
            op = op + (g.act_left_by(H.basis_vec(u)) @ g.act_right_by(H.basis_vec(v))).scale(c)
        act.append(_restrict_action(kmat, op))
    module = ModuleStructure(h, "left", act)
    comodule = _restrict_comodule(h, g.coa("lL"), kmat)
    second = None
    if g.kind == "full":
        second = _restrict_comodule(h, g.coa("lR"), kmat)
    return kmat, YDModule(h, "ll", module, comodule, second,
                          name=f"{g.name}-coinvR" if g.name else "coinvR")


def free_hopf_bimodule(lam: YDModule) -> HopfBimodule:
    """L (x)_{Bop} Lambda for an RR Yetter-Drinfeld module Lambda, with
    Y > (X (x) e) < Z = Y X Z[1] (x) e < Z[2]; full when Lambda is full."""
    if lam.flavor != "rr":
        raise ValueError("free Hopf bimodule needs an RR Yetter-Drinfeld module")
    h = lam.hopf
    H, d = h.H, h.H.dim
    field = h.field
    n = lam.dim
    act_tR = [lam.module.act_by(v) for v in h.tR_img]
    quot = ProductSpace([d, n], [(0, 1, [H.right_mul_by(v) for v in h.sR_img], act_tR)],
                        field, name="free")
    q = quot
    ident_n = Mat.identity(n, field)
    ident_h = Mat.identity(d, field)

    left_act = [induced_map(H.left_mul(i).kron(ident_n), q, q, what="free-left-action")
                for i in range(d)]
    right_act = []
    for i in range(d):
        amb = Mat.zeros(d * n, d * n, field)
        w = h.R.coproduct.col(i)
        for p, c in enumerate(w):
            if not c:
                continue
            u, v = divmod(p, d)
            amb = amb + H.right_mul(u).kron(lam.module.act[v]).scale(c)
        right_act.append(induced_map(amb, q, q, what="free-right-action"))

    def on_quotient(coact_plain: Mat, side: str) -> Mat:
        # rewrite a plain H (x) V coaction target through the quotient
        if side == "left":
            return ident_h.kron(q.projection) @ coact_plain @ q.section
        return q.projection.kron(ident_h) @ coact_plain @ q.section

    # left L-coaction: X (x) e -> X1 (x) (X2 (x) e)
    lL_plain = h.L.coproduct.kron(ident_n)
    car_lL = Bimodule(h.B, q.dim,
                      [induced_map(H.left_mul_by(v).kron(ident_n), q, q, "free-lL-left")
                       for v in h.sL_img],
                      [induced_map(H.right_mul_by(v).kron(ident_n), q, q, "free-lL-right")
                       for v in h.sL_img], name="free-lL")
    coa_lL = on_quotient(lL_plain, "left")

    # right R-coaction: X (x) e -> (X[1] (x) e[0]) (x) X[2] e[1]
    rR_plain = Mat.zeros(d * n * d, d * n, field)
    for i in range(d):
        w = h.R.coproduct.col(i)
        for gi in range(n):
            col = i * n + gi
            dd = lam.comodule.coaction.col(gi)
            for p, c in enumerate(w):
                if not c:
                    continue
                u, v = divmod(p, d)
                for pp, cc in enumerate(dd):
                    if not cc:
                        continue
                    g2, y = divmod(pp, d)
                    prod = H.mul[v][y]
                    for kk, s in enumerate(prod):
                        if s:
                            row = (u * n + g2) * d + kk
                            cur = rR_plain.rows[row].get(col)
                            val = c * cc * s
                            rR_plain.rows[row][col] = val if cur is None else cur + val
    car_rR = Bimodule(h.A, q.dim,
                      [induced_map(H.left_mul_by(v).kron(ident_n), q, q, "free-rR-left")
                       for v in h.sR_img],
                      [induced_map(ident_h.kron(lam.comodule.carrier.right_by(h.A.basis_vec(a))),
                                   q, q, "free-rR-right")
                       for a in range(h.A.dim)], name="free-rR")
    coa_rR = q.projection.kron(ident_h) @ rR_plain @ q.section

    coactions = {
        "lL": ComoduleStructure(h, "left", "L", car_lL, coa_lL),
        "rR": ComoduleStructure(h, "right", "R", car_rR, coa_rR),
    }
    kind = "hopf"
    if lam.full:
        # rd: X (x) e -> X[1] (x) (X[2] (x) e)
        car_lR = Bimodule(h.A, q.dim,
                          [induced_map(H.right_mul_by(v).kron(ident_n), q, q, "free-lR-left")
                           for v in h.tR_img],
                          [induced_map(H.left_mul_by(v).kron(ident_n), q, q, "free-lR-right")
                           for v in h.tR_img], name="free-lR")
        coa_lR = on_quotient(h.R.coproduct.kron(ident_n), "left")
        # d_L: X (x) e -> (X1 (x) e(0)) (x) X2 e(1)
        rL_plain = Mat.zeros(d * n * d, d * n, field)
        for i in range(d):
            w = h.L.coproduct.col(i)
            for gi in range(n):
                col = i * n + gi
                dd = lam.second.coaction.col(gi)
                for p, c in enumerate(w):
                    if not c:
                        continue
                    u, v = divmod(p, d)
                    for pp, cc in enumerate(dd):
                        if not cc:
                            continue
                        g2, y = divmod(pp, d)
                        prod = H.mul[v][y]
                        for kk, s in enumerate(prod):
                            if s:
                                row = (u * n + g2) * d + kk
                                cur = rL_plain.rows[row].get(col)
                                val = c * cc * s
                                rL_plain.rows[row][col] = val if cur is None else cur + val
        car_rL = Bimodule(h.B, q.dim,
                          [induced_map(ident_h.kron(lam.second.carrier.left[b]), q, q,
                                       "free-rL-left") for b in range(h.B.dim)],
                          [induced_map(H.left_mul_by(v).kron(ident_n), q, q, "free-rL-right")
                           for v in h.tL_img], name="free-rL")
        coa_rL = q.projection.kron(ident_h) @ rL_plain @ q.section
        coactions["lR"] = ComoduleStructure(h, "left", "R", car_lR, coa_lR)
        coactions["rL"] = ComoduleStructure(h, "right", "L", car_rL, coa_rL)
        kind = "full"
    out = HopfBimodule(h, kind, left_act, right_act, coactions,
                       name=f"free({lam.name})" if lam.name else "free")
    out.quotient = quot
    out.fiber = lam
    return out


def phi(g: HopfBimodule, free: HopfBimodule | None = None, kmat: Mat | None = None,
        lam: YDModule | None = None) -> Mat:
    """The equivalence Gamma -> L (x)_{Bop} coinv(Gamma), as a matrix;
    rho -> rho(-1)+ (x) rho(-1)- > rho(0)."""
    h = g.hopf
    H, d = h.H, h.H.dim
    field = h.field
    n = g.dim
    if kmat is None or lam is None:
        kmat, lam = coinvariants(g, "left")
    if free is None:
        free = free_hopf_bimodule(lam)
    q = free.quotient
    t = h.translation()
    emb = Mat.identity(d, field).kron(kmat) @ q.section
    rel_big = Mat(q.relations.nrows, d * n, field)
    big_embed = Mat.identity(d, field).kron(kmat)
    for i in range(q.relations.nrows):
        rel_big.rows[i] = big_embed.apply_dict(q.relations.rows[i])
    cols = []
    for rj in range(n):
        w = g.coa("lL").coaction.col(rj)
        target = [field.zero()] * (d * n)
        for p, c in enumerate(w):
            if not c:
                continue
            x, gi = divmod(p, n)
            pmv = t.plus_minus.col(x)
            gv = [field.one() if s == gi else field.zero() for s in range(n)]
            for pp, cc in enumerate(pmv):
                if not cc:
                    continue
                u, v = divmod(pp, d)
                acted = g.act_left_by(H.basis_vec(v)).apply(gv)
                for gg, ca in enumerate(acted):
                    if ca:
                        target[u * n + gg] = target[u * n + gg] + c * cc * ca
        qcoords = _express(emb, rel_big, target)
        if qcoords is None:
            raise NotWellDefined("phi image escaped the free bimodule")
        cols.append(qcoords)
    return Mat.from_cols(cols, q.dim, field)


def phi_inv(g: HopfBimodule, free: HopfBimodule | None = None, kmat: Mat | None = None,
            lam: YDModule | None = None) -> Mat:
    """The inverse equivalence: X (x) e -> X > e."""
    h = g.hopf
    d = h.H.dim
    field = h.field
    if kmat is None or lam is None:
        kmat, lam = coinvariants(g, "left")
    if free is None:
        free = free_hopf_bimodule(lam)
    q = free.quotient
    n = g.dim
    amb = Mat.zeros(n, d * kmat.ncols, field)
    for x in range(d):
        acted = g.act_left_by(h.H.basis_vec(x)) @ kmat
        for kj in range(kmat.ncols):
            col = acted.col(kj)
            for i, c in enumerate(col):
                if c:
                    amb.rows[i][x * kmat.ncols + kj] = c
    from .linalg import full_space
    return induced_map(amb, q, full_space(n, field), what="phi-inverse")


def decompose(g: HopfBimodule, rho, orientation: str = "right"):
    """Write rho as sum of coinvariants hit by total-algebra elements:
    orientation 'right' gives rho = sum Y_i > e_i, 'left' gives
    rho = sum e_i < X_i.  Returns a list of (e_vec, x_vec) pairs."""
    h = g.hopf
    H, d = h.H, h.H.dim
    field = h.field
    kmat, lam = coinvariants(g, "left")
    free = free_hopf_bimodule(lam)
    ph = phi(g, free, kmat, lam)
    rep = free.quotient.section.apply(ph.apply(rho))
    k = kmat.ncols
    pairs = []
    t = h.translation()
    for p, c in enumerate(rep):
        if not c:
            continue
        x, kj = divmod(p, k)
        eta = kmat.col(kj)
        if orientation == "right":
            pairs.append((eta, [c if s == x else field.zero() for s in range(d)]))
        else:
            # X > e = (e < X^[-]) < X^[+]
            w = t.hplus_hminus.col(x)  # X^[+] (x) X^[-]
            for pp, cc in enumerate(w):
                if not cc:
                    continue
                u, v = divmod(pp, d)
                eta2 = kmat @ lam.module.act[v]
                eta_new = eta2.apply([field.one() if s == kj else field.zero()
                                      for s in range(k)])
                pairs.append((eta_new, [c * cc if s == u else field.zero() for s in range(d)]))
    return pairs


def reevaluate_decomposition(g: HopfBimodule, pairs, orientation: str = "right"):
    """Fold a decomposition back into an element of the bimodule."""
    field = g.hopf.field
    out = [field.zero()] * g.dim
    for (eta, xv) in pairs:
        if orientation == "right":
            part = g.act_left_by(xv).apply(eta)
        else:
            part = g.act_right_by(xv).apply(eta)
        out = [a + b for a, b in zip(out, part)]
    return out
