"""Hopf algebroids: the four translation (Galois) maps, antipode axioms,
the derived right bialgebroid, and the full identity suite.

The translation maps are built from the coproducts as quotient-level maps
(every "factors through" claim is an executable well-definedness check) and
inverted exactly; their inverses yield the +/-, [+]/[-] and hatted
shorthand expansions as concrete elements of the appropriate balanced
tensor quotients.

The identity suite is data driven: each identity is a record with two
little programs built from slot operations (coproducts, translation-map
expansions, multiplications, base maps) plus the quotient the comparison
lives in.  Identities quantified over base elements are checked on base
basis vectors only; linearity makes that complete.
"""

from __future__ import annotations

import time

from .algebra import AlgebraMap, FinDimAlgebra, opposite
from .bialgebroid import LeftBialgebroid, RightBialgebroid
from .bimodules import ProductSpace, induced_map
from .linalg import Mat, Singular, invert_map
from .reports import Report
from .tensors import apply_slot, left_unit_embed, mul_slots, permute_slots, right_unit_embed, tvec


class NotLeftHopf(ValueError):
    pass


class NotAntiLeftHopf(ValueError):
    pass


class NotRightHopf(ValueError):
    pass


class NotAntiRightHopf(ValueError):
    pass


class DerivationFailed(ValueError):
    pass


class TranslationMaps:
    """The four Galois maps with exact inverses and shorthand extractors.

    Extractors return plain-tensor representatives:
      plus_minus:       X -> X+ (x) X-            (in H (x)_{Bop} H)
      bminus_bplus:     X -> X[-] (x) X[+]        (in H (x)^{Bop} H)
      hminus_hplus:     X -> X^- (x) X^+          (in H (x)_{Aop} H)
      hplus_hminus:     X -> X^[+] (x) X^[-]      (in H (x)^{Aop} H)
    """

    def __init__(self, lam, lam_inv, mu, mu_inv, lam_hat, lam_hat_inv, mu_hat, mu_hat_inv,
                 plus_minus, bminus_bplus, hminus_hplus, hplus_hminus):
        self.lam = lam
        self.lam_inv = lam_inv
        self.mu = mu
        self.mu_inv = mu_inv
        self.lam_hat = lam_hat
        self.lam_hat_inv = lam_hat_inv
        self.mu_hat = mu_hat
        self.mu_hat_inv = mu_hat_inv
        self.plus_minus = plus_minus
        self.bminus_bplus = bminus_bplus
        self.hminus_hplus = hminus_hplus
        self.hplus_hminus = hplus_hminus


class HopfAlgebroid:
    """(L, R, S): matching left and right bialgebroid structures on one total
    algebra, linked by an invertible antipode."""

    def __init__(self, left: LeftBialgebroid, right: RightBialgebroid, s_map: Mat,
                 s_inv: Mat, name: str = ""):
        if left.total.dim != right.total.dim:
            raise ValueError("left and right structures must share the total algebra")
        if left.base.dim != right.base.dim:
            raise ValueError("base of R must be the opposite of the base of L")
        self.L = left
        self.R = right
        self.S = s_map
        self.Si = s_inv
        self.name = name
        self.H = left.total
        self.B = left.base
        self.A = right.base
        self.field = left.total.field
        self._spaces: dict = {}
        self._translation: TranslationMaps | None = None
        d = self.H.dim
        self.lmul = [self.H.left_mul(i) for i in range(d)]
        self.rmul = [self.H.right_mul(i) for i in range(d)]
        self.sL_img = left._s_img
        self.tL_img = left._t_img
        self.sR_img = right._s_img
        self.tR_img = right._t_img

    # -- relation families on pairs of H-factors ------------------------

    def family(self, name: str):
        h = self.H
        if name == "B":      # t_L(b) u (x) v = u (x) s_L(b) v
            return ([h.left_mul_by(v) for v in self.tL_img],
                    [h.left_mul_by(v) for v in self.sL_img])
        if name == "Bop":    # u t_L(b) (x) v = u (x) t_L(b) v
            return ([h.right_mul_by(v) for v in self.tL_img],
                    [h.left_mul_by(v) for v in self.tL_img])
        if name == "upBop":  # s_L(b) u (x) v = u (x) v s_L(b)
            return ([h.left_mul_by(v) for v in self.sL_img],
                    [h.right_mul_by(v) for v in self.sL_img])
        if name == "A":      # u s_R(a) (x) v = u (x) v t_R(a)
            return ([h.right_mul_by(v) for v in self.sR_img],
                    [h.right_mul_by(v) for v in self.tR_img])
        if name == "Aop":    # u t_R(a) (x) v = u (x) t_R(a) v
            return ([h.right_mul_by(v) for v in self.tR_img],
                    [h.left_mul_by(v) for v in self.tR_img])
        if name == "upAop":  # s_R(a) u (x) v = u (x) v s_R(a)
            return ([h.left_mul_by(v) for v in self.sR_img],
                    [h.right_mul_by(v) for v in self.sR_img])
        raise ValueError(f"unknown relation family {name!r}")

    def space(self, spec) -> ProductSpace:
        """Tensor power of H modulo the relation families in `spec`, a tuple
        of (i, j, family-name) triples; cached."""
        spec = tuple((int(i), int(j), str(n)) for (i, j, n) in spec)
        if spec not in self._spaces:
            nfac = 1 + max(max(i, j) for (i, j, _) in spec) if spec else 1
            d = self.H.dim
            fams = []
            for (i, j, name) in spec:
                p, q = self.family(name)
                fams.append((i, j, p, q))
            self._spaces[spec] = ProductSpace([d] * nfac, fams, self.field,
                                              name="|".join(n for (_, _, n) in spec))
        return self._spaces[spec]

    def pair(self, name: str) -> ProductSpace:
        return self.space(((0, 1, name),))

    # -- translation maps ------------------------------------------------

    def _galois_ambient(self, which: str) -> Mat:
        """Ambient formulas of the four Galois maps on H (x) H (input e_i (x) e_j)."""
        h = self.H
        d = h.dim
        out = Mat(d * d, d * d, self.field)

        def add(row, col, val):
            cur = out.rows[row].get(col)
            cur = val if cur is None else cur + val
            if cur:
                out.rows[row][col] = cur
            elif col in out.rows[row]:
                del out.rows[row][col]

        cop = self.L.coproduct if which in ("lam", "mu") else self.R.coproduct
        for i in range(d):
            for j in range(d):
                col = i * d + j
                src = i if which in ("lam", "hat_mu") else j
                for p, c in enumerate(cop.col(src)):
                    if not c:
                        continue
                    u, v = divmod(p, d)
                    if which == "lam":        # X (x) Y -> X1 (x) X2 Y
                        for k, s in enumerate(h.mul[v][j]):
                            if s:
                                add(u * d + k, col, c * s)
                    elif which == "mu":       # X (x) Y -> Y1 X (x) Y2
                        for k, s in enumerate(h.mul[u][i]):
                            if s:
                                add(k * d + v, col, c * s)
                    elif which == "hat_lam":  # X (x) Y -> X Y[1] (x) Y[2]
                        for k, s in enumerate(h.mul[i][u]):
                            if s:
                                add(k * d + v, col, c * s)
                    else:                     # hat_mu: X (x) Y -> X[1] (x) Y X[2]
                        for k, s in enumerate(h.mul[j][v]):
                            if s:
                                add(u * d + k, col, c * s)
        return out

    def translation(self) -> TranslationMaps:
        if self._translation is not None:
            return self._translation
        tb, tbop, tupbop = self.pair("B"), self.pair("Bop"), self.pair("upBop")
        ta, taop, tupaop = self.pair("A"), self.pair("Aop"), self.pair("upAop")

        lam = induced_map(self._galois_ambient("lam"), tbop, tb, what="lambda")
        mu = induced_map(self._galois_ambient("mu"), tupbop, tb, what="mu")
        lam_hat = induced_map(self._galois_ambient("hat_lam"), taop, ta, what="lambda-hat")
        mu_hat = induced_map(self._galois_ambient("hat_mu"), tupaop, ta, what="mu-hat")

        try:
            lam_inv = invert_map(lam)
        except Singular as e:
            raise NotLeftHopf(str(e)) from e
        try:
            mu_inv = invert_map(mu)
        except Singular as e:
            raise NotAntiLeftHopf(str(e)) from e
        try:
            lam_hat_inv = invert_map(lam_hat)
        except Singular as e:
            raise NotRightHopf(str(e)) from e
        try:
            mu_hat_inv = invert_map(mu_hat)
        except Singular as e:
            raise NotAntiRightHopf(str(e)) from e

        plus_minus = tbop.section @ lam_inv @ tb.projection @ right_unit_embed(self.H)
        bminus_bplus = tupbop.section @ mu_inv @ tb.projection @ left_unit_embed(self.H)
        hminus_hplus = taop.section @ lam_hat_inv @ ta.projection @ left_unit_embed(self.H)
        hplus_hminus = tupaop.section @ mu_hat_inv @ ta.projection @ right_unit_embed(self.H)

        self._translation = TranslationMaps(lam, lam_inv, mu, mu_inv, lam_hat, lam_hat_inv,
                                            mu_hat, mu_hat_inv, plus_minus, bminus_bplus,
                                            hminus_hplus, hplus_hminus)
        return self._translation

    def multiply(self, u, v):
        return self.H.multiply(u, v)

    def __repr__(self):
        return f"HopfAlgebroid({self.name or '?'}, dim={self.H.dim})"

    @staticmethod
    def from_left(left: LeftBialgebroid, s_map: Mat, name: str = "",
                  verify: bool = True) -> "HopfAlgebroid":
        s_inv = invert_map(s_map)
        right = derive_right_bialgebroid(left, s_map, s_inv, verify=verify)
        return HopfAlgebroid(left, right, s_map, s_inv, name=name)


def derive_right_bialgebroid(left: LeftBialgebroid, s_map: Mat, s_inv: Mat | None = None,
                             verify: bool = True) -> RightBialgebroid:
    """Right bialgebroid over A = B^op induced by the antipode:
    s_R = t_L, t_R = S^{-1} t_L, Delta_R(X) = S(S^{-1}(X)_2) (x) S(S^{-1}(X)_1),
    eps_R = eps_L S."""
    h = left.total
    if s_inv is None:
        s_inv = invert_map(s_map)
    base_a = opposite(left.base)
    s_r = AlgebraMap(base_a, h, left.t.matrix, variant="algebra")
    t_r = AlgebraMap(base_a, h, s_inv @ left.t.matrix, variant="anti")
    from .tensors import flip_mat
    d = h.dim
    flip = flip_mat(d, d, h.field)
    cop_r = flip @ s_map.kron(s_map) @ left.coproduct @ s_inv
    eps_r = left.counit @ s_map
    right = RightBialgebroid(h, base_a, s_r, t_r, cop_r, eps_r,
                             name=f"{left.name}-derived" if left.name else "derived")
    if verify:
        from .bialgebroid import check_right_bialgebroid
        rep = check_right_bialgebroid(right)
        if not rep.ok:
            raise DerivationFailed(f"derived right bialgebroid fails: {rep.clauses()}")
    return right


def check_antipode(h: HopfAlgebroid) -> Report:
    """Antipode axioms in both the left and right form, plus the equations
    deriving the stored right bialgebroid from (L, S)."""
    from .algebra import check_algebra_map
    rep = Report(f"antipode:{h.name or '?'}")
    H, d = h.H, h.H.dim
    ident = Mat.identity(d, h.field)

    rep.extend(check_algebra_map(AlgebraMap(H, H, h.S, variant="anti")), prefix="antipode-")
    rep.extend(check_algebra_map(AlgebraMap(H, H, h.Si, variant="anti")), prefix="antipode-inverse-")
    if h.S @ h.Si != ident or h.Si @ h.S != ident:
        rep.add("antipode-bijective")
    if h.S @ h.L.t.matrix != h.L.s.matrix:
        rep.add("antipode-target-to-source")

    c = _Ctx(h)
    tb, ta = h.pair("B"), h.pair("A")

    for j in range(d):
        x = H.basis_vec(j)
        # (S^{-1} X_2)_1 (x) (S^{-1} X_2)_2 X_1  =  S^{-1}(X) (x) 1
        v, dims = c.DL(x), [d, d]
        v, dims = apply_slot(h.field, v, dims, 1, h.Si)
        v, dims = apply_slot(h.field, v, dims, 1, h.L.coproduct, split=[d, d])
        v, dims = permute_slots(h.field, v, dims, (1, 2, 0))
        v, dims = mul_slots(h.field, H, v, dims, 1, 2)
        if tb.project(v) != tb.project(tvec(h.field, h.Si.apply(x), H.unit)):
            rep.add("axiom-left-1", {"X": j})
        # (S X_1)_1 X_2 (x) (S X_1)_2  =  1 (x) S(X)
        v, dims = c.DL(x), [d, d]
        v, dims = apply_slot(h.field, v, dims, 0, h.S)
        v, dims = apply_slot(h.field, v, dims, 0, h.L.coproduct, split=[d, d])
        v, dims = permute_slots(h.field, v, dims, (0, 2, 1))
        v, dims = mul_slots(h.field, H, v, dims, 0, 1)
        if tb.project(v) != tb.project(tvec(h.field, H.unit, h.S.apply(x))):
            rep.add("axiom-left-2", {"X": j})
        # X_[2] S^{-1}(X_[1])_[1] (x) S^{-1}(X_[1])_[2]  =  1 (x) S^{-1}(X)
        v, dims = c.DR(x), [d, d]
        v, dims = apply_slot(h.field, v, dims, 0, h.Si)
        v, dims = apply_slot(h.field, v, dims, 0, h.R.coproduct, split=[d, d])
        v, dims = permute_slots(h.field, v, dims, (2, 0, 1))
        v, dims = mul_slots(h.field, H, v, dims, 0, 1)
        if ta.project(v) != ta.project(tvec(h.field, H.unit, h.Si.apply(x))):
            rep.add("axiom-right-1", {"X": j})
        # S(X_[2])_[1] (x) X_[1] S(X_[2])_[2]  =  S(X) (x) 1
        v, dims = c.DR(x), [d, d]
        v, dims = apply_slot(h.field, v, dims, 1, h.S)
        v, dims = apply_slot(h.field, v, dims, 1, h.R.coproduct, split=[d, d])
        v, dims = permute_slots(h.field, v, dims, (1, 0, 2))
        v, dims = mul_slots(h.field, H, v, dims, 1, 2)
        if ta.project(v) != ta.project(tvec(h.field, h.S.apply(x), H.unit)):
            rep.add("axiom-right-2", {"X": j})

    # mixed coassociativity linking the two coproducts
    mixed1 = h.space(((0, 1, "B"), (1, 2, "A")))
    lhs = mixed1.projection @ _expand_mat(h, h.L.coproduct, 1, h.R.coproduct)
    rhs = mixed1.projection @ _expand_mat(h, h.R.coproduct, 0, h.L.coproduct)
    if lhs != rhs:
        rep.add("mixed-coassociativity-1")
    mixed2 = h.space(((0, 1, "A"), (1, 2, "B")))
    lhs = mixed2.projection @ _expand_mat(h, h.R.coproduct, 1, h.L.coproduct)
    rhs = mixed2.projection @ _expand_mat(h, h.L.coproduct, 0, h.R.coproduct)
    if lhs != rhs:
        rep.add("mixed-coassociativity-2")

    # agreement of the stored right bialgebroid with the derived one
    if h.R.s.matrix != h.L.t.matrix:
        rep.add("derived-source")
    if h.R.t.matrix != h.Si @ h.L.t.matrix:
        rep.add("derived-target")
    from .tensors import flip_mat
    flip = flip_mat(d, d, h.field)
    derived_cop = flip @ h.S.kron(h.S) @ h.L.coproduct @ h.Si
    if ta.projection @ derived_cop != ta.projection @ h.R.coproduct:
        rep.add("derived-coproduct")
    derived_cop_alt = flip @ h.Si.kron(h.Si) @ h.L.coproduct @ h.S
    if ta.projection @ derived_cop_alt != ta.projection @ h.R.coproduct:
        rep.add("derived-coproduct-alt")
    if h.R.counit != h.L.counit @ h.S:
        rep.add("derived-counit")

    # subring equalities s_L(B) = t_R(A), t_L(B) = s_R(A)
    from .linalg import rank
    for (m1, m2, clause) in ((h.L.s.matrix, h.R.t.matrix, "subring-s"),
                             (h.L.t.matrix, h.R.s.matrix, "subring-t")):
        both = Mat(d, m1.ncols + m2.ncols, h.field)
        for i in range(d):
            both.rows[i] = dict(m1.rows[i])
            for jj, v in m2.rows[i].items():
                both.rows[i][m1.ncols + jj] = v
        if rank(both) != rank(m1) or rank(m1) != rank(m2):
            rep.add(clause)
    return rep


def _expand_mat(h: HopfAlgebroid, first: Mat, slot: int, second: Mat) -> Mat:
    """Matrix of X -> (second applied to `slot` of first(X)) on plain tensors."""
    d = h.H.dim
    ident = Mat.identity(d, h.field)
    if slot == 0:
        return second.kron(ident) @ first
    return ident.kron(second) @ first


# -- identity suite -----------------------------------------------------


class _Ctx:
    """Slot-level primitives for the identity programs (plain representatives)."""

    def __init__(self, h: HopfAlgebroid):
        self.h = h
        self.field = h.field
        self.d = h.H.dim
        t = h.translation()
        self.pm = t.plus_minus.apply          # X+ (x) X-
        self.bm = t.bminus_bplus.apply        # X[-] (x) X[+]
        self.hm = t.hminus_hplus.apply        # X^- (x) X^+
        self.hp = t.hplus_hminus.apply        # X^[+] (x) X^[-]
        self.pm_mat = t.plus_minus
        self.bm_mat = t.bminus_bplus
        self.hm_mat = t.hminus_hplus
        self.hp_mat = t.hplus_hminus
        self.sL_eps = h.L.s.matrix @ h.L.counit
        self.tL_eps = h.L.t.matrix @ h.L.counit
        self.sR_eps = h.R.s.matrix @ h.R.counit
        self.tR_eps = h.R.t.matrix @ h.R.counit
        self.lmul_sL = [h.H.left_mul_by(v) for v in h.sL_img]
        self.rmul_sL = [h.H.right_mul_by(v) for v in h.sL_img]
        self.lmul_tL = [h.H.left_mul_by(v) for v in h.tL_img]
        self.rmul_tL = [h.H.right_mul_by(v) for v in h.tL_img]
        self.lmul_sR = [h.H.left_mul_by(v) for v in h.sR_img]
        self.rmul_sR = [h.H.right_mul_by(v) for v in h.sR_img]
        self.lmul_tR = [h.H.left_mul_by(v) for v in h.tR_img]
        self.rmul_tR = [h.H.right_mul_by(v) for v in h.tR_img]

    def DL(self, x):
        return self.h.L.coproduct.apply(x)

    def DR(self, x):
        return self.h.R.coproduct.apply(x)

    def S(self, x):
        return self.h.S.apply(x)

    def Si(self, x):
        return self.h.Si.apply(x)

    def mul(self, u, v):
        return self.h.H.multiply(u, v)

    def one(self):
        return self.h.H.unit

    def t(self, *vecs):
        return tvec(self.field, *vecs)

    def ex(self, v, n, slot, mat):
        """Expand slot (H -> H (x) H matrix)."""
        out, _ = apply_slot(self.field, v, [self.d] * n, slot, mat)
        return out

    def ap(self, v, n, slot, mat):
        out, _ = apply_slot(self.field, v, [self.d] * n, slot, mat)
        return out

    def pr(self, v, n, perm):
        out, _ = permute_slots(self.field, v, [self.d] * n, perm)
        return out

    def mu2(self, v, n, i, j):
        out, _ = mul_slots(self.field, self.h.H, v, [self.d] * n, i, j)
        return out


def identity_catalogue():
    """All translation-map identities: (label, space-spec, params, lhs, rhs).

    space-spec is a tuple of (i, j, family) balancing relations (None means
    compare in H itself); params is "X", "XY", "aX" or "" for quantifiers.
    """
    B, Bop, upBop = "B", "Bop", "upBop"
    A, Aop, upAop = "A", "Aop", "upAop"

    def adj(*names):
        return tuple((i, i + 1, n) for i, n in enumerate(names))

    cat = []

    def add(label, space, params, lhs, rhs):
        cat.append({"label": label, "space": space, "params": params, "lhs": lhs, "rhs": rhs})

    # -- left Hopf (lambda) ------------------------------------------------
    add("lambda-inv-1", adj(B), "X",
        lambda c, x: c.mu2(c.ex(c.pm(x), 2, 0, c.h.L.coproduct), 3, 1, 2),
        lambda c, x: c.t(x, c.one()))
    add("lambda-inv-2", adj(Bop), "X",
        lambda c, x: c.mu2(c.ex(c.DL(x), 2, 0, c.pm_mat), 3, 1, 2),
        lambda c, x: c.t(x, c.one()))
    add("lambda-inv-3", adj(Bop), "XY",
        lambda c, x, y: c.pm(c.mul(x, y)),
        lambda c, x, y: c.mu2(c.mu2(c.pr(c.t(c.pm(x), c.pm(y)), 4, (0, 2, 3, 1)), 4, 0, 1), 3, 1, 2))
    add("lambda-inv-4", adj(Bop), "",
        lambda c: c.pm(c.one()),
        lambda c: c.t(c.one(), c.one()))
    add("lambda-inv-5", ((0, 1, B), (1, 2, Bop)), "X",
        lambda c, x: c.ex(c.pm(x), 2, 0, c.h.L.coproduct),
        lambda c, x: c.ex(c.DL(x), 2, 1, c.pm_mat))
    add("lambda-inv-6", ((1, 2, B), (0, 2, Bop)), "X",
        lambda c, x: c.ex(c.pm(x), 2, 1, c.h.L.coproduct),
        lambda c, x: c.pr(c.ex(c.pm(x), 2, 0, c.pm_mat), 3, (0, 2, 1)))
    add("lambda-inv-7", None, "X",
        lambda c, x: c.mu2(c.ap(c.pm(x), 2, 1, c.tL_eps), 2, 0, 1),
        lambda c, x: x)
    add("lambda-inv-8", None, "X",
        lambda c, x: c.mu2(c.pm(x), 2, 0, 1),
        lambda c, x: c.sL_eps.apply(x))
    add("lambda-inv-source-target-1", adj(Bop), "aX",
        lambda c, a, x: c.pm(c.mul(x, c.h.sL_img[a])),
        lambda c, a, x: c.ap(c.pm(x), 2, 0, c.rmul_sL[a]))
    add("lambda-inv-source-target-2", adj(Bop), "aX",
        lambda c, a, x: c.pm(c.mul(c.h.sL_img[a], x)),
        lambda c, a, x: c.ap(c.pm(x), 2, 0, c.lmul_sL[a]))
    add("lambda-inv-source-target-3", adj(Bop), "aX",
        lambda c, a, x: c.pm(c.mul(c.h.tL_img[a], x)),
        lambda c, a, x: c.ap(c.pm(x), 2, 1, c.rmul_sL[a]))
    add("lambda-inv-source-target-4", adj(Bop), "aX",
        lambda c, a, x: c.pm(c.mul(x, c.h.tL_img[a])),
        lambda c, a, x: c.ap(c.pm(x), 2, 1, c.lmul_sL[a]))
    add("lambda-inv-source-target-5", adj(Bop), "aX",
        lambda c, a, x: c.ap(c.pm(x), 2, 0, c.lmul_tL[a]),
        lambda c, a, x: c.ap(c.pm(x), 2, 1, c.rmul_tL[a]))

    # -- anti-left Hopf (mu) -----------------------------------------------
    add("mu-inv-1", adj(B), "X",
        lambda c, x: c.mu2(c.pr(c.ex(c.bm(x), 2, 1, c.h.L.coproduct), 3, (1, 0, 2)), 3, 0, 1),
        lambda c, x: c.t(c.one(), x))
    add("mu-inv-2", adj(upBop), "X",
        lambda c, x: c.mu2(c.pr(c.ex(c.DL(x), 2, 1, c.bm_mat), 3, (1, 0, 2)), 3, 0, 1),
        lambda c, x: c.t(c.one(), x))
    add("mu-inv-3", adj(upBop), "XY",
        lambda c, x, y: c.bm(c.mul(x, y)),
        lambda c, x, y: c.mu2(c.mu2(c.pr(c.t(c.bm(y), c.bm(x)), 4, (0, 2, 3, 1)), 4, 0, 1), 3, 1, 2))
    add("mu-inv-4", adj(upBop), "",
        lambda c: c.bm(c.one()),
        lambda c: c.t(c.one(), c.one()))
    add("mu-inv-5", ((0, 1, upBop), (1, 2, B)), "X",
        lambda c, x: c.ex(c.bm(x), 2, 1, c.h.L.coproduct),
        lambda c, x: c.ex(c.DL(x), 2, 0, c.bm_mat))
    add("mu-inv-6", ((0, 1, B), (0, 2, upBop)), "X",
        lambda c, x: c.ex(c.bm(x), 2, 0, c.h.L.coproduct),
        lambda c, x: c.pr(c.ex(c.bm(x), 2, 1, c.bm_mat), 3, (1, 0, 2)))
    add("mu-inv-7", None, "X",
        lambda c, x: c.mu2(c.ap(c.bm(x), 2, 0, c.sL_eps), 2, 1, 0),
        lambda c, x: x)
    add("mu-inv-8", None, "X",
        lambda c, x: c.mu2(c.bm(x), 2, 1, 0),
        lambda c, x: c.tL_eps.apply(x))
    add("mu-inv-9", adj(upBop), "aX",
        lambda c, a, x: c.bm(c.mul(x, c.h.sL_img[a])),
        lambda c, a, x: c.ap(c.bm(x), 2, 0, c.lmul_tL[a]))
    add("mu-inv-10", adj(upBop), "aX",
        lambda c, a, x: c.bm(c.mul(c.h.sL_img[a], x)),
        lambda c, a, x: c.ap(c.bm(x), 2, 0, c.rmul_tL[a]))
    add("mu-inv-11", adj(upBop), "aX",
        lambda c, a, x: c.bm(c.mul(x, c.h.tL_img[a])),
        lambda c, a, x: c.ap(c.bm(x), 2, 1, c.rmul_tL[a]))
    add("mu-inv-11b", adj(upBop), "aX",
        lambda c, a, x: c.bm(c.mul(c.h.tL_img[a], x)),
        lambda c, a, x: c.ap(c.bm(x), 2, 1, c.lmul_tL[a]))
    add("mu-inv-12", adj(upBop), "aX",
        lambda c, a, x: c.ap(c.bm(x), 2, 1, c.lmul_sL[a]),
        lambda c, a, x: c.ap(c.bm(x), 2, 0, c.rmul_sL[a]))

    # -- right Hopf (lambda-hat) --------------------------------------------
    add("lambda-hat-inv-1", adj(A), "X",
        lambda c, x: c.mu2(c.ex(c.hm(x), 2, 1, c.h.R.coproduct), 3, 0, 1),
        lambda c, x: c.t(c.one(), x))
    add("lambda-hat-inv-2", adj(Aop), "X",
        lambda c, x: c.mu2(c.ex(c.DR(x), 2, 1, c.hm_mat), 3, 0, 1),
        lambda c, x: c.t(c.one(), x))
    add("lambda-hat-inv-3", adj(Aop), "XY",
        lambda c, x, y: c.hm(c.mul(x, y)),
        lambda c, x, y: c.mu2(c.mu2(c.pr(c.t(c.hm(y), c.hm(x)), 4, (0, 2, 3, 1)), 4, 0, 1), 3, 1, 2))
    add("lambda-hat-inv-4", adj(Aop), "",
        lambda c: c.hm(c.one()),
        lambda c: c.t(c.one(), c.one()))
    add("lambda-hat-inv-5", ((0, 1, Aop), (1, 2, A)), "X",
        lambda c, x: c.ex(c.hm(x), 2, 1, c.h.R.coproduct),
        lambda c, x: c.ex(c.DR(x), 2, 0, c.hm_mat))
    add("lambda-hat-inv-6", ((0, 1, A), (0, 2, Aop)), "X",
        lambda c, x: c.pr(c.ex(c.hm(x), 2, 1, c.hm_mat), 3, (1, 0, 2)),
        lambda c, x: c.ex(c.hm(x), 2, 0, c.h.R.coproduct))
    add("lambda-hat-inv-7", None, "X",
        lambda c, x: c.mu2(c.ap(c.hm(x), 2, 0, c.tR_eps), 2, 0, 1),
        lambda c, x: x)
    add("lambda-hat-inv-8", None, "X",
        lambda c, x: c.mu2(c.hm(x), 2, 0, 1),
        lambda c, x: c.sR_eps.apply(x))
    add("lambda-hat-inv-source-target-1", adj(Aop), "aX",
        lambda c, a, x: c.hm(c.mul(x, c.h.sR_img[a])),
        lambda c, a, x: c.ap(c.hm(x), 2, 1, c.rmul_sR[a]))
    add("lambda-hat-inv-source-target-2", adj(Aop), "aX",
        lambda c, a, x: c.hm(c.mul(c.h.sR_img[a], x)),
        lambda c, a, x: c.ap(c.hm(x), 2, 1, c.lmul_sR[a]))
    add("lambda-hat-inv-source-target-3", adj(Aop), "aX",
        lambda c, a, x: c.hm(c.mul(c.h.tR_img[a], x)),
        lambda c, a, x: c.ap(c.hm(x), 2, 0, c.rmul_sR[a]))
    add("lambda-hat-inv-source-target-4", adj(Aop), "aX",
        lambda c, a, x: c.hm(c.mul(x, c.h.tR_img[a])),
        lambda c, a, x: c.ap(c.hm(x), 2, 0, c.lmul_sR[a]))
    add("lambda-hat-inv-source-target-5", adj(Aop), "aX",
        lambda c, a, x: c.ap(c.hm(x), 2, 0, c.lmul_tR[a]),
        lambda c, a, x: c.ap(c.hm(x), 2, 1, c.rmul_tR[a]))

    # -- anti-right Hopf (mu-hat) --------------------------------------------
    add("mu-hat-inv-1", adj(A), "X",
        lambda c, x: c.mu2(c.pr(c.ex(c.hp(x), 2, 0, c.h.R.coproduct), 3, (0, 2, 1)), 3, 1, 2),
        lambda c, x: c.t(x, c.one()))
    add("mu-hat-inv-2", adj(upAop), "X",
        lambda c, x: c.mu2(c.pr(c.ex(c.DR(x), 2, 0, c.hp_mat), 3, (0, 2, 1)), 3, 1, 2),
        lambda c, x: c.t(x, c.one()))
    add("mu-hat-inv-3", adj(upAop), "XY",
        lambda c, x, y: c.hp(c.mul(x, y)),
        lambda c, x, y: c.mu2(c.mu2(c.pr(c.t(c.hp(x), c.hp(y)), 4, (0, 2, 3, 1)), 4, 0, 1), 3, 1, 2))
    add("mu-hat-inv-4", adj(upAop), "",
        lambda c: c.hp(c.one()),
        lambda c: c.t(c.one(), c.one()))
    add("mu-hat-inv-5", ((0, 1, A), (1, 2, upAop)), "X",
        lambda c, x: c.ex(c.hp(x), 2, 0, c.h.R.coproduct),
        lambda c, x: c.ex(c.DR(x), 2, 1, c.hp_mat))
    add("mu-hat-inv-6", ((1, 2, A), (0, 2, upAop)), "X",
        lambda c, x: c.ex(c.hp(x), 2, 1, c.h.R.coproduct),
        lambda c, x: c.pr(c.ex(c.hp(x), 2, 0, c.hp_mat), 3, (0, 2, 1)))
    add("mu-hat-inv-7", None, "X",
        lambda c, x: c.mu2(c.ap(c.hp(x), 2, 1, c.sR_eps), 2, 1, 0),
        lambda c, x: x)
    add("mu-hat-inv-8", None, "X",
        lambda c, x: c.mu2(c.hp(x), 2, 1, 0),
        lambda c, x: c.tR_eps.apply(x))
    add("mu-hat-inv-9", adj(upAop), "aX",
        lambda c, a, x: c.hp(c.mul(x, c.h.sR_img[a])),
        lambda c, a, x: c.ap(c.hp(x), 2, 1, c.lmul_tR[a]))
    add("mu-hat-inv-10", adj(upAop), "aX",
        lambda c, a, x: c.hp(c.mul(c.h.sR_img[a], x)),
        lambda c, a, x: c.ap(c.hp(x), 2, 1, c.rmul_tR[a]))
    add("mu-hat-inv-11", adj(upAop), "aX",
        lambda c, a, x: c.hp(c.mul(x, c.h.tR_img[a])),
        lambda c, a, x: c.ap(c.hp(x), 2, 0, c.rmul_tR[a]))
    add("mu-hat-inv-11b", adj(upAop), "aX",
        lambda c, a, x: c.hp(c.mul(c.h.tR_img[a], x)),
        lambda c, a, x: c.ap(c.hp(x), 2, 0, c.lmul_tR[a]))
    add("mu-hat-inv-12", adj(upAop), "aX",
        lambda c, a, x: c.ap(c.hp(x), 2, 1, c.lmul_sR[a]),
        lambda c, a, x: c.ap(c.hp(x), 2, 0, c.rmul_sR[a]))

    # -- antipode expressions for the shorthands ------------------------------
    add("shorthand-plus-minus", adj(Bop), "X",
        lambda c, x: c.pm(x),
        lambda c, x: c.ap(c.DR(x), 2, 1, c.h.S))
    add("shorthand-bracket", adj(upBop), "X",
        lambda c, x: c.bm(x),
        lambda c, x: c.ap(c.DR(x), 2, 0, c.h.Si))
    add("shorthand-hat-minus-plus", adj(Aop), "X",
        lambda c, x: c.hm(x),
        lambda c, x: c.ap(c.DL(x), 2, 0, c.h.S))
    add("shorthand-hat-bracket", adj(upAop), "X",
        lambda c, x: c.hp(x),
        lambda c, x: c.ap(c.DL(x), 2, 1, c.h.Si))

    # -- antipode swaps coproducts ---------------------------------------------
    add("antipode-swaps-right-coproduct", adj(A), "X",
        lambda c, x: c.DR(c.S(x)),
        lambda c, x: c.pr(c.ap(c.ap(c.DL(x), 2, 0, c.h.S), 2, 1, c.h.S), 2, (1, 0)))
    add("antipode-inv-swaps-right-coproduct", adj(A), "X",
        lambda c, x: c.DR(c.Si(x)),
        lambda c, x: c.pr(c.ap(c.ap(c.DL(x), 2, 0, c.h.Si), 2, 1, c.h.Si), 2, (1, 0)))
    add("antipode-swaps-left-coproduct", adj(B), "X",
        lambda c, x: c.DL(c.S(x)),
        lambda c, x: c.pr(c.ap(c.ap(c.DR(x), 2, 0, c.h.S), 2, 1, c.h.S), 2, (1, 0)))
    add("antipode-inv-swaps-left-coproduct", adj(B), "X",
        lambda c, x: c.DL(c.Si(x)),
        lambda c, x: c.pr(c.ap(c.ap(c.DR(x), 2, 0, c.h.Si), 2, 1, c.h.Si), 2, (1, 0)))
    return cat


def verify_identity_suite(h: HopfAlgebroid, with_timing: bool = False):
    """Evaluate every identity on every basis tuple; returns (Report, detail)
    where detail maps identity label to {"ok": bool, "violations": n, "ms": t}."""
    rep = Report(f"identities:{h.name or '?'}")
    c = _Ctx(h)
    d = h.H.dim
    db = h.B.dim
    detail = {}
    for ident in identity_catalogue():
        label = ident["label"]
        t0 = time.perf_counter()
        space = h.space(ident["space"]) if ident["space"] else None
        bad = 0
        params = ident["params"]
        if params == "":
            tuples = [()]
        elif params == "X":
            tuples = [(h.H.basis_vec(j),) for j in range(d)]
        elif params == "XY":
            tuples = [(h.H.basis_vec(i), h.H.basis_vec(j)) for i in range(d) for j in range(d)]
        elif params == "aX":
            tuples = [(a, h.H.basis_vec(j)) for a in range(db) for j in range(d)]
        else:
            raise ValueError(params)
        for k, args in enumerate(tuples):
            lhs = ident["lhs"](c, *args)
            rhs = ident["rhs"](c, *args)
            if space is None:
                equal = lhs == rhs
            else:
                equal = space.project(lhs) == space.project(rhs)
            if not equal:
                bad += 1
                rep.add(label, {"tuple": k})
        ms = (time.perf_counter() - t0) * 1000.0
        detail[label] = {"ok": bad == 0, "violations": bad}
        if with_timing:
            detail[label]["ms"] = round(ms, 3)
    return rep, detail
