"""Dense tensor-slot utilities for evaluating multilinear formulas.

Vectors over an n-fold tensor power of H are dense lists indexed row-major;
these helpers apply a matrix to one slot, permute slots, multiply two slots
together in the total algebra, or form Kronecker products of vectors.  They
are the engine behind the identity evaluator and the (co)module checkers.
"""

from __future__ import annotations

from .algebra import FinDimAlgebra
from .linalg import Mat


def tvec(field, *vecs):
    """Kronecker product of dense vectors."""
    out = list(vecs[0])
    for v in vecs[1:]:
        z = field.zero()
        nxt = [z] * (len(out) * len(v))
        n = len(v)
        for i, a in enumerate(out):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    nxt[i * n + j] = a * b
        out = nxt
    return out


def apply_slot(field, vec, dims, slot, m: Mat, split=None):
    """Apply m to tensor slot `slot`; returns (vector, dims) with the slot's
    dimension replaced by m.nrows (or by `split`, a factorization of it,
    when the matrix expands one slot into several)."""
    n = dims[slot]
    assert m.ncols == n
    right = 1
    for d in dims[slot + 1:]:
        right *= d
    nout = m.nrows
    z = field.zero()
    out_dims = dims[:slot] + (list(split) if split else [nout]) + dims[slot + 1:]
    total = 1
    for d in out_dims:
        total *= d
    out = [z] * total
    cols = [dict() for _ in range(n)]
    for i, row in enumerate(m.rows):
        for j, v in row.items():
            cols[j][i] = v
    for idx, val in enumerate(vec):
        if not val:
            continue
        rest, c = divmod(idx, right)
        a, k = divmod(rest, n)
        for i, mv in cols[k].items():
            j = (a * nout + i) * right + c
            out[j] = out[j] + mv * val
    return out, out_dims


def permute_slots(field, vec, dims, perm):
    """Reorder slots; output slot i carries old slot perm[i]."""
    assert sorted(perm) == list(range(len(dims)))
    out_dims = [dims[p] for p in perm]
    strides = _strides(dims)
    out_strides = _strides(out_dims)
    z = field.zero()
    out = [z] * len(vec)
    for idx, val in enumerate(vec):
        if not val:
            continue
        multi = _unrank(idx, dims)
        j = sum(out_strides[i] * multi[p] for i, p in enumerate(perm))
        out[j] = val
    return out, out_dims


def mul_slots(field, h: FinDimAlgebra, vec, dims, i, j):
    """Multiply slot i by slot j (in that order) in the algebra h; the product
    lands where slot i was (after removing slot j)."""
    assert dims[i] == h.dim and dims[j] == h.dim and i != j
    # bring j right after i, then contract the adjacent pair
    order = [k for k in range(len(dims)) if k != j]
    pos = order.index(i)
    order = order[:pos + 1] + [j] + order[pos + 1:]
    vec, dims = permute_slots(field, vec, dims, order)
    return _mul_adjacent(field, h, vec, dims, pos)


def _mul_adjacent(field, h: FinDimAlgebra, vec, dims, slot):
    n = h.dim
    right = 1
    for d in dims[slot + 2:]:
        right *= d
    out_dims = dims[:slot] + [n] + dims[slot + 2:]
    total = 1
    for d in out_dims:
        total *= d
    z = field.zero()
    out = [z] * total
    for idx, val in enumerate(vec):
        if not val:
            continue
        rest, c = divmod(idx, right)
        rest, b = divmod(rest, n)
        a, u = divmod(rest, n)
        prod = h.mul[u][b]
        for k, s in enumerate(prod):
            if s:
                jj = (a * n + k) * right + c
                out[jj] = out[jj] + s * val
    return out, out_dims


def _strides(dims):
    strides = []
    acc = 1
    for d in reversed(dims):
        strides.append(acc)
        acc *= d
    strides.reverse()
    return strides


def _unrank(idx, dims):
    multi = []
    for d in reversed(dims):
        multi.append(idx % d)
        idx //= d
    multi.reverse()
    return multi


def flip_mat(d1: int, d2: int, field) -> Mat:
    """The swap u (x) v -> v (x) u as a matrix."""
    out = Mat(d1 * d2, d1 * d2, field)
    one = field.one()
    for i in range(d1):
        for j in range(d2):
            out.rows[j * d1 + i][i * d2 + j] = one
    return out


def right_unit_embed(h: FinDimAlgebra) -> Mat:
    """X -> X (x) 1 as a matrix H -> H (x) H."""
    d = h.dim
    out = Mat(d * d, d, h.field)
    for j in range(d):
        for k, c in enumerate(h.unit):
            if c:
                out.rows[j * d + k][j] = c
    return out


def left_unit_embed(h: FinDimAlgebra) -> Mat:
    """X -> 1 (x) X."""
    d = h.dim
    out = Mat(d * d, d, h.field)
    for j in range(d):
        for k, c in enumerate(h.unit):
            if c:
                out.rows[k * d + j][j] = c
    return out
