"""Two-term complexes of projectives and their mutation.

A complex P^{-1} -> P^0 is stored as two lists of vertex labels (one
indecomposable projective summand per entry) plus the differential, a
matrix over the algebra: entry (i, j) lies in the block
e_{zero_i} A e_{neg_j} and acts by left multiplication as a map of right
modules e_{neg_j}A -> e_{zero_i}A.

Morphism spaces in the homotopy category are computed literally: chain
maps as the kernel of the commutation constraint, homotopies as the image
of the two boundary operators, morphisms as the quotient.  Mutation at a
summand takes a minimal approximation by the remaining summands, forms
the cone (or the cocone when the cone fails to be two-term), and strips
contractible pairs until every differential entry is radical.
"""
from __future__ import annotations

import itertools

from .algebra import FiniteDimAlgebra
from .linalg import kernel, make_span

_serial = itertools.count()


class ComplexError(ValueError):
    pass


class _HomIndex:
    """k-linear coordinates on Hom_A(+ e_{s_j}A, + e_{t_i}A), whose basis
    is triples (target slot i, source slot j, basis element of the block
    e_{t_i} A e_{s_j})."""

    def __init__(self, A: FiniteDimAlgebra, src_idx, tgt_idx):
        self.A = A
        self.src_idx = list(src_idx)
        self.tgt_idx = list(tgt_idx)
        self.triples = []
        for i, t in enumerate(self.tgt_idx):
            for j, s in enumerate(self.src_idx):
                for k in A.blocks.get((t, s), ()):
                    self.triples.append((i, j, k))
        self.pos = {trip: m for m, trip in enumerate(self.triples)}
        self.dim = len(self.triples)

    def to_vec(self, mat):
        F = self.A.field
        v = [F.zero] * self.dim
        for i, row in enumerate(mat):
            for j, ent in enumerate(row):
                for k, c in ent.items():
                    v[self.pos[(i, j, k)]] = c
        return v

    def from_vec(self, vec):
        F = self.A.field
        mat = [[{} for _ in self.src_idx] for _ in self.tgt_idx]
        for m, (i, j, k) in enumerate(self.triples):
            c = vec[m]
            if isinstance(c, int):
                c = F.of(c)
            if not F.is_zero(c):
                mat[i][j][k] = c
        return mat


def _emat_mul(A, X, Y, out_cols):
    """Product of matrices over the algebra; X after Y as left
    multiplications, so entries multiply as X[i][t] * Y[t][j]."""
    out = [[dict() for _ in range(out_cols)] for _ in range(len(X))]
    for i, xrow in enumerate(X):
        for t, xe in enumerate(xrow):
            if not xe:
                continue
            for j, ye in enumerate(Y[t]):
                if ye:
                    out[i][j] = A.add(out[i][j], A.mul(xe, ye))
    return out


class TwoTermComplex:
    def __init__(self, A: FiniteDimAlgebra, neg, zero, d):
        self.A = A
        self.neg = list(neg)          # vertex labels of the degree -1 part
        self.zero = list(zero)        # vertex labels of the degree 0 part
        self.d = [[dict(e) for e in row] for row in d]
        self.neg_idx = [A.vertex_labels.index(v) for v in self.neg]
        self.zero_idx = [A.vertex_labels.index(v) for v in self.zero]
        self.serial = next(_serial)
        self._g = None
        self._h0dv = None

    @classmethod
    def stalk(cls, A, label) -> "TwoTermComplex":
        """The projective at the given vertex, in degree 0."""
        return cls(A, [], [label], [[]])

    @classmethod
    def shifted(cls, A, label) -> "TwoTermComplex":
        """The projective at the given vertex, in degree -1."""
        return cls(A, [label], [], [])

    def validate(self) -> None:
        A = self.A
        if len(self.d) != len(self.zero):
            raise ComplexError("differential has the wrong number of rows")
        for i, row in enumerate(self.d):
            if len(row) != len(self.neg):
                raise ComplexError(
                    "differential has the wrong number of columns")
            for j, ent in enumerate(row):
                for k, c in ent.items():
                    if A.src[k] != self.zero_idx[i] \
                            or A.tgt[k] != self.neg_idx[j]:
                        raise ComplexError(
                            f"entry ({i}, {j}) leaves its block")
                    if A.field.is_zero(c):
                        raise ComplexError("zero coefficient stored")

    def g_vector(self) -> tuple:
        if self._g is None:
            g = [0] * self.A.n
            for v in self.zero_idx:
                g[v] += 1
            for v in self.neg_idx:
                g[v] -= 1
            self._g = tuple(g)
        return self._g

    def is_minimal(self) -> bool:
        """No differential entry has a unit part (no contractible pair)."""
        for i, row in enumerate(self.d):
            for j, ent in enumerate(row):
                if self.zero_idx[i] == self.neg_idx[j] and \
                        not self.A.field.is_zero(
                            self.A.unit_part(ent, self.zero_idx[i])):
                    return False
        return True

    def _image_rows(self):
        """Images of the degree -1 basis inside the degree 0 projective,
        in the concatenated block-basis coordinates of the latter."""
        A = self.A
        F = A.field
        pbasis = []          # (slot, algebra basis index) per coordinate
        offset = {}
        for i, t in enumerate(self.zero_idx):
            offset[i] = len(pbasis)
            pbasis.extend((i, k) for k in range(A.dim) if A.src[k] == t)
        pos = {ik: m for m, ik in enumerate(pbasis)}
        rows = []
        for j, s in enumerate(self.neg_idx):
            for k0 in (k for k in range(A.dim) if A.src[k] == s):
                vec = [F.zero] * len(pbasis)
                nonzero = False
                for i in range(len(self.zero_idx)):
                    ent = self.d[i][j]
                    if not ent:
                        continue
                    for m, c in A.mul(ent, {k0: F.one}).items():
                        vec[pos[(i, m)]] = c
                        nonzero = True
                if nonzero:
                    rows.append(vec)
        return pbasis, rows

    def h0_dim_vector(self) -> list[int]:
        if self._h0dv is not None:
            return list(self._h0dv)
        A = self.A
        pbasis, rows = self._image_rows()
        span = make_span(A.field, len(pbasis))
        dims = [0] * A.n
        for i, k in pbasis:
            dims[A.tgt[k]] += 1
        for row in rows:
            span.add(row)
        for brow in span.basis_rows():
            lead = next(m for m, c in enumerate(brow)
                        if not A.field.is_zero(A.field.of(c)
                                               if isinstance(c, int) else c))
            dims[A.tgt[pbasis[lead][1]]] -= 1
        self._h0dv = tuple(dims)
        return dims

    def h0_module(self):
        from .modules import Module
        A = self.A
        if not self.zero:
            return Module.zero(A)
        P0 = Module.direct_sum([Module.projective(A, v) for v in self.zero])
        _, rows = self._image_rows()
        if not rows:
            return P0
        mod, _ = P0.quotient(rows)
        return mod

    def __repr__(self):
        return (f"TwoTermComplex(neg={self.neg}, zero={self.zero}, "
                f"g={self.g_vector()})")


# -- morphism spaces in the homotopy category -------------------------------


class HomK:
    """Hom between two-term complexes modulo homotopy.  Chain maps are
    vectors over the coordinates of Hom(X^0, Y^0) ++ Hom(X^-1, Y^-1);
    reps lists coset representatives of a basis modulo null-homotopic
    maps."""

    def __init__(self, X: TwoTermComplex, Y: TwoTermComplex):
        A = X.A
        F = A.field
        self.X, self.Y = X, Y
        self.h0 = _HomIndex(A, X.zero_idx, Y.zero_idx)
        self.hm = _HomIndex(A, X.neg_idx, Y.neg_idx)
        nv = self.h0.dim + self.hm.dim
        hc = _HomIndex(A, X.neg_idx, Y.zero_idx)

        rows = [[F.zero] * nv for _ in range(hc.dim)]
        # d_Y f^-1 - f^0 d_X = 0
        for col, (i, t, k) in enumerate(self.h0.triples):
            for j in range(len(X.neg_idx)):
                ent = X.d[t][j]
                if not ent:
                    continue
                for m, c in A.mul({k: F.one}, ent).items():
                    rows[hc.pos[(i, j, m)]][col] = F.neg(c)
        for col, (t, j, k) in enumerate(self.hm.triples):
            for i in range(len(Y.zero_idx)):
                ent = Y.d[i][t]
                if not ent:
                    continue
                for m, c in A.mul(ent, {k: F.one}).items():
                    rows[hc.pos[(i, j, m)]][self.h0.dim + col] = c
        chain_basis = [list(v) for v in kernel(rows, nv, F)]

        hh = _HomIndex(A, X.zero_idx, Y.neg_idx)
        htpy = []
        for (u, t, k) in hh.triples:
            vec = [F.zero] * nv
            nonzero = False
            for i in range(len(Y.zero_idx)):
                ent = Y.d[i][u]
                if not ent:
                    continue
                for m, c in A.mul(ent, {k: F.one}).items():
                    vec[self.h0.pos[(i, t, m)]] = c
                    nonzero = True
            for j in range(len(X.neg_idx)):
                ent = X.d[t][j]
                if not ent:
                    continue
                for m, c in A.mul({k: F.one}, ent).items():
                    vec[self.h0.dim + self.hm.pos[(u, j, m)]] = c
                    nonzero = True
            if nonzero:
                htpy.append(vec)

        self._span = make_span(F, nv, track=True)
        self._h_rank = 0
        self.htpy_basis = []
        for vec in htpy:
            if self._span.add(vec):
                self._h_rank += 1
                self.htpy_basis.append(vec)
        self.reps = []
        for vec in chain_basis:
            if self._span.add(vec):
                self.reps.append(vec)
        self.dim = len(self.reps)

    def coords(self, chain_vec) -> list:
        """Coefficients of a chain map's class over the reps basis."""
        F = self.X.A.field
        raw = self._span.coords(chain_vec)
        if raw is None:
            raise ComplexError("vector is not a chain map")
        return [F.of(c) if isinstance(c, int) else c
                for c in raw[self._h_rank:]]

    def rep_mats(self, t: int):
        vec = self.reps[t]
        return (self.h0.from_vec(vec[:self.h0.dim]),
                self.hm.from_vec(vec[self.h0.dim:]))


def compose_chain(hom_xy: HomK, hom_yz: HomK, f_vec, g_vec, hom_xz: HomK):
    """Chain vector of (g after f) in the coordinates of hom_xz."""
    A = hom_xy.X.A
    X, Y = hom_xy.X, hom_xy.Y
    f0 = hom_xy.h0.from_vec(f_vec[:hom_xy.h0.dim])
    fm = hom_xy.hm.from_vec(f_vec[hom_xy.h0.dim:])
    g0 = hom_yz.h0.from_vec(g_vec[:hom_yz.h0.dim])
    gm = hom_yz.hm.from_vec(g_vec[hom_yz.h0.dim:])
    c0 = _emat_mul(A, g0, f0, len(X.zero_idx)) if Y.zero_idx else \
        [[dict() for _ in X.zero_idx] for _ in hom_yz.h0.tgt_idx]
    cm = _emat_mul(A, gm, fm, len(X.neg_idx)) if Y.neg_idx else \
        [[dict() for _ in X.neg_idx] for _ in hom_yz.hm.tgt_idx]
    return hom_xz.h0.to_vec(c0) + hom_xz.hm.to_vec(cm)


def homk_dim(X: TwoTermComplex, Y: TwoTermComplex) -> int:
    return HomK(X, Y).dim


def hom_shift_dim(X: TwoTermComplex, Y: TwoTermComplex) -> int:
    """dim Hom(X, Y[1]) in the homotopy category: maps X^-1 -> Y^0 modulo
    those factoring over d_X or through d_Y."""
    A = X.A
    F = A.field
    hc = _HomIndex(A, X.neg_idx, Y.zero_idx)
    if hc.dim == 0:
        return 0
    span = make_span(F, hc.dim)
    rk = 0
    h0 = _HomIndex(A, X.zero_idx, Y.zero_idx)
    for (i, t, k) in h0.triples:
        vec = [F.zero] * hc.dim
        for j in range(len(X.neg_idx)):
            ent = X.d[t][j]
            if ent:
                for m, c in A.mul({k: F.one}, ent).items():
                    vec[hc.pos[(i, j, m)]] = c
        if span.add(vec):
            rk += 1
    hm = _HomIndex(A, X.neg_idx, Y.neg_idx)
    for (t, j, k) in hm.triples:
        vec = [F.zero] * hc.dim
        for i in range(len(Y.zero_idx)):
            ent = Y.d[i][t]
            if ent:
                for m, c in A.mul(ent, {k: F.one}).items():
                    vec[hc.pos[(i, j, m)]] = c
        if span.add(vec):
            rk += 1
    return hc.dim - rk


def _hom_neg_shift_dim(X: TwoTermComplex, Y: TwoTermComplex) -> int:
    """dim Hom(X, Y[-1]): maps X^0 -> Y^-1 killed by both differentials.
    No homotopies exist between these degrees."""
    A = X.A
    F = A.field
    hc = _HomIndex(A, X.zero_idx, Y.neg_idx)
    if hc.dim == 0:
        return 0
    eqs = {}

    def row(key):
        if key not in eqs:
            eqs[key] = [F.zero] * hc.dim
        return eqs[key]

    for col, (i, t, k) in enumerate(hc.triples):
        for jj in range(len(X.neg_idx)):
            ent = X.d[t][jj]
            if ent:
                for m, c in A.mul({k: F.one}, ent).items():
                    row((0, i, jj, m))[col] = c
        for ii in range(len(Y.zero_idx)):
            ent = Y.d[ii][i]
            if ent:
                for m, c in A.mul(ent, {k: F.one}).items():
                    row((1, ii, t, m))[col] = c
    return len(kernel(list(eqs.values()), hc.dim, F))


def hom_homotopy(X: TwoTermComplex, Y: TwoTermComplex, shift: int = 0) -> int:
    """dim Hom(X, Y[shift]) in the homotopy category for shift -1, 0, 1."""
    if shift == 0:
        return HomK(X, Y).dim
    if shift == 1:
        return hom_shift_dim(X, Y)
    if shift == -1:
        return _hom_neg_shift_dim(X, Y)
    raise ComplexError("shift must be -1, 0 or 1")


def is_presilting(summands) -> bool:
    return all(hom_shift_dim(X, Y) == 0
               for X in summands for Y in summands)


def is_silting(summands) -> bool:
    if not summands:
        return False
    A = summands[0].A
    if len(summands) != A.n:
        return False
    if len({t.g_vector() for t in summands}) != len(summands):
        return False
    return is_presilting(summands)


# -- minimal approximations and mutation ------------------------------------


def _assoc_radical_coords(F, mult, m):
    """Radical of an associative unital algebra given by multiplication
    coordinates mult[s][t] (coords of e_s e_t over the basis), via the
    kernel of the trace form of the regular representation."""
    if m == 0:
        return []
    p = getattr(F, "p", None)
    if p is not None and p <= m:
        raise ComplexError(
            "endomorphism radical needs characteristic 0 or > its dimension")
    left = []
    for s in range(m):
        mat = [[mult[s][t][r] for t in range(m)] for r in range(m)]
        left.append(mat)
    gram = []
    for s in range(m):
        row = []
        for t in range(m):
            tr = F.zero
            for a in range(m):
                for b in range(m):
                    tr = F.add(tr, F.mul(left[s][a][b], left[t][b][a]))
            row.append(tr)
        gram.append(row)
    return [list(v) for v in kernel(gram, m, F)]


def _rad_end_reps(E: HomK):
    """Chain vectors spanning the radical of End_K of a summand."""
    F = E.X.A.field
    m = E.dim
    mult = [[None] * m for _ in range(m)]
    for s in range(m):
        for t in range(m):
            comp = compose_chain(E, E, E.reps[t], E.reps[s], E)
            mult[s][t] = E.coords(comp)
    rad = _assoc_radical_coords(F, mult, m)
    out = []
    nv = len(E.reps[0]) if E.reps else 0
    for coeffs in rad:
        vec = [F.zero] * nv
        for c, rep in zip(coeffs, E.reps):
            c = F.of(c) if isinstance(c, int) else c
            if F.is_zero(c):
                continue
            for i, x in enumerate(rep):
                vec[i] = F.add(vec[i], F.mul(c, x))
        out.append(vec)
    return out


def _cached_hom(cache, X, Y) -> HomK:
    if cache is None:
        return HomK(X, Y)
    key = (X.serial, Y.serial)
    h = cache.get(key)
    if h is None:
        h = cache[key] = HomK(X, Y)
    return h


def _cached_rad(rad_cache, E: HomK, D: TwoTermComplex):
    if rad_cache is None:
        return _rad_end_reps(E)
    r = rad_cache.get(D.serial)
    if r is None:
        r = rad_cache[D.serial] = _rad_end_reps(E)
    return r


def _approx_components(X: TwoTermComplex, others, side: str,
                       hom_cache=None, rad_cache=None):
    """Minimal left (side="left": X -> D) or right (side="right": D -> X)
    approximation of X by sums of the given summands.  Returns pairs
    (summand, chain map component) with the chain map stored as HomK plus
    vector, one pair per copy of the summand used."""
    homs = [_cached_hom(hom_cache, X, D) if side == "left"
            else _cached_hom(hom_cache, D, X) for D in others]

    def hom_between(a, b):
        return _cached_hom(hom_cache, others[a], others[b])

    components = []
    for j, D in enumerate(others):
        H = homs[j]
        if H.dim == 0:
            continue
        F = X.A.field
        # membership below means membership modulo homotopy, so the
        # null-homotopic subspace is seeded first
        span = make_span(F, len(H.reps[0]))
        for vec in H.htpy_basis:
            span.add(vec)
        for l in range(len(others)):
            Hl = homs[l]
            if Hl.dim == 0:
                continue
            if l == j:
                rads = _cached_rad(rad_cache, hom_between(j, j), D)
                if side == "left":
                    for beta in rads:
                        for alpha in Hl.reps:
                            span.add(compose_chain(
                                Hl, hom_between(j, j), alpha, beta, H))
                else:
                    for beta in rads:
                        for alpha in Hl.reps:
                            span.add(compose_chain(
                                hom_between(j, j), Hl, beta, alpha, H))
            else:
                Hlj = hom_between(l, j) if side == "left" \
                    else hom_between(j, l)
                if side == "left":
                    # X -> D_l -> D_j with any second arrow
                    for beta in Hlj.reps:
                        for alpha in Hl.reps:
                            span.add(compose_chain(Hl, Hlj, alpha, beta, H))
                else:
                    # D_j -> D_l -> X with any first arrow
                    for beta in Hlj.reps:
                        for alpha in Hl.reps:
                            span.add(compose_chain(Hlj, Hl, beta, alpha, H))
        for rep in H.reps:
            if span.add(rep):
                components.append((D, H, rep))
    return components


def _reduce_three(A, levels, diffs):
    """Strip contractible identity pairs from a three-level complex.
    diffs[m] maps levels[m] to levels[m + 1]; eliminating the unit entry
    at (q, p) of diffs[m] adjusts only diffs[m] and then deletes the two
    slots and their lines (the chain conditions make every other affected
    entry vanish)."""
    F = A.field
    while True:
        found = None
        for m, M in enumerate(diffs):
            for q in range(len(levels[m + 1])):
                for p in range(len(levels[m])):
                    v = levels[m + 1][q]
                    if v != levels[m][p]:
                        continue
                    if not F.is_zero(A.unit_part(M[q][p], v)):
                        found = (m, q, p, v)
                        break
                if found:
                    break
            if found:
                break
        if not found:
            return
        m, q, p, v = found
        M = diffs[m]
        minv = A.local_inverse(M[q][p], v)
        for q2 in range(len(levels[m + 1])):
            if q2 == q:
                continue
            lead = A.mul(M[q2][p], minv)
            if not lead:
                continue
            for p2 in range(len(levels[m])):
                if p2 == p or not M[q][p2]:
                    continue
                M[q2][p2] = A.sub(M[q2][p2], A.mul(lead, M[q][p2]))
        del M[q]
        for row in M:
            del row[p]
        del levels[m + 1][q]
        del levels[m][p]
        if m - 1 >= 0:
            del diffs[m - 1][p]
        if m + 1 < len(diffs):
            for row in diffs[m + 1]:
                del row[q]


def _labels(A, idx_list):
    return [A.vertex_labels[i] for i in idx_list]


def _summand_sum(comps):
    """Direct sum of the approximation targets with the stacked component
    matrices (one block per copy)."""
    z_neg, z_zero = [], []
    f0_blocks, fm_blocks = [], []
    dz_rows = []
    for D, H, vec in comps:
        f0 = H.h0.from_vec(vec[:H.h0.dim])
        fm = H.hm.from_vec(vec[H.h0.dim:])
        dz_rows.append((len(z_zero), len(z_neg), D))
        z_zero.extend(D.zero_idx)
        z_neg.extend(D.neg_idx)
        f0_blocks.append(f0)
        fm_blocks.append(fm)
    dZ = [[dict() for _ in range(len(z_neg))] for _ in range(len(z_zero))]
    for row_off, col_off, D in dz_rows:
        for i, row in enumerate(D.d):
            for j, ent in enumerate(row):
                if ent:
                    dZ[row_off + i][col_off + j] = dict(ent)
    return z_neg, z_zero, dZ, f0_blocks, fm_blocks


def _left_mutation(X, others, hom_cache, rad_cache):
    """Cone over the minimal left approximation, reduced; None when the
    reduced cone is not two-term."""
    A = X.A
    F = A.field
    comps = _approx_components(X, others, "left", hom_cache, rad_cache)
    z_neg, z_zero, dZ, f0_blocks, fm_blocks = _summand_sum(comps)
    phi0 = [row for blk in f0_blocks for row in blk]     # rows over Z^0
    phim = [row for blk in fm_blocks for row in blk]     # rows over Z^-1
    levels = [list(X.neg_idx), list(X.zero_idx) + z_neg, list(z_zero)]
    d1 = [[A.scale(ent, F.neg(F.one)) for ent in row] for row in X.d]
    d1 += [[dict(ent) for ent in row] for row in phim]
    d2 = [[dict(ent) for ent in phi0[i]] + [dict(ent) for ent in dZ[i]]
          for i in range(len(z_zero))]
    _reduce_three(A, levels, [d1, d2])
    if levels[0]:
        return None
    return TwoTermComplex(A, _labels(A, levels[1]), _labels(A, levels[2]),
                          d2)


def _right_mutation(X, others, hom_cache, rad_cache):
    """Cocone over the minimal right approximation, reduced; None when the
    reduced cocone is not two-term."""
    A = X.A
    F = A.field
    comps = _approx_components(X, others, "right", hom_cache, rad_cache)
    z_neg, z_zero, dZ, f0_blocks, fm_blocks = _summand_sum(comps)
    psi0 = [[] for _ in X.zero_idx]      # rows over X^0, cols over Z^0
    psim = [[] for _ in X.neg_idx]
    for f0 in f0_blocks:
        for i in range(len(X.zero_idx)):
            psi0[i].extend(f0[i])
    for fm in fm_blocks:
        for i in range(len(X.neg_idx)):
            psim[i].extend(fm[i])
    levels = [list(z_neg), list(z_zero) + list(X.neg_idx),
              list(X.zero_idx)]
    d1 = [[A.scale(ent, F.neg(F.one)) for ent in row] for row in dZ]
    d1 += [[dict(ent) for ent in row] for row in psim]
    d2 = [[dict(ent) for ent in psi0[i]] + [dict(ent) for ent in X.d[i]]
          for i in range(len(X.zero_idx))]
    _reduce_three(A, levels, [d1, d2])
    if levels[2]:
        return None
    return TwoTermComplex(A, _labels(A, levels[0]), _labels(A, levels[1]),
                          d1)


def mutate(summands, k: int, direction: str | None = None,
           hom_cache=None, rad_cache=None):
    """Replace the k-th summand by its mutation against the others.  With
    direction None the cone over the minimal left approximation is tried
    first, then the cocone over the minimal right approximation; exactly
    one of them reduces to a two-term complex.  Returns (new summand
    list, direction taken)."""
    if direction not in (None, "left", "right"):
        raise ComplexError(f"unknown mutation direction {direction!r}")
    X = summands[k]
    others = [s for i, s in enumerate(summands) if i != k]
    new = None
    taken = None
    if direction in (None, "left"):
        new = _left_mutation(X, others, hom_cache, rad_cache)
        if new is not None:
            taken = "left"
        elif direction == "left":
            raise ComplexError("left mutation does not stay two-term here")
    if new is None:
        new = _right_mutation(X, others, hom_cache, rad_cache)
        if new is not None:
            taken = "right"
    if new is None:
        raise ComplexError("mutation produced no two-term complex "
                           "in either direction")
    out = list(summands)
    out[k] = new
    return out, taken


# -- pairs (module part, removed vertices) <-> complexes --------------------


def complex_of_pair(A: FiniteDimAlgebra, modules, removed) \
        -> list[TwoTermComplex]:
    """Summand list: the minimal presentation of each module summand plus
    one shifted projective per removed vertex."""
    from .modules import is_stau_pair
    if not is_stau_pair(A, list(modules), list(removed)):
        raise ComplexError("not a valid support pair")
    out = []
    for M in modules:
        mp = M.min_presentation()
        out.append(TwoTermComplex(A, mp.slots1, mp.slots0, mp.entries))
    for v in sorted(removed):
        out.append(TwoTermComplex.shifted(A, v))
    return out


def pair_of_complex(summands):
    """H^0 of the unshifted summands plus the removed-vertex set read off
    the shifted projective summands.  Requires a silting input."""
    if not is_silting(summands):
        raise ComplexError("not a two-term silting object")
    modules = []
    removed = []
    for t in summands:
        if not t.zero:
            removed.extend(t.neg)
        else:
            modules.append(t.h0_module())
    return modules, sorted(removed)
