"""Finite-dimensional right modules over a constructed algebra.

A module is stored as a vertex-graded vector space (``vtx[i]`` is the vertex
index of the i-th basis line) together with one action matrix per algebra
basis element, acting on row vectors: x -> x . act[k].  All functionality is
exact over the algebra's field.

The translate of a module is computed from its minimal projective
presentation P1 -> P0 -> M -> 0.  Applying Hom(-, A) turns the presentation
matrix (entries in e_t A e_s) into a map of projective left modules, i.e.
right modules over the structural opposite algebra; the cokernel is the
transpose, and the vector-space dual of that (transposed action matrices)
is the translate as a right module again.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import FiniteDimAlgebra
from .linalg import kernel, make_span, rank


class ModuleError(Exception):
    pass


# -- small dense matrix helpers over a field --------------------------------

def _mat_zero(F, r, c):
    return [[F.zero] * c for _ in range(r)]


def _mat_id(F, m):
    out = _mat_zero(F, m, m)
    for i in range(m):
        out[i][i] = F.one
    return out


def _mat_add(F, X, Y):
    return [[F.add(a, b) for a, b in zip(rx, ry)] for rx, ry in zip(X, Y)]


def _mat_scale(F, X, c):
    return [[F.mul(c, a) for a in row] for row in X]


def _mat_mul(F, X, Y):
    if not X:
        return []
    inner = len(Y)
    cols = len(Y[0]) if Y else 0
    out = _mat_zero(F, len(X), cols)
    for i, row in enumerate(X):
        for t in range(inner):
            c = row[t]
            if F.is_zero(c):
                continue
            yr = Y[t]
            oi = out[i]
            for j in range(cols):
                if not F.is_zero(yr[j]):
                    oi[j] = F.add(oi[j], F.mul(c, yr[j]))
    return out


def _row_mul(F, vec, X):
    cols = len(X[0]) if X else 0
    out = [F.zero] * cols
    for t, c in enumerate(vec):
        if F.is_zero(c):
            continue
        xr = X[t]
        for j in range(cols):
            if not F.is_zero(xr[j]):
                out[j] = F.add(out[j], F.mul(c, xr[j]))
    return out


def _transpose(X):
    if not X:
        return []
    return [list(col) for col in zip(*X)]


def _mat_rank(F, X):
    if not X or not X[0]:
        return 0
    return rank([list(r) for r in X], len(X[0]), F)


def _projective_basis(A: FiniteDimAlgebra, vidx: int) -> list[int]:
    return [k for k in range(A.dim) if A.src[k] == vidx]


def _structural_opposite(A: FiniteDimAlgebra) -> FiniteDimAlgebra:
    """Opposite algebra on the very same basis (table transposed); unlike
    FiniteDimAlgebra.opposite() this never rebuilds and never reindexes."""
    cached = getattr(A, "_struct_op", None)
    if cached is not None:
        return cached
    table = {(b, a): row for (a, b), row in A.table.items()}
    op = FiniteDimAlgebra(A.field, list(A.vertex_labels), list(A.tgt),
                          list(A.src), list(A.labels), table)
    A._struct_op = op
    return op


@dataclass
class MinPresentation:
    """P1 -> P0 described by vertex labels of the slots and a matrix of
    algebra elements; entries[i][j] lies in e_{slots0[i]} A e_{slots1[j]}
    and acts by left multiplication."""
    slots0: list
    slots1: list
    entries: list


class Module:
    """Right module over a FiniteDimAlgebra."""

    def __init__(self, A: FiniteDimAlgebra, vtx, act):
        self.A = A
        self.vtx = list(vtx)
        self.act = act
        self.dim = len(self.vtx)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, A: FiniteDimAlgebra) -> "Module":
        return cls(A, [], [[] for _ in range(A.dim)])

    @classmethod
    def projective(cls, A: FiniteDimAlgebra, vertex_label) -> "Module":
        if vertex_label not in A.vertex_labels:
            raise ModuleError(f"unknown vertex {vertex_label!r}")
        F = A.field
        v = A.vertex_labels.index(vertex_label)
        basis = _projective_basis(A, v)
        pos = {k: i for i, k in enumerate(basis)}
        vtx = [A.tgt[k] for k in basis]
        m = len(basis)
        act = []
        for g in range(A.dim):
            Mg = _mat_zero(F, m, m)
            for i, k in enumerate(basis):
                prod = A.mul({k: F.one}, {g: F.one})
                for kk, c in prod.items():
                    Mg[i][pos[kk]] = c
            act.append(Mg)
        return cls(A, vtx, act)

    @classmethod
    def simple(cls, A: FiniteDimAlgebra, vertex_label) -> "Module":
        if vertex_label not in A.vertex_labels:
            raise ModuleError(f"unknown vertex {vertex_label!r}")
        F = A.field
        v = A.vertex_labels.index(vertex_label)
        act = [[[F.one if g == v else F.zero]] for g in range(A.dim)]
        return cls(A, [v], act)

    @classmethod
    def from_action(cls, A: FiniteDimAlgebra, vtx, act,
                    validate: bool = True) -> "Module":
        if isinstance(act, dict):
            act = [act[k] for k in range(A.dim)]
        M = cls(A, list(vtx), [[list(row) for row in X] for X in act])
        if validate:
            M.validate()
        return M

    @classmethod
    def direct_sum(cls, mods) -> "Module":
        mods = list(mods)
        if not mods:
            raise ModuleError("direct_sum needs at least one module")
        A = mods[0].A
        for M in mods:
            if M.A is not A:
                raise ModuleError("summands live over different algebras")
        F = A.field
        vtx = [v for M in mods for v in M.vtx]
        total = len(vtx)
        act = []
        for g in range(A.dim):
            big = _mat_zero(F, total, total)
            off = 0
            for M in mods:
                Mg = M.act[g]
                for i in range(M.dim):
                    for j in range(M.dim):
                        big[off + i][off + j] = Mg[i][j]
                off += M.dim
            act.append(big)
        return cls(A, vtx, act)

    # -- basic data ---------------------------------------------------------

    def dim_vector(self) -> list[int]:
        out = [0] * self.A.n
        for v in self.vtx:
            out[v] += 1
        return out

    def act_element(self, x: dict):
        F = self.A.field
        out = _mat_zero(F, self.dim, self.dim)
        for k, c in x.items():
            Xk = self.act[k]
            for i in range(self.dim):
                for j in range(self.dim):
                    if not F.is_zero(Xk[i][j]):
                        out[i][j] = F.add(out[i][j], F.mul(c, Xk[i][j]))
        return out

    def validate(self) -> None:
        A, F = self.A, self.A.field
        if len(self.act) != A.dim:
            raise ModuleError("one action matrix per algebra basis element "
                              "is required")
        for k, X in enumerate(self.act):
            if len(X) != self.dim or any(len(r) != self.dim for r in X):
                raise ModuleError(f"action matrix {k} has the wrong shape")
            for i in range(self.dim):
                for j in range(self.dim):
                    if F.is_zero(X[i][j]):
                        continue
                    if self.vtx[i] != A.src[k] or self.vtx[j] != A.tgt[k]:
                        raise ModuleError(
                            f"action of basis element {k} violates the "
                            f"vertex grading at entry ({i}, {j})")
        for v in range(A.n):
            want = [[F.one if (i == j and self.vtx[i] == v) else F.zero
                     for j in range(self.dim)] for i in range(self.dim)]
            if self.act[v] != want:
                raise ModuleError(f"idempotent {v} must act as the "
                                  "projection onto its weight space")
        for a in range(A.dim):
            for b in range(A.dim):
                if A.tgt[a] != A.src[b]:
                    continue
                left = _mat_mul(F, self.act[a], self.act[b])
                right = self.act_element(A.mul({a: F.one}, {b: F.one}))
                if left != right:
                    raise ModuleError(
                        f"action is not multiplicative on the pair "
                        f"({A.labels[a]}, {A.labels[b]})")

    # -- homomorphisms ------------------------------------------------------

    def hom_basis(self, other: "Module") -> list:
        """Basis of A-linear maps self -> other, as matrices (x -> x.f)."""
        if self.A is not other.A:
            raise ModuleError("modules live over different algebras")
        A, F = self.A, self.A.field
        if self.dim == 0 or other.dim == 0:
            return []
        pairs = [(i, j) for i in range(self.dim) for j in range(other.dim)
                 if self.vtx[i] == other.vtx[j]]
        if not pairs:
            return []
        vpos = {p: t for t, p in enumerate(pairs)}
        rows = []
        for g in A.generators():
            Mg = self.act_element(g)
            Ng = other.act_element(g)
            for i in range(self.dim):
                for j in range(other.dim):
                    row = [F.zero] * len(pairs)
                    touched = False
                    for r in range(self.dim):
                        if (r, j) in vpos and not F.is_zero(Mg[i][r]):
                            t = vpos[(r, j)]
                            row[t] = F.add(row[t], Mg[i][r])
                            touched = True
                    for c in range(other.dim):
                        if (i, c) in vpos and not F.is_zero(Ng[c][j]):
                            t = vpos[(i, c)]
                            row[t] = F.sub(row[t], Ng[c][j])
                            touched = True
                    if touched:
                        rows.append(row)
        out = []
        for vec in kernel(rows, len(pairs), F):
            mat = _mat_zero(F, self.dim, other.dim)
            for t, (i, j) in enumerate(pairs):
                mat[i][j] = F.of(vec[t])
            out.append(mat)
        return out

    def hom_dim(self, other: "Module") -> int:
        return len(self.hom_basis(other))

    def is_iso(self, other: "Module", attempts: int = 30) -> bool:
        if self.A is not other.A:
            raise ModuleError("modules live over different algebras")
        if self.dim_vector() != other.dim_vector():
            return False
        if self.dim == 0:
            return True
        homs = self.hom_basis(other)
        if not homs:
            return False
        F = self.A.field
        for h in homs:
            if _mat_rank(F, h) == self.dim:
                return True
        rng = random.Random(0x5EED)
        for _ in range(attempts):
            acc = _mat_zero(F, self.dim, other.dim)
            for h in homs:
                acc = _mat_add(F, acc, _mat_scale(F, h, F.of(
                    rng.randint(-4, 4))))
            if _mat_rank(F, acc) == self.dim:
                return True
        return False

    # -- endomorphism structure --------------------------------------------

    def _end_radical_dim(self, mats) -> int:
        """Dimension of the radical of End via the regular trace form."""
        A, F = self.A, self.A.field
        ne = len(mats)
        if ne == 0:
            return 0
        char = getattr(F, "p", 0)
        if char and char <= ne:
            raise ModuleError(
                f"trace-form radical needs characteristic above dim End "
                f"= {ne}; got {char}")
        span = make_span(F, self.dim * self.dim, track=True)
        for h in mats:
            span.add([x for row in h for x in row])
        lmats = []
        for h in mats:
            cols = []
            for g in mats:
                prod = _mat_mul(F, h, g)
                coeffs = span.coords([x for row in prod for x in row])
                if coeffs is None:
                    raise ModuleError("endomorphisms failed to close under "
                                      "composition")
                cols.append([F.of(c) for c in coeffs])
            # lmats[i][s][t]: coefficient of basis s in h . mats[t]
            lmats.append(_transpose(cols))
        gram = []
        for i in range(ne):
            row = []
            for j in range(ne):
                prod = _mat_mul(F, lmats[i], lmats[j])
                tr = F.zero
                for t in range(ne):
                    tr = F.add(tr, prod[t][t])
                row.append(tr)
            gram.append(row)
        return len(kernel(gram, ne, F))

    def end_is_local(self) -> bool:
        if self.dim == 0:
            return False
        mats = self.hom_basis(self)
        return len(mats) - self._end_radical_dim(mats) == 1

    def socle_rows(self) -> list[list]:
        """Rows spanning the socle {x : x annihilated by the radical}."""
        F = self.A.field
        eqs = []
        for k in range(self.A.n, self.A.dim):
            mat = self.act[k]
            for j in range(self.dim):
                eqs.append([mat[i][j] for i in range(self.dim)])
        return [list(v) for v in kernel(eqs, self.dim, F)]

    # -- sub and quotient structures ---------------------------------------

    def _homogeneous_basis(self, rows) -> list[tuple]:
        """Weight-homogeneous basis of the span of A-stable rows."""
        F = self.A.field
        out = []
        for v in range(self.A.n):
            block = make_span(F, self.dim)
            for r in rows:
                proj = [x if self.vtx[j] == v else F.zero
                        for j, x in enumerate(r)]
                if any(not F.is_zero(x) for x in proj):
                    block.add(proj)
            out.extend(block.basis_rows())
        return out

    def submodule(self, rows) -> tuple["Module", list]:
        """Module structure on the span of A-stable rows.
        Returns (module, basis rows inside self)."""
        F = self.A.field
        basis = self._homogeneous_basis(rows)
        span = make_span(F, self.dim, track=True)
        for r in basis:
            span.add(r)
        vtx = []
        for r in basis:
            j = next(t for t, x in enumerate(r) if not F.is_zero(F.of(x)))
            vtx.append(self.vtx[j])
        act = []
        for k in range(self.A.dim):
            Xk = self.act[k]
            mat = _mat_zero(F, len(basis), len(basis))
            for i, r in enumerate(basis):
                img = _row_mul(F, [F.of(x) for x in r], Xk)
                coeffs = span.coords(img)
                if coeffs is None:
                    raise ModuleError("the given rows do not span a "
                                      "submodule")
                mat[i] = [F.of(c) for c in coeffs]
            act.append(mat)
        return Module(self.A, vtx, act), [list(r) for r in basis]

    def quotient(self, rows) -> tuple["Module", list]:
        """Quotient by the span of A-stable rows.
        Returns (module, projection matrix self.dim x quotient.dim)."""
        F = self.A.field
        sub = make_span(F, self.dim)
        for r in rows:
            sub.add(r)
        sub_basis = sub.basis_rows()
        tracked = make_span(F, self.dim, track=True)
        for r in sub_basis:
            tracked.add(r)
        nsub = len(sub_basis)
        survivors = []
        for j in range(self.dim):
            u = [F.zero] * self.dim
            u[j] = F.one
            if tracked.add(u):
                survivors.append(j)
        vtx = [self.vtx[j] for j in survivors]
        mq = len(survivors)
        proj = []
        for i in range(self.dim):
            u = [F.zero] * self.dim
            u[i] = F.one
            coeffs = tracked.coords(u)
            proj.append([F.of(c) for c in coeffs[nsub:]])
        # the span must be action-stable or the quotient action is bogus
        for r in sub_basis:
            for k in range(self.A.n, self.A.dim):
                img = _row_mul(F, [F.of(x) for x in r], self.act[k])
                coeffs = tracked.coords(img)
                if any(not F.is_zero(F.of(c)) for c in coeffs[nsub:]):
                    raise ModuleError("the given rows do not span a "
                                      "submodule")
        act = []
        for k in range(self.A.dim):
            Xk = self.act[k]
            mat = _mat_zero(F, mq, mq)
            for t, j in enumerate(survivors):
                coeffs = tracked.coords(list(Xk[j]))
                mat[t] = [F.of(c) for c in coeffs[nsub:]]
            act.append(mat)
        return Module(self.A, vtx, act), proj

    # -- covers, presentations, translate ----------------------------------

    def radical_rows(self) -> list:
        """Spanning rows of M . rad(A)."""
        F = self.A.field
        span = make_span(F, self.dim)
        for k in range(self.A.n, self.A.dim):
            for row in self.act[k]:
                if any(not F.is_zero(x) for x in row):
                    span.add(row)
        return [list(r) for r in span.basis_rows()]

    def proj_cover(self):
        """Minimal projective cover.
        Returns (slot vertex labels, P0 module, cover matrix P0.dim x m)."""
        A, F = self.A, self.A.field
        radspan = make_span(F, self.dim)
        for r in self.radical_rows():
            radspan.add(r)
        gen_positions = []
        for j in range(self.dim):
            u = [F.zero] * self.dim
            u[j] = F.one
            if radspan.add(u):
                gen_positions.append(j)
        slots = [A.vertex_labels[self.vtx[j]] for j in gen_positions]
        if not slots:
            return [], Module.zero(A), []
        P0 = Module.direct_sum([Module.projective(A, s) for s in slots])
        cover = []
        for j in gen_positions:
            vidx = self.vtx[j]
            for k in _projective_basis(A, vidx):
                u = [F.zero] * self.dim
                u[j] = F.one
                cover.append(_row_mul(F, u, self.act[k]))
        return slots, P0, cover

    def min_presentation(self) -> MinPresentation:
        A, F = self.A, self.A.field
        slots0, P0, cover = self.proj_cover()
        if not slots0:
            return MinPresentation([], [], [])
        ker_rows = kernel(_transpose(cover), P0.dim, F) if cover else []
        ker_rows = [list(r) for r in ker_rows]
        if not ker_rows:
            return MinPresentation(slots0, [], [[] for _ in slots0])
        khom = P0._homogeneous_basis(ker_rows)
        kradspan = make_span(F, P0.dim)
        for r in khom:
            for k in range(A.n, A.dim):
                img = _row_mul(F, [F.of(x) for x in r], P0.act[k])
                if any(not F.is_zero(x) for x in img):
                    kradspan.add(img)
        slot_ranges = []
        off = 0
        for s in slots0:
            b = _projective_basis(A, A.vertex_labels.index(s))
            slot_ranges.append((off, b))
            off += len(b)
        slots1 = []
        entries_cols = []
        for r in khom:
            if not kradspan.add(r):
                continue
            rv = [F.of(x) for x in r]
            j = next(t for t, x in enumerate(rv) if not F.is_zero(x))
            slots1.append(A.vertex_labels[P0.vtx[j]])
            col = []
            for off, basis in slot_ranges:
                elem = {}
                for t, k in enumerate(basis):
                    c = rv[off + t]
                    if not F.is_zero(c):
                        elem[k] = c
                col.append(elem)
            entries_cols.append(col)
        entries = [[entries_cols[j][i] for j in range(len(slots1))]
                   for i in range(len(slots0))]
        return MinPresentation(slots0, slots1, entries)

    def tau(self) -> "Module":
        """The translate, via the transpose of the minimal presentation."""
        A, F = self.A, self.A.field
        pres = self.min_presentation()
        if not pres.slots1:
            return Module.zero(A)
        Aop = _structural_opposite(A)
        # blocks of Hom(P0, A) = sum_i A e_{t_i} as right modules over Aop
        src_blocks = []
        for t in pres.slots0:
            tidx = A.vertex_labels.index(t)
            src_blocks.append(_projective_basis(Aop, tidx))
        tgt_ranges = []
        off = 0
        for w in pres.slots1:
            widx = A.vertex_labels.index(w)
            b = _projective_basis(Aop, widx)
            tgt_ranges.append((off, {k: t for t, k in enumerate(b)}))
            off += len(b)
        total1 = off
        img_rows = []
        for i, basis in enumerate(src_blocks):
            for k in basis:
                row = [F.zero] * total1
                for j in range(len(pres.slots1)):
                    entry = pres.entries[i][j]
                    if not entry:
                        continue
                    prod = A.mul({k: F.one}, entry)
                    off, pos = tgt_ranges[j]
                    for kk, c in prod.items():
                        row[off + pos[kk]] = F.add(row[off + pos[kk]], c)
                img_rows.append(row)
        P1op = Module.direct_sum([Module.projective(Aop, w)
                                  for w in pres.slots1])
        tr, _ = P1op.quotient(img_rows)
        act = [_transpose(tr.act[k]) for k in range(A.dim)]
        return Module(A, tr.vtx, act)

    # -- decomposition ------------------------------------------------------

    def _fitting_split(self, phi):
        """Split along ker/im of a high power of an endomorphism, if proper."""
        F = self.A.field
        power = phi
        for _ in range(max(1, self.dim.bit_length())):
            power = _mat_mul(F, power, power)
        r = _mat_rank(F, power)
        if r == 0 or r == self.dim:
            return None
        ker_rows = [list(v) for v in kernel(_transpose(power), self.dim, F)]
        span = make_span(F, self.dim)
        im_rows = []
        for row in power:
            if span.add(row):
                im_rows.append(list(row))
        part1, _ = self.submodule(ker_rows)
        part2, _ = self.submodule(im_rows)
        return part1, part2

    def decompose(self) -> list:
        """Indecomposable summands (order not specified)."""
        if self.dim == 0:
            return []
        F = self.A.field
        mats = self.hom_basis(self)
        if len(mats) - self._end_radical_dim(mats) == 1:
            return [self]
        pool = list(mats)
        for a in range(len(mats)):
            for b in range(a + 1, len(mats)):
                pool.append(_mat_add(F, mats[a], mats[b]))
        rng = random.Random(0x5EED)
        for _ in range(40):
            acc = _mat_zero(F, self.dim, self.dim)
            for h in mats:
                acc = _mat_add(F, acc, _mat_scale(F, h, F.of(
                    rng.randint(-6, 6))))
            pool.append(acc)
        for phi in pool:
            split = self._fitting_split(phi)
            if split is not None:
                return split[0].decompose() + split[1].decompose()
        raise ModuleError("no splitting endomorphism found although the "
                          "endomorphism ring is not local")

    def __repr__(self) -> str:
        return f"Module(dim_vector={self.dim_vector()})"


def is_stau_pair(A: FiniteDimAlgebra, summands, removed_labels) -> bool:
    """Whether (sum of summands, sum of projectives at removed vertices)
    is a support pair: indecomposable pairwise non-isomorphic summands
    avoiding the removed vertices, no maps into the translate, and the
    summand count filling up the number of vertices."""
    summands = list(summands)
    removed = list(removed_labels)
    if len(set(removed)) != len(removed):
        return False
    for v in removed:
        if v not in A.vertex_labels:
            raise ModuleError(f"unknown vertex {v!r}")
    if len(summands) + len(removed) != A.n:
        return False
    removed_idx = {A.vertex_labels.index(v) for v in removed}
    for M in summands:
        if M.A is not A or M.dim == 0:
            return False
        dv = M.dim_vector()
        if any(dv[i] for i in removed_idx):
            return False
        if not M.end_is_local():
            return False
    for i in range(len(summands)):
        for j in range(i + 1, len(summands)):
            if summands[i].is_iso(summands[j]):
                return False
    taus = [M.tau() for M in summands]
    for M in summands:
        for T in taus:
            if T.dim and M.hom_dim(T):
                return False
    return True
