"""Exact linear algebra over the rationals and GF(p).

Rational vectors are handled as primitive integer vectors (denominators
cleared, content divided out); row scaling never changes kernels, ranks or
spans, so this loses nothing.  Rational nullspaces go through a mod-p
accelerator whose candidates are rationally reconstructed and then verified
against the exact system; a verified candidate set of size
ncols - rank_p is automatically a complete basis because rank_p <= rank_Q.
Every failure path falls back to pure fraction-free elimination, so no
unverified modular result is ever returned.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from .fields import Field, PrimeField

# Largest primes below 2^31: (p-1)^2 fits in int64 with room to spare.
_PRIMES = (2147483647, 2147483629, 2147483587)


def primitive(row) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (first nonzero
    entry positive).  Zero rows come back as all-zero."""
    fr = [x if isinstance(x, int) else Fraction(x) for x in row]
    den = 1
    for x in fr:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return tuple(ints)
    for v in ints:
        if v:
            if v < 0:
                g = -g
            break
    return tuple(v // g for v in ints)


def _content_reduce(vec: list[int]) -> list[int]:
    g = 0
    for v in vec:
        g = gcd(g, v)
        if g == 1:
            return vec
    if g > 1:
        return [v // g for v in vec]
    return vec


class SpanQQ:
    """Row space over Q kept in fully reduced integer echelon form.

    add() reports whether the vector enlarged the span.  With track=True each
    echelon row also carries coefficients over the independent generators
    (the vectors whose add() returned True, in add order) plus a scale slot,
    so coords() can rewrite any member over those generators exactly.
    """

    def __init__(self, ncols: int, track: bool = False):
        self.ncols = ncols
        self.track = track
        self.rows: list[tuple[int, list[int]]] = []  # (pivot, joint row)
        self.ngens = 0

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce_joint(self, joint: list[int]) -> list[int]:
        for pivot, row in self.rows:
            if joint[pivot]:
                a, b = row[pivot], joint[pivot]
                g = gcd(a, b)
                ma, mb = a // g, b // g
                joint = _content_reduce(
                    [ma * x - mb * y for x, y in zip(joint, row)])
        return joint

    def reduce(self, vec) -> tuple[int, ...]:
        """Exact residue of vec against the span, as a primitive direction."""
        ints = list(primitive(vec))
        if len(ints) != self.ncols:
            raise ValueError("vector length mismatch")
        if self.track:
            ints += [0] * (self.ngens + 1)
        out = self._reduce_joint(ints)[: self.ncols]
        return primitive(out)

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec) -> bool:
        fr = [x if isinstance(x, int) else Fraction(x) for x in vec]
        if len(fr) != self.ncols:
            raise ValueError("vector length mismatch")
        prim = list(primitive(fr))
        if not any(prim):
            return False
        joint = prim
        if self.track:
            # primitive = f * raw; record f on the new generator slot so the
            # invariant  vector part == sum coeff_g * raw_gen_g  holds exactly
            j = next(i for i, v in enumerate(prim) if v)
            f = Fraction(prim[j]) / Fraction(fr[j])
            for _, row in self.rows:
                row.insert(len(row) - 1, 0)
            self.ngens += 1
            joint = ([v * f.denominator for v in prim]
                     + [0] * (self.ngens - 1) + [f.numerator, 0])
        joint = self._reduce_joint(joint)
        if not any(joint[: self.ncols]):
            if self.track:
                for _, row in self.rows:
                    del row[-2]
                self.ngens -= 1
            return False
        pivot = next(i for i, v in enumerate(joint[: self.ncols]) if v)
        updated = []
        for pv, row in self.rows:
            if row[pivot]:
                a, b = joint[pivot], row[pivot]
                g = gcd(a, b)
                ma, mb = a // g, b // g
                row = _content_reduce(
                    [ma * x - mb * y for x, y in zip(row, joint)])
            updated.append((pv, row))
        updated.append((pivot, joint))
        updated.sort(key=lambda t: t[0])
        self.rows = updated
        return True

    def coords(self, vec) -> list[Fraction] | None:
        """Coefficients of vec over the independent generators, or None."""
        if not self.track:
            raise ValueError("span was built without coefficient tracking")
        fr = [x if isinstance(x, int) else Fraction(x) for x in vec]
        if len(fr) != self.ncols:
            raise ValueError("vector length mismatch")
        den = 1
        for x in fr:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
        work = [int(x * den) for x in fr] + [0] * self.ngens + [den]
        work = self._reduce_joint(work)
        if any(work[: self.ncols]):
            return None
        s = work[-1]
        if s == 0:
            raise ArithmeticError("degenerate scale during reduction")
        return [Fraction(-c, s) for c in work[self.ncols:-1]]

    def basis_rows(self) -> list[tuple[int, ...]]:
        return [tuple(row[: self.ncols]) for _, row in self.rows]


class SpanGF:
    """Row space over GF(p); same interface as SpanQQ."""

    def __init__(self, ncols: int, p: int, track: bool = False):
        self.ncols = ncols
        self.p = p
        self.track = track
        self.rows: list[tuple[int, list[int]]] = []
        self.ngens = 0

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce_joint(self, joint: list[int]) -> list[int]:
        p = self.p
        for pivot, row in self.rows:
            c = joint[pivot]
            if c:
                joint = [(x - c * y) % p for x, y in zip(joint, row)]
        return joint

    def reduce(self, vec) -> tuple[int, ...]:
        work = [int(x) % self.p for x in vec]
        if len(work) != self.ncols:
            raise ValueError("vector length mismatch")
        if self.track:
            work += [0] * (self.ngens + 1)
        return tuple(self._reduce_joint(work)[: self.ncols])

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec) -> bool:
        p = self.p
        work = [int(x) % p for x in vec]
        if len(work) != self.ncols:
            raise ValueError("vector length mismatch")
        if not any(work):
            return False
        if self.track:
            for _, row in self.rows:
                row.insert(len(row) - 1, 0)
            self.ngens += 1
            work += [0] * (self.ngens - 1) + [1, 0]
        work = self._reduce_joint(work)
        if not any(work[: self.ncols]):
            if self.track:
                for _, row in self.rows:
                    del row[-2]
                self.ngens -= 1
            return False
        pivot = next(i for i, v in enumerate(work[: self.ncols]) if v)
        inv = pow(work[pivot], p - 2, p)
        work = [(x * inv) % p for x in work]
        updated = []
        for pv, row in self.rows:
            c = row[pivot]
            if c:
                row = [(x - c * y) % p for x, y in zip(row, work)]
            updated.append((pv, row))
        updated.append((pivot, work))
        updated.sort(key=lambda t: t[0])
        self.rows = updated
        return True

    def coords(self, vec) -> list[int] | None:
        if not self.track:
            raise ValueError("span was built without coefficient tracking")
        p = self.p
        work = [int(x) % p for x in vec] + [0] * self.ngens + [1]
        work = self._reduce_joint(work)
        if any(work[: self.ncols]):
            return None
        s = work[-1]
        sinv = pow(s, p - 2, p)
        return [(-c * sinv) % p for c in work[self.ncols:-1]]

    def basis_rows(self) -> list[tuple[int, ...]]:
        return [tuple(row[: self.ncols]) for _, row in self.rows]


def make_span(field: Field, ncols: int, track: bool = False):
    if isinstance(field, PrimeField):
        return SpanGF(ncols, field.p, track=track)
    return SpanQQ(ncols, track=track)


# ---------------------------------------------------------------------------
# nullspaces


def _rref_modp(rows: list, ncols: int, p: int):
    """Reduced row echelon form mod p (vectorised).  (matrix, pivot cols)."""
    if not rows or ncols == 0:
        return np.zeros((0, ncols), dtype=np.int64), []
    M = np.array([[int(x) % p for x in r] for r in rows], dtype=np.int64)
    nrows = M.shape[0]
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        M[r] = (M[r] * pow(int(M[r, c]), p - 2, p)) % p
        col = M[:, c].copy()
        col[r] = 0
        M = (M - np.outer(col, M[r])) % p
        pivots.append(c)
        r += 1
    return M[: len(pivots)], pivots


def _kernel_from_rref(R, pivots: list[int], ncols: int, p: int):
    """One residue vector per free column (entry 1 at that column)."""
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-int(R[r, f])) % p
        out.append(v)
    return out


def _ratrec(a: int, m: int):
    """Rational reconstruction of a mod m; None if no small representative."""
    a %= m
    bound = int((m // 2) ** 0.5)
    r0, r1 = m, a
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    if t1 < 0:
        return -r1, -t1
    return r1, t1


def _lift_candidate(vec: list[int], p: int):
    vals = []
    for a in vec:
        rec = _ratrec(a, p)
        if rec is None:
            return None
        vals.append(Fraction(rec[0], rec[1]))
    return list(primitive(vals))


def kernel_int_rows(rows: list, ncols: int) -> list[tuple[int, ...]]:
    """Exact rational kernel {v : r . v = 0 for every row r}, integer rows.

    Basis vectors are primitive, one per free column, free columns ascending.
    """
    rows = [r for r in rows if any(r)]
    if not rows:
        out = []
        for i in range(ncols):
            v = [0] * ncols
            v[i] = 1
            out.append(tuple(v))
        return out

    sparse = [[(j, int(x)) for j, x in enumerate(r) if x] for r in rows]

    def verified(cands):
        got = []
        for vec in cands:
            for entries in sparse:
                if sum(c * vec[j] for j, c in entries) != 0:
                    return None
            got.append(tuple(vec))
        return got

    rrefs = []
    for p in _PRIMES:
        R, piv = _rref_modp(rows, ncols, p)
        rrefs.append((p, R, piv))
        lifted = []
        for v in _kernel_from_rref(R, piv, ncols, p):
            lift = _lift_candidate(v, p)
            if lift is None:
                lifted = None
                break
            lifted.append(lift)
        if lifted is not None:
            got = verified(lifted)
            if got is not None:
                return got
    # two-prime CRT attempt on the best (highest-rank) pivot pattern
    best = max(rrefs, key=lambda t: len(t[2]))
    same = [(p, R) for p, R, piv in rrefs if piv == best[2]]
    if len(same) >= 2:
        (p1, R1), (p2, R2) = same[0], same[1]
        m = p1 * p2
        inv = pow(p1, p2 - 2, p2)
        piv = best[2]
        pivset = set(piv)
        lifted = []
        for f in range(ncols):
            if f in pivset:
                continue
            vals = [Fraction(0)] * ncols
            vals[f] = Fraction(1)
            ok = True
            for r, c in enumerate(piv):
                a1 = (-int(R1[r, f])) % p1
                a2 = (-int(R2[r, f])) % p2
                a = (a1 + ((a2 - a1) * inv % p2) * p1) % m
                rec = _ratrec(a, m)
                if rec is None:
                    ok = False
                    break
                vals[c] = Fraction(rec[0], rec[1])
            if not ok:
                lifted = None
                break
            lifted.append(list(primitive(vals)))
        if lifted is not None:
            got = verified(lifted)
            if got is not None:
                return got
    return _kernel_exact(rows, ncols)


def _kernel_exact(rows: list, ncols: int) -> list[tuple[int, ...]]:
    span = SpanQQ(ncols)
    for r in rows:
        span.add(r)
    pivcols = {p for p, _ in span.rows}
    out = []
    for f in range(ncols):
        if f in pivcols:
            continue
        vals = [Fraction(0)] * ncols
        vals[f] = Fraction(1)
        for p, row in span.rows:
            vals[p] = Fraction(-row[f], row[p])
        out.append(primitive(vals))
    return out


def kernel(rows: list, ncols: int, field: Field) -> list[tuple[int, ...]]:
    """Kernel basis over the field.  Over Q rows may contain Fractions."""
    if isinstance(field, PrimeField):
        p = field.p
        R, piv = _rref_modp(rows, ncols, p)
        return [tuple(v) for v in _kernel_from_rref(R, piv, ncols, p)]
    return kernel_int_rows([primitive(r) for r in rows], ncols)


def rank(rows: list, ncols: int, field: Field) -> int:
    span = make_span(field, ncols)
    for r in rows:
        span.add(r)
    return span.dim
