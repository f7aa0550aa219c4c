"""Reduction and quiver-combinatorics tests.

The central-radical ideal oracle below is a standalone reimplementation:
dense Fraction Gauss-Jordan, the center from the commutation linear
system, and the shrink-to-ideal fixpoint, sharing no code with the
library's span tracker.

Hand-checked facts used as frozen values:

* nakayama-2 has center span{1}, so the maximal central-radical ideal
  is zero.
* k[x]/(x^2) and k[x]/(x^3) are commutative, so the ideal is the whole
  radical (dims 1 and 2) and both reduce to the one-dimensional algebra.
* A2: alpha+beta is central, but the ideal it generates contains
  alpha*sigma, and alpha*sigma is not central since (alpha*sigma)*gamma
  = alpha^3 while gamma*(alpha*sigma) = lambda*beta^3.  The elements
  alpha^2, beta^2, alpha^3, beta^3 are central (all products with
  sigma, gamma vanish via the lambda-relations, e.g. (1-lambda)
  alpha^2*sigma = 0), and their span is an ideal.  Hence the maximal
  ideal is exactly span{alpha^2, beta^2, alpha^3, beta^3}: basis
  indices 6, 8, 10, 11 of the built algebra.
* the separated quiver of exrs0-1 (square with a diagonal) has 8
  vertices and 5 arrows; its one nontrivial component is the tree with
  two branch vertices carrying two leaves each, i.e. extended D~5.
"""
from __future__ import annotations

from fractions import Fraction

import networkx as nx
import pytest

from tautilt import catalog, reductions
from tautilt.algebra import build_algebra
from tautilt.engine import Count, count
from tautilt.quiver import Presentation, Quiver
from tautilt.reductions import (GraphClass, ReductionError, classify_graph,
                                double_quiver, dynkin_graph,
                                max_central_radical_ideal, quotient_by_ideal,
                                radical_square_zero, separated_quiver,
                                underlying_multigraph)


# -- oracle: dense rational linear algebra, written first -------------------


def _nullspace(rows, width):
    M = [[Fraction(c) for c in row] for row in rows]
    pivots = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        M[r] = [x / M[r][c] for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    basis = []
    for fc in (c for c in range(width) if c not in pivots):
        v = [Fraction(0)] * width
        v[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -M[ri][fc]
        basis.append(v)
    return basis


class _Span:
    def __init__(self, width):
        self.width = width
        self.rows = {}

    def residue(self, vec):
        v = [Fraction(c) for c in vec]
        for lead in sorted(self.rows):
            if v[lead]:
                f = v[lead]
                v = [a - f * b for a, b in zip(v, self.rows[lead])]
        return v

    def add(self, vec):
        v = self.residue(vec)
        lead = next((i for i, c in enumerate(v) if c), None)
        if lead is None:
            return False
        self.rows[lead] = [c / v[lead] for c in v]
        return True

    def contains(self, vec):
        return all(c == 0 for c in self.residue(vec))


def _vec(A, x):
    return [Fraction(c) for c in A.as_vector(x)]


def _mulvec(A, x_vec, y_vec):
    out = [Fraction(0)] * A.dim
    for a, ca in enumerate(x_vec):
        if not ca:
            continue
        for b, cb in enumerate(y_vec):
            if not cb:
                continue
            for m, c in A.mul({a: 1}, {b: 1}).items():
                out[m] += ca * cb * Fraction(c)
    return out


def oracle_ideal(A):
    """Basis of the largest ideal inside center(A) ∩ rad(A)."""
    d = A.dim
    eqs = []
    for g in range(d):
        gv = [Fraction(0)] * d
        gv[g] = Fraction(1)
        diff = [[Fraction(0)] * d for _ in range(d)]
        for k in range(d):
            kv = [Fraction(0)] * d
            kv[k] = Fraction(1)
            left = _mulvec(A, kv, gv)
            right = _mulvec(A, gv, kv)
            for m in range(d):
                diff[m][k] = left[m] - right[m]
        eqs.extend(diff)
    for k in range(A.n):            # no idempotent coordinates: inside rad
        row = [Fraction(0)] * d
        row[k] = Fraction(1)
        eqs.append(row)
    basis = _nullspace(eqs, d)
    while True:
        span = _Span(d)
        for v in basis:
            span.add(v)
        m = len(basis)
        eqs = []
        for g in range(d):
            gv = [Fraction(0)] * d
            gv[g] = Fraction(1)
            for prod in (lambda v: _mulvec(A, gv, v),
                         lambda v: _mulvec(A, v, gv)):
                rows = [span.residue(prod(v)) for v in basis]
                for t in range(d):
                    eqs.append([rows[j][t] for j in range(m)])
        combos = _nullspace(eqs, m)
        new = []
        for cm in combos:
            v = [Fraction(0)] * d
            for j, c in enumerate(cm):
                if c:
                    v = [a + c * b for a, b in zip(v, basis[j])]
            new.append(v)
        if len(new) == len(basis):
            return basis
        basis = new


def _span_of(A, elements):
    span = _Span(A.dim)
    for x in elements:
        span.add(_vec(A, x))
    return span


# -- fixtures ---------------------------------------------------------------


def loop_algebra(power):
    q = Quiver([1], [("x", 1, 1)])
    rel = "*".join(["x"] * power)
    return build_algebra(Presentation.from_strings(q, [rel]))


# -- maximal central-radical ideal ------------------------------------------


def test_ideal_nakayama_zero():
    A = catalog.build("nakayama-2")
    assert max_central_radical_ideal(A) == []
    assert oracle_ideal(A) == []


def test_ideal_commutative_loops():
    A2 = loop_algebra(2)
    got = max_central_radical_ideal(A2)
    assert len(got) == 1 and len(oracle_ideal(A2)) == 1
    assert _span_of(A2, got).contains(_vec(A2, {A2.n: 1}))    # x itself
    A3 = loop_algebra(3)
    assert len(max_central_radical_ideal(A3)) == 2
    assert len(oracle_ideal(A3)) == 2


def test_ideal_A2_hand_values():
    A = catalog.build("A2")
    got = max_central_radical_ideal(A)
    assert len(got) == 4
    span = _span_of(A, got)
    for k in (6, 8, 10, 11):        # alpha^2, beta^2, alpha^3, beta^3
        assert span.contains(_vec(A, {k: 1}))
    assert not span.contains(_vec(A, {2: 1, 3: 1}))           # alpha+beta


@pytest.mark.parametrize("key", ["A2", "A5", "L1", "L3"])
def test_ideal_matches_oracle(key):
    A = catalog.build(key)
    got = max_central_radical_ideal(A)
    want = oracle_ideal(A)
    assert len(got) == len(want)
    gspan = _span_of(A, got)
    wspan = _Span(A.dim)
    for v in want:
        wspan.add(v)
    for v in want:
        assert gspan.contains(v)
    for x in got:
        assert wspan.contains(_vec(A, x))


@pytest.mark.parametrize("key", ["A2", "A5", "L1"])
def test_ideal_is_ideal(key):
    A = catalog.build(key)
    got = max_central_radical_ideal(A)
    span = _span_of(A, got)
    for g in range(A.dim):
        for x in got:
            assert span.contains(_vec(A, A.mul({g: 1}, x)))
            assert span.contains(_vec(A, A.mul(x, {g: 1})))


# -- reduce -----------------------------------------------------------------


def test_reduce_loop_algebras():
    assert reductions.reduce(loop_algebra(2)).dim == 1
    assert reductions.reduce(loop_algebra(3)).dim == 1
    assert count(reductions.reduce(loop_algebra(3))) == Count(2, True)
    assert count(loop_algebra(3)) == Count(2, True)


def test_reduce_preserves_counts_small():
    A5 = catalog.build("A5")
    assert count(reductions.reduce(A5)) == count(A5) == Count(8, True)
    A1 = catalog.build("A1")
    assert count(reductions.reduce(A1)) == Count(24, True)


def test_reduce_fixpoint():
    B = reductions.reduce(loop_algebra(3))
    assert max_central_radical_ideal(B) == []
    assert reductions.reduce(B).dim == B.dim


# -- quotients --------------------------------------------------------------


def test_quotient_zero_ideal():
    A = catalog.build("A5")
    B = quotient_by_ideal(A, [])
    assert B.dim == A.dim and B.n == A.n


def test_quotient_rejects_nonradical():
    A = catalog.build("A5")
    with pytest.raises(ReductionError):
        quotient_by_ideal(A, [{0: 1}])                        # e1


def test_quotient_rejects_nonideal():
    A = loop_algebra(3)
    with pytest.raises(ReductionError):
        quotient_by_ideal(A, [{A.n: 1}])      # span{x} misses x^2


def test_radical_square_zero_dim():
    for key in ["A5", "L1", "A2"]:
        A = catalog.build(key)
        B = radical_square_zero(A)
        assert B.dim == A.n + len(A.presentation.quiver.arrows)


def test_exrs0_finite():
    assert count(catalog.build("exrs0-1")).exact


# -- quiver combinatorics ---------------------------------------------------


def test_separated_exrs0():
    Q = catalog.presentation("exrs0-1").quiver
    S = separated_quiver(Q)
    assert len(S.vertices) == 8
    assert len(S.arrows) == len(Q.arrows) == 5
    G = underlying_multigraph(S)
    assert nx.is_bipartite(G)
    D = nx.MultiDiGraph()
    D.add_nodes_from(S.vertices)
    D.add_edges_from((a.src, a.tgt) for a in S.arrows)
    assert nx.is_directed_acyclic_graph(D)


def test_double_single_arrow():
    Q = Quiver([1, 2], [("a", 1, 2)])
    D = double_quiver(Q)
    assert len(D.arrows) == 2
    assert sorted((a.src, a.tgt) for a in D.arrows) == [(1, 2), (2, 1)]
    P = catalog.presentation("preproj-A2").quiver
    assert sorted(D.underlying_edges()) == sorted(P.underlying_edges())


def test_separated_double_tree():
    Q = Quiver([1, 2, 3], [("a", 1, 2), ("b", 2, 3)])
    S = separated_quiver(double_quiver(Q))
    G = underlying_multigraph(S)
    comps = [G.subgraph(c).copy() for c in nx.connected_components(G)]
    assert len(comps) == 2
    for c in comps:
        assert classify_graph(c) == GraphClass("Dynkin", "A3", None)


# -- graph classification ---------------------------------------------------


def _path(n):
    g = nx.MultiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from((i, i + 1) for i in range(n - 1))
    return g


def _cycle(n):
    g = nx.MultiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from((i, (i + 1) % n) for i in range(n))
    return g


def _branches(*lengths):
    """Tree with one center and paths of the given lengths hanging off."""
    g = nx.MultiGraph()
    g.add_node(0)
    nxt = 1
    for length in lengths:
        prev = 0
        for _ in range(length):
            g.add_edge(prev, nxt)
            prev = nxt
            nxt += 1
    return g


def test_classify_paths():
    for n in range(1, 9):
        assert classify_graph(_path(n)) == GraphClass("Dynkin", f"A{n}", None)


def test_classify_d_and_e():
    assert classify_graph(_branches(1, 1, 1)) == \
        GraphClass("Dynkin", "D4", None)
    assert classify_graph(_branches(1, 1, 3)) == \
        GraphClass("Dynkin", "D6", None)
    assert classify_graph(_branches(1, 2, 2)) == \
        GraphClass("Dynkin", "E6", None)
    assert classify_graph(_branches(1, 2, 3)) == \
        GraphClass("Dynkin", "E7", None)
    assert classify_graph(_branches(1, 2, 4)) == \
        GraphClass("Dynkin", "E8", None)


def test_classify_cycles():
    assert classify_graph(_cycle(1)) == \
        GraphClass("ExtendedDynkin", "A~0", None)
    assert classify_graph(_cycle(2)) == \
        GraphClass("ExtendedDynkin", "A~1", None)
    assert classify_graph(_cycle(3)) == \
        GraphClass("ExtendedDynkin", "A~2", None)
    assert classify_graph(_cycle(6)) == \
        GraphClass("ExtendedDynkin", "A~5", None)


def test_classify_extended_d_and_e():
    assert classify_graph(_branches(1, 1, 1, 1)) == \
        GraphClass("ExtendedDynkin", "D~4", None)
    dd5 = nx.MultiGraph()
    dd5.add_edges_from([(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])
    assert classify_graph(dd5) == GraphClass("ExtendedDynkin", "D~5", None)
    assert classify_graph(_branches(2, 2, 2)) == \
        GraphClass("ExtendedDynkin", "E~6", None)
    assert classify_graph(_branches(1, 3, 3)) == \
        GraphClass("ExtendedDynkin", "E~7", None)
    assert classify_graph(_branches(1, 2, 5)) == \
        GraphClass("ExtendedDynkin", "E~8", None)


def test_classify_other_with_witness():
    got = classify_graph(_branches(2, 2, 3))
    assert got.family == "Other" and got.name is None
    assert got.witness is not None and got.witness[0] == "E~6"
    assert len(got.witness[1]) == 7


def test_classify_separated_exrs0():
    Q = catalog.presentation("exrs0-1").quiver
    G = underlying_multigraph(separated_quiver(Q))
    got = classify_graph(G)
    assert got.family == "Other"
    assert got.witness is not None and got.witness[0] == "D~5"
    assert len(got.witness[1]) == 6


def test_classify_round_trip():
    tags = [("Dynkin", t) for t in
            ["A1", "A2", "A7", "D4", "D5", "D8", "E6", "E7", "E8"]] + \
           [("ExtendedDynkin", t) for t in
            ["A~0", "A~1", "A~4", "D~4", "D~5", "D~7",
             "E~6", "E~7", "E~8"]]
    for family, name in tags:
        got = classify_graph(dynkin_graph(name))
        assert got == GraphClass(family, name, None)
