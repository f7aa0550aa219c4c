"""Poset-preserving algebra shrinking and quiver-shape recognition.

The reduction quotients an algebra by the largest two-sided ideal lying
inside center ∩ radical; such a quotient leaves the whole support-pair
poset untouched, so counts can be transferred to the smaller algebra.
The ideal is found by shrinking center ∩ radical until it is closed
under multiplication by every basis element.

The quiver half recognizes simply laced Dynkin and extended Dynkin
shapes on underlying multigraphs (loops and parallel edges included)
and can exhibit an extended-Dynkin subgraph of anything else, which is
the standard certificate that a radical-square-zero algebra fails to be
representation-finite while staying finite for support pairs.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import networkx as nx

from .algebra import FiniteDimAlgebra
from .quiver import Quiver


class ReductionError(ValueError):
    pass


class _Echelon:
    """Row echelon over the algebra's field with linear residues (no
    rescaling of the input), keyed by lead column."""

    def __init__(self, F, width):
        self.F = F
        self.width = width
        self.rows = {}

    def residue(self, vec):
        F = self.F
        v = [F.of(c) if isinstance(c, int) else c for c in vec]
        for lead in sorted(self.rows):
            c = v[lead]
            if not F.is_zero(c):
                row = self.rows[lead]
                v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        F = self.F
        v = self.residue(vec)
        lead = next((i for i, c in enumerate(v) if not F.is_zero(c)), None)
        if lead is None:
            return False
        inv = F.inv(v[lead])
        self.rows[lead] = [F.mul(inv, c) for c in v]
        return True

    def contains(self, vec) -> bool:
        F = self.F
        return all(F.is_zero(c) for c in self.residue(vec))

    def basis(self):
        return [self.rows[lead] for lead in sorted(self.rows)]


def _solve_kernel(F, rows, width):
    """Nullspace basis over the field by Gauss-Jordan elimination."""
    M = [[F.of(c) if isinstance(c, int) else c for c in row]
         for row in rows]
    pivots = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, len(M))
                    if not F.is_zero(M[i][c])), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and not F.is_zero(M[i][c]):
                f = M[i][c]
                M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    basis = []
    for fc in (c for c in range(width) if c not in pivots):
        v = [F.zero] * width
        v[fc] = F.one
        for ri, pc in enumerate(pivots):
            v[pc] = F.neg(M[ri][fc])
        basis.append(v)
    return basis


def max_central_radical_ideal(A: FiniteDimAlgebra) -> list[dict]:
    """Basis of the largest two-sided ideal contained in center ∩
    radical, as algebra elements.  Starting from all central elements
    without idempotent part, vectors whose products with some basis
    element leave the current space are dropped until nothing moves."""
    F = A.field
    center = A.center_basis()
    if center:
        rows = [[v[k] for v in center] for k in range(A.n)]
        combos = _solve_kernel(F, rows, len(center))
        basis = []
        for cm in combos:
            v = [F.zero] * A.dim
            for j, c in enumerate(cm):
                if not F.is_zero(c):
                    v = [F.add(a, F.mul(c, F.of(b) if isinstance(b, int)
                                        else b))
                         for a, b in zip(v, center[j])]
            basis.append(v)
    else:
        basis = []
    while basis:
        ech = _Echelon(F, A.dim)
        for v in basis:
            ech.add(v)
        m = len(basis)
        eqs = []
        for g in range(A.dim):
            ge = {g: F.one}
            for side in (lambda x: A.mul(ge, x), lambda x: A.mul(x, ge)):
                res = [ech.residue(A.as_vector(side(A.as_element(v))))
                       for v in basis]
                for t in range(A.dim):
                    if any(not F.is_zero(res[j][t]) for j in range(m)):
                        eqs.append([res[j][t] for j in range(m)])
        combos = _solve_kernel(F, eqs, m)
        if len(combos) == m:
            break
        new = []
        for cm in combos:
            v = [F.zero] * A.dim
            for j, c in enumerate(cm):
                if not F.is_zero(c):
                    v = [F.add(a, F.mul(c, b)) for a, b in zip(v, basis[j])]
            new.append(v)
        basis = new
    ech = _Echelon(F, A.dim)
    for v in basis:
        ech.add(v)
    return [A.as_element(v) for v in ech.basis()]


def quotient_by_ideal(A: FiniteDimAlgebra, generators) -> FiniteDimAlgebra:
    """Quotient by a subspace after verifying it really is a two-sided
    ideal inside the radical; use A.quotient_by_ideal directly to close
    up arbitrary generators instead."""
    F = A.field
    gens = [dict(x) for x in generators]
    ech = _Echelon(F, A.dim)
    for x in gens:
        for k in x:
            if k < A.n:
                raise ReductionError(
                    "generator has an idempotent component, so the "
                    "subspace leaves the radical")
        ech.add(A.as_vector(x))
    for g in range(A.dim):
        ge = {g: F.one}
        for x in gens:
            for prod in (A.mul(ge, x), A.mul(x, ge)):
                if not ech.contains(A.as_vector(prod)):
                    raise ReductionError(
                        "subspace is not closed under multiplication "
                        "by basis elements")
    return A.quotient_by_ideal(gens)


def reduce(A: FiniteDimAlgebra) -> FiniteDimAlgebra:
    """Quotient by the maximal central-radical ideal; the support-pair
    poset of the result is isomorphic to that of A."""
    return A.quotient_by_ideal(max_central_radical_ideal(A))


def radical_square_zero(A: FiniteDimAlgebra) -> FiniteDimAlgebra:
    return A.radical_square_zero()


# -- quiver combinatorics ---------------------------------------------------


def separated_quiver(Q: Quiver) -> Quiver:
    """Bipartite acyclic quiver on two copies of the vertices, one arrow
    from plain source to shifted target per arrow of Q."""
    return Q.separated()


def double_quiver(Q: Quiver) -> Quiver:
    """Q plus one reversed arrow per arrow of Q."""
    return Q.doubled()


def underlying_multigraph(Q: Quiver) -> "nx.MultiGraph":
    G = nx.MultiGraph()
    G.add_nodes_from(Q.vertices)
    G.add_edges_from(Q.underlying_edges())
    return G


@dataclass(frozen=True)
class GraphClass:
    """Shape of a multigraph: family is Dynkin, ExtendedDynkin or Other;
    name like "D5" or "E~7" when recognized; witness = (name, node map)
    of an embedded extended-Dynkin subgraph when family is Other and one
    exists."""
    family: str
    name: str | None
    witness: tuple | None


def dynkin_graph(name: str) -> "nx.MultiGraph":
    """The multigraph of a Dynkin or extended Dynkin tag: A<n>, D<n>
    (n >= 4), E6/E7/E8, A~<m> (m >= 0, a cycle on m+1 vertices), D~<m>
    (m >= 4), E~6/E~7/E~8."""
    m = re.fullmatch(r"([ADE])(~?)(\d+)", name)
    if not m:
        raise ReductionError(f"unknown graph tag {name!r}")
    letter, ext, num = m.group(1), m.group(2) == "~", int(m.group(3))
    G = nx.MultiGraph()
    if letter == "A" and not ext:
        if num < 1:
            raise ReductionError("A<n> needs n >= 1")
        G.add_nodes_from(range(num))
        G.add_edges_from((i, i + 1) for i in range(num - 1))
        return G
    if letter == "A":
        G.add_nodes_from(range(num + 1))
        G.add_edges_from((i, (i + 1) % (num + 1)) for i in range(num + 1))
        return G
    if letter == "D" and not ext:
        if num < 4:
            raise ReductionError("D<n> needs n >= 4")
        return _branch_tree(1, 1, num - 3)
    if letter == "D":
        if num < 4:
            raise ReductionError("D~<m> needs m >= 4")
        if num == 4:
            return _branch_tree(1, 1, 1, 1)
        G.add_nodes_from(range(num + 1))
        G.add_edge(0, 2)
        G.add_edge(1, 2)
        for i in range(2, num - 2):
            G.add_edge(i, i + 1)
        G.add_edge(num - 2, num - 1)
        G.add_edge(num - 2, num)
        return G
    lengths = {(6, False): (1, 2, 2), (7, False): (1, 2, 3),
               (8, False): (1, 2, 4), (6, True): (2, 2, 2),
               (7, True): (1, 3, 3), (8, True): (1, 2, 5)}.get((num, ext))
    if lengths is None:
        raise ReductionError(f"no such E diagram {name!r}")
    return _branch_tree(*lengths)


def _branch_tree(*lengths) -> "nx.MultiGraph":
    G = nx.MultiGraph()
    G.add_node(0)
    nxt = 1
    for length in lengths:
        prev = 0
        for _ in range(length):
            G.add_edge(prev, nxt)
            prev = nxt
            nxt += 1
    return G


def _connected_tag(G) -> str | None:
    V = G.number_of_nodes()
    E = G.number_of_edges()
    degs = dict(G.degree())
    if V == 1:
        if E == 0:
            return "A1"
        if E == 1:
            return "A~0"
        return None
    if any(u == v for u, v in G.edges()):
        return None
    if E == V and all(d == 2 for d in degs.values()):
        return f"A~{V - 1}"
    if E != V - 1:
        return None
    # now a simple tree
    deg3 = [v for v, d in degs.items() if d == 3]
    high = [v for v, d in degs.items() if d >= 4]
    if not deg3 and not high:
        return f"A{V}"
    if len(high) == 1 and degs[high[0]] == 4 and not deg3:
        return "D~4" if V == 5 else None
    if high:
        return None
    if len(deg3) == 1:
        H = G.copy()
        H.remove_node(deg3[0])
        lens = tuple(sorted(len(c) for c in nx.connected_components(H)))
        if lens[:2] == (1, 1):
            return f"D{V}"
        return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8",
                (2, 2, 2): "E~6", (1, 3, 3): "E~7",
                (1, 2, 5): "E~8"}.get(lens)
    if len(deg3) == 2:
        leafy = all(sum(1 for nb in G.neighbors(v) if degs[nb] == 1) == 2
                    for v in deg3)
        return f"D~{V - 1}" if leafy else None
    return None


def _witness(G):
    V = G.number_of_nodes()
    E = G.number_of_edges()
    names = [f"A~{m}" for m in range(V)]
    names += [f"D~{m}" for m in range(4, V)]
    names += ["E~6", "E~7", "E~8"]
    for name in names:
        shape = dynkin_graph(name)
        if shape.number_of_nodes() > V or shape.number_of_edges() > E:
            continue
        gm = nx.isomorphism.MultiGraphMatcher(G, shape)
        if gm.subgraph_is_monomorphic():
            return (name, dict(gm.mapping))
    return None


def classify_graph(G) -> GraphClass:
    """Recognize a multigraph as a (simply laced) Dynkin or extended
    Dynkin shape; anything else is Other, with an embedded
    extended-Dynkin witness reported when one exists."""
    G = nx.MultiGraph(G)
    if G.number_of_nodes() == 0:
        return GraphClass("Other", None, None)
    if not nx.is_connected(G):
        return GraphClass("Other", None, _witness(G))
    tag = _connected_tag(G)
    if tag is None:
        return GraphClass("Other", None, _witness(G))
    family = "ExtendedDynkin" if "~" in tag else "Dynkin"
    return GraphClass(family, tag, None)
