"""Breadth-first enumeration of the mutation graph of two-term silting
complexes.

Nodes are keyed by the sorted tuple of g-vectors of their summands; this
is a complete isomorphism invariant for the objects the search visits, so
the walk closes up exactly when the graph is finite.  Edges are stored
left-oriented: (source key, summand position, target key) means mutating
the source at that position is the arrow-direction (left) exchange.  Every
discovered move is recorded together with its reverse, so each geometric
edge costs one mutation.

The search is layered: the whole frontier is expanded before any result
is merged, and results are merged in sorted task order.  Worker threads
only ever compute mutations of already-merged nodes, which makes the
resulting graph independent of the thread count.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .algebra import FiniteDimAlgebra, _int_det
from .complexes import TwoTermComplex, mutate, pair_of_complex


class EngineError(RuntimeError):
    pass


# caches handed to mutate() are cleared once they pass this many entries
_CACHE_LIMIT = 50000


@dataclass(frozen=True)
class Count:
    """Node count of an exchange graph; exact when the walk closed up."""
    value: int
    exact: bool

    def __str__(self):
        tag = "Finite" if self.exact else "AtLeast"
        return f"{tag}({self.value})"


@dataclass
class GraphNode:
    key: tuple          # sorted g-vectors of the summands
    summands: list      # TwoTermComplex list, sorted to match key
    removed: tuple      # vertex labels carried only by shifted stalks
    support: tuple      # the remaining vertex labels
    h0_dims: list       # dimension vector of the degree-zero homology


class ExchangeGraph:
    def __init__(self, A: FiniteDimAlgebra, limit: int):
        self.A = A
        self.limit = limit
        self.nodes: dict[tuple, GraphNode] = {}
        self.edges: set[tuple] = set()
        self.complete = True
        self.expansions = 0

    def count(self) -> Count:
        return Count(len(self.nodes), self.complete)


def _node_payload(A: FiniteDimAlgebra, summands) -> GraphNode:
    ordered = sorted(summands, key=lambda t: t.g_vector())
    key = tuple(t.g_vector() for t in ordered)
    removed = []
    dims = [0] * A.n
    for t in ordered:
        if not t.zero:
            removed.extend(t.neg)
        for i, d in enumerate(t.h0_dim_vector()):
            dims[i] += d
    removed = tuple(sorted(removed))
    support = tuple(v for v in A.vertex_labels if v not in set(removed))
    return GraphNode(key, ordered, removed, support, dims)


def _check_unimodular(key) -> None:
    det = _int_det([list(r) for r in key])
    if det not in (1, -1):
        raise EngineError(f"g-matrix with determinant {det} at {key}")


def enumerate_graph(A: FiniteDimAlgebra, limit: int = 100000,
                    threads: int = 1) -> ExchangeGraph:
    """Walk the mutation graph from the stalk node until it closes up or
    the node budget is hit (graph.complete goes False)."""
    if limit < 1:
        raise EngineError("node limit must be positive")
    if threads < 1:
        raise EngineError("thread count must be positive")
    g = ExchangeGraph(A, limit)
    hom_cache: dict = {}
    rad_cache: dict = {}
    start = _node_payload(A, [TwoTermComplex.stalk(A, v)
                              for v in A.vertex_labels])
    _check_unimodular(start.key)
    g.nodes[start.key] = start
    known: dict[tuple, tuple] = {}
    frontier = [(start.key, p) for p in range(A.n)]
    while frontier:
        tasks = sorted(t for t in set(frontier) if t not in known)
        frontier = []
        if not tasks:
            break

        def work(task):
            key, pos = task
            return mutate(g.nodes[key].summands, pos,
                          hom_cache=hom_cache, rad_cache=rad_cache)

        if threads > 1 and len(tasks) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(work, tasks))
        else:
            results = [work(t) for t in tasks]
        g.expansions += len(tasks)

        for (key, pos), (moved, direction) in zip(tasks, results):
            new_g = moved[pos].g_vector()
            dst = _node_payload(A, moved)
            known[(key, pos)] = dst.key
            if dst.key not in g.nodes:
                if len(g.nodes) >= limit:
                    g.complete = False
                    continue
                _check_unimodular(dst.key)
                g.nodes[dst.key] = dst
                frontier.extend((dst.key, p) for p in range(A.n))
            pos_back = g.nodes[dst.key].key.index(new_g)
            known.setdefault((dst.key, pos_back), key)
            if direction == "left":
                g.edges.add((key, pos, dst.key))
            else:
                g.edges.add((dst.key, pos_back, key))

        if not g.complete:
            break
        if len(hom_cache) > _CACHE_LIMIT:
            hom_cache.clear()
            rad_cache.clear()
    return g


def count(A: FiniteDimAlgebra, limit: int = 100000,
          threads: int = 1) -> Count:
    return enumerate_graph(A, limit, threads).count()


# -- strata by support ------------------------------------------------------


@dataclass
class StrataTable:
    """Node counts grouped by the removed vertex set; every one of the
    2^n subsets appears (each stratum holds at least its projectives)."""
    counts: dict
    total: int


def _full_support_count(A: FiniteDimAlgebra, removed, limit, threads) -> int:
    """Nodes of full support over the quotient killing the given
    vertices, counted by a fresh enumeration of the quotient."""
    if len(removed) == A.n:
        return 1
    B = A.vertex_quotient(list(removed))
    g = enumerate_graph(B, limit, threads)
    if not g.complete:
        raise EngineError("quotient exchange graph truncated; "
                          "raise the limit")
    return sum(1 for node in g.nodes.values() if not node.removed)


def strata_counts(A: FiniteDimAlgebra, limit: int = 100000,
                  threads: int = 1) -> StrataTable:
    """Group the nodes by their removed vertex set, then recompute every
    stratum independently from the matching vertex quotient and insist
    the two routes agree."""
    g = enumerate_graph(A, limit, threads)
    if not g.complete:
        raise EngineError("exchange graph truncated; raise the limit")
    tally: dict = {}
    for node in g.nodes.values():
        key = frozenset(node.removed)
        tally[key] = tally.get(key, 0) + 1
    labels = list(A.vertex_labels)
    for r in range(len(labels) + 1):
        for subset in itertools.combinations(labels, r):
            expected = tally.get(frozenset(subset), 0)
            got = _full_support_count(A, subset, limit, threads)
            if got != expected:
                raise EngineError(
                    f"stratum {set(subset) or '{}'} disagrees: "
                    f"{expected} from the full graph, {got} from the "
                    f"quotient")
    return StrataTable(tally, len(g.nodes))


def support_rank_slices(A: FiniteDimAlgebra, max_rank: int,
                        limit: int = 100000, threads: int = 1) -> list[int]:
    """Node counts sliced by support size, one slice per rank from 0 to
    max_rank.  Each slice sums full-support counts over the quotients of
    the right size, so slices stay computable when the whole graph is
    infinite."""
    labels = list(A.vertex_labels)
    n = len(labels)
    if not 0 <= max_rank <= n:
        raise EngineError(f"rank must lie between 0 and {n}")
    out = []
    for r in range(max_rank + 1):
        total = 0
        for subset in itertools.combinations(labels, n - r):
            total += _full_support_count(A, subset, limit, threads)
        out.append(total)
    return out


# -- gluing subset at a projective with simple socle ------------------------


def _socle_generator(A: FiniteDimAlgebra, vertex) -> dict:
    """The socle of the indecomposable projective at the vertex as an
    algebra element; raises unless that socle is simple."""
    F = A.field
    v = A.vertex_labels.index(vertex)
    pbasis = [k for k in range(A.dim) if A.src[k] == v]
    eqs = []
    for r in range(A.n, A.dim):
        row_of = {}
        for i, k in enumerate(pbasis):
            for m, c in A.mul({k: F.one}, {r: F.one}).items():
                row_of.setdefault(m, [F.zero] * len(pbasis))[i] = c
        eqs.extend(row_of.values())
    from .linalg import kernel
    soc = kernel(eqs, len(pbasis), F)
    if len(soc) != 1:
        raise EngineError(
            f"projective at {vertex!r} has socle of length {len(soc)}, "
            "need a simple socle")
    x = {}
    for i, c in enumerate(soc[0]):
        c = F.of(c) if isinstance(c, int) else c
        if not F.is_zero(c):
            x[pbasis[i]] = c
    return x


def _pullback_module(A: FiniteDimAlgebra, proj, M):
    """B-module viewed as a module over A along the projection A -> B
    (proj gives the image of each basis element of A)."""
    from .modules import Module
    F = A.field
    act = []
    for gidx in range(A.dim):
        mat = [[F.zero] * M.dim for _ in range(M.dim)]
        for b, c in proj[gidx].items():
            blk = M.act[b]
            for i in range(M.dim):
                for j in range(M.dim):
                    if not F.is_zero(blk[i][j]):
                        mat[i][j] = F.add(mat[i][j], F.mul(c, blk[i][j]))
        act.append(mat)
    return Module(A, list(M.vtx), act)


def adachi_subset(A: FiniteDimAlgebra, vertex, limit: int = 100000,
                  threads: int = 1) -> list[GraphNode]:
    """Nodes N of the graph over B = A modulo the socle of P = P(vertex)
    whose module part contains P/soc P and admits no nonzero map to P
    over A.  These are exactly the nodes the quotient graph gains over
    the original one in the gluing comparison."""
    from .modules import Module
    if vertex not in A.vertex_labels:
        raise EngineError(f"unknown vertex {vertex!r}")
    P = Module.projective(A, vertex)
    x = _socle_generator(A, vertex)
    B, proj = A.quotient_with_projection([x])
    if B.n != A.n:
        raise EngineError("socle ideal kills an idempotent")
    vB = B.vertex_labels.index(vertex)
    if sum(1 for k in range(B.dim) if B.src[k] == vB) != P.dim - 1:
        raise EngineError(
            "socle ideal meets the projective beyond its socle")
    Pbar = Module.projective(B, vertex)
    g = enumerate_graph(B, limit, threads)
    if not g.complete:
        raise EngineError("exchange graph truncated; raise the limit")
    members = []
    for key in sorted(g.nodes):
        node = g.nodes[key]
        mods, _ = pair_of_complex(node.summands)
        if not any(m.is_iso(Pbar) for m in mods):
            continue
        if all(_pullback_module(A, proj, m).hom_dim(P) == 0 for m in mods):
            members.append(node)
    return members
