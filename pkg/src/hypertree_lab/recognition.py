"""Recognition algorithms: chordality, hypertree tests, dual-side reduction.

Three independent hypertree tests are exposed and must agree:

  - HELLY_CHORDAL: the family is Helly and its line graph is chordal.
  - MAX_WEIGHT_TREE: weight each vertex pair by the number of edges
    containing both; a host tree exists iff the maximum spanning tree weight
    reaches sum(|F| - 1) over the edges, and then any maximum tree hosts.
  - BRUTE_FORCE: walk all labelled spanning trees (small n only).

The MAX_WEIGHT_TREE route is the production default; the other two are kept
as cross-checks and for certificates of a different shape.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .bitset import iter_bits, mask_of
from .core import Hypergraph, SimpleGraph, SpanningTree, is_helly, line_graph
from .errors import NotHypertreeError


class Method(enum.Enum):
    HELLY_CHORDAL = "helly"
    MAX_WEIGHT_TREE = "mst"
    BRUTE_FORCE = "brute"


@dataclass(frozen=True)
class RecognitionResult:
    """Outcome of a hypertree test.

    ``host_tree`` is populated by the constructive methods when the answer
    is positive. ``achieved_weight`` is the best spanning-tree weight seen
    (MAX_WEIGHT_TREE only); ``target_weight`` is sum(|F| - 1) over edges,
    the weight every host tree attains.
    """

    is_hypertree: bool
    host_tree: SpanningTree | None
    achieved_weight: int | None
    target_weight: int
    method: Method


def target_weight(h: Hypergraph) -> int:
    return sum(e.bit_count() - 1 for e in h.edges)


def pair_weight(h: Hypergraph, u: int, v: int) -> int:
    pm = (1 << u) | (1 << v)
    return sum(1 for e in h.edges if e & pm == pm)


def max_weight_spanning_tree(h: Hypergraph, reverse_ties: bool = False) -> tuple[SpanningTree, int]:
    """A maximum-weight spanning tree of K_n under the pair weights.

    Kruskal with a fixed tie order: among equal weights the lexicographically
    smallest pair wins, or the largest when ``reverse_ties`` is set. The
    reversed order exists so callers can probe whether different maximum
    trees lead to the same downstream answers.
    """
    n = h.n
    if n < 1:
        raise ValueError("need at least one vertex")
    ranked = []
    for u, v in combinations(range(n), 2):
        w = pair_weight(h, u, v)
        key = (-w, -u, -v) if reverse_ties else (-w, u, v)
        ranked.append((key, w, (u, v)))
    ranked.sort()
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    picked = []
    total = 0
    for _, w, (u, v) in ranked:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            picked.append((u, v))
            total += w
            if len(picked) == n - 1:
                break
    return SpanningTree(n, picked), total


def is_hypertree(
    h: Hypergraph,
    method: Method = Method.MAX_WEIGHT_TREE,
    brute_cap: int = 8,
) -> RecognitionResult:
    """Test whether some tree on V(H) makes every edge an induced subtree."""
    if h.n == 0:
        return RecognitionResult(True, None, 0, 0, method)
    tgt = target_weight(h)
    if method is Method.HELLY_CHORDAL:
        ok = is_helly(h) and is_chordal(line_graph(h)).is_peo
        return RecognitionResult(ok, None, None, tgt, method)
    if method is Method.MAX_WEIGHT_TREE:
        tree, got = max_weight_spanning_tree(h)
        ok = got == tgt
        return RecognitionResult(ok, tree if ok else None, got, tgt, method)
    if method is Method.BRUTE_FORCE:
        if h.n > brute_cap:
            raise ValueError(
                f"brute force walks {h.n}**{h.n - 2} trees; refusing n > {brute_cap}"
            )
        found = kernels.find_first_hosting_tree(h.n, h.edges)
        tree = SpanningTree(h.n, found) if found is not None else None
        return RecognitionResult(tree is not None, tree, None, tgt, method)
    raise ValueError(f"unknown method {method!r}")


def host_tree(h: Hypergraph, reverse_ties: bool = False) -> SpanningTree:
    """A host tree of ``h``; raises NotHypertreeError when none exists."""
    if h.n == 0:
        raise NotHypertreeError("the empty universe carries no tree")
    tree, got = max_weight_spanning_tree(h, reverse_ties=reverse_ties)
    if got != target_weight(h):
        raise NotHypertreeError(
            f"not a hypertree: max tree weight {got} < target {target_weight(h)}"
        )
    return tree


# ---------------------------------------------------------------------------
# chordality


@dataclass(frozen=True)
class ChordalityCertificate:
    """Either a perfect elimination ordering or an induced long cycle.

    ``ordering`` is the candidate elimination order produced by the search
    (vertex indices); it is perfect iff ``is_peo``. ``witness_cycle`` lists
    the vertices of an induced cycle of length >= 4 when the graph is not
    chordal.
    """

    ordering: tuple[int, ...]
    is_peo: bool
    witness_cycle: tuple[int, ...] | None


def lex_bfs_order(g: SimpleGraph) -> tuple[int, ...]:
    """Lexicographic BFS visit order; ties break toward lower vertex index."""
    n = g.n
    marks: list[list[int]] = [[] for _ in range(n)]
    visited = [False] * n
    order = []
    for step in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best < 0 or marks[v] > marks[best]):
                best = v
        visited[best] = True
        order.append(best)
        for w in iter_bits(g.adj[best]):
            if not visited[w]:
                marks[w].append(n - step)
    return tuple(order)


def _peo_failure(g: SimpleGraph, elim: tuple[int, ...]) -> int | None:
    """First vertex whose later neighbors minus the parent miss the parent."""
    pos = [0] * g.n
    for i, v in enumerate(elim):
        pos[v] = i
    for v in elim:
        later = [w for w in iter_bits(g.adj[v]) if pos[w] > pos[v]]
        if len(later) <= 1:
            continue
        parent = min(later, key=lambda w: pos[w])
        rest = mask_of(later) & ~(1 << parent)
        if rest & ~g.adj[parent]:
            return v
    return None


def _find_induced_long_cycle(g: SimpleGraph) -> tuple[int, ...] | None:
    """Some induced cycle of length >= 4, as a vertex tuple in cycle order.

    For every vertex v and nonadjacent neighbors u, w of v, a shortest u-w
    path avoiding the rest of N[v] closes an induced cycle through v. Any
    non-chordal graph admits such a triple, so the scan is exhaustive.
    """
    n = g.n
    for v in range(n):
        nb = list(iter_bits(g.adj[v]))
        for u, w in combinations(nb, 2):
            if g.has_edge(u, w):
                continue
            forbidden = (g.closed_neighborhood(v) | (1 << v)) & ~((1 << u) | (1 << w))
            prev = {u: u}
            frontier = [u]
            while frontier and w not in prev:
                nxt = []
                for a in frontier:
                    for b in iter_bits(g.adj[a] & ~forbidden):
                        if b not in prev:
                            prev[b] = a
                            nxt.append(b)
                frontier = nxt
            if w in prev:
                path = [w]
                while path[-1] != u:
                    path.append(prev[path[-1]])
                path.reverse()
                return (v, *path)
    return None


def is_chordal(g: SimpleGraph) -> ChordalityCertificate:
    """Chordality test with a certificate either way.

    Runs lexicographic BFS, checks the reversed visit order as an
    elimination order, and on failure extracts an induced cycle witness.
    """
    elim = tuple(reversed(lex_bfs_order(g)))
    if _peo_failure(g, elim) is None:
        return ChordalityCertificate(elim, True, None)
    cycle = _find_induced_long_cycle(g)
    assert cycle is not None, "no elimination order yet no induced long cycle"
    return ChordalityCertificate(elim, False, cycle)


# ---------------------------------------------------------------------------
# dual-side reduction


@dataclass(frozen=True)
class RemoveContainedEdge:
    """Removal of edge ``edge`` because it lies inside edge ``container``.

    ``container`` is None in the one degenerate case where an edge was
    shrunk to empty and nothing remains to contain it.
    """

    edge: int
    container: int | None


@dataclass(frozen=True)
class ShrinkPrivateVertex:
    """Removal of ``vertex`` from ``edge``, its only remaining edge."""

    vertex: int
    edge: int


@dataclass(frozen=True)
class ReductionTrace:
    """Full log of a reduction run.

    ``steps`` applies in order to the original edge family; edge fields
    refer to original edge indices throughout. ``residual`` holds the
    surviving (index, mask) pairs; empty residual means success.
    """

    steps: tuple[RemoveContainedEdge | ShrinkPrivateVertex, ...]
    residual: tuple[tuple[int, int], ...]

    @property
    def success(self) -> bool:
        return not self.residual


def gyo_reduce(h: Hypergraph) -> ReductionTrace:
    """Exhaustively remove contained edges and vertices private to one edge.

    Deterministic schedule: containment removals are preferred over shrinks,
    and within a rule the lowest indices act first (for a removal, the
    contained edge of lowest original index and its lowest-index container;
    for a shrink, the lowest vertex index).
    """
    work: list[tuple[int, int]] = list(enumerate(h.edges))
    steps: list[RemoveContainedEdge | ShrinkPrivateVertex] = []
    while work:
        acted = False
        for a in range(len(work)):
            for b in range(len(work)):
                if a != b and work[a][1] & work[b][1] == work[a][1]:
                    steps.append(RemoveContainedEdge(work[a][0], work[b][0]))
                    del work[a]
                    acted = True
                    break
            if acted:
                break
        if acted:
            continue
        if len(work) == 1 and work[0][1] == 0:
            steps.append(RemoveContainedEdge(work[0][0], None))
            work.clear()
            continue
        for v in range(h.n):
            bit = 1 << v
            owners = [i for i, (_, mask) in enumerate(work) if mask & bit]
            if len(owners) == 1:
                idx = owners[0]
                orig, mask = work[idx]
                work[idx] = (orig, mask & ~bit)
                steps.append(ShrinkPrivateVertex(v, orig))
                acted = True
                break
        if not acted:
            break
    return ReductionTrace(tuple(steps), tuple(work))


def is_dual_hypertree(h: Hypergraph) -> bool:
    """Whether the reduction empties the family.

    Equivalent to the dual hypergraph being a hypertree; the test suite
    cross-checks the two routes.
    """
    return gyo_reduce(h).success
