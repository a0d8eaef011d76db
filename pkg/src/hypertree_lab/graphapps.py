"""Chordal and dually chordal graphs through the host-tree machinery.

A connected chordal graph is handled through the incidence structure of its
maximal cliques: the clique trees are exactly the host trees of the
hypergraph whose vertices are the cliques and whose edges collect, per graph
vertex, the cliques containing it. A connected graph is dually chordal when
its closed neighborhoods form a hypertree; the host trees of that family are
the compatible trees (spanning trees of the graph in which every maximal
clique, equivalently every closed neighborhood, induces a subtree).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .bitset import iter_bits
from .core import Hypergraph, SimpleGraph, SpanningTree, component_masks
from .errors import (
    CapExceededError,
    NotChordalError,
    NotConnectedError,
    NotDuallyChordalError,
)
from .hosttree import is_basic_hypertree
from .recognition import host_tree, is_chordal, is_hypertree, pair_weight


@dataclass(frozen=True)
class CliqueFamily:
    """The maximal cliques of a graph, as masks in canonical order."""

    labels: tuple[str, ...]
    cliques: tuple[int, ...]


@dataclass(frozen=True)
class CliqueTree:
    """A clique tree: nodes are the cliques of ``family`` by position.

    ``weight`` is the total separator size over the tree edges, which for a
    clique tree always equals sum of clique sizes minus the vertex count.
    """

    family: CliqueFamily
    tree: SpanningTree
    weight: int


class Weighting(enum.Enum):
    CLIQUES = "cliques"
    NEIGHBORHOODS = "neighborhoods"


@dataclass(frozen=True)
class CompatibleTree:
    """A spanning tree in which every maximal clique induces a subtree."""

    tree: SpanningTree
    weight: int
    weighting: Weighting


def _require_connected(g: SimpleGraph) -> None:
    if g.n == 0:
        raise NotConnectedError("the empty graph is not accepted here")
    if not g.is_connected():
        raise NotConnectedError("the graph is not connected")


def maximal_cliques_chordal(g: SimpleGraph) -> CliqueFamily:
    """Maximal cliques of a chordal graph from an elimination ordering.

    Each vertex contributes itself plus its later neighbors; deduplication
    and a maximality filter leave exactly the maximal cliques. Raises
    NotChordalError (with an induced-cycle witness) otherwise.
    """
    cert = is_chordal(g)
    if not cert.is_peo:
        raise NotChordalError("the graph is not chordal", cert.witness_cycle)
    pos = [0] * g.n
    for i, v in enumerate(cert.ordering):
        pos[v] = i
    cands = []
    for v in cert.ordering:
        m = 1 << v
        for w in iter_bits(g.adj[v]):
            if pos[w] > pos[v]:
                m |= 1 << w
        if m not in cands:
            cands.append(m)
    keep = [m for m in cands if not any(o != m and m & o == m for o in cands)]
    keep.sort(key=lambda m: tuple(iter_bits(m)))
    return CliqueFamily(g.labels, tuple(keep))


def maximal_cliques(g: SimpleGraph, cap: int | None = None) -> tuple[int, ...]:
    """Maximal cliques of an arbitrary graph (pivoted branch and bound).

    Exponential in the worst case; ``cap`` aborts with CapExceededError once
    more than that many cliques have been collected.
    """
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            found.append(r)
            if cap is not None and len(found) > cap:
                raise CapExceededError(
                    f"more than {cap} maximal cliques", cap=cap
                )
            return
        both = p | x
        pivot = -1
        best = -1
        for u in iter_bits(both):
            score = (g.adj[u] & p).bit_count()
            if score > best:
                best = score
                pivot = u
        for v in iter_bits(p & ~g.adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & g.adj[v], x & g.adj[v])
            p &= ~bit
            x |= bit

    if g.n:
        expand(0, g.full_mask, 0)
    found.sort(key=lambda m: tuple(iter_bits(m)))
    return tuple(found)


def clique_incidence_hypergraph(family: CliqueFamily) -> Hypergraph:
    """Vertices are the cliques; one edge per graph vertex collects its cliques."""
    labels = tuple(f"C{i}" for i in range(len(family.cliques)))
    edges = []
    for v in range(len(family.labels)):
        m = 0
        for i, c in enumerate(family.cliques):
            if c >> v & 1:
                m |= 1 << i
        if m:
            edges.append(m)
    return Hypergraph(labels, edges)


def clique_tree(g: SimpleGraph) -> CliqueTree:
    """A clique tree of a connected chordal graph.

    Built as a host tree of the clique incidence hypergraph; the returned
    weight (total separator size) is checked against clique sizes minus
    vertex count.
    """
    _require_connected(g)
    family = maximal_cliques_chordal(g)
    incidence = clique_incidence_hypergraph(family)
    tree = host_tree(incidence)
    weight = sum(
        (family.cliques[i] & family.cliques[j]).bit_count() for i, j in tree.edges
    )
    assert weight == sum(c.bit_count() for c in family.cliques) - g.n
    return CliqueTree(family, tree, weight)


def clique_tree_edge_feasible(g: SimpleGraph, c1: int, c2: int) -> bool:
    """Whether some clique tree of ``g`` joins the two given cliques.

    ``c1`` and ``c2`` are vertex masks and must be distinct maximal cliques.
    The test: after deleting their intersection from the graph, the two
    residues must fall in different components.
    """
    _require_connected(g)
    family = maximal_cliques_chordal(g)
    if c1 not in family.cliques or c2 not in family.cliques:
        raise ValueError("both vertex sets must be maximal cliques")
    if c1 == c2:
        raise ValueError("need two distinct cliques")
    sep = c1 & c2
    adj = [0 if sep >> v & 1 else g.adj[v] & ~sep for v in range(g.n)]
    comps = component_masks(adj)
    u = (c1 & ~sep & -(c1 & ~sep)).bit_length() - 1
    w = (c2 & ~sep & -(c2 & ~sep)).bit_length() - 1
    side = next(c for c in comps if c >> u & 1)
    return not (side >> w & 1)


def neighborhood_family(g: SimpleGraph) -> Hypergraph:
    """Closed neighborhoods of ``g`` as a hypergraph, one edge per vertex."""
    return Hypergraph(g.labels, tuple(g.closed_neighborhood(v) for v in range(g.n)))


def is_dually_chordal(g: SimpleGraph) -> bool:
    """Whether the closed neighborhoods of ``g`` form a hypertree."""
    _require_connected(g)
    return is_hypertree(neighborhood_family(g)).is_hypertree


def compatible_tree(
    g: SimpleGraph,
    weighting: Weighting = Weighting.NEIGHBORHOODS,
    clique_cap: int = 4096,
) -> CompatibleTree:
    """A compatible tree of a connected dually chordal graph.

    NEIGHBORHOODS: host tree of the closed-neighborhood family; its weight
    under pairwise neighborhood overlaps is always twice the edge count.
    CLIQUES: host tree of the maximal-clique family (clique listing is
    gated by ``clique_cap``). Both weightings select from the same tree set.
    """
    _require_connected(g)
    if not is_dually_chordal(g):
        raise NotDuallyChordalError("the graph is not dually chordal")
    if weighting is Weighting.NEIGHBORHOODS:
        fam = neighborhood_family(g)
        tree = host_tree(fam)
        weight = sum(pair_weight(fam, u, v) for u, v in tree.edges)
        assert weight == 2 * g.edge_count
    elif weighting is Weighting.CLIQUES:
        fam = Hypergraph(g.labels, maximal_cliques(g, cap=clique_cap))
        tree = host_tree(fam)
        weight = sum(pair_weight(fam, u, v) for u, v in tree.edges)
        assert weight == sum(e.bit_count() - 1 for e in fam.edges)
    else:
        raise ValueError(f"unknown weighting {weighting!r}")
    for u, v in tree.edges:
        assert g.has_edge(u, v), "a compatible tree must live inside the graph"
    return CompatibleTree(tree, weight, weighting)


def compatible_edge_feasible(g: SimpleGraph, u: int, v: int) -> bool:
    """Whether some compatible tree of ``g`` uses the edge uv.

    Only graph edges qualify. The edge uv is feasible iff u and v are
    disconnected in the subgraph kept by edges xy (other than uv) for which
    some vertex outside N[u] meet N[v] covers both ends with its closed
    neighborhood.
    """
    _require_connected(g)
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise ValueError("need two distinct vertices of the graph")
    if not is_dually_chordal(g):
        raise NotDuallyChordalError("the graph is not dually chordal")
    if not g.has_edge(u, v):
        return False
    keep = g.closed_neighborhood(u) & g.closed_neighborhood(v)
    adj = [0] * g.n
    for z in range(g.n):
        if keep >> z & 1:
            continue
        ball = g.closed_neighborhood(z)
        for x in iter_bits(ball):
            adj[x] |= g.adj[x] & ball
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    comps = component_masks(adj)
    side = next(c for c in comps if c >> u & 1)
    return not (side >> v & 1)


def is_basic_chordal(g: SimpleGraph) -> bool:
    """Whether the clique incidence hypergraph keeps the same host trees as
    its neighborhood hypergraph.

    Equivalently: the clique trees of ``g`` are exactly the compatible trees
    of the clique graph. Requires a connected chordal graph.
    """
    _require_connected(g)
    family = maximal_cliques_chordal(g)
    return is_basic_hypertree(clique_incidence_hypergraph(family))
