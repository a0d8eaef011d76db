"""Hypergraphs, graphs, spanning trees and the primitive constructions on them.

Vertices are interned to dense indices 0..n-1 in label order; every vertex
set that moves through the package is an int bitmask over those indices.
A hypergraph keeps its hyperedges as an ordered multiset, so duplicate edges
and insertion order survive every construction that does not explicitly
deduplicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import kernels
from .bitset import iter_bits, set_repr


def _check_labels(labels: Sequence[str]) -> tuple[str, ...]:
    out = tuple(labels)
    seen = set()
    for lab in out:
        if not isinstance(lab, str) or not lab or any(c.isspace() for c in lab):
            raise ValueError(f"bad vertex label {lab!r}: labels are nonempty strings without whitespace")
        if lab in seen:
            raise ValueError(f"duplicate vertex label {lab!r}")
        seen.add(lab)
    return out


class Hypergraph:
    """A vertex universe plus an ordered multiset of nonempty hyperedges.

    Invariants:
      - labels are distinct nonempty strings without whitespace
      - every edge mask is nonzero and stays inside the universe
    An empty universe (n = 0) is allowed and then carries no edges.
    """

    __slots__ = ("labels", "edges", "_index")

    def __init__(self, labels: Sequence[str], edges: Iterable[int] = ()):
        self.labels = _check_labels(labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        n = len(self.labels)
        masks = []
        for e in edges:
            e = int(e)
            if e <= 0:
                raise ValueError("hyperedges must be nonempty")
            if e >> n:
                raise ValueError("hyperedge leaves the vertex universe")
            masks.append(e)
        self.edges = tuple(masks)

    @classmethod
    def from_edge_labels(
        cls,
        edges: Iterable[Iterable[object]],
        vertices: Sequence[object] | None = None,
    ) -> "Hypergraph":
        """Build from label collections; labels are coerced with str().

        Without an explicit ``vertices`` sequence the universe is collected
        in order of first appearance across the edges.
        """
        edge_labels = [[str(x) for x in e] for e in edges]
        if vertices is not None:
            labels = [str(x) for x in vertices]
        else:
            labels = []
            seen = set()
            for e in edge_labels:
                for lab in e:
                    if lab not in seen:
                        seen.add(lab)
                        labels.append(lab)
        index = {lab: i for i, lab in enumerate(labels)}
        masks = []
        for e in edge_labels:
            m = 0
            for lab in e:
                if lab not in index:
                    raise ValueError(f"edge uses unknown vertex {lab!r}")
                m |= 1 << index[lab]
            masks.append(m)
        return cls(labels, masks)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index_of(self, label: object) -> int:
        lab = str(label)
        if lab not in self._index:
            raise KeyError(f"unknown vertex {lab!r}")
        return self._index[lab]

    def mask_of(self, labels: Iterable[object]) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index_of(lab)
        return m

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in iter_bits(mask))

    def edge_sets(self) -> tuple[frozenset[str], ...]:
        return tuple(frozenset(self.labels_of(e)) for e in self.edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.labels == other.labels
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.edges))

    def __repr__(self) -> str:
        body = ", ".join(set_repr(e, self.labels) for e in self.edges)
        return f"Hypergraph(n={self.n}, edges=[{body}])"


class SimpleGraph:
    """An undirected graph without loops or parallel edges.

    Stored as one adjacency bitmask per vertex; construction from an edge
    list is idempotent under repeats.
    """

    __slots__ = ("labels", "adj", "_index")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]] = ()):
        self.labels = _check_labels(labels)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        n = len(self.labels)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)

    @classmethod
    def from_edge_labels(
        cls,
        edges: Iterable[tuple[object, object]],
        vertices: Sequence[object] | None = None,
    ) -> "SimpleGraph":
        pairs = [(str(a), str(b)) for a, b in edges]
        if vertices is not None:
            labels = [str(x) for x in vertices]
        else:
            labels = []
            seen = set()
            for a, b in pairs:
                for lab in (a, b):
                    if lab not in seen:
                        seen.add(lab)
                        labels.append(lab)
        index = {lab: i for i, lab in enumerate(labels)}
        idx_pairs = []
        for a, b in pairs:
            if a not in index or b not in index:
                raise ValueError(f"edge ({a!r}, {b!r}) uses an unknown vertex")
            idx_pairs.append((index[a], index[b]))
        return cls(labels, idx_pairs)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index_of(self, label: object) -> int:
        lab = str(label)
        if lab not in self._index:
            raise KeyError(f"unknown vertex {lab!r}")
        return self._index[lab]

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in iter_bits(mask))

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(rest):
                out.append((u, v))
        return tuple(out)

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def component_masks(self) -> tuple[int, ...]:
        return component_masks(self.adj)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.labels == other.labels
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.adj))

    def __repr__(self) -> str:
        body = ", ".join(f"{self.labels[u]}-{self.labels[v]}" for u, v in self.edges())
        return f"SimpleGraph(n={self.n}, edges=[{body}])"


class SpanningTree:
    """A spanning tree of the complete graph on vertices 0..n-1.

    Edges are kept as a sorted tuple of sorted index pairs; the constructor
    rejects anything that is not a tree on all n vertices.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError("a spanning tree needs at least one vertex")
        pairs = sorted(tuple(sorted(e)) for e in edges)
        if len(pairs) != n - 1:
            raise ValueError(f"expected {n - 1} edges for {n} vertices, got {len(pairs)}")
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in pairs:
            if not (0 <= u < v < n):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError(f"edge ({u}, {v}) closes a cycle")
            parent[ru] = rv
        self.n = n
        self.edges = tuple(pairs)

    def adjacency_masks(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def path_vertices(self, u: int, v: int) -> tuple[int, ...]:
        """Vertices along the unique u-v path, endpoints included."""
        adj = self.adjacency_masks()
        prev = {u: u}
        frontier = [u]
        while frontier and v not in prev:
            nxt = []
            for a in frontier:
                for b in iter_bits(adj[a]):
                    if b not in prev:
                        prev[b] = a
                        nxt.append(b)
            frontier = nxt
        path = [v]
        while path[-1] != u:
            path.append(prev[path[-1]])
        path.reverse()
        return tuple(path)

    def path_edges(self, u: int, v: int) -> tuple[tuple[int, int], ...]:
        verts = self.path_vertices(u, v)
        return tuple(tuple(sorted(p)) for p in zip(verts, verts[1:]))

    def __eq__(self, other) -> bool:
        return isinstance(other, SpanningTree) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SpanningTree(n={self.n}, edges={list(self.edges)})"


# ---------------------------------------------------------------------------
# shared bitmask-graph helpers


def two_section_adjacency(n: int, masks: Iterable[int]) -> tuple[int, ...]:
    """Adjacency masks of the graph joining every vertex pair sharing a mask."""
    adj = [0] * n
    for e in masks:
        for v in iter_bits(e):
            adj[v] |= e & ~(1 << v)
    return tuple(adj)


def component_masks(adj: Sequence[int]) -> tuple[int, ...]:
    """Connected components of an adjacency-mask graph, ordered by least vertex."""
    n = len(adj)
    seen = 0
    comps = []
    for v in range(n):
        bit = 1 << v
        if seen & bit:
            continue
        comp = bit
        frontier = bit
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= adj[low.bit_length() - 1]
                rest ^= low
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return tuple(comps)


# ---------------------------------------------------------------------------
# hypergraph constructions


def dual(h: Hypergraph) -> Hypergraph:
    """Swap the roles of vertices and edges.

    The dual has one vertex per edge of ``h`` (labelled e0, e1, ...) and, for
    every vertex of ``h`` that lies in at least one edge, the hyperedge of
    all original edges containing it. Vertices of ``h`` in no edge leave no
    trace, so the dual of an edgeless hypergraph has an empty universe.
    """
    labels = tuple(f"e{i}" for i in range(h.m))
    edges = []
    for v in range(h.n):
        m = 0
        for i, e in enumerate(h.edges):
            if e >> v & 1:
                m |= 1 << i
        if m:
            edges.append(m)
    return Hypergraph(labels, edges)


def two_section(h: Hypergraph) -> SimpleGraph:
    """The graph on V(H) joining two vertices iff some edge contains both."""
    adj = two_section_adjacency(h.n, h.edges)
    pairs = []
    for u in range(h.n):
        above = adj[u] >> (u + 1) << (u + 1)
        for v in iter_bits(above):
            pairs.append((u, v))
    return SimpleGraph(h.labels, pairs)


def line_graph(h: Hypergraph) -> SimpleGraph:
    """The graph on the edges of H joining two edges iff they intersect.

    Duplicate edges become distinct adjacent vertices.
    """
    labels = tuple(f"e{i}" for i in range(h.m))
    pairs = [
        (i, j)
        for i, j in combinations(range(h.m), 2)
        if h.edges[i] & h.edges[j]
    ]
    return SimpleGraph(labels, pairs)


def simplify(h: Hypergraph) -> Hypergraph:
    """Drop repeated edge sets, keeping first occurrences in order."""
    seen = set()
    keep = []
    for e in h.edges:
        if e not in seen:
            seen.add(e)
            keep.append(e)
    return Hypergraph(h.labels, keep)


def neighborhood_hypergraph(h: Hypergraph) -> Hypergraph:
    """Closed neighborhoods of the two-section, one edge per vertex in order."""
    adj = two_section_adjacency(h.n, h.edges)
    return Hypergraph(h.labels, tuple(adj[v] | (1 << v) for v in range(h.n)))


def is_helly(h: Hypergraph) -> bool:
    """Whether every pairwise-intersecting subfamily has a common vertex.

    Checked with the triple criterion: for each vertex triple, the edges
    containing at least two of the three must share a vertex (vacuously true
    when no edge does).
    """
    for a, b, c in combinations(range(h.n), 3):
        pa, pb, pc = 1 << a, 1 << b, 1 << c
        common = -1
        for e in h.edges:
            k = (1 if e & pa else 0) + (1 if e & pb else 0) + (1 if e & pc else 0)
            if k >= 2:
                common &= e
        if common == 0:
            return False
    return True


def is_conformal(h: Hypergraph) -> bool:
    """Whether every maximal clique of the two-section lies inside some edge.

    Uses duality with the Helly property: H is conformal iff its dual is
    Helly. Works on the simplified family too, but is computed directly on
    the dual so duplicate edges are harmless.
    """
    return is_helly(dual(h))


def is_separating(h: Hypergraph) -> bool:
    """Whether for every ordered vertex pair some edge holds u but not v."""
    if h.n <= 1:
        return True
    inc = [0] * h.n
    for i, e in enumerate(h.edges):
        for v in iter_bits(e):
            inc[v] |= 1 << i
    for u in range(h.n):
        for v in range(h.n):
            if u != v and not (inc[u] & ~inc[v]):
                return False
    return True


def intersection_core(h: Hypergraph, members: int) -> int:
    """Intersection of all edges containing ``members``; V(H) if none does.

    ``members`` must be a nonempty vertex mask.
    """
    if members == 0:
        raise ValueError("intersection core of the empty set is undefined")
    if members >> h.n:
        raise ValueError("vertex set leaves the universe")
    core = -1
    for e in h.edges:
        if e & members == members:
            core &= e
    return core if core >= 0 else h.full_mask


def split_by_set(h: Hypergraph, members: int) -> tuple[Hypergraph, Hypergraph]:
    """Partition the edges by containment of ``members``.

    Returns (edges containing the set, edges not containing it), both on the
    full original universe and in original edge order.
    """
    if members == 0:
        raise ValueError("splitting by the empty set is undefined")
    if members >> h.n:
        raise ValueError("vertex set leaves the universe")
    inside = [e for e in h.edges if e & members == members]
    outside = [e for e in h.edges if e & members != members]
    return Hypergraph(h.labels, inside), Hypergraph(h.labels, outside)


def is_host_tree(h: Hypergraph, tree: SpanningTree) -> bool:
    """Whether every hyperedge induces a subtree of ``tree``."""
    if tree.n != h.n:
        raise ValueError("tree and hypergraph have different vertex counts")
    return kernels.tree_hosts_all(tree.edges, h.edges)


# ---------------------------------------------------------------------------
# host-tree-preserving edits


@dataclass(frozen=True)
class EquivalenceOp:
    """One host-tree-preserving edit of a hypergraph's edge family.

    kind 1: add a singleton ({members}); or remove edge_index if a singleton
    kind 2: add the whole universe; or remove edge_index if it is V(H)
    kind 3: duplicate the edge sources[0]
    kind 4: remove edge_index when an identical edge remains elsewhere
    kind 5: add the intersection of the edges in sources (must be nonempty)
    kind 6: add the union of two intersecting edges sources = (i, j)
    kind 7: add the union of the edges in sources (their overlap graph
            must be connected)
    kind 8: remove edge_index when it equals the intersection of sources
    kind 9: remove edge_index when it equals the union of sources and the
            overlap graph of sources is connected

    For additions set ``members`` (kinds 1-2) or ``sources`` (3, 5-7); for
    removals set ``edge_index`` plus ``sources`` where a witness is needed.
    """

    kind: int
    members: int | None = None
    edge_index: int | None = None
    sources: tuple[int, ...] = ()


def _overlap_connected(masks: Sequence[int]) -> bool:
    adj = [0] * len(masks)
    for i, j in combinations(range(len(masks)), 2):
        if masks[i] & masks[j]:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return len(component_masks(adj)) <= 1


def apply_equivalence_op(h: Hypergraph, op: EquivalenceOp) -> Hypergraph:
    """Apply one edit, validating its precondition; returns a new hypergraph.

    Additions append at the end; removals delete exactly the indexed edge.
    Raises ValueError naming the violated precondition.
    """

    def checked_index(i: int | None) -> int:
        if i is None or not (0 <= i < h.m):
            raise ValueError(f"edge index {i} out of range")
        return i

    def checked_sources() -> tuple[int, ...]:
        if not op.sources:
            raise ValueError("operation needs source edge indices")
        for i in op.sources:
            if not (0 <= i < h.m):
                raise ValueError(f"source index {i} out of range")
        return op.sources

    edges = list(h.edges)
    k = op.kind
    if k == 1:
        if op.members is not None:
            if op.members.bit_count() != 1 or op.members >> h.n:
                raise ValueError("kind 1 adds exactly one singleton of the universe")
            edges.append(op.members)
        else:
            i = checked_index(op.edge_index)
            if edges[i].bit_count() != 1:
                raise ValueError("kind 1 removes only singleton edges")
            del edges[i]
    elif k == 2:
        if op.members is not None:
            if op.members != h.full_mask or h.n == 0:
                raise ValueError("kind 2 adds exactly the whole vertex set")
            edges.append(op.members)
        else:
            i = checked_index(op.edge_index)
            if edges[i] != h.full_mask:
                raise ValueError("kind 2 removes only the whole vertex set")
            del edges[i]
    elif k == 3:
        src = checked_sources()
        if len(src) != 1:
            raise ValueError("kind 3 duplicates exactly one edge")
        edges.append(edges[src[0]])
    elif k == 4:
        i = checked_index(op.edge_index)
        if not any(j != i and edges[j] == edges[i] for j in range(len(edges))):
            raise ValueError("kind 4 removes an edge only when a copy remains")
        del edges[i]
    elif k == 5:
        src = checked_sources()
        inter = -1
        for i in src:
            inter &= edges[i]
        if inter == 0:
            raise ValueError("kind 5 needs sources with a common vertex")
        edges.append(inter)
    elif k == 6:
        src = checked_sources()
        if len(src) != 2 or src[0] == src[1]:
            raise ValueError("kind 6 unites exactly two distinct edges")
        if not (edges[src[0]] & edges[src[1]]):
            raise ValueError("kind 6 needs two intersecting edges")
        edges.append(edges[src[0]] | edges[src[1]])
    elif k == 7:
        src = checked_sources()
        if not _overlap_connected([edges[i] for i in src]):
            raise ValueError("kind 7 needs a connected union")
        u = 0
        for i in src:
            u |= edges[i]
        edges.append(u)
    elif k == 8:
        i = checked_index(op.edge_index)
        src = checked_sources()
        if i in src:
            raise ValueError("kind 8 witnesses must exclude the removed edge")
        inter = -1
        for j in src:
            inter &= edges[j]
        if inter != edges[i]:
            raise ValueError("kind 8 removes only the exact intersection of its witnesses")
        del edges[i]
    elif k == 9:
        i = checked_index(op.edge_index)
        src = checked_sources()
        if i in src:
            raise ValueError("kind 9 witnesses must exclude the removed edge")
        if not _overlap_connected([edges[j] for j in src]):
            raise ValueError("kind 9 needs a connected union of witnesses")
        u = 0
        for j in src:
            u |= edges[j]
        if u != edges[i]:
            raise ValueError("kind 9 removes only the exact union of its witnesses")
        del edges[i]
    else:
        raise ValueError(f"unknown operation kind {op.kind}")
    return Hypergraph(h.labels, edges)
