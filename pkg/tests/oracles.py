"""Brute-force reference implementations used to check the library.

Everything in here is written to be obviously correct rather than fast:
subset scans, BFS on explicit adjacency, and filters over all labelled
spanning trees. Nothing imports the algorithms under test beyond the plain
data types, so these can disagree with the library and the tests will see it.
"""

from itertools import chain, combinations

from hypertree_lab import Hypergraph, SimpleGraph
from hypertree_lab.bitset import iter_bits
from hypertree_lab.kernels import iter_spanning_trees


def induces_subtree(tree_edges, mask) -> bool:
    """BFS connectivity of the tree restricted to the mask's vertices."""
    verts = list(iter_bits(mask))
    if len(verts) <= 1:
        return True
    inside = [(u, v) for u, v in tree_edges if mask >> u & 1 and mask >> v & 1]
    adj = {v: set() for v in verts}
    for u, v in inside:
        adj[u].add(v)
        adj[v].add(u)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def host_trees(h: Hypergraph) -> set:
    """All host trees as sorted edge tuples, by filtering every tree of K_n."""
    return {
        t
        for t in iter_spanning_trees(h.n)
        if all(induces_subtree(t, e) for e in h.edges)
    }


def is_hypertree(h: Hypergraph) -> bool:
    if h.n == 0:
        return True
    return any(
        all(induces_subtree(t, e) for e in h.edges) for t in iter_spanning_trees(h.n)
    )


def is_helly(h: Hypergraph) -> bool:
    """Direct definition: every pairwise-intersecting subfamily meets."""
    for r in range(1, h.m + 1):
        for sub in combinations(h.edges, r):
            if all(a & b for a, b in combinations(sub, 2)):
                common = -1
                for e in sub:
                    common &= e
                if common == 0:
                    return False
    return True


def is_chordal(g: SimpleGraph) -> bool:
    """No vertex subset induces a cycle of length >= 4."""
    for size in range(4, g.n + 1):
        for sub in combinations(range(g.n), size):
            mask = 0
            for v in sub:
                mask |= 1 << v
            degs = [(g.adj[v] & mask).bit_count() for v in sub]
            if any(d != 2 for d in degs):
                continue
            seen = {sub[0]}
            stack = [sub[0]]
            while stack:
                for w in iter_bits(g.adj[stack.pop()] & mask):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == size:
                # 2-regular and connected: an induced long cycle
                return False
    return True


def completion(h: Hypergraph) -> set:
    """All nonempty vertex sets inducing a subtree in every host tree."""
    trees = host_trees(h)
    assert trees, "completion oracle needs a hypertree"
    return {
        mask
        for mask in range(1, 1 << h.n)
        if all(induces_subtree(t, mask) for t in trees)
    }


def feasible_pairs(h: Hypergraph) -> set:
    """Union of the edge sets over all host trees."""
    return set(chain.from_iterable(host_trees(h)))


def equivalent(h1: Hypergraph, h2: Hypergraph) -> bool:
    assert h1.labels == h2.labels, "oracle equivalence wants aligned labels"
    return host_trees(h1) == host_trees(h2)


def maximal_cliques(g: SimpleGraph) -> set:
    """All maximal cliques by filtering every vertex subset."""
    cliques = set()
    for mask in range(1, 1 << g.n):
        verts = list(iter_bits(mask))
        if all(g.has_edge(u, v) for u, v in combinations(verts, 2)):
            cliques.add(mask)
    return {
        m for m in cliques if not any(o != m and o & m == m for o in cliques)
    }
