"""Seeded random instances for the CLI and the test suite.

Every generator takes a ``random.Random`` and draws from it in a fixed
order, so a seed pins the instance exactly. Vertex labels are "1".."n".
"""

from __future__ import annotations

import random
from itertools import combinations

from .bitset import iter_bits
from .core import Hypergraph, SimpleGraph, SpanningTree
from .kernels import decode_prufer


def _labels(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


def random_tree(n: int, rng: random.Random) -> SpanningTree:
    if n < 1:
        raise ValueError("need at least one vertex")
    if n == 1:
        return SpanningTree(1, ())
    if n == 2:
        return SpanningTree(2, ((0, 1),))
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return SpanningTree(n, decode_prufer(n, seq))


def _random_subtree_mask(adj: tuple[int, ...], n: int, rng: random.Random) -> int:
    size = rng.randint(1, n)
    start = rng.randrange(n)
    mask = 1 << start
    frontier = adj[start]
    while mask.bit_count() < size:
        candidates = list(iter_bits(frontier & ~mask))
        if not candidates:
            break
        v = rng.choice(candidates)
        mask |= 1 << v
        frontier |= adj[v]
    return mask


def random_hypertree(n: int, m: int, rng: random.Random) -> Hypergraph:
    """A hypergraph built from random subtrees of one random tree.

    Hosted by construction, so always a hypertree.
    """
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    tree = random_tree(n, rng)
    adj = tree.adjacency_masks()
    edges = [_random_subtree_mask(adj, n, rng) for _ in range(m)]
    return Hypergraph(_labels(n), edges)


def random_hypergraph(n: int, m: int, rng: random.Random) -> Hypergraph:
    """Uniformly random nonempty edges, no structure guaranteed."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    edges = [rng.randrange(1, 1 << n) for _ in range(m)]
    return Hypergraph(_labels(n), edges)


def random_graph(n: int, m: int, rng: random.Random) -> SimpleGraph:
    """A graph with min(m, C(n,2)) distinct edges drawn without replacement."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    pairs = list(combinations(range(n), 2))
    picked = rng.sample(pairs, min(m, len(pairs)))
    return SimpleGraph(_labels(n), sorted(picked))


def random_connected_chordal(n: int, rng: random.Random) -> SimpleGraph:
    """A connected chordal graph grown by simplicial vertex additions.

    Each new vertex attaches to a random nonempty subset of a clique of the
    current graph, so every prefix order reversed is an elimination order.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    clique_of = [1 << 0]
    pairs = []
    for i in range(1, n):
        j = rng.randrange(i)
        base = clique_of[j]
        sub = 1 << j
        for v in iter_bits(base & ~(1 << j)):
            if rng.random() < 0.5:
                sub |= 1 << v
        for v in iter_bits(sub):
            pairs.append((v, i))
        clique_of.append(sub | (1 << i))
    return SimpleGraph(_labels(n), pairs)
