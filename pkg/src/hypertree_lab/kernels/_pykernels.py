"""Hot-loop kernels, pure Python edition.

Everything here works on dense vertex indices 0..n-1 with vertex sets encoded
as int bitmasks. The compiled twin in ``_ckernels.pyx`` must match this
module call for call; ``tests/test_kernels.py`` cross-checks the two.

Brute-force routines walk all n**(n-2) labelled spanning trees of K_n through
their Prufer sequences, so they are only meant for small n.
"""

from itertools import product


def decode_prufer(n, seq):
    """Decode a Prufer sequence into the canonical sorted edge tuple.

    ``seq`` must have length n - 2 with entries in range(n). The decode picks
    the smallest remaining leaf at every step, which is the usual bijection
    with labelled trees on n vertices.
    """
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    for x in seq:
        leaf = 0
        while deg[leaf] != 1:
            leaf += 1
        edges.append((leaf, x) if leaf < x else (x, leaf))
        deg[leaf] = 0
        deg[x] -= 1
    u = 0
    while deg[u] != 1:
        u += 1
    v = u + 1
    while deg[v] != 1:
        v += 1
    edges.append((u, v))
    edges.sort()
    return tuple(edges)


def tree_hosts_all(tree_edges, edge_masks):
    """True when every mask induces a subtree of the given tree.

    A vertex set S induces a subtree exactly when the number of tree edges
    with both ends in S equals |S| - 1; acyclicity makes the edge count a
    full connectivity test.
    """
    for mask in edge_masks:
        want = mask.bit_count() - 1
        hits = 0
        for u, v in tree_edges:
            pm = (1 << u) | (1 << v)
            if mask & pm == pm:
                hits += 1
        if hits != want:
            return False
    return True


def count_hosting_trees(n, edge_masks):
    """Count labelled spanning trees of K_n hosting all of ``edge_masks``."""
    if n <= 2:
        # one labelled tree; any subset of its vertices induces a subtree
        return 1
    checks = tuple((mask, mask.bit_count() - 1) for mask in edge_masks)
    count = 0
    for seq in product(range(n), repeat=n - 2):
        deg = [1] * n
        for x in seq:
            deg[x] += 1
        pairmasks = []
        for x in seq:
            leaf = 0
            while deg[leaf] != 1:
                leaf += 1
            pairmasks.append((1 << leaf) | (1 << x))
            deg[leaf] = 0
            deg[x] -= 1
        u = 0
        while deg[u] != 1:
            u += 1
        v = u + 1
        while deg[v] != 1:
            v += 1
        pairmasks.append((1 << u) | (1 << v))
        for mask, want in checks:
            hits = 0
            for pm in pairmasks:
                if mask & pm == pm:
                    hits += 1
            if hits != want:
                break
        else:
            count += 1
    return count


def find_first_hosting_tree(n, edge_masks):
    """First hosting tree in Prufer order as a sorted edge tuple, else None."""
    if n <= 2:
        tree = () if n <= 1 else ((0, 1),)
        return tree if tree_hosts_all(tree, edge_masks) else None
    for seq in product(range(n), repeat=n - 2):
        tree = decode_prufer(n, seq)
        if tree_hosts_all(tree, edge_masks):
            return tree
    return None


def iter_spanning_trees(n):
    """Yield every labelled spanning tree of K_n as a sorted edge tuple."""
    if n <= 0:
        raise ValueError("need at least one vertex")
    if n == 1:
        yield ()
        return
    if n == 2:
        yield ((0, 1),)
        return
    for seq in product(range(n), repeat=n - 2):
        yield decode_prufer(n, seq)
