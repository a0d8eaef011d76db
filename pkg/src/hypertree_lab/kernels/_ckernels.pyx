# cython: language_level=3, boundscheck=False, wraparound=False
"""Hot-loop kernels, compiled edition.

Mirrors ``_pykernels`` call for call. Masks must fit in 64 bits here; the
dispatch layer in ``kernels/__init__`` falls back to the pure twin when a
conversion raises OverflowError.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long x)


def tree_hosts_all(tree_edges, edge_masks):
    """True when every mask induces a subtree of the given tree."""
    cdef Py_ssize_t k = len(tree_edges)
    cdef Py_ssize_t m = len(edge_masks)
    if m == 0:
        return True
    cdef unsigned long long *pm = <unsigned long long *> malloc(k * sizeof(unsigned long long)) if k else NULL
    cdef unsigned long long *masks = <unsigned long long *> malloc(m * sizeof(unsigned long long))
    cdef int *want = <int *> malloc(m * sizeof(int))
    if (k and pm == NULL) or masks == NULL or want == NULL:
        free(pm)
        free(masks)
        free(want)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef int a, b, hits
    cdef bint ok = True
    try:
        for i in range(k):
            a = tree_edges[i][0]
            b = tree_edges[i][1]
            if a >= 64 or b >= 64:
                raise OverflowError("vertex index beyond compiled kernel range")
            pm[i] = (1ULL << a) | (1ULL << b)
        for j in range(m):
            masks[j] = edge_masks[j]
            want[j] = __builtin_popcountll(masks[j]) - 1
        for j in range(m):
            hits = 0
            for i in range(k):
                if (masks[j] & pm[i]) == pm[i]:
                    hits += 1
            if hits != want[j]:
                ok = False
                break
        return ok
    finally:
        free(pm)
        free(masks)
        free(want)


def count_hosting_trees(int n, edge_masks):
    """Count labelled spanning trees of K_n hosting all of ``edge_masks``."""
    if n <= 2:
        return 1
    if n > 64:
        raise OverflowError("vertex count beyond compiled kernel range")
    cdef Py_ssize_t m = len(edge_masks)
    cdef int L = n - 2
    cdef unsigned long long *masks = <unsigned long long *> malloc(m * sizeof(unsigned long long)) if m else NULL
    cdef int *want = <int *> malloc(m * sizeof(int)) if m else NULL
    cdef int *seq = <int *> malloc(L * sizeof(int))
    cdef int *deg = <int *> malloc(n * sizeof(int))
    cdef unsigned long long *pairs = <unsigned long long *> malloc((n - 1) * sizeof(unsigned long long))
    if (m and (masks == NULL or want == NULL)) or seq == NULL or deg == NULL or pairs == NULL:
        free(masks)
        free(want)
        free(seq)
        free(deg)
        free(pairs)
        raise MemoryError()
    cdef unsigned long long total = 0
    cdef Py_ssize_t j
    cdef int i, x, leaf, u, v, hits, pos
    cdef bint ok
    try:
        for j in range(m):
            masks[j] = edge_masks[j]
            want[j] = __builtin_popcountll(masks[j]) - 1
        for i in range(L):
            seq[i] = 0
        while True:
            for i in range(n):
                deg[i] = 1
            for i in range(L):
                deg[seq[i]] += 1
            for i in range(L):
                x = seq[i]
                leaf = 0
                while deg[leaf] != 1:
                    leaf += 1
                pairs[i] = (1ULL << leaf) | (1ULL << x)
                deg[leaf] = 0
                deg[x] -= 1
            u = 0
            while deg[u] != 1:
                u += 1
            v = u + 1
            while deg[v] != 1:
                v += 1
            pairs[L] = (1ULL << u) | (1ULL << v)
            ok = True
            for j in range(m):
                hits = 0
                for i in range(n - 1):
                    if (masks[j] & pairs[i]) == pairs[i]:
                        hits += 1
                if hits != want[j]:
                    ok = False
                    break
            if ok:
                total += 1
            pos = L - 1
            while pos >= 0 and seq[pos] == n - 1:
                seq[pos] = 0
                pos -= 1
            if pos < 0:
                break
            seq[pos] += 1
        return total
    finally:
        free(masks)
        free(want)
        free(seq)
        free(deg)
        free(pairs)


def find_first_hosting_tree(int n, edge_masks):
    """First hosting tree in Prufer order as a sorted edge tuple, else None."""
    if n <= 2:
        tree = () if n <= 1 else ((0, 1),)
        return tree if tree_hosts_all(tree, edge_masks) else None
    if n > 64:
        raise OverflowError("vertex count beyond compiled kernel range")
    cdef Py_ssize_t m = len(edge_masks)
    cdef int L = n - 2
    cdef unsigned long long *masks = <unsigned long long *> malloc(m * sizeof(unsigned long long)) if m else NULL
    cdef int *want = <int *> malloc(m * sizeof(int)) if m else NULL
    cdef int *seq = <int *> malloc(L * sizeof(int))
    cdef int *deg = <int *> malloc(n * sizeof(int))
    cdef int *eu = <int *> malloc((n - 1) * sizeof(int))
    cdef int *ev = <int *> malloc((n - 1) * sizeof(int))
    if (m and (masks == NULL or want == NULL)) or seq == NULL or deg == NULL or eu == NULL or ev == NULL:
        free(masks)
        free(want)
        free(seq)
        free(deg)
        free(eu)
        free(ev)
        raise MemoryError()
    cdef Py_ssize_t j
    cdef int i, x, leaf, u, v, hits, pos
    cdef bint ok
    cdef unsigned long long pm
    try:
        for j in range(m):
            masks[j] = edge_masks[j]
            want[j] = __builtin_popcountll(masks[j]) - 1
        for i in range(L):
            seq[i] = 0
        while True:
            for i in range(n):
                deg[i] = 1
            for i in range(L):
                deg[seq[i]] += 1
            for i in range(L):
                x = seq[i]
                leaf = 0
                while deg[leaf] != 1:
                    leaf += 1
                if leaf < x:
                    eu[i] = leaf
                    ev[i] = x
                else:
                    eu[i] = x
                    ev[i] = leaf
                deg[leaf] = 0
                deg[x] -= 1
            u = 0
            while deg[u] != 1:
                u += 1
            v = u + 1
            while deg[v] != 1:
                v += 1
            eu[L] = u
            ev[L] = v
            ok = True
            for j in range(m):
                hits = 0
                for i in range(n - 1):
                    pm = (1ULL << eu[i]) | (1ULL << ev[i])
                    if (masks[j] & pm) == pm:
                        hits += 1
                if hits != want[j]:
                    ok = False
                    break
            if ok:
                out = [(eu[i], ev[i]) for i in range(n - 1)]
                out.sort()
                return tuple(out)
            pos = L - 1
            while pos >= 0 and seq[pos] == n - 1:
                seq[pos] = 0
                pos -= 1
            if pos < 0:
                break
            seq[pos] += 1
        return None
    finally:
        free(masks)
        free(want)
        free(seq)
        free(deg)
        free(eu)
        free(ev)
