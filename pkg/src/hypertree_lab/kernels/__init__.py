"""Backend selection for the brute-force tree kernels.

The compiled extension is used when it imported cleanly and the instance fits
in 64-bit masks; otherwise calls land in the pure Python twin. Setting the
environment variable ``HYPERTREE_LAB_PURE`` (to any nonempty value) before
import forces the pure twin, which is what the benchmark and the kernel
cross-checks use.
"""

import os

from . import _pykernels

_compiled = None
if not os.environ.get("HYPERTREE_LAB_PURE"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure-python"


def tree_hosts_all(tree_edges, edge_masks):
    if _compiled is not None:
        try:
            return _compiled.tree_hosts_all(tree_edges, edge_masks)
        except OverflowError:
            pass
    return _pykernels.tree_hosts_all(tree_edges, edge_masks)


def count_hosting_trees(n, edge_masks):
    if _compiled is not None:
        try:
            return _compiled.count_hosting_trees(n, edge_masks)
        except OverflowError:
            pass
    return _pykernels.count_hosting_trees(n, edge_masks)


def find_first_hosting_tree(n, edge_masks):
    if _compiled is not None:
        try:
            return _compiled.find_first_hosting_tree(n, edge_masks)
        except OverflowError:
            pass
    return _pykernels.find_first_hosting_tree(n, edge_masks)


# enumeration stays pure: it is a generator consumed by tests and oracles,
# not part of the counting hot path
decode_prufer = _pykernels.decode_prufer
iter_spanning_trees = _pykernels.iter_spanning_trees
