"""Host-tree structure of a hypertree: basic sets, counting, enumeration.

The central objects are the basic sets: for a host tree T, every tree edge
uv is tagged with the intersection of all hyperedges containing {u, v}
(the whole universe when no edge does). The set of tags is the same for
every host tree, and the tagged edges can be rebuilt independently per tag.
That decomposition drives everything in this module:

  - the basis and its per-set component records
  - membership and enumeration for the completion (the sets that induce a
    subtree in every host tree)
  - exact host-tree counts via a matrix-tree determinant per basic set
  - full enumeration as a cartesian product of per-set choices
  - equivalence (same host trees) as equality of basis families
  - step-by-step swap walks between two host trees
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations, product
from typing import Iterator, Sequence

from . import kernels
from .bitset import iter_bits, pair_mask
from .core import (
    Hypergraph,
    SpanningTree,
    component_masks,
    intersection_core,
    neighborhood_hypergraph,
    two_section_adjacency,
)
from .errors import CapExceededError, NotHypertreeError
from .recognition import host_tree, is_hypertree, pair_weight


@dataclass(frozen=True)
class BasicSetRecord:
    """One basic set B with its component structure.

    ``components`` lists the connected components of the graph spanned by
    the hyperedges NOT containing B (every vertex appears, isolated ones as
    singletons), ordered by least vertex. ``meeting`` indexes the components
    that intersect B; ``alpha`` is their number. ``delta`` holds the vertex
    pairs inside B whose endpoints sit in different components; these are
    exactly the tree edges a host tree may use for B.
    """

    members: int
    components: tuple[int, ...]
    meeting: tuple[int, ...]
    alpha: int
    delta: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Basis:
    """The basic sets of a hypertree in canonical order (size, then members)."""

    records: tuple[BasicSetRecord, ...]

    def member_masks(self) -> tuple[int, ...]:
        return tuple(r.members for r in self.records)

    def record_for(self, members: int) -> BasicSetRecord:
        for r in self.records:
            if r.members == members:
                return r
        raise KeyError(f"no basic set with mask {members:#x}")

    def __iter__(self) -> Iterator[BasicSetRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)


def _canonical_mask_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), tuple(iter_bits(mask)))


def _record_for(h: Hypergraph, members: int) -> BasicSetRecord:
    outside = [e for e in h.edges if e & members != members]
    comps = component_masks(two_section_adjacency(h.n, outside))
    meeting = tuple(i for i, c in enumerate(comps) if c & members)
    comp_at = [0] * h.n
    for i, c in enumerate(comps):
        for v in iter_bits(c):
            comp_at[v] = i
    verts = list(iter_bits(members))
    delta = tuple(
        (u, v) for u, v in combinations(verts, 2) if comp_at[u] != comp_at[v]
    )
    return BasicSetRecord(members, comps, meeting, len(meeting), delta)


def basic_sets(h: Hypergraph) -> Basis:
    """The basic sets of ``h`` with their component records.

    Computed from one host tree: the tags of its edges. Raises
    NotHypertreeError when ``h`` has no host tree.
    """
    tree = host_tree(h)
    masks = sorted(
        {intersection_core(h, pair_mask(u, v)) for u, v in tree.edges},
        key=_canonical_mask_key,
    )
    return Basis(tuple(_record_for(h, b) for b in masks))


# ---------------------------------------------------------------------------
# completion


def completion_contains(h: Hypergraph, members: int) -> bool:
    """Whether ``members`` induces a subtree in every host tree of ``h``.

    Singletons and the whole universe always do. Otherwise the set must
    induce a subtree of one host tree and every tree edge it uses must carry
    an intersection core inside the set; that pins the behaviour on all
    other host trees as well.
    """
    if members == 0:
        raise ValueError("the empty set is not a completion candidate")
    if members >> h.n:
        raise ValueError("vertex set leaves the universe")
    tree = host_tree(h)
    if members.bit_count() == 1 or members == h.full_mask:
        return True
    used = [
        (u, v)
        for u, v in tree.edges
        if members & pair_mask(u, v) == pair_mask(u, v)
    ]
    if len(used) != members.bit_count() - 1:
        return False
    return all(
        intersection_core(h, pair_mask(u, v)) & ~members == 0 for u, v in used
    )


def enumerate_completion(h: Hypergraph, cap: int = 10_000) -> list[int]:
    """All completion members in canonical order (size, then members).

    The members of size at least two are exactly the overlapping-union
    closure of the basis; singletons and the universe are always present.
    Raises CapExceededError when more than ``cap`` members would be listed.
    """
    basis = basic_sets(h)
    sets = set(basis.member_masks())
    changed = True
    while changed:
        changed = False
        for a, b in combinations(sorted(sets), 2):
            if a & b and (a | b) not in sets:
                sets.add(a | b)
                changed = True
                if len(sets) > cap:
                    raise CapExceededError(
                        f"completion has more than {cap} members", cap=cap
                    )
    sets.update(1 << v for v in range(h.n))
    sets.add(h.full_mask)
    if len(sets) > cap:
        raise CapExceededError(
            f"completion has {len(sets)} members, more than the cap {cap}",
            count=len(sets),
            cap=cap,
        )
    return sorted(sets, key=_canonical_mask_key)


# ---------------------------------------------------------------------------
# feasible edges


def feasible_edges(h: Hypergraph) -> tuple[tuple[tuple[int, int], int], ...]:
    """Every pair usable by some host tree, with its basic set, pair-sorted.

    A pair is feasible iff it appears in the delta of exactly one basic set.
    """
    basis = basic_sets(h)
    out = []
    for rec in basis:
        for pair in rec.delta:
            out.append((pair, rec.members))
    out.sort()
    return tuple(out)


def is_feasible_edge(h: Hypergraph, u: int, v: int) -> bool:
    """Whether some host tree of ``h`` uses the edge uv.

    Decided directly: uv is feasible iff the hyperedges not containing
    {u, v} leave u and v in different components. Raises NotHypertreeError
    when ``h`` is not a hypertree.
    """
    if not (0 <= u < h.n and 0 <= v < h.n) or u == v:
        raise ValueError("need two distinct vertices of the universe")
    if not is_hypertree(h).is_hypertree:
        raise NotHypertreeError("feasibility is defined for hypertrees only")
    members = pair_mask(u, v)
    outside = [e for e in h.edges if e & members != members]
    comps = component_masks(two_section_adjacency(h.n, outside))
    side = next(c for c in comps if c >> u & 1)
    return not (side >> v & 1)


# ---------------------------------------------------------------------------
# counting and enumeration


def _bareiss_det(mat: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [row[:] for row in mat]
    k = len(m)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for col in range(k - 1):
        if m[col][col] == 0:
            for i in range(col + 1, k):
                if m[i][col]:
                    m[col], m[i] = m[i], m[col]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(col + 1, k):
            for j in range(col + 1, k):
                m[i][j] = (m[i][j] * m[col][col] - m[i][col] * m[col][j]) // prev
            m[i][col] = 0
        prev = m[col][col]
    return sign * m[k - 1][k - 1]


def _meeting_sizes(rec: BasicSetRecord) -> list[int]:
    return [(rec.components[ci] & rec.members).bit_count() for ci in rec.meeting]


def _admissible_count(rec: BasicSetRecord) -> int:
    """Number of ways a host tree can realize one basic set.

    The choices are the spanning trees of the multigraph on the meeting
    components with |A_i meet B| * |A_j meet B| parallel edges between two
    components; counted by the matrix-tree theorem.
    """
    sizes = _meeting_sizes(rec)
    k = len(sizes)
    if k <= 1:
        return 1
    total = sum(sizes)
    mat = [
        [
            sizes[i] * (total - sizes[i]) if i == j else -sizes[i] * sizes[j]
            for j in range(k - 1)
        ]
        for i in range(k - 1)
    ]
    return _bareiss_det(mat)


def _admissible_sets(rec: BasicSetRecord) -> list[tuple[tuple[int, int], ...]]:
    """All edge sets a host tree may use for this basic set.

    Spanning trees of the meeting-component multigraph, enumerated by
    contraction/deletion over the delta pairs in lexicographic order.
    """
    pos = {ci: k for k, ci in enumerate(rec.meeting)}
    vert_pos = {}
    for ci in rec.meeting:
        for v in iter_bits(rec.components[ci] & rec.members):
            vert_pos[v] = pos[ci]
    k = len(rec.meeting)
    if k <= 1:
        return [()]
    edges = [(vert_pos[u], vert_pos[v], (u, v)) for u, v in rec.delta]
    results: list[tuple[tuple[int, int], ...]] = []

    def connects(nodes: frozenset[int], es) -> bool:
        par = {x: x for x in nodes}

        def find(a: int) -> int:
            while par[a] != a:
                par[a] = par[par[a]]
                a = par[a]
            return a

        left = len(nodes) - 1
        for a, b, _ in es:
            ra, rb = find(a), find(b)
            if ra != rb:
                par[ra] = rb
                left -= 1
        return left == 0

    def walk(nodes: frozenset[int], es, chosen: list[tuple[int, int]]) -> None:
        if len(nodes) == 1:
            results.append(tuple(sorted(chosen)))
            return
        if not es:
            return
        (a, b, pay), rest = es[0], es[1:]
        merged = []
        for x, y, p in rest:
            x2 = a if x == b else x
            y2 = a if y == b else y
            if x2 != y2:
                merged.append((x2, y2, p))
        chosen.append(pay)
        walk(nodes - {b}, merged, chosen)
        chosen.pop()
        if connects(nodes, rest):
            walk(nodes, rest, chosen)

    walk(frozenset(range(k)), edges, [])
    return results


def count_host_trees(h: Hypergraph) -> int:
    """Exact number of host trees; product of per-basic-set tree counts."""
    total = 1
    for rec in basic_sets(h):
        total *= _admissible_count(rec)
    return total


def enumerate_host_trees(h: Hypergraph, cap: int = 1_000_000) -> list[SpanningTree]:
    """All host trees, as cartesian combinations of per-basic-set choices.

    The count is computed first; CapExceededError carries it when it is
    beyond ``cap``. Every emitted tree is re-checked against the hosting
    predicate as a guard on the decomposition.
    """
    basis = basic_sets(h)
    total = 1
    for rec in basis:
        total *= _admissible_count(rec)
    if total > cap:
        raise CapExceededError(
            f"{total} host trees exceed the cap {cap}", count=total, cap=cap
        )
    per_set = [_admissible_sets(rec) for rec in basis]
    for rec, sets in zip(basis, per_set):
        assert len(sets) == _admissible_count(rec)
    trees = []
    for combo in product(*per_set):
        edges = sorted(chain.from_iterable(combo))
        tree = SpanningTree(h.n, edges)
        assert kernels.tree_hosts_all(tree.edges, h.edges)
        trees.append(tree)
    return trees


# ---------------------------------------------------------------------------
# equivalence and basic hypertrees


def _remap_mask(mask: int, new_index: Sequence[int]) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << new_index[i]
    return out


def equivalent(h1: Hypergraph, h2: Hypergraph, allow_non_hypertrees: bool = False) -> bool:
    """Whether the two hypergraphs have exactly the same host trees.

    Requires equal vertex universes (labels may be ordered differently).
    For hypertrees this is equality of basis families. By default a
    non-hypertree input raises NotHypertreeError; with the flag set, the
    comparison degenerates to both-or-neither being hypertrees, since a
    non-hypertree hosts nothing.
    """
    if set(h1.labels) != set(h2.labels):
        raise ValueError("hypergraphs live on different vertex universes")
    if h2.labels != h1.labels:
        new_index = [h1.index_of(lab) for lab in h2.labels]
        h2 = Hypergraph(h1.labels, [_remap_mask(e, new_index) for e in h2.edges])
    if h1.n == 0:
        return True
    ok1 = is_hypertree(h1).is_hypertree
    ok2 = is_hypertree(h2).is_hypertree
    if not (ok1 and ok2):
        if allow_non_hypertrees:
            return not ok1 and not ok2
        which = "first" if not ok1 else "second"
        raise NotHypertreeError(f"the {which} hypergraph is not a hypertree")
    return set(basic_sets(h1).member_masks()) == set(basic_sets(h2).member_masks())


def _basic_by_witness(h: Hypergraph) -> bool:
    """Witness form of basicness, used as an internal cross-check.

    For every basic set B and every vertex x outside B there must be a
    vertex y with some edge containing B plus y and no edge containing both
    x and y.
    """
    masks = basic_sets(h).member_masks()
    full = h.full_mask
    for b in masks:
        for x in iter_bits(full & ~b):
            good = False
            for y in range(h.n):
                need = b | (1 << y)
                if not any(e & need == need for e in h.edges):
                    continue
                xy = pair_mask(x, y) if x != y else (1 << x)
                if not any(e & xy == xy for e in h.edges):
                    good = True
                    break
            if not good:
                return False
    return True


def is_basic_hypertree(h: Hypergraph) -> bool:
    """Whether ``h`` has the same host trees as its neighborhood hypergraph.

    Raises NotHypertreeError on non-hypertree input. The answer is
    cross-checked against the witness characterization.
    """
    if not is_hypertree(h).is_hypertree:
        raise NotHypertreeError("basicness is defined for hypertrees only")
    if h.n == 0:
        return True
    answer = equivalent(h, neighborhood_hypergraph(h))
    assert answer == _basic_by_witness(h), "basicness routes disagree"
    return answer


# ---------------------------------------------------------------------------
# swap walks


@dataclass(frozen=True)
class SwapStep:
    """One edge exchange; the tree after it is still a host tree."""

    removed: tuple[int, int]
    added: tuple[int, int]


def _side_of(n: int, edges, root: int) -> int:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    comp = 1 << root
    frontier = comp
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            low = rest & -rest
            nxt |= adj[low.bit_length() - 1]
            rest ^= low
        frontier = nxt & ~comp
        comp |= frontier
    return comp


def _crosses(pair: tuple[int, int], side: int) -> bool:
    return (side >> pair[0] & 1) != (side >> pair[1] & 1)


def swap_sequence(
    h: Hypergraph, start: SpanningTree, goal: SpanningTree
) -> tuple[SwapStep, ...]:
    """A shortest walk from one host tree to another via single swaps.

    Each step removes one edge and adds one while staying a host tree; the
    walk has exactly |E(start) - E(goal)| steps. Both inputs must be host
    trees of ``h``.

    The step rule: take a minimum-weight edge e of the symmetric
    difference (ties broken lexicographically). If e is in the current
    tree, removing it cuts the tree and some goal edge across the cut has
    equal weight; add the smallest such. Otherwise adding e closes a cycle
    and some cycle edge crosses the cut the goal tree assigns to e; remove
    the smallest such. Either way the weight, hence the hosting property,
    is preserved.
    """
    if start.n != h.n or goal.n != h.n:
        raise ValueError("trees and hypergraph have different vertex counts")
    if not kernels.tree_hosts_all(start.edges, h.edges):
        raise ValueError("the start tree is not a host tree")
    if not kernels.tree_hosts_all(goal.edges, h.edges):
        raise ValueError("the goal tree is not a host tree")
    cur = set(start.edges)
    target = set(goal.edges)
    steps = []
    while cur != target:
        e = min(cur ^ target, key=lambda p: (pair_weight(h, *p), p))
        if e in cur:
            side = _side_of(h.n, cur - {e}, e[0])
            added = min(f for f in target - cur if _crosses(f, side))
            cur.remove(e)
            cur.add(added)
            steps.append(SwapStep(removed=e, added=added))
        else:
            side = _side_of(h.n, target - {e}, e[0])
            path = SpanningTree(h.n, sorted(cur)).path_edges(e[0], e[1])
            removed = min(f for f in path if _crosses(f, side))
            cur.remove(removed)
            cur.add(e)
            steps.append(SwapStep(removed=removed, added=e))
        assert kernels.tree_hosts_all(tuple(sorted(cur)), h.edges)
    return tuple(steps)
