import random
from itertools import combinations

import pytest

from hypertree_lab import (
    CapExceededError,
    Hypergraph,
    NotChordalError,
    NotConnectedError,
    NotDuallyChordalError,
    SimpleGraph,
    Weighting,
    clique_tree,
    clique_tree_edge_feasible,
    compatible_edge_feasible,
    compatible_tree,
    enumerate_host_trees,
    is_basic_chordal,
    is_dually_chordal,
    maximal_cliques,
    maximal_cliques_chordal,
    two_section,
)
from hypertree_lab import generate
from hypertree_lab.graphapps import clique_incidence_hypergraph, neighborhood_family

import oracles


def G(*pairs, vertices=None):
    return SimpleGraph.from_edge_labels(pairs, vertices=vertices)


P3 = G((1, 2), (2, 3))
P4 = G((1, 2), (2, 3), (3, 4))
K3 = G((1, 2), (1, 3), (2, 3))
K4 = G(*combinations([1, 2, 3, 4], 2))
C4 = G((1, 2), (2, 3), (3, 4), (1, 4))
STAR = G((1, 2), (1, 3), (1, 4))
WHEEL = G((1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5))
# smallest connected chordal graph whose clique trees and compatible trees of
# the clique structure part ways (found by exhaustive search, first at n = 5)
NONBASIC5 = G((1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4))


# ---------------------------------------------------------------------------
# cliques


def test_chordal_clique_listing_on_examples():
    assert maximal_cliques_chordal(P4).cliques == (0b0011, 0b0110, 0b1100)
    assert maximal_cliques_chordal(K4).cliques == (0b1111,)
    assert maximal_cliques_chordal(STAR).cliques == (0b0011, 0b0101, 0b1001)
    assert maximal_cliques_chordal(NONBASIC5).cliques == (0b00111, 0b01011, 0b10001)


def test_chordal_clique_listing_rejects_non_chordal_with_witness():
    with pytest.raises(NotChordalError) as info:
        maximal_cliques_chordal(C4)
    assert info.value.witness is not None
    assert len(info.value.witness) == 4


def test_chordal_clique_listing_matches_brute_force():
    rng = random.Random(17)
    for _ in range(100):
        g = generate.random_connected_chordal(rng.randint(1, 8), rng)
        got = set(maximal_cliques_chordal(g).cliques)
        assert got == oracles.maximal_cliques(g), g


def test_general_clique_listing_matches_brute_force():
    rng = random.Random(71)
    for _ in range(150):
        n = rng.randint(1, 7)
        g = generate.random_graph(n, rng.randint(0, n * (n - 1) // 2), rng)
        assert set(maximal_cliques(g)) == oracles.maximal_cliques(g), g


def test_general_clique_listing_cap():
    with pytest.raises(CapExceededError):
        maximal_cliques(C4, cap=2)


# ---------------------------------------------------------------------------
# clique trees


def test_clique_tree_of_a_path():
    ct = clique_tree(P4)
    assert ct.family.cliques == (0b0011, 0b0110, 0b1100)
    assert ct.tree.edges == ((0, 1), (1, 2))
    assert ct.weight == 2


def test_clique_tree_of_a_single_clique():
    ct = clique_tree(K4)
    assert ct.family.cliques == (0b1111,)
    assert ct.tree.edges == ()
    assert ct.weight == 0


def test_star_has_three_clique_trees_of_weight_two():
    ct = clique_tree(STAR)
    assert ct.weight == 2
    incidence = clique_incidence_hypergraph(ct.family)
    trees = enumerate_host_trees(incidence)
    assert len(trees) == 3


def test_clique_tree_rejections():
    with pytest.raises(NotChordalError):
        clique_tree(C4)
    with pytest.raises(NotConnectedError):
        clique_tree(G((1, 2), vertices=[1, 2, 3]))
    with pytest.raises(NotConnectedError):
        clique_tree(SimpleGraph(()))


def test_clique_tree_weight_identity_on_randoms():
    rng = random.Random(41)
    for _ in range(80):
        g = generate.random_connected_chordal(rng.randint(1, 8), rng)
        ct = clique_tree(g)
        total = sum(c.bit_count() for c in ct.family.cliques)
        assert ct.weight == total - g.n
        sep = sum(
            (ct.family.cliques[i] & ct.family.cliques[j]).bit_count()
            for i, j in ct.tree.edges
        )
        assert sep == ct.weight


def test_clique_tree_edge_feasibility_matches_enumeration():
    rng = random.Random(43)
    for _ in range(60):
        g = generate.random_connected_chordal(rng.randint(2, 7), rng)
        family = maximal_cliques_chordal(g)
        if len(family.cliques) < 2:
            continue
        trees = enumerate_host_trees(clique_incidence_hypergraph(family))
        used = {e for t in trees for e in t.edges}
        for i, j in combinations(range(len(family.cliques)), 2):
            want = (i, j) in used
            got = clique_tree_edge_feasible(g, family.cliques[i], family.cliques[j])
            assert got == want, (g, i, j)


def test_clique_tree_edge_feasible_validates_cliques():
    with pytest.raises(ValueError):
        clique_tree_edge_feasible(P4, 0b0011, 0b0100)  # {3} is not maximal
    with pytest.raises(ValueError):
        clique_tree_edge_feasible(P4, 0b0011, 0b0011)


def test_disjoint_cliques_cannot_be_tree_neighbors():
    assert clique_tree_edge_feasible(P4, 0b0011, 0b0110)
    assert not clique_tree_edge_feasible(P4, 0b0011, 0b1100)


# ---------------------------------------------------------------------------
# dually chordal graphs


def test_dually_chordal_examples():
    for g in (P3, K3, K4, STAR, WHEEL):
        assert is_dually_chordal(g)
    assert not is_dually_chordal(C4)


def test_wheel_is_dually_chordal_but_not_chordal():
    from hypertree_lab import is_chordal

    assert not is_chordal(WHEEL).is_peo
    assert is_dually_chordal(WHEEL)


def test_compatible_tree_of_a_path():
    ct = compatible_tree(P3)
    assert ct.tree.edges == ((0, 1), (1, 2))
    assert ct.weight == 4  # twice the edge count
    ct2 = compatible_tree(P3, weighting=Weighting.CLIQUES)
    assert ct2.tree.edges == ((0, 1), (1, 2))
    assert ct2.weight == 2


def test_compatible_tree_of_the_wheel_is_the_hub_star():
    ct = compatible_tree(WHEEL)
    assert ct.tree.edges == ((0, 4), (1, 4), (2, 4), (3, 4))
    assert ct.weight == 2 * WHEEL.edge_count == 16


def test_compatible_tree_weight_identities():
    for g in (P3, K3, K4, STAR, WHEEL):
        n = compatible_tree(g, weighting=Weighting.NEIGHBORHOODS)
        assert n.weight == 2 * g.edge_count
        c = compatible_tree(g, weighting=Weighting.CLIQUES)
        assert c.weight == sum(
            m.bit_count() - 1 for m in maximal_cliques(g)
        )


def test_compatible_tree_rejections():
    with pytest.raises(NotDuallyChordalError):
        compatible_tree(C4)
    with pytest.raises(NotConnectedError):
        compatible_tree(G((1, 2), (3, 4)))


def random_dually_chordal(rng):
    while True:
        h = generate.random_hypertree(rng.randint(2, 7), rng.randint(1, 5), rng)
        g = two_section(h)
        if g.is_connected() and is_dually_chordal(g):
            return g


def test_both_weightings_pick_from_the_same_tree_set():
    rng = random.Random(67)
    for _ in range(40):
        g = random_dually_chordal(rng)
        nf = neighborhood_family(g)
        cf = Hypergraph(g.labels, maximal_cliques(g))
        n_trees = {t.edges for t in enumerate_host_trees(nf)}
        c_trees = {t.edges for t in enumerate_host_trees(cf)}
        assert n_trees == c_trees, g
        # and every compatible tree is a subgraph of the input
        for t in n_trees:
            assert all(g.has_edge(u, v) for u, v in t)


def test_compatible_edge_feasibility():
    # middle edges of the path are forced; the skipped pair is not even close
    assert compatible_edge_feasible(P3, 0, 1)
    assert compatible_edge_feasible(P3, 1, 2)
    assert not compatible_edge_feasible(P3, 0, 2)  # non-edge of the path
    for u, v in combinations(range(3), 2):
        assert compatible_edge_feasible(K3, u, v)


def test_compatible_edge_feasibility_matches_brute_force():
    rng = random.Random(73)
    for _ in range(40):
        g = random_dually_chordal(rng)
        used = {
            e for t in enumerate_host_trees(neighborhood_family(g)) for e in t.edges
        }
        for u, v in combinations(range(g.n), 2):
            assert compatible_edge_feasible(g, u, v) == ((u, v) in used), (g, u, v)


def test_compatible_edge_feasible_validation():
    with pytest.raises(ValueError):
        compatible_edge_feasible(P3, 1, 1)
    with pytest.raises(NotDuallyChordalError):
        compatible_edge_feasible(C4, 0, 1)


# ---------------------------------------------------------------------------
# basic chordal graphs


def test_basic_chordal_examples():
    assert is_basic_chordal(P3)
    assert is_basic_chordal(P4)
    assert is_basic_chordal(K4)
    # K4 minus one edge
    assert is_basic_chordal(G((1, 2), (1, 3), (2, 3), (2, 4), (3, 4)))


def test_smallest_non_basic_chordal_graph():
    assert not is_basic_chordal(NONBASIC5)
    # its two clique trees against three compatible arrangements
    incidence = clique_incidence_hypergraph(maximal_cliques_chordal(NONBASIC5))
    from hypertree_lab import count_host_trees, neighborhood_hypergraph

    assert count_host_trees(incidence) == 2
    assert count_host_trees(neighborhood_hypergraph(incidence)) == 3


def test_no_smaller_non_basic_chordal_graph_exists():
    # spot check: every connected chordal graph on up to 4 vertices is basic
    from hypertree_lab import is_chordal

    for n in range(1, 5):
        labels = [str(i + 1) for i in range(n)]
        for bits in range(1 << (n * (n - 1) // 2)):
            pairs = [
                p
                for k, p in enumerate(combinations(range(n), 2))
                if bits >> k & 1
            ]
            g = SimpleGraph(labels, pairs)
            if not g.is_connected() or not is_chordal(g).is_peo:
                continue
            assert is_basic_chordal(g), g


def test_basic_chordal_rejections():
    with pytest.raises(NotChordalError):
        is_basic_chordal(C4)
    with pytest.raises(NotConnectedError):
        is_basic_chordal(SimpleGraph(("a", "b")))
