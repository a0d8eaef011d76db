"""The golden CLI case table, shared by the golden test and its regenerator.

Each case is (name, argv, expected exit code). Paths are relative to the
tests/ directory, which is the working directory for every invocation, so
the byte-exact outputs under golden/expected/ stay stable. A case's stdout
is compared against golden/expected/<name>.out and its stderr against
<name>.err; a missing file means the stream must be empty.
"""

CASES = [
    # recognition, all three methods, both verdicts
    ("recognize-h2", ["recognize", "golden/inputs/h_big.hg"], 0),
    ("recognize-h2-helly", ["recognize", "golden/inputs/h_big.hg", "--method", "helly"], 0),
    ("recognize-h2-brute", ["recognize", "golden/inputs/h_big.hg", "--method", "brute"], 0),
    ("recognize-tri", ["recognize", "golden/inputs/tri.hg"], 1),
    ("recognize-tri-helly", ["recognize", "golden/inputs/tri.hg", "--method", "helly"], 1),
    ("recognize-tri-brute", ["recognize", "golden/inputs/tri.hg", "--method", "brute"], 1),
    ("recognize-iso", ["recognize", "golden/inputs/iso.hg"], 0),
    ("recognize-h2-json", ["recognize", "golden/inputs/h_big.hg", "--json"], 0),
    ("recognize-tri-json", ["recognize", "golden/inputs/tri.hg", "--json"], 1),
    # host trees
    ("host-tree-h2", ["host-tree", "golden/inputs/h_big.hg"], 0),
    ("host-tree-h2-reverse", ["host-tree", "golden/inputs/h_big.hg", "--reverse-ties"], 0),
    ("host-tree-tri", ["host-tree", "golden/inputs/tri.hg"], 1),
    # structure
    ("basis-h1", ["basis", "golden/inputs/h_triples.hg"], 0),
    ("basis-h2", ["basis", "golden/inputs/h_big.hg"], 0),
    ("completion-member-yes", ["completion-member", "golden/inputs/h_big.hg", "--set", "1,2,3"], 0),
    ("completion-member-no", ["completion-member", "golden/inputs/h_big.hg", "--set", "1,3"], 1),
    ("completion-list-h2", ["completion-list", "golden/inputs/h_big.hg"], 0),
    ("completion-list-capped", ["completion-list", "golden/inputs/h_big.hg", "--cap", "3"], 3),
    ("feasible-edges-h2", ["feasible-edges", "golden/inputs/h_big.hg"], 0),
    ("count-trees-h2", ["count-trees", "golden/inputs/h_big.hg"], 0),
    ("count-trees-h1", ["count-trees", "golden/inputs/h_triples.hg"], 0),
    ("count-trees-h2-json", ["count-trees", "golden/inputs/h_big.hg", "--json"], 0),
    ("enumerate-trees-h2", ["enumerate-trees", "golden/inputs/h_big.hg"], 0),
    ("enumerate-trees-capped", ["enumerate-trees", "golden/inputs/single4.hg", "--cap", "10"], 3),
    # equivalence and basicness
    ("equiv-h1-core", ["equiv", "golden/inputs/h_triples.hg", "golden/inputs/h_core2.hg"], 0),
    ("equiv-h2-h1", ["equiv", "golden/inputs/h_big.hg", "golden/inputs/h_triples.hg"], 1),
    ("equiv-tri-strict", ["equiv", "golden/inputs/tri.hg", "golden/inputs/tri.hg"], 1),
    ("equiv-tri-allowed", ["equiv", "golden/inputs/tri.hg", "golden/inputs/tri.hg", "--allow-non-hypertrees"], 0),
    ("is-basic-path", ["is-basic", "golden/inputs/h_path.hg"], 0),
    ("is-basic-npath", ["is-basic", "golden/inputs/n_path.hg"], 1),
    # reduction
    ("gyo-h2", ["gyo", "golden/inputs/h_big.hg"], 0),
    ("gyo-single4", ["gyo", "golden/inputs/single4.hg"], 0),
    ("gyo-tri", ["gyo", "golden/inputs/tri.hg"], 1),
    # chordal graphs
    ("clique-tree-p4", ["clique-tree", "golden/inputs/p4.gr"], 0),
    ("clique-tree-star", ["clique-tree", "golden/inputs/star.gr"], 0),
    ("clique-tree-c4", ["clique-tree", "golden/inputs/c4.gr"], 1),
    ("is-basic-chordal-p4", ["is-basic-chordal", "golden/inputs/p4.gr"], 0),
    ("is-basic-chordal-nonbasic5", ["is-basic-chordal", "golden/inputs/nonbasic5.gr"], 1),
    ("is-basic-chordal-c4", ["is-basic-chordal", "golden/inputs/c4.gr"], 1),
    # dually chordal graphs
    ("is-dually-chordal-wheel", ["is-dually-chordal", "golden/inputs/wheel.gr"], 0),
    ("is-dually-chordal-c4", ["is-dually-chordal", "golden/inputs/c4.gr"], 1),
    ("compatible-tree-wheel", ["compatible-tree", "golden/inputs/wheel.gr"], 0),
    ("compatible-tree-p3-cliques", ["compatible-tree", "golden/inputs/p3.gr", "--weighting", "cliques"], 0),
    ("compatible-tree-c4", ["compatible-tree", "golden/inputs/c4.gr"], 1),
    # swaps
    ("swap-seq-h2", ["swap-seq", "golden/inputs/h_big.hg", "--from", "1-2,2-3,1-4", "--to", "1-2,2-3,3-4"], 0),
    ("swap-seq-not-host", ["swap-seq", "golden/inputs/h_big.hg", "--from", "1-3,2-3,1-4", "--to", "1-2,2-3,3-4"], 2),
    # generation (seeded, so byte-stable)
    ("gen-hypertree", ["gen-random", "--kind", "hypergraph", "--guarantee", "hypertree", "--n", "6", "--m", "4", "--seed", "7"], 0),
    ("gen-graph", ["gen-random", "--kind", "graph", "--n", "5", "--m", "6", "--seed", "3"], 0),
    ("gen-bad-guarantee", ["gen-random", "--kind", "graph", "--guarantee", "hypertree", "--n", "5", "--m", "6"], 2),
    # export
    ("to-dot-h2-tree", ["to-dot", "golden/inputs/h_big.hg", "--with-host-tree"], 0),
    ("to-dot-p4", ["to-dot", "golden/inputs/p4.gr"], 0),
    # error paths
    ("parse-error", ["recognize", "golden/inputs/bad.hg"], 2),
    ("missing-file", ["recognize", "golden/inputs/absent.hg"], 2),
    ("wrong-kind", ["recognize", "golden/inputs/p4.gr"], 2),
    ("disconnected", ["clique-tree", "golden/inputs/disconnected.gr"], 2),
]
