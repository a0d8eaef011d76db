"""Command line interface.

Exit codes:
  0  the command succeeded and any verdict is positive
  1  a negative verdict (not a hypertree, not equivalent, not a member, ...)
  2  usage, parse, or precondition errors (bad flags, bad file, bad labels,
     disconnected input where connectivity is required, trees that are not
     host trees)
  3  an enumeration cap was exceeded

Every command accepts ``--json`` to emit a structured report with stable
keys (command, inputs, verdict, payload, exit_code) instead of plain text.
Errors (exit 2 and 3) print a message to stderr in both modes.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from dataclasses import dataclass, field

from . import formats, generate, graphapps, hosttree, recognition
from .bitset import iter_bits, pair_mask, set_repr
from .core import Hypergraph, SimpleGraph, SpanningTree, is_host_tree
from .errors import (
    CapExceededError,
    HypertreeLabError,
    NotChordalError,
    NotConnectedError,
    NotDuallyChordalError,
    NotHypertreeError,
    ParseError,
)
from .recognition import Method


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as exceptions, not sys.exit."""

    def error(self, message):
        raise _UsageError(message)


@dataclass
class CommandReport:
    """Everything a command produced, for printing or in-process use."""

    command: str
    inputs: list[dict] = field(default_factory=list)
    verdict: str = ""
    payload: dict = field(default_factory=dict)
    exit_code: int = 0
    text: str = ""
    error_message: str | None = None
    json_mode: bool = False

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "payload": self.payload,
            "exit_code": self.exit_code,
        }


def _load(path: str, inputs: list[dict]):
    try:
        data = open(path, "rb").read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    inputs.append({"path": path, "sha256": hashlib.sha256(data).hexdigest()})
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not valid UTF-8") from exc
    return formats.parse_instance(text)


def _need_hypergraph(obj) -> Hypergraph:
    if not isinstance(obj, Hypergraph):
        raise _UsageError("this command expects a hypergraph instance (e lines)")
    return obj


def _need_graph(obj) -> SimpleGraph:
    if not isinstance(obj, SimpleGraph):
        raise _UsageError("this command expects a graph instance (g lines)")
    return obj


def _pair_text(labels, pair) -> str:
    return f"{labels[pair[0]]}-{labels[pair[1]]}"


def _tree_text(labels, tree: SpanningTree) -> str:
    return " ".join(_pair_text(labels, e) for e in tree.edges)


def _pairs_json(labels, pairs) -> list[list[str]]:
    return [[labels[u], labels[v]] for u, v in pairs]


def _mask_json(labels, mask) -> list[str]:
    return [labels[i] for i in iter_bits(mask)]


def _parse_vertex_set(h: Hypergraph, spec: str) -> int:
    names = [s for s in spec.split(",") if s]
    if not names:
        raise _UsageError("expected a comma separated list of vertices")
    mask = 0
    for name in names:
        try:
            mask |= 1 << h.index_of(name)
        except KeyError:
            raise _UsageError(f"unknown vertex {name!r}")
    return mask


def _parse_tree_arg(h: Hypergraph, spec: str) -> SpanningTree:
    pairs = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        ends = chunk.split("-")
        if len(ends) != 2:
            raise _UsageError(f"bad tree edge {chunk!r}: expected u-v")
        try:
            pairs.append((h.index_of(ends[0]), h.index_of(ends[1])))
        except KeyError as exc:
            raise _UsageError(str(exc))
    try:
        return SpanningTree(h.n, pairs)
    except ValueError as exc:
        raise _UsageError(f"not a spanning tree: {exc}")


# ---------------------------------------------------------------------------
# handlers: each fills verdict/payload/text/exit_code on the report


def _cmd_recognize(args, report):
    h = _need_hypergraph(_load(args.file, report.inputs))
    method = Method(args.method)
    res = recognition.is_hypertree(h, method=method, brute_cap=args.brute_cap)
    report.payload = {
        "is_hypertree": res.is_hypertree,
        "method": method.value,
        "target_weight": res.target_weight,
    }
    if res.host_tree is not None:
        report.payload["host_tree"] = _pairs_json(h.labels, res.host_tree.edges)
    if res.achieved_weight is not None:
        report.payload["achieved_weight"] = res.achieved_weight
    if res.is_hypertree:
        report.verdict = "hypertree"
        if method is Method.MAX_WEIGHT_TREE:
            report.text = (
                f"hypertree; host tree {_tree_text(h.labels, res.host_tree)}; "
                f"weight {res.achieved_weight} = target {res.target_weight}"
            )
        elif method is Method.HELLY_CHORDAL:
            report.text = "hypertree; Helly family with chordal line graph"
        else:
            tree_part = (
                _tree_text(h.labels, res.host_tree) if res.host_tree else "(empty)"
            )
            report.text = f"hypertree; host tree {tree_part}; found by brute force"
    else:
        report.verdict = "not-hypertree"
        report.exit_code = 1
        if method is Method.MAX_WEIGHT_TREE:
            report.text = (
                f"not a hypertree; max tree weight {res.achieved_weight} "
                f"< target {res.target_weight}"
            )
        elif method is Method.HELLY_CHORDAL:
            from .core import is_helly, line_graph

            reasons = []
            if not is_helly(h):
                reasons.append("the family is not Helly")
            if not recognition.is_chordal(line_graph(h)).is_peo:
                reasons.append("the line graph is not chordal")
            report.text = "not a hypertree; " + "; ".join(reasons)
            report.payload["reasons"] = reasons
        else:
            report.text = "not a hypertree; brute force found no hosting tree"


def _cmd_host_tree(args, report):
    h = _need_hypergraph(_load(args.file, report.inputs))
    try:
        tree = recognition.host_tree(h, reverse_ties=args.reverse_ties)
    except NotHypertreeError as exc:
        report.verdict = "not-hypertree"
        report.exit_code = 1
        report.text = str(exc)
        return
    report.verdict = "host-tree"
    report.payload = {"host_tree": _pairs_json(h.labels, tree.edges)}
    report.text = _tree_text(h.labels, tree)


def _cmd_basis(args, report):
    h = _need_hypergraph(_load(args.file, report.inputs))
    try:
        basis = hosttree.basic_sets(h)
    except NotHypertreeError as exc:
        report.verdict = "not-hypertree"
        report.exit_code = 1
        report.text = str(exc)
        return
    report.verdict = "basis"
    report.payload = {
        "basis": [_mask_json(h.labels, r.members) for r in basis],
        "records": [
            {
                "members": _mask_json(h.labels, r.members),
                "alpha": r.alpha,
                "components": [_mask_json(h.labels, c) for c in r.components],
                "meeting": list(r.meeting),
                "delta": _pairs_json(h.labels, r.delta),
            }
            for r in basis
        ],
    }
    report.text = "\n".join(set_repr(r.members, h.labels) for r in basis)


def _cmd_completion_member(args, report):
    h = _need_hypergraph(_load(args.file, report.inputs))
    mask = _parse_vertex_set(h, args.set)
    try:
        member = hosttree.completion_contains(h, mask)
    except NotHypertreeError as exc:
        report.verdict = "not-hypertree"
        report.exit_code = 1
        report.text = str(exc)
        return
    report.payload = {"set": _mask_json(h.labels, mask), "member": member}
    if member:
        report.verdict = "member"
        report.text = "member"
    else:
        report.verdict = "not-member"
        report.exit_code = 1
        report.text = "not a member"


def _cmd_completion_list(args, report):
    h = _need_hypergraph(_load(args.file, report.inputs))
    try:
        masks = hosttree.enumerate_completion(h, cap=args.cap)
    except NotHypertreeError as exc:
        report.verdict = "not-hypertree"
        report.exit_code = 1
        report.text = str(exc)
        return
    report.verdict = "completion"
    report.payload = {"members": [_mask_json(h.labels, m) for m in masks]}
    report.text = "\n".join(set_repr(m, h.labels) for m in masks)


def _cmd_feasible_edges(args, report):
    h = _need_hypergraph(_load(args.file, report.inputs))
    try:
        rows = hosttree.feasible_edges(h)
    except NotHypertreeError as exc:
        report.verdict = "not-hypertree"
        report.exit_code = 1
        report.text = str(exc)
        return
    report.verdict = "feasible-edges"
    report.payload = {
        "edges": [
            {"pair": [h.labels[u], h.labels[v]], "basic_set": _mask_json(h.labels, b)}
            for (u, v), b in rows
        ]
    }
    report.text = "\n".join(
        f"{_pair_text(h.labels, pair)} -> {set_repr(b, h.labels)}" for pair, b in rows
    )


def _cmd_count_trees(args, report):
    h = _need_hypergraph(_load(args.file, report.inputs))
    try:
        count = hosttree.count_host_trees(h)
    except NotHypertreeError as exc:
        report.verdict = "not-hypertree"
        report.exit_code = 1
        report.text = str(exc)
        return
    report.verdict = "count"
    report.payload = {"count": count}
    report.text = str(count)


def _cmd_enumerate_trees(args, report):
    h = _need_hypergraph(_load(args.file, report.inputs))
    try:
        trees = hosttree.enumerate_host_trees(h, cap=args.cap)
    except NotHypertreeError as exc:
        report.verdict = "not-hypertree"
        report.exit_code = 1
        report.text = str(exc)
        return
    report.verdict = "host-trees"
    report.payload = {"trees": [_pairs_json(h.labels, t.edges) for t in trees]}
    report.text = "\n".join(_tree_text(h.labels, t) for t in trees)


def _cmd_equiv(args, report):
    h1 = _need_hypergraph(_load(args.file, report.inputs))
    h2 = _need_hypergraph(_load(args.other, report.inputs))
    try:
        same = hosttree.equivalent(
            h1, h2, allow_non_hypertrees=args.allow_non_hypertrees
        )
    except NotHypertreeError as exc:
        report.verdict = "not-hypertree"
        report.exit_code = 1
        report.text = str(exc)
        return
    except ValueError as exc:
        raise _UsageError(str(exc))
    report.payload = {"equivalent": same}
    if same:
        report.verdict = "equivalent"
        report.text = "equivalent"
    else:
        report.verdict = "not-equivalent"
        report.exit_code = 1
        report.text = "not equivalent"


def _cmd_is_basic(args, report):
    h = _need_hypergraph(_load(args.file, report.inputs))
    try:
        basic = hosttree.is_basic_hypertree(h)
    except NotHypertreeError as exc:
        report.verdict = "not-hypertree"
        report.exit_code = 1
        report.text = str(exc)
        return
    report.payload = {"basic": basic}
    if basic:
        report.verdict = "basic"
        report.text = "basic"
    else:
        report.verdict = "not-basic"
        report.exit_code = 1
        report.text = "not basic"


def _cmd_gyo(args, report):
    h = _need_hypergraph(_load(args.file, report.inputs))
    trace = recognition.gyo_reduce(h)
    lines = []
    steps_json = []
    for step in trace.steps:
        if isinstance(step, recognition.RemoveContainedEdge):
            if step.container is None:
                lines.append(f"remove e{step.edge} (emptied)")
            else:
                lines.append(f"remove e{step.edge} (inside e{step.container})")
            steps_json.append(
                {"op": "remove", "edge": step.edge, "container": step.container}
            )
        else:
            lines.append(f"shrink e{step.edge}: drop {h.labels[step.vertex]}")
            steps_json.append(
                {"op": "shrink", "edge": step.edge, "vertex": h.labels[step.vertex]}
            )
    report.payload = {"steps": steps_json, "reduced": trace.success}
    if trace.success:
        report.verdict = "reduced"
        lines.append("reduced to empty family")
    else:
        report.verdict = "stuck"
        report.exit_code = 1
        lines.append("stuck: no contained edge, no private vertex")
        for idx, mask in trace.residual:
            lines.append(f"residual e{idx} = {set_repr(mask, h.labels)}")
        report.payload["residual"] = [
            {"edge": idx, "members": _mask_json(h.labels, mask)}
            for idx, mask in trace.residual
        ]
    report.text = "\n".join(lines)


def _cmd_clique_tree(args, report):
    g = _need_graph(_load(args.file, report.inputs))
    try:
        ct = graphapps.clique_tree(g)
    except NotChordalError as exc:
        report.verdict = "not-chordal"
        report.exit_code = 1
        report.text = _chordal_failure_text(g, exc)
        return
    fam = ct.family
    lines = [
        f"C{i} = {set_repr(c, g.labels)}" for i, c in enumerate(fam.cliques)
    ]
    tree_part = " ".join(f"C{u}-C{v}" for u, v in ct.tree.edges)
    lines.append(f"tree: {tree_part}" if tree_part else "tree: (single clique)")
    lines.append(f"weight {ct.weight}")
    report.verdict = "clique-tree"
    report.payload = {
        "cliques": [_mask_json(g.labels, c) for c in fam.cliques],
        "tree": [[f"C{u}", f"C{v}"] for u, v in ct.tree.edges],
        "weight": ct.weight,
    }
    report.text = "\n".join(lines)


def _chordal_failure_text(g, exc: NotChordalError) -> str:
    cycle = "-".join(g.labels[v] for v in exc.witness) if exc.witness else "?"
    return f"not chordal; induced cycle {cycle}"


def _cmd_compatible_tree(args, report):
    g = _need_graph(_load(args.file, report.inputs))
    weighting = graphapps.Weighting(args.weighting)
    try:
        ct = graphapps.compatible_tree(g, weighting=weighting)
    except NotDuallyChordalError:
        report.verdict = "not-dually-chordal"
        report.exit_code = 1
        report.text = "not dually chordal"
        return
    report.verdict = "compatible-tree"
    report.payload = {
        "tree": _pairs_json(g.labels, ct.tree.edges),
        "weight": ct.weight,
        "weighting": weighting.value,
    }
    report.text = f"{_tree_text(g.labels, ct.tree)}\nweight {ct.weight}"


def _cmd_is_dually_chordal(args, report):
    g = _need_graph(_load(args.file, report.inputs))
    ok = graphapps.is_dually_chordal(g)
    report.payload = {"dually_chordal": ok}
    if ok:
        report.verdict = "dually-chordal"
        report.text = "dually chordal"
    else:
        report.verdict = "not-dually-chordal"
        report.exit_code = 1
        report.text = "not dually chordal"


def _cmd_is_basic_chordal(args, report):
    g = _need_graph(_load(args.file, report.inputs))
    try:
        ok = graphapps.is_basic_chordal(g)
    except NotChordalError as exc:
        report.verdict = "not-chordal"
        report.exit_code = 1
        report.text = _chordal_failure_text(g, exc)
        return
    report.payload = {"basic_chordal": ok}
    if ok:
        report.verdict = "basic-chordal"
        report.text = "basic chordal"
    else:
        report.verdict = "not-basic-chordal"
        report.exit_code = 1
        report.text = "not basic chordal"


def _cmd_swap_seq(args, report):
    h = _need_hypergraph(_load(args.file, report.inputs))
    t_from = _parse_tree_arg(h, getattr(args, "from"))
    t_to = _parse_tree_arg(h, args.to)
    try:
        steps = hosttree.swap_sequence(h, t_from, t_to)
    except ValueError as exc:
        raise _UsageError(str(exc))
    report.verdict = "swap-sequence"
    report.payload = {
        "steps": [
            {
                "removed": [h.labels[a] for a in s.removed],
                "added": [h.labels[a] for a in s.added],
            }
            for s in steps
        ]
    }
    report.text = "\n".join(
        f"remove {_pair_text(h.labels, s.removed)} add {_pair_text(h.labels, s.added)}"
        for s in steps
    )


def _cmd_gen_random(args, report):
    if args.n < 1:
        raise _UsageError("need --n at least 1")
    if args.m < 0:
        raise _UsageError("need --m at least 0")
    if args.guarantee and args.kind != "hypergraph":
        raise _UsageError("--guarantee hypertree only applies to --kind hypergraph")
    rng = random.Random(args.seed)
    if args.kind == "graph":
        obj = generate.random_graph(args.n, args.m, rng)
    elif args.guarantee == "hypertree":
        obj = generate.random_hypertree(args.n, args.m, rng)
    else:
        obj = generate.random_hypergraph(args.n, args.m, rng)
    text = formats.serialize(obj)
    report.verdict = "generated"
    report.payload = {
        "kind": args.kind,
        "guarantee": args.guarantee,
        "n": args.n,
        "m": args.m,
        "seed": args.seed,
        "instance": text,
    }
    report.text = text.rstrip("\n")


def _cmd_to_dot(args, report):
    obj = _load(args.file, report.inputs)
    tree = None
    if args.with_host_tree:
        h = _need_hypergraph(obj)
        try:
            tree = recognition.host_tree(h)
        except NotHypertreeError as exc:
            report.verdict = "not-hypertree"
            report.exit_code = 1
            report.text = str(exc)
            return
    dot = formats.to_dot(obj, tree)
    report.verdict = "dot"
    report.payload = {"dot": dot}
    report.text = dot.rstrip("\n")


# ---------------------------------------------------------------------------
# wiring


def _build_parser() -> _Parser:
    parser = _Parser(prog="hypertree-lab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        return p

    p = add("recognize", _cmd_recognize, "test whether a hypergraph is a hypertree")
    p.add_argument("file")
    p.add_argument(
        "--method",
        choices=[m.value for m in Method],
        default=Method.MAX_WEIGHT_TREE.value,
    )
    p.add_argument("--brute-cap", type=int, default=8)

    p = add("host-tree", _cmd_host_tree, "print one host tree")
    p.add_argument("file")
    p.add_argument("--reverse-ties", action="store_true")

    p = add("basis", _cmd_basis, "print the basic sets")
    p.add_argument("file")

    p = add("completion-member", _cmd_completion_member, "test completion membership")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="comma separated vertex labels")

    p = add("completion-list", _cmd_completion_list, "list the completion")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=10_000)

    p = add("feasible-edges", _cmd_feasible_edges, "list pairs usable by host trees")
    p.add_argument("file")

    p = add("count-trees", _cmd_count_trees, "count the host trees")
    p.add_argument("file")

    p = add("enumerate-trees", _cmd_enumerate_trees, "list all host trees")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=1_000_000)

    p = add("equiv", _cmd_equiv, "test whether two hypertrees share host trees")
    p.add_argument("file")
    p.add_argument("other")
    p.add_argument("--allow-non-hypertrees", action="store_true")

    p = add("is-basic", _cmd_is_basic, "test whether a hypertree is basic")
    p.add_argument("file")

    p = add("gyo", _cmd_gyo, "run the reduction that certifies dual hypertrees")
    p.add_argument("file")

    p = add("clique-tree", _cmd_clique_tree, "clique tree of a chordal graph")
    p.add_argument("file")

    p = add("compatible-tree", _cmd_compatible_tree, "compatible tree of a dually chordal graph")
    p.add_argument("file")
    p.add_argument(
        "--weighting",
        choices=[w.value for w in graphapps.Weighting],
        default=graphapps.Weighting.NEIGHBORHOODS.value,
    )

    p = add("is-dually-chordal", _cmd_is_dually_chordal, "test dual chordality")
    p.add_argument("file")

    p = add("is-basic-chordal", _cmd_is_basic_chordal, "test basic chordality")
    p.add_argument("file")

    p = add("swap-seq", _cmd_swap_seq, "swap walk between two host trees")
    p.add_argument("file")
    p.add_argument("--from", required=True, help="tree edges, e.g. 1-2,2-3")
    p.add_argument("--to", required=True, help="tree edges, e.g. 1-2,1-3")

    p = add("gen-random", _cmd_gen_random, "generate a random instance")
    p.add_argument("--kind", choices=["hypergraph", "graph"], required=True)
    p.add_argument("--guarantee", choices=["hypertree"], default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = add("to-dot", _cmd_to_dot, "DOT export of a graph or two-section")
    p.add_argument("file")
    p.add_argument("--with-host-tree", action="store_true")

    return parser


def run_command(argv: list[str]) -> CommandReport:
    """Run one CLI command in-process and return its full report."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return CommandReport(
            command=argv[0] if argv else "",
            exit_code=2,
            error_message=str(exc),
        )
    report = CommandReport(command=args.command, json_mode=args.json)
    try:
        args.handler(args, report)
    except _UsageError as exc:
        report.exit_code = 2
        report.error_message = str(exc)
    except (ParseError, NotConnectedError) as exc:
        report.exit_code = 2
        report.error_message = str(exc)
    except CapExceededError as exc:
        report.exit_code = 3
        report.error_message = str(exc)
    except (ValueError, KeyError) as exc:
        report.exit_code = 2
        report.error_message = str(exc)
    except HypertreeLabError as exc:
        # remaining domain errors behave as negative verdicts
        report.exit_code = 1
        report.verdict = "error"
        report.text = str(exc)
    return report


def main(argv: list[str] | None = None) -> int:
    report = run_command(sys.argv[1:] if argv is None else argv)
    if report.error_message is not None:
        print(f"error: {report.error_message}", file=sys.stderr)
    elif report.json_mode:
        print(json.dumps(report.as_dict(), indent=2, sort_keys=True))
    elif report.text:
        print(report.text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
