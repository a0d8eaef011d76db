"""Plain-text instance format and DOT export.

One directive per line; ``#`` starts a comment anywhere on a line.

  vertices a b c     optional header fixing the universe and its order;
                     must come first when present
  e a b c            one hyperedge (labels, at least one)
  g a b              one graph edge (two distinct labels)

A file holds either hyperedges or graph edges, never both. Without a header
the universe is collected in order of first appearance. Serialization always
emits the header and one edge per line, so parse(serialize(x)) == x and
canonical files round-trip byte for byte.
"""

from __future__ import annotations

from .bitset import iter_bits, set_repr
from .core import Hypergraph, SimpleGraph, SpanningTree, two_section
from .errors import ParseError

Instance = Hypergraph | SimpleGraph


def parse_instance(text: str) -> Instance:
    header: list[str] | None = None
    hyper: list[tuple[int, list[str]]] = []
    graph: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kw, args = parts[0], parts[1:]
        if kw == "vertices":
            if header is not None:
                raise ParseError("duplicate vertices header", lineno)
            if hyper or graph:
                raise ParseError("vertices header must come before edges", lineno)
            if len(set(args)) != len(args):
                raise ParseError("duplicate vertex in header", lineno)
            header = args
        elif kw == "e":
            if graph:
                raise ParseError("cannot mix hyperedges and graph edges", lineno)
            if not args:
                raise ParseError("a hyperedge needs at least one vertex", lineno)
            hyper.append((lineno, args))
        elif kw == "g":
            if hyper:
                raise ParseError("cannot mix hyperedges and graph edges", lineno)
            if len(args) != 2:
                raise ParseError("a graph edge needs exactly two vertices", lineno)
            if args[0] == args[1]:
                raise ParseError("loops are not allowed", lineno)
            graph.append((lineno, args[0], args[1]))
        else:
            raise ParseError(f"unknown directive {kw!r}", lineno)

    if header is not None:
        known = set(header)
        for lineno, labs in hyper:
            for lab in labs:
                if lab not in known:
                    raise ParseError(f"vertex {lab!r} is not in the header", lineno)
        for lineno, a, b in graph:
            for lab in (a, b):
                if lab not in known:
                    raise ParseError(f"vertex {lab!r} is not in the header", lineno)

    if graph:
        return SimpleGraph.from_edge_labels(
            [(a, b) for _, a, b in graph], vertices=header
        )
    if hyper:
        return Hypergraph.from_edge_labels(
            [labs for _, labs in hyper], vertices=header
        )
    if header is not None:
        return Hypergraph(tuple(header), ())
    raise ParseError("empty instance: no header and no edges")


def serialize(obj: Instance) -> str:
    lines = ["vertices " + " ".join(obj.labels) if obj.labels else "vertices"]
    if isinstance(obj, Hypergraph):
        for e in obj.edges:
            lines.append("e " + " ".join(obj.labels_of(e)))
    else:
        for u, v in obj.edges():
            lines.append(f"g {obj.labels[u]} {obj.labels[v]}")
    return "\n".join(lines) + "\n"


def to_dot(obj: Instance, tree: SpanningTree | None = None) -> str:
    """DOT text for the graph or the two-section, optionally with a tree.

    Tree edges are drawn bold; tree edges outside the graph still appear.
    Hyperedges are kept as comments so the source family stays readable.
    """
    if isinstance(obj, Hypergraph):
        g = two_section(obj)
        comments = [
            f"  // e{i} = {set_repr(e, obj.labels)}" for i, e in enumerate(obj.edges)
        ]
    else:
        g = obj
        comments = []
    if tree is not None and tree.n != g.n:
        raise ValueError("tree and instance have different vertex counts")
    tree_pairs = set(tree.edges) if tree is not None else set()
    lines = ["graph instance {"]
    lines.extend(comments)
    for lab in g.labels:
        lines.append(f'  "{lab}";')
    seen = set()
    for u, v in g.edges():
        seen.add((u, v))
        style = " [style=bold]" if (u, v) in tree_pairs else ""
        lines.append(f'  "{g.labels[u]}" -- "{g.labels[v]}"{style};')
    for u, v in sorted(tree_pairs - seen):
        lines.append(f'  "{g.labels[u]}" -- "{g.labels[v]}" [style=bold];')
    lines.append("}")
    return "\n".join(lines) + "\n"
