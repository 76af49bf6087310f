"""DOT export for graphs, block-trees, and reduction trees."""

from __future__ import annotations

from .blocks import BlockTree
from .graph import DIRECTED, FREE, HALVABLE, LOOP, PENDANT, STANDARD, Graph
from .reduction import ReductionSeries

_STYLE = {HALVABLE: "bold", "undirected": "solid", DIRECTED: "solid"}


def _quote(s):
    return '"' + str(s).replace('"', r'\"') + '"'


def graph_to_dot(g):
    lines = ["digraph G {", "  edge [dir=none];", "  node [shape=circle];"]
    for v in g.vertex_list:
        lines.append(f"  {_quote(v)};")
    anon = [0]

    def stub():
        anon[0] += 1
        name = f"__end{anon[0]}"
        lines.append(f"  {_quote(name)} [shape=point, label=\"\"];")
        return name

    for h, k in g.edges:
        kind = g.edge_kind(h)
        typ = g.edge_type[h]
        attrs = [f"label={_quote(g.color[h])}", f"style={_STYLE[typ]}"]
        if kind == STANDARD:
            u, w = g.vertex_of(h), g.vertex_of(k)
            if typ == DIRECTED:
                if h not in g.tails:
                    u, w = w, u
                attrs.append("dir=forward")
            lines.append(f"  {_quote(u)} -> {_quote(w)} [{', '.join(attrs)}];")
        elif kind == LOOP:
            v = g.vertex_of(h)
            if typ == DIRECTED:
                attrs.append("dir=forward")
            lines.append(f"  {_quote(v)} -> {_quote(v)} [{', '.join(attrs)}];")
        elif kind == PENDANT:
            v = g.vertex_of(h) or g.vertex_of(k)
            lines.append(f"  {_quote(v)} -> {_quote(stub())} [{', '.join(attrs)}];")
        elif kind == FREE:
            lines.append(f"  {_quote(stub())} -> {_quote(stub())} [{', '.join(attrs)}];")
    for h in g.halfedges:
        v = g.vertex_of(h)
        src = _quote(v) if v is not None else _quote(stub())
        lines.append(f"  {src} -> {_quote(stub())} "
                     f"[label={_quote(g.color[h])}, style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def atoms_to_dot(g, atoms):
    """Graph DOT with atom interiors shaded and boundaries doubled."""
    interior = {}
    boundary = set()
    for i, a in enumerate(atoms):
        for v in a.interior_vertices:
            interior[v] = i
        boundary.update(a.boundary)
    base = graph_to_dot(g).splitlines()
    out = [base[0], base[1], base[2]]
    for line in base[3:]:
        v = line.strip().rstrip(";").strip('"')
        if v in interior:
            out.append(f"  {_quote(v)} [style=filled, fillcolor=gray80, "
                       f"xlabel=\"atom {interior[v]}\"];")
            continue
        if v in boundary:
            out.append(f"  {_quote(v)} [shape=doublecircle];")
            continue
        out.append(line)
    return "\n".join(out) + "\n"


def block_tree_to_dot(bt):
    lines = ["graph blocktree {", "  node [shape=box];"]
    for i, ref in enumerate(bt.blocks):
        label = f"block {i} ({len(ref.vertices)}v/{len(ref.darts) // 2}e)"
        if bt.center == ("block", i):
            label += " *center*"
        lines.append(f"  b{i} [label={_quote(label)}];")
    for v in sorted(bt.articulations):
        label = str(v)
        if bt.center == ("articulation", v):
            label += " *center*"
        lines.append(f"  {_quote('a' + str(v))} [shape=circle, label={_quote(label)}];")
    seen = set()
    for node, others in bt._adj.items():
        for other in others:
            key = tuple(sorted((str(node), str(other))))
            if key in seen:
                continue
            seen.add(key)

            def nm(n):
                return f"b{n[1]}" if n[0] == "block" else _quote("a" + str(n[1]))

            lines.append(f"  {nm(node)} -- {nm(other)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def reduction_tree_to_dot(series):
    lines = ["graph reduction {", "  node [shape=box];"]
    counter = [0]

    def walk(node):
        counter[0] += 1
        my = f"n{counter[0]}"
        if node.atom is None:
            label = f"primitive G_{node.level}"
        else:
            label = (f"{node.atom.kind} atom @ level {node.level} "
                     f"(color {node.color})")
        lines.append(f"  {my} [label={_quote(label)}];")
        for child in node.children:
            ch = walk(child)
            lines.append(f"  {my} -- {ch};")
        return my

    walk(series.tree)
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(obj):
    if isinstance(obj, Graph):
        return graph_to_dot(obj)
    if isinstance(obj, BlockTree):
        return block_tree_to_dot(obj)
    if isinstance(obj, ReductionSeries):
        return reduction_tree_to_dot(obj)
    raise TypeError(f"cannot render {type(obj).__name__} as DOT")
