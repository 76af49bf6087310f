"""Reduction series: repeatedly replace all atoms by colored typed edges.

Isomorphic atoms (boundary mapped setwise) share a fresh color.  The edge
type records the symmetry type: halvable atoms become halvable edges,
symmetric ones undirected edges, asymmetric ones directed edges with a
class-consistent orientation.  Block atoms become colored pendant edges.

The induced map on automorphisms (identity outside atom interiors,
replacement edges following the atom action) is a surjective group
homomorphism whose kernel is the direct product of the pointwise boundary
stabilizers of the replaced atoms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .atoms import (ASYMMETRIC_SYM, HALVABLE_SYM, Atom, PrimitiveClass,
                    classify_primitive, find_atoms, ordered_boundary)
from .blocks import block_tree
from .errors import GraphError
from .graph import (DIRECTED, HALVABLE, UNDIRECTED, Graph, normalize,
                    require_standard_input)
from .groups import (MAX_GROUP_ORDER, Group, Permutation, automorphism_group,
                     fix_group_order)

COLOR_BASE = 1 << 16   # reduction colors start here
COLOR_STRIDE = 256     # fresh colors are allocated in blocks of this size


def allocate_colors(g, count):
    """Fresh deterministic colors: the next COLOR_STRIDE boundary above both
    COLOR_BASE and every color already used in the graph."""
    top = max(g.color.values(), default=-1)
    start = max(COLOR_BASE, ((top // COLOR_STRIDE) + 1) * COLOR_STRIDE)
    return list(range(start, start + count))


@dataclass
class AtomClass:
    color: int
    kind: str
    symmetry: str
    form: bytes                  # boundary-marked canonical form
    rep: Atom
    rep_graph: Graph             # standalone copy of the representative
    rep_boundary: tuple          # ordered; tail-role first for asymmetric
    members: tuple


@dataclass
class Replacement:
    atom: Atom
    cls: AtomClass
    darts: tuple                 # new darts, one per boundary slot (+ free end)
    dart_vertices: tuple         # endpoint of each new dart (None = free)


@dataclass
class ReductionStep:
    source: Graph
    target: Graph
    classes: tuple
    replacements: tuple
    _by_darts: dict = field(default_factory=dict, repr=False)

    def replacement_for(self, dartset):
        return self._by_darts.get(frozenset(dartset))


def reduce_step(g, bt=None):
    require_standard_input(g, "reduce_step")
    if normalize(g) != g:
        raise GraphError("reduce_step requires a normalized graph")
    if bt is None:
        bt = block_tree(g)
    atoms = find_atoms(g, bt)
    if not atoms:
        raise GraphError("graph is primitive; nothing to reduce")

    by_form = {}
    for a in atoms:
        by_form.setdefault(a.form(), []).append(a)
    forms = sorted(by_form)
    colors = allocate_colors(g, len(forms))

    classes = []
    for color, form in zip(colors, forms):
        members = by_form[form]
        members.sort(key=lambda a: (min(a.ref.vertices), min(a.ref.darts)))
        rep = members[0]
        classes.append(AtomClass(
            color=color, kind=rep.kind, symmetry=rep.symmetry, form=form,
            rep=rep, rep_graph=rep.as_graph(),
            rep_boundary=ordered_boundary(rep), members=tuple(members)))

    removed_darts = set()
    removed_vertices = set()
    for a in atoms:
        removed_darts |= a.ref.darts
        removed_vertices |= a.interior_vertices

    keep = g.darts - removed_darts
    darts = set(keep)
    vertices = g.vertices - removed_vertices
    pairing = {h: g.pairing[h] for h in keep}
    incidence = {h: v for h, v in g.incidence.items()
                 if h in keep and v in vertices}
    edge_type = {h: t for h, t in g.edge_type.items() if h in keep}
    color_map = {h: c for h, c in g.color.items() if h in keep}
    tails = set(g.tails & keep)

    replacements = []
    for cls in classes:
        for i, a in enumerate(cls.members):
            name = f"r{cls.color}i{i}"
            d1, d2 = f"{name}.1", f"{name}.2"
            darts.update((d1, d2))
            pairing[d1], pairing[d2] = d2, d1
            color_map[d1] = color_map[d2] = cls.color
            if a.is_block:
                (u,) = a.boundary
                incidence[d1] = u
                edge_type[d1] = edge_type[d2] = UNDIRECTED
                replacements.append(Replacement(a, cls, (d1, d2), (u, None)))
            else:
                bu, bv = ordered_boundary(a)
                incidence[d1], incidence[d2] = bu, bv
                if cls.symmetry == HALVABLE_SYM:
                    et = HALVABLE
                elif cls.symmetry == ASYMMETRIC_SYM:
                    et = DIRECTED
                    tails.add(d1)
                else:
                    et = UNDIRECTED
                edge_type[d1] = edge_type[d2] = et
                replacements.append(Replacement(a, cls, (d1, d2), (bu, bv)))

    target = Graph(darts, vertices, pairing, incidence, edge_type,
                   color_map, tails)
    if target.n_darts >= g.n_darts:
        raise GraphError("reduction step failed to shrink the graph")
    step = ReductionStep(g, target, tuple(classes), tuple(replacements))
    step._by_darts = {r.atom.ref.darts: r for r in replacements}
    return step


@dataclass
class ReductionTreeNode:
    label: str
    level: int
    atom: Atom | None
    color: int | None
    children: list


@dataclass
class ReductionSeries:
    graphs: tuple            # G_0 .. G_r
    steps: tuple             # steps[i]: G_i -> G_{i+1}
    primitive: PrimitiveClass
    tree: ReductionTreeNode

    @property
    def depth(self):
        return len(self.steps)


def reduction_series(g):
    require_standard_input(g, "reduction_series")
    if normalize(g) != g:
        raise GraphError("reduction_series requires a normalized graph")
    graphs = [g]
    steps = []
    current = g
    while True:
        bt = block_tree(current)
        if not find_atoms(current, bt):
            primitive = classify_primitive(current, bt)
            break
        step = reduce_step(current, bt)
        steps.append(step)
        graphs.append(step.target)
        current = step.target
    tree = _build_tree(graphs, steps)
    return ReductionSeries(tuple(graphs), tuple(steps), primitive, tree)


def _build_tree(graphs, steps):
    r = len(steps)
    root = ReductionTreeNode("primitive", r, None, None, [])
    nodes = {}  # (level, atom dartset) -> node
    for i in reversed(range(r)):
        for rep in steps[i].replacements:
            node = ReductionTreeNode(
                f"atom@{i}", i, rep.atom, rep.cls.color, [])
            nodes[(i, rep.atom.ref.darts)] = node
            # find where the replacement edge ends up
            dartset = frozenset(rep.darts)
            parent = root
            for j in range(i + 1, r):
                hit = None
                for rep2 in steps[j].replacements:
                    if dartset <= rep2.atom.ref.darts:
                        hit = rep2
                        break
                if hit is not None:
                    parent = nodes[(j, hit.atom.ref.darts)]
                    break
            else:
                parent = root
            parent.children.append(node)
    return root


def reduction_epimorphism(step, pi, verify=True):
    """Image of an automorphism of the source on the target graph."""
    g, t = step.source, step.target
    if pi.graph is not g:
        raise GraphError("permutation does not act on the step's source")
    pdart = pi.dart_map()
    pvert = pi.vertex_map()
    dmap = {}
    for h in t.dart_list:
        if h in g.darts:
            img = pdart[h]
            if img not in t.darts:
                raise GraphError("automorphism does not respect the atoms")
            dmap[h] = img
    for rep in step.replacements:
        image_darts = frozenset(pdart[h] for h in rep.atom.ref.darts)
        rep2 = step.replacement_for(image_darts)
        if rep2 is None:
            raise GraphError("automorphism does not permute the atoms")
        for d, v in zip(rep.darts, rep.dart_vertices):
            if v is None:
                free2 = next(dd for dd, vv in
                             zip(rep2.darts, rep2.dart_vertices) if vv is None)
                dmap[d] = free2
            else:
                target_v = pvert[v]
                dmap[d] = next(dd for dd, vv in
                               zip(rep2.darts, rep2.dart_vertices)
                               if vv == target_v)
    vmap = {v: pvert[v] for v in t.vertex_list}
    out = Permutation.from_maps(t, dmap, vmap)
    if verify:
        from .iso import verify_isomorphism
        assert verify_isomorphism(t, t, vmap, dmap)
    return out


@dataclass
class SidecarStep:
    """Expansion-ready view of one reduction level loaded from a sidecar."""
    classes: tuple


def load_sidecar_steps(payload):
    """Rebuild per-level atom classes from a `reduce` JSON sidecar."""
    from .graph import SubgraphRef
    from .textfmt import parse
    if payload.get("version") != 1:
        raise GraphError("unsupported sidecar version")
    steps = []
    for level in payload["levels"]:
        classes = []
        for entry in level["classes"]:
            g = parse(entry["graph"])
            boundary = tuple(entry["boundary"])
            rep = Atom(SubgraphRef(g, g.darts, g.vertices), entry["kind"],
                       boundary)
            classes.append(AtomClass(
                color=entry["color"], kind=entry["kind"],
                symmetry=entry["symmetry"], form=b"", rep=rep, rep_graph=g,
                rep_boundary=boundary, members=()))
        steps.append(SidecarStep(tuple(classes)))
    return steps


def kernel(step, max_order=MAX_GROUP_ORDER):
    """Automorphisms of the source that reduce to the identity."""
    aut = automorphism_group(step.source, max_order=max_order)
    members = [p for p in aut
               if reduction_epimorphism(step, p, verify=False).is_identity]
    return Group(step.source, members, verify=False)


def kernel_order(step):
    """Product of the boundary stabilizer orders over all replaced atoms."""
    out = 1
    for rep in step.replacements:
        out *= fix_group_order(rep.atom)
    return out
