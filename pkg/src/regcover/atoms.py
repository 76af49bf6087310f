"""Atoms: the inclusion-minimal subgraphs replaced during reduction.

Three kinds exist.  Block atoms hang off a single articulation (stars of
pendant-like items, or pendant blocks).  Proper atoms are cut out by a
non-trivial 2-cut inside a block.  Dipoles are maximal bundles of parallel
edges between two vertices of degree at least three.  A graph with no atoms
is primitive: essentially 3-connected, essentially a cycle, K2, or a lone
vertex with at most one pendant-like item.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import block_tree, is_pendant_like
from .errors import GraphError
from .graph import (LOOP, PENDANT, STANDARD, UNDIRECTED, Graph, SubgraphRef,
                    is_connected, is_cycle, normalize, require_standard_input)
from .groups import Permutation
from .iso import automorphisms_iter, canonical_form

STAR_BLOCK = "star_block"
NONSTAR_BLOCK = "nonstar_block"
PROPER = "proper"
DIPOLE = "dipole"

HALVABLE_SYM = "halvable"
SYMMETRIC_SYM = "symmetric"
ASYMMETRIC_SYM = "asymmetric"


class Atom:
    """A detected atom: a subgraph view, its kind, and its boundary."""

    def __init__(self, ref, kind, boundary):
        self.ref = ref
        self.kind = kind
        self.boundary = tuple(sorted(boundary))
        self._graph = None
        self._symmetry = None
        self._form = None

    @property
    def is_block(self):
        return self.kind in (STAR_BLOCK, NONSTAR_BLOCK)

    def as_graph(self):
        if self._graph is None:
            self._graph = self.ref.to_graph()
        return self._graph

    @property
    def interior(self):
        return SubgraphRef(self.ref.parent, self.ref.darts,
                           self.ref.vertices - frozenset(self.boundary))

    @property
    def interior_vertices(self):
        return self.ref.vertices - frozenset(self.boundary)

    def form(self):
        """Canonical form with the boundary marked setwise."""
        if self._form is None:
            self._form = canonical_form(self.as_graph(), marking=self.boundary)
        return self._form

    @property
    def symmetry(self):
        if self._symmetry is None:
            self._symmetry = atom_symmetry_type(self)
        return self._symmetry

    def __repr__(self):
        return (f"Atom({self.kind}, boundary={self.boundary}, "
                f"darts={len(self.ref.darts)})")


def ordered_boundary(atom):
    """Boundary in a canonical order; strict for asymmetric atoms, where
    the first vertex is the tail role."""
    if len(atom.boundary) == 1:
        return atom.boundary
    u, v = atom.boundary
    g = atom.as_graph()
    fu = canonical_form(g, ordered_marking=(u, v))
    fv = canonical_form(g, ordered_marking=(v, u))
    return (u, v) if fu <= fv else (v, u)


def _component_vertex_sets(g, removed):
    """Components of g minus a vertex set, via standard edges."""
    alive = [v for v in g.vertex_list if v not in removed]
    adj = {v: set() for v in alive}
    for h, k in g.edges:
        if g.edge_kind(h) == STANDARD:
            u, w = g.vertex_of(h), g.vertex_of(k)
            if u in adj and w in adj:
                adj[u].add(w)
                adj[w].add(u)
    seen = set()
    comps = []
    for v in alive:
        if v in seen:
            continue
        comp = {v}
        frontier = [v]
        seen.add(v)
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        nxt.append(y)
            frontier = nxt
        comps.append(comp)
    return comps


def _part_for_component(g, cut, comp):
    """Darts of the side subgraph: everything incident to the component."""
    darts = set()
    for v in comp:
        for h in g.darts_at(v):
            darts.add(h)
            darts.add(g.pairing[h])
    return SubgraphRef(g, frozenset(darts), frozenset(comp) | frozenset(cut))


def _block_degree(g, ref, v):
    return sum(1 for h in g.darts_at(v) if h in ref.darts)


def find_atoms(g, bt=None):
    """All atoms of a connected normalized graph, deterministically ordered."""
    require_standard_input(g, "find_atoms")
    if normalize(g) != g:
        raise GraphError("find_atoms requires a normalized graph")
    if bt is None:
        bt = block_tree(g)

    parts = []  # (ref, kind, boundary)

    parents = bt.rooted_parents()
    center = bt.center
    for node in bt.nodes:
        if node == center:
            continue
        ref = bt.part_ref(node, parents)
        if not ref.darts or is_pendant_like(g, ref):
            continue
        if node[0] == "articulation":
            boundary = node[1]
        else:
            parent = parents[node]
            if parent is None:
                continue
            boundary = parent[1]
        parts.append((ref, "block", (boundary,)))

    if center[0] == "articulation":
        # the star of all pendant-like items at the central articulation,
        # admitted when nothing else hangs there
        c = center[1]
        pend, other = [], []
        for node in bt.neighbors(("articulation", c)):
            ref = bt.blocks[node[1]]
            (pend if is_pendant_like(g, ref) else other).append(ref)
        if not other and len(pend) >= 2:
            darts = frozenset().union(*(r.darts for r in pend))
            parts.append((SubgraphRef(g, darts, frozenset((c,))), "block", (c,)))

    central_ref = bt.central_block_ref()
    for block in bt.blocks:
        if len(block.vertices) < 3:
            continue
        bverts = sorted(block.vertices)
        for i in range(len(bverts)):
            for j in range(i + 1, len(bverts)):
                a, b = bverts[i], bverts[j]
                if _block_degree(g, block, a) < 3 or _block_degree(g, block, b) < 3:
                    continue
                inner = [v for v in block.vertices if v not in (a, b)]
                comps_in_block = _component_vertex_sets(
                    block.to_graph(), {a, b})
                if len(comps_in_block) < 2:
                    continue
                for comp in _component_vertex_sets(g, {a, b}):
                    if not (comp & set(inner)):
                        continue
                    ref = _part_for_component(g, (a, b), comp)
                    if central_ref is not None:
                        if central_ref.darts <= ref.darts:
                            continue
                    elif center[1] in comp:
                        continue
                    parts.append((ref, PROPER, (a, b)))

    by_pair = {}
    for h, k in g.edges:
        if g.edge_kind(h) == STANDARD:
            u, w = sorted((g.vertex_of(h), g.vertex_of(k)))
            by_pair.setdefault((u, w), set()).update((h, k))
    for (u, w), darts in sorted(by_pair.items()):
        if len(darts) < 4:
            continue
        if g.degree(u) < 3 or g.degree(w) < 3:
            continue
        parts.append((SubgraphRef(g, frozenset(darts), frozenset((u, w))),
                      DIPOLE, (u, w)))

    # deduplicate, then keep the inclusion-minimal parts
    uniq = {}
    for ref, kind, boundary in parts:
        uniq[(ref.darts, ref.vertices)] = (ref, kind, boundary)
    entries = list(uniq.values())
    atoms = []
    for ref, kind, boundary in entries:
        minimal = True
        for ref2, _, _ in entries:
            if ref2.darts != ref.darts and ref2.darts <= ref.darts:
                minimal = False
                break
        if not minimal:
            continue
        if kind == "block":
            kind = _classify_block_part(g, ref, boundary[0])
        atoms.append(Atom(ref, kind, boundary))

    atoms.sort(key=lambda a: (a.form(), min(a.ref.vertices)))
    return atoms


def _classify_block_part(g, ref, boundary):
    for h in ref.darts:
        kind = g.edge_kind(h)
        if kind == STANDARD:
            return NONSTAR_BLOCK
        v = g.vertex_of(h)
        if v is None:
            v = g.vertex_of(g.pairing[h])
        if v != boundary:
            return NONSTAR_BLOCK
    return STAR_BLOCK


@dataclass(frozen=True)
class PrimitiveClass:
    tag: str                 # not_primitive | three_connected | cycle | k2 | k1
    n: int | None            # cycle length when tag == "cycle"
    center_kind: str         # "block" or "articulation"
    decorated: bool          # pendant-like items attached
    admitted: bool           # shape allowed for an atom-free graph

    @property
    def is_primitive(self):
        return self.tag != "not_primitive"


def strip_pendant_like(g):
    """Remove pendant edges, loops and attached half-edges (vertices stay)."""
    drop = set()
    for h, k in g.edges:
        if g.edge_kind(h) in (PENDANT, LOOP):
            drop.update((h, k))
    for h in g.halfedges:
        drop.add(h)
    if not drop:
        return g
    keep = g.darts - drop
    return Graph(keep, g.vertices, {h: g.pairing[h] for h in keep},
                 {h: v for h, v in g.incidence.items() if h in keep},
                 {h: t for h, t in g.edge_type.items() if h in keep},
                 {h: c for h, c in g.color.items() if h in keep},
                 g.tails & keep)


def decorated_vertices(g):
    out = set()
    for h, k in g.edges:
        if g.edge_kind(h) in (PENDANT, LOOP):
            v = g.vertex_of(h)
            if v is None:
                v = g.vertex_of(k)
            out.add(v)
    for h in g.halfedges:
        if g.vertex_of(h) is not None:
            out.add(g.vertex_of(h))
    return out


def is_three_connected(g):
    if g.n_vertices < 4 or not is_connected(g):
        return False
    if g.halfedges or any(g.edge_kind(h) != STANDARD for h, _ in g.edges):
        return False
    if any(g.degree(v) < 3 for v in g.vertex_list):
        return False
    verts = g.vertex_list
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            comps = _component_vertex_sets(g, {verts[i], verts[j]})
            if len(comps) > 1:
                return False
    return True


def is_essentially_cycle(g):
    return is_cycle(strip_pendant_like(g))


def is_essentially_three_connected(g):
    return is_three_connected(strip_pendant_like(g))


def classify_primitive(g, bt=None):
    require_standard_input(g, "classify_primitive")
    if bt is None:
        bt = block_tree(g)
    if find_atoms(g, bt):
        return PrimitiveClass("not_primitive", None, bt.center[0], False, True)

    core = strip_pendant_like(g)
    deco = decorated_vertices(g)
    n_deco_items = sum(1 for h, k in g.edges
                       if g.edge_kind(h) in (PENDANT, LOOP))
    n_deco_items += sum(1 for h in g.halfedges if g.vertex_of(h) is not None)
    center_kind = bt.center[0]

    if core.n_darts == 0 and core.n_vertices == 1:
        return PrimitiveClass("k1", None, center_kind, bool(deco),
                              n_deco_items <= 1)
    admitted_decoration = (not deco) or len(deco) >= 2
    if core.n_vertices == 2 and core.n_edges == 1:
        return PrimitiveClass("k2", None, center_kind, bool(deco),
                              admitted_decoration)
    if is_cycle(core):
        return PrimitiveClass("cycle", core.n_vertices, center_kind,
                              bool(deco), admitted_decoration)
    if is_three_connected(core):
        return PrimitiveClass("three_connected", None, center_kind,
                              bool(deco), admitted_decoration)
    return PrimitiveClass("unrecognized", None, center_kind, bool(deco), False)


def atom_symmetry_type(a):
    """halvable / symmetric / asymmetric, by brute force over boundary swaps."""
    if a.is_block:
        return SYMMETRIC_SYM
    u, v = a.boundary
    ag = a.as_graph()
    found_swap = False
    for vmap, dmap in automorphisms_iter(ag, pinned={u: v, v: u}):
        found_swap = True
        p = Permutation.from_maps(ag, dmap, vmap)
        if p.is_involution and p.semiregularity_violation() is None:
            return HALVABLE_SYM
    return SYMMETRIC_SYM if found_swap else ASYMMETRIC_SYM


def extended_atom(a):
    """A proper atom with the extra boundary edge uv added."""
    if a.kind != PROPER:
        raise GraphError("extended atom is defined for proper atoms only")
    g = a.as_graph()
    u, v = a.boundary
    name = "plus"
    while f"{name}.1" in g.darts:
        name += "x"
    d1, d2 = f"{name}.1", f"{name}.2"
    pairing = dict(g.pairing)
    pairing[d1], pairing[d2] = d2, d1
    incidence = dict(g.incidence)
    incidence[d1], incidence[d2] = u, v
    edge_type = dict(g.edge_type)
    edge_type[d1] = edge_type[d2] = UNDIRECTED
    color = dict(g.color)
    color[d1] = color[d2] = 0
    return Graph(g.darts | {d1, d2}, g.vertices, pairing, incidence,
                 edge_type, color, g.tails)
