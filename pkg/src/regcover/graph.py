"""Half-edge multigraph model.

A graph is a set of darts (half-edges) with a pairing involution, a partial
incidence map to vertices, and per-edge color / type / direction data.  Edges
are the pairing orbits of size two; a dart fixed by the pairing is a
standalone half-edge.  Everything downstream (isomorphism, automorphisms,
blocks, atoms, reductions, quotients) works on this one structure.

Graphs are immutable after construction; all functions here are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import GraphError

HALVABLE = "halvable"
UNDIRECTED = "undirected"
DIRECTED = "directed"
EDGE_TYPES = (HALVABLE, UNDIRECTED, DIRECTED)

# Edge kinds derived from pairing/incidence.
STANDARD = "standard"
LOOP = "loop"
PENDANT = "pendant"
FREE = "free"
HALF = "half"


class Graph:
    """Immutable half-edge multigraph.

    darts, vertices: frozensets of string identifiers.
    pairing: involution on darts.
    incidence: partial map dart -> vertex (missing key = free end).
    edge_type: map dart -> type, defined exactly on darts of 2-dart edges,
        equal on both darts of an edge.
    color: map dart -> non-negative int, defined on every dart, equal on
        both darts of an edge.
    tails: the tail dart of every directed edge.
    """

    def __init__(self, darts, vertices, pairing, incidence, edge_type, color,
                 tails=()):
        self.darts = frozenset(darts)
        self.vertices = frozenset(vertices)
        self.pairing = dict(pairing)
        self.incidence = dict(incidence)
        self.edge_type = dict(edge_type)
        self.color = dict(color)
        self.tails = frozenset(tails)

    # -- basic accessors ---------------------------------------------------

    @cached_property
    def dart_list(self):
        return tuple(sorted(self.darts))

    @cached_property
    def vertex_list(self):
        return tuple(sorted(self.vertices))

    @cached_property
    def _darts_at(self):
        at = {v: [] for v in self.vertices}
        for h in self.dart_list:
            v = self.incidence.get(h)
            if v is not None:
                at[v].append(h)
        return {v: tuple(hs) for v, hs in at.items()}

    def darts_at(self, v):
        if v not in self.vertices:
            raise GraphError(f"unknown vertex {v!r}")
        return self._darts_at[v]

    def pair(self, h):
        return self.pairing[h]

    def vertex_of(self, h):
        return self.incidence.get(h)

    def is_halfedge(self, h):
        return self.pairing[h] == h

    def type_of(self, h):
        return self.edge_type.get(h)

    def color_of(self, h):
        return self.color[h]

    def is_tail(self, h):
        return h in self.tails

    @cached_property
    def edges(self):
        """Sorted list of 2-dart edges as ordered (min, max) dart pairs."""
        out = []
        for h in self.dart_list:
            k = self.pairing[h]
            if k != h and h < k:
                out.append((h, k))
        return tuple(out)

    @cached_property
    def halfedges(self):
        return tuple(h for h in self.dart_list if self.pairing[h] == h)

    def edge_kind(self, h):
        k = self.pairing[h]
        if k == h:
            return HALF
        u, w = self.incidence.get(h), self.incidence.get(k)
        if u is not None and w is not None:
            return LOOP if u == w else STANDARD
        if u is None and w is None:
            return FREE
        return PENDANT

    def degree(self, v):
        return len(self.darts_at(v))

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_darts(self):
        return len(self.darts)

    @property
    def n_edges(self):
        return len(self.edges)

    # -- structure ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.darts == other.darts and self.vertices == other.vertices
                and self.pairing == other.pairing
                and self.incidence == other.incidence
                and self.edge_type == other.edge_type
                and self.color == other.color and self.tails == other.tails)

    __hash__ = None

    def __repr__(self):
        return (f"Graph(v={self.n_vertices}, darts={self.n_darts}, "
                f"edges={self.n_edges}, halfedges={len(self.halfedges)})")


@dataclass(frozen=True)
class SubgraphRef:
    """A view into a parent graph: a dart subset plus a vertex subset.

    The dart subset must be closed under the pairing; incidence is implicitly
    restricted to the vertex subset, so darts whose endpoint is outside the
    subset become free ends in the extracted graph.
    """

    parent: Graph
    darts: frozenset
    vertices: frozenset

    @property
    def boundary_darts(self):
        """Darts leaving the view: at a kept vertex but not in the subset."""
        out = []
        for v in sorted(self.vertices):
            for h in self.parent.darts_at(v):
                if h not in self.darts:
                    out.append(h)
        return tuple(out)

    def to_graph(self):
        g = self.parent
        for h in self.darts:
            if g.pairing[h] not in self.darts:
                raise GraphError("dart subset not closed under pairing")
        incidence = {h: v for h, v in g.incidence.items()
                     if h in self.darts and v in self.vertices}
        return Graph(
            self.darts, self.vertices,
            {h: g.pairing[h] for h in self.darts},
            incidence,
            {h: t for h, t in g.edge_type.items() if h in self.darts},
            {h: c for h, c in g.color.items() if h in self.darts},
            self.darts & g.tails,
        )

    def __repr__(self):
        return f"SubgraphRef(darts={len(self.darts)}, vertices={len(self.vertices)})"


class GraphBuilder:
    """Constructs graphs item by item, mirroring the text format.

    Item names become dart names `<name>.1` / `<name>.2`; vertex and item
    identifiers are coerced to strings.
    """

    def __init__(self):
        self._vertices = []
        self._vseen = set()
        self._items = {}

    def vertex(self, name):
        name = str(name)
        if name in self._vseen:
            raise GraphError(f"duplicate vertex {name!r}")
        self._vseen.add(name)
        self._vertices.append(name)
        return self

    def _claim(self, name):
        name = str(name)
        if name in self._items:
            raise GraphError(f"duplicate item name {name!r}")
        return name

    def _need_vertex(self, v):
        v = str(v)
        if v not in self._vseen:
            raise GraphError(f"unknown vertex {v!r}")
        return v

    def edge(self, name, u, v, type=UNDIRECTED, color=0, tail=None):
        name = self._claim(name)
        u, v = self._need_vertex(u), self._need_vertex(v)
        if u == v:
            raise GraphError(f"edge {name!r} endpoints coincide; use loop")
        self._check_dir(name, type, tail, (u, v))
        self._items[name] = ("edge", u, v, type, color, tail)
        return self

    def loop(self, name, v, type=UNDIRECTED, color=0):
        name = self._claim(name)
        v = self._need_vertex(v)
        self._items[name] = ("loop", v, None, type, color, None)
        return self

    def pendant(self, name, v, color=0):
        name = self._claim(name)
        v = self._need_vertex(v)
        self._items[name] = ("pendant", v, None, UNDIRECTED, color, None)
        return self

    def halfedge(self, name, v=None, color=0):
        name = self._claim(name)
        v = self._need_vertex(v) if v is not None else None
        self._items[name] = ("halfedge", v, None, None, color, None)
        return self

    def free(self, name, color=0, type=UNDIRECTED):
        name = self._claim(name)
        self._items[name] = ("free", None, None, type, color, None)
        return self

    @staticmethod
    def _check_dir(name, type, tail, ends):
        if type not in EDGE_TYPES:
            raise GraphError(f"item {name!r}: unknown edge type {type!r}")
        if type == DIRECTED and tail is None:
            raise GraphError(f"directed edge {name!r} needs a tail")
        if type != DIRECTED and tail is not None:
            raise GraphError(f"tail given for non-directed edge {name!r}")
        if tail is not None and str(tail) not in tuple(map(str, ends)):
            raise GraphError(f"edge {name!r}: tail must be one of its ends")

    def build(self):
        darts, pairing, incidence, edge_type, color, tails = set(), {}, {}, {}, {}, set()
        for name in sorted(self._items):
            kind, u, v, typ, col, tail = self._items[name]
            col = int(col)
            if col < 0:
                raise GraphError(f"item {name!r}: negative color")
            d1, d2 = f"{name}.1", f"{name}.2"
            if kind == "halfedge":
                darts.add(d1)
                pairing[d1] = d1
                if u is not None:
                    incidence[d1] = u
                color[d1] = col
                continue
            darts.update((d1, d2))
            pairing[d1], pairing[d2] = d2, d1
            color[d1] = color[d2] = col
            if kind == "edge":
                incidence[d1], incidence[d2] = u, v
                edge_type[d1] = edge_type[d2] = typ
                if typ == DIRECTED:
                    tails.add(d1 if str(tail) == u else d2)
            elif kind == "loop":
                incidence[d1] = incidence[d2] = u
                edge_type[d1] = edge_type[d2] = typ
                if typ == DIRECTED:
                    tails.add(d1)
            elif kind == "pendant":
                incidence[d1] = u
                edge_type[d1] = edge_type[d2] = UNDIRECTED
            elif kind == "free":
                edge_type[d1] = edge_type[d2] = typ
                if typ == DIRECTED:
                    tails.add(d1)
        return Graph(darts, self._vseen, pairing, incidence, edge_type, color, tails)


# -- module-level operations -----------------------------------------------

def validate(g):
    """Return the list of invariant violations (empty list = ok)."""
    bad = []
    for h in g.dart_list:
        k = g.pairing.get(h)
        if k not in g.darts:
            bad.append(f"pairing of {h!r} leaves the dart set")
        elif g.pairing.get(k) != h:
            bad.append(f"pairing not involutive at {h!r}")
    for h, v in sorted(g.incidence.items()):
        if h not in g.darts:
            bad.append(f"incidence on unknown dart {h!r}")
        if v not in g.vertices:
            bad.append(f"dart {h!r} incident to unknown vertex {v!r}")
    for h in g.dart_list:
        if h not in g.color:
            bad.append(f"dart {h!r} has no color")
        elif not isinstance(g.color[h], int) or g.color[h] < 0:
            bad.append(f"dart {h!r} has invalid color {g.color[h]!r}")
    for h in g.tails:
        if h not in g.darts:
            bad.append(f"tail on unknown dart {h!r}")
    for h in g.dart_list:
        k = g.pairing.get(h)
        if k == h:
            if h in g.edge_type:
                bad.append(f"standalone half-edge {h!r} carries an edge type")
            if h in g.tails:
                bad.append(f"standalone half-edge {h!r} marked as tail")
            continue
        if k not in g.darts or h > k:
            continue
        t1, t2 = g.edge_type.get(h), g.edge_type.get(k)
        if t1 is None or t2 is None:
            bad.append(f"edge {h!r}/{k!r} missing edge type")
            continue
        if t1 != t2:
            bad.append(f"edge {h!r}/{k!r} has mismatched types")
        if t1 not in EDGE_TYPES:
            bad.append(f"edge {h!r}/{k!r} has unknown type {t1!r}")
        if g.color.get(h) != g.color.get(k):
            bad.append(f"edge {h!r}/{k!r} has mismatched colors")
        n_tails = (h in g.tails) + (k in g.tails)
        if t1 == DIRECTED and n_tails != 1:
            bad.append(f"directed edge {h!r}/{k!r} needs exactly one tail")
        if t1 != DIRECTED and n_tails:
            bad.append(f"direction on non-directed edge {h!r}/{k!r}")
        kind = g.edge_kind(h)
        if kind == PENDANT and t1 != UNDIRECTED:
            bad.append(f"pendant edge {h!r}/{k!r} must be undirected")
    return bad


def degree(g, v):
    return g.degree(v)


def normalize(g):
    """Turn every degree-1 vertex into a pendant-edge free end.

    The K2 graph is left unchanged, as is a lone vertex carrying a single
    standalone half-edge.  Idempotent; preserves the automorphism group.
    """
    comps = connected_components(g)
    if len(comps) != 1:
        raise GraphError("normalize requires a connected graph")
    drop_vertices = set()
    drop_incidence = set()
    for v in g.vertex_list:
        hs = g.darts_at(v)
        if len(hs) != 1:
            continue
        h = hs[0]
        if g.edge_kind(h) != STANDARD:
            continue
        other = g.vertex_of(g.pair(h))
        if g.n_vertices == 2 and g.degree(other) == 1:
            continue  # K2
        drop_vertices.add(v)
        drop_incidence.add(h)
    if not drop_vertices:
        return g
    return Graph(
        g.darts, g.vertices - drop_vertices, g.pairing,
        {h: v for h, v in g.incidence.items() if h not in drop_incidence},
        g.edge_type, g.color, g.tails,
    )


def connected_components(g):
    """Components as SubgraphRefs; free items each form their own component."""
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for v in g.vertex_list:
        parent[("v", v)] = ("v", v)
    for h in g.dart_list:
        parent[("d", h)] = ("d", h)
    for h in g.dart_list:
        union(("d", h), ("d", g.pairing[h]))
        v = g.vertex_of(h)
        if v is not None:
            union(("d", h), ("v", v))
    groups = {}
    for key in parent:
        groups.setdefault(find(key), []).append(key)
    comps = []
    for members in groups.values():
        dd = frozenset(x for kind, x in members if kind == "d")
        vv = frozenset(x for kind, x in members if kind == "v")
        comps.append(SubgraphRef(g, dd, vv))
    comps.sort(key=lambda c: (min(c.vertices) if c.vertices else "",
                              min(c.darts) if c.darts else ""))
    return comps


def is_connected(g):
    return len(connected_components(g)) == 1


def require_standard_input(g, op):
    """Top-level algorithms take connected graphs with at least one vertex."""
    if not g.vertices:
        raise GraphError(f"{op}: graph has no vertices")
    if not is_connected(g):
        raise GraphError(f"{op}: graph is not connected")


def with_halvable_edges(g):
    """Retype every undirected edge as halvable (directed edges keep their
    orientation); admits quotients with half-edges."""
    types = {h: (HALVABLE if t == UNDIRECTED else t)
             for h, t in g.edge_type.items()}
    return Graph(g.darts, g.vertices, g.pairing, g.incidence, types,
                 g.color, g.tails)


def is_cycle(g):
    """True for cycles C_n (n >= 1; C_1 is a single vertex with a loop)."""
    if g.halfedges or not g.vertices or not is_connected(g):
        return False
    if any(g.edge_kind(h) in (PENDANT, FREE) for h in g.dart_list):
        return False
    return all(g.degree(v) == 2 for v in g.vertices) and g.n_edges == g.n_vertices


def is_path_with_two_halfedges(g):
    """A path of n >= 1 vertices whose two loose ends are half-edges."""
    if len(g.halfedges) != 2 or not g.vertices or not is_connected(g):
        return False
    if any(g.edge_kind(h) in (PENDANT, FREE, LOOP) for h in g.dart_list):
        return False
    if any(g.degree(v) != 2 for v in g.vertices):
        return False
    return g.n_edges == g.n_vertices - 1
