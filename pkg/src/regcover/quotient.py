"""Regular quotients, atom quotients, expansion, and the cover decision.

A semiregular group acting on a graph defines the quotient whose vertices
and darts are the orbits.  An edge whose two darts share an orbit collapses
to a standalone half-edge (the acting element swaps its darts, so the edge
is halvable).  Expansion reverses a reduction step on a quotient: colored
edges, loops and half-edges are replaced by the edge-, loop- and
half-quotients of the corresponding atom class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .atoms import HALVABLE_SYM, ordered_boundary
from .errors import GraphError
from .graph import (DIRECTED, HALVABLE, LOOP, PENDANT, STANDARD, Graph,
                    normalize, require_standard_input)
from .groups import (MAX_GROUP_ORDER, Group, Permutation,
                     semiregular_subgroups, semiregular_violations)
from .iso import are_isomorphic, automorphisms_iter, canonical_form
from .reduction import reduction_series


@dataclass
class Quotient:
    source: Graph
    group: Group
    result: Graph
    dart_map: dict
    vertex_map: dict


def quotient(g, gamma):
    require_standard_input(g, "quotient")
    if gamma.graph is not g and gamma.graph != g:
        raise GraphError("group does not act on this graph")
    bad = semiregular_violations(gamma)
    if bad:
        p, why = bad[0]
        raise GraphError(f"group is not semiregular: element {why}")

    dmaps = [p.dart_map() for p in gamma.elements]
    vmaps = [p.vertex_map() for p in gamma.elements]

    dart_rep, vertex_rep = {}, {}
    for h in g.dart_list:
        if h not in dart_rep:
            orbit = sorted({m[h] for m in dmaps})
            for x in orbit:
                dart_rep[x] = orbit[0]
    for v in g.vertex_list:
        if v not in vertex_rep:
            orbit = sorted({m[v] for m in vmaps})
            for x in orbit:
                vertex_rep[x] = orbit[0]

    darts = sorted(set(dart_rep.values()))
    vertices = sorted(set(vertex_rep.values()))
    pairing, incidence, edge_type, color, tails = {}, {}, {}, {}, set()
    for d in darts:
        mate = dart_rep[g.pairing[d]]
        pairing[d] = mate
        v = g.vertex_of(d)
        if v is not None:
            incidence[d] = vertex_rep[v]
        color[d] = g.color[d]
        if mate != d:
            edge_type[d] = g.edge_type[d]
            if d in g.tails:
                tails.add(d)
        else:
            if g.pairing[d] != d and g.edge_type[d] != HALVABLE:
                raise GraphError("non-halvable edge collapsed to a half-edge")

    result = Graph(darts, vertices, pairing, incidence, edge_type, color, tails)
    assert result.n_darts * gamma.order == g.n_darts
    assert result.n_vertices * gamma.order == g.n_vertices
    for v in g.vertex_list:
        images = {dart_rep[h] for h in g.darts_at(v)}
        assert len(images) == g.degree(v), "projection not locally bijective"
    return Quotient(g, gamma, result, dart_rep, vertex_rep)


def atom_projection_type(a, gamma):
    """How a covering projection treats an atom: edge, loop, or half."""
    if a.is_block:
        return "edge"
    u, v = a.boundary
    dartset = a.ref.darts
    half = False
    loop = False
    for p in gamma.elements:
        if p.is_identity:
            continue
        dm = p.dart_map()
        if frozenset(dm[h] for h in dartset) == dartset:
            half = True
            break
        if p.vertex_map()[u] == v:
            loop = True
    if half:
        return "half"
    return "loop" if loop else "edge"


def boundary_swapping_involutions(ag, u, v):
    """Semiregular involutions of an atom graph exchanging its boundary."""
    for vmap, dmap in automorphisms_iter(ag, pinned={u: v, v: u}):
        p = Permutation.from_maps(ag, dmap, vmap)
        if p.is_involution and p.semiregularity_violation() is None:
            yield p


@dataclass
class AtomQuotientSet:
    atom: object
    edge_quotient: tuple        # (graph, ordered boundary vertices)
    loop_quotient: tuple | None  # (graph, merged vertex)
    half_quotients: tuple       # ((graph, image vertex), ...)


def _merge_boundary(g, u, v):
    m = min(u, v)
    other = max(u, v)
    incidence = {h: (m if w == other else w) for h, w in g.incidence.items()}
    return Graph(g.darts, g.vertices - {other}, g.pairing, incidence,
                 g.edge_type, g.color, g.tails), m


def atom_quotients(a):
    """Edge-, loop- and half-quotients of an atom.

    The edge and loop quotients are unique; half-quotients are enumerated
    over boundary-swapping semiregular involutions, deduplicated up to
    isomorphism fixing the image of the boundary.
    """
    ag = a.as_graph()
    if a.is_block:
        return AtomQuotientSet(a, (ag, a.boundary), None, ())
    u, v = a.boundary
    loop_g, merged = _merge_boundary(ag, u, v)
    halves = {}
    ident = Permutation.identity(ag)
    for tau in boundary_swapping_involutions(ag, u, v):
        q = quotient(ag, Group(ag, [ident, tau], verify=False))
        w = q.vertex_map[u]
        key = canonical_form(q.result, marking=(w,))
        if key not in halves:
            halves[key] = (q.result, w)
    half_list = tuple(halves[k] for k in sorted(halves))
    return AtomQuotientSet(a, (ag, ordered_boundary(a)), (loop_g, merged),
                           half_list)


def _class_quotients(cls):
    cached = getattr(cls, "_quotients", None)
    if cached is None:
        cached = atom_quotients(cls.rep)
        cls._quotients = cached
    return cached


def _namespace(host_ids, piece_ids, seed):
    ns = seed
    while any(f"{ns}${x}" in host_ids for x in piece_ids):
        ns += "+"
    return ns


def _substitute(h_next, placements):
    """Remove site items and glue in renamed copies of quotient pieces.

    placements: list of (site_darts, piece_graph, {piece_vertex: host_vertex}).
    """
    removed = set()
    for site_darts, _, _ in placements:
        removed |= set(site_darts)
    darts = set(h_next.darts) - removed
    vertices = set(h_next.vertices)
    pairing = {h: h_next.pairing[h] for h in darts}
    incidence = {h: v for h, v in h_next.incidence.items() if h in darts}
    edge_type = {h: t for h, t in h_next.edge_type.items() if h in darts}
    color = {h: c for h, c in h_next.color.items() if h in darts}
    tails = set(h_next.tails) & darts

    host_ids = darts | vertices | set(h_next.darts)
    for site_darts, piece, attach in placements:
        seed = min(site_darts)
        ns = _namespace(host_ids, set(piece.darts) | set(piece.vertices), seed)

        def vname(x, _a=attach, _ns=ns):
            return _a.get(x, f"{_ns}${x}")

        dname = {d: f"{ns}${d}" for d in piece.darts}
        host_ids |= set(dname.values())
        darts.update(dname.values())
        for d in piece.darts:
            pairing[dname[d]] = dname[piece.pairing[d]]
            color[dname[d]] = piece.color[d]
            if d in piece.edge_type:
                edge_type[dname[d]] = piece.edge_type[d]
            if d in piece.tails:
                tails.add(dname[d])
            pv = piece.vertex_of(d)
            if pv is not None:
                incidence[dname[d]] = vname(pv)
        for pv in piece.vertex_list:
            nv = vname(pv)
            if nv not in vertices:
                vertices.add(nv)
                host_ids.add(nv)

    return Graph(darts, vertices, pairing, incidence, edge_type, color, tails)


def expand_step(h_next, step):
    """All expansions of a quotient of the step's target back one level."""
    classes = {cls.color: cls for cls in step.classes}

    fixed_placements = []
    half_groups = {}
    for h, k in h_next.edges:
        c = h_next.color[h]
        cls = classes.get(c)
        if cls is None:
            continue
        kind = h_next.edge_kind(h)
        quots = _class_quotients(cls)
        if kind == PENDANT:
            if not cls.rep.is_block:
                raise GraphError(
                    f"colored pendant edge of non-block class {c}")
            p = h_next.vertex_of(h)
            if p is None:
                p = h_next.vertex_of(k)
            g_piece, (b,) = quots.edge_quotient
            fixed_placements.append(((h, k), g_piece, {b: p}))
        elif kind == STANDARD:
            if cls.rep.is_block:
                raise GraphError(f"colored standard edge of block class {c}")
            u, w = h_next.vertex_of(h), h_next.vertex_of(k)
            g_piece, (b0, b1) = quots.edge_quotient
            if h_next.edge_type[h] == DIRECTED:
                tailv = u if h in h_next.tails else w
                headv = w if tailv == u else u
                attach = {b0: tailv, b1: headv}
            else:
                attach = {b0: min(u, w), b1: max(u, w)}
            fixed_placements.append(((h, k), g_piece, attach))
        elif kind == LOOP:
            if cls.rep.is_block or quots.loop_quotient is None:
                raise GraphError(f"colored loop of class {c} admits no "
                                 "loop-quotient")
            g_piece, m = quots.loop_quotient
            fixed_placements.append(((h, k), g_piece,
                                     {m: h_next.vertex_of(h)}))
        else:
            raise GraphError(f"unsupported colored item of class {c}")
    for h in h_next.halfedges:
        c = h_next.color[h]
        cls = classes.get(c)
        if cls is None:
            continue
        quots = _class_quotients(cls)
        if cls.rep.is_block or cls.symmetry != HALVABLE_SYM or not quots.half_quotients:
            raise GraphError(
                f"colored half-edge of class {c} admits no half-quotient")
        p = h_next.vertex_of(h)
        if p is None:
            raise GraphError("free colored half-edge in a quotient")
        half_groups.setdefault((c, p), []).append(h)

    group_keys = sorted(half_groups)
    option_lists = []
    for key in group_keys:
        c, p = key
        n_opts = len(_class_quotients(classes[c]).half_quotients)
        count = len(half_groups[key])
        option_lists.append(list(
            itertools.combinations_with_replacement(range(n_opts), count)))

    out = []
    for combo in itertools.product(*option_lists):
        placements = list(fixed_placements)
        for key, choice in zip(group_keys, combo):
            c, p = key
            quots = _class_quotients(classes[c])
            for h, opt in zip(sorted(half_groups[key]), choice):
                g_piece, w = quots.half_quotients[opt]
                placements.append(((h,), g_piece, {w: p}))
        out.append(_substitute(h_next, placements))
    return out


def _dedup_sorted(graphs, max_vertices):
    seen = {}
    for g in graphs:
        key = canonical_form(g, max_vertices=max_vertices)
        if key not in seen:
            seen[key] = g
    return [seen[k] for k in sorted(seen)]


def all_quotients(g, via="bruteforce", max_order=MAX_GROUP_ORDER,
                  max_vertices=None):
    """All regular quotients up to isomorphism, sorted by canonical form."""
    require_standard_input(g, "all_quotients")
    if max_vertices is None:
        from .iso import MAX_VERTICES
        max_vertices = max(MAX_VERTICES, g.n_vertices)
    if via == "bruteforce":
        out = [quotient(g, gamma).result
               for gamma in semiregular_subgroups(g, max_order=max_order)]
        return _dedup_sorted(out, max_vertices)
    if via != "reduction":
        raise GraphError(f"unknown route {via!r}")
    series = reduction_series(g)
    level = all_quotients(series.graphs[-1], "bruteforce",
                          max_order=max_order, max_vertices=max_vertices)
    for step in reversed(series.steps):
        nxt = []
        for h in level:
            nxt.extend(expand_step(h, step))
        level = _dedup_sorted(nxt, max_vertices)
    return level


def expansion_chain(h_r, series):
    """Expand one primitive quotient down every level; list per level."""
    levels = [[h_r]]
    for step in reversed(series.steps):
        nxt = []
        for h in levels[-1]:
            nxt.extend(expand_step(h, step))
        levels.append(_dedup_sorted(nxt, max(24, series.graphs[0].n_vertices)))
    return levels


def regular_cover_test(g, h, max_order=MAX_GROUP_ORDER):
    """None, or a semiregular witness group with g/witness isomorphic to h."""
    for name, gr in (("covering graph", g), ("target graph", h)):
        require_standard_input(gr, name)
        if normalize(gr) != gr:
            raise GraphError(f"{name} is not normalized")
    if g.n_vertices % h.n_vertices:
        return None
    k = g.n_vertices // h.n_vertices
    if g.n_darts != k * h.n_darts:
        return None
    for gamma in semiregular_subgroups(g, order=k, max_order=max_order):
        q = quotient(g, gamma)
        if are_isomorphic(q.result, h) is not None:
            assert are_isomorphic(quotient(g, gamma).result, h) is not None
            return gamma
    return None
