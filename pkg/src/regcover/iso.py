"""Canonical forms and isomorphism testing for half-edge multigraphs.

Isomorphisms act on darts: they must commute with the pairing, preserve
incidence (including definedness), colors, edge types, and the direction of
directed edges.  Optional boundary markings (sets of one or two vertices, or
ordered tuples) must be mapped onto each other.

The canonical form is the lexicographic minimum of a structural encoding
over all vertex orderings consistent with iterated partition refinement;
graphs here are tiny (atoms and quotients), so the plain
individualization-refinement search is enough.
"""

from __future__ import annotations

import itertools

from .errors import SizeLimitError
from .graph import DIRECTED, FREE, HALF, LOOP, PENDANT, STANDARD

MAX_VERTICES = 24

_TYPE_CODE = {"halvable": 0, "undirected": 1, "directed": 2}


# -- static structure ---------------------------------------------------------

def _static(g):
    """Per-dart invariant signature (kind, type, color, direction role)."""
    try:
        return g._iso_static
    except AttributeError:
        pass
    sig = {}
    for h in g.dart_list:
        kind = g.edge_kind(h)
        typ = g.edge_type.get(h)
        role = 0
        if typ == DIRECTED:
            role = 1 if h in g.tails else 2
        sig[h] = (kind, typ or "", g.color[h], role)
    g._iso_static = sig
    return sig


def _free_profile(g):
    """Multiset of items without any defined endpoint."""
    out = []
    for h, k in g.edges:
        if g.edge_kind(h) == FREE:
            out.append(("F", g.edge_type[h], g.color[h]))
    for h in g.halfedges:
        if g.vertex_of(h) is None:
            out.append(("G", g.color[h]))
    return tuple(sorted(out))


def _initial_colors(g, marking, ordered_marking):
    static = _static(g)
    marked = {}
    if ordered_marking:
        for i, v in enumerate(ordered_marking):
            marked[v] = i + 1
    elif marking:
        for v in marking:
            marked[v] = 1
    colors = {}
    for v in g.vertex_list:
        sig = tuple(sorted(static[h] for h in g.darts_at(v)))
        colors[v] = (marked.get(v, 0), sig)
    return colors


def _refine(graph_colors):
    """Jointly refine vertex partitions of several graphs to a stable one.

    graph_colors: list of (graph, {vertex: color}) with arbitrary hashable
    colors.  Returns list of {vertex: int} with class ids comparable across
    the graphs.
    """
    statics = [_static(g) for g, _ in graph_colors]

    def ranked(sig_maps):
        pool = sorted({s for m in sig_maps for s in m.values()})
        rank = {s: i for i, s in enumerate(pool)}
        return [{v: rank[s] for v, s in m.items()} for m in sig_maps]

    current = ranked([dict(cm) for _, cm in graph_colors])
    while True:
        sig_maps = []
        for (g, _), colors, static in zip(graph_colors, current, statics):
            m = {}
            for v in g.vertex_list:
                around = []
                for h in g.darts_at(v):
                    k = g.pairing[h]
                    if k == h:
                        pc = -2  # standalone half-edge
                    else:
                        w = g.vertex_of(k)
                        pc = -1 if w is None else colors[w]
                    around.append((static[h], pc))
                m[v] = (colors[v], tuple(sorted(around)))
            sig_maps.append(m)
        nxt = ranked(sig_maps)
        if nxt == current:
            return current
        current = nxt


# -- canonical form -----------------------------------------------------------

def _encode(g, index, marking, ordered_marking):
    items = []
    for h, k in g.edges:
        kind = g.edge_kind(h)
        t = _TYPE_CODE.get(g.edge_type.get(h), -1)
        c = g.color[h]
        if kind == STANDARD:
            i, j = index[g.vertex_of(h)], index[g.vertex_of(k)]
            tail = 0
            if g.edge_type[h] == DIRECTED:
                ti = index[g.vertex_of(h if h in g.tails else k)]
                tail = 1 if ti == min(i, j) else 2
                if i == j:
                    tail = 1
            items.append((0, min(i, j), max(i, j), t, c, tail))
        elif kind == LOOP:
            items.append((1, index[g.vertex_of(h)], 0, t, c, 0))
        elif kind == PENDANT:
            v = g.vertex_of(h)
            if v is None:
                v = g.vertex_of(k)
            items.append((2, index[v], 0, 0, c, 0))
        else:  # free edge
            items.append((4, 0, 0, t, c, 0))
    for h in g.halfedges:
        v = g.vertex_of(h)
        if v is None:
            items.append((5, 0, 0, 0, g.color[h], 0))
        else:
            items.append((3, index[v], 0, 0, g.color[h], 0))
    mark = ()
    if ordered_marking:
        mark = tuple(index[v] for v in ordered_marking)
    elif marking:
        mark = tuple(sorted(index[v] for v in marking))
    return (len(index), tuple(sorted(items)), mark)


def canonical_form(g, marking=None, ordered_marking=None, max_vertices=MAX_VERTICES):
    """Byte string determined exactly by the (marked) isomorphism class."""
    if g.n_vertices > max_vertices:
        raise SizeLimitError(
            f"canonical form limited to {max_vertices} vertices, got {g.n_vertices}")
    marking = frozenset(marking) if marking else None
    ordered_marking = tuple(ordered_marking) if ordered_marking else None
    key = (marking, ordered_marking)
    cache = getattr(g, "_iso_canon", None)
    if cache is None:
        cache = g._iso_canon = {}
    if key in cache:
        return cache[key]

    base = _initial_colors(g, marking, ordered_marking)
    best = [None]

    def search(forced):
        init = {v: (1, forced.index(v)) if v in forced else (0, base[v])
                for v in g.vertex_list}
        colors = _refine([(g, init)])[0]
        cells = {}
        for v in g.vertex_list:
            if v not in forced:
                cells.setdefault(colors[v], []).append(v)
        big = sorted(c for c, vs in cells.items() if len(vs) > 1)
        if not big:
            order = sorted(g.vertex_list, key=lambda v: colors[v])
            index = {v: i for i, v in enumerate(order)}
            enc = _encode(g, index, marking, ordered_marking)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        for v in sorted(cells[big[0]]):
            search(forced + (v,))

    search(())
    form = repr(best[0]).encode("ascii")
    cache[key] = form
    return form


# -- isomorphism search --------------------------------------------------------

def _pair_profile(g, a, b):
    out = []
    for h in g.darts_at(a):
        k = g.pairing[h]
        if k != h and g.vertex_of(k) == b and a != b:
            typ = g.edge_type[h]
            role = 0
            if typ == DIRECTED:
                role = 1 if h in g.tails else 2
            out.append((typ, g.color[h], role))
    return tuple(sorted(out))


def _self_profile(g, v):
    out = []
    for h in g.darts_at(v):
        k = g.pairing[h]
        kind = g.edge_kind(h)
        if kind == LOOP and h < k:
            out.append(("L", g.edge_type[h], g.color[h]))
        elif kind == PENDANT and g.vertex_of(h) is not None:
            out.append(("P", g.color[h]))
        elif kind == HALF:
            out.append(("H", g.color[h]))
    return tuple(sorted(out))


def _vertex_bijections(g1, g2, marking1, marking2, ordered1, ordered2, pinned):
    if g1.n_vertices != g2.n_vertices or g1.n_darts != g2.n_darts:
        return
    if _free_profile(g1) != _free_profile(g2):
        return
    init1 = _initial_colors(g1, marking1, ordered1)
    init2 = _initial_colors(g2, marking2, ordered2)
    colors1, colors2 = _refine([(g1, init1), (g2, init2)])
    hist1 = sorted(colors1.values())
    hist2 = sorted(colors2.values())
    if hist1 != hist2:
        return
    by_color = {}
    for w in g2.vertex_list:
        by_color.setdefault(colors2[w], []).append(w)
    order = sorted(g1.vertex_list, key=lambda v: (colors1[v], v))
    used = set()
    assignment = {}

    def compatible(v, w):
        if _self_profile(g1, v) != _self_profile(g2, w):
            return False
        for v2, w2 in assignment.items():
            if _pair_profile(g1, v, v2) != _pair_profile(g2, w, w2):
                return False
        return True

    def rec(i):
        if i == len(order):
            yield dict(assignment)
            return
        v = order[i]
        want = pinned.get(v)
        for w in by_color.get(colors1[v], ()):
            if w in used or (want is not None and w != want):
                continue
            if not compatible(v, w):
                continue
            used.add(w)
            assignment[v] = w
            yield from rec(i + 1)
            used.remove(w)
            del assignment[v]

    yield from rec(0)


def _edge_record(g, h, k):
    """(u-side dart, w-side dart) tagged with endpoints for mapping."""
    return (h, k, g.vertex_of(h), g.vertex_of(k))


def _groups_for(g):
    """Items grouped for dart-level matching under a vertex bijection."""
    std, loops, pendants, halves, freeedges, freehalves = {}, {}, {}, {}, {}, {}
    for h, k in g.edges:
        kind = g.edge_kind(h)
        typ = g.edge_type[h]
        c = g.color[h]
        if kind == STANDARD:
            u, w = g.vertex_of(h), g.vertex_of(k)
            tailv = None
            if typ == DIRECTED:
                tailv = u if h in g.tails else w
            a, b = sorted((u, w))
            rel = 0 if tailv is None else (1 if tailv == a else 2)
            std.setdefault((a, b, typ, c, rel), []).append((h, k, u, w))
        elif kind == LOOP:
            v = g.vertex_of(h)
            if typ == DIRECTED:
                pair = (h, k) if h in g.tails else (k, h)
            else:
                pair = (h, k)
            loops.setdefault((v, typ, c), []).append(pair)
        elif kind == PENDANT:
            att, out = (h, k) if g.vertex_of(h) is not None else (k, h)
            pendants.setdefault((g.vertex_of(att), c), []).append((att, out))
        else:  # FREE
            if typ == DIRECTED:
                pair = (h, k) if h in g.tails else (k, h)
            else:
                pair = (h, k)
            freeedges.setdefault((typ, c), []).append(pair)
    for h in g.halfedges:
        v = g.vertex_of(h)
        if v is None:
            freehalves.setdefault(g.color[h], []).append(h)
        else:
            halves.setdefault((v, g.color[h]), []).append(h)
    return std, loops, pendants, halves, freeedges, freehalves


def _dart_variants(g1, g2, vmap):
    """All dart bijections extending a structure-compatible vertex bijection."""
    s1 = _groups_for(g1)
    s2 = _groups_for(g2)
    jobs = []

    def fail():
        return None

    # standard edges
    for key, items in sorted(s1[0].items()):
        a, b, typ, c, rel = key
        ta, tb = sorted((vmap[a], vmap[b]))
        trel = rel
        if rel:
            tailv = vmap[a if rel == 1 else b]
            trel = 1 if tailv == ta else 2
        targets = s2[0].get((ta, tb, typ, c, trel))
        if targets is None or len(targets) != len(items):
            return

        def pairfn(src, dst, _vmap=vmap):
            h, k, u, w = src
            h2, k2, u2, w2 = dst
            m1 = {h: h2, k: k2} if _vmap[u] == u2 else {h: k2, k: h2}
            return [m1]

        jobs.append((items, targets, pairfn))
    # loops
    for key, items in sorted(s1[1].items()):
        v, typ, c = key
        targets = s2[1].get((vmap[v], typ, c))
        if targets is None or len(targets) != len(items):
            return

        def pairfn(src, dst, _typ=typ):
            h, k = src
            h2, k2 = dst
            if _typ == DIRECTED:
                return [{h: h2, k: k2}]
            return [{h: h2, k: k2}, {h: k2, k: h2}]

        jobs.append((items, targets, pairfn))
    # pendants
    for key, items in sorted(s1[2].items()):
        v, c = key
        targets = s2[2].get((vmap[v], c))
        if targets is None or len(targets) != len(items):
            return

        def pairfn(src, dst):
            return [{src[0]: dst[0], src[1]: dst[1]}]

        jobs.append((items, targets, pairfn))
    # attached half-edges
    for key, items in sorted(s1[3].items()):
        v, c = key
        targets = s2[3].get((vmap[v], c))
        if targets is None or len(targets) != len(items):
            return

        def pairfn(src, dst):
            return [{src: dst}]

        jobs.append((items, targets, pairfn))
    # free edges
    for key, items in sorted(s1[4].items()):
        typ, c = key
        targets = s2[4].get(key)
        if targets is None or len(targets) != len(items):
            return

        def pairfn(src, dst, _typ=typ):
            h, k = src
            h2, k2 = dst
            if _typ == DIRECTED:
                return [{h: h2, k: k2}]
            return [{h: h2, k: k2}, {h: k2, k: h2}]

        jobs.append((items, targets, pairfn))
    # free half-edges
    for key, items in sorted(s1[5].items()):
        targets = s2[5].get(key)
        if targets is None or len(targets) != len(items):
            return

        def pairfn(src, dst):
            return [{src: dst}]

        jobs.append((items, targets, pairfn))

    def rec(ji, acc):
        if ji == len(jobs):
            yield dict(acc)
            return
        items, targets, pairfn = jobs[ji]
        for perm in itertools.permutations(targets):
            variant_lists = [pairfn(items[i], perm[i]) for i in range(len(items))]
            for combo in itertools.product(*variant_lists):
                acc2 = dict(acc)
                for part in combo:
                    acc2.update(part)
                yield from rec(ji + 1, acc2)

    yield from rec(0, {})


def isomorphisms_iter(g1, g2, marking1=None, marking2=None,
                      ordered1=None, ordered2=None, pinned=None):
    """Yield (vertex_map, dart_map) pairs for every isomorphism g1 -> g2."""
    pinned = dict(pinned) if pinned else {}
    for vmap in _vertex_bijections(g1, g2, marking1, marking2,
                                   ordered1, ordered2, pinned):
        for dmap in _dart_variants(g1, g2, vmap):
            yield vmap, dmap


def verify_isomorphism(g1, g2, vmap, dmap, marking1=None, marking2=None):
    """Direct check that (vmap, dmap) is a marking-respecting isomorphism."""
    if set(dmap) != set(g1.darts) or set(dmap.values()) != set(g2.darts):
        return False
    if set(vmap) != set(g1.vertices) or set(vmap.values()) != set(g2.vertices):
        return False
    for h in g1.dart_list:
        if dmap[g1.pairing[h]] != g2.pairing[dmap[h]]:
            return False
        v = g1.vertex_of(h)
        w = g2.vertex_of(dmap[h])
        if (v is None) != (w is None) or (v is not None and vmap[v] != w):
            return False
        if g1.color[h] != g2.color[dmap[h]]:
            return False
        if g1.edge_type.get(h) != g2.edge_type.get(dmap[h]):
            return False
        if (h in g1.tails) != (dmap[h] in g2.tails):
            return False
    if marking1 or marking2:
        m1 = frozenset(marking1 or ())
        m2 = frozenset(marking2 or ())
        if frozenset(vmap[v] for v in m1) != m2:
            return False
    return True


def are_isomorphic(g1, g2, marking1=None, marking2=None, max_vertices=MAX_VERTICES):
    """Return a witness dart map, or None.

    The witness is verified by a direct check before being returned.
    """
    if g1.n_vertices > max_vertices or g2.n_vertices > max_vertices:
        raise SizeLimitError(
            f"isomorphism search limited to {max_vertices} vertices")
    if g1 == g2 and frozenset(marking1 or ()) == frozenset(marking2 or ()):
        ident_v = {v: v for v in g1.vertex_list}
        ident_d = {h: h for h in g1.dart_list}
        return ident_d
    for vmap, dmap in isomorphisms_iter(g1, g2, marking1, marking2):
        assert verify_isomorphism(g1, g2, vmap, dmap, marking1, marking2)
        return dmap
    return None


def automorphisms_iter(g, pinned=None, marking=None):
    """Yield (vertex_map, dart_map) for every automorphism of g."""
    yield from isomorphisms_iter(g, g, marking1=marking, marking2=marking,
                                 pinned=pinned)
