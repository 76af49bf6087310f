"""Automorphism groups as explicit permutation sets on darts.

Groups are stored extensionally; subgroup enumeration works on a cached
multiplication table, so everything downstream (semiregular filtering,
conjugacy classes, quotients) is cheap at desk scale.
"""

from __future__ import annotations

from functools import cached_property

from .errors import GraphError, SizeLimitError
from .graph import HALVABLE
from .iso import automorphisms_iter

MAX_GROUP_ORDER = 200


class Permutation:
    """An automorphism, stored as index tuples over the graph's dart and
    vertex lists."""

    __slots__ = ("graph", "dart_images", "vertex_images", "_hash")

    def __init__(self, graph, dart_images, vertex_images):
        self.graph = graph
        self.dart_images = tuple(dart_images)
        self.vertex_images = tuple(vertex_images)
        self._hash = hash((self.dart_images, self.vertex_images))

    @classmethod
    def from_maps(cls, graph, dart_map, vertex_map):
        didx = {h: i for i, h in enumerate(graph.dart_list)}
        vidx = {v: i for i, v in enumerate(graph.vertex_list)}
        return cls(graph,
                   tuple(didx[dart_map[h]] for h in graph.dart_list),
                   tuple(vidx[vertex_map[v]] for v in graph.vertex_list))

    @classmethod
    def identity(cls, graph):
        return cls(graph, range(len(graph.dart_list)),
                   range(len(graph.vertex_list)))

    def dart(self, h):
        g = self.graph
        return g.dart_list[self.dart_images[g.dart_list.index(h)]]

    def vertex(self, v):
        g = self.graph
        return g.vertex_list[self.vertex_images[g.vertex_list.index(v)]]

    def dart_map(self):
        dl = self.graph.dart_list
        return {dl[i]: dl[j] for i, j in enumerate(self.dart_images)}

    def vertex_map(self):
        vl = self.graph.vertex_list
        return {vl[i]: vl[j] for i, j in enumerate(self.vertex_images)}

    @property
    def is_identity(self):
        return (all(i == j for i, j in enumerate(self.dart_images))
                and all(i == j for i, j in enumerate(self.vertex_images)))

    def compose(self, other):
        """self after other: (self * other)(x) = self(other(x))."""
        return Permutation(
            self.graph,
            tuple(self.dart_images[i] for i in other.dart_images),
            tuple(self.vertex_images[i] for i in other.vertex_images))

    def inverse(self):
        di = [0] * len(self.dart_images)
        vi = [0] * len(self.vertex_images)
        for i, j in enumerate(self.dart_images):
            di[j] = i
        for i, j in enumerate(self.vertex_images):
            vi[j] = i
        return Permutation(self.graph, di, vi)

    @property
    def is_involution(self):
        return not self.is_identity and self.compose(self).is_identity

    def semiregularity_violation(self):
        """None, or a string explaining the non-trivial stabilizer."""
        if self.is_identity:
            return None
        g = self.graph
        for i, j in enumerate(self.vertex_images):
            if i == j:
                return f"fixes vertex {g.vertex_list[i]!r}"
        for i, j in enumerate(self.dart_images):
            if i == j:
                return f"fixes dart {g.dart_list[i]!r}"
        for i, j in enumerate(self.dart_images):
            h = g.dart_list[i]
            if g.dart_list[j] == g.pairing[h] and h != g.pairing[h]:
                if g.edge_type.get(h) != HALVABLE:
                    return (f"swaps the darts of non-halvable edge "
                            f"{h!r}/{g.pairing[h]!r}")
        return None

    def __eq__(self, other):
        return (isinstance(other, Permutation)
                and self.dart_images == other.dart_images
                and self.vertex_images == other.vertex_images)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return ((self.vertex_images, self.dart_images)
                < (other.vertex_images, other.dart_images))

    def __repr__(self):
        return f"Permutation({self.vertex_map()})"


class Group:
    """A closed set of automorphisms of one graph, identity included."""

    def __init__(self, graph, perms, verify=True):
        self.graph = graph
        self.elements = tuple(sorted(set(perms)))
        if not any(p.is_identity for p in self.elements):
            raise GraphError("group must contain the identity")
        if verify:
            self.check_closure()

    def check_closure(self):
        pool = set(self.elements)
        for a in self.elements:
            if a.inverse() not in pool:
                raise GraphError("group not closed under inverse")
            for b in self.elements:
                if a.compose(b) not in pool:
                    raise GraphError("group not closed under composition")

    @property
    def order(self):
        return len(self.elements)

    @property
    def is_trivial(self):
        return self.order == 1

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p):
        return p in set(self.elements)

    def __eq__(self, other):
        return (isinstance(other, Group) and self.graph is other.graph
                and self.elements == other.elements)

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Group(order={self.order})"

    @cached_property
    def _index(self):
        return {p: i for i, p in enumerate(self.elements)}

    @cached_property
    def identity_index(self):
        return next(i for i, p in enumerate(self.elements) if p.is_identity)

    @cached_property
    def table(self):
        """table[i][j] = index of elements[i] * elements[j]."""
        idx = self._index
        return [
            tuple(idx[a.compose(b)] for b in self.elements)
            for a in self.elements
        ]

    @cached_property
    def inverse_indices(self):
        idx = self._index
        return tuple(idx[p.inverse()] for p in self.elements)

    @cached_property
    def semiregular_flags(self):
        return tuple(p.semiregularity_violation() is None for p in self.elements)

    def subgroup(self, indices):
        return Group(self.graph, [self.elements[i] for i in indices], verify=False)


def automorphism_group(g, max_order=MAX_GROUP_ORDER):
    """The full color/type/direction-preserving automorphism group."""
    perms = []
    for vmap, dmap in automorphisms_iter(g):
        perms.append(Permutation.from_maps(g, dmap, vmap))
        if max_order is not None and len(perms) > max_order:
            raise SizeLimitError(
                f"automorphism group exceeds the limit of {max_order}")
    return Group(g, perms, verify=False)


def count_automorphisms(g, limit=None):
    n = 0
    for _ in automorphisms_iter(g):
        n += 1
        if limit is not None and n > limit:
            raise SizeLimitError(f"more than {limit} automorphisms")
    return n


def is_semiregular(grp):
    """No non-identity element stabilizes a vertex or dart; an edge may be
    fixed setwise only when halvable and dart-swapped."""
    return all(grp.semiregular_flags)


def semiregular_violations(grp):
    out = []
    for p, ok in zip(grp.elements, grp.semiregular_flags):
        if not ok:
            out.append((p, p.semiregularity_violation()))
    return out


def _close_indices(table, seed, allowed=None):
    """Subgroup generated by `seed` in index space; None if it ever leaves
    `allowed`."""
    members = set(seed)
    if allowed is not None and not members <= allowed:
        return None
    frontier = list(seed)
    while frontier:
        nxt = []
        for x in frontier:
            row = table[x]
            for y in tuple(members):
                for z in (row[y], table[y][x]):
                    if z not in members:
                        if allowed is not None and z not in allowed:
                            return None
                        members.add(z)
                        nxt.append(z)
        frontier = nxt
    return frozenset(members)


def _coset_representatives(table, s, n):
    """One element from each left coset xS other than S itself."""
    seen = set(s)
    reps = []
    for x in range(n):
        if x in seen:
            continue
        reps.append(x)
        seen.update(table[x][y] for y in s)
    return reps


def all_subgroups(grp, max_order=MAX_GROUP_ORDER):
    """Every subgroup exactly once, by cyclic extension over the mult table.

    Elements of one coset of a subgroup generate the same extension, so
    only coset representatives are tried.
    """
    if grp.order > max_order:
        raise SizeLimitError(
            f"subgroup enumeration limited to groups of order {max_order}")
    table = grp.table
    e = grp.identity_index
    trivial = frozenset({e})
    found = {trivial}
    queue = [trivial]
    while queue:
        s = queue.pop()
        for x in _coset_representatives(table, s, grp.order):
            t = _close_indices(table, s | {x})
            if t not in found:
                found.add(t)
                queue.append(t)
    ordered = sorted(found, key=lambda s: (len(s), tuple(sorted(s))))
    return [grp.subgroup(s) for s in ordered]


def conjugacy_classes_of_subgroups(grp, max_order=MAX_GROUP_ORDER):
    """Subgroups grouped into conjugacy classes, deterministically ordered."""
    subs = all_subgroups(grp, max_order=max_order)
    table = grp.table
    inv = grp.inverse_indices
    index_sets = [frozenset(grp._index[p] for p in s.elements) for s in subs]
    seen = {}
    classes = []
    for si, s in enumerate(index_sets):
        if s in seen:
            continue
        orbit = set()
        for gidx in range(grp.order):
            conj = frozenset(table[table[gidx][x]][inv[gidx]] for x in s)
            orbit.add(conj)
        cls = sorted(orbit, key=lambda t: tuple(sorted(t)))
        for member in cls:
            seen[member] = len(classes)
        classes.append([grp.subgroup(t) for t in cls])
    classes.sort(key=lambda c: (c[0].order, tuple(sorted(
        grp._index[p] for p in c[0].elements))))
    return classes


def subgroup_order_histogram(classes):
    """Order -> number of conjugacy classes of subgroups of that order."""
    hist = {}
    for cls in classes:
        hist[cls[0].order] = hist.get(cls[0].order, 0) + 1
    return hist


def semiregular_subgroups(g, order=None, max_order=MAX_GROUP_ORDER):
    """All semiregular subgroups of Aut(g), optionally of one given order.

    Only semiregular elements can appear in these subgroups, so the lattice
    search is restricted to that subset of Aut(g).
    """
    aut = automorphism_group(g, max_order=max_order)
    table = aut.table
    allowed = frozenset(i for i, ok in enumerate(aut.semiregular_flags) if ok)
    e = aut.identity_index
    trivial = frozenset({e})
    found = {trivial}
    dead = set()
    queue = [trivial]
    while queue:
        s = queue.pop()
        for x in _coset_representatives(table, s, aut.order):
            if x not in allowed:
                continue
            key = s | {x}
            if key in dead:
                continue
            t = _close_indices(table, key, allowed)
            if t is None:
                dead.add(key)
            elif t not in found:
                found.add(t)
                queue.append(t)
    ordered = sorted(found, key=lambda s: (len(s), tuple(sorted(s))))
    out = [aut.subgroup(s) for s in ordered]
    if order is not None:
        out = [s for s in out if s.order == order]
    return out


def orbits(grp, domain="vertices"):
    """Orbit partition, sorted by smallest member."""
    g = grp.graph
    if domain == "vertices":
        items = g.vertex_list
        maps = [p.vertex_map() for p in grp.elements]
    elif domain == "darts":
        items = g.dart_list
        maps = [p.dart_map() for p in grp.elements]
    else:
        raise GraphError(f"unknown orbit domain {domain!r}")
    seen = set()
    out = []
    for x in items:
        if x in seen:
            continue
        orbit = sorted({m[x] for m in maps})
        seen.update(orbit)
        out.append(tuple(orbit))
    return tuple(sorted(out))


def fix_group(atom, max_order=MAX_GROUP_ORDER):
    """Automorphisms of an atom fixing its boundary pointwise."""
    g = atom.as_graph()
    pins = {b: b for b in atom.boundary}
    perms = []
    for vmap, dmap in automorphisms_iter(g, pinned=pins):
        perms.append(Permutation.from_maps(g, dmap, vmap))
        if max_order is not None and len(perms) > max_order:
            raise SizeLimitError(
                f"pointwise boundary stabilizer exceeds {max_order}")
    return Group(g, perms, verify=False)


def fix_group_order(atom):
    """Order of the pointwise boundary stabilizer, without materializing it."""
    g = atom.as_graph()
    pins = {b: b for b in atom.boundary}
    return sum(1 for _ in automorphisms_iter(g, pinned=pins))
