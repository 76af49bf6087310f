"""Block-trees: maximal 2-connected blocks, articulations, and the center.

Bridge edges, pendant edges, loops and attached half-edges all count as
(leaf) blocks, so the same machinery runs on quotients and expansion
intermediates.  The tree center is the central block or central
articulation; a lone vertex has a central articulation by convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphError
from .graph import (LOOP, PENDANT, STANDARD, Graph, SubgraphRef,
                    require_standard_input)


@dataclass(frozen=True)
class BlockTree:
    graph: Graph
    blocks: tuple          # SubgraphRef per block
    articulations: frozenset
    center: tuple          # ("block", index) or ("articulation", vertex)
    _adj: dict = field(compare=False, repr=False)

    @property
    def nodes(self):
        out = [("block", i) for i in range(len(self.blocks))]
        out.extend(("articulation", v) for v in sorted(self.articulations))
        return out

    def neighbors(self, node):
        return self._adj[node]

    def rooted_parents(self):
        """Parent map with edges oriented toward the center."""
        parents = {self.center: None}
        frontier = [self.center]
        while frontier:
            nxt = []
            for node in frontier:
                for other in self._adj[node]:
                    if other not in parents:
                        parents[other] = node
                        nxt.append(other)
            frontier = nxt
        return parents

    def subtree_nodes(self, node, parents=None):
        """The node and everything hanging below it, away from the center."""
        parents = parents or self.rooted_parents()
        out = [node]
        frontier = [node]
        while frontier:
            nxt = []
            for n in frontier:
                for other in self._adj[n]:
                    if parents.get(other) == n:
                        out.append(other)
                        nxt.append(other)
            frontier = nxt
        return out

    def part_ref(self, node, parents=None):
        """Union of the blocks in the subtree at `node`, as a SubgraphRef."""
        darts, vertices = set(), set()
        for n in self.subtree_nodes(node, parents):
            if n[0] == "block":
                ref = self.blocks[n[1]]
                darts |= ref.darts
                vertices |= ref.vertices
        return SubgraphRef(self.graph, frozenset(darts), frozenset(vertices))

    def central_block_ref(self):
        if self.center[0] != "block":
            return None
        return self.blocks[self.center[1]]

    def articulations_on_central_block(self):
        if self.center[0] != "block":
            return ()
        ref = self.blocks[self.center[1]]
        return tuple(sorted(ref.vertices & self.articulations))


def _pendant_like_blocks(g):
    """Each loop, pendant edge, and attached half-edge as its own leaf block."""
    out = []
    for h, k in g.edges:
        kind = g.edge_kind(h)
        if kind == LOOP:
            out.append(SubgraphRef(g, frozenset((h, k)),
                                   frozenset((g.vertex_of(h),))))
        elif kind == PENDANT:
            v = g.vertex_of(h)
            if v is None:
                v = g.vertex_of(k)
            out.append(SubgraphRef(g, frozenset((h, k)), frozenset((v,))))
    for h in g.halfedges:
        v = g.vertex_of(h)
        if v is not None:
            out.append(SubgraphRef(g, frozenset((h,)), frozenset((v,))))
    return out


def is_pendant_like(g, ref):
    """True when the ref is a single pendant edge, loop, or half-edge."""
    if len(ref.vertices) != 1:
        return False
    if len(ref.darts) == 1:
        return True
    if len(ref.darts) == 2:
        h = min(ref.darts)
        return g.edge_kind(h) in (PENDANT, LOOP)
    return False


def block_tree(g):
    require_standard_input(g, "block_tree")

    adj = {v: [] for v in g.vertex_list}
    for h, k in g.edges:
        if g.edge_kind(h) == STANDARD:
            u, w = g.vertex_of(h), g.vertex_of(k)
            adj[u].append((h, w))
            adj[w].append((h, u))  # key both directions by the min dart

    disc, low = {}, {}
    stack = []
    blocks_edges = []
    counter = [0]
    used = set()

    def dfs(v, parent_key):
        counter[0] += 1
        disc[v] = low[v] = counter[0]
        for key, w in adj[v]:
            if key == parent_key or key in used:
                continue
            if w not in disc:
                used.add(key)
                stack.append(key)
                dfs(w, key)
                low[v] = min(low[v], low[w])
                if low[w] >= disc[v]:
                    comp = []
                    while True:
                        e = stack.pop()
                        comp.append(e)
                        if e == key:
                            break
                    blocks_edges.append(comp)
            else:
                used.add(key)
                stack.append(key)
                low[v] = min(low[v], disc[w])

    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 10 * g.n_vertices + 100))
    try:
        root = g.vertex_list[0]
        dfs(root, None)
    finally:
        sys.setrecursionlimit(old)
    assert not stack

    blocks = []
    for comp in blocks_edges:
        darts, vertices = set(), set()
        for h in comp:
            k = g.pairing[h]
            darts.update((h, k))
            vertices.update((g.vertex_of(h), g.vertex_of(k)))
        blocks.append(SubgraphRef(g, frozenset(darts), frozenset(vertices)))
    blocks.extend(_pendant_like_blocks(g))
    blocks.sort(key=lambda r: (min(r.vertices), min(r.darts)))
    blocks = tuple(blocks)

    membership = {v: [] for v in g.vertex_list}
    for i, ref in enumerate(blocks):
        for v in ref.vertices:
            membership[v].append(i)
    articulations = frozenset(v for v, bs in membership.items() if len(bs) >= 2)

    tree_adj = {("block", i): [] for i in range(len(blocks))}
    for v in sorted(articulations):
        node = ("articulation", v)
        tree_adj[node] = []
        for i in membership[v]:
            tree_adj[node].append(("block", i))
            tree_adj[("block", i)].append(node)

    if not blocks:
        # a lone vertex: central articulation by convention
        v = g.vertex_list[0]
        return BlockTree(g, (), frozenset(), ("articulation", v),
                         {("articulation", v): []})

    center = _tree_center(tree_adj)
    return BlockTree(g, blocks, articulations, center, tree_adj)


def _tree_center(adj):
    degree = {n: len(ns) for n, ns in adj.items()}
    alive = set(adj)
    leaves = [n for n, d in degree.items() if d <= 1]
    while len(alive) > 1:
        nxt = []
        for leaf in leaves:
            alive.discard(leaf)
        if len(alive) == 0:
            # two mutually adjacent nodes stripped together: block-trees
            # always have a unique center, so this cannot happen
            raise GraphError("block-tree has no unique center")
        for leaf in leaves:
            for other in adj[leaf]:
                if other in alive:
                    degree[other] -= 1
                    if degree[other] <= 1:
                        nxt.append(other)
        leaves = [n for n in nxt if n in alive]
        if len(alive) > 1 and not leaves:
            raise GraphError("block structure is not a tree")
    return next(iter(alive))


def central_element(g):
    """("block", SubgraphRef) or ("articulation", vertex)."""
    bt = block_tree(g)
    if bt.center[0] == "block":
        return ("block", bt.blocks[bt.center[1]])
    return bt.center


def attached_subgraph(bt, u):
    """G_u: the union of blocks hanging at articulation u of the central block."""
    if bt.center[0] != "block":
        raise GraphError("graph has no central block")
    if u not in bt.articulations_on_central_block():
        raise GraphError(f"{u!r} is not an articulation of the central block")
    parents = bt.rooted_parents()
    node = ("articulation", u)
    return bt.part_ref(node, parents)
