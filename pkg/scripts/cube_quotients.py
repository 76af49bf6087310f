#!/usr/bin/env python3
"""Enumerate all regular quotients of the cube, undirected and halvable.

With plain undirected edges only fixed-edge-free actions count, so the
quotient poset is the rotational part; with halvable edges the reflections
join in and half-edge quotients appear.
"""

from regcover.fixtures import cube
from regcover.graph import HALVABLE, UNDIRECTED
from regcover.quotient import all_quotients


def describe(g):
    loops = sum(1 for h, k in g.edges if g.edge_kind(h) == "loop")
    return (f"{g.n_vertices} vertices, {g.n_edges - loops} edges, "
            f"{loops} loops, {len(g.halfedges)} half-edges")


def main():
    for label, et in (("undirected", UNDIRECTED), ("halvable", HALVABLE)):
        qs = all_quotients(cube(et))
        print(f"cube with {label} edges: {len(qs)} quotients")
        for q in qs:
            print("  " + describe(q))
        print()


if __name__ == "__main__":
    main()
