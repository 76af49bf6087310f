import pytest
from hypothesis import given, settings, strategies as st

from regcover.errors import GraphError
from regcover.fixtures import cube, cycle, path_graph
from regcover.graph import (GraphBuilder, connected_components, degree,
                            normalize, validate, Graph)


def test_validate_single_vertex():
    g = GraphBuilder().vertex("v").build()
    assert validate(g) == []
    assert g.n_vertices == 1 and g.n_darts == 0


def test_validate_loop():
    g = GraphBuilder().vertex("v").loop("e", "v").build()
    assert validate(g) == []
    assert g.edge_kind("e.1") == "loop"


def test_validate_rejects_broken_pairing():
    g = GraphBuilder().vertex("v").loop("e", "v").build()
    bad = Graph(g.darts, g.vertices, {"e.1": "e.2", "e.2": "e.2"},
                g.incidence, g.edge_type, g.color)
    assert any("involutive" in v for v in validate(bad))


def test_validate_rejects_direction_on_undirected():
    g = GraphBuilder().vertex("u").vertex("v").edge("e", "u", "v").build()
    bad = Graph(g.darts, g.vertices, g.pairing, g.incidence, g.edge_type,
                g.color, tails={"e.1"})
    assert any("direction" in v for v in validate(bad))


def test_validate_rejects_dangling_vertex():
    g = GraphBuilder().vertex("u").vertex("v").edge("e", "u", "v").build()
    bad = Graph(g.darts, frozenset({"u"}), g.pairing, g.incidence,
                g.edge_type, g.color)
    assert any("unknown vertex" in v for v in validate(bad))


def test_normalize_requires_connected():
    b = GraphBuilder()
    for i in range(3):
        b.vertex(f"a{i}")
    b.vertex("b0")
    for i in range(3):
        b.edge(f"e{i}", f"a{i}", f"a{(i + 1) % 3}")
    with pytest.raises(GraphError):
        normalize(b.build())


def test_validate_rejects_missing_color():
    g = GraphBuilder().vertex("u").vertex("v").edge("e", "u", "v").build()
    colors = dict(g.color)
    del colors["e.2"]
    bad = Graph(g.darts, g.vertices, g.pairing, g.incidence, g.edge_type,
                colors)
    assert any("color" in v for v in validate(bad))


def test_builder_rejects_duplicates_and_bad_tails():
    b = GraphBuilder().vertex("u").vertex("v")
    with pytest.raises(GraphError):
        b.vertex("u")
    with pytest.raises(GraphError):
        b.edge("e", "u", "v", type="directed")
    with pytest.raises(GraphError):
        b.edge("e", "u", "v", tail="u")
    b.edge("e", "u", "v")
    with pytest.raises(GraphError):
        b.edge("e", "u", "v")


def test_degree():
    g = GraphBuilder().vertex("v").loop("e", "v").build()
    assert degree(g, "v") == 2
    g = GraphBuilder().vertex("v").pendant("p", "v").build()
    assert degree(g, "v") == 1
    assert all(degree(cube(), v) == 3 for v in cube().vertex_list)
    with pytest.raises(GraphError):
        degree(g, "nope")


def test_normalize_path():
    g = normalize(path_graph(3))
    assert g.n_vertices == 1
    assert sum(1 for h, k in g.edges if g.edge_kind(h) == "pendant") == 2


def test_normalize_k2_unchanged():
    g = path_graph(2)
    assert normalize(g) == g


def test_normalize_star():
    b = GraphBuilder().vertex("c")
    for i in range(3):
        b.vertex(f"l{i}").edge(f"e{i}", "c", f"l{i}")
    g = normalize(b.build())
    assert g.n_vertices == 1
    assert sum(1 for h, k in g.edges if g.edge_kind(h) == "pendant") == 3


def test_normalize_idempotent_and_preserves_aut():
    from regcover.groups import automorphism_group
    g = path_graph(3)
    n1 = normalize(g)
    assert normalize(n1) == n1
    assert (automorphism_group(g).order
            == automorphism_group(n1).order == 2)


def test_connected_components():
    assert len(connected_components(cycle(6))) == 1
    b = GraphBuilder()
    for i in range(3):
        b.vertex(f"a{i}")
    for i in range(4):
        b.vertex(f"b{i}")
    for i in range(3):
        b.edge(f"ea{i}", f"a{i}", f"a{(i + 1) % 3}")
    for i in range(4):
        b.edge(f"eb{i}", f"b{i}", f"b{(i + 1) % 4}")
    assert len(connected_components(b.build())) == 2
    free = GraphBuilder().free("f").build()
    comps = connected_components(free)
    assert len(comps) == 1 and not comps[0].vertices


names = st.integers(min_value=0, max_value=5)


@st.composite
def graphs(draw):
    b = GraphBuilder()
    n = draw(st.integers(min_value=1, max_value=5))
    for i in range(n):
        b.vertex(f"v{i}")
    n_items = draw(st.integers(min_value=0, max_value=8))
    for j in range(n_items):
        kind = draw(st.sampled_from(["edge", "loop", "pendant", "halfedge",
                                     "free", "freehalf"]))
        color = draw(st.integers(min_value=0, max_value=2))
        v = f"v{draw(names) % n}"
        if kind == "edge" and n >= 2:
            w = f"v{draw(names) % n}"
            if w == v:
                continue
            typ = draw(st.sampled_from(["undirected", "halvable", "directed"]))
            tail = v if typ == "directed" else None
            b.edge(f"e{j}", v, w, type=typ, color=color, tail=tail)
        elif kind == "loop":
            typ = draw(st.sampled_from(["undirected", "halvable"]))
            b.loop(f"e{j}", v, type=typ, color=color)
        elif kind == "pendant":
            b.pendant(f"e{j}", v, color=color)
        elif kind == "halfedge":
            b.halfedge(f"e{j}", v, color=color)
        elif kind == "free":
            b.free(f"e{j}", color=color,
                   type=draw(st.sampled_from(["undirected", "halvable"])))
        elif kind == "freehalf":
            b.halfedge(f"e{j}", None, color=color)
    return b.build()


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_builder_output_always_validates(g):
    assert validate(g) == []


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_dart_count_law(g):
    assert g.n_darts == 2 * g.n_edges + len(g.halfedges)
