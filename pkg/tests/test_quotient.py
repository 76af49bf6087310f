import pytest

from regcover.atoms import Atom, find_atoms
from regcover.blocks import block_tree
from regcover.errors import GraphError
from regcover.fixtures import (complete, cube, cycle, dipole,
                               star_pendants, theta, with_pendants)
from regcover.graph import (GraphBuilder, HALVABLE, SubgraphRef, UNDIRECTED,
                            is_cycle, is_path_with_two_halfedges, normalize)
from regcover.groups import Group, automorphism_group, semiregular_subgroups
from regcover.iso import are_isomorphic, canonical_form
from regcover.quotient import (all_quotients, atom_projection_type,
                               atom_quotients, expand_step, expansion_chain,
                               quotient, regular_cover_test)
from regcover.reduction import reduce_step, reduction_series


def _sub_with_vertex_map(g, order, wanted):
    for s in semiregular_subgroups(g, order=order):
        if any(p.vertex_map() == wanted for p in s):
            return s
    raise AssertionError("no such subgroup")


def test_c6_rotation_quotients():
    g = cycle(6)
    rot3 = _sub_with_vertex_map(
        g, 2, {f"v{i}": f"v{(i + 3) % 6}" for i in range(6)})
    q = quotient(g, rot3)
    assert is_cycle(q.result) and q.result.n_vertices == 3
    rot2 = _sub_with_vertex_map(
        g, 3, {f"v{i}": f"v{(i + 2) % 6}" for i in range(6)})
    q = quotient(g, rot2)
    assert is_cycle(q.result) and q.result.n_vertices == 2
    assert q.result.n_edges == 2


def test_icosahedron_antipodal_quotient_is_k6():
    from regcover.fixtures import icosahedron
    g = icosahedron()
    found = [q for q in all_quotients(g) if q.n_vertices == 6]
    assert len(found) == 1
    assert are_isomorphic(found[0], complete(6)) is not None


def test_cube_antipodal_quotient_is_k4():
    g = cube()
    anti = _sub_with_vertex_map(
        g, 2, {v: format(7 - int(v, 2), "03b") for v in g.vertex_list})
    q = quotient(g, anti)
    assert are_isomorphic(q.result, complete(4)) is not None


def test_c4_halvable_reflection_quotient():
    g = cycle(4, HALVABLE)
    refl = _sub_with_vertex_map(
        g, 2, {"v0": "v1", "v1": "v0", "v2": "v3", "v3": "v2"})
    q = quotient(g, refl)
    assert is_path_with_two_halfedges(q.result)
    assert q.result.n_vertices == 2


def test_quotient_rejects_non_semiregular():
    g = cycle(6)
    aut = automorphism_group(g)
    refl = next(p for p in aut if p.vertex_map() == {
        "v0": "v0", "v1": "v5", "v2": "v4", "v3": "v3", "v4": "v2", "v5": "v1"})
    grp = Group(g, [aut.elements[aut.identity_index], refl])
    with pytest.raises(GraphError) as err:
        quotient(g, grp)
    assert "fixes vertex" in str(err.value)


def test_fiber_law_and_equivariance():
    for g in (cycle(6), cube(), theta(2, 2, 2, edge_type=HALVABLE)):
        for gamma in semiregular_subgroups(g):
            q = quotient(g, gamma)
            for target in q.result.vertex_list:
                fiber = [v for v in g.vertex_list if q.vertex_map[v] == target]
                assert len(fiber) == gamma.order
            for target in q.result.dart_list:
                fiber = [h for h in g.dart_list if q.dart_map[h] == target]
                assert len(fiber) == gamma.order
            for p in gamma:
                dm = p.dart_map()
                assert all(q.dart_map[dm[h]] == q.dart_map[h]
                           for h in g.dart_list)


def test_atom_projection_types():
    g = theta(2, 2, 2, edge_type=HALVABLE)
    atoms = find_atoms(g)
    aut = automorphism_group(g)
    trivial = Group(g, [aut.elements[aut.identity_index]])
    assert all(atom_projection_type(a, trivial) == "edge" for a in atoms)
    swap = next(s for s in semiregular_subgroups(g, order=2)
                if all(p.is_identity or p.vertex_map()["u"] == "v"
                       and p.vertex_map()["x0_0"] == "x0_1" for p in s))
    assert all(atom_projection_type(a, swap) == "half" for a in atoms)


def test_atom_projection_loop_case():
    # the swap exchanges the two short arms (loop-projection: each is mapped
    # off itself with its boundary vertices in one fiber) and reverses the
    # long arm in place (half-projection)
    g = theta(1, 1, 2, edge_type=HALVABLE)
    atoms = find_atoms(g)
    short = [a for a in atoms if len(a.ref.vertices) == 3]
    long = [a for a in atoms if len(a.ref.vertices) == 4]
    assert len(short) == 2 and len(long) == 1
    swap = _sub_with_vertex_map(
        g, 2, {"u": "v", "v": "u", "x0_0": "x1_0", "x1_0": "x0_0",
               "x2_0": "x2_1", "x2_1": "x2_0"})
    assert all(atom_projection_type(a, swap) == "loop" for a in short)
    assert atom_projection_type(long[0], swap) == "half"
    q = quotient(g, swap)
    assert q.vertex_map["u"] == q.vertex_map["v"]


def _dipole_atom(colors, types=None):
    host = with_pendants(dipole(colors, types), ["u", "v"])
    (a,) = [x for x in find_atoms(host) if x.kind == "dipole"]
    return a


@pytest.mark.parametrize("e", range(2, 9))
def test_dipole_half_quotient_counts(e):
    qs = atom_quotients(_dipole_atom([0] * e))
    assert len(qs.half_quotients) == e // 2 + 1


def test_dipole_two_plus_two_colors():
    qs = atom_quotients(_dipole_atom([0, 0, 1, 1]))
    assert len(qs.half_quotients) == 4


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_dipole_paired_colors_reach_bound(k):
    colors = [i for i in range(k) for _ in range(2)]
    qs = atom_quotients(_dipole_atom(colors))
    assert len(qs.half_quotients) == 2 ** k == 2 ** (len(colors) // 2)


def test_dipole_half_quotient_upper_bound():
    for colors in ([0, 0, 0], [0, 0, 1], [0, 1, 2, 2], [0, 0, 1, 1, 2]):
        qs = atom_quotients(_dipole_atom(colors))
        assert len(qs.half_quotients) <= 2 ** (len(colors) // 2)


def test_dipole_loop_quotient():
    qs = atom_quotients(_dipole_atom([0, 0, 0]))
    lg, m = qs.loop_quotient
    assert lg.n_vertices == 1
    assert all(lg.edge_kind(h) == "loop" for h, k in lg.edges)


def test_path_atom_half_quotient():
    a = find_atoms(theta(2, 2, 2, edge_type=HALVABLE))[0]
    qs = atom_quotients(a)
    assert len(qs.half_quotients) == 1
    hq, w = qs.half_quotients[0]
    assert hq.n_vertices == 2 and len(hq.halfedges) == 1


def test_planar_proper_atoms_have_at_most_two_half_quotients():
    cases = []
    cases.append(find_atoms(theta(2, 2, 2, edge_type=HALVABLE))[0])
    cases.append(find_atoms(theta(1, 1, 1, edge_type=HALVABLE))[0])
    # K4 minus an edge and the cube minus an edge, boundary at the gap
    for builder, gap, nv in ((complete(4, HALVABLE), ("v0", "v1"), 4),
                             (cube(HALVABLE), ("000", "001"), 8)):
        g = builder
        drop = next((h, k) for h, k in g.edges
                    if {g.vertex_of(h), g.vertex_of(k)} == set(gap))
        keep = g.darts - set(drop)
        gg = SubgraphRef(g, keep, g.vertices).to_graph()
        cases.append(Atom(SubgraphRef(gg, gg.darts, gg.vertices), "proper", gap))
    counts = [len(atom_quotients(a).half_quotients) for a in cases]
    assert counts == [1, 0, 1, 2]
    assert all(c <= 2 for c in counts)


def test_expand_no_halfedges_unique():
    g = theta(2, 2, 2, edge_type=HALVABLE)
    step = reduce_step(g)
    out = expand_step(step.target, step)
    assert len(out) == 1
    assert are_isomorphic(out[0], g) is not None


def test_expand_halfedge_choices():
    # one colored half-edge of the 2+2 dipole class gives 4 expansions
    host = with_pendants(dipole([0, 0, 1, 1]), ["u", "v"])
    step = reduce_step(host)
    (cls,) = [c for c in step.classes if c.kind == "dipole"]
    assert cls.symmetry == "halvable"
    b = GraphBuilder().vertex("w")
    b.halfedge("h", "w", color=cls.color)
    b.pendant("p0", "w").pendant("p1", "w")
    h_next = b.build()
    out = expand_step(h_next, step)
    assert len(out) == 4
    forms = {canonical_form(x) for x in out}
    assert len(forms) == 4


def test_expand_rejects_wrong_sites():
    g = star_pendants(2)
    step = reduce_step(g)
    (cls,) = step.classes
    b = GraphBuilder().vertex("w").loop("l", "w", color=cls.color)
    with pytest.raises(GraphError):
        expand_step(b.build(), step)


def test_expansion_chain_matches_direct_quotient():
    g = theta(2, 2, 2, edge_type=HALVABLE)
    series = reduction_series(g)
    g_r = series.graphs[-1]
    for gamma in semiregular_subgroups(g_r):
        h_r = quotient(g_r, gamma).result
        levels = expansion_chain(h_r, series)
        finals = {canonical_form(x) for x in levels[-1]}
        direct = set()
        for gam in semiregular_subgroups(g):
            q = quotient(g, gam).result
            direct.add(canonical_form(q))
        assert finals <= direct


def test_all_quotients_k2_variants():
    k2h = dipole([0], [HALVABLE])
    qs = all_quotients(k2h)
    assert len(qs) == 2
    shapes = sorted((q.n_vertices, len(q.halfedges)) for q in qs)
    assert shapes == [(1, 1), (2, 0)]
    k2u = dipole([0], [UNDIRECTED])
    assert len(all_quotients(k2u)) == 1


def test_all_quotients_c6_shapes():
    qs = all_quotients(cycle(6))
    assert len(qs) == 4
    sizes = sorted(q.n_vertices for q in qs)
    assert sizes == [1, 2, 3, 6]
    assert all(is_cycle(q) for q in qs)


def test_all_quotients_cube_counts():
    assert len(all_quotients(cube())) == 5
    assert len(all_quotients(cube(HALVABLE))) == 11


def test_oracle_equivalence_sample():
    for name, g in [("theta222h", theta(2, 2, 2, edge_type=HALVABLE)),
                    ("C6pend", with_pendants(cycle(6),
                                             [f"v{i}" for i in range(6)])),
                    ("D22", dipole([0, 0, 1, 1]))]:
        g = normalize(g)
        bf = {canonical_form(q) for q in all_quotients(g, "bruteforce")}
        red = {canonical_form(q) for q in all_quotients(g, "reduction")}
        assert bf == red, name


def test_deep_chain_oracle_equivalence():
    # four reduction levels mixing proper atoms and dipoles, symmetric and
    # halvable classes
    from regcover.fixtures import lens_theta
    g = lens_theta()
    series = reduction_series(g)
    assert series.depth == 4
    assert [cls.symmetry for step in series.steps
            for cls in step.classes] == ["symmetric", "halvable", "halvable",
                                         "halvable"]
    bf = {canonical_form(q, max_vertices=14)
          for q in all_quotients(g, "bruteforce", max_vertices=14)}
    red = {canonical_form(q, max_vertices=14)
           for q in all_quotients(g, "reduction", max_vertices=14)}
    assert bf == red


def test_directed_loop_expansion():
    # the flipped arm pair reduces to two opposite directed class edges;
    # quotients pair them into a directed colored loop whose expansion is
    # the arm's loop-quotient
    from regcover.fixtures import antisymmetric_arm_pair
    g = antisymmetric_arm_pair()
    series = reduction_series(g)
    assert [cls.symmetry for step in series.steps
            for cls in step.classes] == ["asymmetric", "halvable"]
    step0 = series.steps[0]
    swap = next(s for s in semiregular_subgroups(step0.target, order=2))
    h1 = quotient(step0.target, swap).result
    colored_loops = [h for h, k in h1.edges
                     if h1.edge_kind(h) == "loop"
                     and h1.color[h] == step0.classes[0].color]
    assert colored_loops and h1.edge_type[colored_loops[0]] == "directed"
    (h0,) = expand_step(h1, step0)
    direct = quotient(g, next(
        s for s in semiregular_subgroups(g, order=2))).result
    assert canonical_form(h0) == canonical_form(direct)


def test_block_structure_preserved_in_expansion():
    g = theta(2, 2, 2, edge_type=HALVABLE)
    series = reduction_series(g)
    step = series.steps[0]
    for gamma in semiregular_subgroups(step.target):
        h_next = quotient(step.target, gamma).result
        for h in expand_step(h_next, step):
            bt_next = block_tree(h_next)
            bt_exp = block_tree(h)
            site_colors = {cls.color for cls in step.classes}
            for ref in bt_next.blocks:
                common = {d for d in ref.darts
                          if h_next.color[d] not in site_colors}
                if not common:
                    continue
                hosts = [b for b in bt_exp.blocks if common <= b.darts]
                assert len(hosts) == 1


def test_regular_cover_examples():
    assert regular_cover_test(cube(), cube()) is not None
    w = regular_cover_test(cube(), complete(4))
    assert w is not None and w.order == 2
    assert regular_cover_test(complete(4), cube()) is None
    assert regular_cover_test(cycle(6), cycle(4)) is None
    assert regular_cover_test(cycle(6), cycle(3)) is not None
