"""Worked examples for each operation, including small trivial cases."""

from __future__ import annotations

import pytest

import oracles
from flagsphere.certification import (
    enumerate_induced_equators,
    has_no_induced_sphere,
    induced_4cycles_containing,
    is_suspension,
    question_1_5_report,
)
from flagsphere.complex import (
    apply_vertex_map,
    boundary_complex,
    cone,
    cross_polytope,
    faces_of_dim,
    from_facets,
    induced,
    is_flag,
    join,
    link,
    minimal_nonfaces,
    suspension,
)
from flagsphere.constructions import diamond
from flagsphere.homology import Field, boundary_matrix, euler_characteristic, lbt_check, rank
from flagsphere.recognition import (
    is_closed_3_manifold,
    is_closed_pseudomanifold,
    is_cycle,
    is_pure,
    verify_shelling,
)
from flagsphere.search import WalkConfig, contract_edge, random_walk, subdivide_edge
from flagsphere.vectors import f_vector, face_vectors


def cycle(n, name="c"):
    labs = [f"{name}{i}" for i in range(n)]
    return from_facets(labs, [[labs[i], labs[(i + 1) % n]] for i in range(n)])


def test_simplex_and_absorption():
    T = from_facets("abc", [["a", "b", "c"]])
    assert f_vector(T) == (1, 3, 3, 1)
    assert from_facets("abc", [["a", "b"], ["a", "b", "c"]]).facet_lists() == [["a", "b", "c"]]
    assert set(faces_of_dim(T, 1)) == {frozenset("ab"), frozenset("ac"), frozenset("bc")}
    with pytest.raises(ValueError):
        faces_of_dim(T, 3)


def test_delta_face_counts(delta):
    assert len(faces_of_dim(delta, 1)) == 45 and len(faces_of_dim(delta, 2)) == 66


def test_diamond2_gamma():
    v = face_vectors(diamond(2))
    assert (v.f, v.h, v.gamma) == ((1, 4, 4), (1, 2, 1), (1, 0))


def test_link_of_facet_is_empty_face(delta):
    L = link(delta, delta.facets[0])
    assert L.facets == (0,) and L.dim == -1 and not L.is_void


def test_induced_examples(delta):
    assert induced(delta, delta.vertex_mask) == delta
    # the link lives on the neighbours, so x3 itself is removed as well
    rest = [v for v in delta.vertices if v not in ("x3", "y3", "z2", "v2")]
    assert induced(delta, rest) == link(delta, ["x3"])
    lk = link(delta, ["x1"])
    assert is_cycle(induced(lk, ["x2", "x3", "y2", "y3"]))
    assert is_cycle(induced(lk, ["x2", "x3", "y3", "z1"]))


def test_x1_link_cycles_avoiding_v(delta):
    lk = link(delta, ["x1"]).compact()
    cycles = {frozenset(lk.names(e.S)) for e in enumerate_induced_equators(lk)}
    avoid = {S for S in cycles if not S & {"v1", "v2", "v3"}}
    # the facet list also yields x2 x3 z1 z2; each such cycle still has 4 vertices and contains x2, x3
    assert avoid == {
        frozenset({"x2", "x3", "y2", "y3"}),
        frozenset({"x2", "x3", "y3", "z1"}),
        frozenset({"x2", "x3", "z1", "z2"}),
    }
    assert all(len(S) == 4 and {"x2", "x3"} <= S for S in avoid)


def test_join_examples():
    J = join(from_facets("ab", [["a"], ["b"]]), from_facets("cd", [["c"], ["d"]]))
    assert is_cycle(J) and len(J.facets) == 4
    oct_xy = cross_polytope([("x1", "y1"), ("x2", "y2"), ("x3", "y3")])
    assert len(cone("v1", oct_xy).facets) == 8


def test_cross_polytope_pairs():
    C = cross_polytope([("x1", "z3"), ("x2", "z1"), ("x3", "z2")])
    non_edges = {frozenset(C.names(m)) for m in minimal_nonfaces(C)}
    assert non_edges == {frozenset({"x1", "z3"}), frozenset({"x2", "z1"}), frozenset({"x3", "z2"})}
    assert len(diamond(3).facets) == 8 and is_cycle(diamond(2))
    with pytest.raises(ValueError):
        cross_polytope([("a", "b"), ("a", "c")])


def test_tetrahedron_boundary_nonface():
    B = boundary_complex(from_facets("abcd", [list("abcd")]))
    assert len(B.facets) == 4
    assert [frozenset(B.names(m)) for m in minimal_nonfaces(B)] == [frozenset("abcd")]
    assert not is_flag(B)


def test_partial_vertex_map_rejected(octahedron):
    with pytest.raises((ValueError, KeyError)):
        apply_vertex_map(octahedron, {"p1": "q1"})


def test_boundary_matrix_examples(delta):
    tri = boundary_complex(from_facets("abc", [list("abc")]))
    M = boundary_matrix(tri, 1, Field.Q)
    assert M.shape == (3, 3) and rank(M) == 2
    assert boundary_matrix(delta, 1).shape == (12, 45)


def test_euler_examples(octahedron, torus, delta):
    assert euler_characteristic(octahedron) == 2
    assert euler_characteristic(torus) == 0
    assert euler_characteristic(delta) == 0


def test_lbt_on_d4(d4):
    rep = lbt_check(d4)
    assert (rep.e, rep.n, rep.holds) == (24, 8, False)
    from itertools import combinations

    dense = from_facets("abcdefghij", [list(c) for c in combinations("abcdefghij", 4)])
    rep = lbt_check(dense)
    assert (rep.e, rep.n, rep.holds, rep.forces_h1_zero) == (45, 10, True, False)


def test_pseudomanifold_examples(g1, g2, delta, d4):
    assert is_pure(delta) and is_closed_pseudomanifold(delta)
    assert is_pure(g1) and not is_closed_pseudomanifold(g1)
    two = from_facets("abcdef", [list("abc"), list("def")])
    assert is_pure(two) and not is_closed_pseudomanifold(two)
    assert not is_cycle(from_facets("abc", [list("ab"), list("bc")]))
    assert is_closed_3_manifold(d4) and not is_closed_3_manifold(g2)


def test_shelling_examples(delta):
    facets = list(delta.facets)
    first = facets[0]
    disjoint = next(f for f in facets if not f & first)
    order = [first, disjoint] + [f for f in facets if f not in (first, disjoint)]
    res = verify_shelling(delta, order)
    assert (res.ok, res.failed_at) == (False, 2)
    assert verify_shelling(from_facets("abc", [list("abc")])).ok


def test_edge_witness(delta):
    cycles = {frozenset(delta.names(m)) for m in induced_4cycles_containing(delta, ("v1", "x1"))}
    assert frozenset({"v1", "x1", "z2", "y1"}) in cycles
    with pytest.raises(ValueError):
        induced_4cycles_containing(delta, ("v1", "v2"))


def test_octahedron_edges_and_equators(octahedron):
    assert all(induced_4cycles_containing(octahedron, e) for e in octahedron.edges)
    eqs = enumerate_induced_equators(octahedron)
    brute = {frozenset(S) for S in _brute_cycles(octahedron)}
    assert {frozenset(octahedron.names(e.S)) for e in eqs} == brute
    # each coordinate 4-cycle is the link of the two remaining vertices
    assert len(eqs) == 3 and all(e.link_of is not None for e in eqs)
    assert is_suspension(octahedron) is not None


def _brute_cycles(C):
    from itertools import combinations

    for k in range(3, C.n_vertices + 1):
        for S in combinations(C.vertices, k):
            E = oracles.induced(C.facet_lists(), S)
            if oracles.is_cycle(E) and set().union(*E) == set(S):
                yield S


def test_suspension_of_pentagon():
    S = suspension("u", "w", cycle(5))
    assert is_suspension(S) == ("u", "w")


def test_no_induced_sphere_examples(g1):
    assert has_no_induced_sphere(from_facets("abcd", [list("abcd")]))
    # informational: the first solid torus does contain induced 2-spheres (the octahedra)
    assert not has_no_induced_sphere(g1)


def test_question_examples(delta, d4):
    assert question_1_5_report(delta).question_1_5 is True
    assert question_1_5_report(d4).question_1_5 is False


def test_subdivision_examples(octahedron, delta):
    S = subdivide_edge(octahedron, octahedron.edges[0])
    assert f_vector(S) == (1, 7, 15, 10) and is_flag(S)
    e = delta.edges[0]
    through = sum(1 for F in delta.facets if F & e == e)
    T = subdivide_edge(delta, e)
    assert T.n_vertices == 13 and len(T.facets) == 33 + through


def test_contraction_examples(delta):
    with pytest.raises(ValueError, match="not contractible"):
        contract_edge(delta, delta.edges[0])
    C5 = cycle(5)
    C4 = contract_edge(C5, C5.edges[0])
    assert is_cycle(C4) and C4.n_vertices == 4


def test_zero_move_walk(delta):
    w = random_walk(delta, WalkConfig(n_subdivisions=0, n_contractions=0))
    assert w.final is delta and len(w.log) == 0
