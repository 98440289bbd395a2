from __future__ import annotations

import pytest

import oracles
from flagsphere.complex import (
    apply_vertex_map,
    boundary_complex,
    is_automorphism,
    is_flag,
    link,
    minimal_nonfaces,
)
from flagsphere.constructions import (
    DELTA_SHELLING,
    PHI,
    StaircaseSpec,
    boxed_triangles,
    compose,
    inverse,
    k_fold_join,
    parse_facet,
    permutation_power,
    prism_complex,
    staircase_prism,
    tau,
)
from flagsphere.recognition import is_2_sphere, is_diamond
from flagsphere.isomorphism import is_isomorphic

BOUNDARY = (
    "x1x2y3 x1y2x3 x2x3y1 x1y2y3 x2y1y3 x3y1y2 "
    "y1y2z3 y1y3z2 y2y3z1 y1z2z3 y2z1z3 y3z1z2 "
    "x1x2z2 x1x3z1 x2x3z3 x1z1z2 x2z2z3 x3z1z3"
).split()

MISSING_GAMMA1 = "x1y2z1 x1y3z1 x1y3z2 x2y1z2 x2y1z3 x2y3z2 x3y1z3 x3y2z1 x3y2z3".split()

PRISM_F = (
    "a_1b_1c_1c_2 a_1b_1b_2c_2 a_1a_2b_2c_2 "
    "a_2b_2c_2c_3 a_2b_2b_3c_3 a_2a_3b_3c_3 "
    "a_3b_3c_3c_1 a_3b_3b_1c_1 a_3a_1b_1c_1"
).split()

# the triangles of the prism facets that map onto the empty triangles of the first torus
UNDERLINED = (
    "a_1b_1c_1 a_1b_1c_2 a_1b_2c_2 a_2b_2c_2 a_2b_2c_3 a_2b_3c_3 "
    "a_3b_3c_3 a_3b_3c_1 a_3b_1c_1"
).split()


def _sets(words, width=2):
    return {frozenset(w[i : i + width] for i in range(0, len(w), width)) for w in words}


def test_delta_facets_are_the_listed_ones(delta, g1, g2):
    assert delta.facet_label_sets() == _sets(DELTA_SHELLING)
    assert [set(f) for f in delta.facet_lists()] == [set(parse_facet(w)) for w in DELTA_SHELLING]
    assert len(g1.facets) == 24 and len(g2.facets) == 9
    assert g1.facet_label_sets() | g2.facet_label_sets() == delta.facet_label_sets()
    assert not g1.facet_label_sets() & g2.facet_label_sets()


def test_boundaries_agree(g1, g2):
    b1, b2 = boundary_complex(g1), boundary_complex(g2)
    assert b1.facet_label_sets() == _sets(BOUNDARY)
    assert b2.facet_label_sets() == _sets(BOUNDARY)
    assert b1 == b2


def test_intersection_is_boundary(g1, g2):
    f1 = oracles.all_faces(g1.facet_lists())
    f2 = oracles.all_faces(g2.facet_lists())
    assert f1 & f2 == oracles.all_faces([sorted(s) for s in _sets(BOUNDARY)])


def test_prism_facets_literal():
    P = prism_complex()
    got = P.facet_label_sets()
    assert got == {frozenset(w[i : i + 3] for i in range(0, 12, 3)) for w in PRISM_F}
    assert staircase_prism(StaircaseSpec(edge_order=(3, 1)))[0] == ["a_3", "b_3", "c_3", "c_1"]


def test_staircase_spec_validation():
    with pytest.raises(ValueError):
        StaircaseSpec(triangle_order=("a", "a", "b"))
    with pytest.raises(ValueError):
        StaircaseSpec(edge_order=(2, 2))


def test_flagness_of_pieces(delta, g1, g2):
    assert is_flag(delta)
    assert not is_flag(g1) and not is_flag(g2)
    nf = minimal_nonfaces(delta)
    assert len(nf) == 21 and all(m.bit_count() == 2 for m in nf)
    assert {frozenset(delta.names(m)) for m in nf} == oracles.minimal_nonfaces(delta.facet_lists())
    big = {frozenset(g1.names(m)) for m in minimal_nonfaces(g1) if m.bit_count() == 3}
    assert big == _sets(MISSING_GAMMA1)


def test_missing_triangles_are_faces_of_gamma2(g2):
    for s in _sets(MISSING_GAMMA1):
        assert g2.mask(s) in g2.face_set
    # pulling back through phi gives the nine prism triangles
    back = inverse(PHI)
    pulled = {frozenset(back[x] for x in s) for s in _sets(MISSING_GAMMA1)}
    assert pulled == {frozenset(w[i : i + 3] for i in range(0, 9, 3)) for w in UNDERLINED}


def test_interior_faces_of_gamma1(g1):
    boundary = oracles.all_faces([sorted(s) for s in _sets(BOUNDARY)])
    boxed = {frozenset(t) for t in boxed_triangles()}
    for F in oracles.all_faces(g1.facet_lists()):
        if F and F not in boundary:
            assert F & {"v1", "v2", "v3"} or F in boxed


def test_tau(delta, octahedron):
    t = tau()
    for k in range(9):
        assert is_automorphism(delta, permutation_power(t, k))
    assert permutation_power(t, 9) == {v: v for v in t}
    t3 = permutation_power(t, 3)
    assert t3["v1"] == "v1"
    assert compose(t, inverse(t)) == {v: v for v in t}
    assert is_isomorphic(link(delta, ["v1"]).compact(), octahedron)
    L = link(delta, ["x1"]).compact()
    assert L.n_vertices == 8 and is_flag(L) and is_2_sphere(L)
    assert is_diamond(L) is None


def test_degrees(delta):
    degs = {v: delta.degree(delta.index(v)) for v in delta.vertices}
    assert set(degs.values()) == {6, 8}
    assert {v for v, d in degs.items() if d == 6} == {"v1", "v2", "v3"}
    G = oracles.graph(delta.facet_lists())
    assert dict(G.degree()) == degs


def test_k_fold_join(delta):
    assert k_fold_join(delta, 1) is delta
    J = k_fold_join(delta, 2)
    assert J.n_vertices == 24 and len(J.facets) == 33 * 33 and J.dim == 7
    assert "x1#2" in J.labels
    with pytest.raises(ValueError):
        k_fold_join(delta, 6)
    with pytest.raises(ValueError):
        k_fold_join(delta, 0)


def test_phi_relabels_prism_to_gamma2(g2):
    assert apply_vertex_map(prism_complex(), PHI) == g2
    with pytest.raises(ValueError):
        parse_facet("x1y")
