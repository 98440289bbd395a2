"""The named complexes: two solid tori glued into the 12-vertex flag 3-sphere.

``Γ₁`` is the union of three cones over octahedra, ``Γ₂`` is a staircase
triangulation of ``Δ₂ × C₃`` relabelled by ``φ``, and
``Δ₁₂,₃₃ = Γ₁ ∪ Γ₂``.  Labels are ``x1..x3, y1..y3, z1..z3, v1..v3`` for the
sphere and ``a_1 .. c_3`` for the product ``Δ₂ × C₃``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .complex import (
    MAX_VERTICES,
    SimplicialComplex,
    apply_vertex_map,
    cone,
    cross_polytope,
    from_facets,
    join,
    union,
)

__all__ = [
    "DELTA_LABELS",
    "DELTA_SHELLING",
    "PHI",
    "StaircaseSpec",
    "compose",
    "delta_12_33",
    "diamond",
    "gamma1",
    "gamma2",
    "inverse",
    "k_fold_join",
    "parse_facet",
    "permutation_power",
    "prism_complex",
    "staircase_prism",
    "tau",
]

DELTA_LABELS = tuple(f"{c}{i}" for c in "xyzv" for i in (1, 2, 3))

# facet order that is a shelling of Δ₁₂,₃₃
DELTA_SHELLING = (
    "x1y2y3z1 y2y3z1v2 y1y2y3v2 y1y2z3v2 y2z1z3v2 x3y2z1z3 x1x3y2z1 "
    "x1x3z1v3 x3y1y2z3 z1z2z3v2 x3y1y2v1 x2x3y1v1 x3z1z3v3 z1z2z3v3 "
    "x1z1z2v3 x1y3z1z2 y3z1z2v2 y1y3v2z2 x1x3y2v1 x1x2x3v1 x1y2y3v1 "
    "x2x3y1z3 x2x3z3v3 y1z2z3v2 x2y1z2z3 x2y1z2y3 y1y2y3v1 x2y1y3v1 "
    "x1x2y3v1 x1x2y3z2 x1x2x3v3 x1x2z2v3 x2z2z3v3"
).split()

PHI: Mapping[str, str] = {
    "a_1": "z2", "a_2": "z3", "a_3": "z1",
    "b_1": "y3", "b_2": "y1", "b_3": "y2",
    "c_1": "x1", "c_2": "x2", "c_3": "x3",
}


def parse_facet(word: str) -> list[str]:
    """Split a compact word such as ``"x1y2y3z1"`` into labels."""
    if len(word) % 2:
        raise ValueError(f"cannot split {word!r} into two-character labels")
    return [word[i : i + 2] for i in range(0, len(word), 2)]


def diamond(d: int, prefix: tuple[str, str] = ("p", "q")) -> SimplicialComplex:
    """``◇_d`` on the labels ``p1, q1, ..., pd, qd``."""
    return cross_polytope([(f"{prefix[0]}{i}", f"{prefix[1]}{i}") for i in range(1, d + 1)])


def _xs(c: str, idx: Sequence[int]) -> list[str]:
    return [f"{c}{i}" for i in idx]


def gamma1() -> SimplicialComplex:
    """Three cones over octahedra, glued along the triangles of x, y and z."""
    pieces = [
        cone("v1", cross_polytope(list(zip(_xs("x", (1, 2, 3)), _xs("y", (1, 2, 3)))))),
        cone("v2", cross_polytope(list(zip(_xs("y", (1, 2, 3)), _xs("z", (1, 2, 3)))))),
        cone("v3", cross_polytope(list(zip(_xs("x", (1, 2, 3)), _xs("z", (3, 1, 2)))))),
    ]
    U = union(*pieces)
    return from_facets(DELTA_LABELS, U.facet_lists())


@dataclass(frozen=True)
class StaircaseSpec:
    """Vertex orders for one prism ``Δ₂ × {s, t}``: ``a < b < c`` and ``s < t``."""

    triangle_order: tuple[str, str, str] = ("a", "b", "c")
    edge_order: tuple[int, int] = (1, 2)

    def __post_init__(self):
        if len(self.triangle_order) != 3 or len(set(self.triangle_order)) != 3:
            raise ValueError("triangle_order needs three distinct labels")
        if len(self.edge_order) != 2 or self.edge_order[0] == self.edge_order[1]:
            raise ValueError("edge_order needs two distinct endpoints")


def staircase_prism(spec: StaircaseSpec) -> list[list[str]]:
    """The 3 tetrahedra given by monotone lattice paths from (1,1) to (3,2).

    Point ``(i, j)`` is the label ``<triangle_order[i]>_<edge_order[j]>``; a
    path takes two steps along the triangle and one along the edge.
    """
    tri, (s, t) = spec.triangle_order, spec.edge_order
    out = []
    # the single edge step happens after 2, 1 or 0 triangle steps
    for up_after in (2, 1, 0):
        i, j = 0, 0
        path = [(i, j)]
        for step in range(3):
            if step == up_after:
                j += 1
            else:
                i += 1
            path.append((i, j))
        out.append([f"{tri[i]}_{(s, t)[j]}" for i, j in path])
    return out


PRISM_EDGES = ((1, 2), (2, 3), (3, 1))


def prism_complex() -> SimplicialComplex:
    """The staircase triangulation of ``Δ₂ × C₃`` on the labels ``a_1 .. c_3``."""
    labels = [f"{c}_{i}" for c in "abc" for i in (1, 2, 3)]
    facets = [f for e in PRISM_EDGES for f in staircase_prism(StaircaseSpec(edge_order=e))]
    return from_facets(labels, facets)


def gamma2() -> SimplicialComplex:
    """``⟨φ(F)⟩`` for the staircase facets ``F`` of the prism complex."""
    P = apply_vertex_map(prism_complex(), PHI)
    labels = [lab for lab in DELTA_LABELS if lab in P.labels]
    return from_facets(labels, P.facet_lists())


def delta_12_33(shelling_order: bool = True) -> SimplicialComplex:
    """``Γ₁ ∪ Γ₂``.

    With ``shelling_order`` the facets are listed in the shelling order of
    :data:`DELTA_SHELLING`; otherwise Γ₁'s facets come first, then Γ₂'s.
    """
    D = union(gamma1(), gamma2())
    D = from_facets(DELTA_LABELS, D.facet_lists())
    if shelling_order:
        order = [D.mask(parse_facet(w)) for w in DELTA_SHELLING]
        D = D.reordered(order)
    return D


def compose(p: Mapping[str, str], q: Mapping[str, str]) -> dict[str, str]:
    """``p ∘ q`` (apply ``q`` first)."""
    return {k: p.get(v, v) for k, v in q.items()}


def inverse(p: Mapping[str, str]) -> dict[str, str]:
    return {v: k for k, v in p.items()}


def permutation_power(p: Mapping[str, str], k: int) -> dict[str, str]:
    if k < 0:
        return permutation_power(inverse(p), -k)
    out = {x: x for x in p}
    for _ in range(k):
        out = compose(p, out)
    return out


def _from_cycles(*cycles: Sequence[str]) -> dict[str, str]:
    out = {}
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + type(cyc)(cyc[:1])):
            out[a] = b
    return out


def tau() -> dict[str, str]:
    """The order-9 automorphism ``(x3 y2 z1 x1 y3 z2 x2 y1 z3)(v2 v3 v1)``."""
    return _from_cycles(
        ("x3", "y2", "z1", "x1", "y3", "z2", "x2", "y1", "z3"),
        ("v2", "v3", "v1"),
    )


def k_fold_join(C: SimplicialComplex, k: int) -> SimplicialComplex:
    """``C ∗ ... ∗ C`` (``k`` copies); copy ``i`` gets labels ``<label>#i``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if k == 1:
        return C
    base = C.compact()
    if k * base.n_vertices > MAX_VERTICES:
        raise ValueError(
            f"{k}-fold join needs {k * base.n_vertices} > {MAX_VERTICES} vertices"
        )
    copies = [
        apply_vertex_map(base, {lab: f"{lab}#{i}" for lab in base.labels})
        for i in range(1, k + 1)
    ]
    out = copies[0]
    for c in copies[1:]:
        out = join(out, c)
    return out


def boxed_triangles() -> list[list[str]]:
    """The triangles where the three cones of Γ₁ meet pairwise."""
    return [_xs(c, (1, 2, 3)) for c in "xyz"]

