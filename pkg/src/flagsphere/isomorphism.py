"""Isomorphism testing for small complexes.

Vertices are first coloured by (degree, number of facets through the
vertex) and the colouring is refined with the multiset of neighbour colours
until it stabilises.  A backtracking search then extends a partial map
vertex by vertex, keeping colours and adjacency consistent, and checks the
facets once the map is total.
"""

from __future__ import annotations

from .complex import SimplicialComplex, bits
from .vectors import f_vector

__all__ = ["MAX_ISO_VERTICES", "is_isomorphic"]

MAX_ISO_VERTICES = 16


def _joint_colours(C1: SimplicialComplex, C2: SimplicialComplex) -> tuple[dict[int, int], dict[int, int]]:
    """Refine both complexes together so colour ids are comparable."""
    sides = []
    for C in (C1, C2):
        verts = bits(C.vertex_mask)
        count = {v: sum(1 for f in C.facets if f >> v & 1) for v in verts}
        sides.append((C.adjacency, {v: (C.adjacency[v].bit_count(), count[v]) for v in verts}))
    n_classes = -1
    while True:
        keys = [
            {v: (col[v], tuple(sorted(col[u] for u in bits(adj[v])))) for v in col}
            for adj, col in sides
        ]
        names = {k: i for i, k in enumerate(sorted({k for side in keys for k in side.values()}))}
        sides = [(adj, {v: names[k[v]] for v in k}) for (adj, _), k in zip(sides, keys)]
        if len(names) == n_classes:
            return sides[0][1], sides[1][1]
        n_classes = len(names)


def is_isomorphic(C1: SimplicialComplex, C2: SimplicialComplex) -> dict[str, str] | None:
    """A vertex bijection carrying the facets of ``C1`` onto those of ``C2``, or None."""
    n = C1.n_vertices
    if max(n, C2.n_vertices) > MAX_ISO_VERTICES:
        raise ValueError(
            f"isomorphism search is limited to {MAX_ISO_VERTICES} vertices "
            f"(got {C1.n_vertices} and {C2.n_vertices})"
        )
    if n != C2.n_vertices or len(C1.facets) != len(C2.facets) or f_vector(C1) != f_vector(C2):
        return None
    col1, col2 = _joint_colours(C1, C2)
    if sorted(col1.values()) != sorted(col2.values()):
        return None

    adj1, adj2 = C1.adjacency, C2.adjacency
    # fewest candidates first, then stay adjacent to what is already placed
    by_colour2: dict[int, list[int]] = {}
    for v, c in col2.items():
        by_colour2.setdefault(c, []).append(v)
    remaining = set(col1)
    order: list[int] = []
    placed = 0
    while remaining:
        v = min(
            remaining,
            key=lambda u: (-(adj1[u] & placed).bit_count(), len(by_colour2[col1[u]]), u),
        )
        order.append(v)
        remaining.discard(v)
        placed |= 1 << v
    target = set(C2.facets)

    def facets_match(phi: dict[int, int]) -> bool:
        for f in C1.facets:
            m = 0
            for i in bits(f):
                m |= 1 << phi[i]
            if m not in target:
                return False
        return True

    phi: dict[int, int] = {}
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == len(order):
            return facets_match(phi)
        v = order[pos]
        for w in by_colour2[col1[v]]:
            if used >> w & 1:
                continue
            ok = True
            for u, img in phi.items():
                if bool(adj1[v] >> u & 1) != bool(adj2[w] >> img & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            if extend(pos + 1):
                return True
            del phi[v]
            used &= ~(1 << w)
        return False

    if not extend(0):
        return None
    return {C1.labels[v]: C2.labels[w] for v, w in phi.items()}
