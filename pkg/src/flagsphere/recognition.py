"""Recognition of low-dimensional spheres and manifolds, and shelling checks.

Codimension-one sphere recognition only goes up to dimension 2 (points,
cycles and 2-spheres).  Sphericity of 3-dimensional complexes is certified
by a closed-manifold check, homology over two fields and an explicit
shelling order.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import NamedTuple

from .complex import SimplicialComplex, bits, is_flag, link
from .homology import Field, betti_numbers

__all__ = [
    "SphereCertificate",
    "ShellingResult",
    "UnsupportedDimension",
    "certify_3_sphere",
    "first_bad_vertex",
    "is_2_sphere",
    "is_closed_3_manifold",
    "is_closed_pseudomanifold",
    "is_cycle",
    "is_diamond",
    "is_pure",
    "is_sphere",
    "verify_shelling",
]


class UnsupportedDimension(ValueError):
    pass


def is_pure(C: SimplicialComplex) -> bool:
    return len({f.bit_count() for f in C.facets}) <= 1


def is_closed_pseudomanifold(C: SimplicialComplex) -> bool:
    """Pure, every ridge in exactly two facets, and the dual graph connected."""
    if C.is_void or not is_pure(C):
        return False
    ridge_of: dict[int, list[int]] = {}
    for idx, f in enumerate(C.facets):
        for v in bits(f):
            ridge_of.setdefault(f & ~(1 << v), []).append(idx)
    if any(len(fs) != 2 for fs in ridge_of.values()):
        return False
    parent = list(range(len(C.facets)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in ridge_of.values():
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(i) for i in range(len(C.facets))}) == 1


def is_cycle(C: SimplicialComplex) -> bool:
    """A connected pure 1-complex in which every vertex lies on two edges."""
    if C.is_void or C.dim != 1 or not is_pure(C):
        return False
    deg: Counter[int] = Counter()
    for e in C.facets:
        for v in bits(e):
            deg[v] += 1
    return all(d == 2 for d in deg.values()) and _absorbs_all(list(C.facets))


def _absorbs_all(masks: list[int]) -> bool:
    """Whether the sets are connected through shared vertices."""
    if not masks:
        return False
    comp, rest = masks[0], masks[1:]
    while rest:
        left = [m for m in rest if not m & comp]
        if len(left) == len(rest):
            return False
        for m in rest:
            if m & comp:
                comp |= m
        rest = left
    return True


def is_2_sphere(C: SimplicialComplex) -> bool:
    """Closed pseudomanifold with cycle links and Euler characteristic 2.

    Once every edge lies in exactly two triangles, each vertex link has all
    degrees 2, so it is a cycle as soon as it is connected.
    """
    if C.is_void or any(f.bit_count() != 3 for f in C.facets):
        return False
    if not is_closed_pseudomanifold(C):
        return False
    n_edges = 3 * len(C.facets) // 2
    if C.n_vertices - n_edges + len(C.facets) != 2:
        return False
    facets = C.facets
    for v in bits(C.vertex_mask):
        vb = 1 << v
        if not _absorbs_all([f & ~vb for f in facets if f & vb]):
            return False
    return True


def is_sphere(C: SimplicialComplex, d: int) -> bool:
    """Recognise ``d``-spheres for ``d ≤ 2``."""
    if d == 0:
        return len(C.facets) == 2 and all(f.bit_count() == 1 for f in C.facets)
    if d == 1:
        return is_cycle(C)
    if d == 2:
        return is_2_sphere(C)
    raise UnsupportedDimension(f"sphere recognition is implemented for d <= 2, not d = {d}")


def first_bad_vertex(C: SimplicialComplex, vertices: Iterable[int] | None = None) -> int | None:
    """First vertex (index) of a 3-complex whose link is not a 2-sphere."""
    for v in bits(C.vertex_mask) if vertices is None else vertices:
        if not is_2_sphere(link(C, 1 << v)):
            return v
    return None


def is_closed_3_manifold(C: SimplicialComplex) -> bool:
    if C.is_void or C.dim != 3 or not is_closed_pseudomanifold(C):
        return False
    return first_bad_vertex(C) is None


class ShellingResult(NamedTuple):
    ok: bool
    failed_at: int | None  # 1-based position of the first facet that breaks the order


def verify_shelling(
    C: SimplicialComplex, order: Sequence[int] | Sequence[Iterable[str]] | None = None
) -> ShellingResult:
    """Check that each facet meets the union of its predecessors in a pure
    nonempty complex of codimension one.

    ``order`` defaults to the stored facet order of ``C``.
    """
    if order is None:
        seq = list(C.facets)
    else:
        seq = [f if isinstance(f, int) else C.mask(f) for f in order]
    if len(seq) != len(C.facets) or set(seq) != set(C.facets):
        raise ValueError("shelling order must be a permutation of the facets")
    if not is_pure(C):
        raise ValueError("shellings are only checked for pure complexes")
    for j in range(1, len(seq)):
        F = seq[j]
        size = F.bit_count() - 1
        meets = {F & G for G in seq[:j]}
        top = [m for m in meets if not any(m != o and m & ~o == 0 for o in meets)]
        if any(m.bit_count() != size for m in top):
            return ShellingResult(False, j + 1)
    return ShellingResult(True, None)


def is_diamond(C: SimplicialComplex) -> int | None:
    """Return ``d`` if ``C`` is the cross-polytope boundary ``◇_d``."""
    n = C.n_vertices
    if C.is_void or n == 0 or n % 2:
        return None
    d = n // 2
    verts = bits(C.vertex_mask)
    partner = {}
    for v in verts:
        non = C.vertex_mask & ~C.adjacency[v] & ~(1 << v)
        if non.bit_count() != 1:
            return None
        partner[v] = non.bit_length() - 1
    if len(C.facets) != 2**d or any(f.bit_count() != d for f in C.facets):
        return None
    # a d-set avoiding every antipodal pair picks one vertex of each of the d pairs
    for f in C.facets:
        if any(f >> partner[v] & 1 for v in bits(f)):
            return None
    if not is_flag(C):
        return None
    return d


@dataclass
class SphereCertificate:
    closed_3_manifold: bool
    bad_vertex: str | None
    reduced_betti_gf2: list[int] | None
    reduced_betti_q: list[int] | None
    shelling: ShellingResult | None
    notes: list[str] = field(default_factory=list)

    @property
    def homology_sphere(self) -> bool:
        want = [0, 0, 0, 1]
        return self.reduced_betti_gf2 == want and self.reduced_betti_q == want

    @property
    def sphere(self) -> bool:
        """Closed 3-manifold, homology of S^3 and a verified shelling."""
        return (
            self.closed_3_manifold
            and self.homology_sphere
            and self.shelling is not None
            and self.shelling.ok
        )

    @property
    def strength(self) -> str:
        if self.sphere:
            return "sphere"
        if self.closed_3_manifold and self.homology_sphere:
            return "homology-sphere"
        return "fail"

    def as_dict(self) -> dict:
        return {
            "closed_3_manifold": self.closed_3_manifold,
            "bad_vertex": self.bad_vertex,
            "reduced_betti": {"gf2": self.reduced_betti_gf2, "q": self.reduced_betti_q},
            "shelling": None
            if self.shelling is None
            else {"ok": self.shelling.ok, "failed_at": self.shelling.failed_at},
            "homology_sphere": self.homology_sphere,
            "strength": self.strength,
            "notes": list(self.notes),
        }


def certify_3_sphere(
    C: SimplicialComplex,
    shelling_order: Sequence[int] | Sequence[Iterable[str]] | None = None,
    check_shelling: bool = True,
) -> SphereCertificate:
    """Combine the manifold, homology and shelling checks.

    Without a shelling (``check_shelling=False``) the best possible verdict
    is ``"homology-sphere"``.  When ``shelling_order`` is omitted and
    ``check_shelling`` is True, the stored facet order is tried.
    """
    notes = []
    pure3 = not C.is_void and C.dim == 3 and is_pure(C)
    pm = pure3 and is_closed_pseudomanifold(C)
    bad = first_bad_vertex(C) if pm else None
    manifold = pm and bad is None
    if not pure3:
        notes.append(f"not a pure 3-complex (dim {C.dim})")
    elif not pm:
        notes.append("not a closed pseudomanifold")
    elif bad is not None:
        notes.append(f"link of {C.labels[bad]} is not a 2-sphere")
    b2 = bq = None
    if not C.is_void:
        b2 = betti_numbers(C, Field.GF2, reduced=True)
        bq = betti_numbers(C, Field.Q, reduced=True)
    shelling = None
    if check_shelling and pure3:
        shelling = verify_shelling(C, shelling_order)
        if not shelling.ok:
            notes.append(f"facet order is not a shelling (fails at position {shelling.failed_at})")
    return SphereCertificate(
        manifold, None if bad is None else C.labels[bad], b2, bq, shelling, notes
    )
