"""Suspensions, contractible edges and induced equators.

A flag sphere is *irreducible* when it is not a suspension, has no
contractible edge, and every induced equator is a vertex link.
:func:`question_1_5_report` decides all three and collects witnesses.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .complex import SimplicialComplex, bits, induced, is_flag, link
from .constructions import gamma2
from .recognition import UnsupportedDimension, is_sphere

__all__ = [
    "CertificationReport",
    "EquatorRecord",
    "contractible_edges",
    "enumerate_induced_equators",
    "gamma2_has_no_equator",
    "has_no_induced_sphere",
    "induced_4cycles_containing",
    "is_contractible",
    "is_suspension",
    "question_1_5_report",
]

log = logging.getLogger(__name__)

MAX_EQUATOR_VERTICES = 24
_CHUNK = 1 << 16


def _edge_mask(C: SimplicialComplex, e: int | tuple[str, str]) -> int:
    m = e if isinstance(e, int) else C.mask(e)
    if m.bit_count() != 2 or m not in C.face_set:
        raise ValueError(f"{C.names(m)} is not an edge")
    return m


def induced_4cycles_containing(C: SimplicialComplex, e: int | tuple[str, str]) -> list[int]:
    """All 4-sets ``{u, v, a, b}`` inducing the cycle ``u-v-a-b-u``.

    A triangle needs three edges, so a 4-set induces a 4-cycle exactly when
    its induced graph is one; no face lookups are needed.
    """
    m = _edge_mask(C, e)
    u, v = bits(m)
    adj = C.adjacency
    A = adj[v] & ~adj[u] & ~(1 << u)  # neighbours of v not adjacent to u
    B = adj[u] & ~adj[v] & ~(1 << v)
    out = []
    for a in bits(A):
        for b in bits(adj[a] & B):
            out.append(m | 1 << a | 1 << b)
    return sorted(out)


def is_contractible(C: SimplicialComplex, e: int | tuple[str, str]) -> bool:
    m = _edge_mask(C, e)
    u, v = bits(m)
    adj = C.adjacency
    A = adj[v] & ~adj[u] & ~(1 << u)
    B = adj[u] & ~adj[v] & ~(1 << v)
    return not any(adj[a] & B for a in bits(A))


def contractible_edges(C: SimplicialComplex) -> list[int]:
    """Edges lying in no induced 4-cycle."""
    if not is_flag(C):
        log.warning("contractible_edges called on a non-flag complex")
    return [e for e in C.edges if is_contractible(C, e)]


def is_suspension(C: SimplicialComplex) -> tuple[str, str] | None:
    """A pair ``(u, w)`` with ``C = ⟨{u},{w}⟩ ∗ C[V∖{u,w}]``, or None.

    Suspension points are adjacent to every vertex but their partner, so
    only vertices of degree ``|V| - 2`` are tried.
    """
    V = C.vertex_mask
    n = V.bit_count()
    adj = C.adjacency
    for u in bits(V):
        if adj[u].bit_count() != n - 2:
            continue
        rest = V & ~adj[u] & ~(1 << u)
        w = rest.bit_length() - 1
        if w < u or adj[w].bit_count() != n - 2 or adj[w] & (1 << u):
            continue
        base = induced(C, V & ~(1 << u) & ~(1 << w))
        expected = {g | 1 << u for g in base.facets} | {g | 1 << w for g in base.facets}
        if expected == set(C.facets):
            return C.labels[u], C.labels[w]
    return None


@dataclass(frozen=True)
class EquatorRecord:
    S: int
    link_of: str | None  # vertex whose link is C[S], if any
    sphere_dim: int

    def as_dict(self, C: SimplicialComplex) -> dict:
        return {"S": list(C.names(self.S)), "link_of": self.link_of, "sphere_dim": self.sphere_dim}


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int64)


def _candidate_chunk(
    start: int,
    stop: int,
    verts: list[int],
    adj_local: list[int],
    top_faces: list[int],
    q: int,
    min_size: int,
) -> list[int]:
    """Local subset codes in ``[start, stop)`` passing the cheap counting filters.

    A ``q``-sphere on ``n`` vertices has ``n`` edges if ``q = 1`` and
    ``3n - 6`` edges if ``q = 2``; every vertex of a 2-sphere has degree at
    least 3 and every vertex of a cycle degree exactly 2.  Subsets containing
    a face of dimension ``q + 1`` are too big.
    """
    S = np.arange(start, stop, dtype=np.uint64)
    size = _popcount(S)
    keep = size >= min_size
    for f in top_faces:
        fu = np.uint64(f)
        keep &= (S & fu) != fu
    twice_edges = np.zeros_like(size)
    for i in range(len(verts)):
        inside = ((S >> np.uint64(i)) & np.uint64(1)).astype(bool)
        deg = _popcount(S & np.uint64(adj_local[i]))
        if q == 1:
            keep &= ~inside | (deg == 2)
        elif q == 2:
            keep &= ~inside | (deg >= 3)
        else:
            keep &= ~inside | (deg == 0)
        twice_edges += np.where(inside, deg, 0)
    if q == 0:
        keep &= size == 2
    elif q == 1:
        keep &= twice_edges == 2 * size
    else:
        keep &= twice_edges == 2 * (3 * size - 6)
    return [int(x) for x in S[keep]]


def _equator_setup(C: SimplicialComplex, q: int):
    verts = bits(C.vertex_mask)
    pos = {v: i for i, v in enumerate(verts)}

    def local(m: int) -> int:
        out = 0
        for v in bits(m):
            out |= 1 << pos[v]
        return out

    adj_local = [local(C.adjacency[v]) for v in verts]
    top_faces = [local(f) for f in C.faces(q + 1)]
    flag = is_flag(C)
    # an induced subcomplex of a flag complex is flag: the cross-polytope is the smallest flag sphere
    min_size = 2 * (q + 1) if flag else q + 2
    return verts, adj_local, top_faces, min_size


def _scan(args) -> list[int]:
    return _candidate_chunk(*args)


def _candidates(C: SimplicialComplex, q: int, threads: int = 1) -> list[int]:
    verts, adj_local, top_faces, min_size = _equator_setup(C, q)
    total = 1 << len(verts)
    jobs = [
        (lo, min(lo + _CHUNK, total), verts, adj_local, top_faces, q, min_size)
        for lo in range(0, total, _CHUNK)
    ]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(_scan, jobs))
    else:
        parts = [_scan(j) for j in jobs]
    out = []
    for part in parts:
        for code in part:
            m = 0
            for i in bits(code):
                m |= 1 << verts[i]
            out.append(m)
    return sorted(out)


def _check_equator_dim(C: SimplicialComplex) -> int:
    d = C.dim
    if not 1 <= d <= 3:
        raise UnsupportedDimension(
            f"equators are enumerated for spheres of dimension 1..3, not {d}"
        )
    if C.n_vertices > MAX_EQUATOR_VERTICES:
        raise ValueError(
            f"equator enumeration is limited to {MAX_EQUATOR_VERTICES} vertices"
        )
    return d - 1


def enumerate_induced_equators(C: SimplicialComplex, threads: int = 1) -> list[EquatorRecord]:
    """Every vertex set ``S`` with ``C[S]`` a sphere of dimension ``dim C - 1``.

    Sorted by the bit value of ``S``.  ``link_of`` names a vertex ``v`` with
    ``lk(v) = C[S]``.
    """
    q = _check_equator_dim(C)
    links = {}
    for v in bits(C.vertex_mask):
        L = link(C, 1 << v)
        links.setdefault(L.vertex_mask, []).append((v, L))
    out = []
    for S in _candidates(C, q, threads):
        E = induced(C, S)
        if not is_sphere(E, q):
            continue
        link_of = None
        for v, L in links.get(S, ()):
            if L == E:
                link_of = C.labels[v]
                break
        out.append(EquatorRecord(S, link_of, q))
    return out


def has_no_induced_sphere(C: SimplicialComplex, q: int = 2) -> bool:
    """True iff no induced subcomplex of ``C`` is a ``q``-sphere."""
    if q not in (0, 1, 2):
        raise UnsupportedDimension(f"sphere recognition is implemented for q <= 2, not {q}")
    return not any(is_sphere(induced(C, S), q) for S in _candidates(C, q))


def gamma2_has_no_equator() -> bool:
    """Exhaustive check that the solid torus ``Γ₂`` has no induced 2-sphere."""
    return has_no_induced_sphere(gamma2(), 2)


@dataclass
class CertificationReport:
    flag: bool
    suspension: tuple[str, str] | None
    contractible_edges: list[tuple[str, ...]]
    equators: list[EquatorRecord] | None  # None when not checked
    equator_note: str | None = None
    labels: tuple[str, ...] = field(default=(), repr=False)

    @property
    def equators_are_links(self) -> bool | None:
        if self.equators is None:
            return None
        return all(e.link_of is not None for e in self.equators)

    @property
    def question_1_5(self) -> bool | None:
        """True when all three properties hold, None if only (iii) is unknown."""
        base = self.flag and self.suspension is None and not self.contractible_edges
        if not base:
            return False
        return self.equators_are_links

    def as_dict(self) -> dict:
        out = {
            "flag": self.flag,
            "suspension": {
                "holds": self.suspension is not None,
                "witness": list(self.suspension) if self.suspension else None,
            },
            "contractible_edges": [list(e) for e in self.contractible_edges],
            "equators": None
            if self.equators is None
            else [
                {"S": [self.labels[i] for i in bits(e.S)], "link_of": e.link_of}
                for e in self.equators
            ],
            "equators_checked": self.equators is not None,
            "question_1_5": self.question_1_5,
        }
        if self.equator_note:
            out["equator_note"] = self.equator_note
        return out


def question_1_5_report(
    C: SimplicialComplex, equator_check: bool = True, threads: int = 1
) -> CertificationReport:
    """Decide (i) not a suspension, (ii) no contractible edge, (iii) equators are links.

    Equators are only enumerated for spheres of dimension at most 3;
    otherwise (iii) is reported as not checked.
    """
    flag = is_flag(C)
    susp = is_suspension(C)
    contr = [C.names(e) for e in contractible_edges(C)]
    equators = None
    note = None
    if not equator_check:
        note = "not checked (disabled)"
    elif C.dim > 3:
        note = f"not checked (dim {C.dim} > 3)"
    elif C.n_vertices > MAX_EQUATOR_VERTICES:
        note = f"not checked ({C.n_vertices} > {MAX_EQUATOR_VERTICES} vertices)"
    else:
        equators = enumerate_induced_equators(C, threads)
    return CertificationReport(flag, susp, contr, equators, note, C.labels)

