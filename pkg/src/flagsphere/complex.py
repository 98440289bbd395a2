"""Abstract simplicial complexes over a labelled universe of at most 64 vertices.

Faces are plain Python ints used as bit sets: bit ``i`` is set when the
vertex with index ``i`` of the universe belongs to the face.  A complex only
stores its facets; faces are generated on demand and cached.

Subcomplexes produced by :func:`link` and :func:`induced` keep the universe
of their parent, so their faces can be compared with the parent's faces by
plain integer operations.  The vertex set of a complex is the union of its
facets (:attr:`SimplicialComplex.vertex_mask`); labels of the universe that
are not used are ignored by every operation and dropped by
:meth:`SimplicialComplex.compact`.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

__all__ = [
    "MAX_VERTICES",
    "Graph",
    "SimplicialComplex",
    "bits",
    "boundary_complex",
    "clique_complex",
    "cone",
    "cross_polytope",
    "faces_of_dim",
    "from_facets",
    "induced",
    "is_automorphism",
    "is_flag",
    "join",
    "link",
    "maximal_sets",
    "minimal_nonfaces",
    "one_skeleton",
    "apply_vertex_map",
    "suspension",
    "union",
]

MAX_VERTICES = 64


@lru_cache(maxsize=1 << 18)
def bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def maximal_sets(masks: Iterable[int]) -> list[int]:
    """Deduplicate ``masks`` and drop every mask contained in another one.

    First-appearance order of the survivors is kept.
    """
    seen: dict[int, None] = dict.fromkeys(masks)
    uniq = list(seen)
    if len({m.bit_count() for m in uniq}) <= 1:
        return uniq
    by_size = sorted(uniq, key=int.bit_count, reverse=True)
    kept: set[int] = set()
    # kept masks indexed by each of their vertices; a superset of m contains its lowest bit
    through: dict[int, list[int]] = {}
    for m in by_size:
        if m:
            low = m & -m
            if any(m & ~k == 0 for k in through.get(low, ())):
                continue
        elif kept:
            continue
        kept.add(m)
        rest = m
        while rest:
            low = rest & -rest
            through.setdefault(low, []).append(m)
            rest ^= low
    return [m for m in uniq if m in kept]


class SimplicialComplex:
    """An immutable simplicial complex given by its facets.

    ``labels`` is the vertex universe; ``facets`` is an antichain of bit sets,
    kept in the order it was given (this order may encode a shelling).  The
    void complex has no facets at all, while ``{∅}`` has the single facet 0.
    """

    __slots__ = ("labels", "facets", "_index", "__dict__")

    def __init__(self, labels: Sequence[str], facets: Sequence[int]):
        self.labels: tuple[str, ...] = tuple(labels)
        self.facets: tuple[int, ...] = tuple(facets)
        self._index: dict[str, int] = {lab: i for i, lab in enumerate(self.labels)}

    # -- basic data ------------------------------------------------------

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def vertices(self) -> list[str]:
        return [self.labels[i] for i in bits(self.vertex_mask)]

    @property
    def n_vertices(self) -> int:
        return self.vertex_mask.bit_count()

    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def dim(self) -> int:
        """Dimension; the void complex and ``{∅}`` both report -1."""
        if not self.facets:
            return -1
        return max(f.bit_count() for f in self.facets) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown vertex label {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        """Bit set of a collection of labels."""
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        """Labels of ``mask`` in universe order."""
        return tuple(self.labels[i] for i in bits(mask))

    # -- faces -----------------------------------------------------------

    @cached_property
    def face_set(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return frozenset(out)

    def __contains__(self, face: object) -> bool:
        if isinstance(face, int):
            return face in self.face_set
        return self.mask(face) in self.face_set  # type: ignore[arg-type]

    @cached_property
    def _faces_by_size(self) -> dict[int, tuple[int, ...]]:
        groups: dict[int, list[int]] = {}
        for face in self.face_set:
            groups.setdefault(face.bit_count(), []).append(face)
        return {k: tuple(sorted(v)) for k, v in groups.items()}

    def faces(self, k: int) -> tuple[int, ...]:
        """The ``k``-dimensional faces sorted by value (no range check)."""
        return self._faces_by_size.get(k + 1, ())

    @cached_property
    def edges(self) -> tuple[int, ...]:
        adj = self.adjacency
        return tuple(
            sorted(1 << u | 1 << v for u in range(len(adj)) for v in bits(adj[u] & ~((2 << u) - 1)))
        )

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bit set of every universe index."""
        adj = [0] * len(self.labels)
        for f in self.facets:
            for v in bits(f):
                adj[v] |= f
        return tuple(a & ~(1 << v) for v, a in enumerate(adj))

    def neighbors(self, v: int) -> int:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    # -- comparison and conversion ---------------------------------------

    def facet_label_sets(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(self.names(f)) for f in self.facets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        if self.labels == other.labels:
            return set(self.facets) == set(other.facets)
        return self.facet_label_sets() == other.facet_label_sets()

    def __hash__(self) -> int:
        return hash(self.facet_label_sets())

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex(n_vertices={self.n_vertices}, "
            f"n_facets={len(self.facets)}, dim={self.dim})"
        )

    def facet_lists(self) -> list[list[str]]:
        return [list(self.names(f)) for f in self.facets]

    def compact(self) -> SimplicialComplex:
        """Same complex with the universe shrunk to the used vertices."""
        used = bits(self.vertex_mask)
        if len(used) == len(self.labels):
            return self
        remap = {old: new for new, old in enumerate(used)}
        facets = []
        for f in self.facets:
            m = 0
            for i in bits(f):
                m |= 1 << remap[i]
            facets.append(m)
        return SimplicialComplex([self.labels[i] for i in used], facets)

    def with_facets(self, facets: Iterable[int]) -> SimplicialComplex:
        """A complex on the same universe generated by ``facets``."""
        return SimplicialComplex(self.labels, maximal_sets(facets))

    def reordered(self, order: Sequence[int]) -> SimplicialComplex:
        """Same facets listed in ``order``, which must be a permutation of them."""
        if len(order) != len(self.facets) or set(order) != set(self.facets):
            raise ValueError("order is not a permutation of the facets")
        return SimplicialComplex(self.labels, order)


def from_facets(
    labels: Sequence[str], facet_lists: Iterable[Iterable[str]]
) -> SimplicialComplex:
    """Build ``⟨F_1, ..., F_k⟩`` from label sets.

    Duplicate and non-maximal input sets are dropped; the rest keep their
    input order.
    """
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise ValueError("vertex labels must be distinct")
    if len(labels) > MAX_VERTICES:
        raise ValueError(f"at most {MAX_VERTICES} vertices are supported, got {len(labels)}")
    index = {lab: i for i, lab in enumerate(labels)}
    masks = []
    for facet in facet_lists:
        m = 0
        for lab in facet:
            if lab not in index:
                raise KeyError(f"facet uses unknown vertex label {lab!r}")
            m |= 1 << index[lab]
        masks.append(m)
    if not masks:
        raise ValueError("a complex needs at least one facet")
    return SimplicialComplex(labels, maximal_sets(masks))


def faces_of_dim(C: SimplicialComplex, k: int) -> list[frozenset[str]]:
    """The ``k``-faces of ``C`` as label sets, sorted by universe index."""
    if not -1 <= k <= C.dim:
        raise ValueError(f"dimension {k} out of range [-1, {C.dim}]")
    return [frozenset(C.names(f)) for f in C.faces(k)]


def _as_mask(C: SimplicialComplex, face: int | Iterable[str]) -> int:
    return face if isinstance(face, int) else C.mask(face)


def link(C: SimplicialComplex, face: int | Iterable[str]) -> SimplicialComplex:
    """``lk_C(F) = {G ∈ C : F ∪ G ∈ C, F ∩ G = ∅}`` on the universe of ``C``."""
    F = _as_mask(C, face)
    if F not in C.face_set:
        raise ValueError(f"{C.names(F)} is not a face")
    # G1 \ F ⊆ G2 \ F forces G1 ⊆ G2, so this is already an antichain
    return SimplicialComplex(C.labels, [G & ~F for G in C.facets if G & F == F])


def induced(C: SimplicialComplex, S: int | Iterable[str]) -> SimplicialComplex:
    """``C[S]``: the faces of ``C`` contained in the vertex set ``S``."""
    S = _as_mask(C, S)
    if C.is_void:
        return C
    return C.with_facets(G & S for G in C.facets)


def union(*complexes: SimplicialComplex) -> SimplicialComplex:
    """Union of complexes over the merged label universe.

    Labels keep the order in which they first appear.
    """
    labels: list[str] = []
    for C in complexes:
        labels.extend(lab for lab in C.labels if lab not in labels)
    return from_facets(labels, (list(C.names(f)) for C in complexes for f in C.facets))


def join(C1: SimplicialComplex, C2: SimplicialComplex) -> SimplicialComplex:
    """The simplicial join ``C1 ∗ C2``; the label universes must be disjoint."""
    shared = set(C1.labels) & set(C2.labels)
    if shared:
        raise ValueError(f"join operands share labels: {sorted(shared)}")
    labels = C1.labels + C2.labels
    if len(labels) > MAX_VERTICES:
        raise ValueError(f"join would have {len(labels)} > {MAX_VERTICES} vertices")
    shift = len(C1.labels)
    return SimplicialComplex(
        labels, [f1 | (f2 << shift) for f1 in C1.facets for f2 in C2.facets]
    )


def cone(v: str, C: SimplicialComplex) -> SimplicialComplex:
    """``{v} ∗ C``."""
    return join(from_facets([v], [[v]]), C)


def suspension(v: str, w: str, C: SimplicialComplex) -> SimplicialComplex:
    """``⟨{v}, {w}⟩ ∗ C``."""
    return join(from_facets([v, w], [[v], [w]]), C)


def cross_polytope(pairs: Sequence[tuple[str, str]]) -> SimplicialComplex:
    """``◇([x_1..x_d], [y_1..y_d])``: the join of the 0-spheres ``{x_i, y_i}``.

    Labels are ordered ``x_1, y_1, x_2, y_2, ...`` and facets in the
    lexicographic order of the choices (``x`` before ``y``).
    """
    labels = [lab for pair in pairs for lab in pair]
    if len(set(labels)) != len(labels):
        raise ValueError("cross-polytope labels must be distinct")
    facets = [
        [pair[c] for pair, c in zip(pairs, choice)]
        for choice in product((0, 1), repeat=len(pairs))
    ]
    return from_facets(labels, facets)


@dataclass(frozen=True)
class Graph:
    """A simple graph on (a subset of) a labelled universe.

    ``adj[i]`` is the neighbourhood bit set of index ``i``; ``vertex_mask``
    marks which universe indices are vertices of the graph.
    """

    labels: tuple[str, ...]
    adj: tuple[int, ...]
    vertex_mask: int

    def __post_init__(self):
        for i, nb in enumerate(self.adj):
            if nb >> i & 1:
                raise ValueError("graphs have no self-loops")
            for j in bits(nb):
                if not self.adj[j] >> i & 1:
                    raise ValueError("adjacency must be symmetric")

    @property
    def n_vertices(self) -> int:
        return self.vertex_mask.bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in bits(self.vertex_mask) for j in bits(self.adj[i]) if i < j]


def one_skeleton(C: SimplicialComplex) -> Graph:
    return Graph(C.labels, C.adjacency, C.vertex_mask)


def _maximal_cliques(adj: Sequence[int], vertices: int) -> list[int]:
    # Bron-Kerbosch with pivoting on bit sets
    out: list[int] = []
    stack = [(0, vertices, 0)]
    while stack:
        R, P, X = stack.pop()
        if not P:
            if not X:
                out.append(R)
            continue
        pivot = max(bits(P | X), key=lambda u: (adj[u] & P).bit_count())
        for v in bits(P & ~adj[pivot]):
            b = 1 << v
            stack.append((R | b, P & adj[v], X & adj[v]))
            P &= ~b
            X |= b
    return sorted(out)


def clique_complex(G: Graph) -> SimplicialComplex:
    """The flag complex whose faces are the cliques of ``G``."""
    if not G.vertex_mask:
        return SimplicialComplex(G.labels, [0])
    return SimplicialComplex(G.labels, _maximal_cliques(G.adj, G.vertex_mask))


def is_flag(C: SimplicialComplex, through: int | None = None) -> bool:
    """True iff every clique of the 1-skeleton is a face.

    With ``through`` only cliques meeting that vertex set are checked: a
    clique through ``t`` is a face iff removing ``t`` leaves a face of
    ``lk(t)``, so each link is tested against its neighbourhood graph.
    """
    adj = C.adjacency
    if through is not None:
        for t in bits(through & C.vertex_mask):
            faces = link(C, 1 << t).face_set
            if not _cliques_are_faces(faces, adj, adj[t]):
                return False
        return True
    return _cliques_are_faces(C.face_set, adj, C.vertex_mask)


def _cliques_are_faces(faces: frozenset[int], adj: Sequence[int], within: int) -> bool:
    for F in faces:
        common = within
        for i in bits(F):
            common &= adj[i]
        # only extend by vertices above max(F): every clique is reached once
        common &= ~((1 << F.bit_length()) - 1)
        while common:
            low = common & -common
            if F | low not in faces:
                return False
            common ^= low
    return True


def minimal_nonfaces(C: SimplicialComplex) -> list[int]:
    """All inclusion-minimal non-faces on the vertex set of ``C``, sorted."""
    faces = C.face_set
    out = []
    for F in faces:
        above = C.vertex_mask & ~((1 << F.bit_length()) - 1)
        while above:
            low = above & -above
            above ^= low
            N = F | low
            if N in faces:
                continue
            if all(N & ~(1 << i) in faces for i in bits(F)):
                out.append(N)
    return sorted(out, key=lambda m: (m.bit_count(), m))


def boundary_complex(C: SimplicialComplex) -> SimplicialComplex:
    """Complex generated by the ridges lying in exactly one facet.

    Returns the void complex when there are none (closed pseudomanifolds).
    """
    if C.is_void:
        return C
    sizes = {f.bit_count() for f in C.facets}
    if len(sizes) != 1:
        raise ValueError("boundary_complex needs a pure complex")
    counts: Counter[int] = Counter()
    for f in C.facets:
        for i in bits(f):
            counts[f & ~(1 << i)] += 1
    return SimplicialComplex(C.labels, sorted(r for r, c in counts.items() if c == 1))


def apply_vertex_map(C: SimplicialComplex, m: Mapping[str, str]) -> SimplicialComplex:
    """Relabel ``C`` through the injective map ``m`` (must cover the universe)."""
    missing = [lab for lab in C.labels if lab not in m]
    if missing:
        raise ValueError(f"vertex map is not defined on {missing}")
    new_labels = [m[lab] for lab in C.labels]
    if len(set(new_labels)) != len(new_labels):
        raise ValueError("vertex map is not injective")
    return SimplicialComplex(new_labels, C.facets)


def is_automorphism(C: SimplicialComplex, m: Mapping[str, str]) -> bool:
    """True iff ``m`` permutes the vertices and maps the facets onto themselves."""
    image = apply_vertex_map(C, m)
    if set(image.vertices) != set(C.vertices):
        return False
    return image == C

