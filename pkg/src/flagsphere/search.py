"""Random walks on flag spheres by edge subdivisions and contractions.

Randomness comes from :class:`random.Random` (Mersenne Twister MT19937)
seeded with ``WalkConfig.seed``; edges are drawn by ``randrange`` from
lists sorted by bit value, so a seed fixes the whole walk.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from collections.abc import Sequence
from pathlib import Path

from .certification import (
    CertificationReport,
    contractible_edges,
    is_contractible,
    is_suspension,
    question_1_5_report,
)
from .complex import (
    MAX_VERTICES,
    SimplicialComplex,
    bits,
    is_flag,
    link,
    maximal_sets,
)
from .homology import euler_characteristic
from .isomorphism import MAX_ISO_VERTICES, is_isomorphic
from .recognition import (
    _absorbs_all,
    certify_3_sphere,
    first_bad_vertex,
    is_2_sphere,
    is_closed_pseudomanifold,
    is_cycle,
)
from .vectors import f_vector, h_from_f

__all__ = [
    "HarvestResult",
    "InvariantViolation",
    "Move",
    "MoveLog",
    "WalkConfig",
    "WalkResult",
    "assert_flag_sphere",
    "contract_edge",
    "harvest",
    "random_walk",
    "replay",
    "subdivide_edge",
]


class InvariantViolation(AssertionError):
    """A move produced something that is not a flag sphere of the same dimension."""


PROPERTIES = ("i", "ii", "iii")


@dataclass(frozen=True)
class WalkConfig:
    seed: int = 0
    n_subdivisions: int = 4
    n_contractions: int = 8
    max_vertices: int = 20
    target_properties: tuple[str, ...] = PROPERTIES
    check_every_step: bool = True

    def __post_init__(self):
        if not 0 < self.max_vertices <= MAX_VERTICES:
            raise ValueError(f"max_vertices must be in 1..{MAX_VERTICES}")
        if self.n_subdivisions < 0 or self.n_contractions < 0:
            raise ValueError("move counts must be non-negative")
        unknown = set(self.target_properties) - set(PROPERTIES)
        if unknown:
            raise ValueError(f"unknown target properties {sorted(unknown)}")


@dataclass(frozen=True)
class Move:
    kind: str  # "subdivide" or "contract"
    edge: tuple[str, str]
    vertex: str  # the new vertex, or the surviving one for a contraction
    f: tuple[int, ...]


@dataclass
class MoveLog:
    moves: list[Move] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.moves)

    def as_dict(self) -> dict:
        return {
            "moves": [
                {"kind": m.kind, "edge": list(m.edge), "vertex": m.vertex, "f": list(m.f)}
                for m in self.moves
            ]
        }

    @classmethod
    def from_dict(cls, data: dict) -> MoveLog:
        return cls(
            [
                Move(m["kind"], tuple(m["edge"]), m["vertex"], tuple(m["f"]))
                for m in data["moves"]
            ]
        )


def _euler_of_sphere(d: int) -> int:
    return 1 + (-1) ** d


def _ridges_ok_near(C: SimplicialComplex, touched: int) -> bool:
    # ridges inside the touched set are the only ones a move can change
    counts: dict[int, int] = {}
    size = None
    for F in C.facets:
        if not F & touched:
            continue
        if size is None:
            size = F.bit_count()
        elif F.bit_count() != size:
            return False
        for v in bits(F):
            R = F & ~(1 << v)
            if R and not R & ~touched:
                counts[R] = counts.get(R, 0) + 1
    return all(c == 2 for c in counts.values())


def assert_flag_sphere(C: SimplicialComplex, d: int, touched: int | None = None) -> None:
    """Raise :class:`InvariantViolation` unless ``C`` looks like a flag ``d``-sphere.

    Dimensions 1 and 2 are recognised exactly.  In dimension 3 the complex
    must be a closed 3-manifold with Euler characteristic 0 and a palindromic
    h-vector.  When ``touched`` is given, only cliques, ridges and vertex
    links inside those vertices are re-checked (a move changes nothing
    else).  Above dimension 3 only the pseudomanifold and face-number
    conditions are tested.
    """
    if C.dim != d:
        raise InvariantViolation(f"dimension changed to {C.dim}, expected {d}")
    if d == 3 and touched is not None:
        _check_near_3(C, touched)
    else:
        if not is_flag(C, touched):
            raise InvariantViolation("complex is not flag")
        if d == 1:
            ok = is_cycle(C)
        elif d == 2:
            ok = is_2_sphere(C)
        else:
            ok = is_closed_pseudomanifold(C) and euler_characteristic(C) == _euler_of_sphere(d)
            if ok and d == 3:
                bad = first_bad_vertex(C)
                if bad is not None:
                    raise InvariantViolation(f"link of {C.labels[bad]} is not a 2-sphere")
        if not ok:
            raise InvariantViolation(f"not a {d}-sphere")
    h = h_from_f(f_vector(C), d + 1)
    if h != h[::-1]:
        raise InvariantViolation(f"h-vector {h} is not palindromic")


def _flag_at(adj: Sequence[int], t: int, L: SimplicialComplex) -> bool:
    """Every clique through ``t`` is a face, given that ``L = lk(t)`` is a 2-sphere.

    The graph on ``N(t)`` must be the graph of ``L``, and each edge of ``L``
    must have exactly its two triangle apexes as common neighbours (a third
    one spans an empty triangle).  The tetrahedron boundary is the only
    2-sphere whose edges pass this yet misses a clique.
    """
    nbrs = adj[t]
    ladj = L.adjacency
    if L.n_vertices == 4:
        return False
    for a in bits(nbrs):
        if adj[a] & nbrs != ladj[a]:
            return False
        for b in bits(ladj[a] & ~((2 << a) - 1)):
            if (ladj[a] & ladj[b]).bit_count() != 2:
                return False
    return True


def _check_near_3(C: SimplicialComplex, touched: int) -> None:
    adj = C.adjacency
    for t in bits(touched & C.vertex_mask):
        L = link(C, 1 << t)
        if not is_2_sphere(L):
            raise InvariantViolation(f"link of {C.labels[t]} is not a 2-sphere")
        if not _flag_at(adj, t, L):
            raise InvariantViolation("complex is not flag")
    if not (_ridges_ok_near(C, touched) and _absorbs_all(list(C.facets))):
        raise InvariantViolation("not a 3-sphere")
    if euler_characteristic(C) != 0:
        raise InvariantViolation("not a 3-sphere")


def _fresh_label(C: SimplicialComplex, counter: int = 1) -> str:
    taken = set(C.labels)
    while f"s{counter}" in taken:
        counter += 1
    return f"s{counter}"


def _edge(C: SimplicialComplex, e: int | tuple[str, str]) -> int:
    m = e if isinstance(e, int) else C.mask(e)
    if m.bit_count() != 2 or m not in C.face_set:
        raise ValueError(f"{C.names(m)} is not an edge")
    return m


def subdivide_edge(
    C: SimplicialComplex,
    e: int | tuple[str, str],
    new_label: str | None = None,
    check: bool = True,
) -> SimplicialComplex:
    """Put a new vertex ``w`` in the middle of ``e = {u, v}``.

    Each facet ``F ⊇ e`` becomes ``F - u + w`` and ``F - v + w``.
    """
    m = _edge(C, e)
    if C.n_vertices < len(C.labels):
        names = C.names(m)
        C = C.compact()
        m = C.mask(names)
    if len(C.labels) >= MAX_VERTICES:
        raise ValueError(f"subdivision would exceed {MAX_VERTICES} vertices")
    w_label = new_label or _fresh_label(C)
    if w_label in C.labels:
        raise ValueError(f"label {w_label!r} already in use")
    w = 1 << len(C.labels)
    u, v = (1 << i for i in bits(m))
    facets = []
    for F in C.facets:
        if F & m == m:
            facets.append(F & ~u | w)
            facets.append(F & ~v | w)
        else:
            facets.append(F)
    out = SimplicialComplex(C.labels + (w_label,), facets)
    if check:
        star = 0
        for F in C.facets:
            if F & m == m:
                star |= F
        assert_flag_sphere(out, C.dim, touched=star | w)
    return out


def contract_edge(
    C: SimplicialComplex, e: int | tuple[str, str], check: bool = True
) -> SimplicialComplex:
    """Identify the endpoints of a contractible edge.

    The endpoint with the lexicographically larger label is merged into the
    smaller one and dropped from the universe.
    """
    m = _edge(C, e)
    if not is_contractible(C, m):
        raise ValueError(f"edge {C.names(m)} is not contractible (it lies in an induced 4-cycle)")
    a, b = bits(m)
    keep, drop = (a, b) if C.labels[a] < C.labels[b] else (b, a)
    kb, db = 1 << keep, 1 << drop
    merged = SimplicialComplex(
        C.labels, maximal_sets(F & ~db | kb if F & db else F for F in C.facets)
    ).compact()
    if check:
        touched = merged.mask(
            C.names((C.adjacency[keep] | C.adjacency[drop] | kb) & ~db)
        )
        assert_flag_sphere(merged, C.dim, touched=touched)
    return merged


def replay(start: SimplicialComplex, log: MoveLog, check: bool = False) -> SimplicialComplex:
    """Re-run the moves of ``log`` from ``start``."""
    C = start
    for mv in log.moves:
        if mv.kind == "subdivide":
            C = subdivide_edge(C, mv.edge, new_label=mv.vertex, check=check)
        elif mv.kind == "contract":
            C = contract_edge(C, mv.edge, check=check)
        else:
            raise ValueError(f"unknown move kind {mv.kind!r}")
        if f_vector(C) != mv.f:
            raise ValueError(f"replay diverged at move {mv}")
    return C


@dataclass
class WalkResult:
    final: SimplicialComplex
    log: MoveLog
    report: CertificationReport | None
    truncated: bool = False
    targets: tuple[str, ...] = PROPERTIES

    @property
    def meets_target(self) -> bool:
        return self.report is not None and _meets(self.report, self.targets)


def _meets(report: CertificationReport, targets: tuple[str, ...]) -> bool:
    if not report.flag:
        return False
    checks = {
        "i": report.suspension is None,
        "ii": not report.contractible_edges,
        "iii": bool(report.equators_are_links),
    }
    return all(checks[t] for t in targets)


def random_walk(
    start: SimplicialComplex, cfg: WalkConfig, certify: bool = True
) -> WalkResult:
    """``cfg.n_subdivisions`` random subdivisions, then up to
    ``cfg.n_contractions`` random contractions of contractible edges.

    Edges are drawn uniformly.  The walk stops contracting once no edge is
    contractible, and stops subdividing (``truncated``) at the vertex budget.
    """
    rng = random.Random(cfg.seed)
    C = start
    d = C.dim
    log = MoveLog()
    truncated = False
    counter = 1
    for _ in range(cfg.n_subdivisions):
        if C.n_vertices + 1 > cfg.max_vertices:
            truncated = True
            break
        edges = C.edges
        e = edges[rng.randrange(len(edges))]
        label = _fresh_label(C, counter)
        counter = int(label[1:]) + 1
        edge_names = C.names(e)
        C = subdivide_edge(C, e, new_label=label, check=cfg.check_every_step)
        log.moves.append(Move("subdivide", edge_names, label, f_vector(C)))
    for _ in range(cfg.n_contractions):
        candidates = contractible_edges(C)
        if not candidates:
            break
        e = candidates[rng.randrange(len(candidates))]
        edge_names = C.names(e)
        keep = min(edge_names)
        C = contract_edge(C, e, check=cfg.check_every_step)
        log.moves.append(Move("contract", edge_names, keep, f_vector(C)))
    report = None
    if certify:
        want_iii = "iii" in cfg.target_properties and d <= 3
        report = question_1_5_report(C, equator_check=want_iii and _cheap_i_ii(C, cfg))
    return WalkResult(C, log, report, truncated, tuple(cfg.target_properties))


def _cheap_i_ii(C: SimplicialComplex, cfg: WalkConfig) -> bool:
    # equator enumeration is exponential; only run it when (i)/(ii) targets already hold
    if "i" in cfg.target_properties and is_suspension(C) is not None:
        return False
    if "ii" in cfg.target_properties and contractible_edges(C):
        return False
    return True


@dataclass
class HarvestResult:
    walks: int = 0
    steps: int = 0
    truncated: int = 0
    finds: list[dict] = field(default_factory=list)


def _write_json(path: Path, data: dict) -> None:
    path.write_text(json.dumps(data, indent=2) + "\n")


def harvest(
    start: SimplicialComplex,
    cfg: WalkConfig,
    total_steps: int,
    out_dir: str | Path | None = None,
    vertex_range: tuple[int, int] = (13, 16),
    name: str = "walk",
) -> HarvestResult:
    """Run walks with seeds ``cfg.seed, cfg.seed + 1, ...`` until at least
    ``total_steps`` moves were made, keeping non-isomorphic finals that meet
    ``cfg.target_properties`` and have a vertex count in ``vertex_range``.

    Each find is written to ``out_dir`` as ``<name>-<seed>.json`` (complex),
    ``.moves.json`` and ``.report.json``, read back and certified again.
    """
    from .io import read_complex, write_complex

    res = HarvestResult()
    kept: list[SimplicialComplex] = []
    out = Path(out_dir) if out_dir is not None else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    seed = cfg.seed
    lo, hi = vertex_range
    while res.steps < total_steps:
        walk_cfg = WalkConfig(
            seed, cfg.n_subdivisions, cfg.n_contractions, cfg.max_vertices,
            cfg.target_properties, cfg.check_every_step,
        )
        w = random_walk(start, walk_cfg)
        res.walks += 1
        res.steps += len(w.log)
        res.truncated += w.truncated
        seed += 1
        if not len(w.log):
            if cfg.n_subdivisions == 0 and not contractible_edges(start):
                break  # nothing can ever move
            continue
        C = w.final
        if not (lo <= C.n_vertices <= hi and w.meets_target):
            continue
        if C.n_vertices <= MAX_ISO_VERTICES and any(
            k.n_vertices == C.n_vertices and is_isomorphic(k, C) for k in kept
        ):
            continue
        kept.append(C)
        find = {
            "seed": walk_cfg.seed,
            "n_vertices": C.n_vertices,
            "f": list(f_vector(C)),
            "moves": len(w.log),
        }
        if out is not None:
            stem = out / f"{name}-{walk_cfg.seed}"
            write_complex(C, f"{stem}.json")
            _write_json(Path(f"{stem}.moves.json"), w.log.as_dict())
            _write_json(Path(f"{stem}.report.json"), w.report.as_dict())
            again = read_complex(f"{stem}.json")
            rep = question_1_5_report(again)
            find["path"] = f"{stem}.json"
            find["recertified"] = bool(rep.question_1_5) and again == C
        if C.dim == 3:
            find["strength"] = certify_3_sphere(C, check_shelling=False).strength
        res.finds.append(find)
    return res
