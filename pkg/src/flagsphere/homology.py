"""Simplicial homology over GF(2) and Q with exact elimination."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .complex import SimplicialComplex, bits

__all__ = [
    "BoundaryMatrix",
    "Field",
    "LBTReport",
    "betti_numbers",
    "boundary_matrix",
    "euler_characteristic",
    "lbt_check",
    "matmul",
    "rank",
]


class Field(str, Enum):
    GF2 = "gf2"
    Q = "q"


@dataclass(frozen=True)
class BoundaryMatrix:
    """``∂_k`` with rows indexed by ``(k-1)``-faces and columns by ``k``-faces."""

    k: int
    field: Field
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]  # entries[r][c]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)


def boundary_matrix(C: SimplicialComplex, k: int, field: Field | str = Field.GF2) -> BoundaryMatrix:
    """``∂_k``; the sign of a facet of a sorted face is ``(-1)^position`` over Q.

    ``∂_0`` maps vertices to the empty face (the augmentation map).
    """
    field = Field(field)
    rows = C.faces(k - 1) if k >= 0 else ()
    cols = C.faces(k) if k >= 0 else ()
    row_pos = {f: i for i, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for c, face in enumerate(cols):
        for pos, v in enumerate(bits(face)):
            r = row_pos[face & ~(1 << v)]
            mat[r][c] = 1 if field is Field.GF2 or pos % 2 == 0 else -1
    return BoundaryMatrix(k, field, rows, cols, tuple(tuple(r) for r in mat))


def matmul(A: BoundaryMatrix, B: BoundaryMatrix) -> list[list[int]]:
    """``A·B`` with entries reduced mod 2 over GF(2)."""
    n, m = A.shape
    m2, p = B.shape
    if m != m2:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    out = [[sum(A.entries[i][j] * B.entries[j][l] for j in range(m)) for l in range(p)] for i in range(n)]
    if A.field is Field.GF2:
        out = [[x % 2 for x in row] for row in out]
    return out


def _rank_gf2(rows: list[int]) -> int:
    # rows packed as ints; keep a basis keyed by leading bit
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            if lead not in basis:
                basis[lead] = r
                break
            r ^= basis[lead]
    return len(basis)


def _rank_bareiss(mat: list[list[int]]) -> int:
    # fraction-free elimination; entries stay integral and exact
    a = [row[:] for row in mat]
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    r = 0
    prev = 1
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, n_rows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, n_cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == n_rows:
            break
    return r


def rank(M: BoundaryMatrix) -> int:
    if not M.rows or not M.cols:
        return 0
    if M.field is Field.GF2:
        packed = []
        for row in M.entries:
            x = 0
            for j, e in enumerate(row):
                if e & 1:
                    x |= 1 << j
            packed.append(x)
        return _rank_gf2(packed)
    return _rank_bareiss([list(r) for r in M.entries])


def _rank_gf2_direct(C: SimplicialComplex, k: int) -> int:
    # columns of ∂_k packed straight from the faces, skipping the dense matrix
    rows = C.faces(k - 1)
    row_pos = {f: i for i, f in enumerate(rows)}
    packed = []
    for face in C.faces(k):
        x = 0
        for v in bits(face):
            x |= 1 << row_pos[face & ~(1 << v)]
        packed.append(x)
    return _rank_gf2(packed)


def betti_numbers(
    C: SimplicialComplex, field: Field | str = Field.GF2, reduced: bool = False
) -> list[int]:
    """``β_0 .. β_dim`` as ``nullity(∂_k) - rank(∂_{k+1})``."""
    field = Field(field)
    if C.is_void:
        raise ValueError("homology of the void complex is not defined here")
    top = C.dim
    ranks = {}
    for k in range(1, top + 2):
        if field is Field.GF2:
            ranks[k] = _rank_gf2_direct(C, k) if C.faces(k) else 0
        else:
            ranks[k] = rank(boundary_matrix(C, k, field))
    ranks[0] = 0
    betti = [len(C.faces(k)) - ranks[k] - ranks[k + 1] for k in range(top + 1)]
    if reduced and betti:
        betti[0] -= 1
    return betti


def euler_characteristic(C: SimplicialComplex) -> int:
    return sum((-1) ** k * len(C.faces(k)) for k in range(C.dim + 1))


@dataclass(frozen=True)
class LBTReport:
    """Edge/vertex counts against the lower bound ``e ≥ 4n`` for 3-manifolds.

    When ``holds`` is False a closed 3-manifold with these counts must have
    vanishing first homology over every field; the check does not verify
    that ``C`` is a manifold.
    """

    n: int
    e: int
    holds: bool

    @property
    def forces_h1_zero(self) -> bool:
        return not self.holds

    def as_dict(self) -> dict:
        return {"n": self.n, "e": self.e, "bound": 4 * self.n, "holds": self.holds,
                "forces_h1_zero": self.forces_h1_zero}


def lbt_check(C: SimplicialComplex) -> LBTReport:
    if C.dim != 3:
        raise ValueError(f"lbt_check needs a 3-dimensional complex, got dim {C.dim}")
    n = C.n_vertices
    e = len(C.edges)
    return LBTReport(n, e, e >= 4 * n)
