"""f-, h- and γ-vectors.

``f`` is indexed from the empty face: ``f[0] = f_{-1} = 1``, ``f[i] = f_{i-1}``.
For a pure ``(d-1)``-dimensional complex ``h`` has ``d + 1`` entries and
``γ`` has ``⌊d/2⌋ + 1`` entries, defined by
``h(t) = Σ γ_i t^i (1 + t)^(d - 2i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complex import SimplicialComplex

__all__ = [
    "FHGammaVectors",
    "GammaUndefined",
    "f_from_h",
    "f_vector",
    "face_vectors",
    "gamma_from_h",
    "h_from_f",
    "h_from_gamma",
]


class GammaUndefined(ValueError):
    """The h-vector is not of the form Σ γ_i t^i (1+t)^(d-2i)."""


def f_vector(C: SimplicialComplex) -> tuple[int, ...]:
    if C.is_void:
        return ()
    return tuple(len(C.faces(k)) for k in range(-1, C.dim + 1))


def h_from_f(f: tuple[int, ...] | list[int], d: int) -> tuple[int, ...]:
    """``h_k = Σ_{i≤k} (-1)^(k-i) C(d-i, k-i) f_{i-1}`` for ``k = 0..d``."""
    if len(f) != d + 1:
        raise ValueError(f"f-vector of a (d-1)-complex has d+1 = {d + 1} entries, got {len(f)}")
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def f_from_h(h: tuple[int, ...] | list[int], d: int) -> tuple[int, ...]:
    """Inverse of :func:`h_from_f`: ``f_{k-1} = Σ_{i≤k} C(d-i, k-i) h_i``."""
    if len(h) != d + 1:
        raise ValueError(f"h-vector needs d+1 = {d + 1} entries, got {len(h)}")
    return tuple(sum(comb(d - i, k - i) * h[i] for i in range(k + 1)) for k in range(d + 1))


def _binomial_row(n: int) -> list[int]:
    return [comb(n, j) for j in range(n + 1)]


def gamma_from_h(h: tuple[int, ...] | list[int], d: int) -> tuple[int, ...]:
    """Peel off ``γ_i t^i (1+t)^(d-2i)`` starting from ``γ_0 = h_0``.

    Raises :class:`GammaUndefined` if a nonzero remainder is left over.
    """
    if len(h) != d + 1:
        raise ValueError(f"h-vector needs d+1 = {d + 1} entries, got {len(h)}")
    rest = list(h)
    gamma = []
    for i in range(d // 2 + 1):
        g = rest[i]
        gamma.append(g)
        for j, c in enumerate(_binomial_row(d - 2 * i)):
            rest[i + j] -= g * c
    if any(rest):
        raise GammaUndefined(f"h = {tuple(h)} leaves remainder {tuple(rest)}")
    return tuple(gamma)


def h_from_gamma(gamma: tuple[int, ...] | list[int], d: int) -> tuple[int, ...]:
    h = [0] * (d + 1)
    for i, g in enumerate(gamma):
        for j, c in enumerate(_binomial_row(d - 2 * i)):
            h[i + j] += g * c
    return tuple(h)


@dataclass(frozen=True)
class FHGammaVectors:
    f: tuple[int, ...]
    h: tuple[int, ...]
    gamma: tuple[int, ...] | None  # None when γ is undefined

    @property
    def d(self) -> int:
        return len(self.f) - 1

    def as_dict(self) -> dict:
        return {
            "f": list(self.f),
            "h": list(self.h),
            "gamma": list(self.gamma) if self.gamma is not None else "undefined",
        }


def face_vectors(C: SimplicialComplex) -> FHGammaVectors:
    """All three vectors of ``C``, read as a (dim C)-dimensional complex."""
    f = f_vector(C)
    d = len(f) - 1
    h = h_from_f(f, d)
    try:
        gamma: tuple[int, ...] | None = gamma_from_h(h, d)
    except GammaUndefined:
        gamma = None
    return FHGammaVectors(f, h, gamma)
