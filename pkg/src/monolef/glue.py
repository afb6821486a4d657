"""Decomposing a monomial ideal along a monomial, and gluing two ideals back.

Splitting ``K`` along ``m`` gives ``I = K + (m)`` and ``J = K : (m)``; the
standard monomials of ``K`` are those of ``I`` together with ``m`` times those
of ``J``.  Gluing goes the other way: given ``I``, ``J`` and a minimal generator
``m`` of ``I``, the ideal ``K = I_m + m J`` splits back into ``I`` and ``J``
whenever ``I_m : (m)`` lies in ``J``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    Monomial,
    MonomialIdeal,
    add,
    colon_by_monomial,
    hf,
    hilbert_data,
    hilbert_values,
    is_subideal,
    minimalize,
    multiply,
    principal,
    scale,
    standard_basis,
)


class NotApplicableError(ValueError):
    """Raised when the symmetric gluing criterion cannot be applied (I or J is the unit ideal)."""


@dataclass(frozen=True)
class Decomposition:
    k: MonomialIdeal
    m: Monomial
    i: MonomialIdeal
    j: MonomialIdeal
    compatible: dict[int, bool] = field(default_factory=dict, compare=False)
    centre_to_centre: bool | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "K": self.k.to_json(),
            "m": list(self.m),
            "I": self.i.to_json(),
            "J": self.j.to_json(),
            "compatible": {str(d): v for d, v in sorted(self.compatible.items())},
            "centre_to_centre": self.centre_to_centre,
        }


@dataclass(frozen=True)
class GluingSpec:
    i: MonomialIdeal
    j: MonomialIdeal
    m: Monomial
    i_m: MonomialIdeal
    k: MonomialIdeal

    def to_json(self) -> dict:
        return {
            "I": self.i.to_json(),
            "J": self.j.to_json(),
            "m": list(self.m),
            "I_m": self.i_m.to_json(),
            "K": self.k.to_json(),
        }


def split(k: MonomialIdeal, m: Sequence[int]) -> Decomposition:
    m = Monomial(m)
    return Decomposition(k, m, add(k, principal(m)), colon_by_monomial(k, m))


def _values(ideal: MonomialIdeal) -> tuple[int, ...]:
    # the unit-ideal quotient is the zero algebra
    return () if ideal.is_unit else hilbert_values(ideal)


def _compatible(hf_i: Sequence[int], hf_j: Sequence[int], shift: int, d: int) -> bool:
    top = max(len(hf_i), len(hf_j) + shift)
    for t in range(-d, top + 1):
        a, b = hf(hf_i, t), hf(hf_i, t + d)
        p, q = hf(hf_j, t - shift), hf(hf_j, t - shift + d)
        if a < b and not p <= q:
            return False
        if a > b and not p >= q:
            return False
    return True


def hilbert_compatible(k: MonomialIdeal, m: Sequence[int], d: int) -> bool:
    """Whether the Hilbert functions of K+(m) and K:(m) rise and fall together at step ``d``.

    This is the hypothesis under which maximal rank of multiplication by a
    form of degree ``d`` transfers from both pieces to ``R/K``.
    """
    if d < 1:
        raise ValueError("d must be positive")
    dec = split(k, m)
    return _compatible(_values(dec.i), _values(dec.j), dec.m.degree, d)


def compatible_all_d(k: MonomialIdeal, m: Sequence[int]) -> bool:
    dec = split(k, m)
    hf_i, hf_j = _values(dec.i), _values(dec.j)
    socle = len(hilbert_values(k)) - 1
    return all(_compatible(hf_i, hf_j, dec.m.degree, d) for d in range(1, max(socle, 1) + 1))


def centre_to_centre(k: MonomialIdeal, m: Sequence[int]) -> bool:
    """Symmetric gluing test: both pieces symmetric with socle degrees ``r - s = 2 deg m``."""
    dec = split(k, m)
    if dec.i.is_unit or dec.j.is_unit:
        raise NotApplicableError(
            f"K+(m) or K:(m) is the unit ideal for m={list(dec.m)}; the criterion does not apply"
        )
    hi, hj = hilbert_data(dec.i), hilbert_data(dec.j)
    return hi.symmetric and hj.symmetric and hi.socle_degree - hj.socle_degree == 2 * dec.m.degree


def decompose(k: MonomialIdeal, m: Sequence[int], max_d: int | None = None) -> Decomposition:
    """``split`` with the compatibility flags (d = 1..max_d) and centre-to-centre flag filled in."""
    dec = split(k, m)
    if max_d is None:
        max_d = max(len(hilbert_values(k)) - 1, 1)
    flags = {d: hilbert_compatible(k, dec.m, d) for d in range(1, max_d + 1)}
    try:
        ctc: bool | None = centre_to_centre(k, dec.m)
    except NotApplicableError:
        ctc = None
    return Decomposition(dec.k, dec.m, dec.i, dec.j, flags, ctc)


def find_witness(k: MonomialIdeal, d: int | None = None) -> Decomposition | None:
    """First standard monomial ``m`` of positive degree along which ``K`` splits compatibly.

    With ``d`` given the Hilbert condition is tested for that step only;
    with ``d=None`` it must hold for every step up to the socle degree.
    Candidates are scanned in increasing degree, lexicographically within a degree.
    """
    for layer in standard_basis(k)[1:]:
        for m in layer:
            ok = hilbert_compatible(k, m, d) if d is not None else compatible_all_d(k, m)
            if ok:
                return decompose(k, m)
    return None


def generators_without(ideal: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """``I_m``: the ideal generated by the minimal generators of ``I`` other than ``m``."""
    m = Monomial(m)
    if m not in ideal.gens:
        raise ValueError(f"{list(m)} is not a minimal generator")
    return MonomialIdeal(ideal.n, tuple(g for g in ideal.gens if g != m))


def can_glue(i: MonomialIdeal, j: MonomialIdeal, m: Sequence[int]) -> bool:
    m = Monomial(m)
    if m not in i.gens:
        return False
    return is_subideal(colon_by_monomial(generators_without(i, m), m), j)


def glue(i: MonomialIdeal, j: MonomialIdeal, m: Sequence[int]) -> GluingSpec:
    """The gluing ``K = I_m + m J`` of ``I`` and ``J`` along ``m``."""
    m = Monomial(m)
    if i.is_unit or j.is_unit:
        raise ValueError("I and J must be proper ideals")
    if not can_glue(i, j, m):
        raise ValueError(f"I and J cannot be glued along {list(m)}")
    i_m = generators_without(i, m)
    return GluingSpec(i, j, m, i_m, add(i_m, scale(j, m)))


def glue_candidates(i: MonomialIdeal, j: MonomialIdeal) -> list[Monomial]:
    return [m for m in i.gens if can_glue(i, j, m)]


def family_product_linear(d: Sequence[int]) -> MonomialIdeal:
    """Initial ideals of complete intersections of products of linear forms.

    ``d = (d0, ..., d_{n-1})`` gives
    ``(x1^(d1+1), ..., x_{n-1}^(d_{n-1}+1), x1 xn^d0, x2 xn^(d0+d1), ..., xn xn^(d0+...+d_{n-1}))``.
    """
    n = len(d)
    if n < 1 or any(v < 1 for v in d):
        raise ValueError("need at least one positive entry and all entries positive")
    gens = [Monomial.var(k, n, d[k + 1] + 1) for k in range(n - 1)]
    for k in range(n):
        g = [0] * n
        g[k] += 1
        g[n - 1] += sum(d[: k + 1])
        gens.append(Monomial(g))
    return minimalize(gens, n)


def family_squares_squared(n: int) -> MonomialIdeal:
    """The square of the ideal of squares of the variables."""
    if n < 1:
        raise ValueError("n must be positive")
    squares = minimalize([Monomial.var(k, n, 2) for k in range(n)], n)
    return multiply(squares, squares)
