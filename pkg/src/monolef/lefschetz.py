"""Weak and strong Lefschetz checks for Artinian monomial algebras.

For a monomial algebra it suffices to test ``l = x1 + ... + xn``; multiplication
by ``l**d`` sends a standard monomial ``u`` to the sum over standard ``v >= u`` of
degree ``deg u + d`` with multinomial coefficient ``d! / prod (v_j - u_j)!``.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod

import numpy as np

from .core import HilbertData, Monomial, MonomialIdeal, hilbert_data, standard_monomials
from .linalg import bareiss_rank, maximal_rank


class Property(str, enum.Enum):
    WEAK = "weak"
    STRONG = "strong"


@dataclass(frozen=True)
class GradedMap:
    """Matrix of multiplication by ``l**jump`` from degree ``source_degree``.

    ``entries`` maps (row, column) to a positive integer; rows index the
    target basis and columns the source basis.
    """

    source_degree: int
    jump: int
    source_basis: tuple[Monomial, ...]
    target_basis: tuple[Monomial, ...]
    entries: dict[tuple[int, int], int] = field(repr=False)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.target_basis), len(self.source_basis)

    def dense(self) -> list[list[int]]:
        rows, cols = self.shape
        out = [[0] * cols for _ in range(rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out


@dataclass(frozen=True)
class Failure:
    d: int
    i: int
    rank: int
    expected: int

    def to_json(self) -> dict:
        return {"d": self.d, "i": self.i, "rank": self.rank, "expected": self.expected}


@dataclass(frozen=True)
class LefschetzReport:
    property: Property
    verdict: bool
    hilbert: HilbertData
    failures: tuple[Failure, ...]
    # coefficients of the linear form used, when it is not the sum of the variables
    linear_form: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {
            "property": self.property.value,
            "verdict": self.verdict,
            "failures": [f.to_json() for f in self.failures],
            "hilbert": list(self.hilbert.values),
        }
        if self.linear_form is not None:
            out["linear_form"] = list(self.linear_form)
        return out


@lru_cache(maxsize=None)
def _multinomial(d: int, parts: tuple[int, ...]) -> int:
    return factorial(d) // prod(factorial(k) for k in parts)


def multiplication_matrix(
    source: tuple[Monomial, ...], target: tuple[Monomial, ...], d: int
) -> dict[tuple[int, int], int]:
    if not source or not target:
        return {}
    diff = np.array(target)[:, None, :] - np.array(source)[None, :, :]
    rows, cols = np.nonzero((diff >= 0).all(axis=2))
    parts = diff[rows, cols].tolist()
    return {(r, c): _multinomial(d, tuple(e)) for r, c, e in zip(rows.tolist(), cols.tolist(), parts)}


def power_map(ideal: MonomialIdeal, i: int, d: int) -> GradedMap:
    """Multiplication by ``(x1 + ... + xn)**d`` from ``[R/I]_i`` to ``[R/I]_{i+d}``."""
    if i < 0 or d < 1:
        raise ValueError(f"need i >= 0 and d >= 1, got i={i}, d={d}")
    source = tuple(standard_monomials(ideal, i))
    target = tuple(standard_monomials(ideal, i + d))
    return GradedMap(i, d, source, target, multiplication_matrix(source, target, d))


def exact_rank(m: GradedMap) -> int:
    rows, cols = m.shape
    if not rows or not cols:
        return 0
    return bareiss_rank(m.dense(), cols)


def _map_verdict(args: tuple[MonomialIdeal, int, int]) -> Failure | None:
    ideal, d, i = args
    m = power_map(ideal, i, d)
    rows, cols = m.shape
    ok, rank = maximal_rank(m.dense(), cols)
    return None if ok else Failure(d, i, rank, min(rows, cols))


def sweep(socle: int, prop: Property) -> list[tuple[int, int]]:
    """The (d, i) pairs that must have maximal rank."""
    if prop is Property.WEAK:
        return [(1, i) for i in range(socle)]
    return [(d, i) for d in range(1, socle + 1) for i in range(socle - d + 1)]


def check_lefschetz(ideal: MonomialIdeal, prop: Property | str = Property.WEAK,
                    workers: int = 1) -> LefschetzReport:
    """Test every required multiplication map for maximal rank.

    With ``workers > 1`` the maps are ranked in a process pool; failures are
    returned sorted by (d, i) either way.
    """
    prop = Property(prop)
    hd = hilbert_data(ideal)
    tasks = [(ideal, d, i) for d, i in sweep(hd.socle_degree, prop)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_map_verdict, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        results = [_map_verdict(t) for t in tasks]
    failures = tuple(sorted((f for f in results if f is not None), key=lambda f: (f.d, f.i)))
    return LefschetzReport(prop, not failures, hd, failures)


def has_wlp(ideal: MonomialIdeal) -> bool:
    return check_lefschetz(ideal, Property.WEAK).verdict


def has_slp(ideal: MonomialIdeal) -> bool:
    return check_lefschetz(ideal, Property.STRONG).verdict


def has_narrow_slp(ideal: MonomialIdeal) -> bool:
    """SLP together with a symmetric Hilbert function."""
    return hilbert_data(ideal).symmetric and has_slp(ideal)
