"""Equigenerated monomial almost complete intersections in three variables.

``R_{a,b,c} = k[x,y,z] / (x^d, y^d, z^d, x^a y^b z^c)`` with ``a >= b >= c >= 1``
and ``d = a + b + c``.  Besides constructors this module holds the predicted
WLP/SLP classification, the twin-peak Hilbert values, swap-fixed monomial
counts and a scanner comparing computed verdicts with the predictions.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Sequence

from .core import Monomial, MonomialIdeal, hilbert_values, minimalize, standard_monomials
from .lefschetz import Property, check_lefschetz

SLP_SCAN_MAX_D = 15


@dataclass(frozen=True, order=True)
class MaciParams:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if not (self.a >= self.b >= self.c >= 1):
            raise ValueError(f"need a >= b >= c >= 1, got ({self.a}, {self.b}, {self.c})")

    @property
    def d(self) -> int:
        return self.a + self.b + self.c

    @property
    def k(self) -> int | None:
        """``k`` with ``d = 6k + 3``, or None when ``d`` has another residue."""
        return (self.d - 3) // 6 if self.d % 6 == 3 else None


def triples(d: int) -> list[MaciParams]:
    """All (a, b, c) with a >= b >= c >= 1 summing to ``d``, in increasing order."""
    return [MaciParams(a, b, d - a - b)
            for a in range(1, d)
            for b in range(1, a + 1)
            if 1 <= d - a - b <= b]


def maci_ideal(p: MaciParams) -> MonomialIdeal:
    d = p.d
    return minimalize([(d, 0, 0), (0, d, 0), (0, 0, d), (p.a, p.b, p.c)], 3)


def mixed_power_ideal(n: int, a: int) -> MonomialIdeal:
    """``(x1^a, ..., xn^a, x1^(a-1) x2)``."""
    if n < 2 or a < 2:
        raise ValueError("need n >= 2 and a >= 2")
    mixed = [0] * n
    mixed[0], mixed[1] = a - 1, 1
    return minimalize([Monomial.var(k, n, a) for k in range(n)] + [Monomial(mixed)], n)


# name used by the published interface
thm51_ideal = mixed_power_ideal


# name used by the published interface
thm51_ideal = mixed_power_ideal


def predict_wlp(p: MaciParams) -> bool:
    """Predicted WLP: fails exactly when d = 6k+3 with a < 4k+2 and two exponents coincide."""
    k = p.k
    twin = k is not None and p.a < 4 * k + 2
    repeated = p.a == p.b or p.b == p.c
    return not (twin and repeated)


def predict_slp(exponents: Sequence[int] | MaciParams, degree: int | None = None) -> bool:
    """Predicted SLP of ``(x^D, y^D, z^D, x^e1 y^e2 z^e3)`` with ``e1 + e2 + e3 = D``.

    Up to permuting variables the predicted SLP cases are the exponent
    patterns (D-1, 1, 0) for D >= 2, (D-2, 1, 1) for D >= 4, (2, 2, 1) and (3, 2, 2).
    """
    if isinstance(exponents, MaciParams):
        exponents, degree = (exponents.a, exponents.b, exponents.c), exponents.d
    e = tuple(sorted(exponents, reverse=True))
    if len(e) != 3 or any(v < 0 for v in e):
        raise ValueError("expected three non-negative exponents")
    D = sum(e) if degree is None else degree
    if sum(e) != D:
        return False
    return (
        (D >= 2 and e == (D - 1, 1, 0))
        or (D >= 4 and e == (D - 2, 1, 1))
        or e == (2, 2, 1)
        or e == (3, 2, 2)
    )


def is_open_case(p: MaciParams) -> bool:
    """d = 6k+3 with 4k+2 > a > b > c > 0: WLP neither proved nor excluded."""
    k = p.k
    return k is not None and 4 * k + 2 > p.a > p.b > p.c > 0


def twin_peak_values(p: MaciParams) -> tuple[int, int]:
    """Hilbert function of ``R_{a,b,c}`` in degrees 8k+2 and 8k+3."""
    k = p.k
    if k is None or not p.a < 4 * k + 2:
        raise ValueError(f"{p} does not satisfy d = 6k+3 with a < 4k+2")
    values = hilbert_values(maci_ideal(p))
    get = lambda t: values[t] if t < len(values) else 0  # noqa: E731
    return get(8 * k + 2), get(8 * k + 3)


def fixed_count(p: MaciParams | MonomialIdeal, degree: int, swap: tuple[int, int]) -> int:
    """Standard monomials of ``degree`` left unchanged by exchanging two variables (0-based indices)."""
    i, j = swap
    if i == j:
        raise ValueError("swap indices must differ")
    ideal = maci_ideal(p) if isinstance(p, MaciParams) else p
    return sum(1 for m in standard_monomials(ideal, degree) if m[i] == m[j])


@dataclass(frozen=True)
class ScanRow:
    a: int
    b: int
    c: int
    d: int
    computed_wlp: bool
    predicted_wlp: bool
    computed_slp: bool | None
    predicted_slp: bool
    open_case: bool

    @property
    def params(self) -> MaciParams:
        return MaciParams(self.a, self.b, self.c)

    @property
    def agree_wlp(self) -> bool:
        return self.computed_wlp == self.predicted_wlp

    @property
    def agree_slp(self) -> bool | None:
        return None if self.computed_slp is None else self.computed_slp == self.predicted_slp

    def to_json(self) -> dict:
        out = asdict(self)
        out.update(agree_wlp=self.agree_wlp, agree_slp=self.agree_slp)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ScanRow":
        names = cls.__dataclass_fields__
        return cls(**{k: v for k, v in data.items() if k in names})


@dataclass(frozen=True)
class ScanReport:
    rows: tuple[ScanRow, ...]

    @property
    def disagreements(self) -> list[ScanRow]:
        return [r for r in self.rows if not r.agree_wlp or r.agree_slp is False]

    def summary(self) -> dict:
        return {
            "rows": len(self.rows),
            "wlp_failures": sum(not r.computed_wlp for r in self.rows),
            "slp_checked": sum(r.computed_slp is not None for r in self.rows),
            "disagreements": [(r.a, r.b, r.c) for r in self.disagreements],
            "open_cases": [(r.a, r.b, r.c) for r in self.rows if r.open_case],
        }

    def jsonl(self) -> str:
        return "".join(json.dumps(r.to_json()) + "\n" for r in self.rows)


def scan_row(p: MaciParams, slp: bool = False) -> ScanRow:
    ideal = maci_ideal(p)
    wlp = check_lefschetz(ideal, Property.WEAK).verdict
    computed_slp = check_lefschetz(ideal, Property.STRONG).verdict if slp else None
    return ScanRow(p.a, p.b, p.c, p.d, wlp, predict_wlp(p), computed_slp, predict_slp(p), is_open_case(p))


def _row_task(args: tuple[MaciParams, bool]) -> ScanRow:
    return scan_row(*args)


def scan(d_values: Iterable[int], slp: bool = False, workers: int = 1,
         known: dict[tuple[int, int, int], ScanRow] | None = None,
         on_row: Callable[[ScanRow], None] | None = None) -> ScanReport:
    """Compute verdicts for every triple with the given ``d`` values and compare with predictions.

    ``known`` supplies previously computed rows (e.g. from a cache file) that
    are reused instead of recomputed; ``on_row`` is called for each freshly
    computed row.  Output order is independent of ``workers``.
    """
    params = []
    for d in d_values:
        if d < 3:
            raise ValueError(f"d must be at least 3, got {d}")
        params.extend(triples(d))
    known = known or {}
    todo = [p for p in params if _reusable(known.get((p.a, p.b, p.c)), slp) is None]
    fresh: dict[MaciParams, ScanRow] = {}
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for p, row in zip(todo, pool.map(_row_task, [(p, slp) for p in todo])):
                fresh[p] = row
                if on_row:
                    on_row(row)
    else:
        for p in todo:
            fresh[p] = scan_row(p, slp)
            if on_row:
                on_row(fresh[p])
    rows = [fresh.get(p) or _reusable(known.get((p.a, p.b, p.c)), slp) for p in params]
    return ScanReport(tuple(rows))  # type: ignore[arg-type]


def _reusable(row: ScanRow | None, slp: bool) -> ScanRow | None:
    if row is None or (slp and row.computed_slp is None):
        return None
    return row
