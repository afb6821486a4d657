"""Monomials, monomial ideals and Hilbert functions of Artinian quotients.

A monomial in ``n`` variables is an exponent vector.  A monomial ideal is
stored by its minimal generating set, kept in a canonical order so that two
ideals are equal exactly when their generator tuples are equal.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

ALIASES = ("x", "y", "z", "w")


class Monomial(tuple):
    """Exponent vector of a monomial; behaves like an immutable tuple of ints."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int] = ()):
        exps = tuple(exponents)
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {exps!r}")
        return super().__new__(cls, exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> "Monomial":
        """The pure power ``x_{i+1}^power`` (``i`` is 0-based)."""
        exps = [0] * n
        exps[i] = power
        return cls(exps)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def divides(self, other: Sequence[int]) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def __mul__(self, other):  # type: ignore[override]
        _check_same_n(self, other)
        return Monomial(a + b for a, b in zip(self, other))

    def __truediv__(self, other: Sequence[int]) -> "Monomial":
        _check_same_n(self, other)
        if not Monomial(other).divides(self):
            raise ValueError(f"{other!r} does not divide {self!r}")
        return Monomial(a - b for a, b in zip(self, other))

    def gcd(self, other: Sequence[int]) -> "Monomial":
        _check_same_n(self, other)
        return Monomial(min(a, b) for a, b in zip(self, other))

    def lcm(self, other: Sequence[int]) -> "Monomial":
        _check_same_n(self, other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    def pure_power_index(self) -> int | None:
        """Index of the only variable occurring, or None if not a pure power."""
        support = [i for i, e in enumerate(self) if e]
        return support[0] if len(support) == 1 else None

    def __repr__(self) -> str:
        return f"Monomial({render_monomial(self)})"


def _check_same_n(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise ValueError(f"variable count mismatch: {len(a)} vs {len(b)}")


def order_key(m: Sequence[int]) -> tuple:
    """Sort key for the canonical listing: by degree, then lex with x1 first."""
    return (sum(m), tuple(-e for e in m))


def grlex_key(m: Sequence[int]) -> tuple:
    """Key of the graded lex monomial order (x1 > x2 > ... > xn); larger is bigger."""
    return (sum(m), tuple(m))


def _minimal(gens: Iterable[Sequence[int]]) -> tuple[Monomial, ...]:
    ordered = sorted({Monomial(g) for g in gens}, key=order_key)
    kept: list[Monomial] = []
    # ascending degree: a divisor of g always appears before g
    for g in ordered:
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators in canonical order.

    Build instances with :func:`minimalize` (or :meth:`from_gens`); the raw
    constructor trusts its input.
    """

    n: int
    gens: tuple[Monomial, ...]

    @classmethod
    def from_gens(cls, gens: Iterable[Sequence[int]], n: int | None = None) -> "MonomialIdeal":
        return minimalize(gens, n)

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial.one(n),))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @property
    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def __contains__(self, m: Sequence[int]) -> bool:
        return contains(self, m)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return add(self, other)

    def __str__(self) -> str:
        return render_ideal(self)

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict | str) -> "MonomialIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        return minimalize([Monomial(g) for g in data["gens"]], int(data["n"]))


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Ideal generated by ``gens`` with redundant generators removed."""
    gens = [Monomial(g) for g in gens]
    lengths = {len(g) for g in gens}
    if n is None:
        if not lengths:
            raise ValueError("cannot infer the variable count of an empty generating set")
        n = lengths.pop() if len(lengths) == 1 else -1
    if n < 1 or any(length != n for length in lengths):
        raise ValueError(f"exponent vectors of mixed or wrong length for n={n}: {sorted(lengths)}")
    return MonomialIdeal(n, _minimal(gens))


def principal(m: Sequence[int]) -> MonomialIdeal:
    m = Monomial(m)
    return MonomialIdeal(len(m), (m,))


def add(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    if i.n != j.n:
        raise ValueError(f"variable count mismatch: {i.n} vs {j.n}")
    return MonomialIdeal(i.n, _minimal(i.gens + j.gens))


def multiply(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    if i.n != j.n:
        raise ValueError(f"variable count mismatch: {i.n} vs {j.n}")
    return MonomialIdeal(i.n, _minimal(g * h for g in i.gens for h in j.gens))


def scale(i: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """The ideal ``m * I``."""
    m = Monomial(m)
    _check_same_n(m, Monomial.one(i.n))
    return MonomialIdeal(i.n, tuple(m * g for g in i.gens))


def colon_by_monomial(i: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """The colon ideal ``I : (m)``."""
    m = Monomial(m)
    _check_same_n(m, Monomial.one(i.n))
    return MonomialIdeal(i.n, _minimal(Monomial(max(a - b, 0) for a, b in zip(g, m)) for g in i.gens))


def contains(i: MonomialIdeal, m: Sequence[int]) -> bool:
    if len(m) != i.n:
        raise ValueError(f"variable count mismatch: {i.n} vs {len(m)}")
    return any(all(a <= b for a, b in zip(g, m)) for g in i.gens)


def is_subideal(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    """True iff ``I`` is contained in ``J``."""
    return all(contains(j, g) for g in i.gens)


def pure_power_bounds(i: MonomialIdeal) -> list[int | None]:
    """Smallest pure-power exponent of each variable among the generators."""
    bounds: list[int | None] = [None] * i.n
    for g in i.gens:
        k = g.pure_power_index()
        if k is not None and (bounds[k] is None or g[k] < bounds[k]):
            bounds[k] = g[k]
    return bounds


def is_artinian(i: MonomialIdeal) -> bool:
    if i.is_unit:
        return True
    return all(b is not None for b in pure_power_bounds(i))


def degree_bound(i: MonomialIdeal) -> int:
    """Upper bound on the degree of any standard monomial of an Artinian ideal."""
    _require_artinian(i)
    if i.is_unit:
        return -1
    return sum(b - 1 for b in pure_power_bounds(i))  # type: ignore[operator]


def _require_artinian(i: MonomialIdeal) -> None:
    if not is_artinian(i):
        raise ValueError(f"ideal is not Artinian: {render_ideal(i)}")


@lru_cache(maxsize=4096)
def _standard_by_degree(i: MonomialIdeal) -> tuple[tuple[Monomial, ...], ...]:
    if i.is_unit:
        return ()
    bounds = pure_power_bounds(i)
    buckets: list[list[Monomial]] = [[] for _ in range(degree_bound(i) + 1)]
    for exps in product(*(range(b) for b in bounds)):  # type: ignore[arg-type]
        if not contains(i, exps):
            buckets[sum(exps)].append(Monomial(exps))
    return tuple(tuple(sorted(b, key=order_key)) for b in buckets)


def standard_basis(i: MonomialIdeal) -> tuple[tuple[Monomial, ...], ...]:
    """Standard monomials of an Artinian ideal grouped by degree (index = degree)."""
    _require_artinian(i)
    return _standard_by_degree(i)


def standard_monomials(i: MonomialIdeal, degree: int) -> list[Monomial]:
    """Monomials of the given degree outside ``I``, in canonical order."""
    basis = standard_basis(i)
    if 0 <= degree < len(basis):
        return list(basis[degree])
    return []


@dataclass(frozen=True)
class HilbertData:
    values: tuple[int, ...]
    socle_degree: int
    symmetric: bool
    unimodal: bool

    def __getitem__(self, k: int) -> int:
        return hf(self.values, k)

    def to_json(self) -> dict:
        return {
            "values": list(self.values),
            "socle_degree": self.socle_degree,
            "symmetric": self.symmetric,
            "unimodal": self.unimodal,
        }


def hf(values: Sequence[int], k: int) -> int:
    """Hilbert function lookup, zero outside the stored range."""
    return values[k] if 0 <= k < len(values) else 0


def is_unimodal(values: Sequence[int]) -> bool:
    k = 0
    while k + 1 < len(values) and values[k] <= values[k + 1]:
        k += 1
    while k + 1 < len(values) and values[k] >= values[k + 1]:
        k += 1
    return k >= len(values) - 1


def is_symmetric(values: Sequence[int]) -> bool:
    return list(values) == list(reversed(values))


def hilbert_values(i: MonomialIdeal) -> tuple[int, ...]:
    """Hilbert function of ``R/I``; the empty tuple for the unit ideal."""
    counts = [len(b) for b in standard_basis(i)]
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def hilbert_data(i: MonomialIdeal) -> HilbertData:
    if i.is_unit:
        raise ValueError("the quotient by the unit ideal is zero")
    values = hilbert_values(i)
    return HilbertData(values, len(values) - 1, is_symmetric(values), is_unimodal(values))


def verify_split(k: MonomialIdeal, m: Sequence[int]) -> bool:
    """Check that the standard monomials of K are those of K+(m) plus m times those of K:(m)."""
    m = Monomial(m)
    if k.is_unit:
        raise ValueError("K must be proper")
    ideal_i = add(k, principal(m))
    ideal_j = colon_by_monomial(k, m)
    std_k, std_i, std_j = standard_basis(k), standard_basis(ideal_i), standard_basis(ideal_j)
    top = max(len(std_k), len(std_i), len(std_j) + m.degree)
    for t in range(top):
        left = set(std_k[t]) if t < len(std_k) else set()
        from_i = set(std_i[t]) if t < len(std_i) else set()
        tj = t - m.degree
        from_j = [m * u for u in std_j[tj]] if 0 <= tj < len(std_j) else []
        if len(set(from_j)) != len(from_j) or from_i & set(from_j):
            return False
        if left != from_i | set(from_j):
            return False
    return True


# -- text and JSON forms ----------------------------------------------------

class ParseError(ValueError):
    """Syntax error in an ideal or polynomial; ``pos`` is the 1-based character column."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at offset {pos} in {text!r}")
        self.text = text
        self.pos = pos


_VAR_RE = re.compile(r"x(\d+)|([xyzw])(?!\d)")
_INT_RE = re.compile(r"\d+")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.k = 0

    def skip(self) -> None:
        while self.k < len(self.text) and self.text[self.k].isspace():
            self.k += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.k] if self.k < len(self.text) else ""

    def fail(self, message: str):
        raise ParseError(message, self.text, self.k + 1)

    def integer(self) -> int:
        self.skip()
        mt = _INT_RE.match(self.text, self.k)
        if not mt:
            self.fail("expected an integer")
        self.k = mt.end()
        return int(mt.group())

    def variable(self) -> int | None:
        """0-based variable index, or None if no variable starts here."""
        self.skip()
        mt = _VAR_RE.match(self.text, self.k)
        if not mt:
            return None
        self.k = mt.end()
        if mt.group(1) is not None:
            idx = int(mt.group(1)) - 1
            if idx < 0:
                raise ParseError("variables are numbered from x1", self.text, mt.start() + 1)
            return idx
        return ALIASES.index(mt.group(2))

    def monomial(self) -> dict[int, int]:
        """Parse ``1`` or a product of powers; returns {variable index: exponent}."""
        exps: dict[int, int] = {}
        if self.peek() == "1" and not _INT_RE.match(self.text, self.k + 1):
            self.k += 1
            return exps
        while True:
            start = self.k
            idx = self.variable()
            if idx is None:
                self.k = start
                self.skip()
                self.fail("expected a variable")
            power = 1
            if self.peek() == "^":
                self.k += 1
                power = self.integer()
            exps[idx] = exps.get(idx, 0) + power
            nxt = self.peek()
            if nxt == "*":
                self.k += 1
            elif nxt and _VAR_RE.match(self.text, self.k):
                continue
            else:
                return exps


def _to_monomial(exps: dict[int, int], n: int) -> Monomial:
    out = [0] * n
    for idx, e in exps.items():
        out[idx] = e
    return Monomial(out)


def _resolve_n(found: Iterable[dict[int, int]], n: int | None, text: str) -> int:
    top = max((idx + 1 for exps in found for idx in exps), default=0)
    if n is None:
        return max(top, 1)
    if top > n:
        raise ParseError(f"variable x{top} exceeds the declared variable count {n}", text, 1)
    return n


def parse_monomial(text: str, n: int | None = None) -> Monomial:
    sc = _Scanner(text)
    exps = sc.monomial()
    if sc.peek():
        sc.fail("unexpected character")
    return _to_monomial(exps, _resolve_n([exps], n, text))


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    """Parse ``"x^3, y^3, x*y*z"``-style text; ``0`` or empty text is the zero ideal.

    Without ``n`` the variable count is the largest variable index used.
    """
    sc = _Scanner(text)
    if sc.peek() in ("", "0") and text.strip() in ("", "0"):
        return MonomialIdeal.zero(n or 1)
    found = []
    while True:
        found.append(sc.monomial())
        nxt = sc.peek()
        if nxt == ",":
            sc.k += 1
            continue
        if nxt:
            sc.fail("unexpected character")
        break
    n = _resolve_n(found, n, text)
    return MonomialIdeal(n, _minimal(_to_monomial(e, n) for e in found))


def variable_names(n: int) -> list[str]:
    return list(ALIASES[:n]) if n <= len(ALIASES) else [f"x{k + 1}" for k in range(n)]


def render_monomial(m: Sequence[int]) -> str:
    names = variable_names(len(m))
    parts = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, m) if e]
    return "*".join(parts) if parts else "1"


def render_ideal(i: MonomialIdeal) -> str:
    if i.is_zero:
        return "0"
    return ", ".join(render_monomial(g) for g in i.gens)
