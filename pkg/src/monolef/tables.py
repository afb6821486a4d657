"""(s, n)-tables and the monomial ideals built from them.

A table has a top row ``d = (d_1, ..., d_n)`` and ``s`` further rows
``alpha[k-1] = (alpha_{k,1}, ..., alpha_{k,n})``.  Row ``k`` contributes the
ideal ``prefix_k * (x_{k+1}^{e_{k+1}}, ..., x_n^{e_n})`` where
``e_j = d_j - alpha_{1,j} - ... - alpha_{k,j}`` and the prefix is
``x_1^{e_1} ... x_k^{e_k}`` with the same exponents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .core import Monomial, MonomialIdeal, minimalize


@dataclass(frozen=True)
class Table:
    s: int
    n: int
    d: tuple[int, ...]
    alpha: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(self.d))
        object.__setattr__(self, "alpha", tuple(tuple(r) for r in self.alpha))
        if not 0 <= self.s < self.n:
            raise ValueError(f"need 0 <= s < n, got s={self.s}, n={self.n}")
        if len(self.d) != self.n or len(self.alpha) != self.s or any(len(r) != self.n for r in self.alpha):
            raise ValueError(f"table shape does not match s={self.s}, n={self.n}")
        if any(v < 0 for v in self.d) or any(v < 0 for r in self.alpha for v in r):
            raise ValueError("table entries must be non-negative")

    def a(self, i: int, j: int) -> int:
        """``alpha_{i,j}`` with 1-based indices; zero beyond row ``s``."""
        return self.alpha[i - 1][j - 1] if 1 <= i <= self.s else 0

    def residual(self, k: int, j: int) -> int:
        """``d_j - alpha_{1,j} - ... - alpha_{k,j}``."""
        return self.d[j - 1] - sum(self.a(i, j) for i in range(1, k + 1))

    def to_json(self) -> dict:
        return {"s": self.s, "n": self.n, "d": list(self.d), "alpha": [list(r) for r in self.alpha]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Table":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["s"]), int(data["n"]), tuple(data["d"]), tuple(tuple(r) for r in data["alpha"]))


def validate(t: Table) -> list[str]:
    """Violated table conditions, one message each; empty for a valid table."""
    out = []
    for i in range(1, t.s + 1):
        for j in range(1, i):
            if t.a(i, j):
                out.append(f"(1) alpha[{i},{j}] = {t.a(i, j)} below the diagonal")
    for j in range(1, t.n + 1):
        col = sum(t.a(i, j) for i in range(1, t.s + 1))
        if col > t.d[j - 1]:
            out.append(f"(2) column {j}: alpha sum {col} exceeds d_{j} = {t.d[j - 1]}")
    for k in range(1, t.s + 1):
        rhs = (sum(t.a(i, k) for i in range(1, k))
               + sum(t.a(k, j) for j in range(k + 1, t.n + 1))
               + t.a(k + 1, k + 1))
        if t.d[k - 1] != rhs:
            out.append(f"(3) k={k}: d_{k} = {t.d[k - 1]} but the linked entries sum to {rhs}")
    return out


def _require_valid(t: Table) -> None:
    problems = validate(t)
    if problems:
        raise ValueError("invalid table: " + "; ".join(problems))


def ideal_of(t: Table) -> MonomialIdeal:
    _require_valid(t)
    n = t.n
    gens = [Monomial.var(j, n, t.d[j]) for j in range(n)]
    for k in range(1, t.s + 1):
        prefix = [t.residual(k, j) for j in range(1, k + 1)] + [0] * (n - k)
        for j in range(k + 1, n + 1):
            g = list(prefix)
            g[j - 1] = t.residual(k, j)
            gens.append(Monomial(g))
    return minimalize(gens, n)


def predicted_socle(t: Table) -> int:
    """Socle degree ``sum(d) - alpha_{1,1} - n`` of the table ideal."""
    if t.s < 1:
        raise ValueError("the prediction needs s >= 1")
    if ideal_of(t).is_unit:
        raise ValueError("the table ideal is the unit ideal; no socle degree")
    return sum(t.d) - t.a(1, 1) - t.n


def gorenstein_initial_table(d: Sequence[int], alpha: Sequence[int]) -> Table:
    return Table(1, len(d), tuple(d), (tuple(alpha),))


def gorenstein_initial_ideal(d: Sequence[int], alpha: Sequence[int]) -> MonomialIdeal:
    """``(x_1^{d_1}, ..., x_n^{d_n}) + x_1^{d_1-a_1} (x_2^{d_2-a_2}, ..., x_n^{d_n-a_n})``.

    Requires ``0 <= a_i <= d_i`` and ``d_1 = a_2 + ... + a_n``.
    """
    n = len(d)
    if len(alpha) != n or n < 2:
        raise ValueError("d and alpha must have the same length n >= 2")
    if any(not 0 <= a <= b for a, b in zip(alpha, d)):
        raise ValueError("need 0 <= alpha_i <= d_i")
    if d[0] != sum(alpha[1:]):
        raise ValueError(f"need d_1 = alpha_2 + ... + alpha_n, got {d[0]} != {sum(alpha[1:])}")
    gens = [Monomial.var(j, n, d[j]) for j in range(n)]
    for j in range(1, n):
        g = [0] * n
        g[0] = d[0] - alpha[0]
        g[j] = d[j] - alpha[j]
        gens.append(Monomial(g))
    return minimalize(gens, n)


# name used by the published interface
lemma31_ideal = gorenstein_initial_ideal


def enumerate_tables(n: int, s: int, max_d: int):
    """All valid (s, n)-tables with every ``d_j <= max_d``.

    The free entries are the upper-triangular alphas; ``d_1..d_s`` follow from
    the linking condition and ``d_{s+1}..d_n`` range freely.
    """
    cells = [(i, j) for i in range(1, s + 1) for j in range(i, n + 1)]
    for values in product(range(max_d + 1), repeat=len(cells)):
        rows = [[0] * n for _ in range(s)]
        for (i, j), v in zip(cells, values):
            rows[i - 1][j - 1] = v

        def a(i, j):
            return rows[i - 1][j - 1] if 1 <= i <= s else 0

        fixed = []
        for k in range(1, s + 1):
            fixed.append(sum(a(i, k) for i in range(1, k)) + sum(a(k, j) for j in range(k + 1, n + 1)) + a(k + 1, k + 1))
        if any(v > max_d for v in fixed):
            continue
        for tail in product(range(max_d + 1), repeat=n - s):
            t = Table(s, n, tuple(fixed) + tail, tuple(tuple(r) for r in rows))
            if not validate(t):
                yield t
