"""Exact rank of integer matrices.

``bareiss_rank`` is the exact engine.  ``rank_mod_p`` is a fast screen: the
rank modulo a prime never exceeds the rank over the rationals, so a full rank
modulo ``p`` already certifies full rank over Q.  ``maximal_rank`` combines the
two and only falls back to Bareiss when the screen is inconclusive.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

# 2**31 - 1; products of two residues fit in int64
PRIME = 2147483647


def bareiss_rank(rows: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    """Rank over Q of an integer matrix by fraction-free Bareiss elimination.

    Pivots are chosen as the first nonzero entry in column order.
    """
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    m = len(a)
    ncols = len(a[0]) if ncols is None else ncols
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((r for r in range(rank, m) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        p = prow[c]
        for r in range(rank + 1, m):
            row = a[r]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - f * prow[j]) // prev
            elif p != prev:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int = PRIME) -> int:
    """Rank of the matrix reduced modulo the prime ``p`` (p < 2**31)."""
    if not rows or ncols == 0:
        return 0
    a = np.array([[x % p for x in r] for r in rows], dtype=np.int64)
    m = a.shape[0]
    if m > ncols:
        a = np.ascontiguousarray(a.T)
        m, ncols = ncols, m
    rank = 0
    for c in range(ncols):
        if rank == m:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank, c:] = (a[rank, c:] * inv) % p
        below = a[rank + 1:, c].copy()
        mask = below != 0
        if mask.any():
            idx = np.nonzero(mask)[0] + rank + 1
            a[idx, c:] = (a[idx, c:] - (below[mask, None] * a[rank, c:]) % p) % p
        rank += 1
    return rank


def maximal_rank(rows: Sequence[Sequence[int]], ncols: int) -> tuple[bool, int]:
    """Whether the matrix has rank ``min(rows, cols)``, together with its exact rank."""
    target = min(len(rows), ncols)
    if target == 0:
        return True, 0
    if rank_mod_p(rows, ncols) == target:
        return True, target
    r = bareiss_rank(rows, ncols)
    return r == target, r


def integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each rational row by the lcm of its denominators (rank is unchanged)."""
    out = []
    for r in rows:
        den = lcm(*(Fraction(x).denominator for x in r)) if r else 1
        out.append([int(Fraction(x) * den) for x in r])
    return out
