"""Exact linear algebra over Q.

Vectors are sparse dicts ``{column: Fraction}``; column 0 is the leftmost.
:class:`Echelon` grows a row-echelon basis one vector at a time, which is how
every graded slice in the package is built.  Dense rank goes through Bareiss
fraction-free elimination on integer rows, optionally preceded by a cheap
rank computation modulo a word-size prime.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import lcm

import numpy as np

MODULUS = 2_147_483_647  # 2**31 - 1; products of residues fit in int64


class Echelon:
    """Incremental row-echelon form with leftmost-nonzero pivots.

    Rows are normalized to pivot coefficient 1.  ``rref()`` returns the fully
    reduced basis, which is canonical for the spanned subspace.
    """

    def __init__(self, vectors=()):
        self.pivots = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec) -> dict:
        """Remainder of ``vec`` after eliminating every pivot column."""
        v = {c: a for c, a in vec.items() if a}
        if not self.pivots:
            return v
        heap = list(v)
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            a = v.get(c)
            if not a:
                continue
            row = self.pivots.get(c)
            if row is None:
                continue
            for k, b in row.items():
                w = v.get(k, 0) - a * b
                if w:
                    v[k] = w
                    if k not in seen:
                        heapq.heappush(heap, k)
                else:
                    v.pop(k, None)
        return v

    def add(self, vec) -> bool:
        """Insert ``vec``; return False when it already lies in the span."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = 1 / Fraction(v[p])
        self.pivots[p] = {k: a * inv for k, a in v.items()}
        return True

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def rref(self) -> list:
        """Reduced basis rows sorted by pivot column."""
        out = {}
        for p in sorted(self.pivots, reverse=True):
            row = dict(self.pivots[p])
            for q in sorted(k for k in row if k != p and k in out):
                a = row.get(q)
                if not a:
                    continue
                for k, b in out[q].items():
                    w = row.get(k, 0) - a * b
                    if w:
                        row[k] = w
                    else:
                        row.pop(k, None)
            out[p] = row
        return [out[p] for p in sorted(out)]


def rref(vectors) -> list:
    return Echelon(vectors).rref()


def nullspace(rows, ncols: int) -> list:
    """Basis of ``{c : sum_j rows[i][j] c_j = 0 for all i}`` in reduced form."""
    ech = rref(_sparse(r) for r in rows)
    pivot_of = {min(r): r for r in ech}
    basis = []
    for free in range(ncols):
        if free in pivot_of:
            continue
        v = {free: Fraction(1)}
        for p, r in pivot_of.items():
            a = r.get(free)
            if a:
                v[p] = -a
        basis.append(v)
    return rref(basis)


def _sparse(row) -> dict:
    if isinstance(row, dict):
        return row
    return {j: Fraction(a) for j, a in enumerate(row) if a}


def integer_rows(rows) -> list:
    """Scale each rational row by the lcm of its denominators."""
    out = []
    for r in rows:
        r = [Fraction(a) for a in r]
        m = lcm(*(a.denominator for a in r)) if r else 1
        out.append([int(a * m) for a in r])
    return out


def bareiss_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        prow = m[rank]
        for i in range(rank + 1, nrows):
            row = m[i]
            a = row[col]
            if a:
                for j in range(col + 1, ncols):
                    row[j] = (p * row[j] - a * prow[j]) // prev
            else:
                for j in range(col + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def modular_rank(rows, p: int = MODULUS):
    """Rank modulo ``p``, or None when some denominator is divisible by ``p``."""
    if not rows:
        return 0
    try:
        data = [[_residue(a, p) for a in r] for r in rows]
    except ZeroDivisionError:
        return None
    a = np.array(data, dtype=np.int64)
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(a[rank:, col])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = rank + 1 + np.flatnonzero(a[rank + 1:, col])
        if below.size:
            f = a[below, col][:, None]
            a[below] = (a[below] - (f * a[rank]) % p) % p
        rank += 1
    return rank


def _residue(x, p):
    x = Fraction(x)
    den = x.denominator % p
    if den == 0:
        raise ZeroDivisionError
    return (x.numerator % p) * pow(den, p - 2, p) % p


def rank(rows, modular_prepass: bool = True) -> int:
    """Exact rank of a rational matrix given as a list of rows."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    full = min(len(rows), len(rows[0]))
    if modular_prepass:
        r = modular_rank(rows)
        if r == full:
            # rank mod p is a lower bound for the rational rank
            return full
    return bareiss_rank(integer_rows(rows))
