"""Exact integer and rational linear algebra.

Everything here runs on Python ints and Fractions; no floating point enters
any certified path.  Matrices are lists of lists (rows).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def _copy(m: Matrix) -> list[list[int]]:
    return [list(row) for row in m]


def is_symmetric(m: Matrix) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n)
    )


def det_exact(m: Matrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    a = _copy(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors a_1 | a_2 | ... | a_r followed by zeros."""

    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for a in self.invariant_factors if a != 0)

    def diagonal(self) -> tuple[int, ...]:
        return self.invariant_factors


def snf(m: Matrix) -> SnfResult:
    """Smith normal form of an integer matrix.

    Elimination with the minimal nonzero pivot, then the usual fix-up to
    enforce the divisibility chain.  Fine for the n <= 12 matrices here.
    """
    a = _copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    t = 0
    while t < min(rows, cols):
        # pick the entry of minimal nonzero absolute value in the submatrix
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(a[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
        p = a[t][t]
        dirty = False
        for i in range(t + 1, rows):
            q = a[i][t] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            if a[i][t]:
                dirty = True
        for j in range(t + 1, cols):
            q = a[t][j] // p
            if q:
                for row in a:
                    row[j] -= q * row[t]
            if a[t][j]:
                dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry; if not, fold the bad row in
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % p:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            continue
        t += 1
    diag = [abs(a[i][i]) for i in range(min(rows, cols))]
    factors = [x for x in diag if x] + [0] * sum(1 for x in diag if not x)
    res = SnfResult(tuple(factors))
    _check_divisibility(res)
    return res


def _check_divisibility(res: SnfResult) -> None:
    fs = [a for a in res.invariant_factors if a]
    for x, y in zip(fs, fs[1:]):
        if y % x:
            raise AssertionError(f"divisibility chain broken: {fs}")


@dataclass(frozen=True)
class InertiaResult:
    signature: int
    nullity: int
    rank: int

    @property
    def positives(self) -> int:
        return (self.rank + self.signature) // 2

    @property
    def negatives(self) -> int:
        return (self.rank - self.signature) // 2


def inertia(m: Matrix) -> InertiaResult:
    """Exact signature, nullity and rank of a symmetric matrix.

    Congruence diagonalization over the rationals.  When every remaining
    diagonal entry vanishes but some off-diagonal entry does not, a 2x2
    hyperbolic block is split off, contributing one positive and one
    negative eigenvalue; this is what lets singular leading minors through.
    """
    if not is_symmetric(m):
        raise ValueError("matrix is not symmetric")
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    active = list(range(n))
    pos = neg = 0
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is not None:
            p = a[piv][piv]
            if p > 0:
                pos += 1
            else:
                neg += 1
            active.remove(piv)
            for i in active:
                if a[i][piv] == 0:
                    continue
                f = a[i][piv] / p
                for j in active:
                    a[i][j] -= f * a[piv][j]
            for i in active:
                a[i][piv] = a[piv][i] = Fraction(0)
            continue
        block = next(
            (
                (i, j)
                for i in active
                for j in active
                if i < j and a[i][j] != 0
            ),
            None,
        )
        if block is None:
            break  # remaining block is zero
        bi, bj = block
        b = a[bi][bj]
        pos += 1
        neg += 1
        active.remove(bi)
        active.remove(bj)
        for i in active:
            u, v = a[i][bi], a[i][bj]
            if u == 0 and v == 0:
                continue
            for j in active:
                a[i][j] -= (v / b) * a[bi][j] + (u / b) * a[bj][j]
        for i in active:
            a[i][bi] = a[bi][i] = Fraction(0)
            a[i][bj] = a[bj][i] = Fraction(0)
    rank = pos + neg
    return InertiaResult(signature=pos - neg, nullity=n - rank, rank=rank)


def presents_cyclic(m: Matrix) -> bool:
    """True when the matrix presents a finite cyclic group: all invariant
    factors except possibly the last equal 1, and the last is nonzero."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return True  # trivial group
    fs = snf(m).invariant_factors
    return fs[-1] != 0 and all(a == 1 for a in fs[:-1])


def is_square_int(x: int) -> bool:
    if x < 0:
        return False
    r = math.isqrt(x)
    return r * r == x
