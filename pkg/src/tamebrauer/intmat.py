"""Small exact integer-matrix kernels: row Hermite form, Smith diagonal, determinant.

Matrices are plain lists of lists of Python ints; nothing here touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def hnf_rows(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Row-style Hermite normal form of the Z-span of ``rows``.

    The result is upper echelon with positive pivots and entries above each
    pivot reduced into ``[0, pivot)``.  Zero rows are dropped, so the number of
    returned rows is the rank of the span.
    """
    A = [list(r) for r in rows if any(r)]
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(A)) if A[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[piv] = A[piv], A[r]
            pr = A[r]
            clean = True
            for i in range(r + 1, len(A)):
                if A[i][c]:
                    q = A[i][c] // pr[c]
                    A[i] = [a - q * b for a, b in zip(A[i], pr)]
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if r < len(A) and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-a for a in A[r]]
            pr = A[r]
            for i in range(r):
                q = A[i][c] // pr[c]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], pr)]
            r += 1
        A = A[:r] + [row for row in A[r:] if any(row)]
    return A[:r]


def smith_diagonal(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero Smith invariants d_1 | d_2 | ... of an integer matrix."""
    A = [list(r) for r in M]
    if not A:
        return []
    nrows, ncols = len(A), len(A[0])
    out = []
    t = 0
    while t < min(nrows, ncols):
        entries = [(abs(A[i][j]), i, j) for i in range(t, nrows)
                   for j in range(t, ncols) if A[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, nrows):
                if A[i][t]:
                    q = A[i][t] // p
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, ncols):
                if A[t][j]:
                    q = A[t][j] // p
                    for row in A:
                        row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if not done:
                # move the smallest leftover in row/column t onto the diagonal
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, nrows) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, ncols) if A[t][j]]
                _, i, j = min(cand)
                if j == t:
                    A[t], A[i] = A[i], A[t]
                else:
                    for row in A:
                        row[t], row[j] = row[j], row[t]
                continue
            bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                        if A[i][j] % p), None)
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
        out.append(abs(A[t][t]))
        t += 1
    return out


def det(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def inverse_fraction(M: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Inverse over Q by Gauss–Jordan; raises ZeroDivisionError if singular."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [row[n:] for row in A]


def vec_gcd(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over F_p (p prime)."""
    A = [[x % p for x in r] for r in rows]
    if not A:
        return 0
    rank = 0
    ncols = len(A[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], -1, p)
        A[rank] = [(x * inv) % p for x in A[rank]]
        for i in range(len(A)):
            if i != rank and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank
