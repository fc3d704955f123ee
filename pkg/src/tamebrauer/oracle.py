"""Brute-force cross-checks.

Everything here enumerates: no Hermite/Smith forms, no symplectic elimination.
Coordinates are found by Gauss–Jordan over Fractions, indices by counting the
radical of the pairing on (Z/N)^m.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import isqrt, lcm
from typing import Sequence

import numpy as np

from .budget import default_budget
from .errors import BudgetExceeded, NonSquareQuotient, NotAMember
from .symbols import FieldModel, SymbolData


def naive_coords(v: Sequence[Fraction], basis: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Solve c · basis = v over Q (basis rows are linearly independent)."""
    m = len(basis)
    # augmented system basis^T c = v
    A = [[Fraction(basis[j][i]) for j in range(m)] + [Fraction(v[i])] for i in range(m)]
    for c in range(m):
        piv = next(i for i in range(c, m) if A[i][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        A[c] = [x / A[c][c] for x in A[c]]
        for i in range(m):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [A[i][m] for i in range(m)]


def integer_coords(v, F: FieldModel) -> list[int]:
    """Γ-coordinates of a Vector (or list of Fractions) by a fresh rational solve."""
    vals = v.fractions() if hasattr(v, "fractions") else list(v)
    basis = [[Fraction(x, F.lattice.den) for x in row] for row in F.lattice.basis]
    c = naive_coords(vals, basis)
    if any(x.denominator != 1 for x in c):
        raise NotAMember(f"{v} is not in the value lattice")
    return [int(x) for x in c]


def _budget(budget):
    return default_budget() if budget is None else budget


def _all_vectors(N: int, m: int) -> np.ndarray:
    grids = np.indices((N,) * m).reshape(m, -1).T
    return grids.astype(np.int64)


def oracle_index_form(W: Sequence[Sequence[int]], N: int, budget: int | None = None) -> int:
    """sqrt(N^m / |radical|) for the pairing x^T W y on (Z/N)^m."""
    m = len(W)
    if N == 1 or m == 0:
        return 1
    if N ** m > _budget(budget):
        raise BudgetExceeded(f"{N}^{m} elements exceed budget")
    X = _all_vectors(N, m)
    Wm = np.array([[x % N for x in row] for row in W], dtype=np.int64)
    radical = int(np.count_nonzero(np.all((X @ Wm) % N == 0, axis=1)))
    q, r = divmod(N ** m, radical)
    s = isqrt(q)
    if r or s * s != q:
        raise NonSquareQuotient(f"|G|/|R| = {N ** m}/{radical} is not a square")
    return s


def oracle_index(C, budget: int | None = None) -> int:
    """Index of a TameClass by counting its radical."""
    return oracle_index_form(C.form, C.level, budget)


def oracle_symbol_division(F: FieldModel, s: SymbolData, budget: int | None = None) -> bool:
    """Count <a, b> in Γ/nΓ by listing every i·a + j·b."""
    n = s.n
    if n * n > _budget(budget):
        raise BudgetExceeded(f"{n}^2 combinations exceed budget")
    if n == 1:
        return False
    a, b = integer_coords(s.a, F), integer_coords(s.b, F)
    elems = {tuple((i * x + j * y) % n for x, y in zip(a, b))
             for i in range(n) for j in range(n)}
    return len(elems) == n * n


def _wedge(a, b):
    m = len(a)
    return [[a[i] * b[j] - b[i] * a[j] for j in range(m)] for i in range(m)]


def oracle_unique_center(level, budget: int | None = None) -> list[tuple]:
    """Survivor list for the degree-p candidate sweep, with every index counted by brute force.

    The division algebra's form is rebuilt from the level's generator vectors
    and each candidate is transported to the center by a rational solve.
    """
    p, m = level.p, level.ambient_rank
    budget = _budget(budget)
    if p ** (2 * m) > budget:
        raise BudgetExceeded(f"{p ** (2 * m)} candidate pairs exceed budget {budget}")
    Z = level.Z_field
    N = lcm(1, *(p ** k for k in level.mu))
    D = [[0] * m for _ in range(m)]
    for x, y, k in zip(level.xvecs, level.yvecs, level.mu):
        a = integer_coords([Fraction(t) for t in x], Z)
        b = integer_coords([Fraction(t, p) for t in y], Z)
        w = _wedge(a, b)
        coef = N // p ** k
        for i in range(m):
            for j in range(m):
                D[i][j] += coef * w[i][j]
    ind_D = oracle_index_form(D, N, budget)
    # images of the K-basis vectors e_i in Z-coordinates
    S = [integer_coords([Fraction(int(i == j)) for j in range(m)], Z) for i in range(m)]
    cache: dict = {}
    survivors = []
    for a, b in itertools.product(itertools.product(range(p), repeat=m), repeat=2):
        if len({tuple((i * x + j * y) % p for x, y in zip(a, b))
                for i in range(p) for j in range(p)}) != p * p:
            continue
        key = tuple(tuple(r) for r in (np.array(_wedge(a, b)) % p).tolist())
        if key not in cache:
            ap = [sum(a[i] * S[i][j] for i in range(m)) for j in range(m)]
            bp = [sum(b[i] * S[i][j] for i in range(m)) for j in range(m)]
            sig = _wedge(ap, bp)
            if oracle_index_form(sig, p, budget) != p:
                cache[key] = False
            else:
                diff = [[D[i][j] - (N // p) * sig[i][j] for j in range(m)] for i in range(m)]
                cache[key] = oracle_index_form(diff, N, budget) * p == ind_D
        if cache[key]:
            survivors.append((a, b))
    return survivors
