"""Tame totally ramified Brauer classes over a strictly Henselian field model.

A class of exponent dividing N is an element of the exterior square of Γ/NΓ,
stored as a skew integer matrix W in the coordinates of the canonical basis
g_1..g_m of Γ:

    ω = Σ_{i<j} W[i][j] · g_i ∧ g_j   (mod N).

The symbol (a, b)_n contributes (N/n)·(a ∧ b).  The sign convention (a before
b, positive coefficient) is a choice; every invariant computed here is
insensitive to ω ↦ -ω.

Index, exponent and value group come from the skew normal form of W under
congruence over Z/N: ω = Σ_j g_j · f_{2j-1} ∧ f_{2j} with g_1 | g_2 | ... | N,
block j contributing a symbol of degree m_j = N / g_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm, prod
from typing import Iterable, Sequence

import sympy

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    NonDivisibleDegrees,
    NotAnExtension,
    NotDivision,
    NotPrimary,
    TamenessViolation,
)
from .intmat import vec_gcd
from .lattice import (
    ValueLattice,
    Vector,
    canonicalize,
    contains_lattice,
    intersect,
    lattice_sum,
    quotient_invariants,
)
from .symbols import FieldModel, SymbolData, validate_symbol

Form = tuple[tuple[int, ...], ...]


def _zero_form(m: int) -> Form:
    return tuple((0,) * m for _ in range(m))


def _check_skew(W: Sequence[Sequence[int]], m: int, N: int):
    """Alternating modulo N: zero diagonal and W^T = -W, entrywise mod N."""
    if len(W) != m or any(len(row) != m for row in W):
        raise DimensionMismatch(f"form must be {m}x{m}")
    for i in range(m):
        if W[i][i] % N:
            raise ValueError("form must have zero diagonal")
        for j in range(i + 1, m):
            if (W[i][j] + W[j][i]) % N:
                raise ValueError(f"form is not skew-symmetric at ({i}, {j})")


def _reduce(W: Sequence[Sequence[int]], N: int) -> list[list[int]]:
    return [[x % N for x in row] for row in W]


@dataclass(frozen=True)
class TameClass:
    """Canonical class: ``level`` is the exponent, ``form`` entries lie in [0, level)."""

    field: FieldModel
    level: int
    form: Form

    @classmethod
    def make(cls, F: FieldModel, N: int, W: Sequence[Sequence[int]]) -> TameClass:
        """Canonicalize the class of ``W`` at level ``N``."""
        m = F.rank
        F.check_tame(N)
        _check_skew(W, m, N)
        g = gcd(N, vec_gcd(x for row in W for x in row))
        N //= g
        if N == 1:
            return cls(F, 1, _zero_form(m))
        return cls(F, N, tuple(tuple((x // g) % N for x in row) for row in W))

    @classmethod
    def zero(cls, F: FieldModel) -> TameClass:
        return cls(F, 1, _zero_form(F.rank))

    @property
    def rank(self) -> int:
        return self.field.rank

    def is_zero(self) -> bool:
        return self.level == 1

    def lifted(self, M: int) -> list[list[int]]:
        """The form rescaled to level M (a multiple of the level)."""
        k = M // self.level
        return [[k * x for x in row] for row in self.form]

    def __add__(self, other: TameClass) -> TameClass:
        return add(self, other)

    def __neg__(self) -> TameClass:
        return neg(self)

    def __sub__(self, other: TameClass) -> TameClass:
        return add(self, neg(other))


@dataclass(frozen=True)
class AlgebraInvariants:
    index: int
    exponent: int
    divisors: tuple[int, ...]
    value_lattice: ValueLattice


def wedge(a: Sequence[int], b: Sequence[int]) -> list[list[int]]:
    """Skew matrix of a ∧ b in coordinates: a b^T - b a^T."""
    return [[a[i] * b[j] - b[i] * a[j] for j in range(len(a))] for i in range(len(a))]


def class_from_symbols(F: FieldModel, syms: Iterable[SymbolData]) -> TameClass:
    syms = list(syms)
    for s in syms:
        validate_symbol(F, s)
    N = lcm(1, *(s.n for s in syms))
    F.check_tame(N)
    m = F.rank
    W = [[0] * m for _ in range(m)]
    for s in syms:
        k = N // s.n
        w = wedge(F.lattice.coords(s.a), F.lattice.coords(s.b))
        for i in range(m):
            for j in range(m):
                W[i][j] += k * w[i][j]
    return TameClass.make(F, N, W)


def _same_field(C1: TameClass, C2: TameClass):
    if not C1.field.same_as(C2.field):
        raise FieldMismatch("classes live over different fields")


def add(C1: TameClass, C2: TameClass) -> TameClass:
    _same_field(C1, C2)
    N = lcm(C1.level, C2.level)
    W1, W2 = C1.lifted(N), C2.lifted(N)
    return TameClass.make(C1.field, N, [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(W1, W2)])


def neg(C: TameClass) -> TameClass:
    """Class of the opposite algebra."""
    return TameClass.make(C.field, C.level, [[-x for x in row] for row in C.form])


def scale(C: TameClass, nu: int) -> TameClass:
    if nu < 0:
        raise ValueError(f"scale factor must be >= 0, got {nu}")
    return TameClass.make(C.field, C.level, [[nu * x for x in row] for row in C.form])


def _unit_lift(u: int, M: int, N: int) -> int:
    """A unit mod N congruent to u mod M (M | N, u a unit mod M)."""
    u %= M
    for k in range(N // M):
        v = u + k * M
        if gcd(v, N) == 1:
            return v
    raise AssertionError("no unit lift")  # pragma: no cover - impossible for M | N


def skew_normal_form(W: Sequence[Sequence[int]], N: int) -> tuple[list[int], list[list[int]]]:
    """Symplectic elimination of a skew form over Z/N.

    Returns ``(ds, F)`` where ``F`` is a basis of (Z/N)^m (rows, as integer
    coordinate vectors) and ``ds`` is the chain g_1 | g_2 | ..., each a proper
    divisor of N, such that W ≡ Σ_j ds[j] · F[2j] ∧ F[2j+1] (mod N).
    Remaining basis rows carry no part of the form.
    """
    m = len(W)
    A = _reduce(W, N)
    P = [[int(i == j) for j in range(m)] for i in range(m)]

    # Each helper applies one congruence move to A and the matching change to the basis P.
    def addto(a, b, c):
        # row_a += c row_b, col_a += c col_b; basis: f_b -= c f_a
        if c % N == 0:
            return
        for j in range(m):
            A[a][j] = (A[a][j] + c * A[b][j]) % N
        for i in range(m):
            A[i][a] = (A[i][a] + c * A[i][b]) % N
        P[b] = [(x - c * y) % N for x, y in zip(P[b], P[a])]

    def swap(a, b):
        if a == b:
            return
        A[a], A[b] = A[b], A[a]
        for row in A:
            row[a], row[b] = row[b], row[a]
        P[a], P[b] = P[b], P[a]

    def rescale(a, v):
        # row_a, col_a *= v (v a unit); basis: f_a *= v^-1
        vinv = pow(v, -1, N)
        for j in range(m):
            A[a][j] = (A[a][j] * v) % N
        for i in range(m):
            A[i][a] = (A[i][a] * v) % N
        P[a] = [(x * vinv) % N for x in P[a]]

    ds = []
    t = 0
    while t + 1 < m:
        while True:
            entries = [(A[i][j], i, j) for i in range(t, m) for j in range(i + 1, m) if A[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            swap(t, i)
            swap(t + 1, j)
            d = A[t][t + 1]
            dirty = False
            for k in range(t + 2, m):
                # clear row t via column t+1, then row t+1 via column t
                q = A[t][k] // d
                addto(k, t + 1, -q)
                # A[t+1][t] = -d, so adding q copies of column t subtracts q*d
                addto(k, t, A[t + 1][k] // d)
                if A[t][k] or A[t + 1][k]:
                    dirty = True
            if dirty:
                continue
            g = gcd(d, N)
            bad = next(((k, l) for k in range(t + 2, m) for l in range(k + 1, m)
                        if A[k][l] % g), None)
            if bad is not None:
                addto(t, bad[0], 1)
                continue
            break
        if A[t][t + 1] == 0:
            break
        d = A[t][t + 1]
        g = gcd(d, N)
        # normalize the block entry to the divisor g = gcd(d, N)
        rescale(t + 1, _unit_lift(pow(d // g, -1, N // g), N // g, N))
        assert A[t][t + 1] == g
        ds.append(g)
        t += 2

    rebuilt = [[0] * m for _ in range(m)]
    for j, g in enumerate(ds):
        w = wedge(P[2 * j], P[2 * j + 1])
        for a in range(m):
            for b in range(m):
                rebuilt[a][b] += g * w[a][b]
    assert _reduce(rebuilt, N) == _reduce(W, N), "skew normal form does not reproduce the form"
    assert all(b % a == 0 for a, b in zip(ds, ds[1:])), ds
    return ds, P


def _normal_blocks(C: TameClass):
    if C.is_zero():
        return []
    ds, P = skew_normal_form(C.form, C.level)
    return [(C.level // g, P[2 * j], P[2 * j + 1]) for j, g in enumerate(ds)]


def invariants(C: TameClass) -> AlgebraInvariants:
    blocks = _normal_blocks(C)
    L = C.field.lattice
    gens = L.gens()
    for mj, f1, f2 in blocks:
        gens += [L.vector(f1) / mj, L.vector(f2) / mj]
    divisors = tuple(mj for mj, _, _ in blocks)
    return AlgebraInvariants(
        index=prod(divisors),
        exponent=C.level,
        divisors=divisors,
        value_lattice=canonicalize(gens, C.rank),
    )


def index(C: TameClass) -> int:
    return invariants(C).index


def draxl_decomposition(C: TameClass) -> list[SymbolData]:
    """Symbols, one per normal-form block, whose tensor product is the division algebra of C."""
    L = C.field.lattice
    return [SymbolData(L.vector(f1), L.vector(f2), mj) for mj, f1, f2 in _normal_blocks(C)]


def extend_scalars(C: TameClass, Fprime: FieldModel) -> TameClass:
    """Restriction of the class to a tame totally ramified extension with value lattice Γ' ⊇ Γ.

    In Γ'-coordinates the class becomes S^T W S, where row i of S holds the
    Γ'-coordinates of the i-th basis vector of Γ.
    """
    G, Gp = C.field.lattice, Fprime.lattice
    if G.ambient_rank != Gp.ambient_rank or not contains_lattice(Gp, G):
        raise NotAnExtension("value lattice of the base is not contained in the extension's")
    if C.field.residue_char != Fprime.residue_char:
        raise NotAnExtension("residue characteristics differ")
    e = prod(quotient_invariants(G, Gp))
    q = Fprime.residue_char
    if q and e % q == 0:
        raise TamenessViolation(f"tameness violated: ramification index {e} divisible by {q}")
    S = [Gp.coords(g) for g in G.gens()]
    m = C.rank
    W = C.form
    Wp = [[sum(S[i][a] * W[i][j] * S[j][b] for i in range(m) for j in range(m))
           for b in range(m)] for a in range(m)]
    return TameClass.make(Fprime, C.level, Wp)


def tensor_is_division(classes: Sequence[TameClass]) -> bool:
    """Whether the tensor product of the division algebras of ``classes`` is division.

    Criterion: the value groups v(D_i)/v(K) form a direct sum, i.e. the index of
    their sum over Γ is the product of the individual indices.
    """
    classes = list(classes)
    if not classes:
        return True
    for C in classes[1:]:
        _same_field(classes[0], C)
    G = classes[0].field.lattice
    lats = [invariants(C).value_lattice for C in classes]
    total = lats[0]
    for L in lats[1:]:
        total = lattice_sum(total, L)
    return prod(quotient_invariants(G, total)) == prod(prod(quotient_invariants(G, L)) for L in lats)


def embeds(Csub: TameClass, d: int, Cbig: TameClass) -> bool:
    """Whether the degree-d division algebra of Csub embeds in the division algebra of Cbig.

    Uses the index criterion ind(Cbig - Csub) = ind(Cbig) / d, which decides
    embedding for division algebras of matching center; it is not meant for
    non-division Csub inputs, which are rejected.
    """
    _same_field(Csub, Cbig)
    if index(Csub) != d:
        raise NotDivision(f"subalgebra class has index {index(Csub)}, not {d}")
    big = index(Cbig)
    if big % d:
        raise NonDivisibleDegrees(f"{d} does not divide {big}")
    return index(Cbig - Csub) == big // d


def p_quasilocal(F: FieldModel, p: int) -> bool:
    F.check_tame(p)
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    # dim_Fp Γ/pΓ is the lattice rank
    return F.rank <= 2


def brd_tame_bound(F: FieldModel, p: int) -> int:
    """Largest e' with index = exponent^e' attained by tame totally ramified p-classes: floor(m/2)."""
    F.check_tame(p)
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    return F.rank // 2


def primary_decompose(C: TameClass) -> dict[int, TameClass]:
    N = C.level
    parts = {}
    for p, e in sorted(sympy.factorint(N).items()):
        pe = p ** e
        cofactor = N // pe
        u = pow(cofactor, -1, pe)
        parts[p] = scale(C, u * cofactor)
    return parts


def intersection_is_base(C: TameClass, Fprime: FieldModel) -> bool:
    """The lattice side of the scalar-extension criterion: v(D) ∩ Γ' = Γ."""
    return intersect(invariants(C).value_lattice, Fprime.lattice) == C.field.lattice


def prime_power_base(n: int) -> int:
    """The prime p when n = p^k (k >= 1); NotPrimary otherwise."""
    f = sympy.factorint(n)
    if len(f) != 1:
        raise NotPrimary(f"{n} is not a prime power")
    return next(iter(f))
