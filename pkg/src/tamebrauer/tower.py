"""The tower of division algebras R_n over K_n = K_0(X_1, Y_1, ..., X_n, Y_n).

Monomials are exponent vectors in the coordinates (x_1, y_1, ..., x_n, y_n), so
K_n has value lattice Z^{2n}.  Level n carries generators X_{n,u}, Y_{n,u}
(u = 1..n), exponents μ(n, u), the center Z_n = K_n(Y_{n,u}^(1/p)) and the
class of R_n = ⊗_u (X_{n,u}, Y_{n,u}^(1/p))_{p^μ(n,u)} over Z_n.

Passing from level k to k+1 uses the substitutions

    X_{k+1,k}   = Y_{k,1} / y_{k+1}        Y_{k+1,k}   = X_{k,1}^(-p) / x_{k+1}
    X_{k+1,k+1} = X_{k,1}^(-1)             Y_{k+1,k+1} = y_{k+1}^(-1)
    X_{k+1,j-1} = X_{k,j},  Y_{k+1,j-1} = Y_{k,j}    (j = 2..k)

with μ(k+1, k) = 1 + μ(k, 1), μ(k+1, k+1) = μ(k, 1), μ(k+1, j-1) = μ(k, j).
The noncommutative relation calculus behind these substitutions is not
replayed; its consequences are checked through the class arithmetic instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod
from typing import Sequence

import sympy

from .brauer import (
    AlgebraInvariants,
    TameClass,
    add,
    class_from_symbols,
    embeds,
    extend_scalars,
    index,
    invariants,
    prime_power_base,
    tensor_is_division,
)
from .budget import default_budget
from .errors import BudgetExceeded, DuplicatePrime, NotPrimary, TowerInvariantViolation
from .intmat import det, rank_mod_p
from .lattice import ValueLattice, Vector, canonicalize, quotient_invariants
from .symbols import FieldModel, SymbolData, symbol_is_division

IntVec = tuple[int, ...]

SCOPE_NOTE = (
    "degree-p symbol candidates only: a minimal central subalgebra other than K_n "
    "would have exponent p and split into degree-p symbols"
)
INTERSECTION_NOTE = (
    "Kummer-group proxy: F_p-spans of the Y-generators of levels n and 2n inside "
    "Γ_2n/pΓ_2n; trivial intersection corresponds to Z_n ∩ Z_2n = K_n"
)


def _unit(m: int, i: int) -> IntVec:
    return tuple(int(j == i) for j in range(m))


def _pad(v: Sequence[int], m: int) -> IntVec:
    return tuple(v) + (0,) * (m - len(v))


def _lin(*terms: tuple[int, Sequence[int]]) -> IntVec:
    m = len(terms[0][1])
    return tuple(sum(c * v[i] for c, v in terms) for i in range(m))


@dataclass(frozen=True)
class TowerLevel:
    n: int
    p: int
    xvecs: tuple[IntVec, ...]
    yvecs: tuple[IntVec, ...]
    mu: tuple[int, ...]
    K_field: FieldModel
    Z_field: FieldModel
    Dclass: TameClass
    n_max: int = 0

    @property
    def ambient_rank(self) -> int:
        return 2 * self.n

    @property
    def K_lattice(self) -> ValueLattice:
        return self.K_field.lattice

    @property
    def Z_lattice(self) -> ValueLattice:
        return self.Z_field.lattice

    @property
    def generator_matrix(self) -> list[list[int]]:
        rows = []
        for x, y in zip(self.xvecs, self.yvecs):
            rows += [list(x), list(y)]
        return rows

    @property
    def degree(self) -> int:
        return self.p ** sum(self.mu)

    def summand_classes(self) -> list[TameClass]:
        return [class_from_symbols(self.Z_field, [s]) for s in self.symbols()]

    def symbols(self) -> list[SymbolData]:
        return [SymbolData(Vector(x), Vector(y, self.p), self.p ** k)
                for x, y, k in zip(self.xvecs, self.yvecs, self.mu)]


def build_level(p: int, xvecs, yvecs, mu, residue_char: int = 0, n_max: int = 0) -> TowerLevel:
    """Assemble a level from generator exponent vectors and check its invariants."""
    n = len(mu)
    if len(xvecs) != n or len(yvecs) != n:
        raise ValueError("need one X and one Y generator per exponent")
    m = 2 * n
    labels = {}
    for u in range(n):
        labels[f"X{u + 1}"] = Vector(_unit(m, 2 * u))
        labels[f"Y{u + 1}"] = Vector(_unit(m, 2 * u + 1))
    K = FieldModel(residue_char, ValueLattice.standard(m), labels)
    K.check_tame(p)
    zgens = K.lattice.gens() + [Vector(y, p) for y in yvecs]
    zlabels = dict(labels)
    for u, y in enumerate(yvecs):
        zlabels[f"Y{n}_{u + 1}'"] = Vector(y, p)
    Z = FieldModel(residue_char, canonicalize(zgens, m), zlabels)
    level = TowerLevel(n, p, tuple(map(tuple, xvecs)), tuple(map(tuple, yvecs)), tuple(mu),
                       K, Z, TameClass.zero(Z), n_max)
    D = class_from_symbols(Z, level.symbols())
    level = TowerLevel(level.n, p, level.xvecs, level.yvecs, level.mu, K, Z, D, n_max)
    check_level(level)
    return level


def check_level(level: TowerLevel):
    p, n = level.p, level.n
    d = det(level.generator_matrix)
    if abs(d) != 1:
        raise TowerInvariantViolation(f"level {n}: generator matrix has determinant {d}")
    e = prod(quotient_invariants(level.K_lattice, level.Z_lattice))
    if e != p ** n:
        raise TowerInvariantViolation(f"level {n}: [Z : K] = {e}, expected {p ** n}")
    inv = invariants(level.Dclass)
    if inv.index != level.degree:
        raise TowerInvariantViolation(f"level {n}: index {inv.index} != degree {level.degree}")
    ram = prod(quotient_invariants(level.Z_lattice, inv.value_lattice))
    if ram != inv.index ** 2:
        raise TowerInvariantViolation(f"level {n}: ramification {ram} != index^2")


def _check_prime(p: int):
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")


def division_level(p: int, mu: Sequence[int], residue_char: int = 0) -> TowerLevel:
    """D_n = ⊗_i (X_i, Y_i^(1/p))_{p^μ_i} over L_n = K_n(Y_i^(1/p)), standard generators."""
    _check_prime(p)
    n = len(mu)
    m = 2 * n
    xs = [_unit(m, 2 * u) for u in range(n)]
    ys = [_unit(m, 2 * u + 1) for u in range(n)]
    return build_level(p, xs, ys, mu, residue_char, n)


def tower_base(p: int, n_max: int, residue_char: int = 0) -> TowerLevel:
    _check_prime(p)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return build_level(p, [(1, 0)], [(0, 1)], (1,), residue_char, n_max)


def tower_step(level: TowerLevel) -> TowerLevel:
    k, p = level.n, level.p
    if level.n_max and k >= level.n_max:
        raise ValueError(f"level {k} is already at n_max = {level.n_max}")
    m = 2 * (k + 1)
    X = [_pad(x, m) for x in level.xvecs]
    Y = [_pad(y, m) for y in level.yvecs]
    x_new, y_new = _unit(m, 2 * k), _unit(m, 2 * k + 1)
    xs = X[1:] + [_lin((1, Y[0]), (-1, y_new)), _lin((-1, X[0]))]
    ys = Y[1:] + [_lin((-p, X[0]), (-1, x_new)), _lin((-1, y_new))]
    mu = level.mu[1:] + (1 + level.mu[0], level.mu[0])
    return build_level(p, xs, ys, mu, level.K_field.residue_char, level.n_max)


def build_tower(p: int, levels: int, residue_char: int = 0) -> list[TowerLevel]:
    out = [tower_base(p, levels, residue_char)]
    while len(out) < levels:
        out.append(tower_step(out[-1]))
    return out


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    scope: str
    candidates: int
    passed: bool
    division_candidates: int = 0
    distinct_classes: int = 0
    survivors: tuple = ()
    details: dict = field(default_factory=dict, hash=False)


def candidate_count(level: TowerLevel) -> int:
    return level.p ** (2 * level.ambient_rank)


def _pairs(p: int, m: int):
    vecs = list(itertools.product(range(p), repeat=m))
    for a in vecs:
        for b in vecs:
            yield a, b


def _check_budget(level: TowerLevel, budget: int | None):
    budget = default_budget() if budget is None else budget
    count = candidate_count(level)
    if count > budget:
        raise BudgetExceeded(f"level {level.n}: {count} candidate pairs exceed budget {budget}")
    return count


def verify_unique_center(level: TowerLevel, budget: int | None = None) -> VerificationReport:
    """Sweep every degree-p symbol over K_n; a survivor would be a central K_n-subalgebra of R_n.

    A candidate (a, b) survives when its scalar extension to the center stays of
    index p and embeds in the division algebra of the level.
    """
    count = _check_budget(level, budget)
    p, m = level.p, level.ambient_rank
    K, D = level.K_field, level.Dclass
    seen: dict = {}
    survivors = []
    ndiv = 0
    for a, b in _pairs(p, m):
        s = SymbolData(Vector(a), Vector(b), p)
        if not symbol_is_division(K, s):
            continue
        ndiv += 1
        sigma = class_from_symbols(K, [s])
        if sigma not in seen:
            ext = extend_scalars(sigma, level.Z_field)
            seen[sigma] = index(ext) == p and embeds(ext, p, D)
        if seen[sigma]:
            survivors.append((a, b))
    return VerificationReport(
        claim=f"K_{level.n} is the unique central K_{level.n}-subalgebra of R_{level.n}",
        scope=SCOPE_NOTE,
        candidates=count,
        passed=not survivors,
        division_candidates=ndiv,
        distinct_classes=len(seen),
        survivors=tuple(survivors),
    )


def verify_center_intersection(tower: Sequence[TowerLevel], n: int) -> VerificationReport:
    """Check Z_n ∩ Z_2n = K_n through the Kummer groups of the two centers."""
    by_n = {lv.n: lv for lv in tower}
    if n not in by_n or 2 * n not in by_n:
        raise ValueError(f"tower must contain levels {n} and {2 * n}")
    low, high = by_n[n], by_n[2 * n]
    p, m = high.p, high.ambient_rank
    U = [_pad(y, m) for y in low.yvecs]
    V = list(high.yvecs)
    du, dv, dsum = rank_mod_p(U, p), rank_mod_p(V, p), rank_mod_p(U + V, p)
    meet = du + dv - dsum
    return VerificationReport(
        claim=f"Z_{n} ∩ Z_{2 * n} = K_{n}",
        scope=INTERSECTION_NOTE,
        candidates=0,
        passed=meet == 0 and du == n and dv == 2 * n,
        details={"dim_low": du, "dim_high": dv, "dim_intersection": meet},
    )


def primary_product_invariants(parts: Sequence[tuple[int, TameClass]]) -> AlgebraInvariants:
    """Invariants of the tensor product of primary parts with distinct primes."""
    primes = [p for p, _ in parts]
    if len(set(primes)) != len(primes):
        raise DuplicatePrime(f"repeated prime in {primes}")
    if not parts:
        raise ValueError("need at least one part")
    total = parts[0][1]
    for p, C in parts:
        ind = index(C)
        if ind != 1 and prime_power_base(ind) != p:
            raise NotPrimary(f"part at {p} has index {ind}")
    for _, C in parts[1:]:
        total = add(total, C)
    inv = invariants(total)
    assert inv.index == prod(index(C) for _, C in parts)
    assert inv.exponent == prod(C.level for _, C in parts)
    return inv


def summands_direct(level: TowerLevel) -> bool:
    return tensor_is_division(level.summand_classes())
