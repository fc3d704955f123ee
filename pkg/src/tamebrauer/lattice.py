"""Finitely generated full-rank subgroups of Q^m.

A :class:`ValueLattice` is stored as an integer row Hermite basis together with
a common denominator, reduced so that equal lattices compare equal.  These are
the value groups of the field and algebra models built on top of this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    InvalidDegree,
    NotAMember,
    NotASublattice,
    RankDeficient,
)
from .intmat import hnf_rows, inverse_fraction, smith_diagonal, vec_gcd

ORDER_TAG = "inverse-lexicographic"


@dataclass(frozen=True)
class Vector:
    """A point of Q^m written as an integer numerator over a positive denominator."""

    num: tuple[int, ...]
    den: int = 1

    def __post_init__(self):
        num = tuple(int(x) for x in self.num)
        den = int(self.den)
        if den == 0:
            raise ZeroDivisionError("vector denominator is zero")
        if den < 0:
            num, den = tuple(-x for x in num), -den
        g = gcd(den, vec_gcd(num))
        if g > 1:
            num, den = tuple(x // g for x in num), den // g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, *entries) -> Vector:
        """Build from ints/Fractions: ``Vector.of(1, Fraction(1, 2))``."""
        fr = [Fraction(x) for x in entries]
        d = lcm(1, *(f.denominator for f in fr))
        return cls(tuple(int(f * d) for f in fr), d)

    @classmethod
    def unit(cls, m: int, i: int) -> Vector:
        return cls(tuple(int(j == i) for j in range(m)))

    @classmethod
    def zero(cls, m: int) -> Vector:
        return cls((0,) * m)

    @property
    def rank(self) -> int:
        return len(self.num)

    def fractions(self) -> list[Fraction]:
        return [Fraction(x, self.den) for x in self.num]

    def _check(self, other: Vector):
        if self.rank != other.rank:
            raise DimensionMismatch(f"vectors of rank {self.rank} and {other.rank}")

    def __add__(self, other: Vector) -> Vector:
        self._check(other)
        d = lcm(self.den, other.den)
        a, b = d // self.den, d // other.den
        return Vector(tuple(a * x + b * y for x, y in zip(self.num, other.num)), d)

    def __neg__(self) -> Vector:
        return Vector(tuple(-x for x in self.num), self.den)

    def __sub__(self, other: Vector) -> Vector:
        return self + (-other)

    def __mul__(self, k: int) -> Vector:
        return Vector(tuple(k * x for x in self.num), self.den)

    __rmul__ = __mul__

    def __truediv__(self, k: int) -> Vector:
        if k == 0:
            raise ZeroDivisionError("division of a vector by zero")
        return Vector(self.num, self.den * k)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __str__(self):
        parts = ", ".join(str(f) for f in self.fractions())
        return f"({parts})"


@dataclass(frozen=True)
class ValueLattice:
    """Full-rank lattice ``(1/den) * rowspan_Z(basis)`` in canonical form.

    Build instances with :func:`canonicalize`; the constructor trusts its input.
    """

    ambient_rank: int
    den: int
    basis: tuple[tuple[int, ...], ...]
    order_tag: str = ORDER_TAG

    @classmethod
    def standard(cls, m: int) -> ValueLattice:
        """Z^m."""
        return cls(m, 1, tuple(tuple(int(i == j) for j in range(m)) for i in range(m)))

    @property
    def rank(self) -> int:
        return self.ambient_rank

    def gens(self) -> list[Vector]:
        return [Vector(row, self.den) for row in self.basis]

    def vector(self, coords: Sequence[int]) -> Vector:
        """The lattice point with the given basis coordinates."""
        m = self.ambient_rank
        if len(coords) != m:
            raise DimensionMismatch(f"expected {m} coordinates, got {len(coords)}")
        num = [sum(c * self.basis[i][j] for i, c in enumerate(coords)) for j in range(m)]
        return Vector(tuple(num), self.den)

    def coords(self, v: Vector) -> tuple[int, ...]:
        """Integer coordinates of ``v`` in the stored basis; NotAMember if none exist."""
        c = _solve_in_basis(v, self)
        if c is None:
            raise NotAMember(f"{v} is not in the lattice")
        return c

    def __contains__(self, v: Vector) -> bool:
        return member(v, self)

    def scaled(self, n: int) -> ValueLattice:
        """The sublattice n * L."""
        if n < 1:
            raise InvalidDegree(f"scale factor must be positive, got {n}")
        return canonicalize([g * n for g in self.gens()], self.ambient_rank)

    def index_over(self, sub: ValueLattice) -> int:
        """[self : sub], requiring sub to be contained in self."""
        return prod(quotient_invariants(sub, self))


def _check_rank(m: int, *vs: Vector):
    for v in vs:
        if v.rank != m:
            raise DimensionMismatch(f"vector of rank {v.rank} in ambient rank {m}")


def canonicalize(rows: Iterable[Vector], ambient_rank: int) -> ValueLattice:
    """Canonical lattice spanned by ``rows``; rejects rank-deficient spans."""
    rows = list(rows)
    m = ambient_rank
    if m < 1:
        raise DimensionMismatch("ambient rank must be positive")
    _check_rank(m, *rows)
    d = lcm(1, *(v.den for v in rows))
    ints = [[x * (d // v.den) for x in v.num] for v in rows]
    H = hnf_rows(ints, m)
    if len(H) < m:
        raise RankDeficient(f"span has rank {len(H)} < {m}")
    g = gcd(d, *(x for row in H for x in row))
    return ValueLattice(m, d // g, tuple(tuple(x // g for x in row) for row in H))


def _solve_in_basis(v: Vector, L: ValueLattice) -> tuple[int, ...] | None:
    _check_rank(L.ambient_rank, v)
    # v*L.den must be an integer vector before back-substitution against the HNF
    scaled = [x * L.den for x in v.num]
    if any(x % v.den for x in scaled):
        return None
    rem = [x // v.den for x in scaled]
    m = L.ambient_rank
    coords = [0] * m
    for i in range(m):
        piv = L.basis[i][i]
        if rem[i] % piv:
            return None
        c = rem[i] // piv
        coords[i] = c
        if c:
            row = L.basis[i]
            for j in range(i, m):
                rem[j] -= c * row[j]
    if any(rem):
        return None
    return tuple(coords)


def member(v: Vector, L: ValueLattice) -> bool:
    return _solve_in_basis(v, L) is not None


def lattice_sum(L1: ValueLattice, L2: ValueLattice) -> ValueLattice:
    if L1.ambient_rank != L2.ambient_rank:
        raise DimensionMismatch("lattices of different ambient rank")
    return canonicalize(L1.gens() + L2.gens(), L1.ambient_rank)


def dual(L: ValueLattice) -> ValueLattice:
    """{x : <x, y> in Z for all y in L} under the standard pairing."""
    m = L.ambient_rank
    # basis matrix is basis/den, so the dual basis is the rows of den * (basis^-1)^T
    inv = inverse_fraction(L.basis)
    rows = [Vector.of(*(L.den * inv[i][j] for i in range(m))) for j in range(m)]
    return canonicalize(rows, m)


def intersect(L1: ValueLattice, L2: ValueLattice) -> ValueLattice:
    if L1.ambient_rank != L2.ambient_rank:
        raise DimensionMismatch("lattices of different ambient rank")
    return dual(lattice_sum(dual(L1), dual(L2)))


def contains_lattice(Lsup: ValueLattice, Lsub: ValueLattice) -> bool:
    if Lsup.ambient_rank != Lsub.ambient_rank:
        raise DimensionMismatch("lattices of different ambient rank")
    return all(member(g, Lsup) for g in Lsub.gens())


def quotient_invariants(Lsub: ValueLattice, Lsup: ValueLattice) -> list[int]:
    """Elementary divisors of Lsup/Lsub, ascending, with 1s trimmed.

    >>> quotient_invariants(canonicalize([Vector((2, 0)), Vector((0, 3))], 2),
    ...                     ValueLattice.standard(2))
    [6]
    """
    if Lsub.ambient_rank != Lsup.ambient_rank:
        raise DimensionMismatch("lattices of different ambient rank")
    try:
        C = [Lsup.coords(g) for g in Lsub.gens()]
    except NotAMember:
        raise NotASublattice("first lattice is not contained in the second") from None
    return [d for d in smith_diagonal(C) if d != 1]


def coset_order(v: Vector, n: int, L: ValueLattice) -> int:
    """Order of v + nL in L/nL."""
    if n < 1:
        raise InvalidDegree(f"degree must be >= 1, got {n}")
    c = L.coords(v)
    return n // gcd(n, vec_gcd(c))
