"""Strictly Henselian field surrogates and symbol-algebra presentations.

Model axiom: over a strictly Henselian field whose residue characteristic q
does not divide n, an element of K* is known modulo n-th powers once its value
is known, i.e. K*/K*^n = Γ/nΓ.  Field elements are therefore carried only as
their values in the value lattice Γ, and every criterion here is a question
about Γ/nΓ.  Roots of unity are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from .errors import (
    DegreeCollapse,
    DimensionMismatch,
    InvalidDegree,
    NotAMember,
    NotDivision,
    NotTotallyRamified,
    TamenessViolation,
)
from .lattice import (
    ValueLattice,
    Vector,
    canonicalize,
    coset_order,
    member,
    quotient_invariants,
)


@dataclass(frozen=True)
class FieldModel:
    residue_char: int
    lattice: ValueLattice
    labels: dict[str, Vector] = field(default_factory=dict, hash=False)
    strictly_henselian: bool = True

    def __post_init__(self):
        q = self.residue_char
        if q < 0:
            raise ValueError(f"residue characteristic must be 0 or a prime, got {q}")
        for name, v in self.labels.items():
            if not member(v, self.lattice):
                raise NotAMember(f"label {name} = {v} is not in the value lattice")

    @classmethod
    def standard(cls, m: int, residue_char: int = 0, labels=None) -> FieldModel:
        return cls(residue_char, ValueLattice.standard(m), dict(labels or {}))

    @property
    def rank(self) -> int:
        return self.lattice.ambient_rank

    def check_tame(self, n: int):
        if n < 1:
            raise InvalidDegree(f"degree must be >= 1, got {n}")
        q = self.residue_char
        if q and n % q == 0:
            raise TamenessViolation(f"tameness violated: residue characteristic {q} divides {n}")

    def same_as(self, other: FieldModel) -> bool:
        """Same residue characteristic and value lattice (labels ignored)."""
        return self.residue_char == other.residue_char and self.lattice == other.lattice


@dataclass(frozen=True)
class SymbolData:
    """The symbol algebra (α, β)_n recorded by the values a = v(α), b = v(β)."""

    a: Vector
    b: Vector
    n: int


@dataclass(frozen=True)
class RadicalExtensionSpec:
    """Adjoin an e_i-th root of an element of value a_i, for each step."""

    steps: tuple[tuple[Vector, int], ...]
    names: tuple[str, ...] | None = None


def _member_or_raise(F: FieldModel, v: Vector, what: str):
    if v.rank != F.rank:
        raise DimensionMismatch(f"{what} has rank {v.rank}, field has rank {F.rank}")
    if not member(v, F.lattice):
        raise NotAMember(f"{what} = {v} is not in the value lattice")


def validate_symbol(F: FieldModel, s: SymbolData):
    _member_or_raise(F, s.a, "first slot")
    _member_or_raise(F, s.b, "second slot")
    F.check_tame(s.n)


def is_totally_ramified_radical(F: FieldModel, a: Vector, n: int) -> bool:
    """Whether adjoining an n-th root of an element of value ``a`` is totally ramified of degree n."""
    F.check_tame(n)
    _member_or_raise(F, a, "radicand value")
    return coset_order(a, n, F.lattice) == n


def radical_extension(F: FieldModel, spec: RadicalExtensionSpec) -> FieldModel:
    """Value-lattice model of K(a_1^(1/e_1), ..., a_k^(1/e_k)).

    Raises DegreeCollapse when the lattice grows by less than the product of
    the degrees, i.e. the extension would not be totally ramified of full degree.
    """
    steps = list(spec.steps)
    names = list(spec.names) if spec.names is not None else [None] * len(steps)
    if len(names) != len(steps):
        raise ValueError("names and steps must have the same length")
    gens = F.lattice.gens()
    labels = dict(F.labels)
    for i, ((a, e), name) in enumerate(zip(steps, names)):
        F.check_tame(e)
        _member_or_raise(F, a, f"step {i} radicand value")
        root = a / e
        gens.append(root)
        if name is None:
            base = next((k for k, v in F.labels.items() if v == a), None)
            name = f"{base}^(1/{e})" if base else f"root{i}"
        labels[name] = root
    expected = prod(e for _, e in steps)
    Lp = canonicalize(gens, F.rank)
    got = prod(quotient_invariants(F.lattice, Lp))
    if got != expected:
        raise DegreeCollapse(f"value-group index {got} < expected degree {expected}")
    return FieldModel(F.residue_char, Lp, labels)


def norm_group(F: FieldModel, a: Vector, n: int) -> ValueLattice:
    """Image of the n-th-power norm group: the lattice nΓ + Za, between nΓ and Γ."""
    if n == 1:
        return F.lattice
    if not is_totally_ramified_radical(F, a, n):
        raise NotTotallyRamified(f"coset of {a} has order < {n} in Γ/{n}Γ")
    return canonicalize(F.lattice.scaled(n).gens() + [a], F.rank)


def symbol_subgroup_order(F: FieldModel, s: SymbolData) -> int:
    """|<a + nΓ, b + nΓ>| inside Γ/nΓ."""
    nG = F.lattice.scaled(s.n)
    return prod(quotient_invariants(nG, canonicalize(nG.gens() + [s.a, s.b], F.rank)))


def symbol_is_division(F: FieldModel, s: SymbolData) -> bool:
    """Whether the symbol algebra (α, β)_n is a division algebra.

    Degree n = 1 is accepted and reported as not division (the algebra is K).
    """
    validate_symbol(F, s)
    if s.n == 1:
        return False
    return symbol_subgroup_order(F, s) == s.n ** 2


def symbol_value_group(F: FieldModel, s: SymbolData) -> ValueLattice:
    if not symbol_is_division(F, s):
        raise NotDivision(f"symbol of degree {s.n} is not a division algebra")
    return canonicalize(F.lattice.gens() + [s.a / s.n, s.b / s.n], F.rank)

