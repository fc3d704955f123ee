import itertools
import random
from fractions import Fraction

import pytest

from tamebrauer.errors import (
    DegreeCollapse,
    InvalidDegree,
    NotAMember,
    NotDivision,
    NotTotallyRamified,
    TamenessViolation,
)
from tamebrauer.lattice import ValueLattice, Vector, canonicalize, coset_order, quotient_invariants
from tamebrauer.symbols import (
    FieldModel,
    RadicalExtensionSpec,
    SymbolData,
    is_totally_ramified_radical,
    norm_group,
    radical_extension,
    symbol_is_division,
    symbol_value_group,
)


def e(m, *idx_coef):
    v = [0] * m
    for i, c in idx_coef:
        v[i] += c
    return Vector(tuple(v))


F2 = FieldModel.standard(2)
F4 = FieldModel.standard(4, labels={"X1": e(4, (0, 1)), "Y1": e(4, (1, 1)),
                                    "X2": e(4, (2, 1)), "Y2": e(4, (3, 1))})


def test_field_model_checks():
    with pytest.raises(NotAMember):
        FieldModel.standard(2, labels={"t": Vector((1, 0), 2)})
    with pytest.raises(ValueError):
        FieldModel(-1, ValueLattice.standard(1))
    F = FieldModel.standard(2, residue_char=3)
    with pytest.raises(TamenessViolation, match="tameness violated"):
        F.check_tame(6)
    with pytest.raises(InvalidDegree):
        F.check_tame(0)
    assert F.strictly_henselian


def test_totally_ramified_examples():
    assert is_totally_ramified_radical(F2, Vector((1, 0)), 3)
    assert not is_totally_ramified_radical(F2, Vector((3, 0)), 3)
    assert is_totally_ramified_radical(F2, Vector((1, 2)), 2)
    with pytest.raises(TamenessViolation):
        is_totally_ramified_radical(FieldModel.standard(2, 3), Vector((1, 0)), 3)
    with pytest.raises(NotAMember):
        is_totally_ramified_radical(F2, Vector((1, 0), 2), 2)


def test_totally_ramified_is_coset_order():
    for n in (2, 3, 4):
        for m in (1, 2, 3):
            F = FieldModel.standard(m)
            for a in itertools.product(range(-2, 5), repeat=m):
                v = Vector(a)
                assert is_totally_ramified_radical(F, v, n) == (coset_order(v, n, F.lattice) == n)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_radical_extension_example(p):
    Fp = radical_extension(F4, RadicalExtensionSpec(((e(4, (1, 1)), p), (e(4, (3, 1)), p))))
    expected = canonicalize([e(4, (0, 1)), e(4, (1, 1)) / p, e(4, (2, 1)), e(4, (3, 1)) / p], 4)
    assert Fp.lattice == expected
    assert quotient_invariants(F4.lattice, Fp.lattice) == [p, p]
    assert Fp.labels["Y1^(1/%d)" % p] == e(4, (1, 1)) / p
    assert set(F4.labels) <= set(Fp.labels)


def test_radical_extension_edges():
    assert radical_extension(F2, RadicalExtensionSpec(())).lattice == F2.lattice
    with pytest.raises(DegreeCollapse):
        radical_extension(F2, RadicalExtensionSpec(((Vector((2, 0)), 2),)))
    with pytest.raises(DegreeCollapse):
        radical_extension(F2, RadicalExtensionSpec(((Vector((1, 0)), 2), (Vector((1, 0)), 2))))


def test_radical_extension_order_free():
    rng = random.Random(2)
    for _ in range(30):
        steps = []
        for _ in range(rng.randint(1, 3)):
            steps.append((Vector(tuple(rng.randint(-3, 3) for _ in range(3))), rng.choice([2, 3, 5])))
        try:
            L = radical_extension(FieldModel.standard(3), RadicalExtensionSpec(tuple(steps))).lattice
        except DegreeCollapse:
            continue
        rev = RadicalExtensionSpec(tuple(reversed(steps)))
        assert radical_extension(FieldModel.standard(3), rev).lattice == L


def test_norm_group_examples():
    G = norm_group(F2, Vector((1, 0)), 3)
    assert G == canonicalize([Vector((3, 0)), Vector((0, 3)), Vector((1, 0))], 2)
    assert F2.lattice.index_over(G) == 3
    assert quotient_invariants(F2.lattice.scaled(3), G) == [3]
    assert norm_group(F2, Vector((1, 1)), 2) == canonicalize(
        [Vector((2, 0)), Vector((0, 2)), Vector((1, 1))], 2)
    assert norm_group(F2, Vector((5, 7)), 1) == F2.lattice
    with pytest.raises(NotTotallyRamified):
        norm_group(F2, Vector((2, 0)), 2)


def test_symbol_division_examples():
    for p, k in [(2, 1), (2, 3), (3, 2), (5, 1)]:
        assert symbol_is_division(F2, SymbolData(Vector((1, 0)), Vector((0, 1)), p ** k))
    assert not symbol_is_division(F2, SymbolData(Vector((1, 0)), Vector((1, 0)), 2))
    assert symbol_is_division(F4, SymbolData(e(4, (0, 1)), e(4, (2, 1), (0, 2)), 2))
    assert not symbol_is_division(F2, SymbolData(Vector((1, 0)), Vector((0, 1)), 1))
    with pytest.raises(TamenessViolation):
        symbol_is_division(FieldModel.standard(2, 2), SymbolData(Vector((1, 0)), Vector((0, 1)), 4))


def test_symbol_value_group_examples():
    assert symbol_value_group(F2, SymbolData(Vector((1, 0)), Vector((0, 1)), 2)) == \
        canonicalize([Vector((1, 0), 2), Vector((0, 1), 2)], 2)
    got = symbol_value_group(F4, SymbolData(e(4, (0, 1)), e(4, (1, 1)), 3))
    assert got == canonicalize([e(4, (0, 1)) / 3, e(4, (1, 1)) / 3, e(4, (2, 1)), e(4, (3, 1))], 4)
    with pytest.raises(NotDivision):
        symbol_value_group(F2, SymbolData(Vector((1, 0)), Vector((2, 0)), 2))


def test_division_symbols_have_ramification_deg_squared():
    rng = random.Random(4)
    for _ in range(200):
        m = rng.randint(2, 4)
        F = FieldModel.standard(m)
        n = rng.choice([2, 3, 4, 6])
        s = SymbolData(Vector(tuple(rng.randint(-5, 5) for _ in range(m))),
                       Vector(tuple(rng.randint(-5, 5) for _ in range(m))), n)
        if symbol_is_division(F, s):
            assert symbol_value_group(F, s).index_over(F.lattice) == n * n


def test_division_depends_on_cosets_only():
    rng = random.Random(6)
    F = canonicalize([Vector((1, 0, 0)), Vector((1, 2, 0), 3), Vector((0, 0, 1), 2)], 3)
    F = FieldModel(0, F)
    for _ in range(200):
        n = rng.choice([2, 3, 4, 5])
        a = F.lattice.vector([rng.randint(-4, 4) for _ in range(3)])
        b = F.lattice.vector([rng.randint(-4, 4) for _ in range(3)])
        w = F.lattice.vector([rng.randint(-4, 4) for _ in range(3)])
        base = symbol_is_division(F, SymbolData(a, b, n))
        assert symbol_is_division(F, SymbolData(a + w * n, b, n)) == base
        assert symbol_is_division(F, SymbolData(a, b - w * n, n)) == base


def test_non_integral_lattice_symbol():
    F = FieldModel(0, canonicalize([Vector.of(Fraction(1, 2), 0), Vector((0, 1))], 2))
    assert symbol_is_division(F, SymbolData(Vector((1, 0), 2), Vector((0, 1)), 2))
    assert not symbol_is_division(F, SymbolData(Vector((1, 0)), Vector((0, 1)), 2))
