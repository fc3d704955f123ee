import pytest

from tamebrauer.brauer import TameClass, class_from_symbols, index, invariants
from tamebrauer.errors import (
    BudgetExceeded,
    DuplicatePrime,
    NotPrimary,
    TamenessViolation,
)
from tamebrauer.intmat import det
from tamebrauer.lattice import ValueLattice, Vector, canonicalize
from tamebrauer.symbols import FieldModel, SymbolData
from tamebrauer.tower import (
    SCOPE_NOTE,
    TowerLevel,
    build_tower,
    division_level,
    primary_product_invariants,
    summands_direct,
    tower_base,
    tower_step,
    verify_center_intersection,
    verify_unique_center,
)


def mu_sequences(n_max):
    """Exponents straight from the two recurrence rules, kept apart from the tower code."""
    seqs = [(1,)]
    while len(seqs) < n_max:
        prev = seqs[-1]
        nxt = list(prev[1:]) + [1 + prev[0], prev[0]]
        seqs.append(tuple(nxt))
    return seqs


@pytest.mark.parametrize("p", [2, 3])
def test_base(p):
    lv = tower_base(p, 2)
    assert lv.mu == (1,) and lv.n == 1
    assert lv.xvecs == ((1, 0),) and lv.yvecs == ((0, 1),)
    expected = class_from_symbols(lv.Z_field, [SymbolData(Vector((1, 0)), Vector((0, 1), p), p)])
    assert lv.Dclass == expected and index(lv.Dclass) == p
    assert lv.Z_lattice == canonicalize([Vector((1, 0)), Vector((0, 1), p)], 2)


def test_base_errors():
    with pytest.raises(TamenessViolation):
        tower_base(3, 1, residue_char=3)
    with pytest.raises(ValueError):
        tower_base(4, 1)
    with pytest.raises(ValueError):
        tower_base(2, 0)
    with pytest.raises(ValueError):
        tower_step(tower_base(2, 1))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_first_step_vectors(p):
    lv = tower_step(tower_base(p, 2))
    assert lv.mu == (2, 1)
    assert lv.generator_matrix == [[0, 1, 0, -1], [-p, 0, -1, 0], [-1, 0, 0, 0], [0, 0, 0, -1]]
    assert abs(det(lv.generator_matrix)) == 1


def test_mu_examples():
    t = build_tower(2, 4)
    assert [lv.mu for lv in t] == [(1,), (2, 1), (1, 3, 2), (3, 2, 2, 1)]
    assert t[3].degree == 2 ** 8


@pytest.mark.parametrize("p", [2, 3, 5])
def test_level_invariants(p):
    t = build_tower(p, 6)
    assert [lv.mu for lv in t] == mu_sequences(6)
    for lv in t:
        assert abs(det(lv.generator_matrix)) == 1
        inv = invariants(lv.Dclass)
        assert inv.index == p ** sum(lv.mu)
        assert inv.value_lattice.index_over(lv.Z_lattice) == inv.index ** 2
        assert lv.Z_lattice.index_over(lv.K_lattice) == p ** lv.n
        assert summands_direct(lv)


def test_division_levels():
    for p, mu in [(2, (1,)), (3, (1,)), (2, (1, 1)), (2, (2, 1)), (3, (1, 1)), (3, (2, 1))]:
        lv = division_level(p, mu)
        assert index(lv.Dclass) == p ** sum(mu)
        assert summands_direct(lv)


# The counts below were produced by the brute-force oracle and frozen.
@pytest.mark.parametrize("p, mu, candidates, division, classes", [
    (2, (1,), 16, 6, 1),
    (3, (1,), 81, 48, 2),
    (2, (1, 1), 256, 210, 35),
    (2, (2, 1), 256, 210, 35),
    (3, (1, 1), 6561, 6240, 260),
    (3, (2, 1), 6561, 6240, 260),
])
def test_unique_center_fixtures(p, mu, candidates, division, classes):
    r = verify_unique_center(division_level(p, mu))
    assert r.passed and r.survivors == ()
    assert (r.candidates, r.division_candidates, r.distinct_classes) == (candidates, division, classes)
    assert r.scope == SCOPE_NOTE


@pytest.mark.parametrize("p", [2, 3])
def test_unique_center_tower_levels(p):
    for lv in build_tower(p, 2):
        assert verify_unique_center(lv).passed


def fake_unramified_level(p):
    """A level whose 'center' is K itself, so D is defined over K and must survive the sweep."""
    K = FieldModel(0, ValueLattice.standard(2))
    D = class_from_symbols(K, [SymbolData(Vector((1, 0)), Vector((0, 1)), p)])
    return TowerLevel(1, p, ((1, 0),), ((0, p),), (1,), K, K, D)


@pytest.mark.parametrize("p, expected", [(2, 6), (3, 24)])
def test_unique_center_detects_survivors(p, expected):
    r = verify_unique_center(fake_unramified_level(p))
    assert not r.passed and len(r.survivors) == expected


def test_unique_center_budget():
    lv = division_level(2, (1, 1))
    with pytest.raises(BudgetExceeded):
        verify_unique_center(lv, budget=255)
    assert verify_unique_center(lv, budget=256).passed


def test_budget_env(monkeypatch):
    monkeypatch.setenv("TAMEBRAUER_BUDGET", "100")
    with pytest.raises(BudgetExceeded):
        verify_unique_center(division_level(2, (1, 1)))


@pytest.mark.parametrize("p", [2, 3])
def test_center_intersection(p):
    t = build_tower(p, 4)
    r1 = verify_center_intersection(t, 1)
    assert r1.passed and r1.details == {"dim_low": 1, "dim_high": 2, "dim_intersection": 0}
    r2 = verify_center_intersection(t, 2)
    assert r2.passed and r2.details == {"dim_low": 2, "dim_high": 4, "dim_intersection": 0}
    with pytest.raises(ValueError):
        verify_center_intersection(t, 3)


def test_center_intersection_explicit_p2():
    t = build_tower(2, 2)
    # level-2 Y vectors are -2 x1 - x2 and -y2, i.e. x2 and y2 mod 2
    assert [tuple(v % 2 for v in y) for y in t[1].yvecs] == [(0, 0, 1, 0), (0, 0, 0, 1)]


def test_primary_product():
    Z2 = FieldModel.standard(2)
    e1, e2 = Vector((1, 0)), Vector((0, 1))
    C2 = class_from_symbols(Z2, [SymbolData(e1, e2, 2)])
    C3 = class_from_symbols(Z2, [SymbolData(e1, e2, 3)])
    inv = primary_product_invariants([(2, C2), (3, C3)])
    assert (inv.index, inv.exponent) == (6, 6)
    assert primary_product_invariants([(5, TameClass.zero(Z2))]).index == 1
    assert primary_product_invariants([(3, C3)]) == invariants(C3)
    with pytest.raises(DuplicatePrime):
        primary_product_invariants([(2, C2), (2, C2)])
    with pytest.raises(NotPrimary):
        primary_product_invariants([(2, C3)])
