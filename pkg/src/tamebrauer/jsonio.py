"""JSON encoding of lattices, fields, symbols, classes and reports.

Every top-level report carries ``"schema": 1``.  Decoders raise
:class:`InputError` with a dotted path to the offending field.
"""

from __future__ import annotations

from typing import Any

from .brauer import AlgebraInvariants, TameClass
from .errors import DimensionMismatch, InputError, TameBrauerError
from .lattice import ValueLattice, Vector, canonicalize
from .symbols import FieldModel, RadicalExtensionSpec, SymbolData

SCHEMA = 1


def _get(obj: Any, key: str, path: str):
    if not isinstance(obj, dict):
        raise InputError(path or "<root>", "expected an object")
    if key not in obj:
        raise InputError(f"{path}.{key}" if path else key, "missing")
    return obj[key]


def _int(x: Any, path: str, minimum: int | None = None) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(path, f"expected an integer, got {x!r}")
    if minimum is not None and x < minimum:
        raise InputError(path, f"must be >= {minimum}, got {x}")
    return x


def _int_list(x: Any, path: str) -> list[int]:
    if not isinstance(x, list):
        raise InputError(path, "expected a list of integers")
    return [_int(v, f"{path}[{i}]") for i, v in enumerate(x)]


def _matrix(x: Any, path: str) -> list[list[int]]:
    if not isinstance(x, list):
        raise InputError(path, "expected a list of rows")
    return [_int_list(r, f"{path}[{i}]") for i, r in enumerate(x)]


def _sub(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


# -- encoders ---------------------------------------------------------------

def vector_to_json(v: Vector) -> dict:
    return {"num": list(v.num), "den": v.den}


def lattice_to_json(L: ValueLattice) -> dict:
    return {"ambient_rank": L.ambient_rank, "den": L.den, "basis": [list(r) for r in L.basis]}


def field_to_json(F: FieldModel) -> dict:
    return {
        "residue_char": F.residue_char,
        "lattice": lattice_to_json(F.lattice),
        "labels": {k: vector_to_json(v) for k, v in F.labels.items()},
    }


def symbol_to_json(s: SymbolData) -> dict:
    return {"a": vector_to_json(s.a), "b": vector_to_json(s.b), "degree": s.n}


def class_to_json(C: TameClass) -> dict:
    return {"field": field_to_json(C.field), "level": C.level, "form": [list(r) for r in C.form]}


def invariants_to_json(inv: AlgebraInvariants) -> dict:
    return {
        "index": inv.index,
        "exponent": inv.exponent,
        "divisors": list(inv.divisors),
        "value_lattice": lattice_to_json(inv.value_lattice),
    }


# -- decoders ---------------------------------------------------------------

def vector_from_json(obj: Any, path: str = "vector") -> Vector:
    num = _int_list(_get(obj, "num", path), _sub(path, "num"))
    den = _int(obj.get("den", 1), _sub(path, "den"), minimum=1)
    return Vector(tuple(num), den)


def lattice_from_json(obj: Any, path: str = "lattice") -> ValueLattice:
    m = _int(_get(obj, "ambient_rank", path), _sub(path, "ambient_rank"), minimum=1)
    den = _int(obj.get("den", 1), _sub(path, "den"), minimum=1)
    basis = _matrix(_get(obj, "basis", path), _sub(path, "basis"))
    for i, row in enumerate(basis):
        if len(row) != m:
            raise InputError(f"{path}.basis[{i}]", f"expected {m} entries, got {len(row)}")
    try:
        return canonicalize([Vector(tuple(r), den) for r in basis], m)
    except TameBrauerError as e:
        raise InputError(_sub(path, "basis"), str(e)) from None


def field_from_json(obj: Any, path: str = "field") -> FieldModel:
    q = _int(_get(obj, "residue_char", path), _sub(path, "residue_char"), minimum=0)
    L = lattice_from_json(_get(obj, "lattice", path), _sub(path, "lattice"))
    raw = obj.get("labels", {})
    if not isinstance(raw, dict):
        raise InputError(_sub(path, "labels"), "expected an object")
    labels = {k: vector_from_json(v, f"{path}.labels.{k}") for k, v in raw.items()}
    try:
        return FieldModel(q, L, labels)
    except TameBrauerError as e:
        raise InputError(_sub(path, "labels"), str(e)) from None
    except ValueError as e:
        raise InputError(_sub(path, "residue_char"), str(e)) from None


def symbol_from_json(obj: Any, path: str = "symbol") -> SymbolData:
    a = vector_from_json(_get(obj, "a", path), _sub(path, "a"))
    b = vector_from_json(_get(obj, "b", path), _sub(path, "b"))
    n = _int(_get(obj, "degree", path), _sub(path, "degree"))
    return SymbolData(a, b, n)


def symbol_input_from_json(obj: Any) -> tuple[FieldModel, SymbolData]:
    """``{"field": FieldModel, "symbol": Symbol}``."""
    F = field_from_json(_get(obj, "field", ""), "field")
    return F, symbol_from_json(_get(obj, "symbol", ""), "symbol")


def class_from_json(obj: Any, path: str = "") -> TameClass:
    F = field_from_json(_get(obj, "field", path), _sub(path, "field"))
    N = _int(_get(obj, "level", path), _sub(path, "level"), minimum=1)
    W = _matrix(_get(obj, "form", path), _sub(path, "form"))
    try:
        return TameClass.make(F, N, W)
    except DimensionMismatch as e:
        raise InputError(_sub(path, "form"), str(e)) from None
    except TameBrauerError:
        raise
    except ValueError as e:
        raise InputError(_sub(path, "form"), str(e)) from None


def invariants_from_json(obj: Any, path: str = "") -> AlgebraInvariants:
    return AlgebraInvariants(
        index=_int(_get(obj, "index", path), _sub(path, "index"), minimum=1),
        exponent=_int(_get(obj, "exponent", path), _sub(path, "exponent"), minimum=1),
        divisors=tuple(_int_list(_get(obj, "divisors", path), _sub(path, "divisors"))),
        value_lattice=lattice_from_json(_get(obj, "value_lattice", path), _sub(path, "value_lattice")),
    )


def radicals_from_json(obj: Any, path: str = "") -> RadicalExtensionSpec:
    """``{"radicals": [{"value": Vector, "degree": e}, ...], "names": [...]}``."""
    raw = _get(obj, "radicals", path)
    if not isinstance(raw, list):
        raise InputError(_sub(path, "radicals"), "expected a list")
    steps = []
    for i, step in enumerate(raw):
        p = f"{_sub(path, 'radicals')}[{i}]"
        steps.append((vector_from_json(_get(step, "value", p), f"{p}.value"),
                      _int(_get(step, "degree", p), f"{p}.degree", minimum=1)))
    names = obj.get("names")
    if names is not None:
        if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
            raise InputError(_sub(path, "names"), "expected a list of strings")
        names = tuple(names)
    return RadicalExtensionSpec(tuple(steps), names)


def report(**fields) -> dict:
    return {"schema": SCHEMA, **fields}


def check_schema(obj: Any, path: str = "") -> None:
    got = _get(obj, "schema", path)
    if got != SCHEMA:
        raise InputError(_sub(path, "schema"), f"unsupported schema {got!r}")
