"""Command-line front end: ``tamebrauer {symbol,class,extend,tower}``.

Reports go to stdout as JSON (or ``--format text``); diagnostics go to stderr.
Exit codes: 0 pass, 1 verification failure or internal disagreement,
2 input error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import prod
from typing import Any

import sympy

from . import brauer, jsonio, oracle, symbols, tower
from .budget import default_budget
from .errors import BudgetExceeded, InputError, TameBrauerError
from .intmat import det
from .lattice import quotient_invariants

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _load(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise InputError(path, f"invalid JSON: {e}") from None
    except OSError as e:
        raise InputError(path, f"cannot read: {e.strerror}") from None


def _budget(args) -> int:
    return default_budget() if args.budget is None else args.budget


def cmd_symbol(args) -> tuple[dict, bool]:
    doc = _load(args.input)
    F, s = jsonio.symbol_input_from_json(doc)
    symbols.validate_symbol(F, s)
    C = brauer.class_from_symbols(F, [s])
    inv = brauer.invariants(C)
    division = symbols.symbol_is_division(F, s)
    value_group = symbols.symbol_value_group(F, s) if division else inv.value_lattice
    ok = value_group == inv.value_lattice and division == (inv.index == s.n and s.n > 1)
    rep = jsonio.report(
        command="symbol",
        division=division,
        degree=s.n,
        exponent=inv.exponent,
        index=inv.index,
        value_group=jsonio.lattice_to_json(value_group),
        ramification_index=prod(quotient_invariants(F.lattice, value_group)),
    )
    if s.n == 1:
        rep["note"] = "trivial"
    if args.oracle:
        agrees = oracle.oracle_symbol_division(F, s, _budget(args)) == division
        rep["oracle"] = {"agrees": agrees}
        ok = ok and agrees
    return rep, ok


def cmd_class(args) -> tuple[dict, bool]:
    C = jsonio.class_from_json(_load(args.input))
    inv = brauer.invariants(C)
    syms = brauer.draxl_decomposition(C)
    parts = brauer.primary_decompose(C)
    ok = brauer.class_from_symbols(C.field, syms) == C
    total = brauer.TameClass.zero(C.field)
    for P in parts.values():
        total = total + P
    ok = ok and total == C and prod(brauer.index(P) for P in parts.values()) == inv.index
    rep = jsonio.report(
        command="class",
        **jsonio.invariants_to_json(inv),
        decomposition=[jsonio.symbol_to_json(s) for s in syms],
        primary_parts={str(p): jsonio.class_to_json(P) for p, P in parts.items()},
    )
    if args.oracle:
        agrees = oracle.oracle_index(C, _budget(args)) == inv.index
        rep["oracle"] = {"agrees": agrees}
        ok = ok and agrees
    return rep, ok


def _extension_field(doc: Any, base: symbols.FieldModel) -> symbols.FieldModel:
    if isinstance(doc, dict) and "radicals" in doc:
        return symbols.radical_extension(base, jsonio.radicals_from_json(doc))
    return jsonio.field_from_json(doc, "extension")


def cmd_extend(args) -> tuple[dict, bool]:
    C = jsonio.class_from_json(_load(args.class_file))
    Fp = _extension_field(_load(args.extension_file), C.field)
    E = brauer.extend_scalars(C, Fp)
    old, new = brauer.invariants(C), brauer.invariants(E)
    still = new.index == old.index
    lattice_check = brauer.intersection_is_base(C, Fp)
    rep = jsonio.report(
        command="extend",
        still_division=still,
        old_index=old.index,
        new_index=new.index,
        new_value_group=jsonio.lattice_to_json(new.value_lattice),
        criterion_lattice_check=lattice_check,
        extended_class=jsonio.class_to_json(E),
    )
    ok = still == lattice_check
    if args.oracle:
        b = _budget(args)
        agrees = (oracle.oracle_index(C, b), oracle.oracle_index(E, b)) == (old.index, new.index)
        rep["oracle"] = {"agrees": agrees}
        ok = ok and agrees
    return rep, ok


def _tower_flags(args):
    if args.p < 2 or not sympy.isprime(args.p):
        raise InputError("--p", f"{args.p} is not prime")
    if args.levels < 1:
        raise InputError("--levels", "must be >= 1")


def cmd_tower(args) -> tuple[dict, bool]:
    _tower_flags(args)
    p, top = args.p, args.levels
    budget = _budget(args)
    want_center = args.verify in ("all", "center")
    want_meet = args.verify in ("all", "intersection")
    if want_center and p ** (4 * top) > budget:
        raise BudgetExceeded(f"level {top}: {p ** (4 * top)} candidate pairs exceed budget {budget}")
    levels = tower.build_tower(p, top)
    out, ok = [], True
    for lv in levels:
        entry = {
            "n": lv.n,
            "mu": list(lv.mu),
            "generator_matrix": lv.generator_matrix,
            "det": det(lv.generator_matrix),
            "degree": lv.degree,
            "unique_center": None,
            "center_intersection": None,
        }
        if want_center:
            r = tower.verify_unique_center(lv, budget)
            uc = {
                "candidates": r.candidates,
                "division_candidates": r.division_candidates,
                "distinct_classes": r.distinct_classes,
                "survivors": [[list(a), list(b)] for a, b in r.survivors],
            }
            passed = r.passed
            if args.oracle:
                agrees = sorted(oracle.oracle_unique_center(lv, budget)) == sorted(r.survivors)
                uc["oracle_agrees"] = agrees
                passed = passed and agrees
            entry["unique_center"] = uc
            ok = ok and passed
        if want_meet and 2 * lv.n <= top:
            r = tower.verify_center_intersection(levels, lv.n)
            entry["center_intersection"] = "pass" if r.passed else "fail"
            entry["intersection_dims"] = r.details
            ok = ok and r.passed
        out.append(entry)
    rep = jsonio.report(
        command="tower",
        p=p,
        verify=args.verify,
        passed=ok,
        scope={"unique_center": tower.SCOPE_NOTE, "center_intersection": tower.INTERSECTION_NOTE},
        levels=out,
    )
    return rep, ok


def _text(rep: dict) -> str:
    lines = []
    for k, v in rep.items():
        if k == "levels":
            for lv in v:
                uc = lv.get("unique_center") or {}
                lines.append(
                    f"level {lv['n']}: mu={tuple(lv['mu'])} det={lv['det']} degree={lv['degree']}"
                    f" survivors={len(uc['survivors']) if uc else '-'}"
                    f" intersection={lv['center_intersection'] or '-'}")
        elif isinstance(v, list) and all(isinstance(x, int) for x in v):
            lines.append(f"{k}: {v}")
        elif isinstance(v, (dict, list)):
            continue
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle", action="store_true",
                        help="cross-check with the brute-force oracle")
    common.add_argument("--budget", type=int, default=None,
                        help="enumeration budget (default: $TAMEBRAUER_BUDGET or 10^6)")
    common.add_argument("--format", choices=("json", "text"), default="json")

    ap = argparse.ArgumentParser(prog="tamebrauer", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("symbol", parents=[common], help="division test and invariants of a symbol")
    sp.add_argument("input", help='JSON {"field": ..., "symbol": ...} ("-" for stdin)')
    sp.set_defaults(func=cmd_symbol)

    sp = sub.add_parser("class", parents=[common], help="invariants and decompositions of a class")
    sp.add_argument("input", help="class JSON")
    sp.set_defaults(func=cmd_class)

    sp = sub.add_parser("extend", parents=[common], help="extend scalars and compare with the lattice criterion")
    sp.add_argument("class_file")
    sp.add_argument("extension_file", help='field JSON or {"radicals": [...]}')
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("tower", parents=[common], help="build and verify the tower")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--levels", type=int, required=True)
    sp.add_argument("--verify", choices=("all", "center", "intersection"), default="all")
    sp.set_defaults(func=cmd_tower)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.budget is not None and args.budget < 1:
            raise InputError("--budget", "must be positive")
        rep, ok = args.func(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (TameBrauerError, ValueError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as e:
        print(f"internal check failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        print(json.dumps(rep, indent=2))
    else:
        print(_text(rep))
    if not ok:
        print("verification failed", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
