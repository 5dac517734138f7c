"""Command-line interface.

Exit codes: 0 success, 1 domain error (degenerate or otherwise unusable
input), 2 usage or parse error.  Errors are reported as one JSON line on
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import List, Optional, Sequence

from .coxgen import GeneratorLabel, GenericityWarning, all_generators
from .hilbert import (count_degree5_system, counts, cox_semigroup, degree5_semigroup,
                      elementary_symmetric_basis, elementary_symmetric_semigroup, minor_grading, minor_system,
                      total_degree_grading)
from .khovanskii import khovanskii_check
from .laurent import format_laurent, residue_at_valuation, valuation
from .linalg import RankDeficientError
from .multipoly import format_poly, initial_form
from .parse import LaurentSyntaxError, parse_laurent
from .pluecker import BUILTINS, DegenerateConfigurationError, PointMatrix, TropicalPoint, tropical_pluecker
from .search import CandidateSpec, classify_batch, enumerate_candidates
from .tropclass import four_point_violations, khovanskii_bounded, moneric_subspace, naruki_shift


class UsageError(Exception):
    pass


def _error(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)


def _add_matrix_args(p: argparse.ArgumentParser, prefix: str = "", required: bool = True) -> None:
    dash = f"--{prefix}" if prefix else "--"
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument(f"{dash}matrix", metavar="FILE", help="matrix file (text or JSON format)")
    g.add_argument(f"{dash}builtin", metavar="NAME", help=f"named matrix: {', '.join(BUILTINS)}")
    g.add_argument(f"{dash}inline", metavar="ROWS", help="rows separated by ';', entries by ','")


def _load_matrix(args, prefix: str = "") -> Optional[PointMatrix]:
    key = prefix.replace("-", "_")
    path, name, inline = (getattr(args, key + k, None) for k in ("matrix", "builtin", "inline"))
    try:
        if path:
            with open(path) as fh:
                return PointMatrix.parse(fh.read())
        if name:
            if name not in BUILTINS:
                raise UsageError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}")
            return BUILTINS[name]
        if inline:
            return PointMatrix.from_rows([[c.strip() for c in row.split(",")] for row in inline.split(";")])
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot read matrix: {exc}") from exc
    return None


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _generators(M: PointMatrix):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", GenericityWarning)
        return all_generators(M)


# -- subcommands ---------------------------------------------------------------

def cmd_gens(args) -> int:
    gens = _generators(_load_matrix(args))
    if args.json:
        print(json.dumps(gens.to_json(), indent=2))
    else:
        for lab, f in gens.sorted_items():
            print(f"{lab}: {format_poly(f)}")
    return 0


def cmd_initial(args) -> int:
    gens = _generators(_load_matrix(args))
    items = gens.sorted_items()
    if args.label:
        try:
            wanted = GeneratorLabel.parse(args.label)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        items = [(lab, f) for lab, f in items if lab == wanted]
    rows = []
    for lab, f in items:
        inf = initial_form(f)
        rows.append({"label": str(lab), "valuation": f.min_valuation(), "initial_form": str(inf),
                     "moneric": inf.is_monomial()})
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        for r in rows:
            print(f"{r['label']}\tval={r['valuation']}\t{r['initial_form']}")
    return 0


def cmd_moneric(args) -> int:
    rep = moneric_subspace(_generators(_load_matrix(args)))
    if args.json:
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(f"moneric: {str(rep.moneric).lower()}")
        for lab, inf in rep.witnesses:
            print(f"witness: {lab}: {inf}")
    return 0


def cmd_trop(args) -> int:
    d = tropical_pluecker(_load_matrix(args))
    if args.json:
        print(json.dumps({"order": ["".join(map(str, S)) for S in d.index_order()],
                          "values": [str(v) for v in d.d_values],
                          "conic_val": None if d.conic_val is None else str(d.conic_val)}, indent=2))
    else:
        print(d)
        if args.with_conic and d.conic_val is not None:
            print(f"conic_val: {d.conic_val}")
    return 0


def cmd_tgr2(args) -> int:
    if args.point is not None:
        vals = _int_list(args.point)
        n = next((k for k in range(2, 64) if k * (k - 1) // 2 == len(vals)), None)
        if n is None:
            raise UsageError(f"{len(vals)} values is not n choose 2 for any n")
        d = TropicalPoint(tuple(vals), None, 2)
    else:
        M = _load_matrix(args)
        if M is None:
            raise UsageError("give --point or a matrix source")
        if M.rows != 2:
            raise UsageError("tgr2 needs a 2-row matrix")
        d = tropical_pluecker(M)
    bad = four_point_violations(d, args.convention)
    print(f"tgr2: {str(not bad).lower()}")
    for quad in bad:
        print("violation: " + ",".join(map(str, quad)))
    return 0


def cmd_naruki(args) -> int:
    A, B = _load_matrix(args), _load_matrix(args, "other-")
    if B is None:
        raise UsageError("naruki-eq needs a second matrix (--other-matrix/--other-builtin/--other-inline)")
    w = naruki_shift(A, B)
    print(f"naruki_equivalent: {str(w is not None).lower()}")
    if w is not None:
        print(f"w: ({', '.join(map(str, w))})")
    return 0


def cmd_khovanskii(args) -> int:
    if args.system == "cox":
        M = _load_matrix(args)
        if M is None:
            raise UsageError("--system cox needs a matrix source")
        verdict = khovanskii_bounded(_generators(M), args.bound)
    elif args.system == "elemsym":
        gens = [(f"e{k}", f) for k, f in enumerate(elementary_symmetric_basis(args.m), start=1)]
        verdict = khovanskii_check(gens, args.bound, total_degree_grading(args.m))
    else:
        verdict = khovanskii_check(minor_system(args.n), args.bound, minor_grading(args.n))
    print(json.dumps(verdict.to_json(), indent=2))
    return 0


def cmd_hilbert(args) -> int:
    degree = _int_list(args.degree)
    if args.system == "cox":
        M = _load_matrix(args)
        if M is None:
            raise UsageError("--system cox needs a matrix source")
        S = cox_semigroup(M)
    elif args.system == "elemsym":
        S = elementary_symmetric_semigroup(args.m)
    else:
        S = degree5_semigroup(args.n)
    if len(degree) != len(S.grading):
        raise UsageError(f"degree must have {len(S.grading)} entries")
    out = counts(S, degree)
    if args.system == "degree5":
        out["system_count"] = count_degree5_system(args.n, degree[0], degree[1:])
    print(json.dumps(out))
    return 0


def cmd_search(args) -> int:
    spec = CandidateSpec(exponent_range=(args.exp_min, args.exp_max), sign_mode=args.signs,
                         count=None if args.exhaustive else args.count, seed=args.seed)
    result = classify_batch(enumerate_candidates(spec), khovanskii_bound=args.khovanskii_bound,
                            workers=args.workers)
    sys.stdout.write(result.tsv())
    print(json.dumps(result.collisions_json(), sort_keys=True))
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(result.dumps() + "\n")
    return 0


def cmd_parse(args) -> int:
    f = parse_laurent(args.text)
    print(format_laurent(f))
    if args.valuation:
        v = valuation(f)
        print(f"valuation: {v}")
        if f:
            print(f"residue: {residue_at_valuation(f)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxtrop", description="Cox ring generators, initial forms and tropical data.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gens", help="print the 27 generators")
    _add_matrix_args(s)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_gens)

    s = sub.add_parser("initial", help="initial forms of the generators")
    _add_matrix_args(s)
    s.add_argument("--label", help="only this generator, e.g. 'Conic(6)'")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_initial)

    s = sub.add_parser("moneric", help="moneric test with witnesses")
    _add_matrix_args(s)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_moneric)

    s = sub.add_parser("trop", help="tropical Pluecker vector")
    _add_matrix_args(s)
    s.add_argument("--with-conic", action="store_true", help="also print val(C) for 3x6 input")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_trop)

    s = sub.add_parser("tgr2", help="four-point test for 2-row data")
    _add_matrix_args(s, required=False)
    s.add_argument("--point", help="comma-separated d_ij in lexicographic order")
    s.add_argument("--convention", choices=("min", "max"), default="min",
                   help="min: d = val(p); max: d = -val(p)")
    s.set_defaults(func=cmd_tgr2)

    s = sub.add_parser("naruki-eq", help="torus-shift equivalence of two 3x6 matrices")
    _add_matrix_args(s)
    _add_matrix_args(s, "other-")
    s.set_defaults(func=cmd_naruki)

    s = sub.add_parser("khovanskii", help="bounded Khovanskii check")
    s.add_argument("--system", choices=("cox", "elemsym", "minors"), default="cox")
    _add_matrix_args(s, required=False)
    s.add_argument("--bound", type=int, default=2)
    s.add_argument("--m", type=int, default=3, help="variables for elemsym")
    s.add_argument("--n", type=int, default=4, help="columns for minors")
    s.set_defaults(func=cmd_khovanskii)

    s = sub.add_parser("hilbert", help="lattice-point counts of a graded fiber")
    s.add_argument("--system", choices=("cox", "elemsym", "degree5"), required=True)
    _add_matrix_args(s, required=False)
    s.add_argument("--degree", required=True, help="comma-separated integers")
    s.add_argument("--m", type=int, default=3, help="variables for elemsym")
    s.add_argument("--n", type=int, default=4, help="columns for degree5")
    s.set_defaults(func=cmd_hilbert)

    s = sub.add_parser("search", help="enumerate and classify signed monomial matrices")
    s.add_argument("--exp-min", type=int, default=0)
    s.add_argument("--exp-max", type=int, default=12)
    s.add_argument("--signs", choices=("none", "one", "all"), default="none")
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--exhaustive", action="store_true", help="ignore --count and enumerate everything")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--khovanskii-bound", type=int, default=None)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--json-out", metavar="FILE")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("parse", help="parse and normalise a Laurent polynomial")
    s.add_argument("text")
    s.add_argument("--valuation", action="store_true")
    s.set_defaults(func=cmd_parse)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        _error("usage", str(exc))
        return 2
    except LaurentSyntaxError as exc:
        _error("syntax", str(exc))
        return 2
    except (DegenerateConfigurationError, RankDeficientError, ArithmeticError, ValueError) as exc:
        _error("domain", f"{type(exc).__name__}: {exc}")
        return 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
