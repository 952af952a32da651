"""Command-line surface.

Exit codes
----------
    0  — every requested check holds
    1  — a check failed (the report says where)
    2  — usage or input error (bad file, bad shapes, violated precondition)

Structure files declare their own parameters; the construction coefficients
are given as expressions (default: the symbols `lam` and `nu`), so one file
can be verified fully symbolically or at concrete parameter values without
editing.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import catalog as cat
from . import files
from .constructions import (
    Construction,
    algebra_solution,
    algebra_solution_inverse,
    chybe_r,
    coalgebra_solution,
    coalgebra_solution_inverse,
    lie_solution,
    lie_solution_inverse,
    system_algebra,
    system_coalgebra,
)
from .errors import ConstructionWarning, HomybError
from .scalar import Scalar, expression_names, parse_scalar
from .structures import (
    HomAlgebra,
    HomCoalgebra,
    HomLieAlgebra,
    HomStructure,
    validate,
)
from .tensor import Matrix
from .verify import (
    VerificationReport,
    chybe_holds,
    commutes_with_alpha,
    hybe_holds,
    inverse_holds,
    system_holds,
)

_KIND_NAMES = {
    HomAlgebra: "hom-algebra",
    HomCoalgebra: "hom-coalgebra",
    HomLieAlgebra: "hom-lie",
}

# construction name -> (enum member, required structure kind)
_SINGLE = {
    "thm2.1": (Construction.ALG21, "hom-algebra"),
    "thm2.4": (Construction.ALG24, "hom-algebra"),
    "cor2.2": (Construction.ALG_INV22, "hom-algebra"),
    "thm2.4-inverse": (Construction.ALG_INV24, "hom-algebra"),
    "thm3.1": (Construction.COALG31, "hom-coalgebra"),
    "thm3.4": (Construction.COALG34, "hom-coalgebra"),
    "cor3.2": (Construction.COALG_INV32, "hom-coalgebra"),
    "thm3.4-inverse": (Construction.COALG_INV34, "hom-coalgebra"),
    "thm4.1": (Construction.LIE41, "hom-lie"),
    "cor4.2": (Construction.LIE_INV42, "hom-lie"),
}
_SYSTEMS = {"thm5.2": "hom-algebra", "thm5.3": "hom-coalgebra"}

# inverse-check name -> the forward construction it inverts
_INVERSE_OF = {
    "cor2.2": "thm2.1",
    "thm2.4-inverse": "thm2.4",
    "cor3.2": "thm3.1",
    "thm3.4-inverse": "thm3.4",
    "cor4.2": "thm4.1",
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HomybError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homyb",
        description="Build and exactly verify twisted Yang-Baxter solution operators "
        "from structure-constant files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="validate the structure axioms of a file")
    p.add_argument("file", help="structure JSON file")
    p.add_argument(
        "--require-multiplicative",
        action="store_true",
        help="for hom-lie structures, also require alpha([x,y]) = [alpha(x),alpha(y)]",
    )
    p.add_argument("--json", dest="json_path", help="also write the report as JSON")
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("build", help="build an operator matrix and write it as JSON")
    p.add_argument("file")
    p.add_argument("--construction", required=True, choices=sorted(_SINGLE) + sorted(_SYSTEMS))
    p.add_argument("--lambda", dest="lam", default="lam", help="lambda expression (default: lam)")
    p.add_argument("--nu", default="nu", help="nu expression (default: nu)")
    p.add_argument("--u", help="comma-separated coordinates of the central element u")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument(
        "--unchecked",
        action="store_true",
        help="downgrade violated preconditions (axioms, involutivity) to warnings",
    )
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="run an exact identity check")
    p.add_argument("file")
    p.add_argument(
        "--check", required=True, choices=("alpha", "hybe", "inverse", "system", "chybe")
    )
    p.add_argument("--construction", choices=sorted(_SINGLE) + sorted(_SYSTEMS))
    p.add_argument("--operator", help="operator JSON file (alpha/hybe checks only)")
    p.add_argument("--lambda", dest="lam", default="lam")
    p.add_argument("--nu", default="nu")
    p.add_argument("--u", help="central element for thm4.1/cor4.2/chybe")
    p.add_argument("--x", help="first bracket argument for chybe")
    p.add_argument("--y", help="second bracket argument for chybe")
    p.add_argument("--m", type=int, default=0, help="twist power on the bracket leg (chybe)")
    p.add_argument("--n", type=int, default=0, help="twist power on the u leg (chybe)")
    p.add_argument("--json", dest="json_path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="built-in example structures")
    p.add_argument("action", choices=("list", "export", "verify-all"))
    p.add_argument("id", nargs="?", help="entry id (for export)")
    p.add_argument("--out")
    p.add_argument("--json", dest="json_path")
    p.set_defaults(func=cmd_catalog)

    return parser


# -- helpers ---------------------------------------------------------------------


def _load(path: str) -> HomStructure:
    return files.load_structure(path)


def _extended(structure: HomStructure, exprs: list[str]) -> HomStructure:
    """Extend the structure's ParamSet by names used in CLI expressions.

    Vector arguments arrive as comma-separated expression lists; scan each
    component separately.
    """
    names: list[str] = []
    for expr in exprs:
        for part in expr.split(","):
            for name in expression_names(part):
                if name not in names:
                    names.append(name)
    target = structure.params.union(names)
    if target == structure.params:
        return structure
    return structure.extend(target)


def _vector_arg(text: str, structure: HomStructure, what: str) -> tuple[Scalar, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != structure.dim:
        raise HomybError(f"{what}: expected {structure.dim} comma-separated coordinates")
    return tuple(parse_scalar(p, structure.params) for p in parts)


def _emit_warnings(caught) -> None:
    seen = set()
    for warning in caught:
        text = str(warning.message)
        if text not in seen:
            seen.add(text)
            print(f"warning: {text}", file=sys.stderr)


def _build_single(structure, name, lam, nu, u, unchecked):
    variant, kind = _SINGLE[name]
    actual = _KIND_NAMES[type(structure)]
    if actual != kind:
        raise HomybError(f"construction {name} requires a {kind} structure, file is {actual}")
    if kind == "hom-lie":
        if u is None:
            raise HomybError(f"construction {name} requires --u")
        uvec = _vector_arg(u, structure, "--u")
        if variant is Construction.LIE41:
            return lie_solution(structure, uvec, lam, nu, unchecked=unchecked)
        return lie_solution_inverse(structure, uvec, lam, unchecked=unchecked)
    if kind == "hom-algebra":
        if variant in (Construction.ALG21, Construction.ALG24):
            return algebra_solution(structure, variant, lam, nu, unchecked=unchecked)
        return algebra_solution_inverse(structure, variant, lam, nu, unchecked=unchecked)
    if variant in (Construction.COALG31, Construction.COALG34):
        return coalgebra_solution(structure, variant, lam, nu, unchecked=unchecked)
    return coalgebra_solution_inverse(structure, variant, lam, nu, unchecked=unchecked)


def _build_system(structure, name, lam, nu, unchecked):
    kind = _SYSTEMS[name]
    actual = _KIND_NAMES[type(structure)]
    if actual != kind:
        raise HomybError(f"construction {name} requires a {kind} structure, file is {actual}")
    if kind == "hom-algebra":
        return system_algebra(structure, lam, nu, unchecked=unchecked)
    return system_coalgebra(structure, lam, nu, unchecked=unchecked)


def _print_report(report: VerificationReport, indent: int = 0, expected: bool | None = None) -> None:
    pad = "  " * indent
    verdict = "PASS" if report.holds else "FAIL"
    suffix = ""
    if expected is not None:
        suffix = f"  (expected {'PASS' if expected else 'FAIL'})"
    print(f"{pad}{report.check_name}: {verdict}{suffix}")
    if not report.holds and report.witnesses and not report.subreports:
        print(f"{pad}  witnesses: {report.witness_summary()}")
    for sub in report.subreports:
        _print_report(sub, indent + 1)


# -- commands -----------------------------------------------------------------------


def cmd_axioms(args) -> int:
    structure = _load(args.file)
    report = validate(structure, args.require_multiplicative)
    _print_report(report)
    if args.json_path:
        files.dump_json(files.report_to_dict(report), args.json_path)
    return 0 if report.holds else 1


def cmd_build(args) -> int:
    structure = _load(args.file)
    exprs = [args.lam, args.nu] + ([args.u] if args.u else [])
    structure = _extended(structure, exprs)
    lam = parse_scalar(args.lam, structure.params)
    nu = parse_scalar(args.nu, structure.params)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ConstructionWarning)
        if args.construction in _SYSTEMS:
            triple = _build_system(structure, args.construction, lam, nu, args.unchecked)
            doc = files.system_to_dict(triple)
        else:
            op = _build_single(
                structure, args.construction, lam, nu, args.u, args.unchecked
            )
            doc = files.operator_to_dict(op)
    _emit_warnings(caught)
    text = files.dump_json(doc, args.out)
    if not args.out:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    structure = _load(args.file)
    exprs = [args.lam, args.nu]
    for extra in (args.u, args.x, args.y):
        if extra:
            exprs.append(extra)
    structure = _extended(structure, exprs)
    lam = parse_scalar(args.lam, structure.params)
    nu = parse_scalar(args.nu, structure.params)

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ConstructionWarning)
        report = _run_check(args, structure, lam, nu)
    _emit_warnings(caught)

    _print_report(report)
    if args.json_path:
        doc = files.report_to_dict(report)
        meta = doc["metadata"]
        meta.setdefault("structure", structure.name)
        meta.setdefault("parameters", ",".join(structure.params.names))
        meta.setdefault("lambda", args.lam)
        meta.setdefault("nu", args.nu)
        if args.construction:
            meta.setdefault("construction", args.construction)
        files.dump_json(doc, args.json_path)
    return 0 if report.holds else 1


def _run_check(args, structure, lam, nu) -> VerificationReport:
    check = args.check
    if check in ("alpha", "hybe"):
        if args.operator:
            matrix, doc = files.load_operator(args.operator)
            target = structure.params.union(matrix.params.names)
            structure = structure.extend(target) if target != structure.params else structure
            matrix = matrix.extend(target) if target != matrix.params else matrix
        elif args.construction:
            if args.construction in _SYSTEMS:
                raise HomybError(f"--check {check} needs a single-operator construction")
            op = _build_single(structure, args.construction, lam, nu, args.u, True)
            matrix = op.matrix
        else:
            raise HomybError(f"--check {check} needs --construction or --operator")
        checker = commutes_with_alpha if check == "alpha" else hybe_holds
        return checker(matrix, structure.alpha)

    if check == "inverse":
        if args.construction not in _INVERSE_OF:
            raise HomybError(
                "--check inverse needs --construction among "
                + ", ".join(sorted(_INVERSE_OF))
            )
        forward = _INVERSE_OF[args.construction]
        nu_forward = nu
        if args.construction == "cor4.2":
            nu_forward = Scalar.one(structure.params)  # the pair is defined at nu = 1
        b = _build_single(structure, forward, lam, nu_forward, args.u, True)
        binv = _build_single(structure, args.construction, lam, nu, args.u, True)
        return inverse_holds(b.matrix, binv.matrix)

    if check == "system":
        if args.construction not in _SYSTEMS:
            raise HomybError("--check system needs --construction thm5.2 or thm5.3")
        w, z, x = _build_system(structure, args.construction, lam, nu, True)
        return system_holds(w, z, x, structure.alpha)

    # chybe
    if not isinstance(structure, HomLieAlgebra):
        raise HomybError("--check chybe requires a hom-lie structure")
    if not (args.x and args.y and args.u):
        raise HomybError("--check chybe needs --x, --y and --u")
    x = _vector_arg(args.x, structure, "--x")
    y = _vector_arg(args.y, structure, "--y")
    u = _vector_arg(args.u, structure, "--u")
    alpha_inverse = None
    if args.m < 0 or args.n < 0:
        if structure.alpha @ structure.alpha == Matrix.identity(structure.dim, structure.params):
            alpha_inverse = structure.alpha
        else:
            raise HomybError(
                "negative twist powers need an invertible alpha; "
                "this alpha is not involutive"
            )
    r = chybe_r(structure, x, y, u, args.m, args.n, alpha_inverse=alpha_inverse)
    return chybe_holds(r, structure)


def cmd_catalog(args) -> int:
    if args.action == "list":
        for entry_id, description in cat.catalog_list():
            print(f"{entry_id:16} {description}")
        return 0

    if args.action == "export":
        if not args.id:
            raise HomybError("catalog export needs an entry id")
        entry = cat.catalog_get(args.id)
        text = files.dump_json(files.structure_to_dict(entry.structure), args.out)
        if not args.out:
            sys.stdout.write(text)
        return 0

    # verify-all
    reports = cat.verify_all()
    all_ok = True
    json_entries = []
    for report in reports:
        entry = cat.catalog_get(report.check_name)
        expected = entry.expectations()
        print(report.check_name)
        entry_ok = True
        for sub in report.subreports:
            want = expected.get(sub.check_name, True)
            ok = sub.holds == want
            entry_ok &= ok
            flag = "" if ok else "  <-- UNEXPECTED"
            verdict = "PASS" if sub.holds else "FAIL"
            wanted = "PASS" if want else "FAIL"
            print(f"  {sub.check_name}: {verdict} (expected {wanted}){flag}")
        for note in entry.notes:
            print(f"  note: {note}")
        all_ok &= entry_ok
        json_entries.append(
            {
                "entry": report.check_name,
                "as_expected": entry_ok,
                "expected": {k: v for k, v in expected.items()},
                "notes": list(entry.notes),
                "report": files.report_to_dict(report),
            }
        )
    if args.json_path:
        files.dump_json({"entries": json_entries, "all_as_expected": all_ok}, args.json_path)
    print("catalog: all entries behave as documented" if all_ok else "catalog: UNEXPECTED verdicts")
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
