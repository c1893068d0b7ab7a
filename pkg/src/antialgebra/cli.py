"""Command-line interface: ``antialgebra <command> ...``.

Exit codes: 0 when every check passes, 1 when a check fails (the report
carries witnesses), 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .algebra import (
    PERFECT_CONDITIONS, StructureError, element_str, multiplicativity_report, product_spans,
    verify_axioms,
)
from .builtins import BUILTIN_NAMES, BuiltinError, K1Window, builtin
from .extensions import (
    central_extension_from_cocycle, crossed_module_from_central_extension, semidirect,
    verify_action, verify_central_extension, verify_crossed_module,
)
from .homology import (
    d1_matrix, d2_chain_matrix, d2_matrix, d3_chain_matrix, h2_cohomology_trivial, h2_homology,
    h2_with_coefficients, homology_class_vectors, is_cocycle_with_coeffs, Tensor2Layout,
)
from .io import (
    AlgebraDocument, ParseError, emit_algebra, emit_extension, extension_document, parse_action,
    parse_algebra, parse_cocycle, parse_extension,
)
from .linalg import Matrix, rank
from .report import Check, Report, Witness
from .uce import (
    AnnihilationFailure, BaseMismatch, NotPerfectError, build_uce, kernel_vs_h2, uce_is_perfect,
    universality_morphism, well_definedness_check,
)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_algebra(path: str):
    try:
        return parse_algebra(_read(path)).to_algebra()
    except ParseError as exc:
        raise ParseError(exc.line, exc.column, f"{path}: {exc.message}") from None


def _write_document(text: str, out: str | None) -> bool:
    """Write to ``out`` or stdout; True when stdout was used."""
    if out:
        Path(out).write_text(text, encoding="utf-8")
        return False
    sys.stdout.write(text)
    return True


def _zero_check(name: str, m: Matrix) -> Check:
    c = Check(name, instances=m.rows * m.cols)
    for i in range(m.rows):
        for j in range(m.cols):
            if m[i, j]:
                c.witnesses.append(Witness(name, (f"row {i}", f"column {j}"), m[i, j], 0))
    return c


# ---------------------------------------------------------------------------
# Commands; each returns a Report

def cmd_check(args) -> Report:
    A = _load_algebra(args.file)
    rep = Report("check", dimensions={"even": A.d0, "odd": A.d1})
    rep.extend(verify_axioms(A))
    rep.extend(multiplicativity_report(A))
    return rep


def _perfect_report(A) -> Report:
    ee, oo, eo = product_spans(A)
    rep = Report("perfectness", dimensions={
        "a0": A.d0, "a1": A.d1, "span a0.a0": ee.dim, "span [a1,a1]": oo.dim,
        "span a0.a1": eo.dim})
    for cond, span, full in zip(PERFECT_CONDITIONS, (ee, oo, eo), (A.d0, A.d0, A.d1)):
        c = rep.add(Check(cond, instances=1))
        if span.dim != full:
            c.witnesses.append(Witness(cond, (), full, span.dim))
    return rep


def cmd_perfect(args) -> Report:
    return _perfect_report(_load_algebra(args.file))


def cmd_cohomology(args) -> Report:
    A = _load_algebra(args.file)
    res = h2_cohomology_trivial(A)
    D1, D2 = d1_matrix(A), d2_matrix(A)
    rep = Report("cohomology", dimensions={
        "rank d1": res.rank_d1, "rank d2": res.rank_d2, "H2": res.dimension,
        "H2 without supercommutativity": res.unrestricted_dimension})
    if D1.cols and D2.rows:
        rep.add(_zero_check("d2 o d1 = 0", D2 @ D1))
    for k, w in enumerate(res.representatives):
        parts = []
        for label, table, left, right in (("omega0", w.w0, A.even, A.even),
                                          ("omega1", w.w1, A.even, A.odd),
                                          ("omega2", w.w2, A.odd, A.odd)):
            for i, row in enumerate(table):
                for j, v in enumerate(row):
                    if v[0]:
                        parts.append(f"{label}({left[i]},{right[j]}) = {v[0]}")
        rep.notes.append(f"representative {k}: " + ("; ".join(parts) or "0"))
    if args.coeffs:
        try:
            V = parse_algebra(_read(args.coeffs)).to_algebra()
        except ParseError as exc:
            raise ParseError(exc.line, exc.column, f"{args.coeffs}: {exc.message}") from None
        cv = h2_with_coefficients(A, V)
        rep.dimensions.update({"coefficients": [cv.coefficients_even, cv.coefficients_odd],
                               "H2 even-valued per coordinate": cv.even_part,
                               "H2 odd-valued per coordinate": cv.odd_part,
                               "H2 with coefficients": cv.dimension})
    return rep


def cmd_homology(args) -> Report:
    A = _load_algebra(args.file)
    d2, d3 = d2_chain_matrix(A), d3_chain_matrix(A)
    h = h2_homology(A)
    rep = Report("homology", dimensions={
        "rank d2": rank(d2), "rank d3": rank(d3), "H2": h.dimension,
        "H2 modulo im d3 only": h.bare_dimension})
    c = _zero_check("d2 o d3 = 0", d2 @ d3)
    rep.add(c)
    labels = Tensor2Layout(A.d0, A.d1).basis_labels(A)
    for k, t in enumerate(homology_class_vectors(h)):
        rep.notes.append(f"class {k}: {element_str(labels, t)}")
    return rep


def cmd_extend(args) -> Report:
    A = _load_algebra(args.file)
    try:
        w = parse_cocycle(_read(args.cocycle), A).to_cocycle(A)
    except ParseError as exc:
        raise ParseError(exc.line, exc.column, f"{args.cocycle}: {exc.message}") from None
    rep = Report("extend", dimensions={"base": list(A.dims), "coefficients": list(w.coefficients.dims)})
    cocycle = is_cocycle_with_coeffs(A, w)
    rep.extend(cocycle, "cocycle.")
    if not cocycle.passed:
        return rep
    E = central_extension_from_cocycle(A, w)
    rep.dimensions["total"] = list(E.total.dims)
    rep.extend(verify_central_extension(E), "extension.")
    if args.bundle:
        Path(args.bundle).write_text(emit_extension(extension_document(E)), encoding="utf-8")
    args._stdout_used = _write_document(emit_algebra(E.total), args.out)
    return rep


def cmd_crossed(args) -> Report:
    try:
        E = parse_extension(_read(args.file)).to_extension()
    except ParseError as exc:
        raise ParseError(exc.line, exc.column, f"{args.file}: {exc.message}") from None
    rep = Report("crossed module", dimensions={"base": list(E.base.dims), "total": list(E.total.dims)})
    ext = verify_central_extension(E)
    rep.extend(ext, "extension.")
    if ext.passed:
        rep.extend(verify_crossed_module(crossed_module_from_central_extension(E)))
    return rep


def cmd_semidirect(args) -> Report:
    A = _load_algebra(args.file)
    try:
        V, rho = parse_action(_read(args.action), A).to_action(A)
    except ParseError as exc:
        raise ParseError(exc.line, exc.column, f"{args.action}: {exc.message}") from None
    rep = Report("semidirect", dimensions={"base": list(A.dims), "module": list(V.dims)})
    act = verify_action(A, V, rho)
    rep.extend(act)
    if act.passed:
        S = semidirect(A, V, rho, check=False)
        rep.dimensions["total"] = list(S.dims)
        args._stdout_used = _write_document(emit_algebra(S), args.out)
    return rep


def _not_perfect_report(exc: NotPerfectError, A) -> Report:
    rep = _perfect_report(A)
    rep.title = "uce"
    rep.notes.append(str(exc))
    return rep


def cmd_uce(args) -> Report:
    A = _load_algebra(args.file)
    try:
        r = build_uce(A, force=args.force)
    except NotPerfectError as exc:
        return _not_perfect_report(exc, A)
    rep = Report("uce", dimensions={"base": list(A.dims), "uce": list(r.uce_algebra.dims)})
    rep.extend(r.invariants)
    rep.extend(well_definedness_check(A, r), "relations.")
    rep.extend(kernel_vs_h2(A, r), "kernel.")
    c = rep.add(Check("uce perfect", instances=1))
    if not uce_is_perfect(r):
        c.witnesses.append(Witness("uce perfect", (), "perfect", "not perfect"))
    if r.forced:
        rep.notes.append("built with --force on a non-perfect base")
    if args.out:
        _write_document(emit_algebra(r.uce_algebra), args.out)
    return rep


def cmd_universality(args) -> Report:
    A = _load_algebra(args.file)
    try:
        E = parse_extension(_read(args.against)).to_extension()
    except ParseError as exc:
        raise ParseError(exc.line, exc.column, f"{args.against}: {exc.message}") from None
    try:
        r = build_uce(A)
    except NotPerfectError as exc:
        return _not_perfect_report(exc, A)
    rep = Report("universality", dimensions={"uce": list(r.uce_algebra.dims),
                                             "target": list(E.total.dims)})
    ext = verify_central_extension(E)
    rep.extend(ext, "extension.")
    if not ext.passed:
        return rep
    try:
        cert = universality_morphism(r, E)
    except BaseMismatch as exc:
        raise UsageError(str(exc)) from None
    except AnnihilationFailure as exc:
        rep.add(Check("relations annihilated", [Witness("relations annihilated", (), str(exc), None)], 1))
        return rep
    rep.extend(cert.report)
    rep.notes.extend(cert.report.notes)
    return rep


def _params(items: list[str]) -> dict[str, str]:
    out = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"--param expects key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def cmd_builtin(args) -> Report | None:
    obj = builtin(args.name, _params(args.param))
    if isinstance(obj, K1Window):
        return obj.verify()
    _write_document(emit_algebra(AlgebraDocument.from_algebra(obj)), args.out)
    return None


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")

    p = argparse.ArgumentParser(prog="antialgebra",
                                description="Exact checks for finite-dimensional Hom-Lie antialgebras.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("check", cmd_check, "verify the axioms and multiplicativity")
    sp.add_argument("file", nargs="?", default="-")
    sp = add("perfect", cmd_perfect, "compare the product spans with the algebra")
    sp.add_argument("file", nargs="?", default="-")
    sp = add("cohomology", cmd_cohomology, "second cohomology with trivial coefficients")
    sp.add_argument("file", nargs="?", default="-")
    sp.add_argument("--coeffs", metavar="VFILE", help="coefficient space document")
    sp = add("homology", cmd_homology, "second homology")
    sp.add_argument("file", nargs="?", default="-")
    sp = add("extend", cmd_extend, "build the central extension by a cocycle")
    sp.add_argument("file")
    sp.add_argument("--cocycle", metavar="WFILE", required=True)
    sp.add_argument("--out", metavar="FILE", help="write the total algebra here")
    sp.add_argument("--bundle", metavar="FILE", help="also write an extension bundle")
    sp = add("crossed", cmd_crossed, "crossed module of an extension bundle")
    sp.add_argument("file")
    sp = add("semidirect", cmd_semidirect, "semidirect product with a module")
    sp.add_argument("file")
    sp.add_argument("--action", metavar="RFILE", required=True)
    sp.add_argument("--out", metavar="FILE")
    sp = add("uce", cmd_uce, "universal central extension")
    sp.add_argument("file", nargs="?", default="-")
    sp.add_argument("--force", action="store_true", help="build even if the base is not perfect")
    sp.add_argument("--out", metavar="FILE", help="write the uce algebra here")
    sp = add("universality", cmd_universality, "factor the uce through an extension")
    sp.add_argument("file")
    sp.add_argument("--against", metavar="EXTFILE", required=True)
    sp = add("builtin", cmd_builtin, "emit a named example algebra")
    sp.add_argument("name", choices=BUILTIN_NAMES)
    sp.add_argument("--param", action="append", metavar="k=v", default=[])
    sp.add_argument("--out", metavar="FILE")
    return p


def _error(args, message: str) -> int:
    print(message, file=sys.stderr)
    if args.json:
        rep = Report(args.command, [Check("input", error=message)])
        sys.stdout.write(rep.to_json())
    return 2


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args._stdout_used = False
    try:
        rep = args.func(args)
    except ParseError as exc:
        return _error(args, f"parse error: {exc}")
    except (UsageError, BuiltinError, StructureError, OSError) as exc:
        return _error(args, f"error: {exc}")
    if rep is None:
        return 0
    text = rep.to_json() if args.json else rep.to_text()
    # keep stdout a clean document when one was written there
    (sys.stderr if args._stdout_used else sys.stdout).write(text)
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
