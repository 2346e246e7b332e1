"""catmag command line: exact magnitude computations on JSON documents.

Subcommands: magnitude, pinv, zeta, mobius, weighting, coweighting,
rota, check, product, coproduct, gen.  Inputs are matrix / poset /
category documents (see ``documents``).  Everything is printed exactly
as rationals; ``--decimal K`` appends a K-digit approximation marked
with an approx sign in text mode.

Exit codes: 0 success, 1 input or usage error, 2 for mathematically
negative outcomes (no magnitude, no weighting, singular zeta, failed
Penrose check).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Callable

from .categories import (
    FinCategory,
    Poset,
    as_category,
    category_coproduct,
    category_product,
    chain_poset,
    cyclic_monoid,
    discrete_category,
    divisor_poset,
    indiscrete_category,
    zeta_of,
)
from .documents import (
    category_to_obj,
    dump_json,
    load_document,
    matrix_to_obj,
    report_to_obj,
    structure_to_obj,
)
from .magnitude import (
    MagnitudeReport,
    coweighting_of,
    magnitude_of,
    magnitude_of_category,
    rota_characteristic,
    weighting_of,
)
from .matrix import Matrix, penrose_check
from .rationals import decimal_approximation, format_rational

GENERATORS: dict[str, Callable] = {
    "discrete": discrete_category,
    "indiscrete": indiscrete_category,
    "chain": chain_poset,
    "divisors": divisor_poset,
    "cyclic-monoid": cyclic_monoid,
}


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # exit code 2 is reserved for negative mathematical outcomes, so
    # argparse failures must not call sys.exit(2) themselves
    def error(self, message):
        raise UsageError(message)


def _formatter(args) -> Callable[[Fraction], str]:
    digits = args.decimal

    def fmt(value: Fraction) -> str:
        text = format_rational(value)
        if digits is not None:
            text += f" ≈ {decimal_approximation(value, digits)}"
        return text

    return fmt


def _matrix_text(m: Matrix, fmt: Callable[[Fraction], str]) -> str:
    if m.rows == 0 or m.cols == 0:
        return f"(empty {m.rows}x{m.cols} matrix)"
    cells = [[fmt(x) for x in row] for row in m]
    widths = [max(len(cells[i][j]) for i in range(m.rows)) for j in range(m.cols)]
    return "\n".join(
        "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]" for row in cells
    )


def _vector_lines(labels, values, fmt) -> list[str]:
    return [f"  {label} = {fmt(v)}" for label, v in zip(labels, values)]


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _matrix_and_labels(doc) -> tuple[Matrix, tuple[str, ...]]:
    if isinstance(doc, Matrix):
        return doc, tuple(str(i) for i in range(doc.rows))
    zeta = zeta_of(doc)
    return zeta.matrix, zeta.object_order


def _report_text(report: MagnitudeReport, fmt) -> str:
    yes = lambda flag: "yes" if flag else "no"
    lines = [f"objects ({report.n}): " + ", ".join(report.object_order)]
    lines[0] = lines[0].rstrip()
    lines.append(f"has weighting: {yes(report.has_weighting)}")
    lines.append(f"has coweighting: {yes(report.has_coweighting)}")
    lines.append(f"mobius inversion: {yes(report.mobius is not None)}")
    if report.has_magnitude:
        lines.append(f"magnitude = {fmt(report.magnitude)}")
        lines.append(f"generalized magnitude = {fmt(report.generalized_magnitude)}")
    else:
        lines.append(f"no magnitude; generalized = {fmt(report.generalized_magnitude)}")
    if report.weighting is not None:
        lines.append("weighting:")
        lines.extend(
            _vector_lines(report.object_order, (row[0] for row in report.weighting), fmt)
        )
        if report.weighting_nullspace:
            lines.append(f"weighting nullspace (dim {len(report.weighting_nullspace)}):")
            for vector in report.weighting_nullspace:
                lines.append("  (" + ", ".join(fmt(row[0]) for row in vector) + ")")
    if report.coweighting is not None:
        lines.append("coweighting:")
        lines.extend(_vector_lines(report.object_order, report.coweighting[0], fmt))
    return "\n".join(lines) + "\n"


def _cmd_magnitude(args) -> int:
    doc = load_document(args.file)
    if isinstance(doc, Matrix):
        report = magnitude_of(doc)
    else:
        report = magnitude_of_category(doc)
    if args.format == "json":
        _emit(dump_json(report_to_obj(report)), None)
    else:
        _emit(_report_text(report, _formatter(args)), None)
    return 0 if report.has_magnitude else 2


def _cmd_pinv(args) -> int:
    matrix, _ = _matrix_and_labels(load_document(args.file))
    result = matrix.pinv()
    if args.format == "json":
        _emit(dump_json(matrix_to_obj(result)), None)
    else:
        _emit(_matrix_text(result, _formatter(args)) + "\n", None)
    return 0


def _cmd_zeta(args) -> int:
    doc = load_document(args.file)
    if isinstance(doc, Matrix):
        raise UsageError("zeta needs a poset or category document, not a matrix")
    zeta = zeta_of(doc)
    if args.format == "json":
        _emit(dump_json(matrix_to_obj(zeta.matrix)), None)
    else:
        _emit(_matrix_text(zeta.matrix, _formatter(args)) + "\n", None)
    return 0


def _cmd_mobius(args) -> int:
    matrix, _ = _matrix_and_labels(load_document(args.file))
    inverse = matrix.inverse()
    if inverse is None:
        rank = matrix.rank()
        if args.format == "json":
            _emit(dump_json({"kind": "singular-zeta", "rank": rank}), None)
        else:
            _emit(f"zeta singular, rank {rank}\n", None)
        return 2
    if args.format == "json":
        _emit(dump_json(matrix_to_obj(inverse)), None)
    else:
        _emit(_matrix_text(inverse, _formatter(args)) + "\n", None)
    return 0


def _weight_command(args, compute, label: str, row_of) -> int:
    matrix, labels = _matrix_and_labels(load_document(args.file))
    vector = compute(matrix)
    if args.format == "json":
        entries = None
        if vector is not None:
            entries = {
                name: format_rational(v) for name, v in zip(labels, row_of(vector))
            }
        _emit(
            dump_json({"kind": label, "exists": vector is not None, "entries": entries}),
            None,
        )
    elif vector is None:
        _emit(f"no {label} exists\n", None)
    else:
        fmt = _formatter(args)
        lines = [f"{label}:"] + _vector_lines(labels, row_of(vector), fmt)
        _emit("\n".join(lines) + "\n", None)
    return 0 if vector is not None else 2


def _cmd_weighting(args) -> int:
    return _weight_command(
        args, weighting_of, "weighting", lambda v: [row[0] for row in v]
    )


def _cmd_coweighting(args) -> int:
    return _weight_command(args, coweighting_of, "coweighting", lambda v: list(v[0]))


def _cmd_rota(args) -> int:
    doc = load_document(args.file)
    if not isinstance(doc, Poset):
        raise UsageError("rota needs a poset document")
    value = rota_characteristic(doc)
    if args.format == "json":
        _emit(dump_json({"kind": "rota-characteristic", "value": format_rational(value)}), None)
    else:
        _emit(f"E = {_formatter(args)(value)}\n", None)
    return 0


def _cmd_check(args) -> int:
    doc = load_document(args.file)
    if args.against is None:
        if isinstance(doc, Matrix):
            summary, obj = f"valid matrix ({doc.rows}x{doc.cols})", {
                "kind": "validation", "valid": True, "document": "matrix",
                "shape": [doc.rows, doc.cols],
            }
        elif isinstance(doc, Poset):
            summary, obj = f"valid poset ({len(doc.objects)} objects)", {
                "kind": "validation", "valid": True, "document": "poset",
                "objects": len(doc.objects),
            }
        else:
            summary = (
                f"valid category ({len(doc.objects)} objects, {len(doc.morphisms)} morphisms)"
            )
            obj = {
                "kind": "validation", "valid": True, "document": "category",
                "objects": len(doc.objects), "morphisms": len(doc.morphisms),
            }
        _emit(dump_json(obj) if args.format == "json" else summary + "\n", None)
        return 0
    base, _ = _matrix_and_labels(doc)
    candidate, _ = _matrix_and_labels(load_document(args.against))
    outcome = penrose_check(base, candidate)
    if args.format == "json":
        _emit(
            dump_json(
                {
                    "kind": "penrose-check",
                    "fixes_matrix": outcome.fixes_matrix,
                    "fixes_candidate": outcome.fixes_candidate,
                    "forward_symmetric": outcome.forward_symmetric,
                    "reverse_symmetric": outcome.reverse_symmetric,
                    "all_hold": outcome.all_hold,
                }
            ),
            None,
        )
    else:
        yes = lambda flag: "yes" if flag else "no"
        _emit(
            "\n".join(
                [
                    f"AXA = A: {yes(outcome.fixes_matrix)}",
                    f"XAX = X: {yes(outcome.fixes_candidate)}",
                    f"(AX)^T = AX: {yes(outcome.forward_symmetric)}",
                    f"(XA)^T = XA: {yes(outcome.reverse_symmetric)}",
                ]
            )
            + "\n",
            None,
        )
    return 0 if outcome.all_hold else 2


def _combine_command(args, combine) -> int:
    left = load_document(args.file_a)
    right = load_document(args.file_b)
    if isinstance(left, Matrix) or isinstance(right, Matrix):
        raise UsageError("product/coproduct need poset or category documents, not matrices")
    combined = combine(as_category(left), as_category(right))
    _emit(dump_json(category_to_obj(combined)), args.output)
    if args.magnitude:
        report = magnitude_of_category(combined)
        fmt = _formatter(args)
        if report.has_magnitude:
            _emit(f"magnitude = {fmt(report.magnitude)}\n", None)
        else:
            _emit(f"no magnitude; generalized = {fmt(report.generalized_magnitude)}\n", None)
    return 0


def _cmd_product(args) -> int:
    return _combine_command(args, category_product)


def _cmd_coproduct(args) -> int:
    return _combine_command(args, category_coproduct)


def _cmd_gen(args) -> int:
    generated = GENERATORS[args.name](args.size)
    _emit(dump_json(structure_to_obj(generated)), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="catmag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument(
            "--decimal",
            type=int,
            metavar="K",
            default=None,
            help="append a K-digit decimal approximation in text mode",
        )
        return p

    add("magnitude", _cmd_magnitude, "magnitude report for a matrix, poset, or category").add_argument("file")
    add("pinv", _cmd_pinv, "Moore-Penrose pseudoinverse (of the zeta matrix for structures)").add_argument("file")
    add("zeta", _cmd_zeta, "zeta matrix of a poset or category").add_argument("file")
    add("mobius", _cmd_mobius, "Moebius function (inverse zeta); exit 2 when singular").add_argument("file")
    add("weighting", _cmd_weighting, "weighting vector, if one exists").add_argument("file")
    add("coweighting", _cmd_coweighting, "coweighting vector, if one exists").add_argument("file")
    add("rota", _cmd_rota, "Rota Euler characteristic of a bounded poset").add_argument("file")

    check = add("check", _cmd_check, "validate a document, or verify a pseudoinverse candidate")
    check.add_argument("file")
    check.add_argument("--against", metavar="CANDIDATE", default=None)

    for name, handler in (("product", _cmd_product), ("coproduct", _cmd_coproduct)):
        p = add(name, handler, f"{name} of two posets/categories, emitted as a category")
        p.add_argument("file_a")
        p.add_argument("file_b")
        p.add_argument("-o", "--output", default=None, metavar="PATH")
        p.add_argument("--magnitude", action="store_true", help="also print the magnitude")

    gen = add("gen", _cmd_gen, "generate a standard category or poset document")
    gen.add_argument("name", choices=sorted(GENERATORS))
    gen.add_argument("size", type=int)
    gen.add_argument("-o", "--output", default=None, metavar="PATH")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
