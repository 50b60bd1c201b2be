"""Command line interface.

Exit codes: 0 success (and, for analyze, verdict holds; for semismall,
all strata pass), 1 bad input of any kind, 2 group order bound
exceeded, 3 negative mathematical outcome (obstructed verdict, or a
semismallness failure).
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import CATALOG, ParameterOutOfRange, get_entry
from .cyclotomic import ConductorMismatch, NotASubfield
from .groups import (
    DEFAULT_MAX_ORDER,
    NotSymplectic,
    OrderBoundExceeded,
    SingularGenerator,
)
from .linalg import BadForm, DimensionMismatch
from .reflections import VERDICT_HOLDS, double
from .spectrum import (
    BadInput,
    DEFAULT_INPUT_TOL,
    DEFAULT_PAIR_TOL,
    ToleranceViolation,
    symplectic_eigenvalues,
)
from .specio import (
    ParseError,
    ValidationError,
    analyze,
    make_group,
    parse_group_spec,
    report_to_json,
    report_to_text,
    serialize_group_spec,
    spec_from_group,
)
from .stratification import (
    FiberDataError,
    MissingFiberData,
    build_lattice,
    parse_fiber_data,
    semismall_check,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_ORDER_BOUND = 2
EXIT_NEGATIVE = 3

_INPUT_ERRORS = (
    ParseError,
    ValidationError,
    BadForm,
    BadInput,
    DimensionMismatch,
    NotSymplectic,
    SingularGenerator,
    ConductorMismatch,
    NotASubfield,
    ParameterOutOfRange,
    FiberDataError,
    MissingFiberData,
    ToleranceViolation,
    OSError,
)


def _error(message) -> int:
    print("error: %s" % message, file=sys.stderr)
    return EXIT_BAD_INPUT


def _read_file(path) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_output(text, path) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_group(args):
    doc = parse_group_spec(_read_file(args.spec))
    return make_group(doc, args.max_order)


def _cmd_analyze(args) -> int:
    try:
        group = _load_group(args)
        report = analyze(group, with_strata=args.strata)
    except OrderBoundExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ORDER_BOUND
    except _INPUT_ERRORS as exc:
        return _error(exc)
    rendered = report_to_json(report) if args.json else report_to_text(report)
    sys.stdout.write(rendered)
    return EXIT_OK if report.verdict == VERDICT_HOLDS else EXIT_NEGATIVE


def _cmd_semismall(args) -> int:
    try:
        group = _load_group(args)
        lattice = build_lattice(group)
        fibers = parse_fiber_data(_read_file(args.fibers))
        result = semismall_check(lattice, fibers)
    except OrderBoundExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ORDER_BOUND
    except _INPUT_ERRORS as exc:
        return _error(exc)
    for check in result.checks:
        print(
            "stratum %d: codim %d, fiber %d -> %s"
            % (
                check.stratum_index,
                check.codim,
                check.fiber_dim,
                "ok" if check.ok else "FAIL",
            )
        )
    print("semismall: %s" % ("yes" if result.passed else "no"))
    return EXIT_OK if result.passed else EXIT_NEGATIVE


def _cmd_double(args) -> int:
    try:
        doc = parse_group_spec(_read_file(args.spec))
        if doc.symplectic_form is not None:
            return _error(
                "doubling takes a plain linear action; remove the "
                "symplectic form from the input document"
            )
        group = make_group(doc, args.max_order)
        doubled = double(group)
        out = serialize_group_spec(
            spec_from_group(doc.name + "_doubled", doubled)
        )
        _write_output(out, args.output)
    except OrderBoundExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ORDER_BOUND
    except _INPUT_ERRORS as exc:
        return _error(exc)
    return EXIT_OK


def _cmd_catalog(args) -> int:
    if args.catalog_command == "list":
        for entry in CATALOG:
            print(
                "%-28s dim %2d  order %7d  %-24s %s"
                % (
                    entry.name,
                    entry.dimension,
                    entry.expected_order,
                    entry.expected_verdict,
                    entry.summary,
                )
            )
        return EXIT_OK
    try:
        entry = get_entry(args.name)
        group = entry.build()
        out = serialize_group_spec(spec_from_group(entry.name, group))
        _write_output(out, args.output)
    except OrderBoundExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ORDER_BOUND
    except _INPUT_ERRORS as exc:
        return _error(exc)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    try:
        raw = _read_file(args.theta)
        try:
            payload = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON: %s" % exc) from None
        if not isinstance(payload, dict) or "theta" not in payload:
            raise ValidationError('spectrum input needs a "theta" matrix')
        values = symplectic_eigenvalues(
            payload["theta"],
            payload.get("metric"),
            input_tol=args.input_tol,
            pair_tol=args.pair_tol,
        )
    except _INPUT_ERRORS as exc:
        return _error(exc)
    except (TypeError, ValueError) as exc:
        return _error(exc)
    for v in values:
        print("%.12g" % v)
    return EXIT_OK


def _add_max_order(parser) -> None:
    parser.add_argument(
        "--max-order",
        type=int,
        default=DEFAULT_MAX_ORDER,
        metavar="N",
        help="bound on the group order before giving up (default %d)"
        % DEFAULT_MAX_ORDER,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympref",
        description=(
            "Exact reflection analysis of finite symplectic matrix groups"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "analyze", help="decide whether symplectic reflections generate"
    )
    p.add_argument("spec", help="group specification JSON file")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report")
    fmt.add_argument(
        "--text", action="store_true", help="text report (default)"
    )
    p.add_argument(
        "--strata", action="store_true", help="include the stratum orbits"
    )
    _add_max_order(p)
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser(
        "semismall", help="check semismallness of supplied fiber dimensions"
    )
    p.add_argument("spec", help="group specification JSON file")
    p.add_argument("fibers", help="fiber dimension JSON file")
    _add_max_order(p)
    p.set_defaults(handler=_cmd_semismall)

    p = sub.add_parser(
        "double", help="double a linear action onto the dual pairing space"
    )
    p.add_argument("spec", help="group specification JSON file (no form)")
    p.add_argument("-o", "--output", help="write the doubled spec here")
    _add_max_order(p)
    p.set_defaults(handler=_cmd_double)

    p = sub.add_parser("catalog", help="named example groups")
    catalog_sub = p.add_subparsers(dest="catalog_command", required=True)
    lp = catalog_sub.add_parser("list", help="list the catalog")
    lp.set_defaults(handler=_cmd_catalog)
    ep = catalog_sub.add_parser("emit", help="emit a catalog group as JSON")
    ep.add_argument("name", help="catalog entry name")
    ep.add_argument("-o", "--output", help="write the emitted group file here")
    ep.set_defaults(handler=_cmd_catalog)

    p = sub.add_parser(
        "spectrum", help="symplectic eigenvalues of an antisymmetric form"
    )
    p.add_argument("theta", help='JSON file {"theta": [[...]], "metric": optional}')
    p.add_argument(
        "--input-tol",
        type=float,
        default=DEFAULT_INPUT_TOL,
        help="relative symmetry tolerance (default %g)" % DEFAULT_INPUT_TOL,
    )
    p.add_argument(
        "--pair-tol",
        type=float,
        default=DEFAULT_PAIR_TOL,
        help="relative pairing tolerance (default %g)" % DEFAULT_PAIR_TOL,
    )
    p.set_defaults(handler=_cmd_spectrum)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
