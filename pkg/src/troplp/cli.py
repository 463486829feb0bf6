"""Command-line front end.

Subcommands: solve (dispatch on the instance's problem kind), check
(re-validate a solution file's certificate without re-solving), and the star
and mcm utilities which accept instance files whose "problem" field may be
omitted.  Exit codes: 0 success, 1 infeasible or divergent, 2 input error,
3 certificate violation.  Results go to stdout unless --output is given;
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .core import DEFAULT_TOL
from .errors import (CertificateViolationError, DimensionMismatchError,
                     FiniteRequiredError, InstanceFormatError,
                     NonIntegerBError)
from .io import (EXIT_CERTIFICATE, EXIT_INPUT, EXIT_OK, check_solution_text,
                 parse_instance, render_text, serialize_solution,
                 solve_to_payload)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="troplp",
        description="Max-plus linear algebra and tropical LP/ILP solvers.")
    sub = parser.add_subparsers(dest="command", required=True)
    specs = (
        ("solve", "solve the instance according to its problem kind"),
        ("check", "re-validate a solution file's certificate"),
        ("star", "Kleene star of a square matrix instance"),
        ("mcm", "maximum cycle mean of a square matrix instance"),
    )
    for name, help_text in specs:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--input", required=True, help="input file path")
        cmd.add_argument("--output", default=None,
                         help="output file path (default: stdout)")
        cmd.add_argument("--tol", type=float, default=None,
                         help=f"absolute tolerance (default {DEFAULT_TOL})")
        cmd.add_argument("--format", dest="fmt", choices=("json", "text"),
                         default="json", help="output format")
    return parser


def _write(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"troplp: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_INPUT

    try:
        if args.command == "check":
            problems = check_solution_text(text, args.tol)
            verdict = {"status": "violated" if problems else "passed",
                       "problems": problems}
            rendered = (serialize_solution(verdict) if args.fmt == "json"
                        else render_text(verdict))
            _write(rendered, args.output)
            if problems:
                for problem in problems:
                    print(f"troplp: certificate violation: {problem}",
                          file=sys.stderr)
                return EXIT_CERTIFICATE
            return EXIT_OK

        default_kind = args.command if args.command in ("star", "mcm") else None
        inst = parse_instance(text, default_problem=default_kind)
        if default_kind is not None and inst.problem != default_kind:
            print(f"troplp: {args.command} expects a {default_kind!r} instance, "
                  f"got {inst.problem!r}", file=sys.stderr)
            return EXIT_INPUT
        tol = args.tol if args.tol is not None else (
            inst.tol if inst.tol is not None else DEFAULT_TOL)
        if tol < 0:
            print("troplp: tolerance must be nonnegative", file=sys.stderr)
            return EXIT_INPUT
        payload, code = solve_to_payload(inst, tol)
        rendered = (serialize_solution(payload) if args.fmt == "json"
                    else render_text(payload))
        _write(rendered, args.output)
        return code
    except (InstanceFormatError, FiniteRequiredError, NonIntegerBError,
            DimensionMismatchError) as exc:
        print(f"troplp: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CertificateViolationError as exc:
        print(f"troplp: internal certificate violation: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATE


if __name__ == "__main__":
    sys.exit(main())
