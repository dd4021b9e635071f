"""Command-line front end; a thin client over the same core the service wraps.

Subcommands:
    run FILE [--seed N] [--shots N] [--format json|csv] [--out PATH]
    wigner SPEC... [--grid XMIN XMAX PMIN PMAX RESOLUTION] [--out PATH]
    check FILE
    serve [--host HOST] [--port PORT]

Exit codes: 0 success, 1 parse/validation error (diagnostics on stderr),
2 I/O error.  stdout carries only payload; stderr only diagnostics.
"""

from __future__ import annotations

import argparse
import sys

from .circuit import CircuitError
from . import runner


def _read_text(path: str) -> str:
    with open(path, "rb") as handle:
        raw = handle.read()
    return raw.decode("utf-8")


def _emit(text: str, out_path: str | None) -> int:
    if out_path is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as err:
        print(f"error: cannot write {out_path}: {err}", file=sys.stderr)
        return 2
    return 0


def cmd_run(args) -> int:
    try:
        text = _read_text(args.file)
    except OSError as err:
        print(f"error: cannot read {args.file}: {err}", file=sys.stderr)
        return 2
    except UnicodeDecodeError as err:
        print(f"error: {args.file} is not valid UTF-8: {err}", file=sys.stderr)
        return 1
    try:
        payload, warnings = runner.run_circuit_text(text, seed=args.seed, shots=args.shots)
    except CircuitError as err:
        for diag in err.diagnostics:
            print(str(diag), file=sys.stderr)
        return 1
    for note in warnings:
        print(f"warning: {note}", file=sys.stderr)
    if args.format == "json":
        rendered = runner.payload_to_json(payload)
    else:
        rendered = runner.payload_to_csv(payload)
    return _emit(rendered, args.out)


def cmd_wigner(args) -> int:
    xmin, xmax, pmin, pmax, resolution = args.grid
    try:
        state = runner.parse_state_spec(args.spec)
        rows = runner.wigner_rows(state, xmin, xmax, pmin, pmax, int(resolution))
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    return _emit(runner.wigner_rows_to_csv(rows), args.out)


def cmd_check(args) -> int:
    try:
        text = _read_text(args.file)
    except OSError as err:
        print(f"error: cannot read {args.file}: {err}", file=sys.stderr)
        return 2
    except UnicodeDecodeError as err:
        print(f"error: {args.file} is not valid UTF-8: {err}", file=sys.stderr)
        return 1
    diagnostics = runner.check_circuit_text(text)
    if diagnostics:
        for diag in diagnostics:
            print(str(diag), file=sys.stderr)
        return 1
    print("ok")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .api import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dualsim", description="Dual-paradigm quantum circuit simulator.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a circuit file and emit the measurement result")
    p_run.add_argument("file", help="circuit DSL file")
    p_run.add_argument("--seed", type=int, default=runner.DEFAULT_SEED, help="RNG seed (default 42)")
    p_run.add_argument("--shots", type=int, default=None, help="override sample shot count")
    p_run.add_argument("--format", choices=("json", "csv"), default="json", help="output format")
    p_run.add_argument("--out", default=None, help="write output to a file instead of stdout")
    p_run.set_defaults(func=cmd_run)

    p_wig = sub.add_parser("wigner", help="export a Wigner-function grid as CSV")
    p_wig.add_argument("spec", nargs="+", help="state spec: 'fock N CUTOFF' or 'squeeze Z CUTOFF'")
    p_wig.add_argument(
        "--grid",
        nargs=5,
        type=float,
        default=(-3.0, 3.0, -3.0, 3.0, 61),
        metavar=("XMIN", "XMAX", "PMIN", "PMAX", "RESOLUTION"),
        help="grid bounds and per-axis resolution (default -3 3 -3 3 61)",
    )
    p_wig.add_argument("--out", default=None, help="write CSV to a file instead of stdout")
    p_wig.set_defaults(func=cmd_wigner)

    p_check = sub.add_parser("check", help="parse and validate a circuit file without executing")
    p_check.add_argument("file", help="circuit DSL file")
    p_check.set_defaults(func=cmd_check)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
