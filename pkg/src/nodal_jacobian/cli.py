"""Command-line entry point.

    nodal-jacobian --normalization-genus 1 --nodes 1 betti
    nodal-jacobian --arithmetic-genus 3 --nodes 1 hodge --format json
    nodal-jacobian verify --g0-max 4 --k-max 6

Exit codes: 0 ok, 1 usage error, 2 verification failure, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import closed_form as cf
from . import mhs_core as mc
from .oracle.census import DEFAULT_CAP, CensusCapExceeded, kunneth_basis_census
from .serialize import to_csv, to_json
from .strata import strata_summary
from .verify import run_sweep

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nodal-jacobian", description=__doc__.split("\n\n")[0])
    genus = parser.add_mutually_exclusive_group()
    genus.add_argument("--normalization-genus", type=int, metavar="N", dest="g0")
    genus.add_argument("--arithmetic-genus", type=int, metavar="G", dest="g")
    parser.add_argument("--nodes", type=int, metavar="K", default=0)
    parser.add_argument(
        "--route", choices=("closed", "structural", "census"), default="structural"
    )
    parser.add_argument("--format", choices=("table", "json", "csv"), default="table")
    parser.add_argument("--out", type=Path, metavar="PATH")
    parser.add_argument("--g0-max", type=int, default=4, metavar="N")
    parser.add_argument("--k-max", type=int, default=6, metavar="N")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP, metavar="N")
    parser.add_argument(
        "--workers", type=int, default=1, metavar="N", help="processes for the census"
    )
    parser.add_argument(
        "command",
        choices=("betti", "weights", "hodge", "epoly", "verify", "strata", "export"),
    )
    return parser


def resolve_genus(args) -> tuple[int, int]:
    """``(g0, k)`` from either genus flag; ``g0 = g - k``."""
    k = args.nodes
    if k < 0:
        raise UsageError(f"--nodes must be >= 0, got {k}")
    if args.g is not None:
        if args.g < k:
            raise UsageError(f"arithmetic genus {args.g} is smaller than --nodes {k}")
        return args.g - k, k
    g0 = 0 if args.g0 is None else args.g0
    if g0 < 0:
        raise UsageError(f"--normalization-genus must be >= 0, got {g0}")
    return g0, k


def table_for(args, g0: int, k: int) -> mc.MixedHodgeTable:
    if args.route == "closed":
        return cf.closed_form_table(cf.ClosedFormParams(g0, k))
    if args.route == "census":
        return kunneth_basis_census(g0, k, cap=args.cap, workers=args.workers)
    return mc.compactified_jacobian_table(g0, k)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _aligned(header, rows) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[c]) for r in cells) for c in range(len(header))]
    return "".join(
        "  ".join(v.rjust(w) for v, w in zip(r, widths)) + "\n" for r in cells
    )


def _render(fmt, header, rows, meta) -> str:
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "json":
        payload = dict(meta)
        payload["rows"] = [
            {h: (str(v) if h in ("dim", "coeff", "betti") else v) for h, v in zip(header, r)}
            for r in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    return _aligned(header, rows)


def cmd_betti(args, g0, k) -> str:
    vector = mc.poincare_polynomial(table_for(args, g0, k))
    if args.format == "table":
        return " ".join(map(str, vector)) + "\n"
    return _render(
        args.format, ("i", "betti"), list(enumerate(vector)),
        {"g0": g0, "k": k, "route": args.route},
    )


def cmd_weights(args, g0, k) -> str:
    dims: dict[tuple[int, int], int] = {}
    for piece, v in table_for(args, g0, k).items():
        key = (piece.degree, piece.weight)
        dims[key] = dims.get(key, 0) + v
    rows = [(i, l, v) for (i, l), v in sorted(dims.items())]
    return _render(args.format, ("i", "l", "dim"), rows,
                   {"g0": g0, "k": k, "route": args.route})


def cmd_hodge(args, g0, k) -> str:
    rows = [
        (p.degree, p.weight, p.hodge_p, p.hodge_q, v)
        for p, v in table_for(args, g0, k).items()
    ]
    return _render(args.format, ("i", "l", "p", "q", "dim"), rows,
                   {"g0": g0, "k": k, "route": args.route})


def cmd_epoly(args, g0, k) -> str:
    coeffs = mc.e_polynomial(table_for(args, g0, k))
    rows = [(p, q, c) for (p, q), c in coeffs.items()]
    return _render(args.format, ("p", "q", "coeff"), rows,
                   {"g0": g0, "k": k, "route": args.route})


def cmd_strata(args, g0, k) -> str:
    rows = [
        (r.r, r.upstream, r.downstream, r.fiber, r.local_model)
        for r in strata_summary(k)
    ]
    return _render(args.format, ("r", "upstream", "downstream", "fiber", "local_model"),
                   rows, {"k": k})


def cmd_export(args, g0, k) -> str:
    table = table_for(args, g0, k)
    if args.format == "csv":
        return to_csv(table)
    return to_json(table, g0, k)


def cmd_verify(args) -> tuple[str, int]:
    if args.g0_max < 0 or args.k_max < 0:
        raise UsageError("--g0-max and --k-max must be >= 0")
    report = run_sweep(args.g0_max, args.k_max, cap=args.cap, workers=args.workers)
    code = EXIT_OK if report.ok else EXIT_FAILED
    if args.format == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n", code
    summary = report.summary()
    lines = [
        f"sweep g0<= {args.g0_max}, k<= {args.k_max}: {summary['cells']} cells",
        "records: " + ", ".join(f"{k}={v}" for k, v in summary["records"].items()),
        f"corrected/structural/census mismatches: {summary['failures']}",
    ]
    for r in report.failures:
        lines.append(f"  MISMATCH {_describe(r)}")
    lines.append(f"printed-formula disagreements: {len(report.printed_disagreements)}")
    for r in report.printed_disagreements:
        lines.append(f"  {_describe(r)} printed={r.value_printed} true={r.value_census}")
    lines.append("VERIFIED" if report.ok else "FAILED")
    return "\n".join(lines) + "\n", code


def _describe(r) -> str:
    idx = [f"g0={r.g0}", f"k={r.k}", f"i={r.i}"]
    if r.l is not None:
        idx.append(f"l={r.l}")
    if r.p is not None:
        idx += [f"p={r.p}", f"q={r.q}"]
    return f"{r.kind}(" + ",".join(idx) + ")"


_COMMANDS = {
    "betti": cmd_betti,
    "weights": cmd_weights,
    "hodge": cmd_hodge,
    "epoly": cmd_epoly,
    "strata": cmd_strata,
    "export": cmd_export,
}


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        out.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {out}: {exc.strerror or exc}") from exc


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cap < 1 or args.workers < 1:
            raise UsageError("--cap and --workers must be >= 1")
        if args.command == "verify":
            text, code = cmd_verify(args)
        else:
            g0, k = resolve_genus(args)
            text, code = _COMMANDS[args.command](args, g0, k), EXIT_OK
        _emit(text, args.out)
        return code
    except UsageError as exc:
        print(f"nodal-jacobian: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CensusCapExceeded as exc:
        print(f"nodal-jacobian: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except BrokenPipeError:
        # downstream reader went away (e.g. piped into head)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except OSError as exc:
        print(f"nodal-jacobian: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
