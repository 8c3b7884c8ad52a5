"""Command-line front end.

Examples::

    halfbinom seq --kind u --p 2 --n 5
    halfbinom verify --identity new1 --n 1..15
    halfbinom verify --identity u_power --n 0..10 --r 1..4 --p 1,2,sqrt:3
    halfbinom congruence --id mod625 --n-max 1000
    halfbinom represent --w 7 --n 1..10
    halfbinom table --identity v2k --n 0..3 --p 1 --format csv

JSON goes to stdout (``--format csv`` for CSV), one-line summaries go to
stderr.  Exit status is 0 when every check passes, 1 when any counterexample
is reported and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from .doubleseq import rep_power_sum
from .exactmath import QuadElem, as_quad, format_value
from .identities import (
    IdentityId,
    congruence_check,
    evaluate,
    evaluate_grid,
    identity_info,
    verify_grid,
)
from .sequences import SeqParams, seq_pair

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

GRID_PARAMS = ("n", "r", "m", "t", "u", "v")
CONGRUENCES = {"mod25": IdentityId.CONG25, "mod625": IdentityId.CONG625}


class UsageError(ValueError):
    pass


def parse_range(text: str) -> list[int]:
    """``"3"``, ``"0..10"`` or comma-joined pieces like ``"0..3,7"``; inclusive."""
    values: list[int] = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            raise UsageError(f"empty piece in range {text!r}")
        try:
            if ".." in piece:
                lo, hi = (int(x) for x in piece.split("..", 1))
                if hi < lo:
                    raise UsageError(f"empty range {piece!r}")
                values.extend(range(lo, hi + 1))
            else:
                values.append(int(piece))
        except ValueError as exc:
            if isinstance(exc, UsageError):
                raise
            raise UsageError(f"bad integer range {text!r}") from None
    return values


def parse_p(text: str) -> QuadElem:
    """Parse ``2``, ``-1/2``, ``sqrt:3``, ``2sqrt:3`` or ``1+2sqrt:3``."""
    s = text.strip().replace(" ", "")
    try:
        if "sqrt:" not in s:
            return QuadElem(Fraction(s))
        head, radicand = s.split("sqrt:", 1)
        head = head.rstrip("*")
        cut = max(head.rfind("+"), head.rfind("-"))
        if cut > 0:
            rational, coef = head[:cut], head[cut:]
        else:
            rational, coef = "0", head
        if coef in ("", "+"):
            coef = "1"
        elif coef == "-":
            coef = "-1"
        return QuadElem(Fraction(rational), Fraction(coef), int(radicand))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse parameter p = {text!r}") from None


def parse_p_list(text: str) -> list[QuadElem]:
    return [parse_p(x) for x in text.split(",")]


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _show(value: Any) -> Any:
    if isinstance(value, SeqParams):
        return format_value(value.p)
    return value


def _ranges(args: argparse.Namespace) -> dict[str, list[Any]]:
    ranges: dict[str, list[Any]] = {}
    for name in GRID_PARAMS:
        text = getattr(args, name, None)
        if text is not None:
            ranges[name] = parse_range(text)
    if getattr(args, "p", None) is not None:
        ranges["p"] = parse_p_list(args.p)
    return ranges


def _form(args: argparse.Namespace) -> str | None:
    return "printed" if getattr(args, "paper_form", False) else None


# --- subcommands --------------------------------------------------------------

def cmd_seq(args: argparse.Namespace) -> tuple[str, int]:
    params = SeqParams.of(parse_p(args.p))
    ns = parse_range(args.n)
    values = [(n, getattr(seq_pair(n, params), args.kind)) for n in ns]
    if args.format == "csv":
        return _csv(["n", args.kind], [(n, format_value(x)) for n, x in values]), EXIT_OK
    out: dict[str, Any] = {"kind": args.kind, "p": format_value(params.p)}
    if len(values) == 1:
        out["n"], out["value"] = values[0][0], format_value(values[0][1])
    else:
        out["values"] = [{"n": n, "value": format_value(x)} for n, x in values]
    return _json(out), EXIT_OK


def _parse_assignments(items: Sequence[str], params: Sequence[str]) -> dict[str, Any]:
    named: dict[str, Any] = {}
    positional: list[str] = []
    for item in items:
        if "=" in item:
            key, _, value = item.partition("=")
            named[key.strip()] = value.strip()
        else:
            positional.append(item)
    if positional:
        if named:
            raise UsageError("mix of positional and name=value arguments")
        if len(positional) != len(params):
            raise UsageError(f"expected {len(params)} arguments ({', '.join(params)}), "
                             f"got {len(positional)}")
        named = dict(zip(params, positional))
    out: dict[str, Any] = {}
    for key, value in named.items():
        if key == "p":
            out[key] = parse_p(value)
        else:
            try:
                out[key] = int(value)
            except ValueError:
                raise UsageError(f"argument {key} must be an integer, got {value!r}") from None
    return out


def cmd_eval(args: argparse.Namespace) -> tuple[str, int]:
    info = identity_info(args.identity)
    kw = _parse_assignments(args.args, info.params)
    if "p" in info.params:
        kw.setdefault("p", QuadElem(Fraction(1)))
    lhs, rhs = evaluate(info.id, kw, form=_form(args))
    equal = as_quad(lhs) == as_quad(rhs)
    out: dict[str, Any] = {
        "identity": info.id.value,
        "form": "printed" if _form(args) or not info.has_correction else info.default_form,
        "params": {k: format_value(v) if k == "p" else v for k, v in kw.items()},
        "lhs": format_value(lhs),
        "rhs": format_value(rhs),
        "equal": equal,
    }
    if info.has_correction:
        out["printed_rhs"] = format_value(evaluate(info.id, kw, form="printed")[1])
        out["corrected_rhs"] = format_value(evaluate(info.id, kw, form="corrected")[1])
    if args.format == "csv":
        names = list(out["params"])
        text = _csv(names + ["lhs", "rhs", "equal"],
                    [[out["params"][k] for k in names] + [out["lhs"], out["rhs"], str(equal).lower()]])
    else:
        text = _json(out)
    return text, EXIT_OK if equal else EXIT_FAIL


def _report_output(report, fmt: str) -> str:
    if fmt == "csv":
        info = identity_info(report.identity)
        rows = [[_show(c.params[k]) for k in info.params] + [c.lhs, c.rhs]
                for c in report.counterexamples]
        return _csv(list(info.params) + ["lhs", "rhs"], rows)
    return _json(report.to_dict())


def _summarize(report) -> None:
    line = (f"{report.identity.value} [{report.form}]: "
            f"{report.passed}/{report.checked} passed")
    if report.skipped:
        line += f", {report.skipped} outside domain"
    if report.corrected_form_passes is not None:
        line += (f"; printed form {'passes' if report.printed_form_passes else 'fails'}, "
                 f"corrected form {'passes' if report.corrected_form_passes else 'fails'}")
    print(line, file=sys.stderr)


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    report = verify_grid(args.identity, _ranges(args), form=_form(args))
    _summarize(report)
    return _report_output(report, args.format), EXIT_OK if report.ok else EXIT_FAIL


def cmd_congruence(args: argparse.Namespace) -> tuple[str, int]:
    report = congruence_check(CONGRUENCES[args.id], args.n_max)
    _summarize(report)
    return _report_output(report, args.format), EXIT_OK if report.ok else EXIT_FAIL


def cmd_represent(args: argparse.Namespace) -> tuple[str, int]:
    rows = []
    for w in parse_range(args.w):
        for n in parse_range(args.n):
            lhs, rhs = rep_power_sum(w, n)
            rows.append({"w": w, "n": n, "lhs": str(lhs), "rhs": str(rhs),
                         "equal": lhs == rhs})
    failures = sum(not r["equal"] for r in rows)
    print(f"represent: {len(rows) - failures}/{len(rows)} passed", file=sys.stderr)
    if args.format == "csv":
        text = _csv(["w", "n", "lhs", "rhs", "equal"],
                    [[r["w"], r["n"], r["lhs"], r["rhs"], str(r["equal"]).lower()]
                     for r in rows])
    else:
        text = _json({"checked": len(rows), "passed": len(rows) - failures, "rows": rows})
    return text, EXIT_FAIL if failures else EXIT_OK


def emit_table(identity: IdentityId | str, ranges: dict[str, list[Any]],
               form: str | None = None) -> tuple[list[str], list[list[Any]]]:
    """Header ``params..., lhs, rhs, equal`` and one row per grid point."""
    info = identity_info(identity)
    rows = [[_show(row.params[k]) for k in info.params]
            + [format_value(row.lhs), format_value(row.rhs), str(row.equal).lower()]
            for row in evaluate_grid(info.id, ranges, form=form)]
    return list(info.params) + ["lhs", "rhs", "equal"], rows


def cmd_table(args: argparse.Namespace) -> tuple[str, int]:
    info = identity_info(args.identity)
    header, rows = emit_table(info.id, _ranges(args), form=_form(args))
    failures = sum(row[-1] != "true" for row in rows)
    if args.format == "csv":
        text = _csv(header, rows)
    else:
        text = _json({
            "identity": info.id.value,
            "columns": header,
            "rows": [dict(zip(header, row)) for row in rows],
        })
    return text, EXIT_FAIL if failures else EXIT_OK


# --- parser -------------------------------------------------------------------

def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("json", "csv"), default="json")


def _add_grid(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--identity", required=True, type=IdentityId.parse,
                     help="identity name, e.g. u_power, new1, classic_2a")
    for name in GRID_PARAMS:
        sub.add_argument(f"--{name}", metavar="RANGE", help=f"range for {name}, e.g. 0..10")
    sub.add_argument("--p", metavar="LIST", help="comma list of p values: 1,2,sqrt:3")
    sub.add_argument("--paper-form", action="store_true",
                     help="compare against the printed closed form")
    _add_format(sub)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfbinom",
        description="Exact checks of half-binomial sums over Fibonacci-type sequences.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    seq = subs.add_parser("seq", help="evaluate u_n or v_n")
    seq.add_argument("--kind", choices=("u", "v"), required=True)
    seq.add_argument("--p", required=True)
    seq.add_argument("--n", required=True, metavar="RANGE")
    _add_format(seq)
    seq.set_defaults(func=cmd_seq)

    ev = subs.add_parser("eval", help="evaluate both sides of one identity")
    ev.add_argument("--identity", required=True, type=IdentityId.parse)
    ev.add_argument("--args", nargs="+", default=[], metavar="NAME=VALUE")
    ev.add_argument("--paper-form", action="store_true")
    _add_format(ev)
    ev.set_defaults(func=cmd_eval)

    verify = subs.add_parser("verify", help="sweep an identity over a grid")
    _add_grid(verify)
    verify.set_defaults(func=cmd_verify)

    cong = subs.add_parser("congruence", help="sweep a congruence over 1..n-max")
    cong.add_argument("--id", required=True, choices=sorted(CONGRUENCES))
    cong.add_argument("--n-max", required=True, type=int)
    _add_format(cong)
    cong.set_defaults(func=cmd_congruence)

    rep = subs.add_parser("represent", help="power-of-w representation sums")
    rep.add_argument("--w", required=True, metavar="RANGE")
    rep.add_argument("--n", required=True, metavar="RANGE")
    _add_format(rep)
    rep.set_defaults(func=cmd_represent)

    table = subs.add_parser("table", help="emit lhs/rhs rows for a grid")
    _add_grid(table)
    table.set_defaults(func=cmd_table)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        text, code = args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"halfbinom {args.command}: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
