"""Command-line surface.

Subcommands: dim, blocks, eval, cylinder, verify, cover, boxcount,
enumerate, convert.  Families are given in the grammar of
`families.parse_family`, e.g. ``Su(s=5,u=2)`` or ``Blocks(s=3,B=[0 2;1])``.

Exit codes: 0 success, 1 usage or grammar error, 2 verification failure.
JSON output is deterministic: fixed key order, floats printed with 12
significant digits, rationals as "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import boxcount as bc
from . import cylinders as cyl
from . import dimension as dim
from .errors import CantorkitError, FamilyParseError
from .families import (
    DEFAULT_CAP,
    blocks_of_family,
    enumerate_addresses,
    eval_family_point,
    expand_address,
    parse_family,
)
from .radix import DigitString, digits_from_rational, eval_negasadic, eval_sadic


def _jfloat(x: float) -> str:
    return f"{x:.12g}"


def _jdump(obj) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, Fraction):
        return json.dumps(f"{obj.numerator}/{obj.denominator}")
    if isinstance(obj, float):
        return _jfloat(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        inner = ",".join(f"{json.dumps(str(k))}:{_jdump(v)}" for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_jdump(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj)}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(t) for t in text.replace(",", " ").split())


def _scales(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _dim_payload(family_text: str) -> dict:
    fam = parse_family(family_text)
    if fam.kind == "Cantor":
        est = dim.cantor_series_dim_estimate(fam.basis, fam.level_sets, n_max=100_000)
        result = est.to_dimension_result()
    else:
        result = dim.family_dimension(fam)
    payload = {
        "family": fam.label(),
        "alpha": result.alpha,
        "method": result.method,
        "residual": result.residual,
        "bracket": [result.bracket[0], result.bracket[1]],
        "iterations": result.iterations,
        "degenerate": result.degenerate,
    }
    if result.cross_check is not None:
        payload["cross_check"] = result.cross_check
    if result.note is not None:
        payload["note"] = result.note
    return payload


def _cmd_dim(args) -> int:
    payload = _dim_payload(args.family)
    if args.format == "text":
        _emit(
            "\n".join(f"{k}: {_jdump(v) if not isinstance(v, str) else v}" for k, v in payload.items()),
            args.out,
        )
    elif args.format == "csv":
        _emit(
            "family,alpha,method,residual,degenerate\n"
            f"{payload['family']},{_jfloat(payload['alpha'])},{payload['method']},"
            f"{_jfloat(payload['residual'])},{payload['degenerate']}",
            args.out,
        )
    else:
        _emit(_jdump(payload), args.out)
    return 0


def _cmd_blocks(args) -> int:
    fam = parse_family(args.family)
    bs = blocks_of_family(fam)
    payload = {
        "family": fam.label(),
        "count": bs.size,
        "degenerate": bs.degenerate,
        "analytic": bs.analytic,
        "histogram": {str(k): n for k, n in bs.histogram},
        "blocks": [" ".join(map(str, b)) for b in bs.blocks] if bs.blocks else None,
    }
    _emit(_jdump(payload), args.out)
    return 0


def _cmd_eval(args) -> int:
    fam = parse_family(args.family)
    alphas = _parse_selectors(fam, args.alphas)
    tail = _parse_selectors(fam, args.tail) if args.tail else ()
    value = eval_family_point(fam, alphas, tail)
    payload = {
        "family": fam.label(),
        "alphas": list(alphas),
        "tail": list(tail) if tail else None,
        "value": value,
        "value_float": float(value),
    }
    if fam.kind != "Cantor":
        payload["digits"] = " ".join(map(str, expand_address(fam, alphas).digits))
    _emit(_jdump(payload), args.out)
    return 0


def _parse_selectors(fam, text):
    if fam.kind == "MD":
        # pairs m:e separated by commas, e.g. "3:2,5:1"
        out = []
        for part in text.split(","):
            m, _, e = part.partition(":")
            out.append((int(m), int(e)))
        return tuple(out)
    return _ints(text)


def _cmd_cylinder(args) -> int:
    fam = parse_family(args.family)
    addr = _parse_selectors(fam, args.addr) if args.addr else ()
    report = cyl.cylinder_report(fam, addr, child=args.child)
    payload = {
        "family": fam.label(),
        "address": list(report.address),
        "interval": {"lo": report.interval.lo, "hi": report.interval.hi},
        "diameter": report.diameter,
        "child_ratio": report.child_ratio,
        "orientation": report.orientation,
    }
    _emit(_jdump(payload), args.out)
    return 0


def _cmd_verify(args) -> int:
    fam = parse_family(args.family)
    report = cyl.verify_family(
        fam, depth=args.depth, oracle_depth=args.depth + 6, cap=args.cap
    )
    if args.format == "json":
        payload = {
            "family": report.family,
            "passed": report.passed,
            "properties": [
                {
                    "name": r.name,
                    "checked": r.checked,
                    "passed": r.passed,
                    "failures": list(r.failures),
                }
                for r in report.results
            ],
        }
        _emit(_jdump(payload), args.out)
    else:
        lines = [f"verify {report.family} (depth {args.depth}, oracle depth {args.depth + 6})"]
        for r in report.results:
            mark = "pass" if r.passed else "FAIL"
            lines.append(f"[{mark}] {r.name:<20} {r.checked} checks")
            for f in r.failures:
                lines.append(f"       {f}")
        lines.append("RESULT: " + ("all properties hold" if report.passed else "FAILURES FOUND"))
        _emit("\n".join(lines), args.out)
    return 0 if report.passed else 2


def _cmd_cover(args) -> int:
    fam = parse_family(args.family)
    rows = ["depth,exact,float"]
    for d in range(args.depth + 1):
        total = cyl.covering_sum(fam, d, cap=args.cap)
        rows.append(f"{d},{total.numerator}/{total.denominator},{_jfloat(float(total))}")
    _emit("\n".join(rows), args.out)
    return 0


def _cmd_boxcount(args) -> int:
    fam = parse_family(args.family)
    n_lo, n_hi = args.scales
    fit, points = bc.box_dimension(fam, n_lo, n_hi, cap=args.cap)
    solver = dim.family_dimension(fam)
    rows = ["eps,count"]
    rows.extend(f"{_jfloat(p.epsilon)},{p.count}" for p in points)
    rows.append(f"# slope,{_jfloat(fit.slope)}")
    rows.append(f"# r2,{_jfloat(fit.r2)}")
    rows.append(f"# solver_alpha,{_jfloat(solver.alpha)}")
    rows.append(f"# gap,{_jfloat(abs(fit.slope - solver.alpha))}")
    _emit("\n".join(rows), args.out)
    return 0


def _cmd_enumerate(args) -> int:
    fam = parse_family(args.family)
    addrs = enumerate_addresses(fam, args.depth, cap=args.cap)
    if args.format == "json":
        _emit(_jdump({"family": fam.label(), "depth": args.depth, "addresses": [list(a.base) for a in addrs]}), args.out)
    else:
        _emit("\n".join(" ".join(map(str, a.base)) for a in addrs) or "()", args.out)
    return 0


def _cmd_convert(args) -> int:
    digits = DigitString(args.base, _ints(args.digits))
    value = eval_negasadic(digits) if args.source == "negasadic" else eval_sadic(digits)
    negative = args.target == "negasadic"
    out_digits = digits_from_rational(value, args.base, args.length, negative=negative)
    round_trip = eval_negasadic(out_digits) if negative else eval_sadic(out_digits)
    s = args.base
    bound = Fraction(s, s - 1) / s**args.length
    payload = {
        "base": s,
        "source": args.source,
        "digits": list(digits.digits),
        "value": value,
        "target": args.target,
        "target_digits": list(out_digits.digits),
        "round_trip_value": round_trip,
        "error": abs(round_trip - value),
        "bound": bound,
        "within_bound": abs(round_trip - value) <= bound,
    }
    _emit(_jdump(payload), args.out)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="cantorkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, fmt="json"):
        p.add_argument("--depth", type=int, default=8)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.add_argument("--format", choices=("json", "csv", "text"), default=fmt)
        p.add_argument("--out", default=None)

    p = sub.add_parser("dim", help="dimension of a family")
    p.add_argument("family")
    common(p)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("blocks", help="digit-block language of a family")
    p.add_argument("family")
    common(p)
    p.set_defaults(func=_cmd_blocks)

    p = sub.add_parser("eval", help="exact value of a family point")
    p.add_argument("family")
    p.add_argument("--alphas", required=True, help="selector digits, e.g. 2,1 (MD: 3:2,5:1)")
    p.add_argument("--tail", default=None, help="periodic selector tail")
    common(p)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("cylinder", help="exact cylinder interval and metrics")
    p.add_argument("family")
    p.add_argument("--addr", default="", help="address digits, e.g. 1,2")
    p.add_argument("--child", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_cylinder)

    p = sub.add_parser("verify", help="run the cylinder property suite")
    p.add_argument("family")
    common(p, fmt="text")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("cover", help="covering-sum table")
    p.add_argument("family")
    common(p, fmt="csv")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("boxcount", help="box-counting fit vs the solver")
    p.add_argument("family")
    p.add_argument("--scales", type=_scales, default=(4, 10), help="n_lo:n_hi for eps = s^-n")
    common(p, fmt="csv")
    p.set_defaults(func=_cmd_boxcount)

    p = sub.add_parser("enumerate", help="admissible addresses at a depth")
    p.add_argument("family")
    common(p, fmt="text")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("convert", help="round-trip digits across representations")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--digits", required=True)
    p.add_argument("--source", choices=("sadic", "negasadic"), default="sadic")
    p.add_argument("--target", choices=("sadic", "negasadic"), required=True)
    p.add_argument("--length", type=int, default=8)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_convert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except FamilyParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except CantorkitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
