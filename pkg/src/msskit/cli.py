"""Command-line interface.

One executable, ``msskit``, with verbs::

    enumerate --period P [--method structured|bruteforce] [--format text|json|csv]
    check SEQ [--format json|text]
    compose A B [--format json|text] [--expand true|false]
    factor P [--tree] [--format json|text] [--expand true|false]
    count --period P [--kind single|repeated] [--verify]
    count --kind sblocks --m M --qcap Q [--verify]
    locate SEQ [--tol T]
    verify-order --pmax N [--format text|json]
    selftest [--pmax N] [--suite NAME ...]

Exit codes: 0 success (a negative check verdict is still a success),
1 domain error (bad sequence, non-MSS input where one is required, failed
verification), 2 usage error.  Output is deterministic: identical argv
yields byte-identical output.  ``MSSKIT_THREADS`` caps enumeration
workers (0 = one per CPU; unset = sequential).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .composition import compose, factor_once, factor_tree, is_primary
from .counting import CountReport, blocks_report, cores_report, single_group_report
from .errors import MssKitError
from .generators import enumerate_mss_bruteforce, enumerate_mss_structured
from .locator import locate, order_report
from .selftest import run_selftest
from .sequences import compress_exponents, parse_sequence
from .structure import block_decompose, is_mss_structured

__all__ = ["main"]


def _workers() -> int:
    raw = os.environ.get("MSSKIT_THREADS")
    if raw is None or raw.strip() == "":
        return 1
    count = int(raw)  # ValueError surfaces as a domain error
    if count < 0:
        raise ValueError("MSSKIT_THREADS must be >= 0")
    if count == 0:
        return os.cpu_count() or 1
    return count


def _str2bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("true", "1", "yes"):
        return True
    if low in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload) + "\n")


def _render(seq: str, expand: bool) -> str:
    return seq if expand else compress_exponents(seq)


def _block_form_text(word: str) -> str:
    form = block_decompose(word)
    runs = ";".join(f"{n},{s}" for n, s in form.runs)
    return f"q={form.q}:{runs}"


def _cmd_enumerate(args) -> int:
    if args.method == "structured":
        enum = enumerate_mss_structured(args.period)
    else:
        enum = enumerate_mss_bruteforce(args.period, workers=_workers())
    rows = []
    for index, s in enumerate(enum):
        rows.append(
            {
                "index": index,
                "sequence": _render(s.symbols, args.expand),
                "q": block_decompose(s).q,
                "block_form": _block_form_text(s.symbols),
                "is_primary": is_primary(s),
            }
        )
    if args.format == "json":
        _emit_json(
            {
                "period": args.period,
                "method": args.method,
                "count": len(rows),
                "sequences": rows,
            }
        )
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["index", "sequence", "q", "block_form", "is_primary"])
        for row in rows:
            writer.writerow(
                [row["index"], row["sequence"], row["q"], row["block_form"],
                 str(row["is_primary"]).lower()]
            )
        sys.stdout.write(buf.getvalue())
    else:
        for row in rows:
            sys.stdout.write(f"{row['index']}\t{row['sequence']}\n")
    return 0


def _cmd_check(args) -> int:
    seq = parse_sequence(args.sequence)
    verdict = is_mss_structured(seq)
    payload = {
        "sequence": seq.symbols,
        "is_mss": verdict.is_mss,
        "failing_shift": verdict.failing_shift,
        "failing_rule": verdict.failing_rule,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        state = "MSS" if verdict.is_mss else (
            f"not MSS (shift {verdict.failing_shift}, rule {verdict.failing_rule})"
        )
        sys.stdout.write(f"{seq.symbols}: {state}\n")
    return 0


def _cmd_compose(args) -> int:
    a = parse_sequence(args.first)
    b = parse_sequence(args.second)
    result = compose(a, b)
    payload = {
        "sequence": _render(result.symbols, args.expand),
        "primary": False,
        "factors": [_render(a.symbols, args.expand), _render(b.symbols, args.expand)],
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        sys.stdout.write(payload["sequence"] + "\n")
    return 0


def _render_tree(tree, expand: bool):
    node = _render(tree.node.symbols, expand)
    if tree.children is None:
        return {"sequence": node, "children": None}
    return {
        "sequence": node,
        "children": [_render_tree(c, expand) for c in tree.children],
    }


def _cmd_factor(args) -> int:
    seq = parse_sequence(args.sequence)
    tree = None
    if args.tree:
        tree = factor_tree(seq)
        payload = {
            "sequence": _render(seq.symbols, args.expand),
            "primary": tree.children is None,
            "tree": _render_tree(tree, args.expand),
        }
    else:
        split = factor_once(seq)
        payload = {
            "sequence": _render(seq.symbols, args.expand),
            "primary": split is None,
            "factors": None
            if split is None
            else [_render(x.symbols, args.expand) for x in split],
        }
    if args.format == "json":
        _emit_json(payload)
    else:
        if payload["primary"]:
            sys.stdout.write(f"{payload['sequence']}: primary\n")
        elif args.tree:
            leaves = " * ".join(_render(x.symbols, args.expand) for x in tree.leaves())
            sys.stdout.write(f"{payload['sequence']} = {leaves}\n")
        else:
            sys.stdout.write(
                f"{payload['sequence']} = {payload['factors'][0]} * {payload['factors'][1]}\n"
            )
    return 0


def _report_payload(report: CountReport) -> dict:
    return {
        "p": report.p,
        "kind": report.kind,
        "formula_value": report.formula_value,
        "enumerated_value": report.enumerated_value,
        "match": report.matches,
    }


def _cmd_count(args) -> int:
    if args.kind == "sblocks":
        if args.m is None or args.qcap is None:
            raise UsageError("--kind sblocks requires --m and --qcap")
        report = blocks_report(args.m, args.qcap, verify=args.verify)
    else:
        if args.period is None:
            raise UsageError(f"--kind {args.kind} requires --period")
        if args.kind == "single":
            report = single_group_report(args.period, verify=args.verify)
        else:
            report = cores_report(args.period, verify=args.verify)
    _emit_json(_report_payload(report))
    return 0 if report.matches else 1


def _cmd_locate(args) -> int:
    found = locate(args.sequence if args.sequence == "C" else parse_sequence(args.sequence),
                   tol=args.tol)
    _emit_json(
        {
            "sequence": found.sequence,
            "r_star": float(found.r_star),
            "residual": found.residual,
            "iterations": found.iterations,
        }
    )
    return 0


def _cmd_verify_order(args) -> int:
    rows = order_report(args.pmax)
    ok = all(a.r_star < b.r_star for a, b in zip(rows, rows[1:]))
    if args.format == "json":
        _emit_json(
            {
                "pmax": args.pmax,
                "count": len(rows),
                "ok": ok,
                "rows": [
                    {
                        "sequence": r.sequence,
                        "r_star": float(r.r_star),
                        "residual": r.residual,
                    }
                    for r in rows
                ],
            }
        )
    else:
        for i, r in enumerate(rows):
            sys.stdout.write(f"{i}\t{r.sequence}\t{float(r.r_star):.15f}\t{r.residual:.3e}\n")
        sys.stdout.write(f"order {'OK' if ok else 'VIOLATION'} over {len(rows)} sequences\n")
    return 0 if ok else 1


def _cmd_selftest(args) -> int:
    results = run_selftest(pmax=args.pmax, suites=args.suite or None, workers=_workers())
    failed = 0
    for res in results:
        mark = "PASS" if res.ok else "FAIL"
        sys.stdout.write(f"[{mark}] {res.suite}: {res.name} ({res.detail})\n")
        if not res.ok:
            failed += 1
    sys.stdout.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 0 if failed == 0 else 1


class UsageError(Exception):
    """Raised for option combinations argparse cannot express."""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msskit",
        description="Symbolic dynamics of superstable orbits: enumeration, "
        "composition, counting and parameter location.",
    )
    parser.add_argument("--version", action="version", version=f"msskit {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p_enum = sub.add_parser("enumerate", help="list all MSS-sequences of a period")
    p_enum.add_argument("--period", type=int, required=True)
    p_enum.add_argument("--method", choices=["structured", "bruteforce"], default="structured")
    p_enum.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_enum.add_argument("--expand", type=_str2bool, default=True)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_check = sub.add_parser("check", help="structured shift-maximality verdict")
    p_check.add_argument("sequence")
    p_check.add_argument("--format", choices=["json", "text"], default="json")
    p_check.set_defaults(func=_cmd_check)

    p_compose = sub.add_parser("compose", help="compose two sequences")
    p_compose.add_argument("first")
    p_compose.add_argument("second")
    p_compose.add_argument("--format", choices=["json", "text"], default="json")
    p_compose.add_argument("--expand", type=_str2bool, default=True)
    p_compose.set_defaults(func=_cmd_compose)

    p_factor = sub.add_parser("factor", help="factor a sequence, optionally recursively")
    p_factor.add_argument("sequence")
    p_factor.add_argument("--tree", action="store_true")
    p_factor.add_argument("--format", choices=["json", "text"], default="json")
    p_factor.add_argument("--expand", type=_str2bool, default=True)
    p_factor.set_defaults(func=_cmd_factor)

    p_count = sub.add_parser("count", help="closed-form counts with optional cross-check")
    p_count.add_argument("--period", type=int)
    p_count.add_argument("--kind", choices=["single", "repeated", "sblocks"], default="single")
    p_count.add_argument("--m", type=int)
    p_count.add_argument("--qcap", type=int)
    p_count.add_argument("--verify", action="store_true")
    p_count.set_defaults(func=_cmd_count)

    p_locate = sub.add_parser("locate", help="superstable parameter of a sequence")
    p_locate.add_argument("sequence")
    p_locate.add_argument("--tol", type=float, default=1e-13)
    p_locate.set_defaults(func=_cmd_locate)

    p_order = sub.add_parser("verify-order", help="parameter order vs symbolic order")
    p_order.add_argument("--pmax", type=int, required=True)
    p_order.add_argument("--format", choices=["text", "json"], default="text")
    p_order.set_defaults(func=_cmd_verify_order)

    p_self = sub.add_parser("selftest", help="run built-in verification suites")
    p_self.add_argument("--pmax", type=int, default=14)
    p_self.add_argument("--suite", action="append",
                        choices=["oracle", "construction", "counting", "roundtrip"])
    p_self.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as err:
        parser.error(str(err))  # exits 2
    except (MssKitError, ValueError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
