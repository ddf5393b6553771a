"""Batch driver: verification suites, operator evaluation, mutation replay.

Exit status: 0 when every selected check passes, 1 on check failures,
2 on malformed input.  JSON output is canonical (sorted keys, canonical
term order) so identical inputs produce identical bytes, up to the timing
fields of verification reports.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import config
from .cluster import Seed, apply_ops, loop30_check, parse_mutation_script
from .curves import CurveSpec, curve_operator
from .daha import idempotent, parse_word, word_eval
from .errors import SkeindahaError
from .pi1 import parse_twist_word
from .reports import dumps_report
from .suites import SUITE_NAMES, run_suites


def _write(text: str, out: str = None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_verify(args) -> int:
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    reports = run_suites(names)
    if args.json:
        _write(dumps_report(reports), args.out)
    else:
        text = "\n".join(r.render_table() for r in reports)
        total = sum(r.total for r in reports)
        passed = sum(r.passed for r in reports)
        _write(f"{text}\ntotal: {passed}/{total} passed\n", args.out)
    return 0 if all(r.all_passed for r in reports) else 1


def _cmd_eval_word(args) -> int:
    gp = parse_word(args.word)
    op = word_eval(gp)
    if args.e_sided:
        op = op * idempotent()
    if args.json:
        _write(json.dumps(op.to_json(), sort_keys=True, indent=2) + "\n", args.out)
    else:
        _write(str(op) + "\n", args.out)
    return 0


def _cmd_eval_curve(args) -> int:
    twists = parse_twist_word(args.twists) if args.twists else ()
    op = curve_operator(CurveSpec(args.base, twists))
    if args.form == "json":
        text = json.dumps(op.to_json(), sort_keys=True, indent=2) + "\n"
    elif args.form == "latex":
        text = op.to_latex() + "\n"
    else:
        text = str(op) + "\n"
    _write(text, args.out)
    return 0


def _cmd_mutate(args) -> int:
    if args.seed == "initial":
        seed = Seed.initial()
    else:
        with open(args.seed, encoding="utf-8") as fh:
            seed = Seed.from_json(json.load(fh))
    ops = parse_mutation_script(args.script)
    seed = apply_ops(seed, ops)
    _write(json.dumps(seed.to_json(), sort_keys=True, indent=2) + "\n", args.out)
    return 0


def _cmd_loop30(args) -> int:
    matches, distinct, returns = loop30_check()
    payload = {
        "sequence_matches_printed": matches,
        "distinct_proper_prefixes": distinct,
        "returns_to_initial": returns,
    }
    if args.json:
        _write(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    else:
        _write(
            f"sequence matches printed loop: {matches}\n"
            f"distinct proper prefixes: {distinct}/29\n"
            f"returns to initial seed: {returns}\n",
            args.out,
        )
    return 0 if matches and distinct == 29 and returns else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeindaha",
        description="exact verification of the curve-operator algebra and "
                    "its cluster shadow",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",), default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("eval-word", help="evaluate a generator word")
    p.add_argument("--word", required=True)
    p.add_argument("--e-sided", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=_cmd_eval_word)

    p = sub.add_parser("eval-curve", help="operator image of a twisted curve")
    p.add_argument("--base", required=True)
    p.add_argument("--twists", default="")
    p.add_argument("--form", choices=("normal", "json", "latex"), default="normal")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=_cmd_eval_curve)

    p = sub.add_parser("mutate", help="replay a mutation script on a seed")
    p.add_argument("--script", required=True)
    p.add_argument("--seed", default="initial", metavar="FILE|initial")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=_cmd_mutate)

    p = sub.add_parser("loop30", help="run the 30-step mutation loop check")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=_cmd_loop30)
    return parser


def main(argv=None) -> int:
    config.reload_from_env()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SkeindahaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
