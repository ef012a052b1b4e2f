"""Command line entry point: ``twistlinks <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .blocks import condense, conjecture_check, general_blocks, is_condensed
from .braidword import BraidWord, parse
from .census import run_census
from .errors import TwistLinksError
from .jones3 import split_vstar, vstar_positive
from .oracle import DEFAULT_CROSSING_LIMIT, conway, homfly_skein, kauffman_jones, specialize
from .tlink import (
    braid_index,
    canonical_form,
    closed_form_jones,
    dual,
    normalize,
    parse_tlink,
    representative_forms,
    tier_reduce,
    to_braid,
    torus_detect,
)
from .verify import SUITES, check_conjecture, run_verify


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_object(text: str):
    text = text.strip()
    if text.startswith("T"):
        return parse_tlink(text)
    return parse(text)


def _emit(obj, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, indent=1, sort_keys=False))
    else:
        for k, v in obj.items():
            print(f"{k}: {v}")


def cmd_poly(args) -> int:
    obj = _read_object(args.input)
    limit = args.max_crossings
    out = {"input": str(obj)}
    if not isinstance(obj, BraidWord):
        L = normalize(obj)
        b = braid_index(L)[0]
        if args.invariant == "jones" and b <= 3:
            out["method"] = "closed form"
            out["jones"] = str(closed_form_jones(tier_reduce(L)))
            _emit(out, args.json)
            return 0
        obj = to_braid(L)
    if args.invariant == "jones":
        out["jones"] = str(kauffman_jones(obj, limit))
    elif args.invariant == "homfly":
        out["homfly"] = str(homfly_skein(obj, limit))
    elif args.invariant == "conway":
        out["conway"] = str(conway(obj, limit))
    else:
        out["alexander"] = str(specialize(conway(obj, limit), "alexander"))
    out["method"] = "oracle"
    _emit(out, args.json)
    return 0


def cmd_normalize(args) -> int:
    L = normalize(parse_tlink(args.tlink))
    b, i0, j0 = braid_index(L)
    _emit({"normalized": str(L), "dual": str(dual(L)), "tiers": L.tiers,
           "braid_index": b, "i0": i0, "j0": j0, "braid": str(to_braid(L))}, args.json)
    return 0


def cmd_classify(args) -> int:
    obj = _read_object(args.input)
    c = tier_reduce(obj) if not isinstance(obj, BraidWord) else canonical_form(obj)
    torus = torus_detect(c)
    out = {"input": str(obj), "class": str(c), "torus": None if torus is None else f"T({torus[0]},{torus[1]})"}
    if hasattr(c, "z"):
        out["tlink_forms"] = [str(L) for L in representative_forms(c)]
    out["jones"] = str(closed_form_jones(c))
    _emit(out, args.json)
    return 0


def cmd_census(args) -> int:
    n = run_census(args.x, args.y, args.z, args.out, args.format, args.workers)
    print(f"wrote {n} rows to {args.out}")
    return 0


def cmd_verify(args) -> int:
    report = run_verify(args.suite, max_crossings=args.max_crossings, bounds=tuple(args.bounds),
                        range_=args.range, max_writhe=args.max_writhe, workers=args.workers)
    text = json.dumps(report, indent=1) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    for suite, checks in report["suites"].items():
        for chk in checks:
            status = "PASS" if chk["passed"] else "FAIL"
            print(f"[{status}] {suite}: {chk['name']} ({chk['count']} cases, {chk['failed']} failed)")
    return report["exit_code"]


def cmd_blocks(args) -> int:
    b = parse(args.braid)
    a, gamma, steps = condense(b)
    exps = [e for _, e in gamma.letters]
    out = {"input": str(b), "full_twists": 3 * a, "condensed": str(gamma),
           "steps": [f"{s.case}: {list(s.before)} -> {list(s.after)}" for s in steps]}
    if len(exps) >= 2 and len(exps) % 2 == 0:
        vs = vstar_positive(exps)
        out["vstar"] = str(vs)
        out["vstarstar"] = str(split_vstar(vs, sum(exps)))
        if len(exps) >= 4 and exps[0] >= sum(exps[1:]):
            bd = general_blocks(exps)
            out.update({"B1": str(bd.B1), "gap": str(bd.gap()), "gap_multiplier": bd.gap_multiplier, "B2": str(bd.B2)})
        if len(exps) >= 4 and is_condensed(gamma):
            rep = conjecture_check(gamma)
            out["conjecture_claims"] = rep.claims
    _emit(out, args.json)
    return 0


def cmd_conjecture_scan(args) -> int:
    res = check_conjecture(args.max_writhe)
    text = json.dumps(res, indent=1) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    print(f"{res['count']} condensed words, {res['failed']} counterexamples")
    for f in res["failures"]:
        print(json.dumps(f, sort_keys=True))
    return 0 if res["passed"] else 3


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="twistlinks", description="Jones polynomials and classification of T-links of braid index three.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("poly", help="invariant of a braid word or T-link")
    sp.add_argument("input", help='e.g. "B3: s1^3 s2" or "T((2,4),(3,4))"')
    sp.add_argument("--invariant", choices=["jones", "homfly", "conway", "alexander"], default="jones")
    sp.add_argument("--max-crossings", type=int, default=DEFAULT_CROSSING_LIMIT)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("normalize", help="tier-normal form, dual and braid index of a T-link")
    sp.add_argument("tlink")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("classify", help="canonical beta(x,y,z) class")
    sp.add_argument("input")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("census", help="enumerate canonical classes")
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--y", type=int, required=True)
    sp.add_argument("--z", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    sp.add_argument("--max-crossings", type=int, default=14)
    sp.add_argument("--bounds", type=int, nargs=3, default=[8, 8, 12], metavar=("X", "Y", "Z"))
    sp.add_argument("--range", type=int, default=15)
    sp.add_argument("--max-writhe", type=int, default=20)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("blocks", help="condense a positive 3-braid and show its V* blocks")
    sp.add_argument("braid")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_blocks)

    sp = sub.add_parser("conjecture-scan", help="check the V** claims on condensed words")
    sp.add_argument("--max-writhe", type=int, default=20)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_conjecture_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TwistLinksError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
