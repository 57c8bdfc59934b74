"""Command-line front end.

Exit codes: 0 success or member, 1 well-formed non-member, 2 invalid input,
3 unsupported parameters, 4 internal inconsistency.
"""

import argparse
import json
import sys
from typing import List, Optional

from . import cf
from .errors import InvalidInput, SL2CFError
from .matrix import Mat2, Params
from .membership import Mode, check, complete_matrix
from .oracle import EnumSpec, density_scan, oracle_check

EXIT_OK, EXIT_NONMEMBER, EXIT_INVALID, EXIT_UNSUPPORTED, EXIT_INCONSISTENT = range(5)

EPILOG = ("Negative values must follow a '--' separator or be attached to their flag, "
          "e.g. 'sl2cf cf -- -2457/887' or '-M \"10105 2457 -3648 -887\"'.")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def _emit(args, text: str, payload: dict) -> None:
    print(json.dumps(payload) if args.json else text)


def _mode(args) -> Mode:
    if args.monoid:
        return Mode.MONOID
    if args.group:
        return Mode.GROUP
    if args.u == 2 and args.v == 2:
        return Mode.GROUP
    raise InvalidInput("pass --monoid or --group (only u = v = 2 defaults to --group)")


def _cmd_cf(args):
    seq = cf.short_cf(cf.parse_rational(args.x))
    _emit(args, str(seq), {"result": str(seq)})
    return EXIT_OK


def _seq_cmd(fn):
    def run(args):
        out = fn(cf.PQSeq.parse(args.seq))
        _emit(args, str(out), {"result": str(out)})
        return EXIT_OK
    return run


def _cmd_eval(args):
    val = cf.evaluate(cf.parse_seq(args.seq))
    _emit(args, str(val), {"result": str(val)})
    return EXIT_OK


def _verdict(args, text: str):
    return check(Mat2.parse(text), Params(args.u, args.v), _mode(args))


def _cmd_check(args):
    if not args.batch:
        if args.matrix is None:
            raise InvalidInput("check needs -M or --batch")
        vd = _verdict(args, args.matrix)
        _emit(args, str(vd), vd.to_json())
        return EXIT_OK if vd.member else EXIT_NONMEMBER
    worst = EXIT_OK
    for line in sys.stdin:
        if not line.strip():
            continue
        try:
            vd = _verdict(args, line)
        except SL2CFError as exc:
            _emit(args, f"error: {exc}", {"error": str(exc), "exit_code": exc.exit_code})
            worst = max(worst, exc.exit_code)
            continue
        _emit(args, str(vd), vd.to_json())
        if not vd.member:
            worst = max(worst, EXIT_NONMEMBER)
    return worst


def _cmd_factor(args):
    vd = _verdict(args, args.matrix)
    if not vd.member:
        print(f"non-member: {vd.diagnostic.value}", file=sys.stderr)
        if args.json:
            print(json.dumps(vd.to_json()))
        return EXIT_NONMEMBER
    _emit(args, str(vd.word), {"word": str(vd.word)})
    return EXIT_OK


def _cmd_complete(args):
    mode = Mode.MONOID if args.monoid_ambient else Mode.GROUP
    m = complete_matrix(args.b, args.d, Params(args.u, args.v), mode)
    if m is None:
        print("no completion exists", file=sys.stderr)
        if args.json:
            print(json.dumps(None))
        return EXIT_NONMEMBER
    _emit(args, str(m), m.to_json())
    return EXIT_OK


def _cmd_oracle(args):
    spec = EnumSpec(Params(args.u, args.v), args.blocks, args.max_exp,
                    Mode.MONOID if args.monoid else Mode.GROUP)
    w = oracle_check(Mat2.parse(args.matrix), spec, cap=args.cap)
    _emit(args, "none" if w is None else str(w), {"word": None if w is None else str(w)})
    return EXIT_OK if w is not None else EXIT_NONMEMBER


def _cmd_density(args):
    rep = density_scan(args.k, args.bound)
    _emit(args, f"k={rep.k} entry_bound={rep.entry_bound} ambient={rep.ambient} "
                f"members={rep.members}", rep.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    params = _Parser(add_help=False)
    params.add_argument("-u", type=int, required=True)
    params.add_argument("-v", type=int, required=True)

    modes = _Parser(add_help=False)
    g = modes.add_mutually_exclusive_group()
    g.add_argument("--monoid", action="store_true")
    g.add_argument("--group", action="store_true")

    parser = _Parser(prog="sl2cf", description=__doc__.splitlines()[0], epilog=EPILOG)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cf", parents=[common], help="short continued fraction of p/q", epilog=EPILOG)
    p.add_argument("x", help="rational p/q")
    p.set_defaults(func=_cmd_cf)

    for name, fn, what in (("f", cf.transform_f, "A1 -> A2 transform"),
                           ("g", cf.transform_g, "A2 -> A1 transform")):
        p = sub.add_parser(name, parents=[common], help=what, epilog=EPILOG)
        p.add_argument("seq", help="sequence like [-3,4,2,1,6,1,8]")
        p.set_defaults(func=_seq_cmd(fn))

    p = sub.add_parser("eval", parents=[common], help="value of a sequence", epilog=EPILOG)
    p.add_argument("seq")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("check", parents=[common, params, modes], help="membership verdict")
    p.add_argument("-M", "--matrix", help='"a b c d" or JSON {"a": ...}')
    p.add_argument("--batch", action="store_true", help="read one matrix per line from stdin")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("factor", parents=[common, params, modes], help="generator word of a member")
    p.add_argument("-M", "--matrix", required=True)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("complete", parents=[common, params], help="complete a column (b, d)")
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--monoid-ambient", action="store_true",
                   help="require nonnegative entries")
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("oracle", parents=[common, params, modes], help="brute-force word search")
    p.add_argument("-M", "--matrix", required=True)
    p.add_argument("--blocks", type=int, default=4)
    p.add_argument("--max-exp", type=int, default=3)
    p.add_argument("--cap", type=int, default=None,
                   help="maximum search size (default from $SL2CF_ORACLE_CAP)")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("density", parents=[common], help="member count among completed columns")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=_cmd_density)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "u", None) is not None:
            Params(args.u, args.v)
        return args.func(args)
    except SL2CFError as exc:
        print(f"sl2cf: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"sl2cf: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
