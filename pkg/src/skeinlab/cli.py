"""Command line front end.

Commands: eval, coproduct, jaeger, iterate, specialize, verify. Inputs
are diagram files in the line grammar of skeinlab.textio ("-" reads from
stdin). Exit codes: 0 success, 1 input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import coproduct, corpus, diagrams, engine, jaeger, scalars, textio
from .diagrams import ANNULUS, Word

IDENTITIES = ("jaeger", "coassoc", "counit", "mult", "framing-remark")


class CliError(ValueError):
    pass


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as err:
        raise CliError(f"cannot read {path}: {err}") from None


def _load_word(path: str, framing_flag) -> Word:
    text = _read_input(path)
    word = textio.parse_morse(text)
    if word.surface == ANNULUS:
        declared = textio.framing_declared(text)
        if framing_flag is None and not declared:
            raise CliError(
                "annulus input carries no framing header; pass --framing "
                "radial or --framing blackboard explicitly")
        if framing_flag is not None:
            word = Word(word.surface, framing_flag, word.profile, word.events)
            diagrams.validate(word)
    elif framing_flag == diagrams.RADIAL:
        raise CliError("radial framing is only legal on annulus inputs")
    return word


def _emit(value, fmt: str) -> None:
    if isinstance(value, coproduct.CoproductElement):
        if fmt == "json":
            print(json.dumps(value.to_json(), indent=2, sort_keys=True))
        else:
            print(value.pretty())
    else:
        print(textio.render(value, fmt))


def _threads(args) -> int:
    if getattr(args, "deterministic", False):
        return 1
    raw = os.environ.get("SKEINLAB_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        raise CliError(f"SKEINLAB_THREADS must be an integer, got {raw!r}") from None
    if n == 0:
        n = os.cpu_count() or 1
    return max(1, n)


def _parse_t_values(raw: str) -> list:
    try:
        return [int(p) for p in raw.split(",") if p != ""]
    except ValueError:
        raise CliError(f"--t expects integers separated by commas, got {raw!r}") from None


def cmd_eval(args) -> int:
    word = _load_word(args.input, args.framing)
    ana = diagrams.analyze(word)
    colours = sorted({c.colour for c in ana.components})
    if colours and colours != [colours[0]]:
        value = engine.eval_multi_colour(word, max(colours))
    else:
        value = engine.eval_one_colour(word)
    if args.t is not None:
        value = scalars.specialize(value, _parse_t_values(args.t))
    _emit(value, args.format)
    return 0


def cmd_coproduct(args) -> int:
    word = _load_word(args.input, args.framing)
    _emit(coproduct.coproduct_diagram(word), args.format)
    return 0


def cmd_jaeger(args) -> int:
    word = _load_word(args.input, args.framing)
    sink = (lambda line: print(line, file=sys.stderr)) if args.trace else None
    _emit(jaeger.state_sum(word, 2, trace=sink), args.format)
    return 0


def cmd_iterate(args) -> int:
    word = _load_word(args.input, args.framing)
    element = coproduct.coproduct_iterated(word, args.slots)
    if word.surface == ANNULUS:
        _emit(element, args.format)
    else:
        _emit(element.evaluate(), args.format)
    return 0


def cmd_specialize(args) -> int:
    word = _load_word(args.input, args.framing)
    value = engine.eval_one_colour(word)
    _emit(scalars.specialize(value, _parse_t_values(args.t)), args.format)
    return 0


def cmd_verify(args) -> int:
    if args.corpus == "builtin":
        entries = corpus.load_builtin()
    else:
        entries = corpus.load_path(args.corpus)
    idents = IDENTITIES if args.identity == "all" else (args.identity,)
    threads = _threads(args)
    reports = []
    if threads > 1 and len(idents) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda i: coproduct.verify(i, entries), idents))
    else:
        reports = [coproduct.verify(i, entries) for i in idents]
    failures = 0
    for report in reports:
        print(report.text())
        failures += report.failures
    print(f"{'ok' if not failures else 'FAILED'}: "
          f"{sum(len(r.lines) for r in reports)} checks, {failures} failures")
    return 0 if failures == 0 else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeinlab",
        description="Exact framed skein evaluation, composition state sums "
                    "and the two-colour splitting coproduct.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="diagram file, or - for stdin")
        p.add_argument("--format", choices=("pretty", "json"), default="pretty")
        p.add_argument("--framing", choices=(diagrams.RADIAL, diagrams.BLACKBOARD),
                       default=None)
        p.add_argument("--deterministic", action="store_true",
                       help="single-threaded, byte-stable output")

    p = sub.add_parser("eval", help="evaluate a closed plane diagram")
    common(p)
    p.add_argument("--t", default=None, metavar="N[,N...]",
                   help="specialize the parameters at integers")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("coproduct", help="two-colour splitting of a diagram")
    common(p)
    p.set_defaults(func=cmd_coproduct)

    p = sub.add_parser("jaeger", help="two-label composition state sum")
    common(p)
    p.add_argument("--trace", action="store_true",
                   help="one audit line per labelling on stderr")
    p.set_defaults(func=cmd_jaeger)

    p = sub.add_parser("iterate", help="iterated coproduct")
    common(p)
    p.add_argument("--slots", type=int, default=3)
    p.set_defaults(func=cmd_iterate)

    p = sub.add_parser("specialize", help="evaluate and set q^t = q^N")
    common(p)
    p.add_argument("--t", required=True, metavar="N[,N...]")
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("verify", help="run identity suites over a corpus")
    p.add_argument("identity", choices=IDENTITIES + ("all",))
    p.add_argument("--corpus", default="builtin",
                   help="builtin, a .mw file, or a directory of them")
    p.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p.add_argument("--deterministic", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, textio.DiagnosticError, diagrams.DiagramError,
            engine.EvalError, engine.BudgetError, jaeger.StateSumError,
            coproduct.CoproductError, scalars.ArityError,
            scalars.SpecializeError, scalars.CounitUndefinedError) as err:
        print(f"skeinlab: error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
