"""Command-line entry point: ``fibwords <subcommand> ...``.

Exit status: 0 on success, 1 when a requested verification fails, 2 on
usage or input errors.
"""

import argparse
import json
import sys

from . import identities, numeration, plot, sturmian, words
from .factorize import factorize

FAMILIES = {
    "fib": words.fibonacci_word,
    "central": words.central_word,
    "cofib": words.cofibonacci_word,
    "singular": words.singular_word,
    "christoffel-lower": words.christoffel_lower,
    "christoffel-upper": words.christoffel_upper,
}


class UsageError(Exception):
    pass


def _natural(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def _emit(args, inputs, result, text):
    if args.json:
        doc = {"command": args.command, "inputs": inputs, "result": result}
        print(json.dumps(doc, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_gen(args):
    if args.stream:
        if args.length is None:
            raise UsageError("gen --stream requires --length")
        w = words.fibonacci_stream().take(args.length)
        _emit(args, {"stream": "fib", "length": args.length}, w, w)
    else:
        if args.family is None or args.index is None:
            raise UsageError("gen requires --family and --index (or --stream --length)")
        w = FAMILIES[args.family](args.index)
        _emit(args, {"family": args.family, "index": args.index}, w, w)
    return 0


def cmd_zeck(args):
    if args.action in ("encode", "decode") and args.value is None:
        raise UsageError(f"zeck {args.action} requires a value")
    if args.action == "encode":
        n = _natural(args.value)
        rep = numeration.render_zeck(n)
        _emit(args, {"action": "encode", "n": n}, rep, rep)
    elif args.action == "decode":
        bits = words.check_word(args.value)
        n = numeration.from_zeckendorf(bits)
        _emit(args, {"action": "decode", "bits": bits}, n, str(n))
    else:
        if args.width is None:
            raise UsageError("zeck table requires --width")
        rows = numeration.zeck_enumerate(args.width)
        result = [[bits, numeration.from_zeckendorf(bits)] for bits in rows]
        text = "\n".join(f"{bits} {n}" for bits, n in result)
        _emit(args, {"action": "table", "width": args.width}, result, text)
    return 0


def _read_input(spec):
    """Return (word, is_prefix_of_f)."""
    if spec == "-":
        return words.check_word(sys.stdin.read()), False
    if spec.startswith("fib:"):
        length = spec[4:]
        if not length.isdigit() or int(length) < 1:
            raise ValueError(f"bad prefix length in {spec!r}")
        return words.fibonacci_stream().take(int(length)), True
    return words.check_word(spec), False


def format_factors(result):
    """Text rendering: one factor per line, incomplete factor in parentheses."""
    lines = []
    for item in result["factors"]:
        w = item["word"]
        lines.append(w if item["complete"] else f"({w})")
    return "\n".join(lines)


def cmd_factorize(args):
    w, is_prefix = _read_input(args.input)
    fact = factorize(args.method, w, order=args.order, prefix=is_prefix)
    result = fact.to_dict()
    inputs = {"method": args.method, "input": args.input}
    if args.method == "lyndon":
        inputs["order"] = args.order
    _emit(args, inputs, result, format_factors(result))
    return 0


def format_reports(reports):
    return "\n".join(
        f"{r['id']:<11} {r['status']:<5} length={r['checked_length']} "
        f"factors={r['factors_consumed']}"
        + (f" mismatch={r['mismatch']}" if r["mismatch"] is not None else "")
        for r in reports
    )


def cmd_verify(args):
    chosen = [x is not None for x in (args.identity, args.algorithm, args.deluca)]
    if sum(chosen) != 1:
        raise UsageError("verify needs exactly one of --identity, --algorithm, --deluca")
    if args.identity is not None:
        if args.identity.lower() == "all":
            reports = identities.verify_all(args.length)
        else:
            reports = [identities.verify_identity(args.identity, args.length)]
        result = [r.to_dict() for r in reports]
        inputs = {"identity": args.identity, "length": args.length}
        ok = all(r.passed for r in reports)
        _emit(args, inputs, result, format_reports(result))
    elif args.algorithm is not None:
        report = identities.verify_algorithmic_match(args.algorithm, args.length)
        result = [report.to_dict()]
        ok = report.passed
        _emit(args, {"algorithm": args.algorithm, "length": args.length}, result, format_reports(result))
    else:
        outcomes = identities.deluca_transpositions(args.deluca, args.probe)
        result = [{"swap": [i, j], "outcome": o} for i, j, o in outcomes]
        ok = all(o == "greater" for _, _, o in outcomes)
        text = "\n".join(f"swap {i} {j} {o}" for i, j, o in outcomes)
        _emit(args, {"deluca": args.deluca, "probe": args.probe}, result, text)
    return 0 if ok else 1


def cmd_sturmian(args):
    dirs = sturmian.Directives.parse(args.dirs, cycle=args.cycle)
    inputs = {"dirs": list(dirs.values), "cycle": args.cycle}
    modes = [args.length is not None, args.level is not None, args.slope]
    if sum(modes) != 1:
        raise UsageError("sturmian needs exactly one of --length, --level, --slope")
    if args.length is not None:
        w = sturmian.sturmian_stream(dirs).take(args.length)
        inputs["length"] = args.length
        _emit(args, inputs, w, w)
    elif args.level is not None:
        w = sturmian.standard_sequence(dirs, args.level)
        inputs["level"] = args.level
        _emit(args, inputs, w, w)
    else:
        if args.depth is None:
            raise UsageError("sturmian --slope requires --depth")
        q = sturmian.slope(dirs, args.depth)
        inputs["depth"] = args.depth
        result = {"fraction": f"{q.numerator}/{q.denominator}", "decimal": float(q)}
        _emit(args, inputs, result, f"{result['fraction']} {result['decimal']!r}")
    return 0


def cmd_plot(args):
    doc = plot.plot_christoffel(args.christoffel, args.kind, args.format)
    inputs = {"christoffel": args.christoffel, "kind": args.kind, "format": args.format}
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc)
        _emit(args, inputs, args.output, args.output)
    else:
        _emit(args, inputs, doc, doc)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fibwords",
        description="Fibonacci word families, factorizations and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.set_defaults(func=func)
        return p

    p = add("gen", cmd_gen, "print a word from one of the families")
    p.add_argument("--family", choices=sorted(FAMILIES))
    p.add_argument("--index", type=_natural)
    p.add_argument("--stream", action="store_true", help="print a prefix of f")
    p.add_argument("--length", type=_natural)

    p = add("zeck", cmd_zeck, "Zeckendorf encode/decode/table")
    p.add_argument("action", choices=["encode", "decode", "table"])
    p.add_argument("value", nargs="?")
    p.add_argument("--width", type=_natural)

    p = add("factorize", cmd_factorize, "factorize a word or a prefix of f")
    p.add_argument("--method", required=True, choices=["lz", "lyndon", "crochemore"])
    p.add_argument("--order", default="01", choices=["01", "10"])
    p.add_argument("--input", required=True, help="word, '-' for stdin, or fib:<length>")

    p = add("verify", cmd_verify, "check identities or algorithmic matches on f")
    p.add_argument("--identity", help="I1..I16 or 'all'")
    p.add_argument("--algorithm", choices=list(identities.ALGORITHMS))
    p.add_argument("--deluca", type=_natural, metavar="K")
    p.add_argument("--probe", type=_natural, default=100_000)
    p.add_argument("--length", type=_natural, default=identities.DEFAULT_LENGTH)

    p = add("sturmian", cmd_sturmian, "standard Sturmian words")
    p.add_argument("--dirs", required=True, help="comma-separated directives, e.g. 1,1,1")
    p.add_argument("--cycle", action="store_true", help="repeat the directive list forever")
    p.add_argument("--length", type=_natural)
    p.add_argument("--level", type=_natural)
    p.add_argument("--slope", action="store_true")
    p.add_argument("--depth", type=_natural)

    p = add("plot", cmd_plot, "draw a Christoffel path")
    p.add_argument("--christoffel", type=_natural, required=True, metavar="N")
    p.add_argument("--kind", default="lower", choices=["lower", "upper"])
    p.add_argument("--format", default="svg", choices=["svg", "ascii"])
    p.add_argument("--output", help="write to this file instead of stdout")

    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except (UsageError, argparse.ArgumentTypeError, ValueError, IndexError) as exc:
        print(f"fibwords: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
