"""Command-line interface.

Every subcommand exchanges code-tree sets as JSON documents (see
``formats``).  Exit status 0 means success (and "valid" where a check
ran), 1 means a domain failure (invalid set, undecodable stream,
budget exceeded), 2 means the input could not be read or parsed.

Set AIFV_MAX_DELAY to an integer to refuse any loaded code-tree set
whose mode members exceed that many bits.
"""

from __future__ import annotations

import argparse
import os
import sys

from .analysis import (entropy, expected_code_length, monte_carlo_rate,
                       stationary, transition_matrix)
from .codec import decode, encode
from .codetree import check_delay_budget, decoding_delay, validate
from .errors import AifvError, FormatError, MemberTooLong
from .formats import (dumps_document, loads_document, parse_conventional,
                      parse_distribution, parse_tree_set, parse_vv_table,
                      read_bitstream, tree_set_to_doc, write_bitstream)
from .transform import import_aifv2, import_aifvm, to_basic, vv_to_tree_set
from . import bitstring


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_bytes(path):
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_text(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _write_bytes(path, data):
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _load_tree_set(path):
    tree_set = parse_tree_set(loads_document(_read_text(path)))
    cap = os.environ.get("AIFV_MAX_DELAY")
    if cap is not None:
        try:
            bits = int(cap)
        except ValueError:
            raise FormatError(
                f"AIFV_MAX_DELAY must be an integer, not {cap!r}")
        if not check_delay_budget(tree_set, bits):
            raise MemberTooLong(
                f"a mode member exceeds the AIFV_MAX_DELAY cap of "
                f"{bits} bits")
    return tree_set


def _parse_symbol_text(text, tree_set):
    index = {name: a for a, name in enumerate(tree_set.symbols)}
    single = all(len(name) == 1 for name in tree_set.symbols)
    out = []
    for token in text.split():
        if token in index:
            out.append(index[token])
        elif single and all(ch in index for ch in token):
            out.extend(index[ch] for ch in token)
        else:
            raise FormatError(f"unknown symbol {token!r}")
    return out


def _violation_dict(v):
    return {"rule": v.rule, "tree": v.tree, "symbols": list(v.symbols),
            "words": list(v.words), "message": v.message}


def _cmd_validate(args):
    tree_set = _load_tree_set(args.trees)
    methods = ["direct", "interval"] if args.method == "both" \
        else [args.method]
    reports = [validate(tree_set, m) for m in methods]
    report = reports[0]
    if len(reports) == 2 and reports[0].violations != reports[1].violations:
        print("error: validation methods disagree", file=sys.stderr)
        return 1
    budget_ok = True
    if args.delay is not None:
        budget_ok = check_delay_budget(tree_set, args.delay)
    if args.json:
        out = {"method": args.method, "ok": report.ok,
               "violations": [_violation_dict(v) for v in report.violations]}
        if args.delay is not None:
            out["delay_budget"] = {"bits": args.delay, "ok": budget_ok}
        print(dumps_document(out), end="")
    else:
        if report.ok:
            print("valid")
        else:
            print(f"invalid: {len(report.violations)} violation(s)")
            for v in report.violations:
                print(v.message)
        if args.delay is not None:
            state = "ok" if budget_ok else "exceeded"
            print(f"delay budget {args.delay}: {state}")
    return 0 if report.ok and budget_ok else 1


def _cmd_encode(args):
    tree_set = _load_tree_set(args.trees)
    if args.text is not None:
        text = args.text
    else:
        text = _read_text(args.input)
    symbols = _parse_symbol_text(text, tree_set)
    result = encode(tree_set, symbols)
    if args.format == "binary":
        _write_bytes(args.output, write_bitstream(result.bits, len(symbols)))
    else:
        _write_text(args.output, result.bits.text() + "\n")
    return 0


def _cmd_decode(args):
    tree_set = _load_tree_set(args.trees)
    if args.bits is not None:
        if any(ch not in "01" for ch in args.bits):
            raise FormatError("--bits takes a string of 0s and 1s")
        bits = bitstring.BitString.from_text(args.bits)
        length = args.length
    else:
        data = _read_bytes(args.input)
        fmt = args.format
        if fmt == "auto":
            fmt = "binary" if data[:4] == b"AIFV" else "ascii"
        if fmt == "binary":
            bits, length = read_bitstream(data)
            if args.length is not None:
                length = args.length
        else:
            text = data.decode("utf-8").strip()
            if any(ch not in "01" for ch in text):
                raise FormatError("input is not a string of 0s and 1s")
            bits = bitstring.BitString.from_text(text)
            length = args.length
    if length is None:
        raise FormatError("a symbol count is required: pass --length")
    trace = decode(tree_set, bits, length)
    names = [tree_set.symbol_name(a) for a in trace.symbols]
    _write_text(args.output, " ".join(names) + "\n")
    return 0


def _cmd_reduce(args):
    tree_set = _load_tree_set(args.trees)
    converted = to_basic(tree_set)
    _write_text(args.output, dumps_document(tree_set_to_doc(converted)))
    return 0


def _cmd_analyze(args):
    tree_set = _load_tree_set(args.trees)
    dist = parse_distribution(loads_document(_read_text(args.dist)))
    delay = decoding_delay(tree_set)
    h = entropy(dist)
    rate = expected_code_length(tree_set, dist)
    pi = stationary(transition_matrix(tree_set, dist))
    mc = None
    if args.mc:
        mc = monte_carlo_rate(tree_set, dist, args.mc, args.seed)
    if args.json:
        out = {"trees": tree_set.tree_count,
               "symbols": list(tree_set.symbols),
               "decoding_delay": delay,
               "entropy": h,
               "expected_code_length": rate,
               "stationary": [float(p) for p in pi]}
        if mc is not None:
            out["monte_carlo"] = {"n": args.mc, "seed": args.seed,
                                  "rate": mc}
        print(dumps_document(out), end="")
    else:
        print(f"trees: {tree_set.tree_count}")
        print(f"symbols: {' '.join(tree_set.symbols)}")
        print(f"decoding delay: {delay}")
        print(f"entropy: {h:.6f}")
        print(f"expected code length: {rate:.6f}")
        print("stationary: " + " ".join(f"{p:.6f}" for p in pi))
        if mc is not None:
            print(f"monte carlo rate: {mc:.6f} "
                  f"(n={args.mc}, seed={args.seed})")
    return 0


def _cmd_import(args):
    doc = loads_document(_read_text(args.input))
    kind, m, convention, symbols, trees = parse_conventional(doc)
    if args.kind is not None:
        kind = args.kind
    if kind == "aifv2":
        tree_set = import_aifv2(trees, symbols)
    else:
        tree_set = import_aifvm(trees, m, symbols, convention)
    _write_text(args.output, dumps_document(tree_set_to_doc(tree_set)))
    return 0


def _cmd_convert_vv(args):
    table = parse_vv_table(loads_document(_read_text(args.table)))
    tree_set = vv_to_tree_set(table)
    _write_text(args.output, dumps_document(tree_set_to_doc(tree_set)))
    return 0


def _cmd_delay(args):
    tree_set = _load_tree_set(args.trees)
    print(decoding_delay(tree_set))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="aifv",
        description="Work with code-tree sets: validate, encode, decode, "
                    "convert, and analyze.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a code-tree set")
    p.add_argument("trees")
    p.add_argument("--method", choices=["direct", "interval", "both"],
                   default="direct")
    p.add_argument("--delay", type=int, default=None,
                   help="also require every mode member to fit this "
                        "many bits")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("encode", help="encode symbols to bits")
    p.add_argument("trees")
    p.add_argument("--input", default="-",
                   help="file of symbol names (default stdin)")
    p.add_argument("--text", default=None,
                   help="symbols given directly on the command line")
    p.add_argument("--output", default=None)
    p.add_argument("--format", choices=["ascii", "binary"],
                   default="ascii")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="decode bits to symbols")
    p.add_argument("trees")
    p.add_argument("--input", default="-",
                   help="encoded file (default stdin)")
    p.add_argument("--bits", default=None,
                   help="bits given directly on the command line")
    p.add_argument("--length", type=int, default=None,
                   help="number of symbols to decode")
    p.add_argument("--output", default=None)
    p.add_argument("--format", choices=["ascii", "binary", "auto"],
                   default="auto")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("reduce",
                       help="convert a set so every mode is basic")
    p.add_argument("trees")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("analyze",
                       help="rates and delay under a source distribution")
    p.add_argument("trees")
    p.add_argument("--dist", required=True,
                   help="JSON file with source probabilities")
    p.add_argument("--mc", type=int, default=0,
                   help="also run a Monte Carlo sample of this size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("import",
                       help="convert conventional code trees")
    p.add_argument("input")
    p.add_argument("--kind", choices=["aifv2", "aifvm"], default=None)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_import)

    p = sub.add_parser("convert-vv",
                       help="convert a variable-to-variable code table")
    p.add_argument("table")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_convert_vv)

    p = sub.add_parser("delay", help="print the decoding delay")
    p.add_argument("trees")
    p.set_defaults(func=_cmd_delay)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UnicodeDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AifvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
