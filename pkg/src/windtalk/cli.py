"""``wt`` command-line interface.

Exit status: 0 success, 1 usage error, 2 data or format error, 3 verification
failure (wrong key material for the ciphertext).  Data goes to stdout,
diagnostics to stderr.
"""

import argparse
import sys
from collections import Counter

from windtalk import bitio, codebook, cryptanalysis, freq, homophones, numerals, pipeline
from windtalk.errors import VerificationError, WindtalkError
from windtalk.transforms import (
    BoustroParams,
    SpliceParams,
    boustrophedon_bits,
    digit_shift,
    golden_splice,
    golden_unsplice,
)


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------- io helpers


def read_bytes(path):
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def read_text(path):
    return read_bytes(path).decode("utf-8")


def write_binary(data, path, binary_stdout):
    if path not in (None, "-"):
        with open(path, "wb") as fh:
            fh.write(data)
    elif binary_stdout:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        raise UsageError("refusing to write a binary frame to stdout; use -o or --binary-stdout")


def write_text(text, path=None):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def payload_bits(data):
    """Frame payload when ``data`` is a WTC1 frame, otherwise all bits of ``data``."""
    if data.startswith(bitio.FRAME_MAGIC):
        return bitio.read_frame(data)
    return bitio.unpack(data, 8 * len(data))


# ---------------------------------------------------------------- numeral


def _system(spec):
    if spec in ("fib", "fib-classic", "phi", "prime"):
        return spec, None
    if spec.startswith("base:"):
        try:
            base = int(spec[5:])
        except ValueError:
            raise UsageError(f"bad base in {spec!r}") from None
        if not 2 <= base <= 36:
            raise UsageError("base must be between 2 and 36")
        return "base", base
    raise UsageError(f"unknown numeral system {spec!r}")


def _min_fib_width(n, classic):
    width = 1
    while sum(numerals.fib_weights(width, classic)) < n:
        width += 1
    return width


def _to_base(n, base):
    digits = ""
    while True:
        n, d = divmod(n, base)
        digits = "0123456789abcdefghijklmnopqrstuvwxyz"[d] + digits
        if not n:
            return digits


def cmd_numeral(args):
    system, base = _system(args.system)
    if args.action == "enum":
        if system not in ("fib", "fib-classic"):
            raise UsageError("enum supports the fib and fib-classic systems")
        classic = system == "fib-classic"
        width = args.width or _min_fib_width(int(args.value), classic)
        for rep in numerals.enumerate_representations(int(args.value), numerals.fib_weights(width, classic)):
            print(rep)
        return
    if args.action == "enc":
        n = int(args.value)
        if n < 0:
            raise WindtalkError("numbers must be nonnegative")
        if system == "fib":
            print(numerals.zeckendorf_encode(n, args.width or _min_fib_width(n, False)))
        elif system == "fib-classic":
            width = args.width or _min_fib_width(n, True)
            reps = numerals.enumerate_representations(n, numerals.fib_weights(width, True))
            if not reps:
                raise WindtalkError(f"{n} does not fit {width} digits")
            print(reps[-1])
        elif system == "phi":
            print(numerals.phinary_encode(n))
        elif system == "prime":
            print(numerals.prime_encode_bits(n, args.width))
        else:
            print(_to_base(n, base))
        return
    digits = args.value
    if system in ("fib", "fib-classic"):
        print(numerals.weighted_decode(bitio.check_bits(digits),
                                       numerals.fib_weights(len(digits), system == "fib-classic")))
    elif system == "phi":
        print(numerals.phinary_decode(numerals.PhinaryNumeral.parse(digits)))
    elif system == "prime":
        print(numerals.weighted_decode(bitio.check_bits(digits), numerals.prime_weights(len(digits))))
    else:
        print(numerals.digits_value(digits, base))


# ---------------------------------------------------------------- analysis


def cmd_tally(args):
    data = read_bytes(args.file)
    alphabet = args.alphabet
    if alphabet == "letters":
        table = freq.tally(data.decode("utf-8"), "letters")
        label = str
    elif alphabet == "bytes":
        table = freq.tally(data, "symbols")
        label = lambda b: f"{b:#04x}"  # noqa: E731
    elif alphabet.startswith("groups:"):
        try:
            k = int(alphabet[7:])
        except ValueError:
            raise UsageError(f"bad group width in {alphabet!r}") from None
        if k < 1:
            raise UsageError("group width must be >= 1")
        groups, _ = bitio.group(payload_bits(data), k)
        table = freq.tally(groups, "symbols")
        label = str
    else:
        raise UsageError(f"unknown alphabet {alphabet!r}")
    for sym in table.ranking():
        print(f"{label(sym)}\t{table.counts[sym]}")
    if args.stats and table.total:
        s = table.stats(26 if alphabet == "letters" else None)
        print(f"# total={table.total} mean={s.mean:.4f}% stddev={s.stddev:.4f}%", file=sys.stderr)


def cmd_benford(args):
    numbers = read_text(args.file).split()
    lead = Counter(freq.leading_digit(x) for x in numbers)
    n = sum(lead.values())
    for d in range(1, 10):
        observed = lead[d] / n if n else 0.0
        print(f"{d}\t{observed:.5f}\t{freq.benford_expected(d):.5f}")
    print(f"distance\t{freq.benford_distance(numbers):.5f}")


# ---------------------------------------------------------------- keys


def cmd_codebook(args):
    if args.action == "gen":
        table = codebook.generate_table(args.width, args.symbols, args.seed, args.noise)
        write_text(codebook.dumps(table), args.output)
    else:
        table = codebook.loads(read_text(args.file))
        print(f"ok width={table.width} symbols={len(table.entries)} noise={table.noise_bits}")


def _reference(path):
    if path is None:
        return None
    return freq.tally(read_text(path), "letters")


def cmd_homophones(args):
    bundle = pipeline.make_bundle("p3", args.seed, reference=_reference(args.ref), rule=args.mode)
    write_text(pipeline.serialize_bundle(bundle), args.output)


def _pair(text, name):
    parts = text.split(":")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"bad --{name} value {text!r}") from None


def cmd_bundle(args):
    chain = []
    for b in args.boustro or ():
        start, jump = _pair(b, "boustro")
        chain.append(BoustroParams(start, jump))
    for s in args.splice or ():
        vals = _pair(s, "splice")
        chain.append(SpliceParams(vals[0], vals[1] if len(vals) > 1 else 0, bool(vals[2]) if len(vals) > 2 else True))
    bundle = pipeline.make_bundle(args.process, args.seed, reference=_reference(args.ref),
                                  width=args.width, noise_bits=args.noise, rule=args.mode,
                                  transforms=chain, strip_spaces=args.strip_spaces)
    write_text(pipeline.serialize_bundle(bundle), args.output)


# ---------------------------------------------------------------- transforms


def cmd_transform(args):
    if args.kind == "digits":
        k = args.shift if not args.undo else -args.shift
        write_text(digit_shift(read_text(args.input), k), args.output)
        return
    bits = bitio.read_frame(read_bytes(args.input))
    if args.kind == "boustro":
        bits = boustrophedon_bits(bits, BoustroParams(args.start, args.jump))
    else:
        params = SpliceParams(args.stride, args.offset, args.verify)
        bits = golden_unsplice(bits, params) if args.undo else golden_splice(bits, params)
    write_binary(bitio.write_frame(bits), args.output, args.binary_stdout)


# ---------------------------------------------------------------- pipeline


def _bundle(path):
    return pipeline.parse_bundle(read_text(path))


def cmd_encode(args):
    bundle = _bundle(args.bundle)
    if args.process != bundle.process:
        raise WindtalkError(f"bundle is for {bundle.process}, not {args.process}")
    frame = pipeline.encode(read_text(args.input), bundle)
    write_binary(frame, args.output, args.binary_stdout)


def cmd_decode(args):
    bundle = _bundle(args.bundle)
    write_text(pipeline.decode(read_bytes(args.input), bundle), args.output)


def cmd_attack(args):
    if args.kind == "freq":
        bits = payload_bits(read_bytes(args.input))
        groups, _ = bitio.group(bits, args.group_bits)
        report = cryptanalysis.rank_match_attack(freq.tally(groups, "symbols"))
        for sym, letter in report.mapping.items():
            print(f"{sym}\t{letter or '?'}")
        guess = "".join(report.mapping.get(g) or "?" for g in groups)
        print(f"# guess: {guess[:200]}", file=sys.stderr)
        if args.plaintext:
            plain = cryptanalysis.corpus_letters(read_text(args.plaintext))
            rate = cryptanalysis.attack_bits(bits, args.group_bits, plain).recovery_rate
            print(f"recovery\t{rate:.4f}")
    else:
        words = cryptanalysis.load_wordlist(args.wordlist)
        text = "".join(read_text(args.input).split())
        greedy = cryptanalysis.greedy_segment(text, words)
        dp = cryptanalysis.dp_segment(text, words)
        print("greedy\t" + " ".join(greedy.words))
        print(f"residue\t{greedy.residue}")
        print(f"segmentations\t{dp.count}")
        if dp.witness:
            print("witness\t" + " ".join(dp.witness))


def cmd_experiment(args):
    transforms = _bundle(args.bundle).transforms if args.bundle else ()
    seeds = range(args.seed, args.seed + args.runs)
    report = cryptanalysis.run_experiment(read_text(args.corpus), seeds=seeds, p4_transforms=transforms)
    print(report.format())


# ---------------------------------------------------------------- parser


def build_parser():
    p = Parser(prog="wt", description="Frequency-confounding encryption toolkit.")
    sub = p.add_subparsers(dest="command", parser_class=Parser)

    num = sub.add_parser("numeral", help="encode/decode alternate numeral systems")
    num.add_argument("action", choices=("enc", "dec", "enum"))
    num.add_argument("--system", required=True)
    num.add_argument("--width", type=int)
    num.add_argument("value")
    num.set_defaults(func=cmd_numeral)

    t = sub.add_parser("tally", help="symbol frequency report")
    t.add_argument("--alphabet", default="letters")
    t.add_argument("--stats", action="store_true")
    t.add_argument("file", nargs="?")
    t.set_defaults(func=cmd_tally)

    b = sub.add_parser("benford", help="leading-digit distribution vs Benford's law")
    b.add_argument("file", nargs="?")
    b.set_defaults(func=cmd_benford)

    cb = sub.add_parser("codebook", help="generate or check a code table")
    cbs = cb.add_subparsers(dest="action", required=True, parser_class=Parser)
    g = cbs.add_parser("gen")
    g.add_argument("--width", type=int, required=True)
    g.add_argument("--symbols", type=int, default=256)
    g.add_argument("--noise", type=int, default=0)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("-o", "--output")
    c = cbs.add_parser("check")
    c.add_argument("file")
    cb.set_defaults(func=cmd_codebook)

    h = sub.add_parser("homophones", help="generate a homophone (p3) bundle")
    hs = h.add_subparsers(dest="action", required=True, parser_class=Parser)
    hg = hs.add_parser("gen")
    hg.add_argument("--mode", choices=("rule", "formula"), default="rule")
    hg.add_argument("--ref")
    hg.add_argument("--seed", type=int, required=True)
    hg.add_argument("-o", "--output")
    h.set_defaults(func=cmd_homophones)

    bu = sub.add_parser("bundle", help="generate a key bundle for any process")
    bus = bu.add_subparsers(dest="action", required=True, parser_class=Parser)
    bg = bus.add_parser("gen")
    bg.add_argument("--process", choices=pipeline.PROCESSES, required=True)
    bg.add_argument("--seed", type=int, required=True)
    bg.add_argument("--ref")
    bg.add_argument("--width", type=int, default=16)
    bg.add_argument("--noise", type=int, default=4)
    bg.add_argument("--mode", choices=("rule", "formula"), default="rule")
    bg.add_argument("--boustro", action="append", metavar="START:JUMP")
    bg.add_argument("--splice", action="append", metavar="STRIDE:OFFSET[:VERIFY]")
    bg.add_argument("--strip-spaces", action="store_true")
    bg.add_argument("-o", "--output")
    bu.set_defaults(func=cmd_bundle)

    tr = sub.add_parser("transform", help="apply a bit or digit transform")
    trs = tr.add_subparsers(dest="kind", required=True, parser_class=Parser)
    bo = trs.add_parser("boustro")
    bo.add_argument("--start", type=int, default=0)
    bo.add_argument("--jump", type=int, default=0)
    sp = trs.add_parser("splice")
    sp.add_argument("--stride", type=int, default=3)
    sp.add_argument("--offset", type=int, default=0)
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--undo", action="store_true")
    dg = trs.add_parser("digits")
    dg.add_argument("--shift", type=int, required=True)
    dg.add_argument("--undo", action="store_true")
    for q in (bo, sp, dg):
        q.add_argument("-i", "--input")
        q.add_argument("-o", "--output")
        q.add_argument("--binary-stdout", action="store_true")
    tr.set_defaults(func=cmd_transform)

    for name, func in (("encode", cmd_encode), ("decode", cmd_decode)):
        e = sub.add_parser(name, help=f"{name} with a key bundle")
        if name == "encode":
            e.add_argument("--process", choices=pipeline.PROCESSES, required=True)
            e.add_argument("--binary-stdout", action="store_true")
        e.add_argument("--bundle", required=True)
        e.add_argument("-i", "--input")
        e.add_argument("-o", "--output")
        e.set_defaults(func=func)

    a = sub.add_parser("attack", help="run an attack")
    ats = a.add_subparsers(dest="kind", required=True, parser_class=Parser)
    af = ats.add_parser("freq")
    af.add_argument("--group-bits", type=int, choices=cryptanalysis.GROUP_WIDTHS, default=8)
    af.add_argument("--plaintext")
    af.add_argument("input")
    ad = ats.add_parser("dict")
    ad.add_argument("--wordlist")
    ad.add_argument("input")
    a.set_defaults(func=cmd_attack)

    x = sub.add_parser("experiment", help="measure attack success across processes")
    x.add_argument("--corpus", required=True)
    x.add_argument("--bundle")
    x.add_argument("--runs", type=int, default=10)
    x.add_argument("--seed", type=int, default=0)
    x.set_defaults(func=cmd_experiment)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError(parser.format_usage().strip())
        args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        if str(exc).startswith("usage"):
            parser.print_help(sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"wt: verification failed: {exc}", file=sys.stderr)
        return 3
    except (WindtalkError, ValueError, OSError, UnicodeDecodeError) as exc:
        print(f"wt: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
