"""Fixed-width symbol -> codeword tables with "don't care" noise bits.

A table maps byte symbols (0..255) to codewords of ``width`` bits.  Bits
selected by ``noise_mask`` carry no information: they are stored as zero,
overwritten with seeded noise on every encode, and cleared again before
lookup on decode.  Masked codewords must therefore be pairwise distinct.
"""

from dataclasses import dataclass, field
from math import perm

from windtalk import _kernels
from windtalk.bitio import check_bits
from windtalk.errors import (
    CapacityExceeded,
    FormatError,
    UnalignedLength,
    UnknownCodeword,
    UnknownSymbol,
)
from windtalk.numerals import zeckendorf_encode
from windtalk.rng import SplitMix64, fingerprint

MIN_WIDTH, MAX_WIDTH = 1, 32
HEADER = "WTKB1"


@dataclass(frozen=True)
class CodeTable:
    width: int
    entries: dict
    noise_mask: str
    seed_fingerprint: int = 0
    _lookup: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not MIN_WIDTH <= self.width <= MAX_WIDTH:
            raise ValueError(f"width {self.width} outside {MIN_WIDTH}..{MAX_WIDTH}")
        if len(self.noise_mask) != self.width:
            raise ValueError("noise mask length differs from width")
        check_bits(self.noise_mask)
        lookup = {}
        for sym, code in self.entries.items():
            if not 0 <= sym <= 255:
                raise ValueError(f"symbol {sym} outside the byte range")
            if len(code) != self.width:
                raise ValueError(f"codeword for {sym:#04x} has {len(code)} bits")
            key = self.masked(check_bits(code))
            if key in lookup:
                raise ValueError(
                    f"symbols {lookup[key]:#04x} and {sym:#04x} collide after masking"
                )
            lookup[key] = sym
        object.__setattr__(self, "entries", dict(sorted(self.entries.items())))
        object.__setattr__(self, "_lookup", lookup)

    @property
    def noise_bits(self):
        return self.noise_mask.count("1")

    def masked(self, code):
        return "".join("0" if m == "1" else c for c, m in zip(code, self.noise_mask))

    def symbol_for(self, code):
        try:
            return self._lookup[self.masked(code)]
        except KeyError:
            raise UnknownCodeword(f"no symbol for codeword {code}") from None


def count_tables(width, symbols):
    """Number of injective tables: falling factorial of ``2**width`` of length ``symbols``."""
    space = 1 << width
    if symbols > space:
        raise CapacityExceeded(f"{symbols} symbols do not fit in {width} bits")
    return perm(space, symbols)


def generate_table(width, symbols, seed, noise_bits=0):
    """Random table for symbols ``0 .. symbols-1``.

    The seed drives SplitMix64: first the noise positions are drawn (partial
    Fisher-Yates over bit positions), then ``symbols`` distinct values of
    the remaining ``width - noise_bits`` information bits.  Information bits
    fill the unmasked positions left to right, most significant first.
    """
    if not 0 <= noise_bits < width:
        raise CapacityExceeded("noise bits must leave at least one information bit")
    data_bits = width - noise_bits
    if symbols > 1 << data_bits:
        raise CapacityExceeded(f"{symbols} symbols need more than {data_bits} information bits")
    if symbols > 256:
        raise CapacityExceeded("symbol space is limited to 256 byte values")
    rng = SplitMix64(seed)
    noisy = set(rng.sample_distinct(width, noise_bits))
    mask = "".join("1" if i in noisy else "0" for i in range(width))
    values = rng.sample_distinct(1 << data_bits, symbols)
    entries = {sym: _scatter(v, data_bits, mask) for sym, v in enumerate(values)}
    return CodeTable(width, entries, mask, fingerprint(seed))


def _scatter(value, data_bits, mask):
    info = iter(format(value, f"0{data_bits}b"))
    return "".join("0" if m == "1" else next(info) for m in mask)


def identity_table(width=8):
    """Plain base-2 table: symbol ``n`` is its own ``width``-bit binary number."""
    return CodeTable(width, {n: format(n, f"0{width}b") for n in range(min(256, 1 << width))},
                     "0" * width)


def fibonacci_table(code_width=12, pad=4):
    """Zeckendorf codes for 0..255 behind ``pad`` leading noise bits."""
    width = code_width + pad
    mask = "1" * pad + "0" * code_width
    entries = {n: "0" * pad + zeckendorf_encode(n, code_width) for n in range(256)}
    return CodeTable(width, entries, mask)


def encode_symbols(data, table, seed=0):
    """Concatenate codewords for ``data``, filling noise positions from ``seed``."""
    try:
        bits = "".join(table.entries[s] for s in data)
    except KeyError as exc:
        raise UnknownSymbol(f"symbol {exc.args[0]!r} is not in the table") from None
    if not table.noise_bits or not bits:
        return bits
    noise = SplitMix64(seed).bits(len(data) * table.noise_bits)
    return _kernels.overlay(bits.encode("ascii"), table.noise_mask.encode("ascii"),
                            noise.encode("ascii")).decode("ascii")


def decode_symbols(bits, table):
    if len(bits) % table.width:
        raise UnalignedLength(f"{len(bits)} bits is not a multiple of width {table.width}")
    cleared = _kernels.clear_masked(bits.encode("ascii"), table.noise_mask.encode("ascii"))
    cleared = cleared.decode("ascii")
    lookup = table._lookup
    w = table.width
    out = []
    for i in range(0, len(cleared), w):
        key = cleared[i:i + w]
        try:
            out.append(lookup[key])
        except KeyError:
            raise UnknownCodeword(f"group {i // w} ({bits[i:i + w]}) matches no codeword") from None
    return out


# ---------------------------------------------------------------- WTKB1 text


def table_lines(table):
    lines = [
        f"width={table.width}",
        f"noise_mask={table.noise_mask}",
        f"fingerprint={table.seed_fingerprint:#018x}",
    ]
    lines += [f"sym={s:#04x} code={c}" for s, c in table.entries.items()]
    return lines


def dumps(table):
    return "\n".join([HEADER, "version=1", *table_lines(table)]) + "\n"


def parse_entry(value, lineno):
    """Parse the ``0x41 code=0101...`` remainder of a ``sym=`` line."""
    sym_text, sep, code = value.partition(" code=")
    if not sep:
        raise FormatError("entry needs 'sym=0x.. code=...'", lineno)
    try:
        sym = int(sym_text, 16)
    except ValueError:
        raise FormatError(f"bad symbol {sym_text!r}", lineno) from None
    if not sym_text.startswith("0x") or not 0 <= sym <= 255:
        raise FormatError(f"bad symbol {sym_text!r}", lineno)
    if not code or code.strip("01"):
        raise FormatError(f"bad codeword {code!r}", lineno)
    return sym, code


def build_table(fields, entries, lines_of):
    """Assemble a CodeTable from parsed fields, reporting the offending line on failure."""
    try:
        width = int(fields["width"])
        mask = fields["noise_mask"]
        fp = int(fields.get("fingerprint", "0"), 16)
    except KeyError as exc:
        raise FormatError(f"missing field {exc.args[0]!r}") from None
    except ValueError as exc:
        raise FormatError(str(exc), lines_of.get("width")) from None
    if mask.strip("01") or len(mask) != width:
        raise FormatError("noise_mask must be a bit string of length width", lines_of.get("noise_mask"))
    seen = {}
    for sym, code, lineno in entries:
        if len(code) != width:
            raise FormatError(f"codeword length {len(code)} != width {width}", lineno)
        key = "".join("0" if m == "1" else c for c, m in zip(code, mask))
        if key in seen:
            raise FormatError(f"masked codeword collides with line {seen[key]}", lineno)
        seen[key] = lineno
    try:
        return CodeTable(width, {s: c for s, c, _ in entries}, mask, fp)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def loads(text):
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise FormatError(f"missing {HEADER} header", 1)
    fields, lines_of, entries, symbols = {}, {}, [], {}
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise FormatError(f"expected key=value, got {line!r}", lineno)
        if key == "sym":
            sym, code = parse_entry(value, lineno)
            if sym in symbols:
                raise FormatError(f"duplicate symbol {sym:#04x} (first on line {symbols[sym]})", lineno)
            symbols[sym] = lineno
            entries.append((sym, code, lineno))
        elif key in ("version", "width", "noise_mask", "fingerprint"):
            if key in fields:
                raise FormatError(f"duplicate field {key!r}", lineno)
            fields[key] = value
            lines_of[key] = lineno
        else:
            raise FormatError(f"unknown field {key!r}", lineno)
    if fields.get("version") != "1":
        raise FormatError("version must be 1", lines_of.get("version"))
    return build_table(fields, entries, lines_of)
