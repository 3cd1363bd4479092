"""The four encryption processes and the key bundle that drives them.

==========  =====================================================
process     stages (encode order)
==========  =====================================================
p1          text -> byte symbols -> code table -> frame
p2          letter substitution, then p1
p3          homophone normalization -> 8-bit identity table -> frame
p4          homophones -> substitution over the expanded alphabet
            -> code table -> transform chain -> frame
==========  =====================================================

Identity symbols (ids >= 256) are moved into the byte range before the code
table is applied: the k-th identity becomes byte ``128 + k``.  Plaintext is
restricted to ASCII, so those slots are free.
"""

from dataclasses import dataclass, field

from windtalk import codebook, homophones
from windtalk.bitio import read_frame, write_frame
from windtalk.codebook import CodeTable, decode_symbols, encode_symbols, identity_table
from windtalk.errors import FormatError, UnknownSymbol
from windtalk.freq import ENGLISH, FrequencyTable
from windtalk.homophones import HomophoneTable, denormalize, normalize
from windtalk.rng import SplitMix64
from windtalk.transforms import (
    BoustroParams,
    LetterPermutation,
    SpliceParams,
    boustrophedon_bits,
    golden_splice,
    golden_unsplice,
)

PROCESSES = ("p1", "p2", "p3", "p4")
_REQUIRES = {
    "p1": {"code_table"},
    "p2": {"code_table", "permutation"},
    "p3": {"homophones"},
    "p4": {"code_table", "homophones", "permutation"},
}
IDENTITY_SLOT = 128


@dataclass(frozen=True)
class KeyBundle:
    process: str
    code_table: CodeTable = None
    homophones: HomophoneTable = None
    permutation: LetterPermutation = None
    transforms: tuple = ()
    seeds: dict = field(default_factory=dict)
    casefold: bool = False
    strip_spaces: bool = False
    homophone_mode: str = "balanced"

    def __post_init__(self):
        if self.process not in PROCESSES:
            raise FormatError(f"unknown process {self.process!r}")
        present = {n for n in ("code_table", "homophones", "permutation") if getattr(self, n) is not None}
        need = _REQUIRES[self.process]
        if present != need:
            missing, extra = need - present, present - need
            raise FormatError(
                f"{self.process} bundle: missing {sorted(missing)}, unexpected {sorted(extra)}"
            )
        if self.transforms and self.process != "p4":
            raise FormatError("transform chains are only part of p4")
        if self.homophones is not None and len(self.homophones.identities()) > 256 - IDENTITY_SLOT:
            raise FormatError("too many identity symbols for the byte range")
        if self.homophone_mode not in homophones.MODES:
            raise FormatError(f"unknown homophone mode {self.homophone_mode!r}")
        object.__setattr__(self, "transforms", tuple(self.transforms))
        object.__setattr__(self, "seeds", dict(sorted(self.seeds.items())))

    def seed(self, name):
        return self.seeds.get(name, 0)


def make_bundle(process, seed, reference=None, width=16, noise_bits=4, rule="rule",
                transforms=(), casefold=None, strip_spaces=False, homophone_mode="balanced"):
    """Generate fresh key material for ``process`` from one master seed.

    ``reference`` is the letter FrequencyTable the homophone groups are sized
    from; by default the English reference distribution.
    """
    rng = SplitMix64(seed)
    table_seed, perm_seed, noise_seed, homophone_seed = (rng.next() for _ in range(4))
    if reference is None:
        reference = FrequencyTable.from_counts({k: round(v * 1000) for k, v in ENGLISH.items()})
    h = None
    if process in ("p3", "p4"):
        build = homophones.build_rule_table if rule == "rule" else homophones.build_formula_table
        h = build(reference)
    table = None
    if process != "p3":
        table = codebook.generate_table(width, 256, table_seed, noise_bits)
    perm = None
    if process == "p2":
        perm = LetterPermutation.letters(perm_seed)
    elif process == "p4":
        perm = LetterPermutation.random(h.inverse, perm_seed, domain=_domain(h))
    seeds = {"noise": noise_seed}
    if h is not None:
        seeds["homophone"] = homophone_seed
    if casefold is None:
        casefold = h is not None
    return KeyBundle(process, table, h, perm, tuple(transforms), seeds, casefold,
                     strip_spaces, homophone_mode)


def _domain(h):
    return [*range(256), *(h.identities() if h is not None else ())]


def preprocess(text, bundle):
    if bundle.casefold:
        text = text.upper()
    if bundle.strip_spaces:
        text = text.replace(" ", "")
    try:
        return list(text.encode("ascii"))
    except UnicodeEncodeError as exc:
        raise UnknownSymbol(f"non-ASCII character {exc.object[exc.start]!r}") from None


def _slot_maps(h):
    ids = h.identities()
    to_slot = {i: IDENTITY_SLOT + k for k, i in enumerate(ids)}
    return to_slot, {v: k for k, v in to_slot.items()}


def _table(bundle):
    return bundle.code_table or identity_table(8)


def _forward_transforms(bits, chain):
    for t in chain:
        bits = boustrophedon_bits(bits, t) if isinstance(t, BoustroParams) else golden_splice(bits, t)
    return bits


def _inverse_transforms(bits, chain):
    for t in reversed(chain):
        bits = boustrophedon_bits(bits, t) if isinstance(t, BoustroParams) else golden_unsplice(bits, t)
    return bits


def encode_bits(text, bundle):
    symbols = preprocess(text, bundle)
    h = bundle.homophones
    if h is not None:
        symbols = normalize(symbols, h, bundle.seed("homophone"), bundle.homophone_mode)
    if bundle.permutation is not None:
        symbols = bundle.permutation.apply(symbols)
    if h is not None:
        to_slot, _ = _slot_maps(h)
        symbols = [to_slot.get(s, s) for s in symbols]
    bits = encode_symbols(symbols, _table(bundle), bundle.seed("noise"))
    return _forward_transforms(bits, bundle.transforms)


def decode_bits(bits, bundle):
    bits = _inverse_transforms(bits, bundle.transforms)
    symbols = decode_symbols(bits, _table(bundle))
    h = bundle.homophones
    if h is not None:
        _, from_slot = _slot_maps(h)
        symbols = [from_slot.get(s, s) for s in symbols]
    if bundle.permutation is not None:
        symbols = bundle.permutation.invert().apply(symbols)
    if h is not None:
        return denormalize(symbols, h)
    return "".join(map(chr, symbols))


def encode(text, bundle):
    return write_frame(encode_bits(text, bundle))


def decode(frame, bundle):
    """Invert :func:`encode`.  Case folding and space stripping are not undone."""
    return decode_bits(read_frame(frame), bundle)


def _checked(process):
    def run(text, bundle):
        if bundle.process != process:
            raise FormatError(f"bundle is for {bundle.process}, not {process}")
        return encode(text, bundle)
    run.__name__ = f"encode_{process}"
    run.__doc__ = f"Encode with a {process} bundle."
    return run


encode_p1 = _checked("p1")
encode_p2 = _checked("p2")
encode_p3 = _checked("p3")
encode_p4 = _checked("p4")


# ---------------------------------------------------------------- bundle text


def _transform_line(t):
    if isinstance(t, BoustroParams):
        return f"transform=boustro start={t.start} jump={t.jump}"
    return f"transform=splice stride={t.stride} offset={t.offset} verify={int(t.verify)}"


def serialize_bundle(bundle):
    lines = [
        codebook.HEADER,
        "version=1",
        f"process={bundle.process}",
        f"casefold={int(bundle.casefold)}",
        f"strip_spaces={int(bundle.strip_spaces)}",
    ]
    if bundle.homophones is not None:
        lines.append(f"homophone_mode={bundle.homophone_mode}")
    lines += [f"seed.{k}={v}" for k, v in bundle.seeds.items()]
    if bundle.code_table is not None:
        lines += codebook.table_lines(bundle.code_table)
    if bundle.homophones is not None:
        lines += homophones.table_lines(bundle.homophones)
    if bundle.permutation is not None:
        lines.append(f"perm_fingerprint={bundle.permutation.seed_fingerprint:#018x}")
        lines += [f"perm={k}:{v}" for k, v in bundle.permutation.moved().items()]
    lines += [_transform_line(t) for t in bundle.transforms]
    return "\n".join(lines) + "\n"


_SCALARS = {"version", "process", "casefold", "strip_spaces", "homophone_mode",
            "width", "noise_mask", "fingerprint", "perm_fingerprint"}
_SEEDS = {"noise", "homophone"}


def _flag(value, lineno):
    if value not in ("0", "1"):
        raise FormatError(f"flag must be 0 or 1, got {value!r}", lineno)
    return value == "1"


def _int(value, lineno):
    try:
        return int(value, 0)
    except ValueError:
        raise FormatError(f"bad integer {value!r}", lineno) from None


def _parse_transform(value, lineno):
    kind, _, rest = value.partition(" ")
    params = {}
    for item in rest.split():
        k, sep, v = item.partition("=")
        if not sep or k in params:
            raise FormatError(f"bad transform parameter {item!r}", lineno)
        params[k] = _int(v, lineno)
    try:
        if kind == "boustro" and set(params) == {"start", "jump"}:
            return BoustroParams(params["start"], params["jump"])
        if kind == "splice" and set(params) == {"stride", "offset", "verify"}:
            return SpliceParams(params["stride"], params["offset"], bool(params["verify"]))
    except ValueError as exc:
        raise FormatError(str(exc), lineno) from None
    raise FormatError(f"bad transform {value!r}", lineno)


def parse_bundle(text):
    lines = text.splitlines()
    if not lines or lines[0].strip() != codebook.HEADER:
        raise FormatError(f"missing {codebook.HEADER} header", 1)
    fields, lines_of = {}, {}
    entries, symbols = [], {}
    groups, group_lines = {}, {}
    perm, transforms, seeds = {}, [], {}
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise FormatError(f"expected key=value, got {line!r}", lineno)
        if key == "sym":
            sym, code = codebook.parse_entry(value, lineno)
            if sym in symbols:
                raise FormatError(f"duplicate symbol {sym:#04x}", lineno)
            symbols[sym] = lineno
            entries.append((sym, code, lineno))
        elif key == "group":
            letter, members = homophones.parse_group(value, lineno)
            if letter in groups:
                raise FormatError(f"duplicate group {letter!r} (first on line {group_lines[letter]})", lineno)
            groups[letter] = members
            group_lines[letter] = lineno
        elif key == "perm":
            src, sep, dst = value.partition(":")
            if not sep:
                raise FormatError(f"bad perm line {value!r}", lineno)
            src, dst = _int(src, lineno), _int(dst, lineno)
            if src in perm:
                raise FormatError(f"duplicate perm source {src}", lineno)
            perm[src] = dst
        elif key == "transform":
            transforms.append(_parse_transform(value, lineno))
        elif key.startswith("seed.") and key[5:] in _SEEDS:
            if key[5:] in seeds:
                raise FormatError(f"duplicate field {key!r}", lineno)
            seeds[key[5:]] = _int(value, lineno)
        elif key in _SCALARS:
            if key in fields:
                raise FormatError(f"duplicate field {key!r}", lineno)
            fields[key] = value
            lines_of[key] = lineno
        else:
            raise FormatError(f"unknown field {key!r}", lineno)

    if fields.get("version") != "1":
        raise FormatError("version must be 1", lines_of.get("version"))
    if "process" not in fields:
        raise FormatError("missing field 'process'")
    table = None
    if entries or "width" in fields:
        table = codebook.build_table(fields, entries, lines_of)
    h = homophones.build_table(groups) if groups else None
    permutation = None
    if perm or "perm_fingerprint" in fields:
        mapping = {s: s for s in _domain(h)}
        for src, dst in perm.items():
            if src not in mapping or dst not in mapping:
                raise FormatError(f"perm symbol {src}:{dst} outside the symbol domain")
        mapping.update(perm)
        try:
            permutation = LetterPermutation(
                mapping, _int(fields.get("perm_fingerprint", "0"), lines_of.get("perm_fingerprint"))
            )
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    return KeyBundle(
        fields["process"],
        table,
        h,
        permutation,
        tuple(transforms),
        seeds,
        _flag(fields.get("casefold", "0"), lines_of.get("casefold")),
        _flag(fields.get("strip_spaces", "0"), lines_of.get("strip_spaces")),
        fields.get("homophone_mode", "balanced"),
    )
