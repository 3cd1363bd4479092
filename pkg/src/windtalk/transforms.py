"""Keyless and parametric transforms on bits, bytes, digits and letters."""

from dataclasses import dataclass, field

from windtalk import _kernels
from windtalk.bitio import check_bits
from windtalk.errors import BadLength, KeystreamMismatch, UnknownSymbol
from windtalk.numerals import golden_sequence
from windtalk.rng import SplitMix64, fingerprint


@dataclass(frozen=True)
class BoustroParams:
    """Bit-reverse bytes ``start, start + jump + 1, ...``."""

    start: int = 0
    jump: int = 0

    def __post_init__(self):
        if self.start < 0 or self.jump < 0:
            raise ValueError("start and jump must be nonnegative")

    @property
    def step(self):
        return self.jump + 1


@dataclass(frozen=True)
class SpliceParams:
    stride: int = 3
    offset: int = 0
    verify: bool = False

    def __post_init__(self):
        if self.stride < 1 or self.offset < 0:
            raise ValueError("stride must be >= 1 and offset >= 0")


def boustrophedon(data, params):
    """Mirror the bits of every selected byte.  Self-inverse for fixed params."""
    return _kernels.reverse_bytes_at(bytes(data), params.start, params.step)


def boustrophedon_bits(bits, params):
    """:func:`boustrophedon` over the whole bytes of a bit string; a trailing partial byte is left alone."""
    whole = len(bits) - len(bits) % 8
    if not whole:
        return bits
    data = _kernels.pack_bits(bits[:whole].encode("ascii"))
    flipped = boustrophedon(data, params)
    return _kernels.unpack_bits(flipped, whole).decode("ascii") + bits[whole:]


def golden_keystream(count):
    return golden_sequence(count)


def _keys(params, count, keystream):
    return (keystream or golden_keystream)(params.offset + count)[params.offset:]


def golden_splice(bits, params, keystream=None):
    """Insert one keystream bit after every ``stride`` payload bits.

    ``keystream(m)`` must return the first ``m`` bits of the stream; the
    default is the golden sequence.  Output length is ``n + n // stride``.
    """
    check_bits(bits)
    keys = _keys(params, len(bits) // params.stride, keystream)
    return _kernels.splice(bits.encode("ascii"), keys.encode("ascii"), params.stride).decode("ascii")


def spliced_length(n, stride):
    return n + n // stride


def payload_length(total, stride):
    """The ``n`` with ``n + n // stride == total``; raises :class:`BadLength` if none exists."""
    n = total * stride // (stride + 1)
    for cand in (n + 1, n, n - 1):
        if cand >= 0 and spliced_length(cand, stride) == total:
            return cand
    raise BadLength(f"{total} bits cannot come from splicing with stride {stride}")


def golden_unsplice(bits, params, keystream=None):
    check_bits(bits)
    n = payload_length(len(bits), params.stride)
    payload, removed = _kernels.unsplice(bits.encode("ascii"), params.stride, n)
    if params.verify:
        keys = _keys(params, len(removed), keystream)
        if removed.decode("ascii") != keys:
            pos = next(i for i, (a, b) in enumerate(zip(removed.decode("ascii"), keys)) if a != b)
            raise KeystreamMismatch(f"inserted bit {pos} does not match the keystream")
    return payload.decode("ascii")


def digit_shift(digits, k):
    """Add ``k`` to every decimal digit modulo 10; other characters pass through."""
    k %= 10
    table = str.maketrans("0123456789", "0123456789"[k:] + "0123456789"[:k])
    return digits.translate(table)


# ---------------------------------------------------------------- substitution


@dataclass(frozen=True)
class LetterPermutation:
    """A bijection on integer symbols; symbols outside ``mapping`` are rejected."""

    mapping: dict
    seed_fingerprint: int = 0
    _inverse: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        inverse = {v: k for k, v in self.mapping.items()}
        if len(inverse) != len(self.mapping) or set(inverse) != set(self.mapping):
            raise ValueError("mapping is not a bijection on its domain")
        object.__setattr__(self, "_inverse", inverse)

    @classmethod
    def identity(cls, domain=range(256)):
        return cls({s: s for s in domain})

    @classmethod
    def swap(cls, a, b, domain=range(256)):
        a, b = _sym(a), _sym(b)
        mapping = {s: s for s in domain}
        mapping[a], mapping[b] = b, a
        return cls(mapping)

    @classmethod
    def random(cls, symbols, seed, domain=range(256)):
        """Shuffle ``symbols`` among themselves; the rest of ``domain`` stays fixed."""
        symbols = sorted(symbols)
        images = SplitMix64(seed).shuffle(list(symbols))
        mapping = {s: s for s in domain}
        mapping.update(zip(symbols, images))
        return cls(mapping, fingerprint(seed))

    @classmethod
    def letters(cls, seed, domain=range(256)):
        """Random letter substitution applied alike to upper and lower case."""
        upper = list(range(65, 91))
        images = SplitMix64(seed).shuffle(list(upper))
        mapping = {s: s for s in domain}
        for src, dst in zip(upper, images):
            mapping[src] = dst
            mapping[src + 32] = dst + 32
        return cls(mapping, fingerprint(seed))

    def moved(self):
        return {k: v for k, v in self.mapping.items() if k != v}

    def apply(self, symbols):
        try:
            return [self.mapping[s] for s in symbols]
        except KeyError as exc:
            raise UnknownSymbol(f"symbol {exc.args[0]!r} outside the permutation domain") from None

    def invert(self):
        return LetterPermutation(dict(self._inverse), self.seed_fingerprint)


def _sym(x):
    return ord(x) if isinstance(x, str) else x


def permutation_cipher(text, perm, inverse=False):
    """Apply ``perm`` (or its inverse) symbol-wise to a string or symbol list."""
    if inverse:
        perm = perm.invert()
    if isinstance(text, str):
        return "".join(map(chr, perm.apply(map(ord, text))))
    return perm.apply(text)
