"""Homophone tables: extra "identity" symbols that flatten letter frequencies.

Letters keep their ASCII code as symbol id.  Identity symbols get ids from
256 upward, assigned in the letters' frequency rank order, so they can never
collide with a byte value.
"""

from dataclasses import dataclass, field

from windtalk.errors import FormatError, UnknownLetter, UnknownSymbol
from windtalk.freq import LETTERS, FrequencyTable, rank_order
from windtalk.rng import SplitMix64

FIRST_IDENTITY = 256
MODES = ("balanced", "uniform", "round-robin")


@dataclass(frozen=True)
class HomophoneTable:
    groups: dict
    inverse: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        inverse = {}
        for letter, ids in self.groups.items():
            if not ids:
                raise ValueError(f"empty group for {letter!r}")
            if ids[0] != ord(letter):
                raise ValueError(f"group {letter!r} must start with its own id {ord(letter)}")
            for i in ids:
                if i in inverse:
                    raise ValueError(f"symbol {i} is in groups {inverse[i]!r} and {letter!r}")
                if i != ids[0] and i < FIRST_IDENTITY:
                    raise ValueError(f"identity symbol {i} overlaps the byte range")
                inverse[i] = letter
        groups = {k: tuple(v) for k, v in sorted(self.groups.items())}
        object.__setattr__(self, "groups", groups)
        object.__setattr__(self, "inverse", inverse)

    @property
    def alphabet_size(self):
        return len(self.inverse)

    def identities(self):
        return sorted(i for i in self.inverse if i >= FIRST_IDENTITY)

    def label(self, symbol):
        """Printable name: the letter itself, or letter plus identity index (``E1``)."""
        letter = self.inverse.get(symbol)
        if letter is None:
            return chr(symbol) if symbol < FIRST_IDENTITY else f"#{symbol}"
        index = self.groups[letter].index(symbol)
        return letter if index == 0 else f"{letter}{index}"


def _letter_counts(reference):
    counts = dict.fromkeys(LETTERS, 0)
    for k, v in reference.counts.items():
        if k not in counts:
            raise ValueError(f"reference symbol {k!r} is not a letter A-Z")
        counts[k] = v
    return counts


def _assemble(order, sizes):
    groups = {}
    next_id = FIRST_IDENTITY
    for letter in order:
        extra = sizes[letter] - 1
        groups[letter] = (ord(letter), *range(next_id, next_id + extra))
        next_id += extra
    return HomophoneTable(groups)


def build_rule_table(reference):
    """Top letter gets three identities, the next nine get two each (47 symbols)."""
    order = rank_order(_letter_counts(reference))
    sizes = dict.fromkeys(order, 1)
    sizes[order[0]] = 4
    for letter in order[1:10]:
        sizes[letter] = 3
    return _assemble(order, sizes)


def build_formula_table(reference):
    """Group size ``max(1, round(pct / mean_pct))`` with halves rounded up."""
    counts = _letter_counts(reference)
    order = rank_order(counts)
    table = FrequencyTable.from_counts(counts)
    pct = table.percentages()
    mean = 100.0 / len(LETTERS)
    sizes = {k: max(1, int(pct[k] / mean + 0.5)) for k in order}
    return _assemble(order, sizes)


def _symbols_of(text):
    if isinstance(text, str):
        return [ord(c) for c in text]
    return list(text)


def normalize(text, table, seed=0, mode="balanced"):
    """Replace every letter by a member of its homophone group.

    ``balanced`` deals each group's members from a seeded shuffle bag, so
    every member of a group ends up within one occurrence of the others.
    ``uniform`` picks independently per occurrence; ``round-robin`` cycles
    through the group in order and ignores the seed.  Characters that are
    not letters pass through unchanged.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    rng = SplitMix64(seed)
    bags = {}
    turns = {}
    out = []
    for sym in _symbols_of(text):
        letter = chr(sym) if sym < 128 else None
        if letter is None or not letter.isalpha():
            if sym >= FIRST_IDENTITY:
                raise UnknownSymbol(f"symbol {sym} is not plaintext")
            out.append(sym)
            continue
        group = table.groups.get(letter)
        if group is None:
            raise UnknownLetter(f"no homophone group for {letter!r}")
        if len(group) == 1:
            out.append(group[0])
        elif mode == "uniform":
            out.append(group[rng.below(len(group))])
        elif mode == "round-robin":
            t = turns.get(letter, 0)
            out.append(group[t % len(group)])
            turns[letter] = t + 1
        else:
            bag = bags.get(letter)
            if not bag:
                bag = bags[letter] = rng.shuffle(list(group))
            out.append(bag.pop())
    return out


def denormalize(symbols, table):
    """Map every symbol back to its base letter; non-letters pass through."""
    chars = []
    for sym in symbols:
        letter = table.inverse.get(sym)
        if letter is not None:
            chars.append(letter)
        elif sym < 128 and not chr(sym).isalpha():
            chars.append(chr(sym))
        else:
            raise UnknownSymbol(f"symbol {sym} is not in the homophone table")
    return "".join(chars)


# ---------------------------------------------------------------- text form


def table_lines(table):
    return [f"group={k}:{','.join(map(str, ids))}" for k, ids in table.groups.items()]


def parse_group(value, lineno):
    letter, sep, ids = value.partition(":")
    if not sep or len(letter) != 1 or not "A" <= letter <= "Z":
        raise FormatError(f"bad group line {value!r}", lineno)
    try:
        members = tuple(int(x) for x in ids.split(","))
    except ValueError:
        raise FormatError(f"bad symbol list {ids!r}", lineno) from None
    return letter, members


def build_table(groups):
    try:
        return HomophoneTable(groups)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
