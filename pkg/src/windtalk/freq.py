"""Symbol tallies, frequency statistics and Benford's first-digit law."""

import math
from collections import Counter
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation

from windtalk.errors import DigitOutOfRange, EmptyInput

LETTERS = tuple(chr(c) for c in range(ord("A"), ord("Z") + 1))

# Published English letter probabilities (rounded to three places, so the
# sum is 0.998 rather than 1).
ENGLISH = {
    "A": 0.082, "B": 0.015, "C": 0.025, "D": 0.043, "E": 0.127, "F": 0.022,
    "G": 0.020, "H": 0.061, "I": 0.070, "J": 0.002, "K": 0.008, "L": 0.040,
    "M": 0.024, "N": 0.067, "O": 0.075, "P": 0.019, "Q": 0.001, "R": 0.060,
    "S": 0.063, "T": 0.091, "U": 0.028, "V": 0.010, "W": 0.023, "X": 0.001,
    "Y": 0.020, "Z": 0.001,
}


def rank_order(weights):
    """Keys by descending weight; ties broken by ascending key."""
    return sorted(weights, key=lambda k: (-weights[k], k))


@dataclass(frozen=True)
class Stats:
    mean: float
    stddev: float
    exceptional: tuple


@dataclass(frozen=True)
class FrequencyTable:
    counts: dict
    total: int

    @classmethod
    def from_counts(cls, counts):
        counts = dict(counts)
        return cls(counts, sum(counts.values()))

    def percentages(self):
        if not self.total:
            return {s: 0.0 for s in self.counts}
        return {s: 100.0 * c / self.total for s, c in self.counts.items()}

    def ranking(self):
        return rank_order(self.counts)

    def top(self):
        ranked = self.ranking()
        return ranked[0] if ranked else None

    def stats(self, alphabet_size=None):
        return stats(self, alphabet_size)


def tally(text, policy="letters"):
    """Count symbols.

    ``letters`` folds a-z onto A-Z, ignores everything else and always lists
    all 26 letters (zero counts included).  ``symbols`` counts every distinct
    item of ``text``, which may be any iterable of hashables (characters,
    byte values, bit-group strings).
    """
    if policy == "letters":
        counts = dict.fromkeys(LETTERS, 0)
        for ch in text:
            up = ch.upper() if "a" <= ch <= "z" else ch
            if "A" <= up <= "Z":
                counts[up] += 1
        return FrequencyTable.from_counts(counts)
    if policy == "symbols":
        return FrequencyTable.from_counts(Counter(text))
    raise ValueError(f"unknown alphabet policy {policy!r}")


def stats(table, alphabet_size=None):
    """Mean and population standard deviation of the percentages.

    Symbols missing from ``table`` count as zero, up to ``alphabet_size``.
    A symbol is exceptional when its percentage exceeds mean + stddev.
    """
    pct = table.percentages()
    size = len(pct) if alphabet_size is None else alphabet_size
    if size < 1:
        raise ValueError("alphabet size must be >= 1")
    if len(pct) > size:
        raise ValueError(f"{len(pct)} symbols exceed alphabet size {size}")
    mean = 100.0 / size
    values = list(pct.values()) + [0.0] * (size - len(pct))
    stddev = math.sqrt(sum((v - mean) ** 2 for v in values) / size)
    exceptional = tuple(s for s in rank_order(pct) if pct[s] > mean + stddev)
    return Stats(mean, stddev, exceptional)


def benford_expected(d):
    if not 1 <= d <= 9:
        raise DigitOutOfRange(f"leading digit must be 1..9, got {d}")
    return math.log10(1 + 1 / d)


def leading_digit(number):
    try:
        value = Decimal(str(number).strip())
    except InvalidOperation:
        raise ValueError(f"not a number: {number!r}") from None
    if not value.is_finite() or value <= 0:
        raise ValueError(f"Benford analysis needs positive numbers, got {number!r}")
    return next(d for d in value.as_tuple().digits if d)


def benford_distance(numbers):
    """Total-variation distance between observed leading digits and Benford's law."""
    digits = Counter(leading_digit(x) for x in numbers)
    n = sum(digits.values())
    if not n:
        raise EmptyInput("no numbers to analyse")
    return 0.5 * sum(abs(digits[d] / n - benford_expected(d)) for d in range(1, 10))
