"""The attacker's side: rank-matching frequency analysis, dictionary
segmentation, and an experiment that measures both against the pipelines.

Attacks only ever see ciphertext bits and the public guess under test (the
group width); key bundles never reach them.
"""

from dataclasses import dataclass, field

from windtalk import fixtures
from windtalk.bitio import group
from windtalk.codebook import identity_table
from windtalk.errors import CorpusTooSmall, EmptyInput, LengthMismatch
from windtalk.freq import ENGLISH, rank_order, tally
from windtalk.pipeline import KeyBundle, encode_bits, make_bundle
from windtalk.transforms import LetterPermutation

MIN_CORPUS_LETTERS = 1000
GROUP_WIDTHS = (8, 12, 16)
CASES = ("substitution", "p3", "p4")


@dataclass(frozen=True)
class AttackReport:
    mapping: dict
    method: str
    recovery_rate: float = None


def rank_match_attack(cipher_tally, reference=ENGLISH):
    """Map the i-th most frequent cipher symbol to the i-th most frequent letter.

    Cipher symbols beyond the size of the reference alphabet map to ``None``.
    """
    if not cipher_tally.total:
        raise EmptyInput("cannot rank an empty tally")
    letters = rank_order(reference)
    ranked = [s for s in cipher_tally.ranking() if cipher_tally.counts[s]]
    mapping = {s: letters[i] if i < len(letters) else None for i, s in enumerate(ranked)}
    return AttackReport(mapping, "rank-match")


def score_recovery(mapping, ciphertext, plaintext):
    """Fraction of positions where ``mapping[cipher] == plain``."""
    if len(ciphertext) != len(plaintext):
        raise LengthMismatch(f"{len(ciphertext)} cipher symbols vs {len(plaintext)} letters")
    if not plaintext:
        raise EmptyInput("nothing to score")
    hits = sum(1 for c, p in zip(ciphertext, plaintext) if mapping.get(c) == p)
    return hits / len(plaintext)


def attack_bits(bits, group_bits, plaintext, reference=ENGLISH):
    """Rank-match attack on a payload cut into ``group_bits`` groups.

    Group i is read as the guess for plaintext letter i; missing groups count
    as misses, surplus groups are ignored.
    """
    groups, _ = group(bits, group_bits)
    report = rank_match_attack(tally(groups, "symbols"), reference)
    aligned = groups[: len(plaintext)] + [None] * (len(plaintext) - len(groups))
    rate = score_recovery(report.mapping, aligned, plaintext)
    return AttackReport(report.mapping, f"rank-match/{group_bits}", rate)


# ---------------------------------------------------------------- dictionary


@dataclass(frozen=True)
class SegmentationResult:
    words: list
    residue: str
    decisions: list = field(default_factory=list)


def load_wordlist(path=None):
    if path is None:
        text = fixtures.wordlist_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return frozenset(w.strip().lower() for w in text.split() if w.strip())


def greedy_segment(text, dictionary):
    """Grow a candidate one letter at a time and accept the first dictionary hit.

    No look-ahead.  ``decisions`` records ``(candidate, action)`` for every
    step; ``accept-ambiguous`` marks a hit that is also a prefix of a longer
    dictionary word, the point where this strategy may pick wrongly.
    """
    if not dictionary:
        raise ValueError("dictionary is empty")
    prefixes = {w[:i] for w in dictionary for i in range(1, len(w))}
    words, decisions = [], []
    current = ""
    for ch in text:
        current += ch
        low = current.lower()
        if low in dictionary:
            decisions.append((current, "accept-ambiguous" if low in prefixes else "accept"))
            words.append(current)
            current = ""
        else:
            decisions.append((current, "extend"))
    return SegmentationResult(words, current, decisions)


@dataclass(frozen=True)
class DPSegmentation:
    count: int
    parses: list
    residue: str

    @property
    def witness(self):
        return self.parses[0] if self.parses else None


def dp_segment(text, dictionary, limit=100):
    """Count every full segmentation of ``text`` and list up to ``limit`` of them.

    ``residue`` is empty when a full segmentation exists, otherwise the text
    after the longest prefix that can be segmented.
    """
    low = text.lower()
    n = len(low)
    longest = max((len(w) for w in dictionary), default=0)
    ways = [0] * (n + 1)
    ways[n] = 1
    for i in range(n - 1, -1, -1):
        ways[i] = sum(ways[j] for j in range(i + 1, min(n, i + longest) + 1)
                      if ways[j] and low[i:j] in dictionary)
    parses = []

    def walk(i, path):
        if len(parses) >= limit:
            return
        if i == n:
            parses.append(list(path))
            return
        for j in range(i + 1, min(n, i + longest) + 1):
            if ways[j] and low[i:j] in dictionary:
                path.append(text[i:j])
                walk(j, path)
                path.pop()

    if ways[0]:
        walk(0, [])
        return DPSegmentation(ways[0], parses, "")
    reach = {0}
    for i in range(n):
        if i in reach:
            reach.update(j for j in range(i + 1, min(n, i + longest) + 1) if low[i:j] in dictionary)
    return DPSegmentation(0, [], text[max(reach):])


# ---------------------------------------------------------------- experiment


@dataclass(frozen=True)
class ExperimentRun:
    seed: int
    recovery: dict  # case -> {group width -> rate}

    def best(self, case):
        return max(self.recovery[case].values())


@dataclass(frozen=True)
class ExperimentReport:
    letters: int
    widths: tuple
    runs: list

    def mean(self, case, width):
        return sum(r.recovery[case][width] for r in self.runs) / len(self.runs)

    def format(self):
        lines = [f"corpus letters: {self.letters}; runs: {len(self.runs)}",
                 "case          " + "".join(f"{w:>8}-bit" for w in self.widths)]
        for case in CASES:
            lines.append(f"{case:<14}" + "".join(f"{self.mean(case, w):>12.3f}" for w in self.widths))
        return "\n".join(lines)


def corpus_letters(text):
    return "".join(c for c in text.upper() if "A" <= c <= "Z")


def run_experiment(corpus, seeds=(0,), widths=GROUP_WIDTHS, reference=ENGLISH, p4_transforms=()):
    """Attack plain substitution, p3 and p4 ciphertexts of ``corpus``.

    The plaintext is the corpus reduced to capital letters.  Homophone
    groups are sized from the corpus itself, as a sender would.  Every case
    is attacked once per tally width.
    """
    plain = corpus_letters(corpus)
    if len(plain) < MIN_CORPUS_LETTERS:
        raise CorpusTooSmall(f"{len(plain)} letters; need at least {MIN_CORPUS_LETTERS}")
    ref_counts = tally(plain)
    runs = []
    for seed in seeds:
        bundles = {
            "substitution": KeyBundle("p2", identity_table(8),
                                      permutation=LetterPermutation.letters(seed)),
            "p3": make_bundle("p3", seed, reference=ref_counts),
            "p4": make_bundle("p4", seed, reference=ref_counts, transforms=p4_transforms),
        }
        recovery = {}
        for case, bundle in bundles.items():
            bits = encode_bits(plain, bundle)
            recovery[case] = {w: attack_bits(bits, w, plain, reference).recovery_rate for w in widths}
        runs.append(ExperimentRun(seed, recovery))
    return ExperimentReport(len(plain), tuple(widths), runs)
