"""Bundled sample data used by the tests, the CLI examples and the experiment."""

from importlib import resources

from windtalk.rng import SplitMix64

PANGRAM = "The quick brown fox jumped lazily over the sleepy dog."


def _read(name):
    return resources.files("windtalk").joinpath("data", name).read_text()


def abstract_counts():
    counts = {}
    for line in _read("letter_counts.txt").splitlines():
        if line and not line.startswith("#"):
            letter, n = line.split()
            counts[letter] = int(n)
    return counts


def abstract_text(seed=0):
    """A letters-only text with exactly the bundled abstract's letter counts, in seeded order."""
    letters = [k for k, n in abstract_counts().items() for _ in range(n)]
    return "".join(SplitMix64(seed).shuffle(letters))


def corpus_text():
    return _read("corpus.txt")


def wordlist_text():
    return _read("words.txt")
