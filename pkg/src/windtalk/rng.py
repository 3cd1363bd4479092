"""SplitMix64, the single PRNG behind every seeded choice in the package.

Using one fully specified generator keeps tables, noise fill and homophone
choices bit-identical across platforms and Python versions.
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z):
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def fingerprint(seed):
    """64-bit identifier of a seed that does not reveal the seed directly."""
    return mix64((seed ^ 0x5DEECE66D) & MASK64)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed=0):
        self.state = seed & MASK64

    def next(self):
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, n):
        """Unbiased integer in ``[0, n)`` by rejection."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = ((1 << 64) // n) * n
        while True:
            z = self.next()
            if z < limit:
                return z % n

    def bits(self, count):
        """``count`` random bits as a '0'/'1' string, one draw per bit (top bit)."""
        return "".join("1" if self.next() >> 63 else "0" for _ in range(count))

    def shuffle(self, items):
        """In-place Fisher-Yates, last index first."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def sample_distinct(self, population, k):
        """``k`` distinct values from ``range(population)`` by sparse partial Fisher-Yates."""
        swapped = {}
        out = []
        for i in range(k):
            j = i + self.below(population - i)
            out.append(swapped.get(j, j))
            swapped[j] = swapped.get(i, i)
        return out
