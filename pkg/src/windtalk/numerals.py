"""Alternate binary numeral systems.

All digit strings are written big-endian: the largest weight (or the
highest power of phi) is leftmost.  Weight vectors are tuples listed
smallest weight first, so ``bits[i]`` pairs with ``weights[-1 - i]``.
"""

from dataclasses import dataclass

from windtalk.errors import (
    Ambiguous,
    DigitOutOfRange,
    LengthMismatch,
    NoParse,
    NotInteger,
    RepresentationOverflow,
    Unrepresentable,
)

# ---------------------------------------------------------------- Fibonacci


def fibonacci(k):
    """F(k) with F(0)=0, F(1)=1, extended to negative k by F(-k) = (-1)**(k+1) F(k)."""
    if k < 0:
        f = fibonacci(-k)
        return f if k % 2 else -f
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def fib_weights(width, classic=False):
    """Fibonacci weights, smallest first.

    The canonical vector is ``(1, 2, 3, 5, 8, ...)``.  ``classic`` keeps
    both unit Fibonacci numbers, ``(1, 1, 2, 3, 5, ...)``, which gives some
    values two spellings that differ only in which 1 is set.
    """
    if width < 1:
        raise ValueError("width must be >= 1")
    start = 1 if classic else 2
    weights = []
    a, b = fibonacci(start), fibonacci(start + 1)
    for _ in range(width):
        weights.append(a)
        a, b = b, a + b
    return tuple(weights)


def zeckendorf_encode(n, width):
    """Greedy standard-form Fibonacci code of ``n`` in ``width`` digits."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    weights = fib_weights(width)
    if width and n >= weights[-1] + (weights[-2] if width > 1 else 1):
        # the next Fibonacci number; greedy would otherwise emit "11"
        raise RepresentationOverflow(f"value needs more than {width} Fibonacci digits")
    digits = []
    for w in reversed(weights):
        if w <= n:
            digits.append("1")
            n -= w
        else:
            digits.append("0")
    if n:
        raise RepresentationOverflow(f"value needs more than {width} Fibonacci digits")
    return "".join(digits)


def weighted_decode(bits, weights):
    if len(bits) != len(weights):
        raise LengthMismatch(f"{len(bits)} digits for {len(weights)} weights")
    return sum(w for b, w in zip(bits, reversed(weights)) if b == "1")


def enumerate_representations(n, weights, limit=None):
    """Every bit pattern over ``weights`` that decodes to ``n``, in lexicographic order.

    Depth-first from the leftmost (largest) weight, trying ``0`` before ``1``,
    with a remaining-capacity bound so dead branches are cut early.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be >= 1")
    big_first = list(reversed(weights))
    width = len(big_first)
    # capacity[i] = sum of big_first[i:]
    capacity = [0] * (width + 1)
    for i in range(width - 1, -1, -1):
        capacity[i] = capacity[i + 1] + big_first[i]
    found = []
    digits = []

    def walk(i, rest):
        if limit is not None and len(found) >= limit:
            return
        if i == width:
            if rest == 0:
                found.append("".join(digits))
            return
        if rest > capacity[i]:
            return
        digits.append("0")
        walk(i + 1, rest)
        digits.pop()
        if big_first[i] <= rest:
            digits.append("1")
            walk(i + 1, rest - big_first[i])
            digits.pop()

    walk(0, n)
    return found


# ---------------------------------------------------------------- phinary
#
# Values of Z[phi] are pairs (a, b) meaning a + b*phi.  phi**k equals
# F(k-1) + F(k)*phi for every integer k, so no floating point is involved.


def phi_power(k):
    return (fibonacci(k - 1), fibonacci(k))


def _nonnegative(a, b):
    # sign of a + b*phi = sign of (2a + b) + b*sqrt(5)
    p, q = 2 * a + b, b
    if p >= 0 and q >= 0:
        return True
    if p < 0 and q < 0:
        return False
    if p >= 0:
        return p * p >= 5 * q * q
    return 5 * q * q >= p * p


@dataclass(frozen=True)
class PhinaryNumeral:
    integer_digits: str
    fraction_digits: str = ""

    @classmethod
    def parse(cls, text):
        whole, _, frac = text.partition(".")
        if (whole + frac).strip("01") or not whole:
            raise DigitOutOfRange(f"not a phinary numeral: {text!r}")
        return cls(whole, frac)

    def __str__(self):
        if self.fraction_digits:
            return f"{self.integer_digits}.{self.fraction_digits}"
        return self.integer_digits

    def value(self):
        """Exact value as the pair ``(a, b)`` with value ``a + b*phi``."""
        a = b = 0
        top = len(self.integer_digits) - 1
        for i, d in enumerate(self.integer_digits + self.fraction_digits):
            if d == "1":
                pa, pb = phi_power(top - i)
                a += pa
                b += pb
        return a, b

    def is_standard(self):
        return "11" not in self.integer_digits + self.fraction_digits


def phinary_encode(n):
    """Standard-form base-phi numeral of the integer ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return PhinaryNumeral("0")
    k = 0
    while _nonnegative(n - phi_power(k + 1)[0], -phi_power(k + 1)[1]):
        k += 1
    top = k
    ra, rb = n, 0
    ones = []
    # greedy: largest power of phi not exceeding the remainder
    while ra or rb:
        pa, pb = phi_power(k)
        if _nonnegative(ra - pa, rb - pb):
            ones.append(k)
            ra, rb = ra - pa, rb - pb
        k -= 1
    low = min(ones)
    digits = "".join("1" if e in ones else "0" for e in range(top, min(low, 0) - 1, -1))
    split = top + 1
    return PhinaryNumeral(digits[:split], digits[split:])


def phinary_decode(numeral):
    if isinstance(numeral, str):
        numeral = PhinaryNumeral.parse(numeral)
    a, b = numeral.value()
    if b:
        raise NotInteger((a, b))
    return a


# ---------------------------------------------------------------- prime sums


def prime_weights(width):
    """``(1, 2, 3, 5, 7, 11, ...)``: one followed by the primes, ``width`` long."""
    weights = [1]
    candidate = 2
    while len(weights) < width:
        if all(candidate % p for p in weights[1:] if p * p <= candidate):
            weights.append(candidate)
        candidate += 1
    return tuple(weights[:width])


def _prime_weights_below(limit):
    weights = [1]
    sieve = bytearray([1]) * max(limit, 2)
    for p in range(2, limit):
        if sieve[p]:
            weights.append(p)
            sieve[p * p::p] = bytes(len(range(p * p, limit, p)))
    return weights


def prime_encode(n):
    """Distinct weights from ``1, 2, 3, 5, 7, ...`` that sum to ``n``, largest first.

    Only weights strictly below ``n`` are used, except for 1 and 2, which have
    no such decomposition and stand for themselves.  The search is greedy
    (largest weight first) and backtracks when the remainder cannot be met.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        return (n,)
    pool = _prime_weights_below(n)
    prefix = [0]
    for w in pool:
        prefix.append(prefix[-1] + w)
    chosen = []

    def search(top, rest):
        # pool[:top] are the weights still allowed
        if rest == 0:
            return True
        if prefix[top] < rest:
            return False
        for i in range(top - 1, -1, -1):
            w = pool[i]
            if w > rest:
                continue
            if prefix[i + 1] < rest:
                return False
            chosen.append(w)
            if search(i, rest - w):
                return True
            chosen.pop()
        return False

    if not search(len(pool), n):
        raise Unrepresentable(f"{n} is not a sum of distinct smaller primes and 1")
    return tuple(chosen)


def prime_encode_bits(n, width=None):
    parts = set(prime_encode(n))
    needed = _prime_weights_below(max(parts) + 1)
    if width is None:
        width = len(needed)
    elif width < len(needed):
        raise RepresentationOverflow(f"{n} needs {len(needed)} prime digits")
    weights = prime_weights(width)
    return "".join("1" if w in parts else "0" for w in reversed(weights))


# ---------------------------------------------------------------- positional


_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def digits_value(digits, base):
    """Positional value of ``digits`` read in ``base``.

    ``digits`` is either a string (0-9 then a-z, case-insensitive) or a
    sequence of integer digits, which allows bases beyond 36.
    """
    if base < 2:
        raise DigitOutOfRange("base must be >= 2")
    if isinstance(digits, str):
        try:
            values = [_DIGITS.index(c) for c in digits.lower()]
        except ValueError:
            raise DigitOutOfRange(f"invalid digit in {digits!r}") from None
    else:
        values = list(digits)
    if not values:
        raise DigitOutOfRange("empty digit string")
    total = 0
    for d in values:
        if not 0 <= d < base:
            raise DigitOutOfRange(f"digit {d} out of range for base {base}")
        total = total * base + d
    return total


# ---------------------------------------------------------------- golden sequence


def golden_word(k):
    """S_k: S_1 = "1", S_2 = "10", S_k = S_(k-1) + S_(k-2)."""
    if k < 1:
        raise ValueError("index must be >= 1")
    prev, cur = "1", "10"
    if k == 1:
        return prev
    for _ in range(k - 2):
        prev, cur = cur, cur + prev
    return cur


def golden_sequence(m):
    """First ``m`` symbols of the fixed point of 1 -> 10, 0 -> 1."""
    word = "1"
    while len(word) < m:
        word = "".join("10" if c == "1" else "1" for c in word)
    return word[:m]


def golden_numeral_encode(indices):
    return "".join(golden_word(k) for k in indices)


def golden_numeral_parses(bits, limit=1000):
    """All ways to split ``bits`` into golden words, fewest words first."""
    words = []
    k = 1
    while True:
        w = golden_word(k)
        if len(w) > max(len(bits), 1):
            break
        words.append((k, w))
        k += 1
    parses = []
    path = []

    def walk(pos):
        if len(parses) >= limit:
            return
        if pos == len(bits):
            parses.append(list(path))
            return
        for k, w in words:
            if bits.startswith(w, pos):
                path.append(k)
                walk(pos + len(w))
                path.pop()

    if bits:
        walk(0)
    parses.sort(key=lambda p: (len(p), [-k for k in p]))
    return parses


def golden_numeral_decode(bits, limit=1000):
    """Unique parse of ``bits`` into golden-word indices.

    The code is not uniquely decodable ("101" is both S_3 and S_2 S_1), so
    this raises :class:`Ambiguous` carrying every parse when more than one
    exists, and :class:`NoParse` when none does.
    """
    parses = golden_numeral_parses(bits, limit)
    if not parses:
        raise NoParse(f"{bits!r} is not a concatenation of golden words")
    if len(parses) > 1:
        raise Ambiguous(parses)
    return parses[0]
