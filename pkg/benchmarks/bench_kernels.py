"""Compare the compiled and pure-Python bit kernels.

    python benchmarks/bench_kernels.py [--bits N] [--repeat R]

Prints one line per kernel with the best time of each backend and the
speed-up.  The compiled backend is optional; without it only the Python
timings are shown.
"""

import argparse
import importlib
import random
import timeit

from windtalk import _pykernels

try:
    _ckernels = importlib.import_module("windtalk._ckernels")
except ImportError:
    _ckernels = None


def cases(n, rng):
    bits = "".join(rng.choice("01") for _ in range(n)).encode()
    width = 16
    mask = b"1001000000000100"
    noise = "".join(rng.choice("01") for _ in range(n // width * mask.count(b"1"))).encode()
    keys = bits[: n // 3]
    packed = _pykernels.pack_bits(bits)
    spliced = _pykernels.splice(bits, keys, 3)
    grouped = bits[: n - n % width]
    return {
        "pack_bits": lambda k: k.pack_bits(bits),
        "unpack_bits": lambda k: k.unpack_bits(packed, n),
        "splice": lambda k: k.splice(bits, keys, 3),
        "unsplice": lambda k: k.unsplice(spliced, 3, n),
        "overlay": lambda k: k.overlay(grouped, mask, noise),
        "clear_masked": lambda k: k.clear_masked(grouped, mask),
        "reverse_bytes_at": lambda k: k.reverse_bytes_at(packed, 1, 3),
    }


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bits", type=int, default=1 << 20)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    rng = random.Random(0)
    print(f"{'kernel':<18}{'python ms':>12}{'compiled ms':>14}{'speed-up':>10}")
    for name, call in cases(args.bits, rng).items():
        py = best(lambda: call(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:<18}{py * 1e3:>12.2f}{'-':>14}{'-':>10}")
            continue
        assert call(_pykernels) == call(_ckernels), name
        c = best(lambda: call(_ckernels), args.repeat)
        print(f"{name:<18}{py * 1e3:>12.2f}{c * 1e3:>14.2f}{py / c:>9.1f}x")


if __name__ == "__main__":
    main()
