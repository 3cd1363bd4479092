import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from windtalk import codebook
from windtalk.codebook import (
    CodeTable,
    count_tables,
    decode_symbols,
    encode_symbols,
    fibonacci_table,
    generate_table,
    identity_table,
)
from windtalk.errors import (
    CapacityExceeded,
    FormatError,
    UnalignedLength,
    UnknownCodeword,
    UnknownSymbol,
)
from windtalk.freq import tally


def falling_factorial(n, k):
    out = 1
    for i in range(k):
        out *= n - i
    return out


def test_count_tables_examples():
    assert count_tables(4, 3) == 3360
    assert count_tables(8, 0) == 1
    with pytest.raises(CapacityExceeded):
        count_tables(2, 5)


@pytest.mark.parametrize("width", range(1, 9))
def test_count_tables_matches_product(width):
    for k in range(0, (1 << width) + 1):
        assert count_tables(width, k) == falling_factorial(1 << width, k)


def test_generated_tables_are_injective_after_masking():
    for seed in range(20):
        t = generate_table(16, 256, seed, noise_bits=4)
        assert t.noise_bits == 4
        assert len({t.masked(c) for c in t.entries.values()}) == 256
        for sym, code in t.entries.items():
            assert t.symbol_for(code) == sym


def test_generate_table_is_seeded():
    assert generate_table(12, 40, 7, 2) == generate_table(12, 40, 7, 2)
    assert generate_table(12, 40, 7, 2).entries != generate_table(12, 40, 8, 2).entries


def test_generate_table_capacity():
    with pytest.raises(CapacityExceeded):
        generate_table(8, 256, 0, noise_bits=1)
    with pytest.raises(CapacityExceeded):
        generate_table(8, 2, 0, noise_bits=8)


def test_constructor_rejects_collision():
    with pytest.raises(ValueError):
        CodeTable(2, {0: "00", 1: "01"}, "01")


def test_identity_table():
    t = identity_table()
    assert t.entries[ord("A")] == "01000001"
    assert encode_symbols(b"A", t) == "01000001"


@given(st.binary(max_size=64), st.integers(0, 2**32))
@settings(max_examples=50)
def test_noise_round_trip(data, seed):
    t = generate_table(16, 256, 3, noise_bits=5)
    bits = encode_symbols(data, t, seed)
    assert len(bits) == 16 * len(data)
    assert decode_symbols(bits, t) == list(data)


def test_noise_bits_are_really_random():
    t = generate_table(16, 256, 3, noise_bits=5)
    assert encode_symbols(b"AAAA", t, 1) != encode_symbols(b"AAAA", t, 2)


def test_decode_errors():
    t = identity_table(8).__class__(3, {0: "000", 1: "001"}, "000")
    with pytest.raises(UnalignedLength):
        decode_symbols("0000", t)
    with pytest.raises(UnknownCodeword):
        decode_symbols("111", t)
    with pytest.raises(UnknownSymbol):
        encode_symbols([7], t)


def test_fibonacci_table_bits():
    t = fibonacci_table()
    assert t.width == 16
    assert t.entries[ord("A")] == "0000" + "000100010010"
    assert all("11" not in c[4:] for c in t.entries.values())


def test_fibonacci_code_breaks_frequency_alignment(corpus):
    # tallied in 8-bit groups, a 12-bit code no longer lines up with letters
    t = fibonacci_table()
    bits = encode_symbols(corpus.encode("ascii"), t, seed=1)
    groups = [bits[i:i + 8] for i in range(0, len(bits) - 7, 8)]
    cipher_top = tally(groups, "symbols").top()
    plain_top = format(ord(tally(corpus, "symbols").top()), "08b")
    assert cipher_top != plain_top


@pytest.mark.parametrize("table", [
    identity_table(),
    fibonacci_table(),
    generate_table(16, 256, 11, noise_bits=4),
    generate_table(10, 26, 2, noise_bits=0),
])
def test_wtkb1_round_trip(table):
    text = codebook.dumps(table)
    assert text.startswith("WTKB1\n")
    back = codebook.loads(text)
    assert back == table
    assert codebook.dumps(back) == text


@pytest.mark.parametrize("mutate, line", [
    (lambda ls: ["WTKB2"] + ls[1:], 1),
    (lambda ls: ls + [ls[-1]], None),
    (lambda ls: ls + ["colour=blue"], None),
    (lambda ls: ls[:1] + ["version=2"] + ls[2:], None),
    (lambda ls: ls + ["sym=0x41"], None),
    (lambda ls: ls + ["sym=0x100 code=00000000"], None),
])
def test_wtkb1_rejects(mutate, line):
    lines = codebook.dumps(generate_table(8, 4, 0)).splitlines()
    with pytest.raises(FormatError) as info:
        codebook.loads("\n".join(mutate(lines)))
    if line is not None:
        assert info.value.line == line


def test_wtkb1_reports_collision_line():
    text = "WTKB1\nversion=1\nwidth=2\nnoise_mask=01\nsym=0x00 code=00\nsym=0x01 code=01\n"
    with pytest.raises(FormatError) as info:
        codebook.loads(text)
    assert info.value.line == 6
    assert "line 6" in str(info.value)


def test_wtkb1_random_tables():
    rng = random.Random(0)
    for _ in range(30):
        w = rng.randrange(2, 17)
        noise = rng.randrange(0, w)
        syms = rng.randrange(1, min(256, 1 << (w - noise)) + 1)
        t = generate_table(w, syms, rng.randrange(2**63), noise)
        assert codebook.loads(codebook.dumps(t)) == t
