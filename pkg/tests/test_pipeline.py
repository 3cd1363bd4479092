import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from windtalk import pipeline
from windtalk.codebook import identity_table
from windtalk.errors import FormatError, UnknownLetter, UnknownSymbol
from windtalk.pipeline import (
    KeyBundle,
    decode,
    encode,
    encode_bits,
    make_bundle,
    parse_bundle,
    serialize_bundle,
)
from windtalk.transforms import BoustroParams, LetterPermutation, SpliceParams

ascii_text = st.text(alphabet=st.characters(min_codepoint=0, max_codepoint=127), max_size=300)
CHAIN = (BoustroParams(1, 2), SpliceParams(3, 5, True))


def bundles(seed):
    return [
        make_bundle("p1", seed),
        make_bundle("p2", seed),
        make_bundle("p3", seed),
        make_bundle("p4", seed, transforms=CHAIN),
        make_bundle("p4", seed, rule="formula", width=12, noise_bits=2, homophone_mode="uniform"),
    ]


def expected(text, bundle):
    if bundle.strip_spaces:
        text = text.replace(" ", "")
    return text.upper() if bundle.casefold else text


@pytest.mark.parametrize("seed", [0, 1, 2**63 + 5])
@given(text=ascii_text)
@settings(max_examples=25, deadline=None)
def test_round_trip(seed, text):
    for b in bundles(seed):
        assert decode(encode(text, b), b) == expected(text, b)


def test_frames_are_deterministic(pangram):
    for b in bundles(4):
        assert encode(pangram, b) == encode(pangram, b)
    assert encode(pangram, make_bundle("p4", 4)) != encode(pangram, make_bundle("p4", 5))


def test_p1_identity_is_ascii(pangram):
    b = KeyBundle("p1", identity_table())
    bits = encode_bits("A", b)
    assert bits == "01000001"


def test_p3_flattens_letter_groups(abstract):
    b = make_bundle("p3", 0)
    bits = encode_bits(abstract, b)
    assert len(bits) == 8 * len(abstract)


def test_strip_spaces(pangram):
    b = make_bundle("p2", 0, strip_spaces=True)
    assert decode(encode(pangram, b), b) == pangram.replace(" ", "")


def test_process_checks(pangram):
    with pytest.raises(FormatError):
        pipeline.encode_p1(pangram, make_bundle("p2", 0))
    assert pipeline.encode_p2(pangram, make_bundle("p2", 0))


def test_bundle_validation():
    h = make_bundle("p3", 0).homophones
    with pytest.raises(FormatError):
        KeyBundle("p4", identity_table(), None, LetterPermutation.identity())
    with pytest.raises(FormatError):
        KeyBundle("p1", identity_table(), transforms=(BoustroParams(),))
    with pytest.raises(FormatError):
        KeyBundle("p5", identity_table())
    with pytest.raises(FormatError):
        KeyBundle("p3", None, h, homophone_mode="zipf")


def test_plaintext_errors():
    with pytest.raises(UnknownSymbol):
        encode("café", make_bundle("p1", 0))
    b = make_bundle("p3", 0, casefold=False)
    with pytest.raises(UnknownLetter):
        encode("lower", b)


@pytest.mark.parametrize("make", [
    lambda: make_bundle("p1", 3),
    lambda: make_bundle("p2", 3, strip_spaces=True),
    lambda: make_bundle("p3", 3, homophone_mode="round-robin"),
    lambda: make_bundle("p4", 3, transforms=CHAIN),
])
def test_bundle_text_round_trip(make, pangram):
    b = make()
    text = serialize_bundle(b)
    back = parse_bundle(text)
    assert back == b
    assert serialize_bundle(back) == text
    assert decode(encode(pangram, b), back) == expected(pangram, b)


def _p4_lines():
    return serialize_bundle(make_bundle("p4", 3, transforms=CHAIN)).splitlines()


def test_parse_rejects_duplicate_group():
    lines = _p4_lines()
    group = next(i for i, line in enumerate(lines) if line.startswith("group=E:"))
    lines.append(lines[group])
    with pytest.raises(FormatError) as info:
        parse_bundle("\n".join(lines))
    assert info.value.line == len(lines)
    assert "duplicate group" in str(info.value)


def test_parse_rejects_p4_without_homophones():
    lines = [line for line in _p4_lines() if not line.startswith("group=")]
    with pytest.raises(FormatError):
        parse_bundle("\n".join(lines))


@pytest.mark.parametrize("bad", [
    "colour=red",
    "seed.noise=7",
    "casefold=2",
    "transform=boustro start=1",
    "transform=rot13",
    "perm=1",
    "process=p1",
])
def test_parse_rejects_bad_lines(bad):
    lines = _p4_lines() + [bad]
    with pytest.raises(FormatError) as info:
        parse_bundle("\n".join(lines))
    assert info.value.line == len(lines)


def test_parse_rejects_missing_header():
    with pytest.raises(FormatError):
        parse_bundle("version=1\nprocess=p1\n")


def test_p1_with_zeckendorf_table():
    from windtalk.codebook import fibonacci_table

    b = KeyBundle("p1", fibonacci_table(), seeds={"noise": 3})
    bits = encode_bits("A", b)
    assert len(bits) == 16
    assert bits[4:] == "000100010010"
    assert decode(encode("A", b), b) == "A"


def test_empty_text_gives_empty_frame():
    for b in bundles(0):
        frame = encode("", b)
        assert frame == b"WTC1" + bytes(8)
        assert decode(frame, b) == ""


def test_identity_permutation_reduces_p2_to_p1(pangram):
    p1 = make_bundle("p1", 6)
    p2 = KeyBundle("p2", p1.code_table, permutation=LetterPermutation.identity(), seeds=p1.seeds)
    assert encode(pangram, p2) == encode(pangram, p1)


def test_swap_permutation_round_trip_and_wrong_key(pangram):
    from windtalk.freq import tally

    right = KeyBundle("p2", make_bundle("p1", 0).code_table, permutation=LetterPermutation.swap("e", "q"))
    frame = encode(pangram, right)
    assert decode(frame, right) == pangram
    wrong = KeyBundle("p2", right.code_table, permutation=LetterPermutation.letters(9))
    assert tally(decode(frame, wrong)).counts != tally(pangram).counts
