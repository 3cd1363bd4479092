import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from windtalk.bitio import (
    group,
    pack,
    read_frame,
    reverse_byte_bits,
    unpack,
    write_frame,
)
from windtalk.errors import FrameError, NonZeroPadding

bitstrings = st.text(alphabet="01", max_size=300)


def reverse_oracle(b):
    out = 0
    for i in range(8):
        if b >> i & 1:
            out |= 1 << (7 - i)
    return out


@pytest.mark.parametrize("bits, data, pad", [
    ("", b"", 0),
    ("10110101", b"\xb5", 0),
    ("101", b"\xa0", 5),
])
def test_pack_examples(bits, data, pad):
    assert pack(bits) == (data, pad)
    assert unpack(data, len(bits)) == bits


def test_unpack_rejects_dirty_padding():
    with pytest.raises(NonZeroPadding):
        unpack(b"\xa1", 3)
    with pytest.raises(NonZeroPadding):
        unpack(b"\xa0\x01", 3)
    assert unpack(b"\xa0\x00", 3) == "101"


def test_unpack_bit_length_too_large():
    with pytest.raises(ValueError):
        unpack(b"\x00", 9)


@given(bitstrings)
def test_pack_round_trip(bits):
    data, pad = pack(bits)
    assert 0 <= pad <= 7
    assert len(data) * 8 - pad == len(bits)
    assert unpack(data, len(bits)) == bits


def test_reverse_byte_bits_matches_loop_oracle():
    assert reverse_byte_bits(0x01) == 0x80
    assert reverse_byte_bits(0x00) == 0x00
    assert reverse_byte_bits(0xF0) == 0x0F
    for b in range(256):
        assert reverse_byte_bits(b) == reverse_oracle(b)
        assert reverse_byte_bits(reverse_byte_bits(b)) == b


@pytest.mark.parametrize("bits, k, groups, rest", [
    ("101101", 3, ["101", "101"], ""),
    ("10110", 2, ["10", "11"], "0"),
    ("", 12, [], ""),
])
def test_group_examples(bits, k, groups, rest):
    assert group(bits, k) == (groups, rest)


def test_group_concatenation_reproduces_input():
    rng = random.Random(5)
    for _ in range(40):
        s = "".join(rng.choice("01") for _ in range(rng.randrange(10_001)))
        for k in range(1, 17):
            groups, rest = group(s, k)
            assert all(len(g) == k for g in groups)
            assert len(rest) < k
            assert "".join(groups) + rest == s


def test_group_rejects_zero_width():
    with pytest.raises(ValueError):
        group("1", 0)


@given(bitstrings)
def test_frame_round_trip(bits):
    frame = write_frame(bits)
    assert frame[:4] == b"WTC1"
    assert int.from_bytes(frame[4:12], "big") == len(bits)
    assert read_frame(frame) == bits


@pytest.mark.parametrize("frame", [b"WTC", b"XXXX" + bytes(8), b"WTC1" + (9).to_bytes(8, "big") + b"\x00"])
def test_bad_frames(frame):
    with pytest.raises(FrameError):
        read_frame(frame)


def test_frame_with_dirty_padding():
    with pytest.raises(NonZeroPadding):
        read_frame(b"WTC1" + (3).to_bytes(8, "big") + b"\xa1")


def test_pack_rejects_non_bits():
    with pytest.raises(ValueError):
        pack("10a")
