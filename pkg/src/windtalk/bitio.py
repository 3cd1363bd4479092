"""Bit strings, MSB-first packing, grouping and the WTC1 ciphertext frame.

A bit string is a plain ``str`` over ``"0"``/``"1"``.  Its length is the bit
count; nothing here assumes byte alignment.  Bit order inside a byte is
most-significant-first everywhere.
"""

import struct

from windtalk import _kernels
from windtalk._pykernels import _REV
from windtalk.errors import FrameError, NonZeroPadding

FRAME_MAGIC = b"WTC1"
_HEADER = struct.Struct(">4sQ")

REVERSED_BYTES = _REV


def check_bits(bits):
    if bits.strip("01"):
        raise ValueError(f"not a bit string: {bits[:32]!r}")
    return bits


def pack(bits):
    """Pack ``bits`` MSB-first; return ``(data, pad_count)``."""
    check_bits(bits)
    return _kernels.pack_bits(bits.encode("ascii")), -len(bits) % 8


def unpack(data, bit_length):
    """Inverse of :func:`pack`.  Discarded tail bits must be zero."""
    data = bytes(data)
    if bit_length < 0 or bit_length > 8 * len(data):
        raise ValueError(f"bit length {bit_length} does not fit {len(data)} bytes")
    used = (bit_length + 7) // 8
    pad = -bit_length % 8
    if (pad and data[used - 1] & ((1 << pad) - 1)) or any(data[used:]):
        raise NonZeroPadding("padding bits beyond the bit length are not zero")
    return _kernels.unpack_bits(data[:used], bit_length).decode("ascii")


def reverse_byte_bits(b):
    """Mirror the bit order of one byte: bit i moves to bit 7 - i."""
    return REVERSED_BYTES[b]


def group(bits, k):
    """Split into consecutive ``k``-bit groups; return ``(groups, remainder)``."""
    if k < 1:
        raise ValueError("group width must be >= 1")
    whole = len(bits) - len(bits) % k
    return [bits[i:i + k] for i in range(0, whole, k)], bits[whole:]


def write_frame(bits):
    data, _ = pack(bits)
    return _HEADER.pack(FRAME_MAGIC, len(bits)) + data


def read_frame(frame):
    """Return the payload bit string of a WTC1 frame."""
    frame = bytes(frame)
    if len(frame) < _HEADER.size:
        raise FrameError("frame shorter than its header")
    magic, nbits = _HEADER.unpack_from(frame)
    if magic != FRAME_MAGIC:
        raise FrameError(f"bad frame magic {magic!r}")
    payload = frame[_HEADER.size:]
    if len(payload) != (nbits + 7) // 8:
        raise FrameError(f"payload holds {len(payload)} bytes, header says {nbits} bits")
    return unpack(payload, nbits)
