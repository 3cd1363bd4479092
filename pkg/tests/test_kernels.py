"""Both kernel backends must agree with each other and with simple oracles."""

import importlib

import pytest
from hypothesis import given
from hypothesis import strategies as st

from windtalk import _pykernels

try:
    _ckernels = importlib.import_module("windtalk._ckernels")
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels else [])
bits = st.text(alphabet="01", max_size=200).map(str.encode)


@pytest.fixture(scope="module", params=BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def k(request):
    return request.param


def test_selected_backend():
    from windtalk import _kernels

    assert _kernels.BACKEND == ("cython" if _ckernels else "python")


@given(b=bits)
def test_pack_unpack(k, b):
    data = k.pack_bits(b)
    assert data == int(b + b"0" * (-len(b) % 8) or b"0", 2).to_bytes(len(data), "big")
    assert k.unpack_bits(data, len(b)) == b


@given(b=bits, stride=st.integers(1, 9), data=st.data())
def test_splice_unsplice(k, b, stride, data):
    keys = data.draw(st.text(alphabet="01", min_size=len(b) // stride, max_size=len(b) // stride)).encode()
    out = k.splice(b, keys, stride)
    assert len(out) == len(b) + len(b) // stride
    # oracle: every (stride+1)-th output bit is the next key bit
    assert out[stride::stride + 1] == keys
    assert k.unsplice(out, stride, len(b)) == (b, keys)


@given(data=st.data(), width=st.integers(1, 16))
def test_overlay_and_clear(k, data, width):
    mask = data.draw(st.text(alphabet="01", min_size=width, max_size=width)).encode()
    groups = data.draw(st.integers(0, 12))
    b = data.draw(st.text(alphabet="01", min_size=width * groups, max_size=width * groups)).encode()
    noisy = mask.count(b"1") * groups
    noise = data.draw(st.text(alphabet="01", min_size=noisy, max_size=noisy)).encode()
    over = k.overlay(b, mask, noise)
    for i in range(len(b)):
        if mask[i % width] == 0x30:
            assert over[i] == b[i]
    assert bytes(c for i, c in enumerate(over) if mask[i % width] == 0x31) == noise
    cleared = k.clear_masked(over, mask)
    assert cleared == k.clear_masked(b, mask)


@given(data=st.binary(max_size=64), start=st.integers(0, 10), step=st.integers(1, 5))
def test_reverse_bytes_at(k, data, start, step):
    out = k.reverse_bytes_at(data, start, step)
    for i, (a, b) in enumerate(zip(data, out)):
        want = int(f"{a:08b}"[::-1], 2) if i >= start and (i - start) % step == 0 else a
        assert b == want


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
@given(b=bits, stride=st.integers(1, 9))
def test_backends_agree(b, stride):
    keys = (b"10" * len(b))[: len(b) // stride]
    assert _pykernels.splice(b, keys, stride) == _ckernels.splice(b, keys, stride)
    assert _pykernels.pack_bits(b) == _ckernels.pack_bits(b)
