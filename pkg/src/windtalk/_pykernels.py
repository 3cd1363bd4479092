"""Pure-Python bit kernels.

Bit strings travel through the kernels as ASCII bytes of ``b"0"``/``b"1"``.
``_ckernels.pyx`` implements the same functions; ``windtalk._kernels``
picks whichever is importable.
"""

_REV = bytes(int(f"{b:08b}"[::-1], 2) for b in range(256))


def pack_bits(bits):
    n = len(bits)
    if n == 0:
        return b""
    pad = -n % 8
    return int(bits + b"0" * pad, 2).to_bytes((n + pad) // 8, "big")


def unpack_bits(data, nbits):
    if not data:
        return b""
    full = format(int.from_bytes(data, "big"), f"0{len(data) * 8}b").encode("ascii")
    return full[:nbits]


def splice(payload, keys, stride):
    out = bytearray()
    k = 0
    for pos in range(0, len(payload) - stride + 1, stride):
        out += payload[pos:pos + stride]
        out.append(keys[k])
        k += 1
    out += payload[k * stride:]
    return bytes(out)


def unsplice(data, stride, n):
    payload = bytearray()
    removed = bytearray()
    block = stride + 1
    full = n // stride
    for g in range(full):
        base = g * block
        payload += data[base:base + stride]
        removed.append(data[base + stride])
    payload += data[full * block:]
    return bytes(payload), bytes(removed)


def overlay(bits, mask, noise):
    width = len(mask)
    positions = [i for i in range(width) if mask[i] == 0x31]
    if not positions:
        return bytes(bits)
    out = bytearray(bits)
    k = 0
    for base in range(0, len(bits), width):
        for i in positions:
            out[base + i] = noise[k]
            k += 1
    return bytes(out)


def clear_masked(bits, mask):
    width = len(mask)
    positions = [i for i in range(width) if mask[i] == 0x31]
    if not positions:
        return bytes(bits)
    out = bytearray(bits)
    for base in range(0, len(bits), width):
        for i in positions:
            out[base + i] = 0x30
    return bytes(out)


def reverse_bytes_at(data, start, step):
    out = bytearray(data)
    for i in range(start, len(out), step):
        out[i] = _REV[out[i]]
    return bytes(out)
