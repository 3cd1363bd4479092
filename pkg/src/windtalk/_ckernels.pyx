# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_pykernels``; same signatures."""

from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING

cdef unsigned char _REV[256]
cdef int _b, _i, _r
for _b in range(256):
    _r = 0
    for _i in range(8):
        if _b & (1 << _i):
            _r |= 1 << (7 - _i)
    _REV[_b] = _r


def pack_bits(const unsigned char[:] bits):
    cdef Py_ssize_t n = bits.shape[0]
    cdef Py_ssize_t full = n // 8
    out = PyBytes_FromStringAndSize(NULL, (n + 7) // 8)
    cdef unsigned char *o = <unsigned char *> PyBytes_AS_STRING(out)
    cdef const unsigned char *b = &bits[0] if n else NULL
    cdef Py_ssize_t i, j
    cdef unsigned char acc
    # '0' is 0x30 and '1' is 0x31, so the low bit is the bit value
    for i in range(full):
        acc = 0
        for j in range(8):
            acc = (acc << 1) | (b[8 * i + j] & 1)
        o[i] = acc
    if n % 8:
        acc = 0
        for j in range(8):
            acc <<= 1
            if 8 * full + j < n:
                acc |= b[8 * full + j] & 1
        o[full] = acc
    return out


def unpack_bits(const unsigned char[:] data, Py_ssize_t nbits):
    out = PyBytes_FromStringAndSize(NULL, nbits)
    cdef unsigned char *o = <unsigned char *> PyBytes_AS_STRING(out)
    cdef const unsigned char *d = &data[0] if data.shape[0] else NULL
    cdef Py_ssize_t i
    cdef int j
    cdef unsigned char byte
    for i in range(nbits // 8):
        byte = d[i]
        for j in range(8):
            o[8 * i + j] = 48 + ((byte >> (7 - j)) & 1)
    for i in range(nbits - nbits % 8, nbits):
        o[i] = 48 + ((d[i >> 3] >> (7 - (i & 7))) & 1)
    return out


def splice(const unsigned char[:] payload, const unsigned char[:] keys, Py_ssize_t stride):
    cdef Py_ssize_t n = payload.shape[0]
    cdef Py_ssize_t total = n + n // stride
    out = PyBytes_FromStringAndSize(NULL, total)
    cdef unsigned char *o = <unsigned char *> PyBytes_AS_STRING(out)
    cdef Py_ssize_t i, j = 0, k = 0, run = 0
    for i in range(n):
        o[j] = payload[i]
        j += 1
        run += 1
        if run == stride:
            o[j] = keys[k]
            j += 1
            k += 1
            run = 0
    return out


def unsplice(const unsigned char[:] data, Py_ssize_t stride, Py_ssize_t n):
    cdef Py_ssize_t full = n // stride
    payload = PyBytes_FromStringAndSize(NULL, n)
    removed = PyBytes_FromStringAndSize(NULL, full)
    cdef unsigned char *p = <unsigned char *> PyBytes_AS_STRING(payload)
    cdef unsigned char *r = <unsigned char *> PyBytes_AS_STRING(removed)
    cdef Py_ssize_t i, j = 0, k = 0, run = 0
    cdef Py_ssize_t total = n + full
    for i in range(total):
        if run == stride:
            r[k] = data[i]
            k += 1
            run = 0
        else:
            p[j] = data[i]
            j += 1
            run += 1
    return payload, removed


def overlay(const unsigned char[:] bits, const unsigned char[:] mask, const unsigned char[:] noise):
    cdef Py_ssize_t n = bits.shape[0]
    cdef Py_ssize_t width = mask.shape[0]
    out = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char *o = <unsigned char *> PyBytes_AS_STRING(out)
    cdef Py_ssize_t i, k = 0
    for i in range(n):
        if mask[i % width] == 49:
            o[i] = noise[k]
            k += 1
        else:
            o[i] = bits[i]
    return out


def clear_masked(const unsigned char[:] bits, const unsigned char[:] mask):
    cdef Py_ssize_t n = bits.shape[0]
    cdef Py_ssize_t width = mask.shape[0]
    out = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char *o = <unsigned char *> PyBytes_AS_STRING(out)
    cdef Py_ssize_t i
    for i in range(n):
        o[i] = 48 if mask[i % width] == 49 else bits[i]
    return out


def reverse_bytes_at(const unsigned char[:] data, Py_ssize_t start, Py_ssize_t step):
    cdef Py_ssize_t n = data.shape[0]
    out = PyBytes_FromStringAndSize(NULL, n)
    cdef unsigned char *o = <unsigned char *> PyBytes_AS_STRING(out)
    cdef Py_ssize_t i
    for i in range(n):
        o[i] = data[i]
    i = start
    while i < n:
        o[i] = _REV[o[i]]
        i += step
    return out
