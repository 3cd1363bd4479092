"""Select the compiled kernels when the extension was built, else pure Python."""

try:
    from windtalk import _ckernels as impl
    BACKEND = "cython"
except ImportError:  # extension not built
    from windtalk import _pykernels as impl
    BACKEND = "python"

pack_bits = impl.pack_bits
unpack_bits = impl.unpack_bits
splice = impl.splice
unsplice = impl.unsplice
overlay = impl.overlay
clear_masked = impl.clear_masked
reverse_bytes_at = impl.reverse_bytes_at
