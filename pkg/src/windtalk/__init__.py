"""Alternate binary numeral systems, homophonic frequency normalization and
the attacks that test them."""

from windtalk._kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
