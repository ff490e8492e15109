"""Selects the compiled kernels when available, else the pure-Python ones.

Set ``OTARRANGE_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _fallback

BACKEND = "python"
if not os.environ.get("OTARRANGE_PURE_PYTHON"):
    try:
        from . import _speedups as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _fallback
else:
    _impl = _fallback

bareiss_rank = _impl.bareiss_rank
echelon_insert = _impl.echelon_insert
nbc_faces = _impl.nbc_faces
first_line_closed_nonflat = _impl.first_line_closed_nonflat

__all__ = [
    "BACKEND",
    "bareiss_rank",
    "echelon_insert",
    "nbc_faces",
    "first_line_closed_nonflat",
]
