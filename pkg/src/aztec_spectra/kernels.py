"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``AZTEC_SPECTRA_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _purepy

BACKEND = "python"

if os.environ.get("AZTEC_SPECTRA_PURE_PYTHON", "") not in ("", "0"):
    _impl = _purepy
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _purepy

berkowitz = _impl.berkowitz
bareiss_det = _impl.bareiss_det
det_gf2 = _impl.det_gf2
tree_profiles = _impl.tree_profiles

__all__ = ["BACKEND", "berkowitz", "bareiss_det", "det_gf2", "tree_profiles"]
