"""Backend selection for the exhaustive-search kernels.

The compiled extension is used when it was built and importable; set
``PQSEQ_PURE=1`` to force the pure-Python implementation.
"""
from __future__ import annotations

import os
from functools import lru_cache

from . import _pykernels as python_backend
from .polyring import binom_mod

try:
    if os.environ.get("PQSEQ_PURE", "") not in ("", "0"):
        raise ImportError("pure-Python backend requested")
    from . import _ckernels as compiled_backend
except ImportError:
    compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "compiled" if compiled_backend is not None else "python"


@lru_cache(maxsize=16)
def binom_table(T: int, q: int) -> tuple[int, ...]:
    """Flat C(n, j) mod q table, row j major, for 0 <= j, n < T."""
    return tuple(binom_mod(n, j, q) for j in range(T) for n in range(T))
