"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``ORCYCLES_PURE=1`` to force the pure-Python kernels.
"""

import os

from . import _pykernels

BACKEND = "python"
kernels = _pykernels

if os.environ.get("ORCYCLES_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        pass
    else:
        kernels = _compiled
        BACKEND = "cython"

reverse_bfs = kernels.reverse_bfs
find_path = kernels.find_path
