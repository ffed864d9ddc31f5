"""Kernel backend selection.

At import time the compiled extension is preferred when present; setting
``DUNKLOPS_PURE=1`` in the environment forces the pure-Python kernels. Either
way the rest of the package sees one module object, ``K``, with the function
surface documented in `_kernels`.
"""

import os

from . import _kernels as _pure

if os.environ.get("DUNKLOPS_PURE") == "1":
    K = _pure
    BACKEND = "pure"
else:
    try:
        from . import _kernels_cy as _compiled

        K = _compiled
        BACKEND = "compiled"
    except ImportError:
        K = _pure
        BACKEND = "pure"

PURE = _pure
