"""Select the kernel implementation at import time.

The compiled extension is preferred; set ``GAUSSPHI_PURE_PYTHON=1`` to force
the pure-Python kernels (used by the benchmark and the backend parity tests).
"""

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

if _compiled is not None and not os.environ.get("GAUSSPHI_PURE_PYTHON"):
    kernels = _compiled
else:
    kernels = _kernels_py

BACKEND = kernels.NAME


def available_backends():
    """Mapping of backend name to kernel module, compiled first when present."""
    found = {}
    if _compiled is not None:
        found[_compiled.NAME] = _compiled
    found[_kernels_py.NAME] = _kernels_py
    return found
