"""Backend selection for the convolution kernels.

The compiled extension is preferred when importable; the numpy fallback is
always available. ``SPREADLANG_BACKEND=numpy`` forces the fallback (used by
the benchmark and by backend-parity tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    from . import _convkernel as _compiled
except ImportError:
    _compiled = None

if _compiled is not None and os.environ.get("SPREADLANG_BACKEND") != "numpy":
    _active = _compiled
    BACKEND = "cython"
else:
    _active = _kernels_py
    BACKEND = "numpy"

conv_forward = _active.conv_forward
conv_backward = _active.conv_backward


def available_backends() -> dict[str, object]:
    out = {"numpy": _kernels_py}
    if _compiled is not None:
        out["cython"] = _compiled
    return out
