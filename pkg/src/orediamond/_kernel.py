"""Kernel backend selection.

Prefers the compiled extension, falls back to pure Python.  Set
OREDIAMOND_KERNEL=py or =c to force a backend (=c raises if the
extension is missing).
"""

import os

_requested = os.environ.get("OREDIAMOND_KERNEL", "auto")

if _requested == "py":
    from . import _kernel_py as _impl
elif _requested == "c":
    from . import _kernel_c as _impl  # type: ignore[attr-defined]
elif _requested == "auto":
    try:
        from . import _kernel_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl
else:
    raise RuntimeError(f"unknown OREDIAMOND_KERNEL value {_requested!r}")

BACKEND = _impl.BACKEND
kadd = _impl.kadd
ksub = _impl.ksub
kneg = _impl.kneg
kscale = _impl.kscale
kmul = _impl.kmul
kmul_term = _impl.kmul_term
