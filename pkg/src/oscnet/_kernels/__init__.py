"""Kernel backend selection.

The compiled Cython kernel is used when the extension built; otherwise the
numpy reference implementation takes over. Set OSCNET_KERNEL=reference or
OSCNET_KERNEL=compiled to force a backend (the latter raises if the
extension is missing).
"""

import os

from . import reference

_choice = os.environ.get("OSCNET_KERNEL", "").strip().lower()
if _choice not in ("", "reference", "compiled"):
    raise ImportError(f"OSCNET_KERNEL must be 'reference' or 'compiled', got {_choice!r}")

if _choice == "reference":
    BACKEND = "reference"
    reduced_window_covariances = reference.reduced_window_covariances
else:
    try:
        from . import _compiled
    except ImportError:
        _compiled = None
    if _compiled is not None:
        BACKEND = "compiled"
        reduced_window_covariances = _compiled.reduced_window_covariances
    elif _choice == "compiled":
        raise ImportError("OSCNET_KERNEL=compiled but the extension is not built")
    else:
        BACKEND = "reference"
        reduced_window_covariances = reference.reduced_window_covariances
