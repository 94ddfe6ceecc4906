"""Kernel backend selection.

The compiled extension (`twonons._speed`) is preferred when importable;
otherwise the pure-Python kernel is used.  Set TWONONS_PURE=1 to force the
pure backend (the test suite uses this to cross-check the two).
"""

import os

from . import _kernel as _pure

if os.environ.get("TWONONS_PURE") == "1":
    kernel = _pure
else:
    try:
        from . import _speed as kernel  # type: ignore[no-redef]
    except ImportError:
        kernel = _pure

BACKEND_NAME = kernel.BACKEND_NAME


def available_backends():
    """Return the importable kernel modules keyed by name."""
    backends = {"pure": _pure}
    try:
        from . import _speed

        backends["speed"] = _speed
    except ImportError:
        pass
    return backends
