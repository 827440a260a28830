"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
module is the fallback.  ``CMLCIPHER_BACKEND`` overrides the choice:

    auto      compiled if available, else pure Python (default)
    compiled  require the extension, fail loudly if it is missing
    python    force the pure-Python kernels (useful for benchmarks/tests)

Both backends are bit-compatible by construction; ``tests/test_backends.py``
asserts it.
"""

import os

from . import _kernels_py

_CHOICE = os.environ.get("CMLCIPHER_BACKEND", "auto").strip().lower()

if _CHOICE in ("auto", ""):
    try:
        from . import _kernels as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"
elif _CHOICE == "compiled":
    from . import _kernels as _impl
    BACKEND = "compiled"
elif _CHOICE == "python":
    _impl = _kernels_py
    BACKEND = "python"
else:
    raise ImportError(
        f"CMLCIPHER_BACKEND={_CHOICE!r} is not one of auto/compiled/python"
    )

generate_masks = _impl.generate_masks


def available_backends():
    """Names of the kernel backends importable in this environment."""
    names = ["python"]
    try:
        from . import _kernels  # noqa: F401
        names.insert(0, "compiled")
    except ImportError:
        pass
    return names


def get_kernels(name):
    """Return the kernel module for an explicit backend name."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _kernels
        return _kernels
    raise ValueError(f"unknown backend {name!r}")
