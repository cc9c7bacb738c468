"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python kernels
are a behaviourally identical fallback. Set ``LCSAPPROX_BACKEND`` to
``compiled`` or ``python`` to force one (``compiled`` raises if the extension
is missing, which is useful in CI).
"""

import os

_requested = os.environ.get("LCSAPPROX_BACKEND", "auto")

if _requested == "python":
    from . import _pykernels as kernels
elif _requested == "compiled":
    from . import _ckernels as kernels  # type: ignore[no-redef]
elif _requested == "auto":
    try:
        from . import _ckernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _pykernels as kernels  # type: ignore[no-redef]
else:
    raise ImportError(
        f"LCSAPPROX_BACKEND={_requested!r} is not one of auto, compiled, python"
    )


def backend_name() -> str:
    """Name of the active kernel backend ("compiled" or "python")."""
    return kernels.BACKEND_NAME
