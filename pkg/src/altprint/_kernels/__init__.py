"""Hot-kernel backend selection.

The compiled Cython backend is preferred when the extension built; the
pure-numpy fallback is otherwise selected at import. Set
``ALTPRINT_BACKEND=numpy`` or ``ALTPRINT_BACKEND=cython`` to force one.
"""

import os

_requested = os.environ.get("ALTPRINT_BACKEND", "").lower()
if _requested not in ("", "cython", "numpy"):
    raise RuntimeError(f"ALTPRINT_BACKEND must be 'cython' or 'numpy', got {_requested!r}")

if _requested == "numpy":
    from . import numpy_backend as _impl
    BACKEND = "numpy"
else:
    try:
        from . import _cykernels as _impl
        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        from . import numpy_backend as _impl
        BACKEND = "numpy"

conv_out_size = _impl.conv_out_size
im2col = _impl.im2col
col2im = _impl.col2im
thin = _impl.thin
affine_warp = _impl.affine_warp


def get_backend() -> str:
    """Name of the active kernel backend ('cython' or 'numpy')."""
    return BACKEND
