"""Backend selection for the hot kernels.

The compiled extension ``lieclass._ckernels`` is used when it was built;
otherwise the pure-Python twin is used.  Set ``LIECLASS_PURE_PYTHON=1`` to
force the fallback.
"""
import os

from . import _pykernels

FIELD_BITS = _pykernels.FIELD_BITS


def _load_compiled():
    if os.environ.get("LIECLASS_PURE_PYTHON", "") not in ("", "0"):
        return None
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


_compiled = _load_compiled()
BACKEND = "cython" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _pykernels

int_rref = _impl.int_rref
int_rank = _impl.int_rank
mask_sign = _impl.mask_sign
wedge_masks = _impl.wedge_masks
ipoly_mul = _impl.ipoly_mul
ipoly_cross = _impl.ipoly_cross
ipoly_exact_div = _impl.ipoly_exact_div


def backends():
    """Available backend modules keyed by name (for tests and benchmarks)."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
