"""Backend selection for the hot kernels.

Set ``ASC_MAXCUT_NUMBA=0`` to force the pure-numpy path. When the variable is
unset, numba is used if it can be imported.
"""
import os

_FLAG = os.environ.get("ASC_MAXCUT_NUMBA", "").strip().lower()


def _have_numba():
    try:
        import numba  # noqa: F401

        return True
    except ImportError:
        return False


HAVE_NUMBA = _have_numba()
USE_NUMBA = HAVE_NUMBA and _FLAG not in ("0", "false", "no", "off")

if HAVE_NUMBA:
    from numba import njit
else:

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f
