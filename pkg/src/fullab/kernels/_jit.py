"""JIT selection for the numeric kernels.

Kernels are written in the subset of Python that numba compiles in nopython
mode. Setting ``FULLAB_DISABLE_NUMBA=1`` (or running without numba installed)
keeps them as plain Python functions operating on numpy arrays.
"""
import os

_FALSEY = {"", "0", "false", "no", "off"}

USE_NUMBA = os.environ.get("FULLAB_DISABLE_NUMBA", "0").strip().lower() in _FALSEY

if USE_NUMBA:
    try:
        import numba
    except ImportError:  # pragma: no cover
        USE_NUMBA = False


def jit(fn):
    """Compile ``fn`` with ``numba.njit`` unless the fallback path is selected."""
    if USE_NUMBA:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn


def backend() -> str:
    return "numba" if USE_NUMBA else "python"
