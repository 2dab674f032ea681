"""Orbit enumeration backends.

The compiled extension ``_fast`` is used when it was built; otherwise the
pure-Python ``_pure`` module is used. Setting ``FLAGHODGE_PURE_PYTHON=1``
forces the fallback. Both backends return identical output.
"""
import os

from flaghodge._core import _pure

try:
    from flaghodge._core import _fast
except ImportError:  # extension not built
    _fast = None

if os.environ.get("FLAGHODGE_PURE_PYTHON", "") not in ("", "0"):
    _fast = None

BACKEND = "cython" if _fast is not None else "python"

# The compiled kernel packs one signed byte per coordinate.
_FAST_COORD_LIMIT = 127


def _impl(max_abs_coord, backend):
    if backend == "python":
        return _pure
    if backend == "cython":
        if _fast is None:
            raise RuntimeError("compiled backend is not available")
        return _fast
    if _fast is not None and max_abs_coord <= _FAST_COORD_LIMIT:
        return _fast
    return _pure


def orbit_level_sizes(cartan, start, budget, max_abs_coord=0, backend=None):
    return _impl(max_abs_coord, backend).orbit_level_sizes(cartan, start, budget)


def orbit_levels(cartan, start, budget, max_abs_coord=0, backend=None):
    return _impl(max_abs_coord, backend).orbit_levels(cartan, start, budget)
