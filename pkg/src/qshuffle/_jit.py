"""Numba switch.

Set ``QSHUFFLE_PURE_NUMPY=1`` to run every kernel as plain Python/numpy.
The same source is executed either way; only compilation differs.
"""
import os

PURE_NUMPY = os.environ.get("QSHUFFLE_PURE_NUMPY", "").strip().lower() not in ("", "0", "false", "no")

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

USING_NUMBA = numba is not None and not PURE_NUMPY


def njit(*args, **kwargs):
    if USING_NUMBA:
        kwargs.setdefault("cache", True)
        return numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]

    def identity(func):
        return func

    return identity


def py_func(func):
    """The uncompiled body of a kernel, whichever mode is active."""
    return getattr(func, "py_func", func)
