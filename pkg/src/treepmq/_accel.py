"""Numba acceleration shim.

Hot kernels throughout the package are decorated with :func:`njit`.  When
numba is installed (and not disabled), this is ``numba.njit(cache=True, ...)``
and kernels run compiled.  Otherwise :func:`njit` is an identity decorator and
the same source runs as pure Python over numpy arrays.

Set the environment variable ``TREEPMQ_NUMBA=0`` before import to force the
pure-Python path (useful for debugging and for backend-comparison benchmarks).
"""
from __future__ import annotations

import os


def _detect() -> bool:
    flag = os.environ.get("TREEPMQ_NUMBA", "").strip().lower()
    if flag in {"0", "off", "false", "no"}:
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED = _detect()

if NUMBA_ENABLED:
    from numba import njit as _numba_njit

    def njit(*args, **kwargs):
        kwargs.setdefault("cache", True)
        if args and callable(args[0]):
            return _numba_njit(**kwargs)(args[0])
        return _numba_njit(*args, **kwargs)

else:

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "python"
