"""Distance kernels: all-pairs BFS statistics over a CSR adjacency.

Two interchangeable backends compute the same quantities:

* ``numba`` -- a JIT-compiled queue BFS, one source at a time (default when
  numba imports cleanly).
* ``numpy`` -- a vectorised simultaneous-frontier expansion that leans on
  BLAS matrix products instead of explicit queues.

Selection happens once at import time via the ``ECCLIB_KERNELS`` environment
variable (``numba`` or ``numpy``); without it the numba backend is preferred
and numpy is the fallback.  Both backends take ``(indptr, indices)`` arrays of
dtype int64 describing a symmetric adjacency structure.
"""

import os

_ENV_VAR = "ECCLIB_KERNELS"


def _load():
    forced = os.environ.get(_ENV_VAR, "").strip().lower()
    if forced == "numpy":
        from . import _numpy as impl

        return impl, "numpy"
    if forced == "numba":
        from . import _numba as impl

        return impl, "numba"
    if forced:
        raise ValueError(
            f"unknown {_ENV_VAR} value {forced!r}; expected 'numba' or 'numpy'"
        )
    try:
        from . import _numba as impl

        return impl, "numba"
    except ImportError:
        from . import _numpy as impl

        return impl, "numpy"


_impl, _backend = _load()

#: ``all_pairs_stats(indptr, indices) -> (ecc, rowsum, all_reached)`` where
#: ``ecc[v]`` is the largest finite BFS distance from ``v``, ``rowsum[v]`` the
#: sum of finite distances from ``v``, and ``all_reached`` is False when some
#: pair of vertices is disconnected.
all_pairs_stats = _impl.all_pairs_stats

#: ``sssp(indptr, indices, source) -> dist`` with ``-1`` marking unreachable
#: vertices.
sssp = _impl.sssp


def backend_name() -> str:
    """Name of the backend selected at import time."""
    return _backend
