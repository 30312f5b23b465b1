"""Backend selection for the assignment kernel.

The compiled kernel is used when it was built and ``HALLGAME_PURE_PYTHON``
is unset or empty; otherwise the pure-Python kernel takes over.
"""

import os

import numpy as np

from . import _pykernel

try:
    if os.environ.get("HALLGAME_PURE_PYTHON"):
        raise ImportError("pure-Python backend forced by environment")
    from ._ckernel import compute_lowest as _c_compute_lowest
except ImportError:
    _c_compute_lowest = None

BACKEND = "cython" if _c_compute_lowest is not None else "python"
AVAILABLE = ("cython", "python") if _c_compute_lowest is not None else ("python",)


def compute_lowest(graph, v0, v1, max_iterations, trace=False, backend=None):
    """Lowest-index tie-breaking run on ``graph`` with the selected backend."""
    backend = backend or BACKEND
    if backend == "cython":
        if _c_compute_lowest is None:
            raise ImportError("compiled kernel is not available")
        adj = np.ascontiguousarray(graph.adjacency).view(np.uint8)
        return _c_compute_lowest(adj, v0, v1, max_iterations, trace)
    if backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    neighbors = [graph.neighbors(v) for v in range(graph.vertex_count)]
    return _pykernel.compute(neighbors, v0, v1, max_iterations, trace)
