"""Kernel backend selection.

The compiled kernel is used when it imported successfully and the graph has
at most 64 vertices.  Setting ``MINSEPS_PURE=1`` forces the pure-Python
kernel everywhere.
"""

import os

from minseps._pykernel import PyKernel

try:
    from minseps._ckernel import CKernel
except ImportError:  # extension not built
    CKernel = None

FORCE_PURE = os.environ.get("MINSEPS_PURE", "") not in ("", "0")


def compiled_available() -> bool:
    return CKernel is not None


def make_kernel(adj, backend: str | None = None):
    """Build a kernel for the adjacency masks ``adj``.

    ``backend`` is ``"python"``, ``"cython"`` or ``None`` for automatic choice.
    """
    if backend == "python":
        return PyKernel(adj)
    if backend == "cython":
        if CKernel is None:
            raise RuntimeError("compiled kernel is not available")
        return CKernel(adj)
    if CKernel is not None and not FORCE_PURE and len(adj) <= 64:
        return CKernel(adj)
    return PyKernel(adj)
