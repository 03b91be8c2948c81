"""Backend selection for the BFS kernels.

The compiled extension is used when it imports; setting the environment
variable ``CUBEDIAM_PURE_PYTHON=1`` forces the numpy fallback.
"""

import os

from ._pykernels import bfs_packed

if os.environ.get("CUBEDIAM_PURE_PYTHON", "") not in ("", "0"):
    from ._pykernels import bfs_product, csr_bfs, csr_eccentricities

    BACKEND = "python"
else:
    try:
        from ._kernels import bfs_product, csr_bfs, csr_eccentricities

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import bfs_product, csr_bfs, csr_eccentricities

        BACKEND = "python"

__all__ = ["BACKEND", "bfs_packed", "bfs_product", "csr_bfs", "csr_eccentricities"]
