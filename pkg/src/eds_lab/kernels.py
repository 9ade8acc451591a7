"""Backend selection for the distance kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise, or
when ``EDS_LAB_PURE_PYTHON`` is set to a non-empty value, the pure-Python
``_pykernels`` module is used. Both expose ``bfs_row``, ``distance_profile``
and ``distance_matrix`` with identical results.
"""

import os

from . import _pykernels

if os.environ.get("EDS_LAB_PURE_PYTHON"):
    _backend = _pykernels
else:
    try:
        from . import _ckernels as _backend
    except ImportError:
        _backend = _pykernels

BACKEND = "compiled" if _backend is not _pykernels else "python"

bfs_row = _backend.bfs_row
distance_profile = _backend.distance_profile
distance_matrix = _backend.distance_matrix
