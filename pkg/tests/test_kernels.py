import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given

from conftest import trees
from eds_lab import _pykernels, kernels

try:
    from eds_lab import _ckernels
except ImportError:
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled extension not built")


def test_backend_name():
    assert kernels.BACKEND in ("compiled", "python")


@needs_ext
def test_compiled_backend_selected_by_default():
    if os.environ.get("EDS_LAB_PURE_PYTHON"):
        pytest.skip("pure Python forced by environment")
    assert kernels.BACKEND == "compiled"


def test_env_forces_python():
    code = "from eds_lab import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, EDS_LAB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_python_kernels_small():
    adj = ((1,), (0, 2), (1,))
    assert _pykernels.bfs_row(adj, 0) == [0, 1, 2]
    ecc, trans = _pykernels.distance_profile(adj)
    assert list(ecc) == [2, 1, 2] and list(trans) == [3, 2, 3]
    assert _pykernels.distance_matrix(adj) == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]


@needs_ext
@given(trees(max_n=60))
def test_backends_agree(t):
    adj = t.adjacency
    pe, pt = _pykernels.distance_profile(adj)
    ce, ct = _ckernels.distance_profile(adj)
    assert list(pe) == list(ce) and list(pt) == list(ct)
    assert [list(r) for r in _pykernels.distance_matrix(adj)] == [list(r) for r in _ckernels.distance_matrix(adj)]
    for v in (0, t.n - 1):
        assert list(_pykernels.bfs_row(adj, v)) == list(_ckernels.bfs_row(adj, v))


@needs_ext
def test_compiled_large_sums():
    # transmissions of a long path exceed 32-bit range only for huge n; check exactness at a moderate one
    n = 5000
    adj = tuple((tuple(x for x in (i - 1, i + 1) if 0 <= x < n)) for i in range(n))
    ecc, trans = _ckernels.distance_profile(adj)
    assert trans[0] == n * (n - 1) // 2 and ecc[0] == n - 1


def test_reload_is_harmless():
    importlib.reload(kernels)
    assert kernels.BACKEND in ("compiled", "python")
