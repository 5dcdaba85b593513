import os
import subprocess
import sys

import numpy as np
import pytest

from degreerank import _kernels, _pykernels

try:
    from degreerank import _speedups
except ImportError:
    _speedups = None

needs_ext = pytest.mark.skipif(_speedups is None, reason="compiled extension not built")


@needs_ext
@pytest.mark.skipif(
    bool(os.environ.get("DEGREERANK_PURE_PYTHON")),
    reason="pure-Python backend forced via environment",
)
def test_default_backend_is_compiled():
    assert _kernels.BACKEND == "cython"


@needs_ext
@pytest.mark.parametrize("n,n0,m,seed", [(50, 3, 2, 0), (500, 10, 10, 7), (2000, 10, 10, 42)])
def test_ba_edges_identical_across_backends(n, n0, m, seed):
    cy = _speedups.ba_edges(n, n0, m, seed)
    py = _pykernels.ba_edges(n, n0, m, seed)
    assert np.array_equal(cy[0], py[0])
    assert np.array_equal(cy[1], py[1])


@needs_ext
@pytest.mark.parametrize("start,burn,thin,count", [(-1, 0, 1, 50), (0, 100, 3, 200), (-1, 1000, 10, 100)])
def test_walk_identical_across_backends(ba_2000, start, burn, thin, count):
    indptr, indices = ba_2000.csr()
    cy = _speedups.walk_nodes(indptr, indices, start, burn, thin, count, 99)
    py = _pykernels.walk_nodes(indptr, indices, start, burn, thin, count, 99)
    assert np.array_equal(cy, py)


def test_env_var_forces_pure_python_backend():
    env = dict(os.environ, DEGREERANK_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import degreerank; print(degreerank.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


def test_bounded_draw_range_and_determinism():
    rng1 = _pykernels._RawStream(5)
    rng2 = _pykernels._RawStream(5)
    draws1 = [rng1.bounded(n) for n in (1, 2, 3, 7, 1000)]
    draws2 = [rng2.bounded(n) for n in (1, 2, 3, 7, 1000)]
    assert draws1 == draws2
    for val, n in zip(draws1, (1, 2, 3, 7, 1000)):
        assert 0 <= val < n
