"""Kernel backend selection.

Imports the compiled extension when it is available, the pure-Python twin
otherwise. Set DEGREERANK_PURE_PYTHON=1 to force the fallback (both backends
produce bit-identical output; see benchmarks/bench_kernels.py for the speed
difference).
"""

import os

if os.environ.get("DEGREERANK_PURE_PYTHON"):
    from degreerank import _pykernels as _impl
else:
    try:
        from degreerank import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from degreerank import _pykernels as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND
ba_edges = _impl.ba_edges
walk_nodes = _impl.walk_nodes
