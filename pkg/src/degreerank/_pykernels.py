"""Pure-Python sampling kernels.

Reference implementation of the two hot loops: preferential-attachment edge
creation and random-walk stepping. The compiled twin in ``_speedups.pyx``
consumes the same PCG64 raw stream with the same bounded-draw algorithm, so
both backends produce bit-identical results for identical seeds.
"""

from __future__ import annotations

import numpy as np
from numpy.random import PCG64

BACKEND = "python"

_BUF_WORDS = 4096


class _RawStream:
    """Buffered access to a PCG64 bit generator's raw 64-bit output."""

    def __init__(self, seed: int):
        self._bitgen = PCG64(seed)
        self._buf: np.ndarray = self._bitgen.random_raw(_BUF_WORDS)
        self._pos = 0

    def next64(self) -> int:
        if self._pos == len(self._buf):
            self._buf = self._bitgen.random_raw(_BUF_WORDS)
            self._pos = 0
        value = int(self._buf[self._pos])
        self._pos += 1
        return value

    def bounded(self, n: int) -> int:
        """Uniform integer in [0, n) by bitmask rejection; n >= 1."""
        mask = n - 1
        mask |= mask >> 1
        mask |= mask >> 2
        mask |= mask >> 4
        mask |= mask >> 8
        mask |= mask >> 16
        mask |= mask >> 32
        while True:
            v = self.next64() & mask
            if v < n:
                return v


def ba_edges(n: int, n0: int, m: int, seed: int):
    """Preferential-attachment edge creation.

    Nodes n0..n-1 join one at a time; each picks m distinct targets. While
    the graph has no edges yet, targets are uniform over existing nodes;
    afterwards a target is drawn uniformly from the repeated-endpoints list
    (degree-proportional), re-drawing on within-step repeats.

    Returns (src, dst) int64 arrays of length (n - n0) * m in creation order.
    """
    rng = _RawStream(seed)
    total = (n - n0) * m
    src = np.empty(total, dtype=np.int64)
    dst = np.empty(total, dtype=np.int64)
    rep = np.empty(2 * total, dtype=np.int64)
    rep_len = 0
    e = 0
    chosen = [0] * m
    for new in range(n0, n):
        cnt = 0
        while cnt < m:
            if rep_len == 0:
                cand = rng.bounded(new)
            else:
                cand = int(rep[rng.bounded(rep_len)])
            if cand in chosen[:cnt]:
                continue
            chosen[cnt] = cand
            cnt += 1
        for j in range(m):
            src[e] = new
            dst[e] = chosen[j]
            e += 1
        rep[rep_len : rep_len + m] = chosen
        rep_len += m
        rep[rep_len : rep_len + m] = new
        rep_len += m
    return src, dst


def walk_nodes(
    indptr: np.ndarray,
    indices: np.ndarray,
    start: int,
    burn_in: int,
    thinning: int,
    count: int,
    seed: int,
) -> np.ndarray:
    """Simple random walk over a CSR adjacency.

    A negative ``start`` means: draw uniform node ids until one with nonzero
    degree comes up. After ``burn_in`` discarded steps, the node reached by
    every ``thinning``-th step is retained until ``count`` observations are
    collected. Returns the retained node ids as an int64 array.
    """
    rng = _RawStream(seed)
    n = len(indptr) - 1
    if start < 0:
        while True:
            v = rng.bounded(n)
            if indptr[v + 1] > indptr[v]:
                start = v
                break
    cur = int(start)
    for _ in range(burn_in):
        base = int(indptr[cur])
        cur = int(indices[base + rng.bounded(int(indptr[cur + 1]) - base)])
    out = np.empty(count, dtype=np.int64)
    for t in range(count):
        for _ in range(thinning):
            base = int(indptr[cur])
            cur = int(indices[base + rng.bounded(int(indptr[cur + 1]) - base)])
        out[t] = cur
    return out
