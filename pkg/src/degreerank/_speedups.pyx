# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sampling kernels.

Twin of ``_pykernels``: same PCG64 raw stream, same bounded-draw rejection,
same append order, so results are bit-identical to the pure-Python backend.
"""

from libc.stdint cimport uint64_t, int64_t
from cpython.pycapsule cimport PyCapsule_GetPointer
from numpy.random cimport bitgen_t
from numpy.random import PCG64

import numpy as np

BACKEND = "cython"


cdef inline uint64_t _bounded(bitgen_t *bg, uint64_t n) noexcept nogil:
    # Uniform in [0, n) by bitmask rejection; n >= 1.
    cdef uint64_t mask = n - 1
    cdef uint64_t v
    mask |= mask >> 1
    mask |= mask >> 2
    mask |= mask >> 4
    mask |= mask >> 8
    mask |= mask >> 16
    mask |= mask >> 32
    while True:
        v = bg.next_uint64(bg.state) & mask
        if v < n:
            return v


def ba_edges(long long n, long long n0, long long m, seed):
    """Preferential-attachment edge creation; see _pykernels.ba_edges."""
    bitgen_obj = PCG64(seed)
    capsule = bitgen_obj.capsule
    cdef bitgen_t *bg = <bitgen_t *> PyCapsule_GetPointer(capsule, "BitGenerator")

    cdef long long total = (n - n0) * m
    src_arr = np.empty(total, dtype=np.int64)
    dst_arr = np.empty(total, dtype=np.int64)
    rep_arr = np.empty(2 * total, dtype=np.int64)
    chosen_arr = np.empty(m, dtype=np.int64)
    cdef int64_t[::1] src = src_arr
    cdef int64_t[::1] dst = dst_arr
    cdef int64_t[::1] rep = rep_arr
    cdef int64_t[::1] chosen = chosen_arr

    cdef long long rep_len = 0, e = 0
    cdef long long new, cnt, j, cand
    cdef bint dup
    with nogil:
        for new in range(n0, n):
            cnt = 0
            while cnt < m:
                if rep_len == 0:
                    cand = <long long> _bounded(bg, <uint64_t> new)
                else:
                    cand = rep[<long long> _bounded(bg, <uint64_t> rep_len)]
                dup = False
                for j in range(cnt):
                    if chosen[j] == cand:
                        dup = True
                        break
                if dup:
                    continue
                chosen[cnt] = cand
                cnt += 1
            for j in range(m):
                src[e] = new
                dst[e] = chosen[j]
                e += 1
            for j in range(m):
                rep[rep_len + j] = chosen[j]
            rep_len += m
            for j in range(m):
                rep[rep_len + j] = new
            rep_len += m
    return src_arr, dst_arr


def walk_nodes(indptr, indices, long long start, long long burn_in,
               long long thinning, long long count, seed):
    """Simple random walk over a CSR adjacency; see _pykernels.walk_nodes."""
    bitgen_obj = PCG64(seed)
    capsule = bitgen_obj.capsule
    cdef bitgen_t *bg = <bitgen_t *> PyCapsule_GetPointer(capsule, "BitGenerator")

    cdef const int64_t[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const int64_t[::1] nbr = np.ascontiguousarray(indices, dtype=np.int64)
    cdef long long n = ptr.shape[0] - 1

    out_arr = np.empty(count, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    cdef long long cur, v, base, t, j
    with nogil:
        if start < 0:
            while True:
                v = <long long> _bounded(bg, <uint64_t> n)
                if ptr[v + 1] > ptr[v]:
                    start = v
                    break
        cur = start
        for j in range(burn_in):
            base = ptr[cur]
            cur = nbr[base + <long long> _bounded(bg, <uint64_t> (ptr[cur + 1] - base))]
        for t in range(count):
            for j in range(thinning):
                base = ptr[cur]
                cur = nbr[base + <long long> _bounded(bg, <uint64_t> (ptr[cur + 1] - base))]
            out[t] = cur
    return out_arr
