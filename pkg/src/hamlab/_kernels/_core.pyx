# cython: language_level=3
"""Compiled kernels: rotation-closure BFS and the subset DP.

Semantics are defined by hamlab._kernels._pure; this module is a
line-for-line translation into typed loops.  Any behavioural divergence is
a bug (and is caught by the parity tests, which compare returned arrays
exactly).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil


def rotation_closure(const cnp.int64_t[:] rot_indptr,
                     const cnp.int32_t[:] rot_indices,
                     const cnp.int64_t[:] full_indptr,
                     const cnp.int32_t[:] full_indices,
                     const cnp.int32_t[:] path,
                     Py_ssize_t cap):
    cdef Py_ssize_t ell = path.shape[0] - 1
    cdef Py_ssize_t n = rot_indptr.shape[0] - 1
    cdef cnp.int32_t fixed = path[ell]
    cdef Py_ssize_t max_rows = cap
    if max_rows < 1:
        max_rows = 1
    if max_rows > ell + 1:
        max_rows = ell + 1

    on_path_arr = np.zeros(n, dtype=np.uint8)
    pos_arr = np.zeros(n, dtype=np.int32)
    disc_arr = np.full(n, -1, dtype=np.int32)
    order_arr = np.empty(max_rows, dtype=np.int32)
    prev_arr = np.empty(max_rows, dtype=np.int32)
    pivot_arr = np.empty(max_rows, dtype=np.int32)
    paths_arr = np.empty((max_rows, ell + 1), dtype=np.int32)

    cdef unsigned char[:] on_path = on_path_arr
    cdef cnp.int32_t[:] pos = pos_arr
    cdef cnp.int32_t[:] disc = disc_arr
    cdef cnp.int32_t[:] order = order_arr
    cdef cnp.int32_t[:] prev = prev_arr
    cdef cnp.int32_t[:] pivot = pivot_arr
    cdef cnp.int32_t[:, :] paths = paths_arr

    cdef Py_ssize_t head, count, k, i, j, t
    cdef cnp.int64_t a, b
    cdef cnp.int32_t e, w, x
    cdef Py_ssize_t ext_idx = -1
    cdef cnp.int32_t ext_vertex = -1
    cdef Py_ssize_t close_idx = -1
    cdef bint stop = False

    for i in range(ell + 1):
        on_path[path[i]] = 1
    order[0] = path[0]
    prev[0] = -1
    pivot[0] = -1
    for i in range(ell + 1):
        paths[0, i] = path[i]
    disc[path[0]] = 0
    head = 0
    count = 1

    while head < count and not stop:
        k = head
        head += 1
        e = order[k]

        a = full_indptr[e]
        b = full_indptr[e + 1]
        for j in range(a, b):
            w = full_indices[j]
            if on_path[w] == 0:
                ext_idx = k
                ext_vertex = w
                stop = True
                break
            if w == fixed and close_idx < 0 and ell >= 2:
                close_idx = k
        if stop:
            break

        for i in range(ell + 1):
            pos[paths[k, i]] = <cnp.int32_t>i
        a = rot_indptr[e]
        b = rot_indptr[e + 1]
        for j in range(a, b):
            w = rot_indices[j]
            if on_path[w] == 0:
                continue
            i = pos[w]
            if i < 1 or i > ell - 1:
                continue
            x = paths[k, i - 1]
            if disc[x] < 0:
                if count >= max_rows:
                    stop = True
                    break
                disc[x] = <cnp.int32_t>count
                order[count] = x
                prev[count] = <cnp.int32_t>k
                pivot[count] = w
                for t in range(i):
                    paths[count, t] = paths[k, i - 1 - t]
                for t in range(i, ell + 1):
                    paths[count, t] = paths[k, t]
                count += 1
                if count >= max_rows:
                    stop = True
                    break

    return (np.ascontiguousarray(order_arr[:count]),
            np.ascontiguousarray(prev_arr[:count]),
            np.ascontiguousarray(pivot_arr[:count]),
            np.ascontiguousarray(paths_arr[:count]),
            int(ext_idx), int(ext_vertex), int(close_idx))


def ham_dp(adj_masks_in):
    adj = np.ascontiguousarray(adj_masks_in, dtype=np.uint32)
    cdef const cnp.uint32_t[:] masks = adj
    cdef Py_ssize_t n = masks.shape[0]
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    dp_arr = np.zeros(size, dtype=np.uint32)
    cdef cnp.uint32_t[:] dp = dp_arr

    cdef unsigned int ep, cand, bit, full, free
    cdef Py_ssize_t mask
    cdef long long states = 0
    cdef int e

    full = <unsigned int>(size - 1)
    dp[1] = 1
    for mask in range(1, size, 2):
        ep = dp[mask]
        if ep == 0:
            continue
        states += __builtin_popcount(ep)
        free = full & ~(<unsigned int>mask)
        while ep != 0:
            e = __builtin_ctz(ep)
            ep &= ep - 1
            cand = masks[e] & free
            while cand != 0:
                bit = cand & (0 - cand)
                cand ^= bit
                dp[mask | <Py_ssize_t>bit] |= bit
    return dp_arr, int(states)
