# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled trigram Viterbi kernel.

Same recurrence, iteration order and floating-point association as
_viterbi_py.viterbi_path; the two kernels are interchangeable bit for bit.
"""

import numpy as np


def viterbi_path(offs_arr, tags_arr, emits_arr, leaf_index_arr, leaf_logdist_arr, int boundary):
    cdef int[::1] offs = offs_arr
    cdef int[::1] tags = tags_arr
    cdef double[::1] emits = emits_arr
    cdef int[:, ::1] L = leaf_index_arr
    cdef double[:, ::1] D = leaf_logdist_arr

    cdef int n = offs.shape[0] - 1
    cdef int i, j, k, m, width, pwidth, ppwidth, base, pbase, ppbase
    cdef int w0, tj, tk, tm, arg, best_j, best_k, leaf
    cdef double emit, score, best
    cdef double neg_inf = float("-inf")

    cdef int wmax = 0
    for i in range(n):
        width = offs[i + 1] - offs[i]
        if width > wmax:
            wmax = width

    prev_arr = np.zeros((wmax, wmax), dtype=np.float64)
    cur_arr = np.zeros((wmax, wmax), dtype=np.float64)
    bp_arr = np.zeros((n, wmax, wmax), dtype=np.int32)
    cdef double[:, ::1] prev = prev_arr
    cdef double[:, ::1] cur = cur_arr
    cdef double[:, ::1] tmp
    cdef int[:, :, ::1] bp = bp_arr

    base = offs[0]
    w0 = offs[1] - base
    leaf = L[boundary, boundary]
    for k in range(w0):
        prev[0, k] = D[leaf, tags[base + k]] + emits[base + k]
    pwidth = 1

    for i in range(1, n):
        base = offs[i]
        width = offs[i + 1] - base
        pbase = offs[i - 1]
        pwidth = base - pbase
        if i >= 2:
            ppbase = offs[i - 2]
            ppwidth = pbase - ppbase
        else:
            ppbase = 0
            ppwidth = 1
        for j in range(pwidth):
            tj = tags[pbase + j]
            for k in range(width):
                tk = tags[base + k]
                emit = emits[base + k]
                best = neg_inf
                arg = 0
                for m in range(ppwidth):
                    if i == 1:
                        tm = boundary
                    else:
                        tm = tags[ppbase + m]
                    score = (prev[m, j] + D[L[tm, tj], tk]) + emit
                    if score > best:
                        best = score
                        arg = m
                cur[j, k] = best
                bp[i, j, k] = arg
        tmp = prev
        prev = cur
        cur = tmp

    width = offs[n] - offs[n - 1]
    best = neg_inf
    best_j = 0
    best_k = 0
    for j in range(pwidth if n >= 2 else 1):
        for k in range(width):
            if prev[j, k] > best:
                best = prev[j, k]
                best_j = j
                best_k = k

    path = [0] * n
    path[n - 1] = tags[offs[n - 1] + best_k]
    if n >= 2:
        path[n - 2] = tags[offs[n - 2] + best_j]
    j = best_j
    k = best_k
    for i in range(n - 1, 1, -1):
        m = bp[i, j, k]
        path[i - 2] = tags[offs[i - 2] + m]
        j, k = m, j
    return path
