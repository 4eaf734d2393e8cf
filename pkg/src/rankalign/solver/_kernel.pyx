# cython: language_level=3
"""Compiled Jonker-Volgenant linear assignment kernel.

Classic dense structure: column reduction with reduction transfer, two
passes of augmenting row reduction, then shortest augmenting paths for the
remaining free rows. Works on float32 or float64 cost matrices.
"""

import numpy as np

cimport cython
cimport numpy as cnp
from libc.stdlib cimport free, malloc

cnp.import_array()

ctypedef fused floating:
    float
    double

cdef double LARGE = 1e18


@cython.boundscheck(False)
@cython.wraparound(False)
cdef Py_ssize_t _ccrrt(const floating[:, ::1] cost, Py_ssize_t* free_rows,
                       Py_ssize_t* x, Py_ssize_t* y, double* v) noexcept:
    """Column reduction and reduction transfer; returns number of free rows."""
    cdef Py_ssize_t n = cost.shape[0]
    cdef Py_ssize_t i, j, imin, n_free = 0
    cdef double c, mn
    cdef char* unique = <char*> malloc(n * sizeof(char))

    for j in range(n):
        v[j] = cost[0, j]
        y[j] = 0
    for i in range(1, n):
        for j in range(n):
            c = cost[i, j]
            if c < v[j]:
                v[j] = c
                y[j] = i
    for i in range(n):
        unique[i] = 1
        x[i] = -1
    j = n
    while j > 0:
        j -= 1
        imin = y[j]
        if x[imin] < 0:
            x[imin] = j
        else:
            unique[imin] = 0
            y[j] = -1
    for i in range(n):
        if x[i] < 0:
            free_rows[n_free] = i
            n_free += 1
        elif unique[i]:
            j = x[i]
            mn = LARGE
            for imin in range(n):
                if imin != j and cost[i, imin] - v[imin] < mn:
                    mn = cost[i, imin] - v[imin]
            v[j] -= mn
    free(unique)
    return n_free


@cython.boundscheck(False)
@cython.wraparound(False)
cdef Py_ssize_t _carr(const floating[:, ::1] cost, Py_ssize_t n_free_rows,
                      Py_ssize_t* free_rows, Py_ssize_t* x, Py_ssize_t* y,
                      double* v) noexcept:
    """One pass of augmenting row reduction; returns remaining free rows."""
    cdef Py_ssize_t n = cost.shape[0]
    cdef Py_ssize_t current = 0, new_free = 0, rr_cnt = 0
    cdef Py_ssize_t free_i, i0, j, j1, j2
    cdef double v1, v2, c, v1_new
    cdef bint v1_lowers

    while current < n_free_rows:
        free_i = free_rows[current]
        current += 1
        rr_cnt += 1
        # minimum and second minimum reduced cost over columns
        j1 = 0
        v1 = cost[free_i, 0] - v[0]
        j2 = -1
        v2 = LARGE
        for j in range(1, n):
            c = cost[free_i, j] - v[j]
            if c < v2:
                if c >= v1:
                    v2 = c
                    j2 = j
                else:
                    v2 = v1
                    v1 = c
                    j2 = j1
                    j1 = j
        i0 = y[j1]
        v1_lowers = j2 >= 0 and v2 > v1
        v1_new = v[j1] - (v2 - v1)
        if rr_cnt < current * n:
            if v1_lowers:
                v[j1] = v1_new
            elif i0 >= 0 and j2 >= 0:
                j1 = j2
                i0 = y[j2]
            if i0 >= 0:
                if v1_lowers:
                    current -= 1
                    free_rows[current] = i0
                else:
                    free_rows[new_free] = i0
                    new_free += 1
        else:
            if i0 >= 0:
                free_rows[new_free] = i0
                new_free += 1
        x[free_i] = j1
        y[j1] = free_i
    return new_free


@cython.boundscheck(False)
@cython.wraparound(False)
cdef Py_ssize_t _find(Py_ssize_t n, Py_ssize_t lo, double* d,
                      Py_ssize_t* cols) noexcept:
    """Bring all columns attaining the minimum pending distance into the scan band."""
    cdef Py_ssize_t hi = lo + 1
    cdef Py_ssize_t j, k
    cdef double mind = d[cols[lo]]
    for k in range(hi, n):
        j = cols[k]
        if d[j] <= mind:
            if d[j] < mind:
                hi = lo
                mind = d[j]
            cols[k] = cols[hi]
            cols[hi] = j
            hi += 1
    return hi


@cython.boundscheck(False)
@cython.wraparound(False)
cdef Py_ssize_t _scan(const floating[:, ::1] cost, Py_ssize_t* plo, Py_ssize_t* phi,
                      double* d, Py_ssize_t* cols, Py_ssize_t* pred,
                      Py_ssize_t* y, double* v) noexcept:
    cdef Py_ssize_t n = cost.shape[0]
    cdef Py_ssize_t lo = plo[0], hi = phi[0]
    cdef Py_ssize_t i, j, j2, k
    cdef double mind, h, cred

    while lo != hi:
        j = cols[lo]
        lo += 1
        i = y[j]
        mind = d[j]
        h = cost[i, j] - v[j] - mind
        for k in range(hi, n):
            j2 = cols[k]
            cred = cost[i, j2] - v[j2] - h
            if cred < d[j2]:
                d[j2] = cred
                pred[j2] = i
                if cred == mind:
                    if y[j2] < 0:
                        plo[0] = lo
                        phi[0] = hi
                        return j2
                    cols[k] = cols[hi]
                    cols[hi] = j2
                    hi += 1
    plo[0] = lo
    phi[0] = hi
    return -1


@cython.boundscheck(False)
@cython.wraparound(False)
cdef Py_ssize_t _find_path(const floating[:, ::1] cost, Py_ssize_t start_i,
                           Py_ssize_t* y, double* v, Py_ssize_t* pred,
                           Py_ssize_t* cols, double* d) noexcept:
    """Dijkstra over reduced costs from one free row; returns the sink column."""
    cdef Py_ssize_t n = cost.shape[0]
    cdef Py_ssize_t lo = 0, hi = 0, final_j = -1, n_ready = 0
    cdef Py_ssize_t j, k
    cdef double mind

    for j in range(n):
        cols[j] = j
        pred[j] = start_i
        d[j] = cost[start_i, j] - v[j]
    while final_j == -1:
        if lo == hi:
            n_ready = lo
            hi = _find(n, lo, d, cols)
            for k in range(lo, hi):
                j = cols[k]
                if y[j] < 0:
                    final_j = j
        if final_j == -1:
            final_j = _scan(cost, &lo, &hi, d, cols, pred, y, v)
    mind = d[cols[lo]]
    for k in range(n_ready):
        j = cols[k]
        v[j] += d[j] - mind
    return final_j


@cython.boundscheck(False)
@cython.wraparound(False)
cdef void _ca(const floating[:, ::1] cost, Py_ssize_t n_free_rows,
              Py_ssize_t* free_rows, Py_ssize_t* x, Py_ssize_t* y,
              double* v) noexcept:
    """Augment along a shortest path for every remaining free row."""
    cdef Py_ssize_t n = cost.shape[0]
    cdef Py_ssize_t k, i, j, tmp, free_i
    cdef Py_ssize_t* pred = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* cols = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef double* d = <double*> malloc(n * sizeof(double))

    for k in range(n_free_rows):
        free_i = free_rows[k]
        j = _find_path(cost, free_i, y, v, pred, cols, d)
        while True:
            i = pred[j]
            y[j] = i
            tmp = x[i]
            x[i] = j
            j = tmp
            if i == free_i:
                break
    free(pred)
    free(cols)
    free(d)


@cython.boundscheck(False)
@cython.wraparound(False)
def lapjv_minimize(const floating[:, ::1] cost):
    """Column permutation minimizing sum(cost[i, perm[i]]) for a square matrix."""
    cdef Py_ssize_t n = cost.shape[0]
    if cost.shape[1] != n:
        raise ValueError("cost matrix must be square")
    if n == 0:
        return np.empty(0, dtype=np.intp)

    result = np.empty(n, dtype=np.intp)
    cdef Py_ssize_t[::1] res_view = result
    cdef Py_ssize_t* x = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* y = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* free_rows = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef double* v = <double*> malloc(n * sizeof(double))
    cdef Py_ssize_t n_free, it, i

    try:
        n_free = _ccrrt(cost, free_rows, x, y, v)
        it = 0
        while it < 2 and n_free > 0:
            n_free = _carr(cost, n_free, free_rows, x, y, v)
            it += 1
        if n_free > 0:
            _ca(cost, n_free, free_rows, x, y, v)
        for i in range(n):
            res_view[i] = x[i]
    finally:
        free(x)
        free(y)
        free(free_rows)
        free(v)
    return result
