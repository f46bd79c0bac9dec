# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled candidate search kernel; same contract as _enumerate_py."""

from libc.stdlib cimport malloc, free


cdef struct Ctx:
    int n
    long long e
    long long target
    long long lin_max
    long long sq_max
    long long pg_max
    long long *mults
    long long *cap
    int *prox_ptr
    int *prox_idx
    long long *v
    long long *excess


cdef inline bint _final(long long e, long long s_sq, long long s_lin):
    cdef long long a, b
    if e * e > s_sq:
        return False
    a = -3 * e + s_lin
    b = e * e - s_sq
    if a >= 0 and e * e - 3 * e + 2 >= s_sq - s_lin:
        return True
    if b == 0 and a == -2:
        return True
    return a == -1 and b == -1


cdef int _dfs(Ctx *c, int i, long long s_e, long long s_sq, long long s_lin, list out) except -1:
    cdef long long m, ub, val
    cdef int k, p
    if s_e + c.cap[i] < c.target:
        return 0
    if s_sq - s_lin > c.pg_max and (s_sq > c.sq_max or s_lin > c.lin_max):
        return 0
    if i == c.n:
        if s_e == c.target and _final(c.e, s_sq, s_lin):
            out.append(tuple([c.v[k] for k in range(c.n)]))
        return 0
    m = c.mults[i]
    ub = (c.target - s_e) // m
    if c.e < ub:
        ub = c.e
    for k in range(c.prox_ptr[i], c.prox_ptr[i + 1]):
        p = c.prox_idx[k]
        if c.excess[p] < ub:
            ub = c.excess[p]
    val = 0
    while val <= ub:
        c.v[i] = val
        c.excess[i] = val
        for k in range(c.prox_ptr[i], c.prox_ptr[i + 1]):
            c.excess[c.prox_idx[k]] -= val
        _dfs(c, i + 1, s_e + val * m, s_sq + val * val, s_lin + val, out)
        for k in range(c.prox_ptr[i], c.prox_ptr[i + 1]):
            c.excess[c.prox_idx[k]] += val
        val += 1
    c.v[i] = 0
    c.excess[i] = 0
    return 0


def enumerate_vectors(e, d, mults, prox):
    cdef Ctx c
    cdef int n = len(mults)
    cdef int i, k, total
    total = sum(len(p) for p in prox)
    c.n = n
    c.e = e
    c.target = e * d
    c.lin_max = 3 * e - 1
    c.sq_max = e * e + 1
    c.pg_max = (e - 1) * (e - 2)
    c.mults = <long long *> malloc((n + 1) * sizeof(long long))
    c.cap = <long long *> malloc((n + 1) * sizeof(long long))
    c.v = <long long *> malloc((n + 1) * sizeof(long long))
    c.excess = <long long *> malloc((n + 1) * sizeof(long long))
    c.prox_ptr = <int *> malloc((n + 1) * sizeof(int))
    c.prox_idx = <int *> malloc((total + 1) * sizeof(int))
    out = []
    try:
        k = 0
        for i in range(n):
            c.mults[i] = mults[i]
            c.v[i] = 0
            c.excess[i] = 0
            c.prox_ptr[i] = k
            for p in prox[i]:
                c.prox_idx[k] = p
                k += 1
        c.prox_ptr[n] = k
        c.cap[n] = 0
        for i in range(n - 1, -1, -1):
            c.cap[i] = c.cap[i + 1] + e * c.mults[i]
        _dfs(&c, 0, 0, 0, 0, out)
    finally:
        free(c.mults)
        free(c.cap)
        free(c.v)
        free(c.excess)
        free(c.prox_ptr)
        free(c.prox_idx)
    return out
