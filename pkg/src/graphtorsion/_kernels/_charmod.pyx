# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular characteristic polynomial kernel.

Hessenberg reduction mod p followed by the Hessenberg charpoly recurrence.
Entries must be reduced into [0, p) with p < 2**25 and n <= 4096, which keeps
every int64 accumulation below 2**62.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef long long _pow_mod(long long base, long long exp, long long p):
    cdef long long result = 1
    base %= p
    while exp > 0:
        if exp & 1:
            result = result * base % p
        base = base * base % p
        exp >>= 1
    return result


cdef void _hessenberg(long long[:, ::1] a, long long p, Py_ssize_t n):
    cdef Py_ssize_t i, j, k, piv
    cdef long long inv, f, tmp, acc
    for j in range(n - 2):
        piv = -1
        for i in range(j + 1, n):
            if a[i, j] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != j + 1:
            for k in range(n):
                tmp = a[j + 1, k]; a[j + 1, k] = a[piv, k]; a[piv, k] = tmp
            for k in range(n):
                tmp = a[k, j + 1]; a[k, j + 1] = a[k, piv]; a[k, piv] = tmp
        inv = _pow_mod(a[j + 1, j], p - 2, p)
        for i in range(j + 2, n):
            f = a[i, j] * inv % p
            if f == 0:
                continue
            for k in range(j, n):
                a[i, k] = (a[i, k] - f * a[j + 1, k]) % p
                if a[i, k] < 0:
                    a[i, k] += p
            # similarity: column j+1 += f * column i
            for k in range(n):
                a[k, j + 1] = (a[k, j + 1] + f * a[k, i]) % p
        for i in range(j + 2, n):
            a[i, j] = 0


def charpoly_mod(a_in, long long p):
    a = np.ascontiguousarray(a_in, dtype=np.int64) % p
    cdef long long[:, ::1] am = a
    cdef Py_ssize_t n = am.shape[0]
    if am.shape[1] != n:
        raise ValueError("square matrix required")
    out = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] res = out
    if n == 0:
        res[0] = 1
        return out
    _hessenberg(am, p, n)

    polys_arr = np.zeros((n + 1, n + 1), dtype=np.int64)
    cdef long long[:, ::1] polys = polys_arr
    cdef Py_ssize_t k, i, j
    cdef long long prod, coef, diag, v
    polys[0, 0] = 1
    for k in range(1, n + 1):
        diag = am[k - 1, k - 1]
        for j in range(k, 0, -1):
            polys[k, j] = polys[k - 1, j - 1]
        polys[k, 0] = 0
        for j in range(k):
            polys[k, j] = polys[k, j] - diag * polys[k - 1, j]
        prod = 1
        for i in range(1, k):
            prod = prod * am[k - i, k - i - 1] % p
            if prod == 0:
                break
            coef = am[k - 1 - i, k - 1] * prod % p
            if coef == 0:
                continue
            for j in range(k - i):
                polys[k, j] = polys[k, j] - coef * polys[k - 1 - i, j]
        for j in range(k + 1):
            v = polys[k, j] % p
            if v < 0:
                v += p
            polys[k, j] = v
    for j in range(n + 1):
        res[j] = polys[n, j]
    return out
