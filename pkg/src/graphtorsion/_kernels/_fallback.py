"""Numpy fallback for the modular characteristic polynomial kernel.

Same contract as the compiled version: Hessenberg reduction by similarity
transforms mod p, then the standard recurrence for the characteristic
polynomial of a Hessenberg matrix.  All arithmetic stays inside int64:
p < 2**25 keeps products below 2**50 and dot products over <= 4096 terms
below 2**62.
"""

import numpy as np


def charpoly_mod(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("square matrix required")
    a = a.astype(np.int64, copy=True)
    _hessenberg_mod(a, p)
    return _hessenberg_charpoly_mod(a, p)


def _hessenberg_mod(a: np.ndarray, p: int) -> None:
    n = a.shape[0]
    for j in range(n - 2):
        col = a[j + 1:, j]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = int(nz[0]) + j + 1
        if piv != j + 1:
            a[[j + 1, piv], :] = a[[piv, j + 1], :]
            a[:, [j + 1, piv]] = a[:, [piv, j + 1]]
        inv = pow(int(a[j + 1, j]), p - 2, p)
        if j + 2 < n:
            f = (a[j + 2:, j] * inv) % p
            a[j + 2:, :] = (a[j + 2:, :] - f[:, None] * a[j + 1, :]) % p
            a[:, j + 1] = (a[:, j + 1] + a[:, j + 2:] @ f) % p
            a[j + 2:, j] = 0


def _hessenberg_charpoly_mod(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    # polys[k, 0:k+1] holds det(lambda*I - a[:k,:k]) mod p, ascending
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        polys[k, 1:k + 1] = polys[k - 1, 0:k]
        polys[k, 0:k] -= a[k - 1, k - 1] * polys[k - 1, 0:k]
        prod = 1
        for i in range(1, k):
            prod = prod * int(a[k - i, k - i - 1]) % p
            if prod == 0:
                break
            coef = int(a[k - 1 - i, k - 1]) * prod % p
            if coef:
                polys[k, 0:k - i] -= coef * polys[k - 1 - i, 0:k - i]
        polys[k, 0:k + 1] %= p
    return polys[n].copy()
