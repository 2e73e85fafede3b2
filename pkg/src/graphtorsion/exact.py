"""Exact dense linear algebra over the integers and rationals.

Everything here is arbitrary precision: matrices hold Python ints, ranks are
ranks over Q, and the pseudo-determinant (product of the non-zero eigenvalues
of a symmetric matrix) is read off the exact characteristic polynomial, never
off floating point spectra.

Two characteristic-polynomial backends are provided:

* ``char_poly_berkowitz`` -- division-free Berkowitz algorithm in pure
  Python.  Simple, O(n^4), used for small matrices and as the reference
  implementation.
* ``char_poly_modular`` -- Hessenberg reduction modulo a batch of word-size
  primes followed by Chinese remaindering.  The per-prime kernel lives in
  ``graphtorsion._kernels`` (compiled extension when available, numpy
  fallback otherwise).  The prime batch is sized from a proven coefficient
  bound, so the result is exact, not heuristic.

``char_poly`` dispatches between the two by matrix size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt

import numpy as np

from ._kernels import charpoly_mod

#: Exact rational numbers (normalized, positive denominator).
BigRational = Fraction

_INT64_SAFE = 2**62
_FLOAT_EXACT = 2**52  # accumulated |values| below this are exact in float64


def rational_str(x: Fraction) -> str:
    """Serialize a rational as ``"p/q"``, or plain ``"p"`` when integral."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)


class ExactMatrix:
    """Dense matrix of arbitrary-precision integers, row major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: list[list[int]]):
        if rows < 0 or cols < 0 or len(data) != rows:
            raise ValueError("inconsistent matrix shape")
        for row in data:
            if len(row) != cols:
                raise ValueError("inconsistent matrix shape")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, data) -> "ExactMatrix":
        data = [[int(x) for x in row] for row in data]
        return cls(len(data), len(data[0]) if data else 0, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    @classmethod
    def diagonal(cls, entries) -> "ExactMatrix":
        entries = list(entries)
        m = cls.zeros(len(entries), len(entries))
        for i, e in enumerate(entries):
            m.data[i][i] = int(e)
        return m

    @classmethod
    def from_numpy(cls, a: np.ndarray) -> "ExactMatrix":
        return cls.from_rows(a.tolist())

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"

    def copy(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [row[:] for row in self.data])

    def max_abs(self) -> int:
        return max((abs(x) for row in self.data for x in row), default=0)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        d = self.data
        return all(d[i][j] == d[j][i] for i in range(self.rows) for j in range(i))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(
            self.rows, self.cols,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(
            self.rows, self.cols,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
        )

    def scaled(self, c: int) -> "ExactMatrix":
        c = int(c)
        return ExactMatrix(
            self.rows, self.cols, [[c * x for x in row] for row in self.data]
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        # accumulated magnitudes bounded by inner * max|a| * max|b|
        bound = self.cols * max(self.max_abs(), 1) * max(other.max_abs(), 1)
        if bound < _FLOAT_EXACT:
            a = np.array(self.data, dtype=np.float64)
            b = np.array(other.data, dtype=np.float64)
            c = a @ b
            return ExactMatrix.from_rows(c.astype(np.int64).tolist())
        if bound < _INT64_SAFE:
            a = np.array(self.data, dtype=np.int64)
            b = np.array(other.data, dtype=np.int64)
            return ExactMatrix.from_rows((a @ b).tolist())
        out = ExactMatrix.zeros(self.rows, other.cols)
        bt = other.transpose().data
        for i, ra in enumerate(self.data):
            oi = out.data[i]
            for j, cb in enumerate(bt):
                oi[j] = sum(x * y for x, y in zip(ra, cb))
        return out

    def submatrix(self, row_idx, col_idx) -> "ExactMatrix":
        row_idx = list(row_idx)
        col_idx = list(col_idx)
        return ExactMatrix(
            len(row_idx), len(col_idx),
            [[self.data[i][j] for j in col_idx] for i in row_idx],
        )

    def to_int64(self) -> np.ndarray:
        if self.max_abs() >= _INT64_SAFE:
            raise OverflowError("entries exceed int64 range")
        return np.array(self.data, dtype=np.int64)

    def to_text(self) -> str:
        """Row-major integer grid, one row per line."""
        return "\n".join(" ".join(str(x) for x in row) for row in self.data)

    def row_norm_ceilings(self) -> list[int]:
        return [isqrt(sum(x * x for x in row)) + 1 for row in self.data]


@dataclass(frozen=True)
class CharPoly:
    """Coefficients c_0..c_n of det(lambda*I - A), ascending, c_n = 1."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lowest_nonzero(self) -> tuple[int, int]:
        """(index m, coefficient c_m) of the lowest non-vanishing coefficient."""
        for m, c in enumerate(self.coeffs):
            if c != 0:
                return m, c
        raise AssertionError("monic polynomial cannot vanish identically")

    def nullity(self) -> int:
        """Multiplicity of the eigenvalue 0 (exact, for diagonalizable input)."""
        return self.lowest_nonzero()[0]

    def trace(self) -> int:
        return -self.coeffs[-2] if self.degree >= 1 else 0


# ---------------------------------------------------------------------------
# Berkowitz: division-free characteristic polynomial (reference backend)
# ---------------------------------------------------------------------------

def char_poly_berkowitz(m: ExactMatrix) -> CharPoly:
    if not m.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.rows
    if n == 0:
        return CharPoly((1,))
    a = m.data
    # poly holds coefficients of det(lambda*I - A_k), descending degree
    poly = [1, -a[0][0]]
    for k in range(2, n + 1):
        pivot = a[k - 1][k - 1]
        row = a[k - 1][: k - 1]
        col = [a[i][k - 1] for i in range(k - 1)]
        # s_j = row . M^j . col for the principal (k-1)x(k-1) block M
        s = []
        w = col
        s.append(sum(r * x for r, x in zip(row, w)))
        for _ in range(k - 2):
            w = [sum(a[i][j] * w[j] for j in range(k - 1)) for i in range(k - 1)]
            s.append(sum(r * x for r, x in zip(row, w)))
        toeplitz = [1, -pivot] + [-x for x in s]
        new = [0] * (k + 1)
        for i, t in enumerate(toeplitz):
            if t == 0:
                continue
            for j, p in enumerate(poly):
                if i + j <= k:
                    new[i + j] += t * p
        poly = new
    return CharPoly(tuple(reversed(poly)))


# ---------------------------------------------------------------------------
# Modular backend: per-prime kernel plus CRT reconstruction
# ---------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIME_CACHE: list[int] = []
_PRIME_TOP = 2**25  # keeps all int64 kernel accumulations overflow-free


def _primes(count: int) -> list[int]:
    candidate = _PRIME_CACHE[-1] - 2 if _PRIME_CACHE else _PRIME_TOP - 1
    while len(_PRIME_CACHE) < count:
        if _is_prime(candidate):
            _PRIME_CACHE.append(candidate)
        candidate -= 2
    return _PRIME_CACHE[:count]


def _coefficient_bound(m: ExactMatrix, psd_hint: bool) -> int:
    """Proven bound on |c_j| for all characteristic coefficients.

    Every c_{n-k} is a signed sum of principal k x k minors, each bounded by
    the product of its row norms (Hadamard); summing over k gives
    prod_i (1 + ||row_i||).  For positive semidefinite matrices the minors
    are bounded by the product of the diagonal entries instead.
    """
    bound = 1
    for r in m.row_norm_ceilings():
        bound *= 1 + r
    if psd_hint:
        psd_bound = 1
        for i in range(m.rows):
            psd_bound *= 1 + max(m.data[i][i], 0)
        bound = min(bound, psd_bound)
    return bound


def char_poly_modular(m: ExactMatrix, psd_hint: bool = False) -> CharPoly:
    if not m.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.rows
    if n == 0:
        return CharPoly((1,))
    if n > 4096:
        raise ValueError("matrix too large for the modular kernel")
    # provision primes against the bound, counting every prime at the
    # conservative 2^24 (they all lie in (2^24, 2^25))
    bound = 2 * _coefficient_bound(m, psd_hint) + 1
    k = 1
    prod = _PRIME_TOP // 2
    while prod <= bound:
        prod *= _PRIME_TOP // 2
        k += 1
    primes = _primes(k)

    big_entries = m.max_abs() >= _INT64_SAFE
    if not big_entries:
        base = m.to_int64()

    residues = []
    for p in primes:
        if big_entries:
            a = np.array([[x % p for x in row] for row in m.data], dtype=np.int64)
        else:
            a = base % p
        residues.append([int(c) for c in charpoly_mod(a, p)])

    # incremental CRT, then lift to the symmetric range
    modulus = primes[0]
    coeffs = list(residues[0])
    for p, res in zip(primes[1:], residues[1:]):
        inv = pow(modulus % p, p - 2, p)
        for j in range(n + 1):
            delta = (res[j] - coeffs[j]) % p
            coeffs[j] = coeffs[j] + modulus * (delta * inv % p)
        modulus *= p
    half = modulus // 2
    coeffs = [c - modulus if c > half else c for c in coeffs]
    return CharPoly(tuple(coeffs))


_BERKOWITZ_LIMIT = 28


def char_poly(m: ExactMatrix, psd_hint: bool = False) -> CharPoly:
    """Exact characteristic polynomial of a square integer matrix."""
    if not m.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    if m.rows <= _BERKOWITZ_LIMIT:
        return char_poly_berkowitz(m)
    return char_poly_modular(m, psd_hint=psd_hint)


# ---------------------------------------------------------------------------
# Pseudo-determinant, rank, determinant, Cauchy-Binet
# ---------------------------------------------------------------------------

def pseudo_det(m: ExactMatrix, psd_hint: bool = False) -> Fraction:
    """Product of the non-zero eigenvalues; 1 for zero or empty matrices.

    Only meaningful for matrices with real spectrum and full eigenbasis
    (everything fed in here is symmetric); read off the lowest non-vanishing
    characteristic coefficient.
    """
    if not m.is_square():
        raise ValueError("pseudo-determinant needs a square matrix")
    p = char_poly(m, psd_hint=psd_hint)
    idx, c = p.lowest_nonzero()
    if idx == p.degree:  # zero (or empty) matrix: empty product
        return Fraction(1)
    sign = -1 if (p.degree - idx) % 2 else 1
    return Fraction(sign * c)


def pseudo_det_from_charpoly(p: CharPoly) -> Fraction:
    idx, c = p.lowest_nonzero()
    if idx == p.degree:
        return Fraction(1)
    sign = -1 if (p.degree - idx) % 2 else 1
    return Fraction(sign * c)


def rank(m: ExactMatrix) -> int:
    """Exact rank over Q by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in m.data]
    rows, cols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][c]
        for i in range(r + 1, rows):
            ai, ar = a[i], a[r]
            f = ai[c]
            if f == 0 and prev == 1:
                continue
            for j in range(c, cols):
                ai[j] = (pivot * ai[j] - f * ar[j]) // prev
        prev = pivot
        r += 1
        if r == rows:
            break
    return r


def det(m: ExactMatrix) -> int:
    """Exact determinant (Bareiss)."""
    if not m.is_square():
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [row[:] for row in m.data]
    sign = 1
    prev = 1
    for c in range(n - 1):
        pivot_row = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != c:
            a[c], a[pivot_row] = a[pivot_row], a[c]
            sign = -sign
        pivot = a[c][c]
        for i in range(c + 1, n):
            ai, ac = a[i], a[c]
            f = ai[c]
            for j in range(c, n):
                ai[j] = (pivot * ai[j] - f * ac[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def cauchy_binet_check(f: ExactMatrix, g: ExactMatrix) -> tuple[Fraction, Fraction]:
    """Both sides of the pseudo-determinant Cauchy-Binet identity.

    Left: Det(f^T g).  Right: sum of det(f[R,C]) * det(g[R,C]) over all
    square submatrices of size k, where k counts the non-zero eigenvalues
    of f^T g with algebraic multiplicity (for unequal factors the product
    can be non-diagonalizable, so this may be less than the rank; both
    sides then sit at the same characteristic coefficient).  Exponential
    in k, so keep the inputs small.
    """
    if (f.rows, f.cols) != (g.rows, g.cols):
        raise ValueError("shape mismatch")
    if f.cols > 8:
        raise ValueError("too many columns for minor enumeration")
    prod = f.transpose() @ g
    cp = char_poly(prod)
    lhs = pseudo_det_from_charpoly(cp)
    k = cp.degree - cp.nullity()
    if k == 0:
        return lhs, Fraction(1)
    total = 0
    rows = range(f.rows)
    cols = range(f.cols)
    for r_idx in combinations(rows, k):
        for c_idx in combinations(cols, k):
            df = det(f.submatrix(r_idx, c_idx))
            if df == 0 and f is g:
                continue
            dg = df if f is g else det(g.submatrix(r_idx, c_idx))
            total += df * dg
    return lhs, Fraction(total)


def is_rational_square(x: Fraction) -> bool:
    """True when x is the square of a rational."""
    x = Fraction(x)
    if x < 0:
        return False
    rn = isqrt(x.numerator)
    rd = isqrt(x.denominator)
    return rn * rn == x.numerator and rd * rd == x.denominator


def rational_sqrt(x: Fraction) -> Fraction:
    """Exact square root of a rational square."""
    x = Fraction(x)
    if not is_rational_square(x):
        raise ValueError(f"{x} is not a rational square")
    return Fraction(isqrt(x.numerator), isqrt(x.denominator))
