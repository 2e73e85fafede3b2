"""Floating-point spectra, zeta functions, and the Barycentric operator.

Zero eigenvalues are never identified by thresholding: the kernel dimension
comes from the exact characteristic polynomial, the smallest `nullity`
eigenvalues are discarded, and the rest are safe to power and log.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chains import ChainData, build_chain
from .constructors import barycentric_refinement
from .exact import ExactMatrix, char_poly
from .simplicial import Graph, clique_complex
from .torsion import torsion_dirac


@dataclass
class Spectrum:
    eigenvalues: list[float]        # ascending, zeros pinned exactly
    zero_count: int                 # exact kernel dimension
    nonzero_eigenvalues: list[float]


def spectrum(m: ExactMatrix) -> Spectrum:
    """Double-precision eigenvalues with the zero multiplicity pinned exactly."""
    if not m.is_symmetric():
        raise ValueError("spectrum requires a symmetric matrix")
    if m.rows == 0:
        return Spectrum([], 0, [])
    eigs = np.linalg.eigvalsh(np.array(m.data, dtype=np.float64))
    nullity = char_poly(m).nullity()
    order = np.argsort(np.abs(eigs))
    nonzero = sorted(float(x) for x in eigs[order[nullity:]])
    return Spectrum(sorted(nonzero + [0.0] * nullity), nullity, nonzero)


def _block_nonzero_eigs(cd: ChainData, k: int) -> np.ndarray:
    block = cd.dirac_block(k)
    if block.rows == 0:
        return np.array([])
    eigs = np.linalg.eigvalsh(np.array(block.data, dtype=np.float64))
    nullity = cd.dirac_block_charpoly(k).nullity()
    order = np.argsort(np.abs(eigs))
    return eigs[order[nullity:]]


def dirac_zeta(cd: ChainData, s) -> complex | float:
    """zeta(s) = sum_k (-1)^k sum over non-zero eigenvalues of D_k of l^-s."""
    total = 0.0 if not isinstance(s, complex) else 0.0 + 0.0j
    for k in range(cd.dimension):
        ssum = sum(lam ** (-s) for lam in _block_nonzero_eigs(cd, k))
        total += ssum if k % 2 == 0 else -ssum
    return total


def zeta_torsion(cd: ChainData) -> float:
    """exp(-zeta'(0)): the spectral route to the torsion value."""
    log_a = 0.0
    for k in range(cd.dimension):
        ssum = float(sum(math.log(lam) for lam in _block_nonzero_eigs(cd, k)))
        log_a += ssum if k % 2 == 0 else -ssum
    return math.exp(log_a)


def zeta_csv_rows(cd: ChainData, lo: float, hi: float, steps: int) -> list[tuple]:
    """(s, zeta(s)) samples for external plotting."""
    if steps < 2:
        raise ValueError("need at least two sample points")
    out = []
    for i in range(steps):
        s = lo + (hi - lo) * i / (steps - 1)
        out.append((s, float(dirac_zeta(cd, s))))
    return out


# -- Barycentric refinement operator -----------------------------------------

def _stirling2(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    row = [1] + [0] * n
    for i in range(1, n + 1):
        new = [0] * (n + 1)
        for j in range(1, i + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def barycentric_operator(d: int) -> ExactMatrix:
    """Matrix A with A[j][k] = (j+1)! * S(k+1, j+1) mapping f-vectors of
    d-dimensional complexes to the f-vectors of their refinements."""
    if d < 0:
        raise ValueError("dimension must be >= 0")
    fact = [math.factorial(j + 1) for j in range(d + 1)]
    data = [
        [fact[j] * _stirling2(k + 1, j + 1) for k in range(d + 1)]
        for j in range(d + 1)
    ]
    return ExactMatrix.from_rows(data)


def apply_barycentric_operator(op: ExactMatrix, f: tuple) -> tuple:
    if op.cols != len(f):
        raise ValueError("f-vector length does not match the operator")
    return tuple(
        sum(op.data[j][k] * f[k] for k in range(op.cols)) for j in range(op.rows)
    )


def perron_ratio(d: int) -> float:
    """Limit of the refinement torsion sequence for even d: the ratio of the
    first to the last entry of the eigenvector of the top eigenvalue (d+1)!.

    Solved exactly by back substitution; the operator is upper triangular
    with strictly increasing diagonal, so the top eigenvalue is simple.
    """
    op = barycentric_operator(d)
    top = Fraction(math.factorial(d + 1))
    g = [Fraction(0)] * (d + 1)
    g[d] = Fraction(1)
    for j in range(d - 1, -1, -1):
        s = sum(Fraction(op.data[j][k]) * g[k] for k in range(j + 1, d + 1))
        g[j] = s / (top - op.data[j][j])
    return float(g[0] / g[d])


def barycentric_limit(g: Graph, d: int, steps: int) -> tuple[list[Fraction], float]:
    """Exact torsion along Barycentric refinements of an even-dimensional
    sphere, plus the eigenvector ratio the sequence converges to."""
    if d % 2 == 1:
        raise ValueError(
            "refinement torsion diverges for odd dimensional spheres")
    if steps < 0 or steps > 3:
        raise ValueError("refinement step count limited to 0..3")
    values = []
    complex_ = clique_complex(g)
    for step in range(steps + 1):
        values.append(torsion_dirac(build_chain(complex_)))
        if step < steps:
            complex_ = clique_complex(barycentric_refinement(complex_))
    return values, perron_ratio(d)
