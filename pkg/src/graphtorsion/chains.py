"""Incidence matrices, Dirac and Hodge operators, Betti numbers.

The exterior derivative d_k maps k-forms to (k+1)-forms, stored as the
f_{k+1} x f_k integer matrix d_k[cofacet, face] = sign(face, cofacet).
The Dirac operator D places each d_k below the diagonal of the dimension
grading and its transpose above; L = D^2 is block diagonal with the Hodge
blocks L_k = d_k^T d_k + d_{k-1} d_{k-1}^T.

A ``ChainData`` can also carry a non-simplicial graded differential complex
(the interaction complex uses this), so all torsion machinery downstream is
written against the grading and the d matrices only.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import CharPoly, ExactMatrix, char_poly, pseudo_det_from_charpoly, rank
from .simplicial import Simplex, SimplicialComplex


def sign(x: Simplex, y: Simplex) -> int:
    """Incidence sign: 0 unless x is a codimension-1 face of y.

    For x < y with one vertex missing, the sign is (-1)^i where i is the
    position of the missing vertex in y's increasing order.
    """
    if len(x) + 1 != len(y):
        return 0
    xs = set(x)
    missing = None
    for i, v in enumerate(y):
        if v not in xs:
            if missing is not None:
                return 0
            missing = i
    if missing is None:
        return 0
    return -1 if missing % 2 else 1


class ChainData:
    """Graded differential complex: grading sizes plus the d_k matrices."""

    def __init__(self, grading, d, complex: SimplicialComplex | None = None,
                 check_dd: bool = True):
        self.grading = tuple(grading)
        self.d = tuple(d)
        self.complex = complex
        if len(self.d) != max(len(self.grading) - 1, 0):
            raise ValueError("need one derivative per consecutive grade pair")
        for k, dk in enumerate(self.d):
            if (dk.rows, dk.cols) != (self.grading[k + 1], self.grading[k]):
                raise ValueError(f"d_{k} has the wrong shape")
        if check_dd:
            for k in range(len(self.d) - 1):
                prod = self.d[k + 1] @ self.d[k]
                if any(any(row) for row in prod.data):
                    raise ValueError(f"d_{k + 1} d_{k} != 0")
        self._dirac = None
        self._hodge = None
        self._dirac_cp: dict[int, CharPoly] = {}
        self._hodge_cp: dict[int, CharPoly] = {}
        self._d_ranks: dict[int, int] = {}

    @property
    def dimension(self) -> int:
        return len(self.grading) - 1

    @property
    def n_total(self) -> int:
        return sum(self.grading)

    def grade_offsets(self) -> list[int]:
        offs = [0]
        for size in self.grading:
            offs.append(offs[-1] + size)
        return offs

    # -- assembled operators ------------------------------------------------

    @property
    def dirac(self) -> ExactMatrix:
        if self._dirac is None:
            n = self.n_total
            offs = self.grade_offsets()
            m = ExactMatrix.zeros(n, n)
            for k, dk in enumerate(self.d):
                r0, c0 = offs[k + 1], offs[k]
                for i in range(dk.rows):
                    for j in range(dk.cols):
                        v = dk.data[i][j]
                        if v:
                            m.data[r0 + i][c0 + j] = v
                            m.data[c0 + j][r0 + i] = v
            self._dirac = m
        return self._dirac

    @property
    def hodge(self) -> ExactMatrix:
        if self._hodge is None:
            self._hodge = self.dirac @ self.dirac
        return self._hodge

    # -- graded blocks ------------------------------------------------------

    def dirac_block(self, k: int) -> ExactMatrix:
        """D_k = d_k^T d_k, an f_k x f_k Gram matrix."""
        if not 0 <= k <= self.dimension - 1:
            raise ValueError(f"no Dirac block D_{k}")
        dk = self.d[k]
        return dk.transpose() @ dk

    def hodge_block(self, k: int) -> ExactMatrix:
        """L_k = d_k^T d_k + d_{k-1} d_{k-1}^T."""
        if not 0 <= k <= self.dimension:
            raise ValueError(f"no Hodge block L_{k}")
        fk = self.grading[k]
        block = ExactMatrix.zeros(fk, fk)
        if k < len(self.d):
            dk = self.d[k]
            block = block + (dk.transpose() @ dk)
        if k > 0:
            dkm = self.d[k - 1]
            block = block + (dkm @ dkm.transpose())
        return block

    def dirac_columns(self, k: int) -> ExactMatrix:
        """F_k = d_k + d_{k-1}^T as an (n x f_k) slice of D."""
        if not 0 <= k <= self.dimension:
            raise ValueError(f"no Dirac column block F_{k}")
        offs = self.grade_offsets()
        d = self.dirac
        cols = range(offs[k], offs[k + 1])
        return d.submatrix(range(self.n_total), cols)

    # -- cached exact spectra-side data --------------------------------------

    def dirac_block_charpoly(self, k: int) -> CharPoly:
        if k not in self._dirac_cp:
            dk = self.d[k]
            if dk.rows < dk.cols:
                # d_k d_k^T is the smaller isospectral Gram partner; the
                # characteristic polynomials differ by a factor lambda^gap
                partner = dk @ dk.transpose()
                cp = char_poly(partner, psd_hint=True)
                gap = dk.cols - dk.rows
                self._dirac_cp[k] = CharPoly((0,) * gap + cp.coeffs)
            else:
                self._dirac_cp[k] = char_poly(self.dirac_block(k), psd_hint=True)
        return self._dirac_cp[k]

    def hodge_block_charpoly(self, k: int) -> CharPoly:
        if k not in self._hodge_cp:
            self._hodge_cp[k] = char_poly(self.hodge_block(k), psd_hint=True)
        return self._hodge_cp[k]

    def dirac_block_det(self, k: int) -> Fraction:
        return pseudo_det_from_charpoly(self.dirac_block_charpoly(k))

    def hodge_block_det(self, k: int) -> Fraction:
        return pseudo_det_from_charpoly(self.hodge_block_charpoly(k))

    def dirac_dets(self) -> list[Fraction]:
        return [self.dirac_block_det(k) for k in range(self.dimension)]

    def hodge_dets(self) -> list[Fraction]:
        return [self.hodge_block_det(k) for k in range(self.dimension + 1)]

    def d_rank(self, k: int) -> int:
        """rank of d_k over Q; 0 for absent derivatives."""
        if k < 0 or k >= len(self.d):
            return 0
        if k not in self._d_ranks:
            self._d_ranks[k] = rank(self.d[k])
        return self._d_ranks[k]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * fk for k, fk in enumerate(self.grading))


def build_chain(c: SimplicialComplex) -> ChainData:
    """Assemble all d_k of a simplicial complex in its fixed indexing."""
    if c.n_simplices == 0:
        raise ValueError("empty complex has no chain data")
    d = []
    for k in range(c.dimension):
        faces = c.simplices_of_dim(k)
        cofaces = c.simplices_of_dim(k + 1)
        col = {s: j for j, s in enumerate(faces)}
        dk = ExactMatrix.zeros(len(cofaces), len(faces))
        for i, y in enumerate(cofaces):
            row = dk.data[i]
            for drop in range(len(y)):
                face = y[:drop] + y[drop + 1:]
                row[col[face]] = -1 if drop % 2 else 1
        d.append(dk)
    return ChainData(c.f_vector(), d, complex=c)


def betti_vector(cd: ChainData) -> tuple:
    """b_k = f_k - rank(d_k) - rank(d_{k-1}), via exact ranks."""
    return tuple(
        cd.grading[k] - cd.d_rank(k) - cd.d_rank(k - 1)
        for k in range(cd.dimension + 1)
    )


def hodge_block(cd: ChainData, k: int) -> ExactMatrix:
    return cd.hodge_block(k)


def dirac_block(cd: ChainData, k: int) -> ExactMatrix:
    return cd.dirac_block(k)


def dirac_columns(cd: ChainData, k: int) -> ExactMatrix:
    return cd.dirac_columns(k)
