"""Squared analytic torsion and super determinants.

The torsion of a graded differential complex is computed along two
independent routes that must agree exactly:

* Hodge route:  prod_k Det(L_k)^(k (-1)^(k+1))
* Dirac route:  prod_k Det(D_k)^((-1)^k)   (the super pseudo-determinant)

``Det`` is the pseudo-determinant.  For complexes of dimension 0 both
formulas are empty products, so the torsion of an edgeless graph is 1
(matching the published cross-polytope and complement-sequence values).
The alternative vertex-count convention for edgeless graphs lives in the
experiment layer, where random sweeps need it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import ChainData, betti_vector
from .exact import (
    char_poly,
    is_rational_square,
    pseudo_det_from_charpoly,
    rational_str,
)


def sdet_hodge(cd: ChainData) -> Fraction:
    """Raw Hodge-block product prod Det(L_k)^(k(-1)^(k+1))."""
    out = Fraction(1)
    for k in range(cd.dimension + 1):
        e = k * (1 if (k + 1) % 2 == 0 else -1)
        if e:
            out *= cd.hodge_block_det(k) ** e
    return out


def sdet_dirac(cd: ChainData) -> Fraction:
    """Super pseudo-determinant prod Det(D_k)^((-1)^k), D_0 upstairs."""
    out = Fraction(1)
    for k in range(cd.dimension):
        out *= cd.dirac_block_det(k) ** (1 if k % 2 == 0 else -1)
    return out


def torsion_hodge(cd: ChainData) -> Fraction:
    if cd.n_total == 0:
        raise ValueError("empty complex has no torsion")
    return sdet_hodge(cd)


def torsion_dirac(cd: ChainData) -> Fraction:
    if cd.n_total == 0:
        raise ValueError("empty complex has no torsion")
    return sdet_dirac(cd)


def mckean_singer_sdet(cd: ChainData) -> Fraction:
    """prod Det(L_k)^((-1)^(k+1)); equal to 1 for every complex."""
    out = Fraction(1)
    for k in range(cd.dimension + 1):
        out *= cd.hodge_block_det(k) ** (1 if (k + 1) % 2 == 0 else -1)
    return out


def dirac_pseudo_det(cd: ChainData) -> int:
    """|prod_k Det(D_k)|, the absolute pseudo-determinant of D."""
    out = Fraction(1)
    for k in range(cd.dimension):
        out *= cd.dirac_block_det(k)
    assert out.denominator == 1
    return abs(out.numerator)


def rank_alternation(cd: ChainData) -> int:
    """sum_k (-1)^k rank(d_k): the exact scaling exponent base.

    Scaling every d_k by lambda multiplies each Det(D_k) by lambda^(2 rank d_k),
    so the torsion picks up lambda^(2 * rank_alternation).  This equals the
    Euler characteristic for complete graphs but not in general.
    """
    return sum((-1) ** k * cd.d_rank(k) for k in range(cd.dimension))


def scaled_torsion(cd: ChainData, lam: Fraction) -> Fraction:
    """Torsion of the complex with every d_k multiplied by lam.

    Computed twice: directly, from pseudo-determinants of the scaled integer
    blocks with the denominator power tracked separately, and in closed form
    lam^(2 * rank_alternation) * torsion; both must agree.
    """
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("scaling factor must be non-zero")
    p, q = lam.numerator, lam.denominator
    direct = Fraction(1)
    for k in range(cd.dimension):
        block = cd.dirac_block(k).scaled(p * p)
        cp = char_poly(block, psd_hint=True)
        pd = pseudo_det_from_charpoly(cp)
        r = cp.degree - cp.nullity()
        val = pd / Fraction(q) ** (2 * r)
        direct *= val ** (1 if k % 2 == 0 else -1)
    closed = lam ** (2 * rank_alternation(cd)) * sdet_dirac(cd)
    if direct != closed:
        raise AssertionError("scaled torsion routes disagree")
    return direct


def shaved_d(cd: ChainData, mode: str) -> ChainData:
    """Chain data with the first vertex and/or the last facet removed from D.

    mode 'first' drops the first column of d_0 (the first row and column of
    the Dirac operator), mode 'last' drops the last row of the top
    derivative, mode 'both' does both.  The result is still a graded
    differential complex, just not a simplicial one.
    """
    if mode not in ("first", "last", "both"):
        raise ValueError("mode must be 'first', 'last' or 'both'")
    if cd.dimension == 0:
        raise ValueError("cannot shave a complex without derivatives")
    d = [dk.copy() for dk in cd.d]
    grading = list(cd.grading)
    if mode in ("first", "both"):
        if grading[0] < 2:
            raise ValueError("need at least two vertices to shave the first")
        d[0] = d[0].submatrix(range(d[0].rows), range(1, d[0].cols))
        grading[0] -= 1
    if mode in ("last", "both"):
        top = len(d) - 1
        if grading[-1] < 1:
            raise ValueError("empty top grading")
        d[top] = d[top].submatrix(range(d[top].rows - 1), range(d[top].cols))
        grading[-1] -= 1
    return ChainData(grading, d, complex=None, check_dd=False)


def shaved_sdet(cd: ChainData, mode: str) -> Fraction:
    """Super determinant of the shaved Dirac operator."""
    return sdet_dirac(shaved_d(cd, mode))


def shaved_pseudo_det(cd: ChainData, mode: str) -> int:
    """|Det| of the shaved Dirac operator (product over shaved blocks)."""
    return dirac_pseudo_det(shaved_d(cd, mode))


def phi(cd: ChainData, kind: str) -> Fraction:
    """Tree-balance functional: 1 on contractible complexes and spheres.

    kind 'contractible' shaves the first vertex, kind 'sphere' shaves both
    the first vertex and the last facet.  The caller is responsible for
    verifying the topology (see graphtorsion.topology).
    """
    if kind == "contractible":
        return shaved_sdet(cd, "first")
    if kind == "sphere":
        return shaved_sdet(cd, "both")
    raise ValueError("kind must be 'contractible' or 'sphere'")


def parity_tree_products(cd: ChainData) -> tuple[int, int]:
    """(prod over even k, prod over odd k) of Det(D_k); ratio is torsion."""
    even = Fraction(1)
    odd = Fraction(1)
    for k in range(cd.dimension):
        if k % 2 == 0:
            even *= cd.dirac_block_det(k)
        else:
            odd *= cd.dirac_block_det(k)
    assert even.denominator == 1 and odd.denominator == 1
    return even.numerator, odd.numerator


@dataclass
class TorsionReport:
    """Full torsion bundle of one complex."""

    a_hodge: Fraction
    a_dirac: Fraction
    sdet_hodge: Fraction
    det_dirac_abs: int
    hodge_dets: list
    dirac_dets: list
    f_vector: tuple
    betti: tuple
    tree_products: tuple

    def to_json_dict(self) -> dict:
        return {
            "torsion": rational_str(self.a_hodge),
            "torsion_dirac_route": rational_str(self.a_dirac),
            "mckean_singer": rational_str(self.sdet_hodge),
            "dirac_pseudo_det": str(self.det_dirac_abs),
            "hodge_dets": [rational_str(x) for x in self.hodge_dets],
            "dirac_dets": [rational_str(x) for x in self.dirac_dets],
            "f_vector": list(self.f_vector),
            "betti": list(self.betti),
            "tree_product_even": str(self.tree_products[0]),
            "tree_product_odd": str(self.tree_products[1]),
        }


def torsion_report(cd: ChainData) -> TorsionReport:
    a_h = torsion_hodge(cd)
    a_d = torsion_dirac(cd)
    if a_h != a_d:
        raise AssertionError("Hodge and Dirac torsion routes disagree")
    return TorsionReport(
        a_hodge=a_h,
        a_dirac=a_d,
        sdet_hodge=mckean_singer_sdet(cd),
        det_dirac_abs=dirac_pseudo_det(cd),
        hodge_dets=cd.hodge_dets(),
        dirac_dets=cd.dirac_dets(),
        f_vector=cd.grading,
        betti=betti_vector(cd),
        tree_products=parity_tree_products(cd),
    )


def torsion_squares_check(cd: ChainData) -> tuple[bool, bool]:
    """Det(D)*A and Det(D)/A are both rational squares."""
    a = torsion_dirac(cd)
    det_d = dirac_pseudo_det(cd)
    return is_rational_square(det_d * a), is_rational_square(det_d / a)
