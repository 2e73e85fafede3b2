"""Exact analytic torsion and spectral invariants of simplicial complexes."""

from .chains import ChainData, betti_vector, build_chain, sign
from .exact import (
    BigRational,
    CharPoly,
    ExactMatrix,
    cauchy_binet_check,
    char_poly,
    pseudo_det,
    rank,
    rational_str,
)
from .simplicial import (
    Graph,
    SimplicialComplex,
    clique_complex,
    complex_from_facets,
    dual_graph,
    f_vector,
    parity_simplex_graph,
    unit_sphere,
)
from .torsion import (
    TorsionReport,
    dirac_pseudo_det,
    mckean_singer_sdet,
    parity_tree_products,
    phi,
    scaled_torsion,
    shaved_pseudo_det,
    shaved_sdet,
    torsion_dirac,
    torsion_hodge,
    torsion_report,
)

__version__ = "0.1.0"


def torsion_of_graph(g: Graph) -> BigRational:
    """Squared analytic torsion of a graph via its clique complex."""
    return torsion_dirac(build_chain(clique_complex(g)))
