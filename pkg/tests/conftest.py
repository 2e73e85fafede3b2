"""Shared corpus of instances for the property suites.

The corpus mixes every family the library constructs: cycles, simplices,
bipartite graphs, platonic spheres and their modifications, products,
complements, random graphs, and contractible cone-built graphs.  Chain
data is cached per session since block determinants are the expensive part.
"""

from fractions import Fraction

import pytest

from graphtorsion.chains import build_chain
from graphtorsion.constructors import (
    complete,
    complete_bipartite,
    complete_tripartite,
    complement,
    cycle,
    disjoint_union,
    erdos_renyi,
    flat_torus,
    icosahedron,
    icosahedron_with_ear,
    icosahedron_with_hair,
    icosahedron_with_hat,
    icosahedron_with_nose,
    join,
    octahedron,
    path,
    random_cone_built_graph,
    random_edge_subdivisions,
    star,
    strong_product,
    wedge,
    wheel,
    cross_polytope,
)
from graphtorsion.simplicial import Graph, clique_complex


def house_graph() -> Graph:
    """Square 0-1-2-3 with a roof apex 4 over the edge (2, 3)."""
    return Graph(range(5), [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)])


def dehn_sommerville_graph() -> Graph:
    """(C_4 + C_4) joined with the 0-sphere."""
    return join(disjoint_union(cycle(4), cycle(4)), Graph([0, 1], []))


def cactus_graph() -> Graph:
    """C_5 with two pendant trees."""
    return Graph(range(8), list(cycle(5).edges) + [(0, 5), (5, 6), (2, 7)])


def corpus_entries() -> list:
    entries = [
        ("K1", complete(1)),
        ("K2", complete(2)),
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("K6", complete(6)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C9", cycle(9)),
        ("P2", path(2)),
        ("P5", path(5)),
        ("K23", complete_bipartite(2, 3)),
        ("K33", complete_bipartite(3, 3)),
        ("K123", complete_tripartite(1, 2, 3)),
        ("star6", star(6)),
        ("wheel5", wheel(5)),
        ("wheel7", wheel(7)),
        ("octahedron", octahedron()),
        ("icosahedron", icosahedron()),
        ("icosa_hair", icosahedron_with_hair()),
        ("icosa_nose", icosahedron_with_nose()),
        ("icosa_hat", icosahedron_with_hat()),
        ("icosa_ear", icosahedron_with_ear()),
        ("cross3", cross_polytope(3)),
        ("dehn_sommerville", dehn_sommerville_graph()),
        ("house", house_graph()),
        ("torus44", flat_torus(4, 4)),
        ("subdiv_icosa2", random_edge_subdivisions(icosahedron(), 2, seed=3)),
        ("bouquet45", wedge(cycle(4), cycle(5), 0, 0)),
        ("cactus", cactus_graph()),
        ("c7_complement", complement(cycle(7))),
        ("c4xk2", strong_product(cycle(4), complete(2))),
        ("er7a", erdos_renyi(7, Fraction(1, 2), 11)),
        ("er7b", erdos_renyi(7, Fraction(1, 2), 12)),
        ("er8", erdos_renyi(8, Fraction(2, 5), 13)),
        ("cone9", random_cone_built_graph(9, 5)),
        ("cone10", random_cone_built_graph(10, 6)),
    ]
    return entries


@pytest.fixture(scope="session")
def corpus():
    return corpus_entries()


@pytest.fixture(scope="session")
def corpus_chains(corpus):
    """name -> (graph, complex, chain data), built once."""
    out = {}
    for name, g in corpus:
        c = clique_complex(g)
        out[name] = (g, c, build_chain(c))
    return out
