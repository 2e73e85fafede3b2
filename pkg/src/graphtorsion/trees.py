"""Matrix-tree counts and the 2-sphere tree duality check.

The rooted spanning tree count of a connected graph is the pseudo
determinant of its Kirchhoff matrix; the plain count divides by the number
of vertices (always exactly).  A brute-force subset enumeration serves as
the independent oracle on small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exact import ExactMatrix, pseudo_det
from .simplicial import Graph, clique_complex, dual_graph
from .topology import is_two_sphere


@dataclass(frozen=True)
class TreeCounts:
    rooted: int
    unrooted: int


def kirchhoff_matrix(g: Graph) -> ExactMatrix:
    """Degree matrix minus adjacency matrix."""
    idx = {v: i for i, v in enumerate(g.vertices)}
    n = g.n_vertices
    m = ExactMatrix.zeros(n, n)
    for v in g.vertices:
        m.data[idx[v]][idx[v]] = g.degree(v)
    for a, b in g.edges:
        m.data[idx[a]][idx[b]] = -1
        m.data[idx[b]][idx[a]] = -1
    return m


def rooted_spanning_tree_count(g: Graph) -> int:
    """Det(L_0): the number of rooted spanning trees."""
    if not g.is_connected():
        raise ValueError("spanning trees need a connected graph")
    value = pseudo_det(kirchhoff_matrix(g), psd_hint=True)
    assert value.denominator == 1
    return value.numerator


def spanning_tree_count(g: Graph) -> int:
    rooted = rooted_spanning_tree_count(g)
    n = g.n_vertices
    if rooted % n:
        raise AssertionError("rooted count not divisible by |V|")
    return rooted // n


def tree_counts(g: Graph) -> TreeCounts:
    rooted = rooted_spanning_tree_count(g)
    return TreeCounts(rooted=rooted, unrooted=rooted // g.n_vertices)


def brute_force_spanning_trees(g: Graph) -> int:
    """Exhaustive oracle: count edge subsets of size |V|-1 forming a tree."""
    if g.n_edges > 25:
        raise ValueError("brute force capped at 25 edges")
    n = g.n_vertices
    if n == 0:
        return 0
    if n == 1:
        return 1
    idx = {v: i for i, v in enumerate(g.vertices)}
    count = 0
    for subset in combinations(sorted(g.edges), n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for a, b in subset:
            ra, rb = find(idx[a]), find(idx[b])
            if ra == rb:
                acyclic = False
                break
            parent[ra] = rb
        if acyclic:
            count += 1
    return count


def von_staudt_check(g: Graph) -> tuple[int, int]:
    """Spanning-tree counts of a 2-sphere and of its dual graph.

    The two counts agree exactly on 2-spheres; the duality fails for
    general graphs.
    """
    if not is_two_sphere(g):
        raise ValueError("tree duality check requires a 2-sphere")
    trees_g = spanning_tree_count(g)
    dual = dual_graph(clique_complex(g))
    trees_dual = spanning_tree_count(dual)
    return trees_g, trees_dual
