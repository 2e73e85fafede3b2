"""Topology predicates: contractibility, sphere recognition, dimension.

Contractibility is the inductive notion: a graph is contractible when some
vertex has a contractible unit sphere and a contractible complement, with
the one-point graph as base case.  A graph is a d-sphere when every unit
sphere is a (d-1)-sphere and some vertex deletion is contractible; the
empty graph is the (-1)-sphere.

Both searches are budgeted (counted in visited nodes) and memoized on
canonical forms, computed by color refinement with individualization.  An
exhausted budget yields the honest verdict "unknown", never a guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .simplicial import Graph, SimplicialComplex, unit_sphere

YES = "yes"
NO = "no"
UNKNOWN = "unknown"

DEFAULT_BUDGET = 10**5


@dataclass
class TopologyVerdict:
    contractible: str = UNKNOWN
    sphere_dim: int | None = None
    witness: tuple = ()
    search_budget_exhausted: bool = False


# -- canonical forms ---------------------------------------------------------

def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    n = len(nbrs)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in nbrs[v])))
            for v in range(n)
        ]
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _encode(nbrs: list[list[int]], order: list[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    code = 0
    for v in order:
        for w in nbrs[v]:
            i, j = pos[v], pos[w]
            if i < j:
                code |= 1 << (i * n + j)
    return code


def canonical_key(g: Graph):
    """Canonical form: (n, minimal adjacency code over refinement-guided
    orderings).  Equal keys if and only if the graphs are isomorphic."""
    n = g.n_vertices
    if n == 0:
        return (0, 0)
    relabel = {v: i for i, v in enumerate(g.vertices)}
    nbrs = [[] for _ in range(n)]
    for a, b in g.edges:
        nbrs[relabel[a]].append(relabel[b])
        nbrs[relabel[b]].append(relabel[a])
    best = None

    def rec(colors: list[int]):
        nonlocal best
        colors = _refine(nbrs, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        split = [c for c, vs in sorted(cells.items()) if len(vs) > 1]
        if not split:
            order = sorted(range(n), key=lambda v: colors[v])
            code = _encode(nbrs, order)
            if best is None or code < best:
                best = code
            return
        target = split[0]
        for v in cells[target]:
            branched = [c + n if w == v else c for w, c in enumerate(colors)]
            rec(branched)

    rec([0] * n)
    return (n, best)


# -- budgeted searches --------------------------------------------------------

class _Search:
    def __init__(self, budget: int):
        self.budget = budget
        self.exhausted = False
        self.contract_memo: dict = {}
        self.sphere_memo: dict = {}
        self.canon_cache: dict = {}

    def canon(self, g: Graph):
        key = (g.vertices, g.edges)
        if key not in self.canon_cache:
            self.canon_cache[key] = canonical_key(g)
        return self.canon_cache[key]

    def tick(self) -> bool:
        if self.budget <= 0:
            self.exhausted = True
            return False
        self.budget -= 1
        return True

    def contractible(self, g: Graph) -> str:
        n = g.n_vertices
        if n == 0:
            return NO
        if n == 1:
            return YES
        if not g.is_connected():
            return NO
        key = self.canon(g)
        if key in self.contract_memo:
            return self.contract_memo[key]
        if not self.tick():
            return UNKNOWN
        saw_unknown = False
        result = None
        for v in sorted(g.vertices, key=g.degree):
            s_status = self.contractible(unit_sphere(g, v))
            if s_status == UNKNOWN:
                saw_unknown = True
                continue
            if s_status == NO:
                continue
            rest_status = self.contractible(g.without_vertex(v))
            if rest_status == YES:
                result = YES
                break
            if rest_status == UNKNOWN:
                saw_unknown = True
        if result is None:
            result = UNKNOWN if saw_unknown else NO
        if result != UNKNOWN:
            self.contract_memo[key] = result
        return result

    def witness(self, g: Graph) -> tuple:
        """Removal order for a graph already known contractible; every step
        deletes a vertex whose unit sphere is contractible, ending at a
        single vertex.  Runs against the warm memo, so it is cheap."""
        order = []
        while g.n_vertices > 1:
            for v in sorted(g.vertices, key=g.degree):
                if self.contractible(unit_sphere(g, v)) != YES:
                    continue
                rest = g.without_vertex(v)
                if self.contractible(rest) == YES:
                    order.append(v)
                    g = rest
                    break
            else:
                raise AssertionError("witness extraction diverged from search")
        return tuple(order) + (g.vertices[0],)

    def sphere(self, g: Graph, d: int) -> str:
        if d < -1:
            return NO
        if d == -1:
            return YES if g.n_vertices == 0 else NO
        if g.n_vertices == 0:
            return NO
        key = (self.canon(g), d)
        if key in self.sphere_memo:
            return self.sphere_memo[key]
        if not self.tick():
            return UNKNOWN
        spheres_unknown = False
        result = None
        for v in g.vertices:
            s = self.sphere(unit_sphere(g, v), d - 1)
            if s == NO:
                result = NO
                break
            if s == UNKNOWN:
                spheres_unknown = True
        if result is None:
            deletion = NO
            for v in g.vertices:
                status = self.contractible(g.without_vertex(v))
                if status == YES:
                    deletion = YES
                    break
                if status == UNKNOWN:
                    deletion = UNKNOWN
            if spheres_unknown:
                result = UNKNOWN
            elif deletion == YES:
                result = YES
            else:
                result = UNKNOWN if deletion == UNKNOWN else NO
        if result != UNKNOWN:
            self.sphere_memo[key] = result
        return result


def is_contractible(g: Graph, budget: int = DEFAULT_BUDGET) -> TopologyVerdict:
    search = _Search(budget)
    status = search.contractible(g)
    witness = search.witness(g) if status == YES else ()
    return TopologyVerdict(
        contractible=status,
        witness=witness,
        search_budget_exhausted=search.exhausted,
    )


def is_sphere(g: Graph, d: int, budget: int = DEFAULT_BUDGET) -> str:
    if d < -1:
        raise ValueError("dimension must be >= -1")
    search = _Search(budget)
    return search.sphere(g, d)


def dimension(c: SimplicialComplex) -> int:
    return c.dimension


# -- fast exact recognizers for the discrete-manifold corpus -----------------

def _is_cycle_graph(g: Graph, min_len: int = 3) -> bool:
    return (
        g.n_vertices >= min_len
        and g.is_connected()
        and all(g.degree(v) == 2 for v in g.vertices)
    )


def is_two_manifold(g: Graph) -> bool:
    """Every unit sphere is a cycle with at least 4 vertices."""
    return g.n_vertices > 0 and all(
        _is_cycle_graph(unit_sphere(g, v), min_len=4) for v in g.vertices
    )


def is_two_sphere(g: Graph) -> bool:
    """Connected 2-manifold with Euler characteristic 2."""
    if not (g.is_connected() and is_two_manifold(g)):
        return False
    f0 = g.n_vertices
    f1 = g.n_edges
    f2 = sum(
        1
        for a, b in g.edges
        for c in g.neighbors(a) & g.neighbors(b)
        if c > b
    )
    return f0 - f1 + f2 == 2
