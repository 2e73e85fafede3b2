"""Graphs, clique complexes and abstract simplicial complexes.

Simplices are strictly increasing tuples of integer vertex labels; this
ordering is the orientation choice, and every incidence sign downstream
derives from it.  A complex keeps its simplices grouped by dimension and
lexicographically sorted inside each dimension, which pins the row/column
indexing of every operator matrix bit for bit.
"""

from __future__ import annotations

from itertools import combinations

Simplex = tuple  # strictly increasing tuple of int labels


def simplex(vertices) -> Simplex:
    """Validate and normalize a simplex: nonempty, distinct, increasing."""
    s = tuple(int(v) for v in vertices)
    if not s:
        raise ValueError("a simplex needs at least one vertex")
    if any(a >= b for a, b in zip(s, s[1:])):
        ss = tuple(sorted(set(s)))
        if len(ss) != len(s):
            raise ValueError(f"repeated vertex in simplex {s}")
        s = ss
    return s


class Graph:
    """Finite simple graph with sorted integer vertex labels."""

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, vertices, edges):
        vs = sorted(set(int(v) for v in vertices))
        es = set()
        for e in edges:
            a, b = int(e[0]), int(e[1])
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            es.add((a, b) if a < b else (b, a))
        vset = set(vs)
        for a, b in es:
            if a not in vset or b not in vset:
                raise ValueError(f"edge ({a},{b}) has an unlisted endpoint")
        self.vertices = tuple(vs)
        self.edges = frozenset(es)
        adj = {v: set() for v in vs}
        for a, b in es:
            adj[a].add(b)
            adj[b].add(a)
        self._adj = adj

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> set:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, a: int, b: int) -> bool:
        return (a, b) in self.edges or (b, a) in self.edges

    def induced(self, subset) -> "Graph":
        sub = set(subset)
        return Graph(sub, [e for e in self.edges if e[0] in sub and e[1] in sub])

    def without_vertex(self, v: int) -> "Graph":
        return self.induced(set(self.vertices) - {v})

    def relabeled(self, offset: int = 0) -> "Graph":
        """Relabel vertices to 0..n-1 (plus offset) preserving order."""
        mapping = {v: i + offset for i, v in enumerate(self.vertices)}
        return Graph(mapping.values(),
                     [(mapping[a], mapping[b]) for a, b in self.edges])

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices

    def components(self) -> list:
        remaining = set(self.vertices)
        out = []
        while remaining:
            start = min(remaining)
            seen = {start}
            stack = [start]
            while stack:
                for w in self._adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(self.induced(seen))
            remaining -= seen
        return out

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph({self.n_vertices} vertices, {self.n_edges} edges)"


_CLOSURE_CHECK_LIMIT = 10**4


class SimplicialComplex:
    """Finite abstract simplicial complex with a fixed total simplex order."""

    __slots__ = ("by_dim", "index")

    def __init__(self, simplices):
        groups: dict[int, set] = {}
        for s in simplices:
            s = simplex(s)
            groups.setdefault(len(s) - 1, set()).add(s)
        if groups and sorted(groups) != list(range(max(groups) + 1)):
            raise ValueError("missing an entire dimension: not closed downward")
        self.by_dim = tuple(tuple(sorted(groups[k])) for k in sorted(groups))
        index = {}
        pos = 0
        for sims in self.by_dim:
            for s in sims:
                index[s] = pos
                pos += 1
        self.index = index
        if len(index) <= _CLOSURE_CHECK_LIMIT:
            self._check_closure()

    def _check_closure(self):
        for k in range(1, len(self.by_dim)):
            for s in self.by_dim[k]:
                for face in combinations(s, k):
                    if face not in self.index:
                        raise ValueError(
                            f"complex not closed: {face} missing under {s}")

    @property
    def dimension(self) -> int:
        return len(self.by_dim) - 1

    @property
    def n_simplices(self) -> int:
        return len(self.index)

    def simplices_of_dim(self, k: int) -> tuple:
        return self.by_dim[k] if 0 <= k <= self.dimension else ()

    def all_simplices(self):
        for sims in self.by_dim:
            yield from sims

    def __contains__(self, s) -> bool:
        return tuple(s) in self.index

    def f_vector(self) -> tuple:
        return tuple(len(sims) for sims in self.by_dim)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(sims) for k, sims in enumerate(self.by_dim))

    def facets(self) -> list:
        """Simplices contained in no larger simplex."""
        covered = set()
        for k in range(1, len(self.by_dim)):
            for s in self.by_dim[k]:
                covered.update(combinations(s, k))
        return [s for s in self.all_simplices() if s not in covered]

    def skeleton_graph(self) -> Graph:
        verts = [s[0] for s in self.by_dim[0]] if self.by_dim else []
        edges = self.by_dim[1] if self.dimension >= 1 else []
        return Graph(verts, edges)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.by_dim == other.by_dim

    def __repr__(self):
        return f"SimplicialComplex(f={self.f_vector()})"


def clique_complex(g: Graph) -> SimplicialComplex:
    """Whitney complex: all vertex sets of complete subgraphs of g."""
    sims = [(v,) for v in g.vertices]
    layer = sims[:]
    while layer:
        nxt = []
        for s in layer:
            common = set(g.neighbors(s[0]))
            for v in s[1:]:
                common &= g.neighbors(v)
            for w in common:
                if w > s[-1]:
                    nxt.append(s + (w,))
        sims.extend(nxt)
        layer = nxt
    return SimplicialComplex(sims)


def complex_from_facets(facets) -> SimplicialComplex:
    """Downward closure of a facet list; duplicates merged."""
    closure = set()
    for f in facets:
        f = simplex(f)
        for k in range(1, len(f) + 1):
            closure.update(combinations(f, k))
    return SimplicialComplex(closure)


def unit_sphere(g: Graph, v: int) -> Graph:
    """Subgraph induced by the neighbors of v."""
    if not g.has_vertex(v):
        raise ValueError(f"vertex {v} not in graph")
    return g.induced(g.neighbors(v))


def dual_graph(c: SimplicialComplex) -> Graph:
    """Facets as vertices, adjacent when the intersection has codimension 1.

    For non-pure complexes the rule is |x & y| == min(|x|,|y|) - 1.
    Facets are labeled 0..m-1 in (dimension, lexicographic) order.
    """
    facets = sorted(c.facets(), key=lambda s: (len(s), s))
    edges = []
    sets = [set(f) for f in facets]
    for i in range(len(facets)):
        for j in range(i + 1, len(facets)):
            need = min(len(facets[i]), len(facets[j])) - 1
            if need >= 1 and len(sets[i] & sets[j]) == need:
                edges.append((i, j))
    return Graph(range(len(facets)), edges)


def parity_simplex_graph(c: SimplicialComplex, parity: str) -> Graph:
    """Graph on all even- or odd-dimensional simplices.

    Two k-simplices are adjacent when they share a codimension-1 face; for
    k = 0, where no such face exists, two vertices are adjacent when their
    union is an edge of the complex.  Simplices of different dimensions are
    never adjacent.  Labels follow the complex's dimension-major order,
    restricted to the chosen parity.
    """
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    rem = 0 if parity == "even" else 1
    sims = [s for k in range(rem, c.dimension + 1, 2)
            for s in c.simplices_of_dim(k)]
    label = {s: i for i, s in enumerate(sims)}
    edges = []
    for i, x in enumerate(sims):
        for y in sims[i + 1:]:
            if len(x) != len(y):
                continue
            if len(x) == 1:
                join = (x[0], y[0]) if x[0] < y[0] else (y[0], x[0])
                if join in c.index:
                    edges.append((label[x], label[y]))
            elif len(set(x) & set(y)) == len(x) - 1:
                edges.append((label[x], label[y]))
    return Graph(range(len(sims)), edges)


def f_vector(c: SimplicialComplex) -> tuple:
    return c.f_vector()
