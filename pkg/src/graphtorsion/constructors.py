"""Graph generators and graph operations.

The generator catalog covers everything the experiment harness sweeps over:
cycles, paths, complete (multi)partite graphs, stars, wheels, the platonic
2-spheres, and cross polytopes.  Random graphs come from a splitmix64
stream, so every experiment replays bit for bit from its seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .simplicial import Graph, SimplicialComplex

_MASK = (1 << 64) - 1


def splitmix64(seed: int):
    """Deterministic 64-bit stream (splitmix64)."""
    state = seed & _MASK
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        yield z ^ (z >> 31)


def derive_seed(seed: int, *indices: int) -> int:
    """Stable per-cell seed for parallel-safe experiment sweeps."""
    stream = splitmix64(seed)
    out = next(stream)
    for idx in indices:
        out = next(splitmix64(out ^ (idx + 1)))
    return out


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(range(n), combinations(range(n), 2))


def complete_bipartite(n: int, m: int) -> Graph:
    if n < 1 or m < 1:
        raise ValueError("parts must be nonempty")
    return Graph(range(n + m), [(i, n + j) for i in range(n) for j in range(m)])


def complete_tripartite(k: int, l: int, n: int) -> Graph:
    if min(k, l, n) < 1:
        raise ValueError("parts must be nonempty")
    parts = [list(range(k)), list(range(k, k + l)), list(range(k + l, k + l + n))]
    edges = []
    for i in range(3):
        for j in range(i + 1, 3):
            edges.extend((a, b) for a in parts[i] for b in parts[j])
    return Graph(range(k + l + n), edges)


def star(n: int) -> Graph:
    """Star on n vertices: hub 0 plus n-1 leaves."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return Graph(range(n), [(0, i) for i in range(1, n)])


def wheel(n: int) -> Graph:
    """Wheel on n vertices: hub 0 joined to the cycle 1..n-1."""
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    return Graph(range(n), rim + [(0, i) for i in range(1, n)])


def cross_polytope(d: int) -> Graph:
    """The d-sphere as a graph: complete (d+1)-partite with parts of size 2."""
    if d < 0:
        raise ValueError("dimension must be >= 0")
    n = 2 * (d + 1)
    edges = [(a, b) for a, b in combinations(range(n), 2) if a // 2 != b // 2]
    return Graph(range(n), edges)


def octahedron() -> Graph:
    return cross_polytope(2)


_ICOSA_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
    (11, 6), (11, 7), (11, 8), (11, 9), (11, 10),
    (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
    (1, 6), (1, 7), (2, 7), (2, 8), (3, 8),
    (3, 9), (4, 9), (4, 10), (5, 10), (5, 6),
)


def icosahedron() -> Graph:
    return Graph(range(12), _ICOSA_EDGES)


def icosahedron_with_hair() -> Graph:
    """Icosahedron plus a pendant vertex (cone over one vertex)."""
    return cone_extension(icosahedron(), [0])


def icosahedron_with_nose() -> Graph:
    """Icosahedron plus a cone over one edge."""
    return cone_extension(icosahedron(), [0, 1])


def icosahedron_with_hat() -> Graph:
    """Icosahedron plus a cone over one triangular face."""
    return cone_extension(icosahedron(), [0, 1, 2])


def icosahedron_with_ear() -> Graph:
    """Icosahedron plus a two-vertex handle between adjacent vertices."""
    return attach_path(icosahedron(), 0, 1, 2)


def flat_torus(n: int, m: int) -> Graph:
    """Triangulated flat n x m torus: grid edges plus one diagonal per cell.

    Every vertex has degree 6; n = m = 4 gives the f-vector (16, 48, 32).
    """
    if n < 4 or m < 4:
        raise ValueError("torus needs n, m >= 4")
    def lab(i, j):
        return (i % n) * m + (j % m)
    edges = []
    for i in range(n):
        for j in range(m):
            edges.append((lab(i, j), lab(i + 1, j)))
            edges.append((lab(i, j), lab(i, j + 1)))
            edges.append((lab(i, j), lab(i + 1, j + 1)))
    return Graph(range(n * m), edges)


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    params: tuple = ()
    seed: int | None = None


_CATALOG = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "complete_tripartite": (complete_tripartite, 3),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "octahedron": (octahedron, 0),
    "icosahedron": (icosahedron, 0),
    "cross_polytope": (cross_polytope, 1),
    "flat_torus": (flat_torus, 2),
}


def generate(spec: GeneratorSpec) -> Graph:
    if spec.name not in _CATALOG:
        raise ValueError(f"unknown generator '{spec.name}'")
    fn, arity = _CATALOG[spec.name]
    if len(spec.params) != arity:
        raise ValueError(f"{spec.name} takes {arity} parameter(s)")
    return fn(*spec.params)


def generator_names() -> list[str]:
    return sorted(_CATALOG)


# -- graph operations -------------------------------------------------------

def disjoint_union(g: Graph, h: Graph) -> Graph:
    g = g.relabeled()
    h = h.relabeled(offset=g.n_vertices)
    return Graph(g.vertices + h.vertices, list(g.edges) + list(h.edges))


def join(g: Graph, h: Graph) -> Graph:
    """Zykov join: disjoint union plus all cross edges."""
    g = g.relabeled()
    h = h.relabeled(offset=g.n_vertices)
    cross = [(a, b) for a in g.vertices for b in h.vertices]
    return Graph(g.vertices + h.vertices, list(g.edges) + list(h.edges) + cross)


def wedge(g: Graph, h: Graph, v_g: int, v_h: int) -> Graph:
    """One-point union identifying v_g in g with v_h in h."""
    if not g.has_vertex(v_g):
        raise ValueError(f"vertex {v_g} not in first graph")
    if not h.has_vertex(v_h):
        raise ValueError(f"vertex {v_h} not in second graph")
    gmap = {v: i for i, v in enumerate(g.vertices)}
    hmap = {}
    nxt = g.n_vertices
    for v in h.vertices:
        if v == v_h:
            hmap[v] = gmap[v_g]
        else:
            hmap[v] = nxt
            nxt += 1
    edges = [(gmap[a], gmap[b]) for a, b in g.edges]
    edges += [(hmap[a], hmap[b]) for a, b in h.edges]
    return Graph(range(nxt), edges)


def cone_extension(g: Graph, h_vertices) -> Graph:
    """Add one new vertex joined to every vertex of the subset h_vertices."""
    hs = sorted(set(int(v) for v in h_vertices))
    if not hs:
        raise ValueError("cone base must be nonempty")
    for v in hs:
        if not g.has_vertex(v):
            raise ValueError(f"vertex {v} not in graph")
    apex = max(g.vertices) + 1
    return Graph(list(g.vertices) + [apex],
                 list(g.edges) + [(v, apex) for v in hs])


def attach_path(g: Graph, a: int, b: int, length: int) -> Graph:
    """Attach a path of `length` new vertices between existing a and b."""
    if not (g.has_vertex(a) and g.has_vertex(b)):
        raise ValueError("endpoints must be in the graph")
    if length < 1:
        raise ValueError("need at least one new vertex")
    new = [max(g.vertices) + 1 + i for i in range(length)]
    chain = [(a, new[0])] + [(new[i], new[i + 1]) for i in range(length - 1)]
    chain.append((new[-1], b))
    return Graph(list(g.vertices) + new, list(g.edges) + chain)


def complement(g: Graph) -> Graph:
    vs = g.vertices
    edges = [(a, b) for a, b in combinations(vs, 2) if not g.has_edge(a, b)]
    return Graph(vs, edges)


def strong_product(g: Graph, h: Graph) -> Graph:
    """Shannon (strong) product: coordinates equal or adjacent, pairs distinct."""
    if g.n_vertices == 0 or h.n_vertices == 0:
        raise ValueError("strong product needs nonempty graphs")
    hn = h.n_vertices
    hidx = {v: i for i, v in enumerate(h.vertices)}
    gidx = {v: i for i, v in enumerate(g.vertices)}
    label = {}
    for v in g.vertices:
        for w in h.vertices:
            label[(v, w)] = gidx[v] * hn + hidx[w]
    edges = []
    pairs = list(label)
    for i, (v1, w1) in enumerate(pairs):
        for (v2, w2) in pairs[i + 1:]:
            ok_g = v1 == v2 or g.has_edge(v1, v2)
            ok_h = w1 == w2 or h.has_edge(w1, w2)
            if ok_g and ok_h:
                edges.append((label[(v1, w1)], label[(v2, w2)]))
    return Graph(range(len(pairs)), edges)


def barycentric_refinement(c: SimplicialComplex) -> Graph:
    """Graph on the simplices of c, joined by strict containment."""
    if c.n_simplices == 0:
        raise ValueError("empty complex")
    sims = list(c.all_simplices())
    label = {s: i for i, s in enumerate(sims)}
    edges = []
    for s in sims:
        ss = set(s)
        for t in sims:
            if len(t) < len(s) and set(t) < ss:
                edges.append((label[t], label[s]))
    return Graph(range(len(sims)), edges)


def edge_subdivision(g: Graph, e) -> Graph:
    """Subdivide edge e: new vertex joined to both endpoints and to every
    common neighbor; the edge itself is removed.

    On a 2-manifold the common neighbors are the two triangle apexes, so the
    move preserves 2-manifolds and shifts the f-vector by (+1, +3, +2).
    """
    a, b = int(e[0]), int(e[1])
    if not g.has_edge(a, b):
        raise ValueError(f"edge ({a},{b}) not in graph")
    mid = max(g.vertices) + 1
    common = g.neighbors(a) & g.neighbors(b)
    edges = [x for x in g.edges if x != (min(a, b), max(a, b))]
    edges += [(a, mid), (b, mid)] + [(c, mid) for c in sorted(common)]
    return Graph(list(g.vertices) + [mid], edges)


def random_edge_subdivisions(g: Graph, count: int, seed: int) -> Graph:
    """Apply `count` seeded random edge subdivisions."""
    stream = splitmix64(seed)
    for _ in range(count):
        edges = sorted(g.edges)
        g = edge_subdivision(g, edges[next(stream) % len(edges)])
    return g


def erdos_renyi(n: int, p: Fraction, seed: int) -> Graph:
    """G(n, p) with exact rational p from the splitmix64 stream.

    Edges are drawn in lexicographic order; edge (i, j) is present when the
    next 64-bit word u satisfies u * q < p_num * 2^64 for p = p_num / q.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0, 1]")
    stream = splitmix64(seed)
    threshold_num = p.numerator << 64
    edges = []
    for i, j in combinations(range(n), 2):
        u = next(stream)
        if u * p.denominator < threshold_num:
            edges.append((i, j))
    return Graph(range(n), edges)


def random_cone_built_graph(n: int, seed: int) -> Graph:
    """Grow a contractible graph: each new vertex is coned over a vertex and
    a few of its neighbors (such a base is itself a cone, hence contractible,
    so the result is contractible by induction).  The base size is capped to
    keep the clique complex from saturating."""
    stream = splitmix64(seed)
    g = Graph([0], [])
    while g.n_vertices < n:
        anchor = g.vertices[next(stream) % g.n_vertices]
        nbrs = sorted(g.neighbors(anchor))
        take = next(stream) % (min(len(nbrs), 3) + 1)
        base = {anchor}
        for _ in range(take):
            base.add(nbrs[next(stream) % len(nbrs)])
        g = cone_extension(g, base)
    return g
