"""Experiment harness: random-graph sweeps, sequences, conjecture tables,
and the exhaustive small-graph extremal scan.

Every experiment is deterministic given its configuration and seed; sample
seeds derive from (seed, cell index, sample index) so cells can run in any
order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from .chains import build_chain
from .constructors import (
    complement,
    complete,
    cycle,
    derive_seed,
    erdos_renyi,
    path,
    strong_product,
    wheel,
)
from .simplicial import Graph, clique_complex
from .torsion import sdet_dirac, torsion_dirac, torsion_hodge


def torsion_of_graph(g: Graph) -> Fraction:
    cd = build_chain(clique_complex(g))
    a = torsion_dirac(cd)
    if a != torsion_hodge(cd):
        raise AssertionError("torsion routes disagree")
    return a


def sweep_torsion(g: Graph) -> Fraction:
    """Torsion convention for random sweeps: edgeless samples count their
    vertices; anything else is the plain block formula (which is already
    multiplicative over components, isolated vertices contributing 1)."""
    if g.n_edges == 0:
        return Fraction(g.n_vertices)
    return torsion_of_graph(g)


@dataclass
class ExperimentConfig:
    kind: str                       # er_sweep | extremal | sequence | conjecture
    n: int = 0
    p_grid: list = field(default_factory=list)
    samples: int = 1
    seed: int = 0
    target: str = ""

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("need at least one sample")
        if self.kind == "er_sweep" and not 1 <= self.n <= 12:
            raise ValueError("random sweeps support 1 <= n <= 12")
        for p in self.p_grid:
            if not 0 <= Fraction(p) <= 1:
                raise ValueError("p values must lie in [0, 1]")


ER_SWEEP_HEADER = (
    "# mean A over seeded G(n,p) samples; edgeless samples contribute their "
    "vertex count, all other samples the block-formula torsion (multiplicative "
    "over components)"
)


def run_er_sweep(cfg: ExperimentConfig) -> list[tuple]:
    """Rows (p, mean A, mean log A, samples) for each p in the grid."""
    rows = []
    for cell, p in enumerate(cfg.p_grid):
        p = Fraction(p)
        total = Fraction(0)
        log_total = 0.0
        for s in range(cfg.samples):
            g = erdos_renyi(cfg.n, p, derive_seed(cfg.seed, cell, s))
            a = sweep_torsion(g)
            total += a
            log_total += math.log(a)
        rows.append((p, total / cfg.samples, log_total / cfg.samples, cfg.samples))
    return rows


def run_sequence(target: str, n_max: int) -> list[tuple]:
    """Exact torsion values of complement families, one row (n, A) per n.

    Values follow the plain block formula; for the edgeless complements at
    tiny n that value is 1, matching the published sequences.
    """
    if n_max > 16:
        raise ValueError("sequence sweeps capped at n = 16")
    rows = []
    if target == "cycle_complement":
        make, start = (lambda n: complement(cycle(n))), 3
    elif target == "path_complement":
        make, start = (lambda n: complement(path(n))), 1
    else:
        raise ValueError("target must be cycle_complement or path_complement")
    for n in range(start, n_max + 1):
        g = make(n)
        if g.n_vertices == 0:
            continue
        rows.append((n, sdet_dirac(build_chain(clique_complex(g)))))
    return rows


_CONJECTURES = {
    # name: (left factor, right factor, closed form)
    "shannon_tori": (cycle, cycle, lambda n, m: Fraction(1, 9)),
    "cylinders": (cycle, complete, lambda n, m: Fraction(n * n, m)),
    "wheels": (cycle, wheel, lambda n, m: Fraction(n * n * m, 4 * m + 1)),
    "linear": (cycle, path, lambda n, m: Fraction(n * n * m, 3 * m - 2)),
}


def run_conjecture(target: str, n_range, m_range) -> list[tuple]:
    """Rows (n, m, exact A, conjectured A, match) over the grid.

    Mismatches are reported, never raised: these are conjecture sweeps.
    """
    if target not in _CONJECTURES:
        raise ValueError(f"unknown conjecture target '{target}'")
    left, right, closed = _CONJECTURES[target]
    rows = []
    for n in n_range:
        for m in m_range:
            g = strong_product(left(n), right(m))
            a = torsion_of_graph(g)
            want = closed(n, m)
            rows.append((n, m, a, want, a == want))
    return rows


# -- exhaustive extremal scan -------------------------------------------------

def connected_graphs_up_to_iso(n: int) -> list[Graph]:
    """All connected graphs on n vertices, one per isomorphism class."""
    if n > 8:
        raise ValueError("exhaustive enumeration capped at n = 8")
    pairs = list(combinations(range(n), 2))
    pair_index = {e: i for i, e in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append([
            pair_index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs
        ])
    seen = set()
    out = []
    for mask in range(1 << len(pairs)):
        canon = mask
        for pm in perm_maps:
            img = 0
            rest = mask
            while rest:
                low = rest & -rest
                img |= 1 << pm[low.bit_length() - 1]
                rest ^= low
            if img < canon:
                canon = img
        if canon in seen:
            continue
        seen.add(canon)
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph(range(n), edges)
        if g.is_connected():
            out.append(g)
    return out


@dataclass
class ExtremalReport:
    n: int
    exhaustive: bool
    count: int
    max_graph: Graph
    max_value: Fraction
    min_graph: Graph
    min_value: Fraction


def run_extremal(n: int, samples: int = 0, seed: int = 0) -> ExtremalReport:
    """Extremal torsion over connected graphs with n vertices.

    Exhaustive (up to isomorphism) for n <= 8; seeded sampling beyond that.
    """
    if n <= 8:
        graphs = connected_graphs_up_to_iso(n)
        exhaustive = True
    else:
        if samples < 1:
            raise ValueError("sampling the extremal landscape needs samples >= 1")
        graphs = []
        for s in range(samples):
            g = erdos_renyi(n, Fraction(1, 2), derive_seed(seed, 0, s))
            if g.is_connected():
                graphs.append(g)
        exhaustive = False
    best_max = best_min = None
    for g in graphs:
        a = torsion_of_graph(g)
        if best_max is None or a > best_max[1]:
            best_max = (g, a)
        if best_min is None or a < best_min[1]:
            best_min = (g, a)
    return ExtremalReport(
        n=n,
        exhaustive=exhaustive,
        count=len(graphs),
        max_graph=best_max[0],
        max_value=best_max[1],
        min_graph=best_min[0],
        min_value=best_min[1],
    )
