"""Command-line interface.

Exit codes: 0 success, 1 computation error, 2 input error.  Exact rationals
print as "p/q" (plain "p" when integral); floating values use 12 significant
digits.  All commands are deterministic given their flags and seeds.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .chains import betti_vector, build_chain
from .constructors import GeneratorSpec, generate, generator_names
from .exact import is_rational_square, rational_sqrt, rational_str
from .experiments import (
    ER_SWEEP_HEADER,
    ExperimentConfig,
    run_conjecture,
    run_er_sweep,
    run_extremal,
    run_sequence,
)
from .io import InputError, graph_to_json, load_complex, load_graph
from .simplicial import SimplicialComplex, clique_complex, dual_graph
from .topology import is_contractible, is_sphere
from .torsion import torsion_report
from .trees import spanning_tree_count, tree_counts, von_staudt_check
from .wu import f_matrix, wu_characteristic, wu_torsion
from .zeta import (
    apply_barycentric_operator,
    barycentric_limit,
    barycentric_operator,
    dirac_zeta,
    zeta_csv_rows,
    zeta_torsion,
)


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _load_input(args) -> SimplicialComplex:
    if getattr(args, "graph", None):
        return clique_complex(load_graph(args.graph))
    if getattr(args, "complex", None):
        return load_complex(args.complex)
    raise InputError("provide --graph FILE or --complex FILE")


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, separators=(",", ": "), indent=None) + "\n")


# -- subcommand handlers ------------------------------------------------------

def _cmd_gen(args) -> int:
    spec = GeneratorSpec(args.name, tuple(args.params), seed=args.seed)
    try:
        g = generate(spec)
    except ValueError as exc:
        raise InputError(str(exc))
    text = graph_to_json(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return 0


def _cmd_torsion(args) -> int:
    c = _load_input(args)
    report = torsion_report(build_chain(c))
    doc = report.to_json_dict()
    if args.sqrt:
        a = report.a_dirac
        doc["torsion_sqrt"] = (
            rational_str(rational_sqrt(a)) if is_rational_square(a)
            else f"sqrt({rational_str(a)})"
        )
    _emit(doc)
    return 0


def _cmd_betti(args) -> int:
    c = _load_input(args)
    cd = build_chain(c)
    _emit({
        "f_vector": list(cd.grading),
        "betti": list(betti_vector(cd)),
        "euler_characteristic": cd.euler_characteristic(),
    })
    return 0


def _cmd_trees(args) -> int:
    g = load_graph(args.graph)
    counts = tree_counts(g)
    doc = {
        "rooted_spanning_trees": str(counts.rooted),
        "spanning_trees": str(counts.unrooted),
    }
    try:
        trees_g, trees_dual = von_staudt_check(g)
        doc["dual_spanning_trees"] = str(trees_dual)
        doc["duality"] = "equal" if trees_g == trees_dual else "unequal"
    except ValueError:
        dual = dual_graph(clique_complex(g))
        if dual.n_vertices and dual.is_connected():
            doc["dual_spanning_trees"] = str(spanning_tree_count(dual))
        doc["duality"] = "not_a_2_sphere"
    _emit(doc)
    return 0


def _cmd_check(args) -> int:
    g = load_graph(args.graph)
    if args.sphere is not None:
        verdict = is_sphere(g, args.sphere, budget=args.budget)
        _emit({"sphere_dim": args.sphere, "verdict": verdict})
    else:
        v = is_contractible(g, budget=args.budget)
        _emit({
            "contractible": v.contractible,
            "witness": list(v.witness),
            "budget_exhausted": v.search_budget_exhausted,
        })
    return 0


def _cmd_wu(args) -> int:
    c = _load_input(args)
    _emit({
        "f_matrix": f_matrix(c),
        "wu_characteristic": wu_characteristic(c),
        "wu_torsion": rational_str(wu_torsion(c)),
    })
    return 0


def _cmd_zeta(args) -> int:
    c = _load_input(args)
    cd = build_chain(c)
    if args.torsion:
        _emit({"zeta_torsion": _fmt_float(zeta_torsion(cd))})
    elif args.at is not None:
        _emit({"s": _fmt_float(args.at),
               "zeta": _fmt_float(float(dirac_zeta(cd, args.at)))})
    elif args.csv:
        lo, hi, steps = args.csv
        sys.stdout.write("s,zeta\n")
        for s, z in zeta_csv_rows(cd, lo, hi, int(steps)):
            sys.stdout.write(f"{_fmt_float(s)},{_fmt_float(z)}\n")
    else:
        raise InputError("zeta needs --at, --torsion or --csv")
    return 0


def _cmd_bary(args) -> int:
    if args.operator is not None:
        op = barycentric_operator(args.operator)
        doc = {"dimension": args.operator, "operator": op.data}
        if args.graph:
            f = clique_complex(load_graph(args.graph)).f_vector()
            doc["f_vector"] = list(f)
            doc["refined_f_vector"] = list(apply_barycentric_operator(op, f))
        _emit(doc)
        return 0
    if args.limit is None:
        raise InputError("bary needs --operator D or --limit D")
    g = load_graph(args.graph)
    values, ratio = barycentric_limit(g, args.limit, args.steps)
    _emit({
        "torsions": [rational_str(v) for v in values],
        "perron_ratio": _fmt_float(ratio),
    })
    return 0


def _cmd_dump(args) -> int:
    c = _load_input(args)
    cd = build_chain(c)
    what = args.what
    if what == "D":
        m = cd.dirac
    elif what == "L":
        m = cd.hodge
    elif what.startswith("d"):
        m = cd.d[int(what[1:])]
    elif what.startswith("L"):
        m = cd.hodge_block(int(what[1:]))
    else:
        raise InputError(f"unknown operator '{what}'")
    sys.stdout.write(m.to_text() + "\n")
    return 0


def _cmd_experiment(args) -> int:
    if args.target == "er":
        try:
            cfg = ExperimentConfig(
                kind="er_sweep", n=args.n,
                p_grid=[Fraction(p) for p in args.p],
                samples=args.samples, seed=args.seed,
            )
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(str(exc))
        rows = run_er_sweep(cfg)
        sys.stdout.write(ER_SWEEP_HEADER + "\n")
        sys.stdout.write("p,mean_A,mean_log_A,samples\n")
        for p, mean_a, mean_log, k in rows:
            sys.stdout.write(
                f"{rational_str(p)},{rational_str(mean_a)},"
                f"{_fmt_float(mean_log)},{k}\n")
        return 0
    if args.target == "sequence":
        rows = run_sequence(args.sequence_target, args.n_max)
        sys.stdout.write("n,A\n")
        for n, a in rows:
            sys.stdout.write(f"{n},{rational_str(a)}\n")
        return 0
    if args.target == "conjecture":
        rows = run_conjecture(
            args.conjecture_target,
            range(args.n_range[0], args.n_range[1] + 1),
            range(args.m_range[0], args.m_range[1] + 1),
        )
        sys.stdout.write("n,m,A,conjectured,match\n")
        for n, m, a, want, ok in rows:
            sys.stdout.write(
                f"{n},{m},{rational_str(a)},{rational_str(want)},{ok}\n")
        return 0
    if args.target == "extremal":
        report = run_extremal(args.n, samples=args.samples, seed=args.seed)
        _emit({
            "n": report.n,
            "exhaustive": report.exhaustive,
            "graphs_scanned": report.count,
            "max_A": rational_str(report.max_value),
            "max_graph_edges": sorted([a, b] for a, b in report.max_graph.edges),
            "min_A": rational_str(report.min_value),
            "min_graph_edges": sorted([a, b] for a, b in report.min_graph.edges),
        })
        return 0
    raise InputError(f"unknown experiment '{args.target}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphtorsion",
        description="Exact analytic torsion and spectral invariants of "
                    "graphs and simplicial complexes",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph from the catalog")
    p.add_argument("name", choices=generator_names())
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_gen)

    def add_input(p, graph_only=False):
        p.add_argument("--graph")
        if not graph_only:
            p.add_argument("--complex")

    p = sub.add_parser("torsion", help="full torsion report as JSON")
    add_input(p)
    p.add_argument("--sqrt", action="store_true",
                   help="also print the square-root torsion")
    p.set_defaults(fn=_cmd_torsion)

    p = sub.add_parser("betti", help="f-vector and Betti vector")
    add_input(p)
    p.set_defaults(fn=_cmd_betti)

    p = sub.add_parser("trees", help="spanning tree counts and duality verdict")
    p.add_argument("--graph", required=True)
    p.set_defaults(fn=_cmd_trees)

    p = sub.add_parser("check", help="contractibility / sphere recognition")
    p.add_argument("--graph", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--contractible", action="store_true")
    group.add_argument("--sphere", type=int, default=None, metavar="D")
    p.add_argument("--budget", type=int, default=10**5)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("wu", help="f-matrix, Wu characteristic and Wu torsion")
    add_input(p)
    p.set_defaults(fn=_cmd_wu)

    p = sub.add_parser("zeta", help="spectral zeta values")
    add_input(p)
    p.add_argument("--at", type=float, default=None, metavar="S")
    p.add_argument("--torsion", action="store_true")
    p.add_argument("--csv", nargs=3, type=float, default=None,
                   metavar=("LO", "HI", "STEPS"))
    p.set_defaults(fn=_cmd_zeta)

    p = sub.add_parser("bary", help="Barycentric operator and refinement limits")
    p.add_argument("--operator", type=int, default=None, metavar="D")
    p.add_argument("--limit", type=int, default=None, metavar="D")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--graph")
    p.set_defaults(fn=_cmd_bary)

    p = sub.add_parser("dump", help="print operator matrices as integer grids")
    add_input(p)
    p.add_argument("--what", required=True,
                   help="one of d0, d1, ..., D, L, L0, L1, ...")
    p.set_defaults(fn=_cmd_dump)

    p = sub.add_parser("experiment", help="sweeps, sequences, conjectures")
    esub = p.add_subparsers(dest="target", required=True)

    e = esub.add_parser("er", help="Erdos-Renyi torsion expectation sweep")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--p", nargs="+", required=True,
                   help="probabilities as rationals, e.g. 1/2 0.3")
    e.add_argument("--samples", type=int, default=10)
    e.add_argument("--seed", type=int, default=0)
    e.set_defaults(fn=_cmd_experiment)

    e = esub.add_parser("sequence", help="complement-family torsion table")
    e.add_argument("--target", dest="sequence_target", required=True,
                   choices=["cycle_complement", "path_complement"])
    e.add_argument("--n-max", type=int, required=True)
    e.set_defaults(fn=_cmd_experiment)

    e = esub.add_parser("conjecture", help="closed-form conjecture grid")
    e.add_argument("--target", dest="conjecture_target", required=True,
                   choices=["shannon_tori", "cylinders", "wheels", "linear"])
    e.add_argument("--n-range", nargs=2, type=int, default=(4, 5))
    e.add_argument("--m-range", nargs=2, type=int, default=(4, 5))
    e.set_defaults(fn=_cmd_experiment)

    e = esub.add_parser("extremal", help="extremal torsion scan")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--samples", type=int, default=0)
    e.add_argument("--seed", type=int, default=0)
    e.set_defaults(fn=_cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, OverflowError, AssertionError) as exc:
        sys.stderr.write(f"computation error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
