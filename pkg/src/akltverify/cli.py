"""Command-line interface: gaps, bond protocols, full protocols, tables, simulation."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import __version__
from .bond import nu_s
from .errors import ResourceGuardError, ValidationError
from .graphs import (
    ATLAS,
    atlas,
    chain,
    chromatic_index,
    chromatic_number,
    degree_data,
    enumerate_matchings,
    load_graph,
)
from .embedding import min_sz_sector
from .hamiltonian import (
    CHAIN_KINDS,
    build_hamiltonian,
    chain_graph,
    gosset_mozgunov_bound,
    graph_gap,
    knabe_bound,
    spectral_gap,
)
from .protocol import (
    ProtocolEvaluator,
    analyze,
    best_coloring,
    build_spec,
    load_protocol_spec,
    optimize_probabilities,
    s_squared_of_triple,
    trivial_coloring,
)
from .simulator import NoisyStateModel, simulate
from .spin_algebra import SpinValue, as_spin
from .sphere import BUILTIN_NAMES, ISOTROPIC, antipodal_classes, design_strength, load_distribution

log = logging.getLogger("akltverify")

EXIT_OK, EXIT_VALIDATION, EXIT_GUARD = 0, 2, 3
MAX_DENOMINATOR = 200

CHAIN_ALIASES = {"open22": "open", "open-half": "open", "open12": "half-one", "open11": "one-one"}


def exact_rational(x: float) -> str | None:
    """p/q when x is within 1e-9 of a fraction with denominator <= 200."""
    if not np.isfinite(x):
        return None
    f = Fraction(float(x)).limit_denominator(MAX_DENOMINATOR)
    if abs(float(f) - x) > 1e-9:
        return None
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def fmt_gap(x) -> str:
    if x is None:
        return ""
    return exact_rational(x) or f"{x:.4f}"


def gap_entry(x) -> dict | None:
    if x is None:
        return None
    out = {"value": round(float(x), 12), "display": f"{x:.4f}"}
    exact = exact_rational(x)
    if exact:
        out["exact"] = exact
    return out


@dataclass
class ReportDocument:
    command: list
    inputs: dict
    outputs: dict
    version: str = __version__
    seed: int | None = None

    FIELDS = ("command", "inputs", "outputs", "version", "seed")

    def to_json(self) -> str:
        doc = {k: getattr(self, k) for k in self.FIELDS}
        return json.dumps(_plain(doc), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        doc = json.loads(text)
        if not isinstance(doc, dict) or set(doc) != set(cls.FIELDS):
            raise ValidationError(f"report must have exactly the fields {cls.FIELDS}")
        if not isinstance(doc["command"], list) or not isinstance(doc["inputs"], dict) or not isinstance(doc["outputs"], dict):
            raise ValidationError("report fields have the wrong types")
        if doc["seed"] is not None and not isinstance(doc["seed"], int):
            raise ValidationError("seed must be an integer or null")
        return cls(**doc)


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (np.floating, float)):
        return round(float(obj), 12)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj


# ---------------------------------------------------------------- gap


def _graph_from_args(args):
    if getattr(args, "chain", None):
        kind = CHAIN_ALIASES.get(args.chain, args.chain)
        if kind not in CHAIN_KINDS:
            raise ValidationError(f"--chain must be one of {CHAIN_KINDS + tuple(CHAIN_ALIASES)}")
        if args.n is None:
            raise ValidationError("--chain needs --n")
        if not 3 <= args.n <= 10:
            raise ValidationError("chains are supported for 3 <= n <= 10")
        return chain_graph(kind, args.n)
    if getattr(args, "catalog", None):
        return load_graph(args.catalog)
    if getattr(args, "graph", None):
        return load_graph(args.graph)
    raise ValidationError("give one of --chain, --catalog or --graph")


def cmd_gap(args):
    g = _graph_from_args(args)
    gamma = graph_gap(g)
    out = {"graph": g.name or "custom", "n": g.n, "dim": g.hilbert_dim, "gamma": gap_entry(gamma)}
    if args.chain and CHAIN_ALIASES.get(args.chain, args.chain) == "one-one":
        out["knabe"] = gap_entry(knabe_bound(gamma, args.n))
        out["gosset_mozgunov"] = gap_entry(gosset_mozgunov_bound(gamma, args.n))
    return {"graph": out["graph"], "chain": args.chain, "n": args.n}, out, None


# ---------------------------------------------------------------- bond


def _mu(name):
    return load_distribution(name)


def cmd_bond(args):
    mu = _mu(args.mu)
    if args.S is not None:
        s = as_spin(args.S)
    elif args.S1 is not None and args.S2 is not None:
        s = as_spin(args.S1) + as_spin(args.S2)
    else:
        raise ValidationError("give --S or both --S1 and --S2")
    if s.twice_s > 8:
        raise ValidationError("bond gaps are supported for S <= 4")
    nu = nu_s(s, mu)
    out = {"S": str(s.value), "nu": gap_entry(nu)}
    if mu is ISOTROPIC:
        out.update(vertices=None, distinct_tests=None, design_strength=None)
    else:
        out.update(vertices=len(mu), distinct_tests=antipodal_classes(mu), design_strength=design_strength(mu))
    return {"mu": args.mu, "S": args.S, "S1": args.S1, "S2": args.S2}, out, None


# ---------------------------------------------------------------- protocol


def _spec_from_args(args):
    if args.spec:
        return load_protocol_spec(args.spec)
    g = _graph_from_args(args)
    cover = args.cover or args.coloring or "optimal"
    return build_spec(g, _mu(args.mu), cover, args.p)


def cmd_protocol(args):
    spec, ev = _spec_from_args(args)
    g = spec.graph
    report = analyze(spec, args.epsilon, args.delta, ev)
    opt = optimize_probabilities(g, spec.mu, spec.cover, ev)
    out = {
        "graph": g.name or "custom",
        "dim": g.hilbert_dim,
        "cover": [list(map(list, m)) for m in spec.cover],
        "p": spec.p,
        "nu": gap_entry(report.gap),
        "nu_trivial": gap_entry(ev.gap(trivial_coloring(g))),
        "nu_uniform": gap_entry(ev.gap(spec.cover)),
        "nu_optimized": gap_entry(opt.gap),
        "p_optimized": np.round(opt.p, 6),
        "optimizer_converged": opt.converged,
        "bound_overlap": gap_entry(report.bound_overlap),
        "bound_coloring": gap_entry(report.bound_coloring),
        "sample_count": report.sample_count,
        "homogeneous": report.homogeneous,
        "gamma": gap_entry(report.details["gamma"]),
    }
    inputs = {"spec": args.spec, "mu": args.mu, "epsilon": args.epsilon, "delta": args.delta}
    return inputs, out, None


# ---------------------------------------------------------------- simulate


def cmd_simulate(args):
    spec, ev = _spec_from_args(args)
    state = NoisyStateModel.parse(args.noise)
    res = simulate(spec, state, args.runs, args.seed, ev)
    out = res.to_json()
    out["sigma_from_exact"] = (res.pass_rate - res.exact) / res.stderr if res.stderr > 0 else 0.0
    inputs = {"spec": args.spec, "noise": args.noise, "runs": args.runs}
    return inputs, out, args.seed


# ---------------------------------------------------------------- tables


TABLE_I_KINDS = (("open", "H_1/2,1/2"), ("half-one", "H_1/2,1"), ("one-one", "H_1,1"), ("closed", "H_closed"))
TABLE_II_NAMES = BUILTIN_NAMES[:5] + ("mu24", "mu32", "isotropic")
TABLE_III_SPINS = tuple(Fraction(k, 2) for k in range(1, 7))


def table_i(max_n: int = 10):
    ns = list(range(3, max_n + 1))
    rows = []
    gammas = {}
    for kind, label in TABLE_I_KINDS:
        vals = []
        for n in ns:
            method = "iterative" if n >= 9 else "auto"
            g = chain_graph(kind, n)
            vals.append(spectral_gap(build_hamiltonian(g, min_sz_sector(g.twice_spins)), method))
        gammas[kind] = vals
        rows.append([label] + [f"{v:.4f}" for v in vals])
    rows.append(["knabe"] + [f"{knabe_bound(v, n):.4f}" for v, n in zip(gammas["one-one"], ns)])
    rows.append(["gosset_mozgunov"] + [f"{gosset_mozgunov_bound(v, n):.4f}" for v, n in zip(gammas["one-one"], ns)])
    return ["n"] + ns, rows


def table_ii():
    header = ["distribution", "vertices", "distinct_tests", "design_strength"] + [
        f"nu_{Fraction(t, 2)}" for t in range(2, 9)
    ]
    rows = []
    for name in TABLE_II_NAMES:
        mu = load_distribution(name)
        if mu is ISOTROPIC:
            head = [name, "inf", "inf", "inf"]
        else:
            head = [name, len(mu), antipodal_classes(mu), design_strength(mu)]
        rows.append(head + [fmt_gap(nu_s(SpinValue(t), mu)) for t in range(2, 9)])
    return header, rows


def table_iii():
    header = ["S1", "S3"] + [f"S2={s}" for s in TABLE_III_SPINS]
    rows = []
    for i, s1 in enumerate(TABLE_III_SPINS):
        for s3 in TABLE_III_SPINS[i:]:
            rows.append([str(s1), str(s3)] + [fmt_gap(s_squared_of_triple(s1, s2, s3)) for s2 in TABLE_III_SPINS])
    return header, rows


def table_iv():
    header = ["chain", "n", "matching_number", "maximal", "maximum"]
    rows = []
    for closed in (True, False):
        for n in range(3, 11):
            maximal, maximum, ups = enumerate_matchings(chain(n, closed=closed))
            rows.append(["closed" if closed else "open", n, ups, len(maximal), len(maximum)])
    return header, rows


def table_v_row(k: int, mu=None):
    mu = mu or load_distribution("mu32")
    g = atlas(k)
    ev = ProtocolEvaluator(g, mu)
    cover = best_coloring(g, mu, ev)
    opt = optimize_probabilities(g, mu, cover, ev)
    dd = degree_data(g)
    _, _, ups = enumerate_matchings(g)
    return {
        "no": k,
        "V": g.n,
        "E": len(g.edges),
        "max_degree": dd.max_degree,
        "matching_number": ups,
        "chromatic_number": chromatic_number(g),
        "chromatic_index": chromatic_index(g),
        "dim": g.hilbert_dim,
        "gamma": graph_gap(g),
        "nu_trivial": ev.gap(trivial_coloring(g)),
        "nu": ev.gap(cover),
        "nu_optimized": opt.gap,
        "p": opt.p,
        "cover": cover,
    }


def table_v():
    header = ["no", "V", "E", "max_degree", "matching_number", "chromatic_number", "chromatic_index",
              "dim", "gamma", "nu_trivial", "nu", "nu_optimized", "p"]
    rows = []
    for k in sorted(ATLAS):
        r = table_v_row(k)
        rows.append([r[h] for h in header[:8]] + [fmt_gap(r[h]) for h in ("gamma", "nu_trivial", "nu", "nu_optimized")]
                    + [";".join(f"{x:.4f}" for x in r["p"])])
    return header, rows


TABLES = {"I": table_i, "II": table_ii, "III": table_iii, "IV": table_iv, "V": table_v}


def render_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_tables(args):
    which = args.which.upper()
    if which not in TABLES:
        raise ValidationError(f"table must be one of {sorted(TABLES)}")
    header, rows = table_i(args.max_n) if which == "I" else TABLES[which]()
    return {"table": which}, {"header": header, "rows": rows}, None


# ---------------------------------------------------------------- parser


def _add_graph_flags(p, chains=True):
    if chains:
        p.add_argument("--chain", help="closed, open, half-one (open12) or one-one (open11)")
        p.add_argument("--n", type=int, help="chain length")
    p.add_argument("--catalog", help="catalog graph name, e.g. atlas-5, chain-closed-6, star-4")
    p.add_argument("--graph", help="graph file (JSON or edge list)")


def _add_protocol_flags(p):
    _add_graph_flags(p)
    p.add_argument("--spec", help="protocol spec JSON file")
    p.add_argument("--mu", default="mu32", help="axis distribution: builtin name or JSON file")
    p.add_argument("--cover", help="trivial, optimal, maximal, M<m> or M<n> (closed chains)")
    p.add_argument("--coloring", choices=("trivial", "optimal"), help="shorthand for --cover")
    p.add_argument("--p", default="uniform", help="uniform, optimal or sizes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="akltverify", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--out", help="write the output here instead of stdout")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gap", help="spectral gap of an AKLT Hamiltonian")
    _add_graph_flags(p)
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("bond", help="bond verification gap nu_S(mu)")
    p.add_argument("--mu", required=True)
    p.add_argument("--S")
    p.add_argument("--S1")
    p.add_argument("--S2")
    p.set_defaults(func=cmd_bond)

    p = sub.add_parser("protocol", help="analyze a matching-cover protocol")
    _add_protocol_flags(p)
    p.add_argument("--epsilon", type=float, default=0.01)
    p.add_argument("--delta", type=float, default=0.01)
    p.set_defaults(func=cmd_protocol)

    p = sub.add_parser("tables", help="regenerate a table as CSV")
    p.add_argument("which", help="I, II, III, IV or V")
    p.add_argument("--max-n", type=int, default=10, help="largest chain length for table I")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("simulate", help="Monte-Carlo run of a protocol")
    _add_protocol_flags(p)
    p.add_argument("--noise", default="target", help="target, depolarize:EPS or worst:EPS")
    p.add_argument("--runs", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        inputs, outputs, seed = args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ResourceGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if args.command == "tables" and args.format == "csv":
        text = render_csv(outputs["header"], outputs["rows"])
    else:
        text = ReportDocument(argv, inputs, outputs, seed=seed).to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
