"""Matching-cover verification protocols for AKLT states.

A protocol is a triple (mu, cover, p): a distribution of measurement axes
for every bond, a family of matchings covering the edge set, and the
probability of drawing each matching.  Its verification operator is the
p-weighted average of the matching tests T_M = prod_{e in M} Omega_e(mu).
"""

from __future__ import annotations

import json
import logging
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import scipy.linalg as la
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from scipy.optimize import linprog

from .bond import bond_omega, nu_s
from .embedding import embed_two, min_sz_sector, restrict
from .errors import ResourceGuardError, ValidationError
from .graphs import (
    ATLAS_COLORINGS,
    GraphSpec,
    chain,
    check_cover,
    check_matching,
    cycle_matching_covers,
    degree_data,
    edge_spin,
    enumerate_matchings,
    is_coloring,
    load_graph,
    optimal_colorings,
)
from .hamiltonian import DENSE_LIMIT, SPARSE_LIMIT, build_hamiltonian, graph_gap, ground_space
from .spin_algebra import SpinValue, as_spin, max_spin_projector
from .sphere import ISOTROPIC, load_distribution, symmetric_design_strength

log = logging.getLogger(__name__)

UNIT_SINGULAR = 1 - 1e-6
OPT_TOL = 1e-7
OPT_MAX_ITER = 400


@dataclass(frozen=True)
class ProtocolSpec:
    graph: GraphSpec
    mu: object
    cover: tuple
    p: np.ndarray = None

    def __post_init__(self):
        cover = check_cover(self.graph, self.cover)
        object.__setattr__(self, "cover", cover)
        if self.p is None:
            p = np.full(len(cover), 1 / len(cover))
        else:
            p = np.asarray(self.p, dtype=float).reshape(-1)
        if p.shape != (len(cover),):
            raise ValidationError(f"need {len(cover)} probabilities, got {p.size}")
        if (p < 0).any() or abs(p.sum() - 1) > 1e-12:
            raise ValidationError("probabilities must be nonnegative and sum to 1")
        p.setflags(write=False)
        object.__setattr__(self, "p", p)


def su2_invariant(graph: GraphSpec, mu) -> bool:
    """True when every bond operator equals 1 - 2/(2S_e+1) P_e.

    That holds exactly when mu_sym is a 2S_e-design for every edge; the
    protocol operator then commutes with total spin.
    """
    if mu is ISOTROPIC:
        return True
    return symmetric_design_strength(mu) >= degree_data(graph).twice_s_e


class ProtocolEvaluator:
    """Matching tests and deflated operators for one (graph, mu) pair.

    Chooses the cheapest faithful representation: the minimal total-S_z
    sector when the protocol is SU(2) invariant, the full space otherwise,
    and matrix-free tensor contractions above the dense limit.
    """

    def __init__(self, graph: GraphSpec, mu, ground=None, representation: str = "auto"):
        self.graph = graph
        self.mu = mu
        self.dims = graph.local_dims
        self.full_dim = graph.hilbert_dim
        if self.full_dim > SPARSE_LIMIT:
            raise ResourceGuardError(f"Hilbert dimension {self.full_dim} exceeds {SPARSE_LIMIT}")
        self.invariant = su2_invariant(graph, mu)
        if representation == "auto":
            if self.invariant and len(min_sz_sector(graph.twice_spins)) <= DENSE_LIMIT:
                representation = "sector"
            elif self.full_dim <= DENSE_LIMIT:
                representation = "full"
            else:
                representation = "matrix-free"
        if representation == "sector" and not self.invariant:
            raise ValidationError("sector representation needs an SU(2)-invariant protocol")
        self.representation = representation
        self.sector = min_sz_sector(graph.twice_spins) if representation == "sector" else None
        self.dim = len(self.sector) if self.sector is not None else self.full_dim
        t = graph.twice_spins
        self._local = {
            e: np.asarray(bond_omega(SpinValue(t[e[0]]), SpinValue(t[e[1]]), mu)) for e in graph.edges
        }
        if ground is None:
            method = "dense" if self.dim <= DENSE_LIMIT else "iterative"
            ground = ground_space(build_hamiltonian(graph, self.sector), method).basis
        self.ground = np.asarray(ground)
        self._tests = {}

    # -- dense path

    def _embedded(self, e):
        op = embed_two(self._local[e], e[0], e[1], self.dims)
        if self.sector is not None:
            op = restrict(op, self.sector)
        return op

    def test(self, matching) -> np.ndarray:
        """T_M in the working representation (dense)."""
        if self.representation == "matrix-free":
            raise ResourceGuardError("dense tests are unavailable above the dense limit")
        key = tuple(matching)
        if key not in self._tests:
            out = np.eye(self.dim, dtype=complex)
            for e in key:
                out = self._embedded(e) @ out
            out = (out + out.conj().T) / 2
            if np.abs(out.imag).max(initial=0.0) < 1e-13:
                out = np.ascontiguousarray(out.real)
            self._tests[key] = out
        return self._tests[key]

    def deflated(self, matching) -> np.ndarray:
        q = self.ground @ self.ground.conj().T
        return self.test(matching) - q

    def operator(self, cover, p) -> np.ndarray:
        return sum(pl * self.test(m) for pl, m in zip(p, cover))

    # -- matrix-free path

    def _apply_test(self, matching, x):
        psi = x.reshape(self.dims)
        n = len(self.dims)
        for u, v in matching:
            d1, d2 = self.dims[u], self.dims[v]
            op = self._local[(u, v)].reshape(d1, d2, d1, d2)
            psi = np.tensordot(op, psi, axes=([2, 3], [u, v]))
            # tensordot puts the pair axes first; move them back
            psi = np.moveaxis(psi, [0, 1], [u, v])
        assert psi.ndim == n
        return psi.reshape(-1)

    def _linear_operator(self, cover, p):
        ground = self.ground

        def matvec(x):
            x = np.asarray(x, dtype=complex).reshape(-1)
            y = sum(pl * self._apply_test(m, x) for pl, m in zip(p, cover) if pl > 0)
            return y - ground @ (ground.conj().T @ x)

        return spla.LinearOperator((self.dim, self.dim), matvec=matvec, dtype=complex)

    # -- spectra

    def top_eigenpairs(self, cover, p, k: int = 1):
        """Largest eigenvalues/vectors of the deflated operator."""
        if self.representation == "matrix-free":
            op = self._linear_operator(cover, p)
            v0 = np.random.default_rng(0).standard_normal(self.dim).astype(complex)
            w, v = spla.eigsh(op, k=max(k, 2), which="LA", v0=v0, tol=1e-11)
            order = np.argsort(w)[::-1][:k]
            return w[order], v[:, order]
        mat = sum(pl * self.deflated(m) for pl, m in zip(p, cover))
        w, v = la.eigh(mat, subset_by_index=[self.dim - k, self.dim - 1])
        return w[::-1], v[:, ::-1]

    def gap(self, cover, p=None) -> float:
        if p is None:
            p = np.full(len(cover), 1 / len(cover))
        w, _ = self.top_eigenpairs(cover, p, 1)
        return float(1 - w[0])


# ---------------------------------------------------------------- operators


def _dense_guard(graph: GraphSpec):
    if graph.hilbert_dim > DENSE_LIMIT:
        raise ResourceGuardError(f"dense operator of dimension {graph.hilbert_dim} exceeds {DENSE_LIMIT}")


def matching_test(graph: GraphSpec, mu, matching) -> np.ndarray:
    """T_M(mu) on the full Hilbert space."""
    _dense_guard(graph)
    matching = check_matching(graph, matching)
    t = graph.twice_spins
    out = np.eye(graph.hilbert_dim, dtype=complex)
    for e in matching:
        local = bond_omega(SpinValue(t[e[0]]), SpinValue(t[e[1]]), mu)
        out = embed_two(local, e[0], e[1], graph.local_dims) @ out
    return (out + out.conj().T) / 2


def protocol_operator(spec: ProtocolSpec) -> np.ndarray:
    """Omega(mu, cover, p) on the full Hilbert space."""
    return sum(pl * matching_test(spec.graph, spec.mu, m) for pl, m in zip(spec.p, spec.cover))


def protocol_gap(spec: ProtocolSpec, evaluator: ProtocolEvaluator | None = None) -> float:
    """1 - ||Omega - Q|| with Q the projector onto the AKLT ground space."""
    ev = evaluator or ProtocolEvaluator(spec.graph, spec.mu)
    return ev.gap(spec.cover, spec.p)


# ---------------------------------------------------------------- optimization


@dataclass
class OptimizationResult:
    p: np.ndarray
    gap: float
    lower_bound_norm: float
    iterations: int
    converged: bool
    history: list = field(default_factory=list, repr=False)


def optimize_probabilities(graph, mu, cover, evaluator=None, tol: float = OPT_TOL, max_iter: int = OPT_MAX_ITER):
    """Minimize the largest eigenvalue of sum_l p_l (T_l - Q) over the simplex.

    Kelley cutting planes: each evaluation yields the top eigenvectors v and
    the supporting hyperplane p -> sum_l p_l <v|T_l - Q|v>; an LP over the
    collected cuts gives the next iterate and a certified lower bound.
    Starts from (and prefers, on ties) the uniform distribution.
    """
    cover = check_cover(graph, cover)
    ev = evaluator or ProtocolEvaluator(graph, mu)
    m = len(cover)
    uniform = np.full(m, 1 / m)
    if m == 1:
        return OptimizationResult(uniform, ev.gap(cover, uniform), 0.0, 0, True)

    def evaluate(p):
        if ev.representation == "matrix-free":
            w, v = ev.top_eigenpairs(cover, p, 2)
        else:
            mats = [ev.deflated(c) for c in cover]
            full = sum(pl * a for pl, a in zip(p, mats))
            w, v = la.eigh(full, subset_by_index=[ev.dim - min(4, ev.dim), ev.dim - 1])
            w, v = w[::-1], v[:, ::-1]
        cuts = []
        for j in range(len(w)):
            if w[0] - w[j] > 1e-6:
                break
            vec = v[:, j]
            if ev.representation == "matrix-free":
                cuts.append([float(np.real(np.vdot(vec, ev._linear_operator([c], [1.0]).matvec(vec)))) for c in cover])
            else:
                cuts.append([float(np.real(np.vdot(vec, a @ vec))) for a in mats])
        return float(w[0]), cuts

    best_p, (best_f, cuts) = uniform, evaluate(uniform)
    all_cuts = list(cuts)
    history = [best_f]
    lower = -np.inf
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        a_ub = np.array([c + [-1.0] for c in all_cuts])
        res = linprog(
            c=np.r_[np.zeros(m), 1.0],
            A_ub=a_ub,
            b_ub=np.zeros(len(all_cuts)),
            A_eq=np.r_[np.ones(m), 0.0].reshape(1, -1),
            b_eq=[1.0],
            bounds=[(0, 1)] * m + [(None, None)],
            method="highs",
        )
        if not res.success:
            break
        lower = float(res.fun)
        if best_f - lower <= tol:
            converged = True
            break
        p = np.clip(res.x[:m], 0, None)
        p = p / p.sum()
        f, cuts = evaluate(p)
        history.append(f)
        all_cuts.extend(cuts)
        if f < best_f - 1e-12:
            best_p, best_f = p, f
    if not converged:
        log.warning("probability optimization stopped after %d iterations (gap to bound %.2e)", it, best_f - lower)
    return OptimizationResult(best_p, 1 - best_f, lower, it, converged, history)


# ---------------------------------------------------------------- s(G)


def s_squared_of_triple(S1, S2, S3) -> float:
    """Largest eigenvalue below 1 of P12 P23 P12 on the path 1-2-3."""
    a, b, c = as_spin(S1), as_spin(S2), as_spin(S3)
    p12 = np.kron(max_spin_projector(a, b), np.eye(c.dim))
    p23 = np.kron(np.eye(a.dim), max_spin_projector(b, c))
    mat = p12 @ p23 @ p12
    mat = np.real((mat + mat.conj().T) / 2)
    w = np.linalg.eigvalsh(mat)
    below = w[w < UNIT_SINGULAR]
    return float(max(below.max(initial=0.0), 0.0))


def s_of_triple(S1, S2, S3) -> float:
    return math.sqrt(s_squared_of_triple(S1, S2, S3))


def s_of_graph(graph: GraphSpec) -> float:
    """Max of s(P_e P_e') over pairs of edges sharing a vertex; 0 without such pairs."""
    t = graph.twice_spins
    best = 0.0
    seen = set()
    for e in graph.edges:
        for f in graph.edges:
            if e >= f:
                continue
            shared = set(e) & set(f)
            if not shared:
                continue
            mid = shared.pop()
            a = e[0] if e[1] == mid else e[1]
            c = f[0] if f[1] == mid else f[1]
            key = (min(t[a], t[c]), t[mid], max(t[a], t[c]))
            if key in seen:
                continue
            seen.add(key)
            best = max(best, s_of_triple(SpinValue(key[0]), SpinValue(key[1]), SpinValue(key[2])))
    return best


# ---------------------------------------------------------------- bounds


def _f(x: float, m: int) -> float:
    r = math.sqrt(1 + x)
    return (r - 1) / r if m == 2 else (r - 1) / (r + 1)


@dataclass(frozen=True)
class OverlapBound:
    bound: float  # (nu/m) f(gamma / (s g)^2)
    closed_form: float  # nu gamma / (24 m (S_E - 1)^2)
    design_bound: float  # 2/(m (2S_E+1)) f(gamma / (s g)^2)
    design_closed_form: float  # gamma / (12 m (2S_E+1)(S_E-1)^2)


def overlap_bound(nu_se: float, gamma: float, s: float, g: float, m: int) -> OverlapBound:
    """Lower bounds on the gap of a uniform protocol over m matchings.

    Raises ValidationError when the overlap g or s vanishes (single-edge graphs).
    """
    if m < 2:
        raise ValidationError("the bound needs at least two matchings")
    if g <= 0 or s <= 0:
        raise ValidationError("bound inapplicable: no overlapping edges (g = 0 or s = 0)")
    x = gamma / (s * s * g * g)
    s_e = g / 2 + 1
    fx = _f(x, m)
    return OverlapBound(
        bound=nu_se / m * fx,
        closed_form=nu_se * gamma / (24 * m * (s_e - 1) ** 2),
        design_bound=2 / (m * (2 * s_e + 1)) * fx,
        design_closed_form=gamma / (12 * m * (2 * s_e + 1) * (s_e - 1) ** 2),
    )


@dataclass(frozen=True)
class ColoringBound:
    bound: float  # nu gamma / |E|
    vertex_form: float  # 2 nu gamma / (n (n-1))
    design_bound: float  # 2 gamma / ((2S_E+1) |E|)
    design_vertex_form: float  # 4 gamma / ((2S_E+1) n (n-1))
    saturating: bool


def coloring_bound(nu_se: float, gamma: float, n_edges: int, s_e: float, n_vertices: int,
                   uniform_edge_spin: bool = False, trivial: bool = False) -> ColoringBound:
    """Lower bounds for an edge-coloring protocol with p proportional to class sizes."""
    n = n_vertices
    return ColoringBound(
        bound=nu_se * gamma / n_edges,
        vertex_form=2 * nu_se * gamma / (n * (n - 1)),
        design_bound=2 * gamma / ((2 * s_e + 1) * n_edges),
        design_vertex_form=4 * gamma / ((2 * s_e + 1) * n * (n - 1)),
        saturating=bool(uniform_edge_spin and trivial),
    )


def regular_graph_bound(gamma: float, n: int, k: int) -> float:
    """4 gamma / (n k (2k+1)) for k-regular graphs and a 2k-design."""
    return 4 * gamma / (n * k * (2 * k + 1))


def coloring_probabilities(graph: GraphSpec, cover) -> np.ndarray:
    if not is_coloring(graph, cover):
        raise ValidationError("the cover is not an edge coloring")
    sizes = np.array([len(m) for m in cover], dtype=float)
    return sizes / sizes.sum()


# ---------------------------------------------------------------- sample cost


def sample_count(nu: float, epsilon: float, delta: float) -> int:
    """Smallest N with (1 - nu epsilon)^N <= delta."""
    if not 0 <= nu <= 1 or not 0 < epsilon < 1 or not 0 < delta <= 1:
        raise ValidationError("need 0 <= nu <= 1, 0 < epsilon < 1, 0 < delta <= 1")
    if nu == 0:
        raise ValidationError("zero spectral gap: no finite number of tests suffices")
    if delta == 1:
        return 0
    return math.ceil(math.log(delta) / math.log1p(-nu * epsilon))


def homogeneity_check(omega, ground_state, tol: float = 1e-8):
    """Whether Omega = Q + lam (1 - Q) for the projector Q onto ``ground_state``.

    ``ground_state`` may be one vector or a matrix whose columns span the target.
    """
    omega = omega.toarray() if sp.issparse(omega) else np.asarray(omega)
    basis = np.asarray(ground_state)
    if basis.ndim == 1:
        basis = basis[:, None]
    q = basis @ basis.conj().T
    rest = np.eye(len(omega)) - q
    bar = rest @ omega @ rest
    free = len(omega) - basis.shape[1]
    lam = float(np.real(np.trace(bar))) / free if free else 0.0
    ok = bool(np.abs(bar - lam * rest).max() <= tol)
    return ok, lam


# ---------------------------------------------------------------- report


@dataclass
class ProtocolReport:
    gap: float
    bound_overlap: float | None
    bound_coloring: float | None
    sample_count: int | None
    homogeneous: bool
    details: dict = field(default_factory=dict)


def bond_gap_for_graph(graph: GraphSpec, mu) -> float:
    return nu_s(SpinValue(degree_data(graph).twice_s_e), mu)


def edge_spins_uniform(graph: GraphSpec) -> bool:
    return len({edge_spin(graph, e).twice_s for e in graph.edges}) == 1


# ---------------------------------------------------------------- covers

MAX_MAXIMAL_MATCHINGS = 17
MAX_COLORINGS = 64


def trivial_coloring(graph: GraphSpec) -> tuple:
    return tuple((e,) for e in graph.edges)


def best_coloring(graph: GraphSpec, mu, evaluator=None) -> tuple:
    """An optimal (chi'-class) edge coloring.

    Atlas graphs use their catalog coloring; otherwise every optimal
    coloring is tried and the one with the largest optimized gap wins
    (earliest on ties).
    """
    m = re.fullmatch(r"atlas-(\d+)", graph.name or "")
    if m and int(m.group(1)) in ATLAS_COLORINGS and graph.twice_spins == GraphSpec(graph.n, graph.edges).twice_spins:
        return check_cover(graph, ATLAS_COLORINGS[int(m.group(1))])
    colorings = optimal_colorings(graph)
    if len(colorings) == 1:
        return colorings[0]
    if len(colorings) > MAX_COLORINGS:
        log.warning("%d optimal colorings; searching the first %d", len(colorings), MAX_COLORINGS)
        colorings = colorings[:MAX_COLORINGS]
    ev = evaluator or ProtocolEvaluator(graph, mu)
    best, best_gap = None, -1.0
    for c in colorings:
        gap = optimize_probabilities(graph, mu, c, ev).gap
        if gap > best_gap + 1e-9:
            best, best_gap = c, gap
    return best


def maximal_matching_cover(graph: GraphSpec) -> tuple:
    """All maximal matchings; with optimized p this realizes the best maximal-matching protocol."""
    maximal, _, _ = enumerate_matchings(graph)
    if len(maximal) > MAX_MAXIMAL_MATCHINGS:
        raise ResourceGuardError(f"{len(maximal)} maximal matchings exceed the cap of {MAX_MAXIMAL_MATCHINGS}")
    return tuple(maximal)


def resolve_cover(graph: GraphSpec, cover, mu=None, evaluator=None) -> tuple:
    """Turn a cover description into matchings.

    Accepts "trivial", "optimal", "maximal", "M<m>" (cycle covers of closed
    chains) or explicit lists of edge indices / edge pairs.
    """
    if isinstance(cover, str):
        key = cover.strip()
        if key == "trivial":
            return trivial_coloring(graph)
        if key == "optimal":
            return best_coloring(graph, mu, evaluator)
        if key == "maximal":
            return maximal_matching_cover(graph)
        m = re.fullmatch(r"M(n|\d+)", key)
        if m:
            closed = chain(graph.n, closed=True)
            if graph.edges != closed.edges:
                raise ValidationError(f"cover {key!r} needs a closed chain")
            size = graph.n if m.group(1) == "n" else int(m.group(1))
            return check_cover(graph, cycle_matching_covers(graph.n, size))
        raise ValidationError(f"unknown cover {cover!r}")
    out = []
    for i, member in enumerate(cover):
        edges = []
        for item in member:
            if isinstance(item, (int, np.integer)):
                if not 0 <= item < len(graph.edges):
                    raise ValidationError(f"cover[{i}]: edge index {item} out of range")
                edges.append(graph.edges[item])
            else:
                edges.append(tuple(int(x) for x in item))
        out.append(edges)
    return check_cover(graph, out)


# ---------------------------------------------------------------- analysis


def analyze(spec: ProtocolSpec, epsilon: float = 0.01, delta: float = 0.01, evaluator=None, gamma=None) -> ProtocolReport:
    """Gap, applicable analytic bounds, sample cost and homogeneity of a protocol."""
    g = spec.graph
    ev = evaluator or ProtocolEvaluator(g, spec.mu)
    nu = ev.gap(spec.cover, spec.p)
    if gamma is None:
        gamma = graph_gap(g)
    dd = degree_data(g)
    s_e = dd.twice_s_e / 2
    nu_se = nu_s(SpinValue(dd.twice_s_e), spec.mu)
    m = len(spec.cover)
    details = {"gamma": gamma, "nu_SE": nu_se, "S_E": s_e, "m": m, "representation": ev.representation}

    overlap = None
    uniform = np.allclose(spec.p, 1 / m, atol=1e-12)
    if uniform and m >= 2 and dd.twice_s_e > 2:
        s = s_of_graph(g)
        if s > 0:
            b4 = overlap_bound(nu_se, gamma, s, dd.twice_s_e - 2, m)
            overlap = b4.bound
            details.update(s=s, overlap_closed_form=b4.closed_form)

    coloring = None
    if is_coloring(g, spec.cover) and np.allclose(spec.p, coloring_probabilities(g, spec.cover), atol=1e-12):
        b5 = coloring_bound(nu_se, gamma, len(g.edges), s_e, g.n,
                            uniform_edge_spin=edge_spins_uniform(g), trivial=m == len(g.edges))
        coloring = b5.bound
        details.update(coloring_vertex_form=b5.vertex_form, coloring_saturating=b5.saturating)

    homogeneous = False
    if ev.representation != "matrix-free" and ev.dim <= 2000:
        omega = ev.operator(spec.cover, spec.p)
        homogeneous, lam = homogeneity_check(omega, ev.ground)
        details["lambda"] = lam
    n = sample_count(nu, epsilon, delta) if nu > 0 else None
    return ProtocolReport(nu, overlap, coloring, n, homogeneous, details)


def load_protocol_spec(source) -> tuple:
    """Read a protocol JSON file; returns (ProtocolSpec, evaluator).

    Format: {"graph": <catalog name or file>, "mu": <name or file>,
    "cover": "trivial"|"optimal"|"maximal"|"M<m>"|[[edge indices], ...],
    "p": "uniform"|"optimal"|"sizes"|[numbers]}.
    """
    if isinstance(source, dict):
        doc, where = source, "<spec>"
    else:
        path = Path(source)
        where = str(path)
        try:
            doc = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{where}: line {exc.lineno}: {exc.msg}") from None
        except OSError as exc:
            raise ValidationError(f"{where}: {exc.strerror}") from None
    if not isinstance(doc, dict):
        raise ValidationError(f"{where}: top level must be an object")
    for key in ("graph", "mu"):
        if key not in doc:
            raise ValidationError(f"{where}: missing field {key!r}")
    unknown = set(doc) - {"graph", "mu", "cover", "p"}
    if unknown:
        raise ValidationError(f"{where}: unknown field(s) {sorted(unknown)}")
    try:
        graph = load_graph(doc["graph"])
        mu = load_distribution(doc["mu"])
        return build_spec(graph, mu, doc.get("cover", "optimal"), doc.get("p", "uniform"))
    except ValidationError as exc:
        raise ValidationError(f"{where}: {exc}") from None


def build_spec(graph: GraphSpec, mu, cover="optimal", p="uniform"):
    ev = ProtocolEvaluator(graph, mu)
    members = resolve_cover(graph, cover, mu, ev)
    if isinstance(p, str):
        if p == "uniform":
            probs = None
        elif p == "optimal":
            probs = optimize_probabilities(graph, mu, members, ev).p
        elif p == "sizes":
            probs = coloring_probabilities(graph, members)
        else:
            raise ValidationError(f"field 'p': unknown value {p!r}")
    else:
        probs = np.asarray(p, dtype=float)
    return ProtocolSpec(graph, mu, members, probs), ev
