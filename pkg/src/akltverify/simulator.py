"""Monte-Carlo runs of a verification protocol on exact (noisy) states.

Each run draws a matching, an axis per edge, then samples the spin outcomes
on the matched vertices from the Born rule, conditioning edge by edge on the
outcomes already drawn.  A run passes unless some edge shows both spins
maximally up or both maximally down along its axis.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .embedding import min_sz_sector
from .errors import ResourceGuardError, ValidationError
from .hamiltonian import DENSE_LIMIT
from .protocol import ProtocolEvaluator, ProtocolSpec, homogeneity_check, matching_test
from .sphere import ISOTROPIC
from .spin_algebra import SpinValue, spin_along

KINDS = ("target", "depolarized", "worst-case", "custom")


@dataclass
class NoisyStateModel:
    """The state handed to the verifier.

    target: the AKLT state; depolarized: (1-eps)|Psi><Psi| + eps 1/d;
    worst-case: (1-eps)|Psi><Psi| + eps|phi><phi| with phi the top eigenvector
    of the deflated operator; custom: an explicit density matrix.
    """

    kind: str = "target"
    epsilon: float = 0.0
    rho: np.ndarray | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"noise kind must be one of {KINDS}, got {self.kind!r}")
        if not 0 <= self.epsilon <= 1:
            raise ValidationError("epsilon must lie in [0, 1]")
        if self.kind == "custom":
            if self.rho is None:
                raise ValidationError("custom noise needs a density matrix")
            rho = np.asarray(self.rho, dtype=complex)
            if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
                raise ValidationError("density matrix must be square")
            if np.abs(rho - rho.conj().T).max() > 1e-10:
                raise ValidationError("density matrix must be Hermitian")
            if abs(np.trace(rho).real - 1) > 1e-10:
                raise ValidationError("density matrix must have unit trace")
            if np.linalg.eigvalsh(rho)[0] < -1e-10:
                raise ValidationError("density matrix must be positive semidefinite")
            self.rho = rho

    @classmethod
    def parse(cls, text: str) -> "NoisyStateModel":
        """'target', 'depolarize:0.1', 'worst:0.1' (aliases accepted)."""
        name, _, arg = text.partition(":")
        name = {"depolarize": "depolarized", "worst": "worst-case", "rank2": "worst-case"}.get(name, name)
        if name == "custom":
            raise ValidationError("custom states must be given as a matrix, not a flag")
        try:
            eps = float(arg) if arg else 0.0
        except ValueError:
            raise ValidationError(f"bad noise level {arg!r}") from None
        return cls(name, eps)


@dataclass
class RunResult:
    n_runs: int
    n_pass: int
    seed: int
    exact: float | None = None

    @property
    def pass_rate(self) -> float:
        return self.n_pass / self.n_runs if self.n_runs else float("nan")

    @property
    def stderr(self) -> float:
        p = self.pass_rate
        return math.sqrt(max(p * (1 - p), 0.0) / self.n_runs) if self.n_runs else float("nan")

    def to_json(self) -> dict:
        out = asdict(self)
        out.update(pass_rate=self.pass_rate, stderr=self.stderr, generator="Philox")
        return out


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(int(seed)))


# ---------------------------------------------------------------- states


def _full_ground(ev: ProtocolEvaluator) -> np.ndarray:
    """Ground-space basis of the evaluator lifted to the full space."""
    if ev.sector is None:
        return ev.ground
    out = np.zeros((ev.full_dim, ev.ground.shape[1]), dtype=ev.ground.dtype)
    out[ev.sector] = ev.ground
    return out


def _worst_vector(ev: ProtocolEvaluator, spec: ProtocolSpec) -> np.ndarray:
    _, vec = ev.top_eigenpairs(spec.cover, spec.p, 1)
    vec = vec[:, 0]
    if ev.sector is not None:
        full = np.zeros(ev.full_dim, dtype=complex)
        full[ev.sector] = vec
        vec = full
    return vec / np.linalg.norm(vec)


def state_mixture(state: NoisyStateModel, spec: ProtocolSpec, ev: ProtocolEvaluator):
    """(weights, column vectors, maximally-mixed weight) describing the state."""
    psi = _full_ground(ev)[:, 0].astype(complex)
    eps = state.epsilon
    if state.kind == "target":
        return np.array([1.0]), psi[:, None], 0.0
    if state.kind == "depolarized":
        return np.array([1 - eps]), psi[:, None], eps
    if state.kind == "worst-case":
        phi = _worst_vector(ev, spec)
        return np.array([1 - eps, eps]), np.column_stack([psi, phi]), 0.0
    rho = state.rho
    if rho.shape[0] != ev.full_dim:
        raise ValidationError(f"density matrix has dimension {rho.shape[0]}, expected {ev.full_dim}")
    w, v = np.linalg.eigh(rho)
    keep = w > 1e-14
    return w[keep], v[:, keep], 0.0


def density_matrix(state: NoisyStateModel, spec: ProtocolSpec, ev: ProtocolEvaluator) -> np.ndarray:
    w, v, mixed = state_mixture(state, spec, ev)
    rho = (v * w) @ v.conj().T
    return rho + mixed * np.eye(ev.full_dim) / ev.full_dim


def exact_pass_probability(spec: ProtocolSpec, state: NoisyStateModel, ev: ProtocolEvaluator | None = None) -> float:
    """tr(Omega sigma) from the full-space matching tests."""
    ev = ev or ProtocolEvaluator(spec.graph, spec.mu)
    w, v, mixed = state_mixture(state, spec, ev)
    total = 0.0
    for pl, m in zip(spec.p, spec.cover):
        t = matching_test(spec.graph, spec.mu, m)
        val = np.real(np.einsum("ik,ij,jk->k", v.conj(), t, v)) @ w
        if mixed:
            val += mixed * np.real(np.trace(t)) / ev.full_dim
        total += pl * val
    return float(total)


# ---------------------------------------------------------------- sampling


def _rotations(mu, twice_s: int, k: int) -> np.ndarray:
    """Unitary whose rows are <m| along axis k, ordered m = S..-S."""
    s = SpinValue(twice_s)
    w, v = np.linalg.eigh(spin_along(s, mu.points[k]))
    return v[:, ::-1].conj().T


def _joint_distribution(vectors, weights, mixed, dims, vertices, rotations):
    """Born distribution over the outcome indices of ``vertices``."""
    n = len(dims)
    measured = [dims[v] for v in vertices]
    probs = np.zeros(measured)
    rest = [a for a in range(n) if a not in vertices]
    for k in range(vectors.shape[1]):
        psi = vectors[:, k].reshape(dims)
        for v, u in zip(vertices, rotations):
            psi = np.moveaxis(np.tensordot(u, psi, axes=([1], [v])), 0, v)
        amp = np.abs(psi) ** 2
        amp = amp.sum(axis=tuple(rest)) if rest else amp
        # summing leaves the measured axes in increasing vertex order
        order = np.argsort(np.argsort(vertices))
        probs += weights[k] * np.transpose(amp, order) if len(vertices) > 1 else weights[k] * amp
    if mixed:
        probs += mixed / np.prod(measured)
    probs = np.clip(probs, 0, None)
    return probs / probs.sum()


def _sequential_sample(probs, n_edges, rng, count):
    """Sample ``count`` outcomes edge by edge from the pair-grouped joint tensor."""
    marg = [probs.sum(axis=tuple(range(j + 1, n_edges))) if j + 1 < n_edges else probs for j in range(n_edges)]
    picks = []
    for j in range(n_edges):
        cond = marg[j][tuple(picks)] if picks else np.broadcast_to(marg[0], (count, marg[0].shape[0]))
        cond = cond / cond.sum(axis=1, keepdims=True)
        u = rng.random(count)[:, None]
        idx = (np.cumsum(cond, axis=1) < u).sum(axis=1)
        picks.append(np.minimum(idx, cond.shape[1] - 1))
    return np.stack(picks, axis=1)


def simulate(spec: ProtocolSpec, state: NoisyStateModel, n_runs: int, seed: int,
             evaluator: ProtocolEvaluator | None = None, with_exact: bool = True) -> RunResult:
    g = spec.graph
    if g.hilbert_dim > DENSE_LIMIT:
        raise ResourceGuardError(f"simulation needs dimension <= {DENSE_LIMIT}, got {g.hilbert_dim}")
    if n_runs < 0:
        raise ValidationError("n_runs must be nonnegative")
    if spec.mu is ISOTROPIC:
        raise ValidationError("simulation needs a discrete axis distribution")
    ev = evaluator or ProtocolEvaluator(g, spec.mu)
    weights, vectors, mixed = state_mixture(state, spec, ev)
    rng = make_rng(seed)
    dims = g.local_dims
    t = g.twice_spins
    mu = spec.mu
    longest = max(len(m) for m in spec.cover)
    which = rng.choice(len(spec.cover), size=n_runs, p=spec.p)
    axes = rng.choice(len(mu.weights), size=(n_runs, longest), p=mu.weights)
    for l, m in enumerate(spec.cover):
        axes[which == l, len(m):] = -1

    rot_cache = {}

    def rot(v, k):
        key = (t[v], k)
        if key not in rot_cache:
            rot_cache[key] = _rotations(mu, t[v], k)
        return rot_cache[key]

    keys = np.column_stack([which, axes])
    uniq, inverse = np.unique(keys, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    n_pass = 0
    for gi, key in enumerate(uniq):
        count = int((inverse == gi).sum())
        matching = spec.cover[key[0]]
        vertices = [x for e in matching for x in e]
        rotations = [rot(x, key[1 + i // 2]) for i, x in enumerate(vertices)]
        probs = _joint_distribution(vectors, weights, mixed, dims, vertices, rotations)
        pair_shape = [dims[u] * dims[v] for u, v in matching]
        outcomes = _sequential_sample(probs.reshape(pair_shape), len(matching), rng, count)
        fail = np.zeros(count, dtype=bool)
        for j, (u, v) in enumerate(matching):
            i1, i2 = np.divmod(outcomes[:, j], dims[v])
            fail |= ((i1 == 0) & (i2 == 0)) | ((i1 == dims[u] - 1) & (i2 == dims[v] - 1))
        n_pass += int((~fail).sum())
    exact = exact_pass_probability(spec, state, ev) if with_exact else None
    return RunResult(n_runs, n_pass, int(seed), exact)


def estimate_fidelity_homogeneous(spec: ProtocolSpec, pass_rate: float, evaluator=None) -> float:
    """Invert tr(Omega sigma) = lam + nu F for a homogeneous protocol."""
    ev = evaluator or ProtocolEvaluator(spec.graph, spec.mu)
    omega = ev.operator(spec.cover, spec.p)
    ok, lam = homogeneity_check(omega, ev.ground)
    if not ok:
        raise ValidationError("protocol is not homogeneous; fidelity cannot be read off the pass rate")
    return (pass_rate - lam) / (1 - lam)
