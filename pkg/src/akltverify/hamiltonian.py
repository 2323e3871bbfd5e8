"""AKLT Hamiltonians on graphs, ground spaces, spectral gaps and chain gap bounds."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg as la
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .embedding import embed_two, min_sz_sector, restrict
from .errors import NotFrustrationFreeError, ResourceGuardError, ValidationError
from .graphs import GraphSpec, chain, open_chain_variant
from .spin_algebra import SpinValue, max_spin_projector

log = logging.getLogger(__name__)

ZERO_ENERGY = 1e-8
DENSE_LIMIT = 7000
SPARSE_LIMIT = 100_000


def edge_projector(g: GraphSpec, e) -> sp.csr_matrix:
    t = g.twice_spins
    u, v = e
    return embed_two(max_spin_projector(SpinValue(t[u]), SpinValue(t[v])), u, v, g.local_dims)


def build_hamiltonian(g: GraphSpec, sector=None) -> sp.csr_matrix:
    """Sum of edge max-spin projectors, as a sparse matrix.

    ``sector`` optionally restricts rows and columns to a list of basis indices.
    """
    if g.hilbert_dim > SPARSE_LIMIT:
        raise ResourceGuardError(f"Hilbert dimension {g.hilbert_dim} exceeds {SPARSE_LIMIT}")
    h = None
    for e in g.edges:
        pe = edge_projector(g, e)
        h = pe if h is None else h + pe
    h = (h + h.getH()) / 2
    if sector is not None:
        h = restrict(h, sector)
    return h.tocsr()


def _as_real(h):
    if sp.issparse(h):
        if h.dtype.kind == "c" and (h.nnz == 0 or abs(h.imag).max() < 1e-14):
            return h.real.tocsr()
        return h
    if np.iscomplexobj(h) and np.abs(h.imag).max(initial=0.0) < 1e-14:
        return np.ascontiguousarray(h.real)
    return h


def lowest_eigenpairs(h, k: int, method: str = "auto"):
    """The k lowest eigenpairs (ascending) of a Hermitian matrix, dense or sparse."""
    dim = h.shape[0]
    if method == "auto":
        method = "dense" if dim <= DENSE_LIMIT else "iterative"
    h = _as_real(h)
    if method == "dense" or k >= dim - 1:
        if dim > DENSE_LIMIT:
            raise ResourceGuardError(f"dense eigensolve of dimension {dim} exceeds {DENSE_LIMIT}")
        mat = h.toarray() if sp.issparse(h) else np.asarray(h)
        w, v = la.eigh(mat, subset_by_index=[0, min(k, dim) - 1])
        return w, v
    if method != "iterative":
        raise ValidationError(f"unknown eigensolver method {method!r}")
    h = sp.csr_matrix(h)
    v0 = np.ones(dim) / np.sqrt(dim)
    w, v = spla.eigsh(h, k=k, which="SA", v0=v0, tol=1e-12, maxiter=20 * dim)
    order = np.argsort(w)
    return w[order], v[:, order]


def spectral_gap(h, method: str = "auto", threshold: float = ZERO_ENERGY) -> float:
    """Smallest eigenvalue strictly above the zero-energy ground level."""
    dim = h.shape[0]
    k = min(6, dim)
    while True:
        w, _ = lowest_eigenpairs(h, k, method)
        if w[0] > threshold:
            raise NotFrustrationFreeError(f"lowest eigenvalue {w[0]:.3e} is not zero")
        above = w[w > threshold]
        if above.size:
            return float(above[0])
        if k >= dim:
            return float("inf")
        k = min(2 * k, dim)


@dataclass
class GroundSpace:
    energy: float
    basis: np.ndarray  # columns are orthonormal ground states
    degeneracy: int

    @property
    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.conj().T


def ground_space(h, method: str = "auto", threshold: float = ZERO_ENERGY) -> GroundSpace:
    dim = h.shape[0]
    k = min(6, dim)
    while True:
        w, v = lowest_eigenpairs(h, k, method)
        if w[0] > threshold:
            raise NotFrustrationFreeError(f"lowest eigenvalue {w[0]:.3e} is not zero")
        inside = w <= threshold
        if not inside.all() or k >= dim:
            return GroundSpace(float(w[0]), v[:, inside], int(inside.sum()))
        k = min(2 * k, dim)


def graph_gap(g: GraphSpec, method: str = "auto") -> float:
    """Spectral gap of the AKLT Hamiltonian of ``g``.

    The Hamiltonian is SU(2) invariant, so the minimal total-S_z sector carries
    every distinct eigenvalue and the solve is done there.
    """
    sector = min_sz_sector(g.twice_spins)
    return spectral_gap(build_hamiltonian(g, sector), method)


def graph_ground_space(g: GraphSpec, sector=None, method: str = "auto") -> GroundSpace:
    return ground_space(build_hamiltonian(g, sector), method)


CHAIN_KINDS = ("closed", "open", "half-one", "one-one")


def chain_graph(kind: str, n: int) -> GraphSpec:
    """Chains behind H°(n), H_{1/2,1/2}(n), H_{1/2,1}(n) and H_{1,1}(n)."""
    if n < 3:
        raise ValidationError("chains need n >= 3")
    if kind == "closed":
        return chain(n, closed=True)
    if kind == "open":
        return chain(n)
    if kind == "half-one":
        return open_chain_variant(n, 1, 2)
    if kind == "one-one":
        return open_chain_variant(n, 2, 2)
    raise ValidationError(f"chain kind must be one of {CHAIN_KINDS}, got {kind!r}")


def knabe_bound(gamma_open: float, k: int) -> float:
    """Knabe's lower bound on the closed-chain gap from the gap of H_{1,1}(k)."""
    if k <= 2:
        raise ValidationError("Knabe's bound needs k > 2")
    return (k - 1) / (k - 2) * (gamma_open - 1 / (k - 1))


def gosset_mozgunov_bound(gamma_open: float, k: int) -> float:
    if k <= 2:
        raise ValidationError("the Gosset-Mozgunov bound needs k > 2")
    return 5 / 6 * (k * k + k) / (k * k - 4) * (gamma_open - 6 / (k * (k + 1)))
