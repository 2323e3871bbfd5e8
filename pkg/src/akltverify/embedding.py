"""Embedding local operators into many-spin spaces.

Site ordering is vertex-index ascending; site 0 is the most significant
Kronecker factor.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from .spin_algebra import SpinValue, m_values


def _kron_chain(factors) -> sp.csr_matrix:
    out = sp.identity(1, dtype=complex, format="csr")
    for f in factors:
        out = sp.kron(out, f, format="csr")
    return out


def operator_schmidt(op: np.ndarray, d1: int, d2: int, tol: float = 1e-13):
    """Split a (d1 d2)x(d1 d2) operator into sum_a A_a (x) B_a."""
    t = op.reshape(d1, d2, d1, d2).transpose(0, 2, 1, 3).reshape(d1 * d1, d2 * d2)
    u, sv, vh = np.linalg.svd(t, full_matrices=False)
    keep = sv > tol * max(sv[0], 1.0) if sv.size else []
    terms = []
    for a in np.flatnonzero(keep):
        terms.append((
            (u[:, a] * sv[a]).reshape(d1, d1),
            vh[a].reshape(d2, d2),
        ))
    return terms


def embed_one(op, site: int, dims) -> sp.csr_matrix:
    factors = [sp.identity(d, dtype=complex, format="csr") for d in dims]
    factors[site] = sp.csr_matrix(op)
    return _kron_chain(factors)


def embed_two(op: np.ndarray, j: int, k: int, dims) -> sp.csr_matrix:
    """Embed a pair operator acting on sites j, k (in that factor order)."""
    if j == k:
        raise ValueError("sites must differ")
    if j > k:
        # swap the factor order of the local operator
        dj, dk = dims[j], dims[k]
        op = op.reshape(dj, dk, dj, dk).transpose(1, 0, 3, 2).reshape(dj * dk, dj * dk)
        j, k = k, j
    total = None
    for a, b in operator_schmidt(np.asarray(op), dims[j], dims[k]):
        factors = [sp.identity(d, dtype=complex, format="csr") for d in dims]
        factors[j] = sp.csr_matrix(a)
        factors[k] = sp.csr_matrix(b)
        term = _kron_chain(factors)
        total = term if total is None else total + term
    if total is None:
        n = int(np.prod(dims))
        total = sp.csr_matrix((n, n), dtype=complex)
    total.eliminate_zeros()
    return total


def twice_total_sz(twice_spins) -> np.ndarray:
    """Diagonal of 2 * total S_z over the product basis."""
    out = np.zeros(1, dtype=int)
    for t in twice_spins:
        out = (out[:, None] + np.rint(2 * m_values(SpinValue(int(t)))).astype(int)[None, :]).reshape(-1)
    return out


def min_sz_sector(twice_spins) -> np.ndarray:
    """Basis indices with the smallest nonnegative total S_z.

    Every SU(2) multiplet has exactly one member there, so the spectrum of an
    SU(2)-invariant operator restricted to this sector lists every distinct
    eigenvalue of the full operator.
    """
    tsz = twice_total_sz(twice_spins)
    target = int(sum(twice_spins)) % 2
    return np.flatnonzero(tsz == target)


def restrict(op, idx: np.ndarray):
    if sp.issparse(op):
        return op.tocsr()[idx][:, idx]
    return op[np.ix_(idx, idx)]
