"""Canonical bond tests, bond verification operators and the gaps nu_S(mu)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .spin_algebra import SpinValue, as_spin, max_spin_projector, spin_eigenprojector, spin_eigenvector
from .sphere import ISOTROPIC, SphereDistribution, symmetrize


def canonical_test(S1, S2, r) -> np.ndarray:
    """R_r = 1 - |++><++|_r - |--><--|_r on the pair space."""
    S1, S2 = as_spin(S1), as_spin(S2)
    d = S1.dim * S2.dim
    up = np.kron(spin_eigenvector(S1, S1.value, r), spin_eigenvector(S2, S2.value, r))
    down = np.kron(spin_eigenvector(S1, -S1.value, r), spin_eigenvector(S2, -S2.value, r))
    return np.eye(d) - np.outer(up, up.conj()) - np.outer(down, down.conj())


def bond_omega(S1, S2, mu) -> np.ndarray:
    """Weighted average of canonical tests over mu."""
    S1, S2 = as_spin(S1), as_spin(S2)
    if mu is ISOTROPIC:
        s = S1 + S2
        return np.eye(S1.dim * S2.dim) - 2 / (s.twice_s + 1) * max_spin_projector(S1, S2)
    return _bond_omega(S1.twice_s, S2.twice_s, _key(mu))


def _key(mu: SphereDistribution):
    return (mu.points.tobytes(), mu.weights.tobytes())


@lru_cache(maxsize=256)
def _bond_omega(t1: int, t2: int, key) -> np.ndarray:
    pts = np.frombuffer(key[0]).reshape(-1, 3)
    w = np.frombuffer(key[1])
    out = sum(wi * canonical_test(SpinValue(t1), SpinValue(t2), r) for r, wi in zip(pts, w))
    out = (out + out.conj().T) / 2
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class BondOperator:
    S1: SpinValue
    S2: SpinValue
    mu: object
    omega: np.ndarray

    @property
    def gap(self) -> float:
        """1 - ||P_S Omega P_S||."""
        p = max_spin_projector(self.S1, self.S2)
        return float(1 - np.linalg.norm(p @ self.omega @ p, 2))


def bond_operator(S1, S2, mu) -> BondOperator:
    S1, S2 = as_spin(S1), as_spin(S2)
    return BondOperator(S1, S2, mu, bond_omega(S1, S2, mu))


def omega_s(S, mu) -> np.ndarray:
    """Omega_S(mu) = 1 - 2 * integral of |S><S|_r over mu_sym, on dimension 2S+1."""
    S = as_spin(S)
    return np.eye(S.dim) - o_s(S, mu)


def o_s(S, mu) -> np.ndarray:
    S = as_spin(S)
    if mu is ISOTROPIC:
        return 2 / S.dim * np.eye(S.dim)
    sym = symmetrize(mu)
    out = np.zeros((S.dim, S.dim), dtype=complex)
    for r, w in zip(sym.points, sym.weights):
        out += 2 * w * spin_eigenprojector(S, S.value, r)
    return (out + out.conj().T) / 2


def nu_s(S, mu) -> float:
    """Bond gap for total spin S: the smallest eigenvalue of O_S(mu)."""
    S = as_spin(S)
    if mu is ISOTROPIC:
        return 2 / S.dim
    return float(max(np.linalg.eigvalsh(o_s(S, mu))[0], 0.0))
