"""Spin operators, rotated eigenprojectors and pair max-spin projectors.

Every single-spin operator is written in the S_z eigenbasis ordered
m = S, S-1, ..., -S.  Pair operators use the Kronecker ordering
(first spin) x (second spin).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import NormalizationError, ValidationError

MAX_TWICE_S = 18
UNIT_TOL = 1e-12


@dataclass(frozen=True, order=True)
class SpinValue:
    """A half-integer spin stored exactly as the doubled integer 2S."""

    twice_s: int

    def __post_init__(self):
        if not isinstance(self.twice_s, (int, np.integer)) or self.twice_s < 0:
            raise ValidationError(f"2S must be a nonnegative integer, got {self.twice_s!r}")
        object.__setattr__(self, "twice_s", int(self.twice_s))

    @property
    def dim(self) -> int:
        return self.twice_s + 1

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_s, 2)

    def __float__(self) -> float:
        return self.twice_s / 2

    def __add__(self, other: SpinValue) -> SpinValue:
        return SpinValue(self.twice_s + as_spin(other).twice_s)

    def __str__(self) -> str:
        return str(self.value)


def as_spin(s) -> SpinValue:
    """Coerce an int, float, Fraction, "p/q" string or SpinValue to a SpinValue."""
    if isinstance(s, SpinValue):
        return s
    return SpinValue(twice_half_integer(s))


def twice_half_integer(x) -> int:
    """Return 2x as an int, rejecting values that are not half-integers."""
    if isinstance(x, str):
        x = Fraction(x)
    doubled = 2 * Fraction(x) if not isinstance(x, float) else 2 * x
    k = round(doubled)
    if abs(doubled - k) > 1e-9:
        raise ValidationError(f"{x!r} is not a half-integer")
    return int(k)


def unit_vector(r, tol: float = UNIT_TOL) -> np.ndarray:
    r = np.asarray(r, dtype=float).reshape(-1)
    if r.shape != (3,):
        raise ValidationError("axis must have three components")
    norm = np.linalg.norm(r)
    if abs(norm - 1.0) > tol:
        raise NormalizationError(f"axis {r.tolist()} has norm {norm!r}, expected 1")
    return r


def m_values(S) -> np.ndarray:
    """Magnetic quantum numbers S, S-1, ..., -S in basis order."""
    S = as_spin(S)
    return (S.twice_s - 2 * np.arange(S.dim)) / 2


@lru_cache(maxsize=None)
def _spin_operators(twice_s: int):
    s = twice_s / 2
    m = (twice_s - 2 * np.arange(twice_s + 1)) / 2
    # S_+ |m> = sqrt(S(S+1) - m(m+1)) |m+1>; |m+1> sits one index above |m>
    plus = np.diag(np.sqrt(s * (s + 1) - m[1:] * (m[1:] + 1)), k=1).astype(complex)
    minus = plus.conj().T
    sx = (plus + minus) / 2
    sy = (plus - minus) / 2j
    sz = np.diag(m).astype(complex)
    for op in (sx, sy, sz):
        op.setflags(write=False)
    return sx, sy, sz


def spin_operators(S) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (S_x, S_y, S_z) for spin S as read-only (2S+1)-dimensional matrices."""
    S = as_spin(S)
    if S.twice_s > MAX_TWICE_S:
        raise ValidationError(f"spin {S} exceeds the supported maximum 9")
    return _spin_operators(S.twice_s)


def spin_along(S, r) -> np.ndarray:
    """S_r = r . S for a unit vector r."""
    r = unit_vector(r)
    sx, sy, sz = spin_operators(S)
    return r[0] * sx + r[1] * sy + r[2] * sz


def spin_eigenprojector(S, m, r) -> np.ndarray:
    """Rank-one projector onto the eigenstate of S_r with eigenvalue m.

    Built from the product of (S_r - k)/(m - k) over the other eigenvalues k.
    """
    S = as_spin(S)
    tm = twice_half_integer(m)
    if abs(tm) > S.twice_s or (S.twice_s - tm) % 2:
        raise ValidationError(f"m={m} is not an eigenvalue of a spin-{S} operator")
    s_r = spin_along(S, r)
    proj = np.eye(S.dim, dtype=complex)
    for tk in range(-S.twice_s, S.twice_s + 1, 2):
        if tk != tm:
            proj = proj @ (s_r - (tk / 2) * np.eye(S.dim)) / ((tm - tk) / 2)
    return proj


def spin_eigenvector(S, m, r) -> np.ndarray:
    """Normalized eigenvector |S, m>_r (phase fixed by the largest component)."""
    proj = spin_eigenprojector(S, m, r)
    col = proj[:, np.argmax(np.real(np.diag(proj)))]
    vec = col / np.linalg.norm(col)
    k = np.argmax(np.abs(vec))
    return vec * (abs(vec[k]) / vec[k])


def eigenstate_fidelity(S, r, s, sign_r: int = 1, sign_s: int = 1) -> float:
    """|<±|±>|^2 between extremal eigenstates along r and s: ((1 ± r.s)/2)^(2S)."""
    S = as_spin(S)
    r, s = unit_vector(r), unit_vector(s)
    if sign_r not in (1, -1) or sign_s not in (1, -1):
        raise ValidationError("signs must be +1 or -1")
    dot = float(np.dot(r, s))
    return ((1 + sign_r * sign_s * dot) / 2) ** S.twice_s


def pair_spin_squared(S1, S2) -> np.ndarray:
    """(S_1 + S_2)^2 on the pair space."""
    ops1, ops2 = spin_operators(S1), spin_operators(S2)
    d1, d2 = as_spin(S1).dim, as_spin(S2).dim
    total = np.zeros((d1 * d2, d1 * d2), dtype=complex)
    for a, b in zip(ops1, ops2):
        comp = np.kron(a, np.eye(d2)) + np.kron(np.eye(d1), b)
        total += comp @ comp
    return total


def spin_dot(S1, S2) -> np.ndarray:
    """S_1 . S_2 on the pair space."""
    return sum(np.kron(a, b) for a, b in zip(spin_operators(S1), spin_operators(S2)))


@lru_cache(maxsize=None)
def _max_spin_projector(t1: int, t2: int) -> np.ndarray:
    s_e = (t1 + t2) / 2
    sq = pair_spin_squared(SpinValue(t1), SpinValue(t2))
    dim = sq.shape[0]
    proj = np.eye(dim, dtype=complex)
    # total spin l runs over |S1-S2|, ..., S1+S2-1
    for tl in range(abs(t1 - t2), t1 + t2, 2):
        l = tl / 2
        proj = proj @ (sq - l * (l + 1) * np.eye(dim)) / (s_e * (s_e + 1) - l * (l + 1))
    proj = (proj + proj.conj().T) / 2
    proj.setflags(write=False)
    return proj


def max_spin_projector(S1, S2) -> np.ndarray:
    """Projector onto total spin S1+S2 of a pair, rank 2(S1+S2)+1."""
    return _max_spin_projector(as_spin(S1).twice_s, as_spin(S2).twice_s)


def pair_outcome_probability(S1, m1, S2, m2, r, s) -> float:
    """||P_S |S1,m1>_r (x) |S2,m2>_s||^2 for the max-spin projector P_S."""
    v = np.kron(spin_eigenvector(S1, m1, r), spin_eigenvector(S2, m2, s))
    w = max_spin_projector(S1, S2) @ v
    return float(np.real(np.vdot(w, w)))
