"""Weighted point distributions on the unit sphere and their design properties."""

from __future__ import annotations

import itertools
import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numpy.polynomial import legendre

from .errors import NormalizationError, ValidationError

log = logging.getLogger(__name__)

MAX_STRENGTH = 11
MERGE_TOL = 1e-10
DESIGN_TOL = 1e-10


@dataclass(frozen=True)
class SphereDistribution:
    points: np.ndarray  # (k, 3) unit vectors
    weights: np.ndarray  # (k,) positive, summing to 1
    name: str = ""

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float).reshape(-1, 3)
        w = np.asarray(self.weights, dtype=float).reshape(-1)
        if len(pts) != len(w) or len(w) == 0:
            raise ValidationError("need one positive weight per point")
        if (w <= 0).any():
            raise ValidationError("weights must be positive")
        if abs(w.sum() - 1) > 1e-12:
            raise ValidationError(f"weights sum to {w.sum()!r}, expected 1")
        norms = np.linalg.norm(pts, axis=1)
        if np.abs(norms - 1).max() > 1e-12:
            raise NormalizationError("all points must be unit vectors")
        pts.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", w)

    def __len__(self):
        return len(self.weights)

    def to_json(self) -> list:
        return [{"v": p.tolist(), "w": float(w)} for p, w in zip(self.points, self.weights)]


class Isotropic:
    """Marker for the uniform distribution on the sphere, handled analytically."""

    name = "isotropic"

    def __repr__(self):
        return "ISOTROPIC"


ISOTROPIC = Isotropic()

GOLDEN = (1 + math.sqrt(5)) / 2


def _uniform(points, name) -> SphereDistribution:
    pts = np.asarray(points, dtype=float)
    pts = pts / np.linalg.norm(pts, axis=1, keepdims=True)
    return SphereDistribution(pts, np.full(len(pts), 1 / len(pts)), name)


def _signs(k):
    return itertools.product((1, -1), repeat=k)


def _icosahedron_vertices():
    b = GOLDEN
    out = []
    for s1, s2 in _signs(2):
        out += [(s1, s2 * b, 0), (s1 * b, 0, s2), (0, s1, s2 * b)]
    return out


def _dodecahedron_vertices():
    b, c = GOLDEN, 1 / GOLDEN
    out = []
    for s1, s2 in _signs(2):
        out += [(s1 * b, s2 * c, 0), (s1 * c, 0, s2 * b), (0, s1 * b, s2 * c)]
    out += list(_signs(3))
    return out


def _mu24_vertices():
    theta = math.atan(3 * math.sqrt(10) / 20)
    u = [
        math.sqrt((1 + 2 * math.sqrt(2 / 5) * math.cos((theta + 2 * j * math.pi) / 3)) / 3)
        for j in (1, 2, 3)
    ]
    out = []
    for perm in itertools.permutations(range(3)):
        # parity of the permutation via inversion count
        sign = (-1) ** sum(perm[i] > perm[j] for i in range(3) for j in range(i + 1, 3))
        for a1, a2 in _signs(2):
            out.append((a1 * u[perm[0]], a2 * u[perm[1]], a1 * a2 * sign * u[perm[2]]))
    return out


def builtin_distribution(name: str):
    """Built-in distributions; ``"isotropic"`` returns the analytic marker."""
    key = name.lower()
    if key == "isotropic":
        return ISOTROPIC
    if key == "tetrahedron":
        return _uniform([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)], key)
    if key == "octahedron":
        return _uniform([v for i in range(3) for v in (np.eye(3)[i], -np.eye(3)[i])], key)
    if key == "cube":
        return _uniform(list(_signs(3)), key)
    if key == "icosahedron":
        return _uniform(_icosahedron_vertices(), key)
    if key == "dodecahedron":
        return _uniform(_dodecahedron_vertices(), key)
    if key == "mu24":
        return _uniform(_mu24_vertices(), key)
    if key == "mu32":
        ico = _uniform(_icosahedron_vertices(), "").points
        dod = _uniform(_dodecahedron_vertices(), "").points
        w = np.concatenate([np.full(12, 5 / 168), np.full(20, 9 / 280)])
        w = w / w.sum()  # exact up to rounding: 12*5/168 + 20*9/280 = 1
        return SphereDistribution(np.vstack([ico, dod]), w, key)
    raise ValidationError(f"unknown distribution {name!r}")


BUILTIN_NAMES = ("tetrahedron", "octahedron", "cube", "icosahedron", "dodecahedron", "mu24", "mu32")


def _merge(points, weights, name) -> SphereDistribution:
    kept_p, kept_w = [], []
    for p, w in zip(points, weights):
        for i, q in enumerate(kept_p):
            if np.abs(p - q).max() < MERGE_TOL:
                kept_w[i] += w
                break
        else:
            kept_p.append(np.array(p))
            kept_w.append(float(w))
    w = np.array(kept_w)
    return SphereDistribution(np.array(kept_p), w / w.sum(), name)


def symmetrize(mu: SphereDistribution) -> SphereDistribution:
    """Average of mu and its image under r -> -r, with coincident points merged."""
    if mu is ISOTROPIC:
        return mu
    pts = np.vstack([mu.points, -mu.points])
    w = np.concatenate([mu.weights, mu.weights]) / 2
    return _merge(pts, w, f"{mu.name}_sym" if mu.name else "")


def antipodal_classes(mu: SphereDistribution) -> int:
    """Number of distinct canonical tests: points with antipodes identified."""
    reps = []
    for p in mu.points:
        if not any(np.abs(p - q).max() < MERGE_TOL or np.abs(p + q).max() < MERGE_TOL for q in reps):
            reps.append(p)
    return len(reps)


def _gram(mu: SphereDistribution):
    g = mu.points @ mu.points.T
    return np.clip(g, -1.0, 1.0), np.outer(mu.weights, mu.weights)


def frame_potential(mu: SphereDistribution, t: int) -> float:
    """Sum over point pairs of w_r w_s (r.s)^t, for even t."""
    if t < 0 or t % 2:
        raise ValidationError("frame potentials are defined here for even t >= 0")
    g, ww = _gram(mu)
    return float(np.sum(ww * g**t))


def legendre_moment(mu: SphereDistribution, k: int) -> float:
    """Sum of w_r w_s P_k(r.s); zero for 1 <= k <= t exactly when mu is a t-design."""
    g, ww = _gram(mu)
    coeffs = np.zeros(k + 1)
    coeffs[k] = 1
    return float(np.sum(ww * legendre.legval(g, coeffs)))


def design_strength(mu, cap: int = MAX_STRENGTH) -> int:
    """Largest t <= cap such that mu is a spherical t-design."""
    if mu is ISOTROPIC:
        return cap
    for k in range(1, cap + 1):
        if abs(legendre_moment(mu, k)) > DESIGN_TOL:
            return k - 1
    return cap


def symmetric_design_strength(mu, cap: int = MAX_STRENGTH) -> int:
    """Design strength of mu_sym certified through even frame potentials."""
    if mu is ISOTROPIC:
        return cap
    sym = symmetrize(mu)
    strength = 1
    for t in range(2, cap + 1, 2):
        if abs(frame_potential(sym, t) - 1 / (t + 1)) > DESIGN_TOL:
            return strength
        strength = min(t + 1, cap)
    return strength


def load_distribution(source):
    """A builtin name, or a JSON file holding [{"v": [x, y, z], "w": weight}, ...]."""
    path = Path(str(source))
    if not path.exists():
        return builtin_distribution(str(source))
    try:
        doc = json.loads(path.read_text())
        pts = np.array([entry["v"] for entry in doc], dtype=float)
        w = np.array([entry["w"] for entry in doc], dtype=float)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"{path}: bad distribution file ({exc})") from None
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise ValidationError(f"{path}: every \"v\" needs three components")
    if abs(w.sum() - 1) > 1e-12:
        log.warning("%s: weights sum to %r; rescaling to 1", path, float(w.sum()))
        w = w / w.sum()
    return SphereDistribution(pts, w, path.stem)
