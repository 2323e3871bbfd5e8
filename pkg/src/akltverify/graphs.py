"""Graphs, matchings, matching covers, edge colorings and the built-in catalog."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import ResourceGuardError, ValidationError
from .spin_algebra import SpinValue, as_spin

MAX_VERTICES = 16

Edge = tuple  # (u, v) with u < v
Matching = tuple  # sorted tuple of edges
MatchingCover = tuple  # tuple of matchings


@dataclass(frozen=True)
class GraphSpec:
    """A connected simple graph on vertices 0..n-1.

    ``spins`` optionally overrides the default spin deg(j)/2 per vertex; it
    maps vertex -> 2S.
    """

    n: int
    edges: tuple
    spins: tuple = ()  # sorted (vertex, twice_s) pairs
    name: str = ""

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError("a graph needs at least two vertices")
        canon = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValidationError(f"edge {e} references a vertex outside 0..{self.n - 1}")
            key = (min(u, v), max(u, v))
            if key in canon:
                raise ValidationError(f"duplicate edge {key}")
            canon.add(key)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        spins = dict(self.spins)
        for v, t in spins.items():
            if not 0 <= int(v) < self.n:
                raise ValidationError(f"spin override for unknown vertex {v}")
            SpinValue(int(t))
        object.__setattr__(self, "spins", tuple(sorted((int(v), int(t)) for v, t in spins.items())))
        if not _connected(self.n, self.edges):
            raise ValidationError("graph is not connected")

    @property
    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    @property
    def twice_spins(self) -> list[int]:
        """2S_j per vertex; defaults to deg(j)."""
        out = self.degrees
        for v, t in self.spins:
            out[v] = t
        return out

    @property
    def local_dims(self) -> list[int]:
        return [t + 1 for t in self.twice_spins]

    @property
    def hilbert_dim(self) -> int:
        d = 1
        for x in self.local_dims:
            d *= x
        return d

    def with_spins(self, overrides: dict) -> GraphSpec:
        merged = dict(self.spins)
        merged.update({v: as_spin(s).twice_s for v, s in overrides.items()})
        return GraphSpec(self.n, self.edges, tuple(merged.items()), self.name)

    def to_json(self) -> dict:
        doc = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if self.spins:
            doc["spins"] = {str(v): t for v, t in self.spins}
        return doc


def _connected(n: int, edges) -> bool:
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _guard(g: GraphSpec):
    if g.n > MAX_VERTICES:
        raise ResourceGuardError(f"{g.n} vertices exceeds the combinatorial guard of {MAX_VERTICES}")


@dataclass(frozen=True)
class DegreeData:
    degrees: list
    max_degree: int
    twice_s_e: int  # 2 S_E
    overlap: int  # g = 2 S_E - 2

    @property
    def s_e(self) -> float:
        return self.twice_s_e / 2


def degree_data(g: GraphSpec) -> DegreeData:
    t = g.twice_spins
    twice_se = max(t[u] + t[v] for u, v in g.edges)
    return DegreeData(g.degrees, max(g.degrees), twice_se, twice_se - 2)


def edge_spin(g: GraphSpec, e) -> SpinValue:
    t = g.twice_spins
    return SpinValue(t[e[0]] + t[e[1]])


def is_matching(edges) -> bool:
    used = set()
    for u, v in edges:
        if u in used or v in used:
            return False
        used.update((u, v))
    return True


def check_matching(g: GraphSpec, edges) -> Matching:
    m = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
    missing = set(m) - set(g.edges)
    if missing:
        raise ValidationError(f"edges {sorted(missing)} are not in the graph")
    if not is_matching(m):
        raise ValidationError(f"{list(m)} is not a matching")
    return m


def check_cover(g: GraphSpec, cover) -> MatchingCover:
    cov = tuple(check_matching(g, m) for m in cover)
    covered = {e for m in cov for e in m}
    if covered != set(g.edges):
        raise ValidationError(f"cover misses edges {sorted(set(g.edges) - covered)}")
    return cov


def is_coloring(g: GraphSpec, cover) -> bool:
    seen = [e for m in cover for e in m]
    return len(seen) == len(set(seen)) == len(g.edges)


def all_matchings(g: GraphSpec) -> list:
    _guard(g)
    edges = g.edges
    out = []

    def rec(i, used, chosen):
        if i == len(edges):
            out.append(tuple(chosen))
            return
        rec(i + 1, used, chosen)
        u, v = edges[i]
        if u not in used and v not in used:
            chosen.append(edges[i])
            rec(i + 1, used | {u, v}, chosen)
            chosen.pop()

    rec(0, frozenset(), [])
    return out


def enumerate_matchings(g: GraphSpec):
    """Return (maximal matchings, maximum matchings, matching number)."""
    every = all_matchings(g)
    maximal = []
    for m in every:
        used = {x for e in m for x in e}
        if all(u in used or v in used for u, v in g.edges):
            maximal.append(m)
    size = max(len(m) for m in every)
    maximum = [m for m in maximal if len(m) == size]
    return maximal, maximum, size


def _colorings(g: GraphSpec, k: int, first_only: bool):
    """Proper k-edge-colorings, one per partition (colors opened in order)."""
    edges = g.edges
    incident = {v: [] for v in range(g.n)}
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    earlier = [sorted({j for x in e for j in incident[x] if j < i}) for i, e in enumerate(edges)]
    colour = [-1] * len(edges)
    found = []

    def rec(i, opened):
        if i == len(edges):
            found.append(tuple(colour))
            return first_only
        banned = {colour[j] for j in earlier[i]}
        for c in range(min(opened + 1, k)):
            if c in banned:
                continue
            colour[i] = c
            if rec(i + 1, max(opened, c + 1)):
                return True
        colour[i] = -1
        return False

    rec(0, 0)
    covers = []
    for col in found:
        classes = [tuple(e for e, c in zip(edges, col) if c == cc) for cc in range(max(col) + 1)]
        covers.append(tuple(classes))
    return covers


def chromatic_index(g: GraphSpec) -> int:
    _guard(g)
    k = max(g.degrees)
    while not _colorings(g, k, True):
        k += 1
    return k


def edge_colorings(g: GraphSpec):
    """Return (chi', one optimal coloring, trivial coloring) as matching covers."""
    k = chromatic_index(g)
    best = _colorings(g, k, True)[0]
    trivial = tuple((e,) for e in g.edges)
    return k, best, trivial


def optimal_colorings(g: GraphSpec) -> list:
    """Every optimal edge coloring, each partition listed once."""
    k = chromatic_index(g)
    return [c for c in _colorings(g, k, False) if len(c) == k]


def chromatic_number(g: GraphSpec) -> int:
    _guard(g)
    adj = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    for k in range(1, g.n + 1):
        col = [-1] * g.n

        def rec(v, opened):
            if v == g.n:
                return True
            for c in range(min(opened + 1, k)):
                if all(col[w] != c for w in adj[v]):
                    col[v] = c
                    if rec(v + 1, max(opened, c + 1)):
                        return True
            col[v] = -1
            return False

        if rec(0, 0):
            return k
    return g.n


def cycle_matching_covers(n: int, m: int) -> MatchingCover:
    """Covers {M_1..M_m} of the odd cycle by cyclically shifted maximum matchings."""
    if n < 3 or n % 2 == 0:
        raise ValidationError("cycle matching covers need an odd cycle length n >= 3")
    if not 3 <= m <= n:
        raise ValidationError(f"need 3 <= m <= n, got m={m}")
    cover = []
    for j in range(m):
        match = []
        for a in range(0, n - 1, 2):
            u, v = (j + a) % n, (j + a + 1) % n
            match.append((min(u, v), max(u, v)))
        cover.append(tuple(sorted(match)))
    return tuple(cover)


def chain_colorings(n: int, closed: bool) -> MatchingCover:
    """Two-colorings of even cycles and open chains, alternating along the chain."""
    g = chain(n, closed)
    if closed and n % 2:
        raise ValidationError("odd cycles have no two-coloring")
    a = tuple(e for e in g.edges if min(e) % 2 == 0 and e != (0, n - 1))
    b = tuple(e for e in g.edges if e not in a)
    return (a, b)


# ---------------------------------------------------------------- catalog


def chain(n: int, closed: bool = False) -> GraphSpec:
    if n < 2 or (closed and n < 3):
        raise ValidationError(f"chain too short: n={n}")
    edges = [(j, j + 1) for j in range(n - 1)]
    if closed:
        edges.append((0, n - 1))
    return GraphSpec(n, tuple(edges), name=f"chain-{'closed' if closed else 'open'}-{n}")


def star(n: int) -> GraphSpec:
    return GraphSpec(n, tuple((0, j) for j in range(1, n)), name=f"star-{n}")


def complete(n: int) -> GraphSpec:
    return GraphSpec(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)), name=f"complete-{n}")


def open_chain_variant(n: int, left_twice: int, right_twice: int) -> GraphSpec:
    """Open chain whose bulk spins are 1 and whose end spins are given as 2S."""
    g = chain(n)
    g = g.with_spins({0: SpinValue(left_twice), n - 1: SpinValue(right_twice)})
    return g


def triangular_patch(a: int, b: int) -> GraphSpec:
    idx = lambda i, j: i * b + j  # noqa: E731
    edges = []
    for i in range(a):
        for j in range(b):
            if i + 1 < a:
                edges.append((idx(i, j), idx(i + 1, j)))
            if j + 1 < b:
                edges.append((idx(i, j), idx(i, j + 1)))
            if i + 1 < a and j >= 1:
                edges.append((idx(i, j), idx(i + 1, j - 1)))
    return GraphSpec(a * b, tuple(edges), name=f"triangular-{a}x{b}")


def kagome_patch(a: int, b: int) -> GraphSpec:
    idx = lambda i, j, s: 3 * (i * b + j) + s  # noqa: E731
    edges = []
    for i in range(a):
        for j in range(b):
            edges += [(idx(i, j, 0), idx(i, j, 1)), (idx(i, j, 0), idx(i, j, 2)), (idx(i, j, 1), idx(i, j, 2))]
            if i + 1 < a:
                edges.append((idx(i, j, 1), idx(i + 1, j, 0)))
            if j + 1 < b:
                edges.append((idx(i, j, 2), idx(i, j + 1, 0)))
            if j + 1 < b and i >= 1:
                edges.append((idx(i, j, 2), idx(i - 1, j + 1, 1)))
    return GraphSpec(3 * a * b, tuple(edges), name=f"kagome-{a}x{b}")


def square_octagon_patch(a: int, b: int) -> GraphSpec:
    # sites of a unit cell: 0 left, 1 bottom, 2 right, 3 top
    idx = lambda i, j, s: 4 * (i * b + j) + s  # noqa: E731
    edges = []
    for i in range(a):
        for j in range(b):
            edges += [(idx(i, j, s), idx(i, j, (s + 1) % 4)) for s in range(4)]
            if i + 1 < a:
                edges.append((idx(i, j, 2), idx(i + 1, j, 0)))
            if j + 1 < b:
                edges.append((idx(i, j, 3), idx(i, j + 1, 1)))
    return GraphSpec(4 * a * b, tuple(edges), name=f"square-octagon-{a}x{b}")


# All 30 connected graphs on 2..5 vertices, in a fixed catalog order.
ATLAS: dict[int, tuple[int, tuple]] = {
    1: (2, ((0, 1),)),
    2: (3, ((0, 1), (0, 2))),
    3: (3, ((0, 1), (0, 2), (1, 2))),
    4: (4, ((0, 3), (1, 3), (2, 3))),
    5: (4, ((0, 1), (0, 3), (1, 2))),
    6: (4, ((0, 3), (1, 2), (1, 3), (2, 3))),
    7: (4, ((0, 1), (0, 3), (1, 2), (2, 3))),
    8: (4, ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3))),
    9: (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    10: (5, ((0, 4), (1, 4), (2, 4), (3, 4))),
    11: (5, ((0, 1), (0, 4), (1, 2), (2, 3))),
    12: (5, ((0, 4), (1, 3), (2, 3), (3, 4))),
    13: (5, ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))),
    14: (5, ((0, 4), (1, 4), (2, 3), (2, 4), (3, 4))),
    15: (5, ((0, 1), (0, 2), (0, 4), (1, 2), (2, 3))),
    16: (5, ((0, 1), (1, 3), (1, 4), (2, 3), (2, 4))),
    17: (5, ((0, 4), (1, 2), (1, 3), (2, 3), (3, 4))),
    18: (5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4))),
    19: (5, ((0, 1), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4))),
    20: (5, ((0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4))),
    21: (5, ((0, 1), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
    22: (5, ((0, 1), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4))),
    23: (5, ((0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
    24: (5, ((0, 1), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4))),
    25: (5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4))),
    26: (5, ((0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
    27: (5, ((0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4))),
    28: (5, ((0, 1), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
    29: (5, ((0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
    30: (5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
}


# A fixed optimal edge coloring for each atlas graph (classes listed as edges).
ATLAS_COLORINGS: dict[int, tuple] = {
    1: (((0, 1),),),
    2: (((0, 1),), ((0, 2),)),
    3: (((0, 1),), ((0, 2),), ((1, 2),)),
    4: (((0, 3),), ((1, 3),), ((2, 3),)),
    5: (((0, 1),), ((0, 3), (1, 2))),
    6: (((0, 3), (1, 2)), ((1, 3),), ((2, 3),)),
    7: (((0, 1), (2, 3)), ((0, 3), (1, 2))),
    8: (((0, 1), (2, 3)), ((0, 2),), ((0, 3), (1, 2))),
    9: (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))),
    10: (((0, 4),), ((1, 4),), ((2, 4),), ((3, 4),)),
    11: (((0, 1), (2, 3)), ((0, 4), (1, 2))),
    12: (((0, 4), (1, 3)), ((2, 3),), ((3, 4),)),
    13: (((0, 1), (3, 4)), ((0, 4), (1, 2)), ((2, 3),)),
    14: (((0, 4), (2, 3)), ((1, 4),), ((2, 4),), ((3, 4),)),
    15: (((0, 1), (2, 3)), ((0, 2),), ((0, 4), (1, 2))),
    16: (((0, 1),), ((1, 3), (2, 4)), ((1, 4), (2, 3))),
    17: (((0, 4), (2, 3)), ((1, 2), (3, 4)), ((1, 3),)),
    18: (((0, 2), (1, 4)), ((0, 3), (1, 2)), ((0, 4), (1, 3))),
    19: (((0, 1), (3, 4)), ((0, 3), (1, 2)), ((0, 4), (2, 3))),
    20: (((0, 1), (2, 3)), ((1, 2),), ((1, 3), (2, 4)), ((1, 4),)),
    21: (((0, 1), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))),
    22: (((0, 1), (2, 4)), ((0, 4), (2, 3)), ((1, 4),), ((3, 4),)),
    23: (((0, 3), (1, 4)), ((0, 4), (2, 3)), ((1, 3), (2, 4)), ((3, 4),)),
    24: (((0, 1), (3, 4)), ((0, 4), (1, 3)), ((1, 2),), ((1, 4), (2, 3))),
    25: (((0, 2), (1, 4)), ((0, 3),), ((0, 4), (1, 2)), ((1, 3), (2, 4))),
    26: (((0, 4), (1, 2)), ((1, 3), (2, 4)), ((1, 4), (2, 3)), ((3, 4),)),
    27: (((0, 1), (3, 4)), ((0, 3), (2, 4)), ((0, 4), (1, 2)), ((1, 4), (2, 3))),
    28: (((0, 1), (3, 4)), ((0, 3), (2, 4)), ((0, 4), (1, 3)), ((1, 4), (2, 3))),
    29: (((0, 1), (2, 3)), ((0, 3), (1, 4)), ((0, 4),), ((1, 2), (3, 4)), ((1, 3), (2, 4))),
    30: (((0, 1), (2, 4)), ((0, 2), (3, 4)), ((0, 3), (1, 2)), ((0, 4), (1, 3)), ((1, 4), (2, 3))),
}

def atlas(k: int) -> GraphSpec:
    if k not in ATLAS:
        raise ValidationError(f"atlas index must be in 1..30, got {k}")
    n, edges = ATLAS[k]
    return GraphSpec(n, edges, name=f"atlas-{k}")


_PATTERNS = [
    (re.compile(r"chain-open-(\d+)$"), lambda n: chain(n)),
    (re.compile(r"chain-closed-(\d+)$"), lambda n: chain(n, closed=True)),
    (re.compile(r"star-(\d+)$"), star),
    (re.compile(r"complete-(\d+)$"), complete),
    (re.compile(r"atlas-(\d+)$"), atlas),
    (re.compile(r"triangular-(\d+)x(\d+)$"), triangular_patch),
    (re.compile(r"kagome-(\d+)x(\d+)$"), kagome_patch),
    (re.compile(r"square-octagon-(\d+)x(\d+)$"), square_octagon_patch),
]


def catalog(name: str) -> GraphSpec:
    for pattern, build in _PATTERNS:
        hit = pattern.match(name)
        if hit:
            g = build(*(int(x) for x in hit.groups()))
            return GraphSpec(g.n, g.edges, g.spins, name)
    raise ValidationError(f"unknown catalog graph {name!r}")


def load_graph(source) -> GraphSpec:
    """Read a graph from a catalog name, a JSON file, or a plain "u v" edge-list file."""
    path = Path(str(source))
    if not path.exists():
        return catalog(str(source))
    text = path.read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        doc = None
    if doc is not None:
        return graph_from_json(doc)
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#")[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValidationError(f"{path}:{lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValidationError(f"{path}:{lineno}: vertex labels must be integers") from None
    if not edges:
        raise ValidationError(f"{path}: no edges")
    n = 1 + max(max(e) for e in edges)
    return GraphSpec(n, tuple(edges), name=path.stem)


def graph_from_json(doc) -> GraphSpec:
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ValidationError('graph JSON needs fields "n" and "edges"')
    try:
        n = int(doc["n"])
        edges = tuple((int(u), int(v)) for u, v in doc["edges"])
        spins = tuple((int(v), int(t)) for v, t in doc.get("spins", {}).items())
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bad graph JSON: {exc}") from None
    return GraphSpec(n, edges, spins, doc.get("name", ""))
