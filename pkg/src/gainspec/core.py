"""Complex unit gain graphs and their Hermitian matrices."""

from __future__ import annotations

import cmath
import math
import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionError,
    EmptyGraphError,
    InvalidCycleError,
    InvalidGraphError,
    NotHermitianError,
)

UNIT_TOL = 1e-9
NORMALIZE_TOL = 1e-6
HERMITIAN_TOL = 1e-12
DEFAULT_NEUTRAL_TOL = 1e-9


def neutral_tol() -> float:
    """Tolerance for declaring a cycle gain equal to 1.

    ``GAINSPEC_TOL`` in the environment overrides the default.
    """
    raw = os.environ.get("GAINSPEC_TOL")
    if raw is None or raw.strip() == "":
        return DEFAULT_NEUTRAL_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise InvalidGraphError(f"GAINSPEC_TOL is not a number: {raw!r}") from None
    if not tol > 0:
        raise InvalidGraphError(f"GAINSPEC_TOL must be positive, got {tol}")
    return tol


def normalize_gain(gain: complex) -> complex:
    """Project ``gain`` onto the unit circle; reject values far from it."""
    gain = complex(gain)
    mod = abs(gain)
    if not math.isfinite(mod) or abs(mod - 1.0) > NORMALIZE_TOL:
        raise InvalidGraphError(f"gain {gain} is not of unit modulus (|g| = {mod})")
    if mod == 1.0:
        return gain
    return gain / mod


class GainGraph:
    """Simple undirected graph with a unit complex gain on every edge.

    Each edge is stored once, oriented from the smaller to the larger
    vertex index. The gain of the opposite orientation is the conjugate.
    Instances are immutable.
    """

    __slots__ = ("_n", "_edges", "_index", "_adj", "_degrees")

    def __init__(self, n: int, edges: Iterable[tuple] = ()):
        if int(n) != n or n < 0:
            raise InvalidGraphError(f"vertex count must be a nonnegative integer, got {n!r}")
        n = int(n)
        canon = {}
        for item in edges:
            if len(item) == 2:
                u, v = item
                gain = 1.0
            else:
                u, v, gain = item
            if int(u) != u or int(v) != v:
                raise InvalidGraphError(f"vertex indices must be integers: ({u!r}, {v!r})")
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge ({u}, {v}) out of range for n = {n}")
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            gain = normalize_gain(gain)
            if u > v:
                u, v, gain = v, u, gain.conjugate()
            if (u, v) in canon:
                raise InvalidGraphError(f"duplicate edge {{{u}, {v}}}")
            canon[(u, v)] = gain
        self._n = n
        self._edges = tuple((u, v, canon[(u, v)]) for u, v in sorted(canon))
        self._index = {(u, v): i for i, (u, v, _) in enumerate(self._edges)}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v, _ in self._edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._degrees = np.array([len(a) for a in adj], dtype=np.int64)
        self._degrees.setflags(write=False)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int, complex], ...]:
        """Canonical edges ``(u, v, gain)`` with ``u < v``, sorted."""
        return self._edges

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._index

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self._index[(u, v)]
        except KeyError:
            raise InvalidCycleError(f"{{{u}, {v}}} is not an edge") from None

    def gain(self, u: int, v: int) -> complex:
        """Gain of the orientation ``u -> v``."""
        if u < v:
            key = (u, v)
        else:
            key = (v, u)
        i = self._index.get(key)
        if i is None:
            raise InvalidCycleError(f"{{{u}, {v}}} is not an edge")
        g = self._edges[i][2]
        return g if u < v else g.conjugate()

    def components(self) -> list[list[int]]:
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self._n > 0 and len(self.components()) == 1

    def with_gains(self, gains: Sequence[complex]) -> GainGraph:
        """Same underlying graph, new gains given in canonical edge order."""
        if len(gains) != self.m:
            raise DimensionError(f"expected {self.m} gains, got {len(gains)}")
        return GainGraph(self._n, [(u, v, g) for (u, v, _), g in zip(self._edges, gains)])

    def without_edges(self, indices: Iterable[int]) -> GainGraph:
        drop = set(indices)
        return GainGraph(self._n, [e for i, e in enumerate(self._edges) if i not in drop])

    def without_vertices(self, vertices: Iterable[int]) -> GainGraph:
        """Delete the given vertices' edges; the vertices stay as isolated points."""
        drop = set(vertices)
        return GainGraph(
            self._n, [e for e in self._edges if e[0] not in drop and e[1] not in drop]
        )

    def underlying(self, gain: complex = 1.0) -> GainGraph:
        """Underlying graph with every canonical gain replaced by ``gain``."""
        return self.with_gains([gain] * self.m)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GainGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"GainGraph(n={self._n}, m={self.m})"


class HermitianMatrix:
    """Dense complex matrix checked for conjugate symmetry on construction."""

    __slots__ = ("_a",)

    def __init__(self, entries, tol: float = HERMITIAN_TOL):
        a = np.array(entries, dtype=np.complex128)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionError(f"expected a square matrix, got shape {a.shape}")
        if a.size and not np.all(np.isfinite(a)):
            raise NotHermitianError("matrix has non-finite entries")
        if a.size:
            dev = np.max(np.abs(a - a.conj().T))
            if dev > tol * max(1.0, float(np.max(np.abs(a)))):
                raise NotHermitianError(f"matrix is not Hermitian (max |H - H*| = {dev:.3g})")
        a.setflags(write=False)
        self._a = a

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._a

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._a.copy()
        return self._a.astype(dtype)

    def __getitem__(self, key):
        return self._a[key]

    def __repr__(self) -> str:
        return f"HermitianMatrix(n={self.n})"


def as_hermitian(h) -> HermitianMatrix:
    return h if isinstance(h, HermitianMatrix) else HermitianMatrix(h)


@dataclass(frozen=True)
class SwitchingFunction:
    values: tuple[complex, ...]

    def __init__(self, values: Iterable[complex]):
        vals = tuple(complex(z) for z in values)
        for z in vals:
            if abs(abs(z) - 1.0) > UNIT_TOL:
                raise InvalidGraphError(f"switching value {z} is not of unit modulus")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def matrix(self) -> np.ndarray:
        return np.diag(np.array(self.values, dtype=np.complex128))


@dataclass(frozen=True)
class GainStats:
    """Edge-averaged gain deviations ``a`` (real part) and ``b`` (imaginary part)."""

    a: float
    b: float
    m: int

    def a_theta(self, theta: float) -> float:
        return 1.0 + math.cos(theta) * (self.a - 1.0) - math.sin(theta) * (self.b - 1.0)


def adjacency_matrix(g: GainGraph) -> HermitianMatrix:
    a = np.zeros((g.n, g.n), dtype=np.complex128)
    for u, v, gain in g.edges:
        a[u, v] = gain
        a[v, u] = gain.conjugate()
    return HermitianMatrix(a)


def laplacian(g: GainGraph) -> HermitianMatrix:
    a = -np.asarray(adjacency_matrix(g))
    a[np.diag_indices(g.n)] = g.degrees
    return HermitianMatrix(a)


def signless_laplacian(g: GainGraph) -> HermitianMatrix:
    """Laplacian of the same graph with every gain equal to -1."""
    return laplacian(g.underlying(-1.0))


def quadratic_form(g: GainGraph, x) -> float:
    """Sum over edges of ``|x_u - a_uv x_v|^2``; equals ``x* L x``."""
    x = np.asarray(x, dtype=np.complex128)
    if x.shape != (g.n,):
        raise DimensionError(f"vector of length {g.n} expected, got shape {x.shape}")
    if g.m == 0:
        return 0.0
    u = np.array([e[0] for e in g.edges])
    v = np.array([e[1] for e in g.edges])
    gains = np.array([e[2] for e in g.edges])
    return float(np.sum(np.abs(x[u] - gains * x[v]) ** 2))


def switch(g: GainGraph, zeta: SwitchingFunction | Sequence[complex]) -> GainGraph:
    if not isinstance(zeta, SwitchingFunction):
        zeta = SwitchingFunction(zeta)
    if len(zeta) != g.n:
        raise DimensionError(f"switching function of length {g.n} expected, got {len(zeta)}")
    z = zeta.values
    return GainGraph(g.n, [(u, v, z[u].conjugate() * gain * z[v]) for u, v, gain in g.edges])


def cycle_gain(g: GainGraph, cycle: Sequence[int]) -> complex:
    """Product of gains along ``cycle``.

    The cycle may be given closed (first vertex repeated at the end) or open.
    """
    seq = list(cycle)
    if len(seq) >= 2 and seq[0] == seq[-1]:
        seq = seq[:-1]
    if len(seq) < 3:
        raise InvalidCycleError("a cycle needs at least three distinct vertices")
    if len(set(seq)) != len(seq):
        raise InvalidCycleError(f"cycle repeats a vertex: {list(cycle)}")
    prod = 1.0 + 0.0j
    for a, b in zip(seq, seq[1:] + seq[:1]):
        if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
            raise InvalidCycleError(f"{{{a}, {b}}} is not an edge")
        prod *= g.gain(a, b)
    return prod


def is_balanced(g: GainGraph, tol: float | None = None) -> tuple[bool, SwitchingFunction | None]:
    """Check balance by spanning-forest potentials.

    Returns ``(True, zeta)`` where ``switch(g, zeta)`` has all gains 1, or
    ``(False, None)``.
    """
    tol = neutral_tol() if tol is None else tol
    zeta = _potentials(g)
    for u, v, gain in g.edges:
        # fundamental cycle gain of edge uv relative to the forest
        if abs(zeta[u].conjugate() * gain * zeta[v] - 1.0) > tol:
            return False, None
    return True, SwitchingFunction(zeta)


def _potentials(g: GainGraph) -> list[complex]:
    zeta: list[complex | None] = [None] * g.n
    for root in range(g.n):
        if zeta[root] is not None:
            continue
        zeta[root] = 1.0 + 0.0j
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if zeta[w] is None:
                    z = g.gain(u, w).conjugate() * zeta[u]
                    zeta[w] = z / abs(z)
                    queue.append(w)
    return zeta  # type: ignore[return-value]


def find_unbalanced_cycle(g: GainGraph, tol: float | None = None) -> list[int] | None:
    """Vertex sequence of some non-neutral cycle, or None when balanced.

    The cycle is the fundamental cycle of the first offending non-tree edge
    with respect to a BFS spanning forest.
    """
    tol = neutral_tol() if tol is None else tol
    parent = [-1] * g.n
    depth = [0] * g.n
    zeta: list[complex | None] = [None] * g.n
    for root in range(g.n):
        if zeta[root] is not None:
            continue
        zeta[root] = 1.0 + 0.0j
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if zeta[w] is None:
                    z = g.gain(u, w).conjugate() * zeta[u]
                    zeta[w] = z / abs(z)
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
    for u, v, gain in g.edges:
        if abs(zeta[u].conjugate() * gain * zeta[v] - 1.0) <= tol:
            continue
        left, right = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
            left.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            right.append(b)
        while a != b:
            a, b = parent[a], parent[b]
            left.append(a)
            right.append(b)
        # left: u .. lca, right: v .. lca
        return left + right[-2::-1]
    return None


def a_theta(g: GainGraph, theta: float) -> float:
    """Mean over canonical edges of ``1 - Re(a_uv e^{i theta})``."""
    if g.m == 0:
        raise EmptyGraphError("gain statistics need at least one edge")
    rot = cmath.exp(1j * theta)
    gains = np.array([e[2] for e in g.edges])
    return float(np.mean(1.0 - (gains * rot).real))


def gain_stats(g: GainGraph) -> GainStats:
    if g.m == 0:
        raise EmptyGraphError("gain statistics need at least one edge")
    gains = np.array([e[2] for e in g.edges])
    return GainStats(
        a=float(np.mean(1.0 - gains.real)),
        b=float(np.mean(1.0 - gains.imag)),
        m=g.m,
    )
