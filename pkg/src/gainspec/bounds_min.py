"""Upper bounds on the smallest gain Laplacian eigenvalue.

Every bound here is the Rayleigh quotient of some explicit test vector
(or the closed-form minimum over a family of them), so each one holds for
any unit gain graph meeting the stated hypotheses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import coloring, eig, frustration
from .core import GainGraph, a_theta, cycle_gain, gain_stats, laplacian
from .errors import (
    BipartitionError,
    DisconnectedGraphError,
    EmptyGraphError,
    InvalidParameterError,
    NoPathTripleError,
    NoTriangleError,
)

A_THETA_ONE_TOL = 1e-12
SOUNDNESS_SLACK = 1e-8


@dataclass(frozen=True)
class TriangleTriple:
    s: int
    t: int
    r: int
    cos_theta: float


@dataclass(frozen=True)
class PathTriple:
    """Induced path ``t - s - r`` centred at ``s``."""

    s: int
    t: int
    r: int


def _check_nonempty(g: GainGraph) -> None:
    if g.m == 0:
        raise EmptyGraphError("bound needs at least one edge")


def _check_chi(chi) -> int:
    if int(chi) != chi or chi < 1:
        raise InvalidParameterError(f"chromatic number must be a positive integer, got {chi!r}")
    return int(chi)


def _check_connected(g: GainGraph) -> None:
    _check_nonempty(g)
    if not g.is_connected():
        raise DisconnectedGraphError("bound requires a connected graph")


def chromatic_gamma_theta_bound(g: GainGraph, chi: int, gamma: float, theta: float) -> float:
    """Two-level test vector bound, one color class against the rest.

    ``chi`` must be at least the chromatic number of the underlying graph.
    """
    _check_nonempty(g)
    chi = _check_chi(chi)
    denom = chi + gamma * gamma - 1.0
    if denom <= 0.0:
        # only chi = 1 with gamma = 0; the graph then has no edges
        raise InvalidParameterError("degenerate parameters: chi + gamma^2 - 1 = 0")
    st = gain_stats(g)
    at = a_theta(g, theta)
    num = (st.a - 1.0) * (gamma * gamma + 1.0) - 2.0 * gamma * (at - 1.0)
    return 2.0 * g.m / g.n * (st.a - num / denom)


def chromatic_optimal_real_bound(g: GainGraph, chi: int) -> float:
    """Minimum over gamma of the chromatic bound at theta = 0."""
    _check_nonempty(g)
    chi = _check_chi(chi)
    a = gain_stats(g).a
    scale = 2.0 * g.m / g.n
    if a <= 1.0:
        return scale * a
    if chi < 2:
        raise InvalidParameterError("chromatic number of a graph with edges is at least 2")
    return scale * (1.0 - (a - 1.0) / (chi - 1))


def chromatic_optimal_complex_bound(g: GainGraph, chi: int) -> float:
    """Minimum of the chromatic bound jointly over gamma and theta."""
    _check_nonempty(g)
    chi = _check_chi(chi)
    if chi < 2:
        raise InvalidParameterError("chromatic number of a graph with edges is at least 2")
    st = gain_stats(g)
    da, db = st.a - 1.0, st.b - 1.0
    root = math.sqrt(chi * chi * da * da + 4.0 * (chi - 1) * db * db)
    return g.m / g.n * (st.a + 1.0 - da / (chi - 1) - root / (chi - 1))


def _parts(g: GainGraph, parts) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if parts is None:
        parts = coloring.bipartition(g)
        if parts is None:
            raise BipartitionError("underlying graph is not bipartite")
    v1, v2 = (tuple(sorted(p)) for p in parts)
    s1, s2 = set(v1), set(v2)
    if not v1 or not v2 or s1 & s2 or s1 | s2 != set(range(g.n)):
        raise BipartitionError("parts must be nonempty and partition the vertex set")
    for u, v, _ in g.edges:
        if (u in s1) == (v in s1):
            raise BipartitionError(f"edge {{{u}, {v}}} lies inside one part")
    return v1, v2


def bipartite_gamma_bound(
    g: GainGraph, parts: Sequence[Sequence[int]] | None, gamma: float, theta: float
) -> float:
    """Bound from the vector equal to ``gamma`` on the first part and ``e^{i theta}`` on the second."""
    _check_nonempty(g)
    v1, v2 = _parts(g, parts)
    n1, n2 = len(v1), len(v2)
    at = a_theta(g, theta)
    return g.m / n1 * ((gamma - 1.0) ** 2 + 2.0 * gamma * at) / (gamma * gamma + n2 / n1)


def _bipartite_closed_form(m: int, n1: int, n2: int, at: float) -> float:
    if abs(at - 1.0) <= A_THETA_ONE_TOL:
        return m / n2
    n = n1 + n2
    disc = n * n - 4.0 * at * (2.0 - at) * n1 * n2
    return m / 2.0 * (n - math.sqrt(max(disc, 0.0))) / (n1 * n2)


def bipartite_optimal_bound(
    g: GainGraph, parts: Sequence[Sequence[int]] | None = None, theta: float = 0.0
) -> float:
    """Optimum over gamma of the bipartite bound, minimized over both part orders."""
    _check_nonempty(g)
    v1, v2 = _parts(g, parts)
    at = a_theta(g, theta)
    return min(
        _bipartite_closed_form(g.m, len(v1), len(v2), at),
        _bipartite_closed_form(g.m, len(v2), len(v1), at),
    )


def degree_pair_bounds(g: GainGraph) -> tuple[float, float, float]:
    """Bounds from test vectors supported on a single edge."""
    _check_connected(g)
    d = g.degrees
    b1 = min((d[u] + d[v] - 2) / 2.0 for u, v, _ in g.edges)
    b2 = min(
        (d[u] + d[v] - math.sqrt((d[u] - d[v]) ** 2 + 4.0)) / 2.0 for u, v, _ in g.edges
    )
    delta, n = int(d.min()), g.n
    b3 = (delta + n - 1 - math.sqrt((n - 1 - delta) ** 2 + 4.0)) / 2.0
    return float(b1), float(b2), float(b3)


def triangles(g: GainGraph) -> list[TriangleTriple]:
    out = []
    for s in range(g.n):
        for t in g.neighbors(s):
            if t <= s:
                continue
            for r in g.neighbors(t):
                if r <= t or not g.has_edge(s, r):
                    continue
                cos = cycle_gain(g, (s, t, r)).real
                out.append(TriangleTriple(s, t, r, max(-1.0, min(1.0, cos))))
    return out


def path_triples(g: GainGraph) -> list[PathTriple]:
    out = []
    for s in range(g.n):
        nb = g.neighbors(s)
        for i, t in enumerate(nb):
            for r in nb[i + 1:]:
                if not g.has_edge(t, r):
                    out.append(PathTriple(s, t, r))
    return out


def _three_vertex_forms(ds: float, dt: float, dr: float, c: float) -> tuple[float, float, float, float]:
    """Closed-form minima of the three-vertex Rayleigh quotient.

    The quotient is ``ds a^2 + dt b^2 + dr c^2 - 2ab - 2ac - 2 cos bc`` on
    the unit sphere, restricted to a = b = c, a = b, a = c and b = c.
    """
    f1 = (ds + dt + dr - 2.0 * c - 4.0) / 3.0
    beta = c + 1.0
    alpha2 = ds + dt - 2.0 * dr - 2.0
    f2 = (ds + dt + 2.0 * dr - 2.0 - math.sqrt(alpha2 * alpha2 + 8.0 * beta * beta)) / 4.0
    alpha3 = ds + dr - 2.0 * dt - 2.0
    f3 = (ds + 2.0 * dt + dr - 2.0 - math.sqrt(alpha3 * alpha3 + 8.0 * beta * beta)) / 4.0
    alpha4 = dt + dr - 2.0 * ds - 2.0 * c
    f4 = (2.0 * ds + dt + dr - 2.0 * c - math.sqrt(alpha4 * alpha4 + 32.0)) / 4.0
    return f1, f2, f3, f4


def triangle_bounds(g: GainGraph) -> tuple[float, float, float, float]:
    """Four bounds minimized over triangles ``s < t < r``."""
    _check_connected(g)
    tris = triangles(g)
    if not tris:
        raise NoTriangleError("graph has no triangles; use path_bounds")
    d = g.degrees
    vals = [_three_vertex_forms(d[x.s], d[x.t], d[x.r], x.cos_theta) for x in tris]
    return tuple(float(min(v[i] for v in vals)) for i in range(4))  # type: ignore[return-value]


def path_bounds(g: GainGraph) -> tuple[float, float, float, float]:
    """The triangle bounds with cos = 0, minimized over induced paths ``t - s - r`` (t < r)."""
    _check_connected(g)
    paths = path_triples(g)
    if not paths:
        raise NoPathTripleError("graph has no induced path on three vertices")
    d = g.degrees
    vals = [_three_vertex_forms(d[x.s], d[x.t], d[x.r], 0.0) for x in paths]
    return tuple(float(min(v[i] for v in vals)) for i in range(4))  # type: ignore[return-value]


def algebraic_frustration_check(g: GainGraph, force: bool = False) -> tuple[float, int, int, bool]:
    """Smallest eigenvalue against the exact frustration number and index."""
    lam1 = eig.eigenvalues(laplacian(g)).lambda1 if g.n else 0.0
    nu = frustration.frustration_number(g, force=force).value
    eps = frustration.frustration_index(g, force=force).value
    ok = lam1 <= nu + SOUNDNESS_SLACK and lam1 <= eps + SOUNDNESS_SLACK and nu <= eps
    return lam1, nu, eps, ok
