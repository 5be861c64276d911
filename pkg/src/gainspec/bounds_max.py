"""Upper bounds on the largest gain Laplacian eigenvalue.

All of these depend only on the underlying graph. The generalized degree
bounds come from Gershgorin discs of ``C^{-1} L C`` for a positive diagonal
``C`` built by a per-vertex recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import GainGraph
from .errors import (
    DisconnectedGraphError,
    EmptyGraphError,
    InvalidParameterError,
    RecurrenceBreakdownError,
)

DEFAULT_R = 0.99
DEFAULT_KMAX = 100
KINDS = ("M", "N", "L")


@dataclass(frozen=True)
class DegreeProfile:
    d: np.ndarray
    m2: np.ndarray  # average neighbour degree; nan at isolated vertices


@dataclass(frozen=True)
class GeneralizedDegrees:
    kind: str
    k: int
    values: np.ndarray
    r: float | None = None


def degree_profile(g: GainGraph) -> DegreeProfile:
    d = g.degrees.astype(float)
    nbr_sum = _neighbor_sum(g, d)
    with np.errstate(invalid="ignore", divide="ignore"):
        m2 = np.where(d > 0, nbr_sum / np.where(d > 0, d, 1.0), np.nan)
    return DegreeProfile(d=d, m2=m2)


def _neighbor_sum(g: GainGraph, x: np.ndarray) -> np.ndarray:
    out = np.zeros(g.n)
    for u, v, _ in g.edges:
        out[u] += x[v]
        out[v] += x[u]
    return out


def _check_connected(g: GainGraph) -> None:
    if g.m == 0:
        raise EmptyGraphError("bound needs at least one edge")
    if not g.is_connected():
        raise DisconnectedGraphError("bound requires a connected graph")


def classic_max_bounds(g: GainGraph) -> tuple[float, float, float, float]:
    """2*Delta, max d_i + m_i, max over edges d_i + d_j, and the edge-averaged ratio bound."""
    if g.m == 0:
        raise EmptyGraphError("bound needs at least one edge")
    prof = degree_profile(g)
    d, m2 = prof.d, prof.m2
    c1 = 2.0 * d.max()
    c2 = float(np.nanmax(d + m2))
    c3 = max(d[u] + d[v] for u, v, _ in g.edges)
    c4 = max(
        (d[u] * (d[u] + m2[u]) + d[v] * (d[v] + m2[v])) / (d[u] + d[v]) for u, v, _ in g.edges
    )
    return float(c1), c2, float(c3), float(c4)


def gershgorin_diag_bound(g: GainGraph, c: Sequence[complex]) -> float:
    """``max_i d_i + sum_{j ~ i} |c_j| / |c_i|`` for a nonsingular diagonal ``c``."""
    _check_connected(g)
    c = np.abs(np.asarray(c, dtype=np.complex128))
    if c.shape != (g.n,):
        raise InvalidParameterError(f"diagonal of length {g.n} expected, got shape {c.shape}")
    if np.any(c == 0.0):
        raise InvalidParameterError("diagonal entries must be nonzero")
    return float(np.max(g.degrees + _neighbor_sum(g, c) / c))


def _check_r(r) -> float:
    if r is None:
        return DEFAULT_R
    r = float(r)
    if not 0.0 < r < 1.0:
        raise InvalidParameterError(f"r must lie in (0, 1), got {r}")
    return r


def generalized_degrees(g: GainGraph, kind: str, k: int, r: float | None = None) -> GeneralizedDegrees:
    """Iterate the M, N(r) or L recurrence ``k`` times."""
    _check_connected(g)
    if kind not in KINDS:
        raise InvalidParameterError(f"kind must be one of {KINDS}, got {kind!r}")
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k!r}")
    r = _check_r(r) if kind == "N" else None
    for step, vals in enumerate(_iterate(g, kind, r), start=1):
        if step == k:
            return GeneralizedDegrees(kind, int(k), vals, r)
    raise AssertionError("unreachable")


def _iterate(g: GainGraph, kind: str, r: float | None):
    """Yield the per-vertex values for k = 1, 2, ... indefinitely.

    Raises RecurrenceBreakdownError at the first k whose scaling vector is
    not strictly positive.
    """
    d = g.degrees.astype(float)
    prev = np.zeros(g.n)
    prev2 = np.zeros(g.n)
    k = 0
    while True:
        k += 1
        if kind == "L" and k == 1:
            cur = _neighbor_sum(g, d) / d
        else:
            if kind == "M":
                scale = d + prev
            elif kind == "N":
                scale = d + prev - r
            else:
                scale = d + prev - prev2
            if np.any(scale <= 0.0):
                raise RecurrenceBreakdownError(
                    f"{kind} recurrence breaks down at k = {k}: nonpositive scaling entry"
                )
            cur = _neighbor_sum(g, scale) / scale
        yield cur
        prev2, prev = prev, cur


def generalized_degree_bound(g: GainGraph, kind: str, k: int, r: float | None = None) -> float:
    vals = generalized_degrees(g, kind, k, r).values
    return float(np.max(g.degrees + vals))


def scan_k_min_bound(
    g: GainGraph, kind: str, r: float | None = None, kmax: int = DEFAULT_KMAX
) -> tuple[int, float]:
    """Smallest generalized degree bound over ``k = 1..kmax`` and the ``k`` attaining it.

    Ties keep the smallest ``k``. A recurrence breakdown ends the scan; if it
    happens at ``k = 1`` no bound is available.
    """
    _check_connected(g)
    if kind not in KINDS:
        raise InvalidParameterError(f"kind must be one of {KINDS}, got {kind!r}")
    if isinstance(kmax, bool) or int(kmax) != kmax or kmax < 1:
        raise InvalidParameterError(f"kmax must be a positive integer, got {kmax!r}")
    r = _check_r(r) if kind == "N" else None
    best_k, best = 0, float("inf")
    d = g.degrees
    it = _iterate(g, kind, r)
    for k in range(1, int(kmax) + 1):
        try:
            vals = next(it)
        except RecurrenceBreakdownError:
            # every later k depends on the broken scaling vector
            break
        val = float(np.max(d + vals))
        if val < best:
            best_k, best = k, val
    if best_k == 0:
        raise RecurrenceBreakdownError(f"{kind} recurrence has no valid k in 1..{kmax}")
    return best_k, best
