"""Deterministic instance generation.

All randomness comes from SplitMix64 so that a (function, arguments, seed)
triple names the same graph on every platform.
"""

from __future__ import annotations

import cmath
import math

from .core import GainGraph
from .errors import InvalidParameterError

_MASK = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator with 53-bit uniform doubles in [0, 1)."""

    def __init__(self, seed: int):
        self.state = int(seed) & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randint(self, lo: int, hi: int) -> int:
        """Integer in ``[lo, hi]`` (inclusive) by scaling a uniform."""
        return lo + min(int(self.uniform() * (hi - lo + 1)), hi - lo)


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError(f"edge probability must lie in [0, 1], got {p}")
    return p


def erdos_renyi(n: int, p: float, seed: int) -> GainGraph:
    """G(n, p) with all gains 1; pairs visited in lexicographic order."""
    p = _check_p(p)
    if n < 1:
        raise InvalidParameterError(f"n must be at least 1, got {n}")
    rng = SplitMix64(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.uniform() < p]
    return GainGraph(n, edges)


def bipartite_erdos_renyi(n1: int, n2: int, p: float, seed: int) -> GainGraph:
    """Random bipartite graph on parts ``0..n1-1`` and ``n1..n1+n2-1``."""
    p = _check_p(p)
    if n1 < 1 or n2 < 1:
        raise InvalidParameterError(f"part sizes must be positive, got ({n1}, {n2})")
    rng = SplitMix64(seed)
    edges = [(i, n1 + j) for i in range(n1) for j in range(n2) if rng.uniform() < p]
    return GainGraph(n1 + n2, edges)


def random_unit_gains(g: GainGraph, seed: int) -> GainGraph:
    """Replace every canonical gain by ``exp(2 pi i u)`` with ``u`` uniform."""
    rng = SplitMix64(seed)
    return g.with_gains([cmath.exp(2j * math.pi * rng.uniform()) for _ in range(g.m)])


def random_gain_graph(seed: int, n_range=(4, 10), p_range=(0.3, 0.8)) -> GainGraph:
    """Random-size G(n, p) with random unit gains, all drawn from one seed.

    ``n`` and ``p`` come from the first two draws of ``SplitMix64(seed)``;
    the graph and gains use seeds derived from the third and fourth.
    """
    rng = SplitMix64(seed)
    n = rng.randint(*n_range)
    p = p_range[0] + (p_range[1] - p_range[0]) * rng.uniform()
    g = erdos_renyi(n, p, rng.next_u64())
    return random_unit_gains(g, rng.next_u64())


_K5_15_SIGNS = (
    "+-++++----+++++",
    "++-+++-+++---++",
    "+++-+++-++-++--",
    "++++-+++-++-+-+",
    "+++++-+++-++-+-",
)


def signed_k5_15() -> GainGraph:
    """The signed complete bipartite graph K(5, 15) with 23 negative edges.

    Vertices 0..4 form the small part and 5..19 the large part.
    """
    edges = []
    for i, row in enumerate(_K5_15_SIGNS):
        for j, sign in enumerate(row):
            edges.append((i, 5 + j, 1.0 if sign == "+" else -1.0))
    return GainGraph(20, edges)


NAMED = {"k5_15": signed_k5_15}
