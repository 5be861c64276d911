"""Exact frustration index and frustration number.

Both are found by scanning deletion sets in order of increasing size, so
the first balanced result is minimal. Within one size, sets are visited in
lexicographic order, which makes the returned witness the lexicographically
smallest minimum set. Sets that miss some already-discovered unbalanced
cycle cannot work and are skipped before the balance check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import GainGraph, find_unbalanced_cycle, neutral_tol
from .errors import InvalidParameterError, SizeCapError

MAX_INDEX_EDGES = 24
MAX_NUMBER_VERTICES = 16


@dataclass(frozen=True)
class FrustrationResult:
    value: int
    witness: tuple
    kind: str  # "edges" or "vertices"


class PotentialUnionFind:
    """Disjoint sets where each element carries a unit potential relative to its root.

    ``potential(v)`` is the switching value of ``v`` when its root is fixed
    to 1, so an edge ``u -> v`` with gain ``g`` is consistent iff
    ``conj(pot(u)) * g * pot(v) == 1``.
    """

    def __init__(self, n: int, tol: float):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.pot = [1.0 + 0.0j] * n
        self.tol = tol

    def find(self, v: int) -> tuple[int, complex]:
        path = []
        while self.parent[v] != v:
            path.append(v)
            v = self.parent[v]
        root = v
        # compress: potentials compose along the path, root side first
        acc = 1.0 + 0.0j
        for w in reversed(path):
            acc = acc * self.pot[w]
            self.pot[w] = acc
            self.parent[w] = root
        return root, (self.pot[path[0]] if path else 1.0 + 0.0j)

    def union(self, u: int, v: int, gain: complex) -> bool:
        """Merge along edge ``u -> v``; False if it closes a non-neutral cycle."""
        ru, pu = self.find(u)
        rv, pv = self.find(v)
        if ru == rv:
            return abs(pu.conjugate() * gain * pv - 1.0) <= self.tol
        # potential of rv relative to ru making the edge neutral
        z = gain.conjugate() * pu * pv.conjugate()
        z /= abs(z)
        if self.rank[ru] < self.rank[rv]:
            self.parent[ru] = rv
            self.pot[ru] = z.conjugate()
        else:
            self.parent[rv] = ru
            self.pot[rv] = z
            if self.rank[ru] == self.rank[rv]:
                self.rank[ru] += 1
        return True


def _edge_indices(g: GainGraph, edges: Iterable) -> set[int]:
    out = set()
    for e in edges:
        if isinstance(e, (tuple, list)):
            u, v = e[0], e[1]
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise InvalidParameterError(f"{{{u}, {v}}} is not an edge of the graph")
            out.add(g.edge_index(u, v))
        else:
            i = int(e)
            if not 0 <= i < g.m:
                raise InvalidParameterError(f"edge index {i} out of range (m = {g.m})")
            out.add(i)
    return out


def _balanced_without(g: GainGraph, removed: set[int], tol: float) -> bool:
    uf = PotentialUnionFind(g.n, tol)
    for i, (u, v, gain) in enumerate(g.edges):
        if i in removed:
            continue
        if not uf.union(u, v, gain):
            return False
    return True


def balance_oracle(g: GainGraph, removed_edges: Iterable = ()) -> bool:
    """True iff ``g`` minus ``removed_edges`` is balanced.

    Edges may be given as canonical indices or as vertex pairs.
    """
    return _balanced_without(g, _edge_indices(g, removed_edges), neutral_tol())


def _cycle_edge_mask(g: GainGraph, cycle: list[int]) -> int:
    mask = 0
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        mask |= 1 << g.edge_index(a, b)
    return mask


def _cycle_vertex_mask(cycle: list[int]) -> int:
    mask = 0
    for v in cycle:
        mask |= 1 << v
    return mask


def frustration_index(g: GainGraph, force: bool = False) -> FrustrationResult:
    """Minimum number of edges whose deletion leaves a balanced graph."""
    if g.m > MAX_INDEX_EDGES and not force:
        raise SizeCapError(
            f"exact frustration index is capped at m = {MAX_INDEX_EDGES} (got m = {g.m}); "
            "the smallest Laplacian eigenvalue is a certified lower bound"
        )
    tol = neutral_tol()
    cycle = find_unbalanced_cycle(g, tol)
    if cycle is None:
        return FrustrationResult(0, (), "edges")
    known = [_cycle_edge_mask(g, cycle)]
    for t in range(1, g.m + 1):
        for combo in combinations(range(g.m), t):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if not all(mask & c for c in known):
                continue
            removed = set(combo)
            if _balanced_without(g, removed, tol):
                witness = tuple((g.edges[i][0], g.edges[i][1]) for i in combo)
                return FrustrationResult(t, witness, "edges")
            cycle = find_unbalanced_cycle(g.without_edges(removed), tol)
            # indices shift after deletion; map the cycle back through vertex pairs
            known.append(_cycle_edge_mask(g, cycle))
    raise AssertionError("deleting every edge always balances")


def frustration_number(g: GainGraph, force: bool = False) -> FrustrationResult:
    """Minimum number of vertices whose deletion leaves a balanced graph."""
    if g.n > MAX_NUMBER_VERTICES and not force:
        raise SizeCapError(
            f"exact frustration number is capped at n = {MAX_NUMBER_VERTICES} (got n = {g.n}); "
            "the smallest Laplacian eigenvalue is a certified lower bound"
        )
    tol = neutral_tol()
    cycle = find_unbalanced_cycle(g, tol)
    if cycle is None:
        return FrustrationResult(0, (), "vertices")
    known = [_cycle_vertex_mask(cycle)]
    for t in range(1, g.n + 1):
        for combo in combinations(range(g.n), t):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if not all(mask & c for c in known):
                continue
            reduced = g.without_vertices(combo)
            cycle = find_unbalanced_cycle(reduced, tol)
            if cycle is None:
                return FrustrationResult(t, tuple(combo), "vertices")
            known.append(_cycle_vertex_mask(cycle))
    raise AssertionError("deleting every vertex always balances")
