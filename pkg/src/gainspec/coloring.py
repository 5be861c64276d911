"""Exact vertex coloring and bipartition of the underlying graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import GainGraph
from .errors import SizeCapError

MAX_COLORING_N = 30


@dataclass(frozen=True)
class Coloring:
    chi: int
    classes: tuple[tuple[int, ...], ...]

    def color_of(self) -> list[int]:
        colors = [0] * sum(len(c) for c in self.classes)
        for k, cls in enumerate(self.classes):
            for v in cls:
                colors[v] = k
        return colors


def _canonical(colors: list[int]) -> tuple[tuple[int, ...], ...]:
    # relabel colors by first appearance in vertex order
    relabel: dict[int, int] = {}
    for c in colors:
        relabel.setdefault(c, len(relabel))
    classes: list[list[int]] = [[] for _ in relabel]
    for v, c in enumerate(colors):
        classes[relabel[c]].append(v)
    return tuple(tuple(cls) for cls in classes)


def _try_color(adj: list[set[int]], k: int) -> list[int] | None:
    """DSATUR-ordered backtracking for a proper k-coloring."""
    n = len(adj)
    colors = [-1] * n
    # count of colored neighbours per (vertex, color)
    nbr_count = [[0] * k for _ in range(n)]
    sat = [0] * n
    degree = [len(a) for a in adj]

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            cand = (sat[v], degree[v], -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    def assign(v: int, c: int, delta: int) -> None:
        for w in adj[v]:
            before = nbr_count[w][c]
            nbr_count[w][c] += delta
            if before == 0 and delta > 0:
                sat[w] += 1
            elif nbr_count[w][c] == 0 and delta < 0:
                sat[w] -= 1

    def solve(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        # symmetry breaking: at most one fresh color
        for c in range(min(used + 1, k)):
            if nbr_count[v][c]:
                continue
            colors[v] = c
            assign(v, c, 1)
            if solve(colored + 1, max(used, c + 1)):
                return True
            assign(v, c, -1)
            colors[v] = -1
        return False

    return colors if solve(0, 0) else None


def chromatic_number(g: GainGraph, force: bool = False) -> Coloring:
    """Minimum proper coloring, found by trying k = 1, 2, ... in turn."""
    if g.n > MAX_COLORING_N and not force:
        raise SizeCapError(
            f"exact coloring is capped at n = {MAX_COLORING_N} (got n = {g.n}); "
            "supply an upper bound for chi instead"
        )
    if g.n == 0:
        return Coloring(0, ())
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    lower = 2 if g.m else 1
    if g.m and _has_triangle(adj):
        lower = 3
    for k in range(lower, g.n + 1):
        colors = _try_color(adj, k)
        if colors is not None:
            return Coloring(k, _canonical(colors))
    raise AssertionError("n colors always suffice")


def _has_triangle(adj: list[set[int]]) -> bool:
    return any(adj[u] & adj[v] for u in range(len(adj)) for v in adj[u] if u < v)


def bipartition(g: GainGraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """2-coloring with the smallest vertex of each component in the first part."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    first = tuple(v for v in range(g.n) if side[v] == 0)
    second = tuple(v for v in range(g.n) if side[v] == 1)
    return first, second


def is_proper(g: GainGraph, classes) -> bool:
    where = {}
    for k, cls in enumerate(classes):
        for v in cls:
            if v in where:
                return False
            where[v] = k
    if sorted(where) != list(range(g.n)):
        return False
    return all(where[u] != where[v] for u, v, _ in g.edges)
