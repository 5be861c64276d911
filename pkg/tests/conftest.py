import sys

import numpy as np
import pytest

from gainspec.core import GainGraph


def k2(gain=1.0):
    return GainGraph(2, [(0, 1, gain)])


def triangle(g01=1.0, g02=1.0, g12=-1.0):
    return GainGraph(3, [(0, 1, g01), (0, 2, g02), (1, 2, g12)])


def complete(n, gain=1.0):
    return GainGraph(n, [(i, j, gain) for i in range(n) for j in range(i + 1, n)])


def path(n, gain=1.0):
    return GainGraph(n, [(i, i + 1, gain) for i in range(n - 1)])


def cycle(n, gains=None):
    gains = gains or [1.0] * n
    return GainGraph(n, [(i, (i + 1) % n, gains[i]) for i in range(n)])


def star(leaves):
    return GainGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def dense_laplacian(g):
    """Laplacian assembled independently of the library."""
    a = np.zeros((g.n, g.n), dtype=complex)
    for u, v, gain in g.edges:
        a[u, v] = gain
        a[v, u] = np.conj(gain)
    return np.diag(np.abs(a).sum(axis=1)) - a


def ref_eigs(g):
    return np.linalg.eigvalsh(dense_laplacian(g))


@pytest.fixture
def unbalanced_triangle():
    return triangle()


@pytest.fixture
def k3_minus():
    return complete(3, -1.0)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
