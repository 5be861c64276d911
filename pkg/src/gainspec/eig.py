"""Hermitian eigensolver and scaled matrix powers.

Eigenvalues come from a cyclic complex Jacobi iteration. Powers ``L**k`` are
formed by repeated squaring with the running product renormalized after
every multiplication, so the magnitude lives in a separate log scale and
``k`` in the hundreds does not overflow.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .core import HermitianMatrix, as_hermitian
from .errors import DimensionError, InvalidParameterError, SingularMatrixError

JACOBI_TOL = 1e-12
MAX_SWEEPS = 100
SINGULAR_PIVOT_TOL = 1e-10


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def lambda1(self) -> float:
        return self.values[0]

    @property
    def lambda_n(self) -> float:
        return self.values[-1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def _rotation(app: float, aqq: float, apq: complex) -> np.ndarray:
    """2x2 unitary R with ``R* [[app, apq], [conj(apq), aqq]] R`` diagonal."""
    r = abs(apq)
    phase = apq / r
    tau = (aqq - app) / (2.0 * r)
    if tau == 0.0:
        t = 1.0
    elif abs(tau) > 1e150:
        t = 0.5 / tau
    else:
        t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    ph = phase.conjugate()
    return np.array([[c, s], [-s * ph, c * ph]], dtype=np.complex128)


def jacobi_eigh(h, vectors: bool = True) -> tuple[np.ndarray, np.ndarray | None]:
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi sweeps.

    Returns ascending eigenvalues and, if requested, the matching unit
    eigenvectors as columns.
    """
    a = np.array(as_hermitian(h).entries, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128) if vectors else None
    norm = np.linalg.norm(a)
    if n == 0 or norm == 0.0:
        w = np.real(np.diag(a)).copy()
        order = np.argsort(w, kind="stable")
        return w[order], (v[:, order] if vectors else None)
    for _ in range(MAX_SWEEPS):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= JACOBI_TOL * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                rot = _rotation(a[p, p].real, a[q, q].real, apq)
                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.conj().T @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                if vectors:
                    v[:, idx] = v[:, idx] @ rot
    w = np.real(np.diag(a)).copy()
    order = np.argsort(w, kind="stable")
    return w[order], (v[:, order] if vectors else None)


def eigenvalues(h) -> Spectrum:
    w, _ = jacobi_eigh(h, vectors=False)
    return Spectrum(tuple(float(x) for x in w))


@dataclass(frozen=True)
class ScaledPower:
    """``matrix * exp(log_scale)``, with ``matrix`` kept near unit size."""

    matrix: np.ndarray
    log_scale: float

    def value(self) -> np.ndarray:
        return self.matrix * math.exp(self.log_scale)


def _renormalize(m: np.ndarray, log_scale: float) -> ScaledPower:
    m = 0.5 * (m + m.conj().T)
    mx = float(np.max(np.abs(m))) if m.size else 0.0
    if mx == 0.0:
        return ScaledPower(np.zeros_like(m), log_scale)
    return ScaledPower(m / mx, log_scale + math.log(mx))


def scaled_power(h, k: int) -> ScaledPower:
    """``H**k`` by binary repeated squaring with per-step renormalization."""
    _check_k(k)
    a = np.array(as_hermitian(h).entries, dtype=np.complex128)
    base = _renormalize(a, 0.0)
    result = None
    while k:
        if k & 1:
            if result is None:
                result = base
            else:
                result = _renormalize(result.matrix @ base.matrix, result.log_scale + base.log_scale)
        k >>= 1
        if k:
            base = _renormalize(base.matrix @ base.matrix, 2.0 * base.log_scale)
    return result


def _check_k(k) -> None:
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise InvalidParameterError(f"power k must be a positive integer, got {k!r}")


def _log_root(value: float, log_scale: float, k: int) -> float:
    if value <= 0.0:
        return 0.0
    return math.exp((math.log(value) + log_scale) / k)


def diag_power_bound(l, k: int) -> float:
    """``(max_i (L**k)_ii) ** (1/k)``, a lower bound on the largest eigenvalue."""
    _check_k(k)
    p = scaled_power(l, int(k))
    return _log_root(float(np.max(np.real(np.diag(p.matrix)))), p.log_scale, int(k))


def _trace_inner(m: np.ndarray, n: int) -> float:
    t1 = float(np.real(np.trace(m)))
    t2 = float(np.linalg.norm(m) ** 2)  # Tr(M^2) for Hermitian M
    spread = (n * t2 - t1 * t1) / (n * n * (n - 1))
    return t1 / n + math.sqrt(max(spread, 0.0))


def trace_power_bound(l, k: int) -> float:
    """Trace-moment lower bound on the largest eigenvalue from ``Tr L^k`` and ``Tr L^2k``."""
    _check_k(k)
    h = as_hermitian(l)
    if h.n < 2:
        raise DimensionError("trace bound needs n >= 2")
    p = scaled_power(h, int(k))
    return _log_root(_trace_inner(p.matrix, h.n), p.log_scale, int(k))


def _inverse(l) -> np.ndarray:
    a = np.array(as_hermitian(l).entries, dtype=np.complex128)
    n = a.shape[0]
    if n == 0:
        raise DimensionError("empty matrix")
    with warnings.catch_warnings():
        # singularity is reported below through our own pivot check
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(a, check_finite=False)
    scale = max(1.0, float(np.max(np.abs(a))))
    if float(np.min(np.abs(np.diag(lu)))) <= SINGULAR_PIVOT_TOL * scale:
        raise SingularMatrixError(
            "Laplacian is singular (graph is balanced); smallest eigenvalue is 0"
        )
    inv = scipy.linalg.lu_solve((lu, piv), np.eye(n, dtype=np.complex128), check_finite=False)
    return 0.5 * (inv + inv.conj().T)


def inverse_diag_power_bound(l, k: int) -> float:
    """``(max_i (L**-k)_ii) ** (-1/k)``, an upper estimate of the smallest eigenvalue."""
    _check_k(k)
    p = scaled_power(HermitianMatrix(_inverse(l), tol=1e-9), int(k))
    d = float(np.max(np.real(np.diag(p.matrix))))
    return math.exp(-(math.log(d) + p.log_scale) / k)


def power_bound_sequence(l, kmax: int, kind: str = "diag") -> list[float]:
    """Values of the diagonal or trace power bound for ``k = 1..kmax``.

    Builds ``L**k`` incrementally, which is cheaper than independent
    repeated squaring for each ``k`` when the whole range is needed.
    """
    _check_k(kmax)
    h = as_hermitian(l)
    if kind not in ("diag", "trace"):
        raise InvalidParameterError(f"unknown power bound kind {kind!r}")
    if kind == "trace" and h.n < 2:
        raise DimensionError("trace bound needs n >= 2")
    a = np.array(h.entries)
    base = _renormalize(a, 0.0)
    cur = base
    out = []
    for k in range(1, kmax + 1):
        if k > 1:
            cur = _renormalize(cur.matrix @ base.matrix, cur.log_scale + base.log_scale)
        if kind == "diag":
            val = float(np.max(np.real(np.diag(cur.matrix))))
        else:
            val = _trace_inner(cur.matrix, h.n)
        out.append(_log_root(val, cur.log_scale, k))
    return out
