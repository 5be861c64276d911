"""Bound comparison tables and their text renderings."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field, replace

from . import bounds_max, bounds_min, coloring, eig
from .core import GainGraph, gain_stats, laplacian, signless_laplacian
from .errors import GainSpecError, HypothesisError, SizeCapError, SoundnessError

SLACK = 1e-8

# row roles
VALUE = "value"
UPPER_MIN = "upper:lambda1"
UPPER_MAX = "upper:lambdaN"
LOWER_MAX = "lower:lambdaN"


@dataclass(frozen=True)
class Row:
    name: str
    tag: str
    value: float | None
    role: str = VALUE
    k: int | None = None
    note: str = ""
    best: bool = False


@dataclass(frozen=True)
class BoundReport:
    label: str
    title: str
    rows: tuple[Row, ...]
    lambda1: float
    lambda_n: float
    meta: dict = field(default_factory=dict)

    def row(self, tag: str) -> Row:
        for r in self.rows:
            if r.tag == tag:
                return r
        raise KeyError(tag)

    def values(self) -> dict[str, float | None]:
        return {r.tag: r.value for r in self.rows}


def _na(name: str, tag: str, role: str, exc: Exception) -> Row:
    return Row(name, tag, None, role, note=f"n/a: {exc}")


def _guard(name: str, tag: str, role: str, fn) -> Row:
    """Evaluate ``fn``; a failed hypothesis becomes an n/a row."""
    try:
        out = fn()
    except (HypothesisError, SizeCapError) as exc:
        return _na(name, tag, role, exc)
    if isinstance(out, Row):
        return out
    return Row(name, tag, float(out), role)


def check_soundness(report: BoundReport) -> None:
    lam1, lamn = report.lambda1, report.lambda_n
    for r in report.rows:
        if r.value is None:
            continue
        if r.role == UPPER_MIN and r.value < lam1 - SLACK:
            raise SoundnessError(f"{report.label}: {r.name} = {r.value} < lambda1 = {lam1}")
        if r.role == UPPER_MAX and r.value < lamn - SLACK:
            raise SoundnessError(f"{report.label}: {r.name} = {r.value} < lambdaN = {lamn}")
        if r.role == LOWER_MAX and r.value > lamn + SLACK:
            raise SoundnessError(f"{report.label}: {r.name} = {r.value} > lambdaN = {lamn}")


def _mark_best(rows: list[Row]) -> list[Row]:
    out = list(rows)
    for role, pick in ((UPPER_MIN, min), (UPPER_MAX, min), (LOWER_MAX, max)):
        cands = [r.value for r in out if r.role == role and r.value is not None]
        if not cands:
            continue
        target = pick(cands)
        out = [
            replace(r, best=True)
            if r.role == role and r.value is not None and abs(r.value - target) <= 1e-12 * max(1.0, abs(target))
            else r
            for r in out
        ]
    return out


def _finish(label, title, rows, spectrum, meta=None) -> BoundReport:
    report = BoundReport(
        label=label,
        title=title,
        rows=tuple(_mark_best(rows)),
        lambda1=spectrum.lambda1,
        lambda_n=spectrum.lambda_n,
        meta=meta or {},
    )
    check_soundness(report)
    return report


def table1_bipartite(g: GainGraph, parts=None, label: str = "graph") -> BoundReport:
    """Bipartite comparison: the real-part rows, then the imaginary-part rows."""
    v1, v2 = bounds_min._parts(g, parts)
    if g.m == 0:
        raise HypothesisError("bipartite table needs at least one edge")
    spec = eig.eigenvalues(laplacian(g))
    st = gain_stats(g)
    scale = 2.0 * g.m / g.n
    rows = [
        Row("lambda_1", "lambda1", spec.lambda1),
        Row("a(Phi)", "a", st.a),
        Row("(2m/n) a(Phi)", "2m/n*a", scale * st.a, UPPER_MIN),
        Row("bipartite optimum, theta = 0", "bipartite-opt:a",
            bounds_min.bipartite_optimal_bound(g, (v1, v2), 0.0), UPPER_MIN),
        Row("b(Phi)", "b", st.b),
        Row("(2m/n) b(Phi)", "2m/n*b", scale * st.b, UPPER_MIN),
        Row("bipartite optimum, theta = -pi/2", "bipartite-opt:b",
            bounds_min.bipartite_optimal_bound(g, (v1, v2), -math.pi / 2), UPPER_MIN),
    ]
    return _finish(label, "Upper bounds for lambda_1 (bipartite)", rows, spec,
                   {"n": g.n, "m": g.m, "parts": [len(v1), len(v2)]})


def table2_lambda1(g: GainGraph, chi: int | None = None, label: str = "graph") -> BoundReport:
    """Gain-dependent and degree-based upper bounds on the smallest eigenvalue."""
    spec = eig.eigenvalues(laplacian(g))
    rows = [Row("lambda_1", "lambda1", spec.lambda1)]
    rows.append(_guard("a(Phi)", "a", VALUE, lambda: gain_stats(g).a))
    rows.append(_guard("b(Phi)", "b", VALUE, lambda: gain_stats(g).b))
    rows.append(_guard("(2m/n) a(Phi)", "2m/n*a", UPPER_MIN,
                       lambda: 2.0 * g.m / g.n * gain_stats(g).a))

    def chromatic():
        c = chi if chi is not None else coloring.chromatic_number(g).chi
        return Row("chromatic optimum over (gamma, theta)", "chromatic-complex",
                   bounds_min.chromatic_optimal_complex_bound(g, c), UPPER_MIN,
                   note=f"chi = {c}")

    rows.append(_guard("chromatic optimum over (gamma, theta)", "chromatic-complex",
                       UPPER_MIN, chromatic))

    names = ["min (d_s + d_t - 2)/2", "min (d_s + d_t - sqrt((d_s - d_t)^2 + 4))/2"]
    try:
        pair = bounds_min.degree_pair_bounds(g)
        rows += [Row(nm, f"degree-pair:{i + 1}", pair[i], UPPER_MIN) for i, nm in enumerate(names)]
    except HypothesisError as exc:
        rows += [_na(nm, f"degree-pair:{i + 1}", UPPER_MIN, exc) for i, nm in enumerate(names)]

    for family, fn in (("triangle", bounds_min.triangle_bounds), ("path", bounds_min.path_bounds)):
        try:
            vals = fn(g)
            rows += [Row(f"{family} bound {i + 1}", f"{family}:{i + 1}", vals[i], UPPER_MIN)
                     for i in range(4)]
        except HypothesisError as exc:
            rows += [_na(f"{family} bound {i + 1}", f"{family}:{i + 1}", UPPER_MIN, exc)
                     for i in range(4)]
    return _finish(label, "Upper bounds for lambda_1", rows, spec, {"n": g.n, "m": g.m})


def _first_beating(values: list[float], threshold: float) -> tuple[int, float, bool]:
    for k, v in enumerate(values, start=1):
        if v > threshold:
            return k, v, True
    k = max(range(len(values)), key=lambda i: values[i])
    return k + 1, values[k], False


def table3_lambdaN(
    g: GainGraph, r: float = bounds_max.DEFAULT_R, kmax: int = bounds_max.DEFAULT_KMAX,
    label: str = "graph",
) -> BoundReport:
    """Lower and upper bounds on the largest eigenvalue."""
    if g.m == 0 or not g.is_connected():
        raise HypothesisError("largest-eigenvalue table requires a connected graph with edges")
    lap = laplacian(g)
    spec = eig.eigenvalues(lap)
    delta = int(g.degrees.max())
    rows = [Row("lambda_n", "lambdaN", spec.lambda_n),
            Row("Delta + 1", "Delta+1", delta + 1.0, LOWER_MAX)]
    for tag, kind, name in (("diag-power", "diag", "(max_i (L^k)_ii)^(1/k)"),
                            ("trace-power", "trace", "trace moment bound")):
        seq = eig.power_bound_sequence(lap, kmax, kind)
        k, v, beaten = _first_beating(seq, delta + 1.0)
        note = "first k exceeding Delta + 1" if beaten else f"never exceeds Delta + 1 for k <= {kmax}"
        rows.append(Row(name, tag, v, LOWER_MAX, k=k, note=note))

    rows.append(Row("lambda_n of signless Laplacian", "lambdaN(-)",
                    eig.eigenvalues(signless_laplacian(g)).lambda_n, UPPER_MAX))
    c1, c2, c3, c4 = bounds_max.classic_max_bounds(g)
    rows += [
        Row("2 Delta", "2Delta", c1, UPPER_MAX),
        Row("max d_i + d_j over edges", "max-di+dj", c3, UPPER_MAX),
        Row("max d_i + m_i", "max-di+mi", c2, UPPER_MAX),
    ]
    for kind, name in (("M", "max d_i + m_i^k"), ("N", "max d_i + n_i^k"), ("L", "max d_i + l_i^k")):
        def scan(kind=kind, name=name):
            k, v = bounds_max.scan_k_min_bound(g, kind, r if kind == "N" else None, kmax)
            return Row(name, f"gen-degree:{kind}", v, UPPER_MAX, k=k,
                       note=f"r = {r}" if kind == "N" else "")
        rows.append(_guard(name, f"gen-degree:{kind}", UPPER_MAX, scan))
    rows.append(Row("max over edges of (d_i(d_i+m_i) + d_j(d_j+m_j))/(d_i+d_j)", "ratio", c4, UPPER_MAX))
    return _finish(label, "Bounds for lambda_n", rows, spec,
                   {"n": g.n, "m": g.m, "r": r, "kmax": kmax})


# renderings


def _fmt(v: float | None, digits: int) -> str:
    return "n/a" if v is None else f"{v:.{digits}f}"


def to_markdown(report: BoundReport) -> str:
    out = [f"### {report.title}: {report.label}", ""]
    meta = ", ".join(f"{k} = {v}" for k, v in report.meta.items())
    if meta:
        out += [meta, ""]
    out += ["| bound | tag | value | k | note |", "|---|---|---:|---:|---|"]
    for r in report.rows:
        val = _fmt(r.value, 3)
        if r.best:
            val = f"**{val}**"
        note = r.note + (" (best)" if r.best else "")
        out.append(f"| {r.name} | {r.tag} | {val} | {'' if r.k is None else r.k} | {note.strip()} |")
    return "\n".join(out) + "\n"


def to_csv(report: BoundReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["graph", "bound", "tag", "role", "value", "k", "best", "note"])
    for r in report.rows:
        w.writerow([report.label, r.name, r.tag, r.role, _fmt(r.value, 12),
                    "" if r.k is None else r.k, int(r.best), r.note])
    return buf.getvalue()


def to_json(report: BoundReport) -> str:
    data = {
        "graph": report.label,
        "title": report.title,
        "lambda1": report.lambda1,
        "lambdaN": report.lambda_n,
        "meta": report.meta,
        "rows": [asdict(r) for r in report.rows],
    }
    return json.dumps(data, indent=2) + "\n"


RENDERERS = {"md": to_markdown, "csv": to_csv, "json": to_json}


def render(report: BoundReport, fmt: str = "md") -> str:
    try:
        return RENDERERS[fmt](report)
    except KeyError:
        raise GainSpecError(f"unknown format {fmt!r}") from None
