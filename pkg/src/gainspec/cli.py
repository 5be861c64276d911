"""Command line interface.

Exit status: 0 success, 2 bad input, 3 failed bound hypothesis,
4 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds_max, eig, frustration, gen, ggf, report
from .core import gain_stats, laplacian
from .errors import GainSpecError, InvalidParameterError


def _load(path: str):
    if path == "-":
        return ggf.load(sys.stdin)
    return ggf.load(path)


def _label(path: str) -> str:
    return "stdin" if path == "-" else path


def _cmd_bounds(args) -> str:
    g = _load(args.file)
    if args.which == "min":
        rep = report.table2_lambda1(g, chi=args.chi, label=_label(args.file))
    elif args.which == "max":
        rep = report.table3_lambdaN(g, r=args.r, kmax=args.kmax, label=_label(args.file))
    else:
        rep = report.table1_bipartite(g, label=_label(args.file))
    return report.render(rep, args.format)


def _cmd_frustration(args) -> str:
    g = _load(args.file)
    nu = frustration.frustration_number(g, force=args.force)
    eps = frustration.frustration_index(g, force=args.force)
    lam1 = eig.eigenvalues(laplacian(g)).lambda1 if g.n else 0.0
    rows = [
        ("lambda1", f"{lam1:.12g}", ""),
        ("frustration_number", str(nu.value), " ".join(map(str, nu.witness))),
        ("frustration_index", str(eps.value), " ".join(f"{u}-{v}" for u, v in eps.witness)),
    ]
    if args.format == "json":
        return json.dumps({
            "graph": _label(args.file),
            "lambda1": lam1,
            "frustration_number": {"value": nu.value, "witness": list(nu.witness)},
            "frustration_index": {"value": eps.value, "witness": [list(e) for e in eps.witness]},
        }, indent=2) + "\n"
    if args.format == "csv":
        return "quantity,value,witness\n" + "".join(f"{a},{b},{c}\n" for a, b, c in rows)
    lines = ["| quantity | value | witness |", "|---|---:|---|"]
    lines += [f"| {a} | {b} | {c} |" for a, b, c in rows]
    return "\n".join(lines) + "\n"


def _cmd_eig(args) -> str:
    g = _load(args.file)
    spec = eig.eigenvalues(laplacian(g))
    if args.format == "json":
        out = {"graph": _label(args.file), "n": g.n, "m": g.m, "eigenvalues": list(spec.values)}
        if g.m:
            st = gain_stats(g)
            out.update(a=st.a, b=st.b)
        return json.dumps(out, indent=2) + "\n"
    if args.format == "csv":
        return "index,eigenvalue\n" + "".join(f"{i},{v:.12f}\n" for i, v in enumerate(spec.values))
    lines = ["| i | eigenvalue |", "|---:|---:|"]
    lines += [f"| {i + 1} | {v:.6f} |" for i, v in enumerate(spec.values)]
    return "\n".join(lines) + "\n"


def _cmd_gen(args) -> str:
    if args.named:
        g = gen.NAMED[args.named]()
        comment = f"named instance {args.named}"
    elif args.n1 is not None or args.n2 is not None:
        if args.n1 is None or args.n2 is None or args.p is None:
            raise InvalidParameterError("bipartite generation needs --n1, --n2 and --p")
        g = gen.bipartite_erdos_renyi(args.n1, args.n2, args.p, args.seed)
        comment = f"bipartite G({args.n1}, {args.n2}, {args.p}) seed {args.seed}"
    else:
        if args.n is None or args.p is None:
            raise InvalidParameterError("generation needs --n and --p (or --named)")
        g = gen.erdos_renyi(args.n, args.p, args.seed)
        comment = f"G({args.n}, {args.p}) seed {args.seed}"
    if not args.named and args.gains == "random":
        g = gen.random_unit_gains(g, args.seed)
        comment += ", random unit gains"
    text = ggf.dumps(g, comment)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return ""
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gainspec", description="Extremal eigenvalue bounds for complex unit gain graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("md", "csv", "json"), default="md")

    b = sub.add_parser("bounds", help="bound tables for a GGF graph")
    bsub = b.add_subparsers(dest="which", required=True)
    p = bsub.add_parser("min", help="upper bounds for the smallest eigenvalue")
    p.add_argument("file")
    p.add_argument("--chi", type=int, default=None,
                   help="use this chromatic number (must be >= the true value)")
    add_format(p)
    p = bsub.add_parser("max", help="bounds for the largest eigenvalue")
    p.add_argument("file")
    p.add_argument("--r", type=float, default=bounds_max.DEFAULT_R)
    p.add_argument("--kmax", type=int, default=bounds_max.DEFAULT_KMAX)
    add_format(p)
    p = bsub.add_parser("bipartite", help="bipartite upper bounds for the smallest eigenvalue")
    p.add_argument("file")
    add_format(p)

    p = sub.add_parser("frustration", help="exact frustration number and index")
    p.add_argument("file")
    p.add_argument("--force", action="store_true", help="ignore the size caps")
    add_format(p)

    p = sub.add_parser("eig", help="Laplacian spectrum")
    p.add_argument("file")
    add_format(p)

    p = sub.add_parser("gen", help="generate a GGF graph")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gains", choices=("one", "random"), default="one")
    p.add_argument("--named", choices=sorted(gen.NAMED))
    p.add_argument("-o", "--output")
    return parser


COMMANDS = {"bounds": _cmd_bounds, "frustration": _cmd_frustration, "eig": _cmd_eig, "gen": _cmd_gen}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = COMMANDS[args.command](args)
    except GainSpecError as exc:
        print(f"gainspec: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"gainspec: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
