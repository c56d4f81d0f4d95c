"""Command-line driver: verification suites, exact value tables, and JSON
dumps of the constructed objects.

Exit codes: 0 all rows pass, 1 any failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import closedforms as cf
from . import detformulas as df
from .efp import inhom_efp, inhom_pseudo_efp
from .qkz import GENERIC_Q, OMEGA, solve_qkz
from .reports import SuiteResult
from .rings import encode_laurent
from .suites import SUITE_IDS, SuiteConfig, run_suite


def _parse_range(spec: str):
    """Accept "3", "3,5,7" or "3..9" (inclusive)."""
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in spec.split(",")]


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    cfg = SuiteConfig(suite=args.suite, N_max=args.N_max, n_max=args.n_max,
                      seed=args.seed, instances=args.instances)
    result = run_suite(cfg)
    _emit(result.render(args.format), args.out)
    return 0 if result.passed else 1


def cmd_table(args) -> int:
    rows = []
    family = args.family
    if family in ("efp-minus", "efp-plus", "efp-even"):
        closed = {"efp-minus": "recurE--", "efp-plus": "EFP++",
                  "efp-even": "EFPee*"}[family]
        header = ("N", "k", "value")
        for N in _parse_range(args.N or "3,5,7"):
            if family == "efp-even" and N % 2:
                raise SystemExit("efp-even needs even N")
            if family != "efp-even" and N % 2 == 0:
                raise SystemExit("odd-chain families need odd N")
            n = N // 2
            kmax = n + (1 if family == "efp-plus" else 0)
            for k in range(0, kmax + 1):
                rows.append((N, k, str(cf.efp_value_closed(closed, n, k))))
    elif family == "counts-asm":
        header = ("n", "value")
        rows = [(n, str(cf.asm_count(n))) for n in _parse_range(args.N or "1..8")]
    elif family == "counts-aht":
        header = ("N", "value")
        rows = [(N, str(cf.aht_count(N))) for N in _parse_range(args.N or "3..9")]
    elif family == "counts-cssc":
        header = ("n", "k", "value")
        for n in _parse_range(args.N or "1..8"):
            for k in range(0, n + 1):
                rows.append((n, k, str(cf.lgv_count(n, k))))
    elif family == "thermo":
        header = ("k", "value")
        rows = [(k, f"{cf.thermo_limit(k):.12g}")
                for k in _parse_range(args.k or "0..4")]
    elif family == "t-ratio":
        header = ("family", "n", "k", "numerator", "denominator")
        for n in _parse_range(args.N or "1..3"):
            for k in range(1, n + 1):
                for fam in df.T_RATIO_FAMILIES:
                    num, den = df.t_ratio(fam, n, k)
                    rows.append((fam, n, k, num.encode(), den.encode()))
    else:
        raise SystemExit(f"unknown family {family!r}")

    if args.format == "csv":
        text = ",".join(header) + "\n" + "\n".join(
            ",".join(str(x) for x in row) for row in rows) + "\n"
    elif args.format == "json":
        text = json.dumps([dict(zip(header, row)) for row in rows],
                          indent=2) + "\n"
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows))
                  if rows else len(str(h)) for i, h in enumerate(header)]
        lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths))]
        for row in rows:
            lines.append("  ".join(str(x).ljust(w)
                                   for x, w in zip(row, widths)))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_qkz(args) -> int:
    if args.action != "dump":
        raise SystemExit("qkz supports: dump")
    ctx = GENERIC_Q if args.ring == "generic" else OMEGA
    sol = solve_qkz(args.mu, args.N, ctx)
    _emit(json.dumps(sol.to_json(), indent=2, sort_keys=True) + "\n",
          args.out)
    return 0


def cmd_efp(args) -> int:
    if args.action != "inhom":
        raise SystemExit("efp supports: inhom")
    ctx = GENERIC_Q if args.ring == "generic" else OMEGA
    build = inhom_pseudo_efp if args.pseudo else inhom_efp
    e = build(args.mu, args.N, args.k, ctx)
    _emit(json.dumps(e.to_json(), indent=2, sort_keys=True) + "\n", args.out)
    return 0


def cmd_detcheck(args) -> int:
    if args.suite not in ("appendixA", "appendixB", "det-reps"):
        raise SystemExit("detcheck suites: appendixA, appendixB, det-reps")
    cfg = SuiteConfig(suite=args.suite, seed=args.seed,
                      instances=args.instances, n_max=args.n_max)
    result = run_suite(cfg)
    _emit(result.render(args.format), args.out)
    return 0 if result.passed else 1


def cmd_counts(args) -> int:
    family = args.family
    rows = []
    if family == "aht":
        rows = [(N, cf.aht_count(N)) for N in _parse_range(args.N)]
    elif family == "asm":
        rows = [(n, cf.asm_count(n)) for n in _parse_range(args.N)]
    elif family == "cssc":
        for n in _parse_range(args.N):
            for k in range(0, n + 1):
                rows.append((f"{n},{k}", cf.lgv_count(n, k)))
    else:
        raise SystemExit(f"unknown counts family {family!r}")
    text = "family,n,k,value\n"
    for key, val in rows:
        if isinstance(key, tuple):
            key = ",".join(map(str, key))
        if "," not in str(key):
            key = f"{key},"
        text += f"{family},{key},{val}\n"
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="xxz-efp",
        description="Exact workbench for the finite-size emptiness formation "
                    "probabilities of the XXZ chain at Delta = -1/2.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all", choices=SUITE_IDS)
    v.add_argument("--N-max", dest="N_max", type=int, default=6)
    v.add_argument("--n-max", dest="n_max", type=int, default=3)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--instances", type=int, default=200)
    v.add_argument("--format", default="text",
                   choices=("text", "json", "csv"))
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="emit exact value tables")
    t.add_argument("--family", required=True)
    t.add_argument("--N", default=None)
    t.add_argument("--k", default=None)
    t.add_argument("--format", default="text",
                   choices=("text", "json", "csv"))
    t.add_argument("--out", default=None)
    t.set_defaults(func=cmd_table)

    q = sub.add_parser("qkz", help="exchange-equation eigenvectors")
    q.add_argument("action", choices=("dump",))
    q.add_argument("--mu", required=True, choices=("e", "+", "-"))
    q.add_argument("--N", type=int, required=True)
    q.add_argument("--ring", default="generic", choices=("generic", "omega"))
    q.add_argument("--out", default=None)
    q.set_defaults(func=cmd_qkz)

    e = sub.add_parser("efp", help="inhomogeneous EFP polynomials")
    e.add_argument("action", choices=("inhom",))
    e.add_argument("--mu", required=True, choices=("e", "+", "-"))
    e.add_argument("--N", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--ring", default="generic", choices=("generic", "omega"))
    e.add_argument("--pseudo", action="store_true")
    e.add_argument("--out", default=None)
    e.set_defaults(func=cmd_efp)

    d = sub.add_parser("detcheck", help="determinant identity suites")
    d.add_argument("--suite", default="appendixA")
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--instances", type=int, default=200)
    d.add_argument("--n-max", dest="n_max", type=int, default=2)
    d.add_argument("--format", default="text",
                   choices=("text", "json", "csv"))
    d.add_argument("--out", default=None)
    d.set_defaults(func=cmd_detcheck)

    c = sub.add_parser("counts", help="counting-sequence tables (CSV)")
    c.add_argument("--family", required=True)
    c.add_argument("--N", required=True)
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_counts)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
