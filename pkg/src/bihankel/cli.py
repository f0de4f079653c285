"""Command line entry point.

    bihankel bound --tau 1.0,0.0 --lambda 1 --delta 0 --phi caratheodory --json
    bihankel corollary --id 4 --alpha 1.0
    bihankel verify-max --phi caratheodory --c-steps 51 --grid 101 --refine 3 --out report.json
    bihankel falsify --samples 100000 --seed 42 --mode relaxed --out report.json
    bihankel sweep --config sweep.json --out results.csv

Exit status: 0 on success, 2 on invalid input, 3 if a violation was recorded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bound import COROLLARY_PARAMS, corollary_bound, corollary_specialization, theorem_bound, verify_max_structure
from .falsify import FalsifyConfig, falsify
from .minda import ClassParams, ValidationError, parse_phi
from .series import SeriesError
from .sweep import sweep, write_csv, write_json

EXIT_OK, EXIT_INVALID, EXIT_VIOLATION = 0, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def parse_tau(text: str) -> complex:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]))
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ValidationError(f"tau must be 're' or 're,im', got {text!r}")


def _class_args(p):
    p.add_argument("--tau", default="1.0,0.0", help="re,im (default 1,0)")
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--delta", type=float, default=0.0)
    p.add_argument("--phi", default="caratheodory")


def _class(ns) -> tuple[ClassParams, object]:
    return ClassParams(parse_tau(ns.tau), ns.lam, ns.delta), parse_phi(ns.phi)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="bihankel", description="Second Hankel determinant bounds for bi-univalent classes.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("bound", help="evaluate P, Q, R and the bound")
    _class_args(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("corollary", help="evaluate a special case and the matching general bound")
    p.add_argument("--id", type=int, required=True, choices=sorted(COROLLARY_PARAMS))
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--delta", type=float)
    p.add_argument("--phi")
    p.add_argument("--printed", action="store_true", help="use the typeset form of corollaries 3 and 6")

    p = sub.add_parser("verify-max", help="grid-maximize F over the square for each c")
    _class_args(p)
    p.add_argument("--c-steps", type=int, default=51)
    p.add_argument("--grid", type=int, default=101)
    p.add_argument("--refine", type=int, default=3)
    p.add_argument("--out")

    p = sub.add_parser("falsify", help="Monte-Carlo search for a counterexample")
    _class_args(p)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--mode", choices=("relaxed", "constrained"), default="relaxed")
    p.add_argument("--complex-c1", action="store_true")
    p.add_argument("--boundary-bias", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")

    p = sub.add_parser("sweep", help="evaluate a JSON grid spec")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True, help=".csv or .json")
    return ap


def _run(ns) -> int:
    if ns.cmd == "bound":
        params, phi = _class(ns)
        bd = theorem_bound(params, phi)
        if ns.json:
            print(json.dumps(bd.to_dict(), indent=2, sort_keys=True))
        else:
            print(f"P = {bd.p!r}\nQ = {bd.q!r}\nR = {bd.r!r}\nbound = {bd.bound!r}")
        return EXIT_OK

    if ns.cmd == "corollary":
        names = COROLLARY_PARAMS[ns.id]
        kw = {}
        for n in names:
            v = getattr(ns, n)
            if v is None:
                raise ValidationError(f"corollary {ns.id} needs --{'lambda' if n == 'lam' else n}")
            kw[n] = parse_phi(v) if n == "phi" else v
        value = corollary_bound(ns.id, printed=ns.printed, **kw)
        theorem = theorem_bound(*corollary_specialization(ns.id, **kw), c_steps=0).bound
        print(json.dumps({"id": ns.id, "corollary": value, "theorem": theorem,
                          "difference": value - theorem}, indent=2))
        return EXIT_OK

    if ns.cmd == "verify-max":
        params, phi = _class(ns)
        rep = verify_max_structure(params, phi, ns.c_steps, ns.grid, ns.refine)
        _emit(json.dumps(rep.to_dict(), indent=2, sort_keys=True), ns.out)
        print(f"{len(rep.flagged)} of {len(rep.records)} c values flagged", file=sys.stderr)
        return EXIT_OK

    if ns.cmd == "falsify":
        params, phi = _class(ns)
        cfg = FalsifyConfig(params, phi, ns.samples, ns.seed, ns.mode, ns.complex_c1, ns.boundary_bias)
        rep = falsify(cfg, partitions=max(1, ns.workers), workers=ns.workers)
        _emit(rep.to_json(), ns.out)
        print(f"max |H2(2)| = {rep.max_observed:.6g}, bound = {rep.bound:.6g}, "
              f"ratio = {rep.ratio:.4g}, violations = {rep.n_violations}", file=sys.stderr)
        return EXIT_VIOLATION if rep.n_violations else EXIT_OK

    spec = json.loads(Path(ns.config).read_text())
    rows = sweep(spec)
    (write_json if ns.out.endswith(".json") else write_csv)(rows, ns.out)
    errors = sum(1 for r in rows if r["error"])
    print(f"{len(rows)} rows, {errors} with errors", file=sys.stderr)
    return EXIT_VIOLATION if any(r["n_violations"] for r in rows) else EXIT_OK


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return _run(ns)
    except (ValidationError, SeriesError, json.JSONDecodeError, OSError) as exc:
        print(f"bihankel: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
