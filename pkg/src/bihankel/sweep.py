"""Batch evaluation of the bound (and optionally the sampler) over a parameter grid.

A sweep spec is a dict, usually loaded from JSON::

    {
      "lambda": [1, 2, 5],
      "delta": [0, 0.5, 1],
      "tau": [[1, 0], [0.5, 0.5]],         # or "tau_abs": [...] with "tau_arg": [...]
      "phi": ["caratheodory", "janowski:0.5,-0.5", "power:0.5"],
      "falsify": {"samples": 100000, "seed": 42, "mode": "relaxed"}
    }

or, for a corollary, ``{"corollary": {"id": 4, "alpha": [0.25, 0.5]}}`` where
each corollary parameter is a list (``phi`` given as strings).  Every field is
optional except that the product of the lists defines the rows; an empty
list gives an empty table.
"""

from __future__ import annotations

import cmath
import csv
import itertools
import json
from pathlib import Path

from .bound import COROLLARY_PARAMS, corollary_bound, corollary_specialization, theorem_bound
from .falsify import FalsifyConfig, falsify
from .minda import ClassParams, ValidationError, parse_phi
from .series import SeriesError

AGREE_TOL = 1e-12

COLUMNS = [
    "tau_re", "tau_im", "lambda", "delta", "phi", "B1", "B2", "B3", "P", "Q", "R", "bound",
    "corollary_id", "corollary_args", "corollary", "corollary_agrees",
    "samples", "seed", "mode", "max_observed", "ratio", "n_violations", "error",
]


def _taus(spec: dict) -> list[complex]:
    if "tau" in spec:
        return [complex(*t) if isinstance(t, (list, tuple)) else complex(t) for t in spec["tau"]]
    if "tau_abs" in spec:
        return [cmath.rect(r, a) for r in spec["tau_abs"] for a in spec.get("tau_arg", [0.0])]
    return [1.0]


def grid_points(spec: dict):
    """Yield ``(params_kwargs, phi_text, corollary)`` for each grid point."""
    if "corollary" in spec:
        co = dict(spec["corollary"])
        cid = int(co.pop("id"))
        names = COROLLARY_PARAMS.get(cid, tuple(co))
        lists = [co.get(n, []) for n in names]
        for values in itertools.product(*lists):
            yield None, None, (cid, dict(zip(names, values)))
        return
    taus = _taus(spec)
    lams = spec.get("lambda", [1.0])
    deltas = spec.get("delta", [0.0])
    phis = spec.get("phi", ["caratheodory"])
    for tau, lam, delta, phi in itertools.product(taus, lams, deltas, phis):
        yield {"tau": tau, "lam": lam, "delta": delta}, phi, None


def _row(pkw, phi_text, co, fal: dict | None) -> dict:
    row = dict.fromkeys(COLUMNS)
    try:
        if co is not None:
            cid, args = co
            args = {k: (parse_phi(v) if k == "phi" else v) for k, v in args.items()}
            params, phi = corollary_specialization(cid, **args)
            cval = corollary_bound(cid, **args)
            row.update(corollary_id=cid, corollary=cval,
                       corollary_args=json.dumps({k: str(v) for k, v in args.items()}, sort_keys=True))
        else:
            params, phi = ClassParams(**pkw), parse_phi(phi_text)
        bd = theorem_bound(params, phi, c_steps=0)
        tau = complex(params.tau)
        row.update(tau_re=tau.real, tau_im=tau.imag, **{"lambda": params.lam}, delta=params.delta,
                   phi=phi.to_string(), B1=phi.B1, B2=phi.B2, B3=phi.B3,
                   P=bd.p, Q=bd.q, R=bd.r, bound=bd.bound)
        if co is not None:
            row["corollary_agrees"] = abs(row["corollary"] - bd.bound) <= AGREE_TOL
        if fal:
            cfg = FalsifyConfig(params, phi, **fal)
            rep = falsify(cfg)
            row.update(samples=cfg.samples, seed=cfg.seed, mode=cfg.mode,
                       max_observed=rep.max_observed, ratio=rep.ratio, n_violations=rep.n_violations)
    except (ValidationError, SeriesError, TypeError, KeyError) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def sweep(spec: dict) -> list[dict]:
    """One row per grid point; invalid points yield a row with ``error`` set."""
    fal = spec.get("falsify")
    return [_row(pkw, phi, co, fal) for pkw, phi, co in grid_points(spec)]


def write_csv(rows: list[dict], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=COLUMNS)
        w.writeheader()
        for r in rows:
            w.writerow({k: ("" if v is None else v) for k, v in r.items()})


def write_json(rows: list[dict], path) -> None:
    Path(path).write_text(json.dumps(rows, indent=2, sort_keys=True))
