"""Monte-Carlo attack on the Hankel bound.

Draws Schwarz tuples, evaluates ``|a2 a4 - a3^2|`` and compares the largest
value seen with ``B1 |tau|^2 (P + Q + R)``.  Violations are reported as data.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bound import theorem_bound
from .coeffs import SchwarzTuple, coefficients_from_schwarz, constrained_completion, second_hankel
from .minda import ClassParams, PhiSpec, ValidationError
from .sampling import sample_range, tuples_from_uniforms

VIOLATION_TOL = 1e-9
MAX_STORED_VIOLATIONS = 1000
MODES = ("relaxed", "constrained")


@dataclass(frozen=True)
class FalsifyConfig:
    params: ClassParams
    phi: PhiSpec
    samples: int = 100_000
    seed: int = 42
    mode: str = "relaxed"
    complex_c1: bool = False
    boundary_bias: bool = False

    def __post_init__(self):
        if int(self.samples) < 1:
            raise ValidationError("samples must be >= 1")
        if not 0 <= int(self.seed) < 2**64:
            raise ValidationError("seed must be a 64-bit unsigned integer")
        if self.mode not in MODES:
            raise ValidationError(f"mode must be one of {MODES}, got {self.mode!r}")

    def to_dict(self) -> dict:
        tau = complex(self.params.tau)
        return {"tau": [tau.real, tau.imag], "lambda": self.params.lam, "delta": self.params.delta,
                "phi": self.phi.to_string(), "samples": int(self.samples), "seed": int(self.seed),
                "mode": self.mode, "complex_c1": self.complex_c1, "boundary_bias": self.boundary_bias}


@dataclass
class FalsifyReport:
    config: FalsifyConfig
    bound: float
    max_observed: float
    argmax_index: int | None
    argmax_tuple: SchwarzTuple | None
    samples_run: int
    samples_rejected: int
    violations: list[dict] = field(default_factory=list)
    n_violations: int = 0

    @property
    def ratio(self) -> float:
        return self.max_observed / self.bound

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "bound": self.bound,
            "max_observed": self.max_observed,
            "ratio": self.ratio,
            "argmax_index": self.argmax_index,
            "argmax_tuple": None if self.argmax_tuple is None else self.argmax_tuple.to_list(),
            "samples_run": self.samples_run,
            "samples_rejected": self.samples_rejected,
            "n_violations": self.n_violations,
            "violations": self.violations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


@dataclass
class _Partial:
    max_value: float = -1.0
    argmax_index: int | None = None
    argmax_tuple: SchwarzTuple | None = None
    run: int = 0
    rejected: int = 0
    violations: list = field(default_factory=list)
    n_violations: int = 0

    def merge(self, other: "_Partial") -> "_Partial":
        out = _Partial(run=self.run + other.run, rejected=self.rejected + other.rejected,
                       n_violations=self.n_violations + other.n_violations)
        cands = [p for p in (self, other) if p.argmax_index is not None]
        if cands:
            # deterministic tie-break: the lower global index wins
            best = max(cands, key=lambda p: (p.max_value, -p.argmax_index))
            out.max_value, out.argmax_index, out.argmax_tuple = best.max_value, best.argmax_index, best.argmax_tuple
        out.violations = sorted(self.violations + other.violations, key=lambda v: v["index"])[:MAX_STORED_VIOLATIONS]
        return out


def _evaluate(config: FalsifyConfig, bound: float, s: SchwarzTuple, offset: int, ok=None) -> _Partial:
    h = np.atleast_1d(second_hankel(coefficients_from_schwarz(config.params, config.phi, s, check=True)))
    n = h.shape[0]
    part = _Partial(run=n)
    if ok is not None:
        part.rejected = int(n - np.count_nonzero(ok))
        h = np.where(ok, h, -np.inf)
    if part.rejected == n:
        return part
    i = int(np.argmax(h))
    part.max_value, part.argmax_index, part.argmax_tuple = float(h[i]), offset + i, s.take(i)
    bad = np.flatnonzero(h > bound + VIOLATION_TOL)
    part.n_violations = int(bad.size)
    part.violations = [{"index": offset + int(j), "value": float(h[j]), "tuple": s.take(int(j)).to_list()}
                       for j in bad[:MAX_STORED_VIOLATIONS]]
    return part


def _evaluate_range(config: FalsifyConfig, bound: float, start: int, stop: int) -> _Partial:
    acc = _Partial()
    for offset, u in sample_range(config.seed, start, stop):
        s = tuples_from_uniforms(u, config.complex_c1, config.boundary_bias)
        ok = None
        if config.mode == "constrained":
            y, eta, ok = constrained_completion(config.params, config.phi, s.c1, s.x, s.xi)
            # rejected rows get harmless placeholders; they are masked out
            s = SchwarzTuple(s.c1, s.x, s.xi, np.where(ok, y, 0), np.where(ok, eta, 0))
        acc = acc.merge(_evaluate(config, bound, s, offset, ok))
    return acc


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    edges = np.linspace(0, total, parts + 1).round().astype(int)
    return [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:])]


def _report(config: FalsifyConfig, bound: float, acc: _Partial) -> FalsifyReport:
    return FalsifyReport(
        config=config, bound=bound, max_observed=max(acc.max_value, 0.0),
        argmax_index=acc.argmax_index, argmax_tuple=acc.argmax_tuple,
        samples_run=acc.run, samples_rejected=acc.rejected,
        violations=acc.violations, n_violations=acc.n_violations,
    )


def falsify(config: FalsifyConfig, partitions: int = 1, workers: int = 1) -> FalsifyReport:
    """Sample ``config.samples`` tuples and compare the worst case with the bound.

    The sample range is cut into ``partitions`` contiguous pieces, evaluated
    by up to ``workers`` processes and max-merged; the result does not depend
    on either number.
    """
    bound = theorem_bound(config.params, config.phi, c_steps=0).bound
    ranges = _ranges(int(config.samples), max(1, partitions))
    if workers > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_evaluate_range, *zip(*[(config, bound, a, b) for a, b in ranges])))
    else:
        parts = [_evaluate_range(config, bound, a, b) for a, b in ranges]
    acc = _Partial()
    for p in parts:
        acc = acc.merge(p)
    return _report(config, bound, acc)


def evaluate_tuples(config: FalsifyConfig, tuples: list[SchwarzTuple]) -> FalsifyReport:
    """Run the comparison on given tuples instead of random draws."""
    bound = theorem_bound(config.params, config.phi, c_steps=0).bound
    s = SchwarzTuple(*(np.array([getattr(t, f) for t in tuples], dtype=complex)
                       for f in ("c1", "x", "xi", "y", "eta")))
    return _report(config, bound, _evaluate(config, bound, s, 0))
