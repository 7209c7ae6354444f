"""Monte Carlo resilience experiments: sweeps over deletion budgets and
threshold location by bisection.

A sweep runs `trials` independent trials per alpha: sample G(n, p), apply
the configured adversary with per-vertex budget floor(alpha * n * p), solve
the residual graph, and aggregate per-alpha success counts with Wilson 95%
intervals.  Every trial's randomness derives from
mix64(master_seed, alpha_bits, trial_index), so results are bit-identical
across runs and across worker counts; aggregation is a deterministic fold
in (alpha, trial) order after all tasks complete.

Timing: wall-clock per-trial times are inherently non-reproducible, so the
`mean_ms` CSV column is 0.0 unless the config opts in with
``"timing": true``; with timing on, the CSV is byte-stable except for that
one column.  All scientific columns are always deterministic.

Config JSON schema (see README for the full story)::

    {"n": 600, "p": 0.1, "alphas": [0.1, 0.2, 0.3],
     "adversary": {"strategy": "random", "target": 0},
     "trials": 50, "master_seed": 7, "mode": "direct",
     "solver": {"delta": 0.3, "max_restarts": 20, "closure_cap": null},
     "timing": false}

The solver seed inside a sweep is always the trial's derived seed; a
``seed`` entry under "solver" is ignored here (it matters for the `solve`
CLI, which runs one instance).
"""

import csv
import io
import math
import os
import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .adversary import (bipartition_attack, isolation_attack, random_attack,
                        uniform_budget)
from .gnp import GnpParams, sample_gnp, sprinkle
from .graphs import VertexSet, build_graph, subtract
from .oracle import HARD_LIMIT_N, exact_hamiltonian
from .rng import mix64
from .solver import SolveConfig, hamilton, hamilton_split

__all__ = [
    "AdversarySpec",
    "SweepConfig",
    "TrialRecord",
    "CellRow",
    "ThresholdResult",
    "wilson_interval",
    "run_sweep",
    "estimate_threshold",
    "rows_to_csv",
    "write_csv",
    "CSV_COLUMNS",
]

CSV_COLUMNS = ["n", "p", "alpha", "adversary", "mode", "trials", "successes",
               "unconfirmed", "wilson_lo", "wilson_hi", "mean_ms"]

_STRATEGIES = ("none", "bipartition", "random", "isolate")


@dataclass(frozen=True)
class AdversarySpec:
    strategy: str
    target: int = 0

    def __post_init__(self):
        if self.strategy not in _STRATEGIES:
            raise ValueError("unknown adversary %r (want one of %s)"
                             % (self.strategy, ", ".join(_STRATEGIES)))

    @property
    def label(self):
        if self.strategy == "isolate":
            return "isolate:%d" % self.target
        return self.strategy


@dataclass(frozen=True)
class SweepConfig:
    n: int
    p: float
    alphas: tuple
    adversary: AdversarySpec
    trials: int
    master_seed: int
    solver: SolveConfig = SolveConfig()
    mode: str = "direct"
    timing: bool = False

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("n must be >= 3")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")
        if self.trials < 1:
            raise ValueError("trials must be >= 1, got %d" % self.trials)
        alphas = tuple(float(a) for a in self.alphas)
        if not alphas:
            raise ValueError("alphas must be non-empty")
        if any(a < 0 for a in alphas):
            raise ValueError("alphas must be non-negative")
        if list(alphas) != sorted(alphas):
            raise ValueError("alphas must be sorted ascending")
        object.__setattr__(self, "alphas", alphas)
        if self.mode not in ("direct", "split"):
            raise ValueError("mode must be 'direct' or 'split'")
        if (self.adversary.strategy == "isolate"
                and not 0 <= self.adversary.target < self.n):
            raise ValueError("isolation target %d out of range for n=%d"
                             % (self.adversary.target, self.n))

    def to_json_dict(self):
        return {
            "n": self.n, "p": self.p, "alphas": list(self.alphas),
            "adversary": {"strategy": self.adversary.strategy,
                          "target": self.adversary.target},
            "trials": self.trials, "master_seed": self.master_seed,
            "solver": {"delta": self.solver.delta,
                       "max_restarts": self.solver.max_restarts,
                       "closure_cap": self.solver.closure_cap},
            "mode": self.mode, "timing": self.timing,
        }

    @classmethod
    def from_json_dict(cls, d):
        adv = d.get("adversary", {"strategy": "none"})
        sol = d.get("solver", {})
        return cls(
            n=int(d["n"]), p=float(d["p"]),
            alphas=tuple(float(a) for a in d["alphas"]),
            adversary=AdversarySpec(strategy=adv.get("strategy", "none"),
                                    target=int(adv.get("target", 0))),
            trials=int(d["trials"]),
            master_seed=int(d.get("master_seed", 0)),
            solver=SolveConfig(
                delta=float(sol.get("delta", 0.3)),
                max_restarts=int(sol.get("max_restarts", 20)),
                closure_cap=(None if sol.get("closure_cap") is None
                             else int(sol["closure_cap"])),
                seed=int(sol.get("seed", 0))),
            mode=d.get("mode", "direct"),
            timing=bool(d.get("timing", False)),
        )


@dataclass(frozen=True)
class TrialRecord:
    alpha: float
    trial_index: int
    derived_seed: int
    status: str
    unconfirmed: bool
    millis: float


@dataclass(frozen=True)
class CellRow:
    n: int
    p: float
    alpha: float
    adversary: str
    mode: str
    trials: int
    successes: int
    unconfirmed: int
    wilson_lo: float
    wilson_hi: float
    mean_ms: float

    def as_csv_fields(self):
        return [str(self.n), repr(self.p), repr(self.alpha), self.adversary,
                self.mode, str(self.trials), str(self.successes),
                str(self.unconfirmed), "%.6f" % self.wilson_lo,
                "%.6f" % self.wilson_hi, "%.3f" % self.mean_ms]

    def to_json_dict(self):
        return {
            "n": self.n, "p": self.p, "alpha": self.alpha,
            "adversary": self.adversary, "mode": self.mode,
            "trials": self.trials, "successes": self.successes,
            "unconfirmed": self.unconfirmed,
            "wilson_lo": self.wilson_lo, "wilson_hi": self.wilson_hi,
            "mean_ms": self.mean_ms,
        }


def wilson_interval(successes, trials, z=1.96):
    """95% (by default) Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    phat = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = phat + z2 / (2 * trials)
    half = z * math.sqrt(phat * (1 - phat) / trials + z2 / (4 * trials * trials))
    return (max(0.0, (center - half) / denom),
            min(1.0, (center + half) / denom))


def _alpha_bits(alpha):
    """Stable 64-bit key for a float alpha (IEEE bit pattern)."""
    return struct.unpack("<Q", struct.pack("<d", float(alpha)))[0]


def _apply_adversary(g, spec, alpha, p, seed):
    budget = uniform_budget(g.n, p, alpha)
    if spec.strategy == "none":
        return build_graph(g.n, [])
    if spec.strategy == "bipartition":
        half = VertexSet.from_members(g.n, range(g.n // 2))
        dg = bipartition_attack(g, (half, half.complement()), budget)
    elif spec.strategy == "random":
        dg = random_attack(g, budget, seed)
    else:
        dg = isolation_attack(g, spec.target, budget)
    return dg.h


def run_trial(cfg, alpha, trial_index):
    """One seeded trial; pure function of (cfg, alpha, trial_index)."""
    base = mix64(cfg.master_seed, _alpha_bits(alpha), trial_index)
    g = sample_gnp(GnpParams(cfg.n, cfg.p, mix64(base, 1)))
    h = _apply_adversary(g, cfg.adversary, alpha, cfg.p, mix64(base, 2))
    resid = subtract(g, h)
    scfg = replace(cfg.solver, seed=mix64(base, 3))
    if cfg.mode == "split":
        halves = sprinkle(resid, cfg.solver.delta, mix64(base, 4))
        out = hamilton_split(halves.kept, halves.rest, scfg)
    else:
        out = hamilton(resid, scfg)
    unconfirmed = False
    if out.status != "hamiltonian":
        # a failure is only "confirmed" when the exact oracle can afford to
        # agree that no Hamilton cycle exists
        if resid.n <= HARD_LIMIT_N:
            unconfirmed = exact_hamiltonian(resid).hamiltonian
        else:
            unconfirmed = True
    return TrialRecord(alpha, trial_index, base, out.status, unconfirmed,
                       out.millis if cfg.timing else 0.0)


def _trial_task(args):
    cfg, alpha, trial_index = args
    return run_trial(cfg, alpha, trial_index)


def _resolve_workers(workers):
    env = os.environ.get("HAMLAB_THREADS", "")
    cap = int(env) if env else None
    if workers is None:
        workers = cap if cap is not None else (os.cpu_count() or 1)
    if cap is not None:
        workers = min(workers, cap)
    return max(1, workers)


def _run_cells(cfg, alphas, workers):
    tasks = [(cfg, a, t) for a in alphas for t in range(cfg.trials)]
    nworkers = _resolve_workers(workers)
    if nworkers == 1 or len(tasks) == 1:
        records = [_trial_task(t) for t in tasks]
    else:
        chunk = max(1, len(tasks) // (4 * nworkers))
        with ProcessPoolExecutor(max_workers=nworkers) as ex:
            records = list(ex.map(_trial_task, tasks, chunksize=chunk))
    rows = []
    for i, alpha in enumerate(alphas):
        cell = records[i * cfg.trials:(i + 1) * cfg.trials]
        successes = sum(r.status == "hamiltonian" for r in cell)
        unconfirmed = sum(r.unconfirmed for r in cell)
        lo, hi = wilson_interval(successes, cfg.trials)
        mean_ms = sum(r.millis for r in cell) / cfg.trials
        rows.append(CellRow(cfg.n, cfg.p, alpha, cfg.adversary.label,
                            cfg.mode, cfg.trials, successes, unconfirmed,
                            lo, hi, mean_ms))
    return rows


def run_sweep(cfg, workers=None):
    """All (alpha, trial) cells of the config; rows sorted by alpha."""
    return _run_cells(cfg, cfg.alphas, workers)


def rows_to_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv_fields())
    return buf.getvalue()


def write_csv(rows, path):
    with open(path, "w", newline="") as fh:
        fh.write(rows_to_csv(rows))


@dataclass(frozen=True)
class ThresholdResult:
    status: str              # "located" | "all_succeed" | "all_fail"
    threshold: float | None
    lo: float
    hi: float
    cells: tuple

    def to_json_dict(self):
        return {
            "status": self.status,
            "threshold": self.threshold,
            "bracket": [self.lo, self.hi],
            "cells": [c.to_json_dict()
                      for c in sorted(self.cells, key=lambda c: c.alpha)],
        }


def estimate_threshold(cfg, tol=0.02, workers=None):
    """Bisect on alpha for the point where success rate crosses 1/2.

    Assumes the adversary's effect is monotone in alpha (bipartition and
    random budgets are; isolation is too, in the weak sense).  When the
    endpoints do not bracket a crossing the result says so instead of
    inventing a threshold.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    cells = []

    def rate(alpha):
        row = _run_cells(cfg, (alpha,), workers)[0]
        cells.append(row)
        return row.successes / row.trials

    lo, hi = 0.0, 1.0
    if rate(lo) < 0.5:
        return ThresholdResult("all_fail", None, lo, hi, tuple(cells))
    if rate(hi) >= 0.5:
        return ThresholdResult("all_succeed", None, lo, hi, tuple(cells))
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if rate(mid) >= 0.5:
            lo = mid
        else:
            hi = mid
    return ThresholdResult("located", (lo + hi) / 2.0, lo, hi, tuple(cells))
