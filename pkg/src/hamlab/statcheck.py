"""Sampled verifiers for the pseudorandomness properties the solver leans on.

Each check measures a property on a concrete graph -- degree concentration,
pair density, neighbourhood expansion of small / linear-sized sets,
connectivity -- against explicit finite-n thresholds.  The asymptotic
statements hide constants in o(.)/Omega(.); where a bound had to be
invented (rather than read off) the report carries ``surrogate: true``.

Checks are randomized but reproducible: the sampled vertex sets are a pure
function of (n, seed, samples) and never of the edges, so re-running a
check with the same seed on a supergraph audits the *same* sets (that is
what makes the monotonicity property testable).  Reports carry enough
observed/threshold data to recompute the verdict exactly.
"""

import math
from dataclasses import dataclass
from itertools import combinations

from .graphs import VertexSet, connected, cross_edges, neighborhood
from .rng import SplitMix64

__all__ = [
    "CheckReport",
    "check_degrees",
    "check_density",
    "check_small_expansion",
    "check_large_expansion",
    "run_battery",
]


@dataclass
class CheckReport:
    name: str
    passed: bool
    status: str               # "pass" | "fail" | "not_applicable"
    observed: dict
    threshold: dict
    samples: int
    surrogate: bool = False

    def to_json_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "status": self.status,
            "observed": self.observed,
            "threshold": self.threshold,
            "samples": self.samples,
            "surrogate": self.surrogate,
        }


def _sample_prefix(rng, n, k):
    """First k entries of a seeded partial Fisher-Yates pass over 0..n-1."""
    pool = list(range(n))
    for i in range(k):
        j = i + rng.next_below(n - i)
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:k]


def check_degrees(g, p, eps):
    """Every degree within (1 +- eps) * n * p, total edges within the same
    relative band of C(n,2) * p.  Deterministic (inspects all vertices)."""
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must lie in (0, 1), got %r" % (eps,))
    mean_deg = g.n * p
    mean_edges = g.n * (g.n - 1) / 2.0 * p
    degs = g.degrees()
    deg_min = int(degs.min()) if g.n else 0
    deg_max = int(degs.max()) if g.n else 0
    ok = (deg_min >= (1 - eps) * mean_deg
          and deg_max <= (1 + eps) * mean_deg
          and abs(g.m - mean_edges) <= eps * mean_edges)
    return CheckReport(
        name="degrees",
        passed=ok,
        status="pass" if ok else "fail",
        observed={"deg_min": deg_min, "deg_max": deg_max, "edges": g.m},
        threshold={"deg_lo": (1 - eps) * mean_deg,
                   "deg_hi": (1 + eps) * mean_deg,
                   "edges_lo": (1 - eps) * mean_edges,
                   "edges_hi": (1 + eps) * mean_edges},
        samples=g.n,
    )


def check_density(g, p, samples, seed):
    """Edge counts across sampled disjoint pairs (X, Y) stay within
    4*sqrt(|X||Y|p) + 4 of the mean |X||Y|p.

    The 4-sigma-plus-4 slack is an engineering surrogate for the usual
    asymptotic lower-order term; it is wide enough that a true binomial
    count fails with probability ~1e-4 per sample, yet tight enough to
    catch planted density anomalies.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = SplitMix64(seed)
    pairs = []
    ok = True
    for _ in range(samples):
        if g.n < 2:
            break
        nx = 1 + rng.next_below(max(g.n // 2, 1))
        ny = 1 + rng.next_below(max(g.n - nx, 1))
        chosen = _sample_prefix(rng, g.n, nx + ny)
        xs = VertexSet.from_members(g.n, chosen[:nx])
        ys = VertexSet.from_members(g.n, chosen[nx:])
        mu = nx * ny * p
        bound = 4.0 * math.sqrt(mu) + 4.0
        obs = cross_edges(g, xs, ys)
        pairs.append({"nx": nx, "ny": ny, "observed": obs,
                      "expected": mu, "bound": bound})
        ok = ok and abs(obs - mu) <= bound
    if not pairs:
        return CheckReport("density", True, "not_applicable",
                           {"pairs": []}, {"rule": "|e(X,Y) - mu| <= 4*sqrt(mu)+4"},
                           0, surrogate=True)
    return CheckReport(
        name="density",
        passed=ok,
        status="pass" if ok else "fail",
        observed={"pairs": pairs},
        threshold={"rule": "|e(X,Y) - mu| <= 4*sqrt(mu)+4"},
        samples=len(pairs),
        surrogate=True,
    )


def _measure_sets(g, lo, hi, bound_for, samples, seed, exhaustive):
    """Neighbourhood sizes vs bounds for sampled (or all) sets in a size range."""
    evaluated = []
    if lo > hi:
        return evaluated
    if exhaustive:
        if g.n > 20:
            raise ValueError("exhaustive mode is limited to n <= 20")
        for size in range(lo, hi + 1):
            for combo in combinations(range(g.n), size):
                xs = VertexSet.from_members(g.n, combo)
                evaluated.append({"size": size,
                                  "nbrs": len(neighborhood(g, xs)),
                                  "bound": bound_for(size)})
    else:
        rng = SplitMix64(seed)
        for _ in range(samples):
            size = lo + rng.next_below(hi - lo + 1)
            xs = VertexSet.from_members(g.n, _sample_prefix(rng, g.n, size))
            evaluated.append({"size": size,
                              "nbrs": len(neighborhood(g, xs)),
                              "bound": bound_for(size)})
    return evaluated


def _expansion_report(name, g, sizes_range, bound_for, samples, seed,
                      exhaustive, extra_fail=False, extra_observed=None,
                      extra_threshold=None):
    lo, hi = sizes_range
    hi = min(hi, g.n - 1)
    evaluated = _measure_sets(g, lo, hi, bound_for, samples, seed, exhaustive)
    sets_ok = all(e["nbrs"] >= e["bound"] for e in evaluated)
    if extra_fail or not sets_ok:
        status = "fail"
    elif not evaluated:
        status = "not_applicable"
    else:
        status = "pass"
    observed = {"sets": evaluated}
    threshold = {"size_lo": lo, "size_hi": hi}
    if extra_observed:
        observed.update(extra_observed)
    if extra_threshold:
        threshold.update(extra_threshold)
    return CheckReport(name, status != "fail", status, observed, threshold,
                       len(evaluated))


def check_small_expansion(gprime, p, eps, samples=50, seed=0,
                          exhaustive=False):
    """|N(X)| >= (1/2 + eps) |X| n p for sampled small sets.

    Admissible sizes run up to (log n)^(-1/4) / p -- the regime where a
    residual graph of a bounded attack still expands each small set by a
    near-degree factor.  Sizes above n-1 are clipped; an empty range (p too
    large for this n) yields status not_applicable.
    """
    if gprime.n < 2 or p <= 0:
        return CheckReport("small_expansion", True, "not_applicable",
                           {"sets": []}, {}, 0)
    max_size = math.floor(math.log(gprime.n) ** -0.25 / p)
    bound = lambda size: (0.5 + eps) * size * gprime.n * p
    report = _expansion_report("small_expansion", gprime, (1, max_size),
                               bound, samples, seed, exhaustive)
    report.threshold["rule"] = "|N(X)| >= (0.5+eps)*|X|*n*p"
    return report


def check_large_expansion(gprime, eps, samples=50, seed=0, exhaustive=False):
    """|N(X)| >= (1/2 + eps) n for sampled mid-sized sets, plus connectivity.

    Sizes run from n / sqrt(log n) up to eps * n / 2.  The connectivity
    clause is always evaluated, so a disconnected graph fails even when the
    size range is empty (e.g. two disjoint cliques at small n).
    """
    n = gprime.n
    if n < 3:
        lo, hi = 1, 0
    else:
        lo = math.ceil(n / math.sqrt(math.log(n)))
        hi = math.floor(eps * n / 2.0)
    is_conn = connected(gprime)
    report = _expansion_report(
        "large_expansion", gprime, (lo, hi),
        lambda size: (0.5 + eps) * n,
        samples, seed, exhaustive,
        extra_fail=not is_conn,
        extra_observed={"connected": is_conn},
        extra_threshold={"connected": True})
    report.threshold["rule"] = "|N(X)| >= (0.5+eps)*n and connected"
    return report


def run_battery(g, p, eps, samples=50, seed=0):
    """The full audit: degrees, density, small and large expansion."""
    return [
        check_degrees(g, p, eps),
        check_density(g, p, samples, SplitMix64(seed ^ 1).next_u64()),
        check_small_expansion(g, p, eps, samples, SplitMix64(seed ^ 2).next_u64()),
        check_large_expansion(g, eps, samples, SplitMix64(seed ^ 3).next_u64()),
    ]
