"""Binomial random graphs and the two-phase edge split.

``sample_gnp`` draws G(n, p) by geometric skipping over the lexicographic
pair order: repeatedly draw a uniform u in [0,1) from SplitMix64(seed) and
jump ahead floor(log1p(-u) / log1p(-p)) pairs, so work is O(edges), not
O(n^2).  For p > 1/2 the same walk samples the complement at 1 - p and the
result is inverted, keeping the draw count proportional to the sparser
side.  Pair index -> (u, v) decoding is exact integer arithmetic (isqrt),
so results are identical on every platform.

``sprinkle`` splits an existing graph into two edge-disjoint halves by an
independent coin per edge in canonical order.  The kept half carries each
edge with the given probability, which is how a (1-delta)-thinned graph
plus a delta reserve is produced for two-phase solving.

Both functions consume the SplitMix64 stream in a fixed documented order,
and the vectorized implementations below are bit-compatible with the
scalar generator in :mod:`hamlab.rng` (tested).
"""

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, build_graph, complete_graph, empty_graph
from .rng import MASK64

__all__ = ["GnpParams", "SplitResult", "sample_gnp", "sprinkle", "decode_pair"]

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


@dataclass(frozen=True)
class GnpParams:
    n: int
    p: float
    seed: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative, got %d" % self.n)
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1], got %r" % (self.p,))


@dataclass(frozen=True)
class SplitResult:
    """Edge-disjoint split of a graph: kept ∪ rest = original."""
    kept: Graph
    rest: Graph


def _stream_u64(seed, start, count):
    """Vectorized SplitMix64: outputs at stream positions start..start+count-1.

    Position k (0-based) of the stream for `seed` is the value returned by
    the (k+1)-th call to SplitMix64(seed).next_u64().  The state sequence is
    an arithmetic progression, which is what makes batching possible.
    """
    with np.errstate(over="ignore"):
        idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
        z = np.uint64(seed & MASK64) + idx * _GAMMA
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
        return z ^ (z >> np.uint64(31))


def _stream_floats(seed, start, count):
    return (_stream_u64(seed, start, count) >> np.uint64(11)) * (2.0 ** -53)


def _pair_base(u, n):
    # number of pairs (a, b), a < b, with a < u  (lexicographic order)
    return u * (2 * n - u - 1) // 2


def decode_pair(idx, n):
    """Exact inverse of the lexicographic pair index for 0 <= idx < C(n,2)."""
    if not 0 <= idx < n * (n - 1) // 2:
        raise ValueError("pair index %d out of range for n=%d" % (idx, n))
    d = (2 * n - 1) ** 2 - 8 * idx
    s = math.isqrt(d)
    u = (2 * n - 1 - s) // 2
    while _pair_base(u + 1, n) <= idx:
        u += 1
    while _pair_base(u, n) > idx:
        u -= 1
    v = u + 1 + (idx - _pair_base(u, n))
    return u, v


def _decode_pairs(idx, n):
    """Vectorized decode_pair; exact via float sqrt plus integer correction."""
    d = (2 * n - 1) ** 2 - 8 * idx
    s = np.floor(np.sqrt(d.astype(np.float64))).astype(np.int64)
    s = np.minimum(s, 2 * n - 1)
    while True:
        over = (s + 1) ** 2 <= d
        if not over.any():
            break
        s[over] += 1
    while True:
        under = s ** 2 > d
        if not under.any():
            break
        s[under] -= 1
    u = (2 * n - 1 - s) // 2
    while True:
        low = _pair_base(u + 1, n) <= idx
        if not low.any():
            break
        u[low] += 1
    while True:
        high = _pair_base(u, n) > idx
        if not high.any():
            break
        u[high] -= 1
    v = u + 1 + (idx - _pair_base(u, n))
    return u, v


def _skip_sample_indices(n, p, seed):
    """Sorted pair indices selected by the geometric-skip walk at rate p."""
    total = n * (n - 1) // 2
    log_q = math.log1p(-p)
    out = []
    pos = 0          # stream position already consumed
    idx = -1         # last selected pair index
    # Expected draws = total * p; batch a little above that and continue
    # until the walk overshoots the index range.
    batch = max(64, int(total * p * 1.2) + 16)
    while True:
        u = _stream_floats(seed, pos, batch)
        pos += batch
        skips = np.floor(np.log1p(-u) / log_q).astype(np.int64)
        steps = idx + np.cumsum(skips + 1)
        inside = steps < total
        if inside.all():
            out.append(steps)
            idx = int(steps[-1])
            batch = max(64, int((total - 1 - idx) * p * 1.2) + 16)
            continue
        out.append(steps[inside])
        return np.concatenate(out) if out else np.empty(0, dtype=np.int64)


def sample_gnp(params):
    """Sample an Erdos-Renyi G(n, p) graph, deterministically from the seed."""
    n, p, seed = params.n, params.p, params.seed
    if n * (n - 1) // 2 == 0 or p == 0.0:
        return empty_graph(n)
    if p == 1.0:
        return complete_graph(n)
    if p <= 0.5:
        idx = _skip_sample_indices(n, p, seed)
    else:
        hole = _skip_sample_indices(n, 1.0 - p, seed)
        keep = np.ones(n * (n - 1) // 2, dtype=bool)
        keep[hole] = False
        idx = np.flatnonzero(keep)
    if len(idx) == 0:
        return empty_graph(n)
    u, v = _decode_pairs(idx, n)
    return build_graph(n, np.column_stack((u, v)))


def sprinkle(g, delta, seed):
    """Split g's edges into (kept, rest) with independent P(kept) = delta.

    Coins are assigned to edges in canonical order (u < v, lexicographic),
    one SplitMix64 float per edge, so the split is a pure function of
    (edge set, delta, seed).
    """
    if not 0.0 <= delta <= 1.0:
        raise ValueError("delta must lie in [0, 1], got %r" % (delta,))
    edges = g.edge_array()
    if g.m == 0:
        return SplitResult(empty_graph(g.n), empty_graph(g.n))
    coins = _stream_floats(seed, 0, g.m) < delta
    return SplitResult(build_graph(g.n, edges[coins]),
                       build_graph(g.n, edges[~coins]))
