import hashlib
import math
from itertools import combinations

import pytest

from hamlab.edgelist import dumps_edgelist
from hamlab.gnp import GnpParams, decode_pair, sample_gnp, sprinkle
from hamlab.graphs import complete_graph, subtract, union

# Regression fixtures: exact edge sets frozen by hashing the canonical
# edge-list text.  Any change to the PRNG, the skip-sampling, or the pair
# decoding shows up here first.
FROZEN_SAMPLES = [
    (100, 0.1, 0, 527, "7602ff49f5cc226f51c9f6892c93ababc2f402d4b8a968feb84083f150421672"),
    (100, 0.1, 1, 515, "08a15942616f75880cfadd37af1d74ba2bcdcc3822665d06cff7be3adb0bf272"),
    (57, 0.33, 99, 496, "7e727fb973069058d0a61bcb4762756b79a1718a8854771be0892824141f478b"),
    (80, 0.7, 5, 2205, "368742f7035dae88e421a2a9dab0914e1e368967ea4df2c9f9ebc49a81362648"),
]


def test_parameter_validation():
    with pytest.raises(ValueError):
        GnpParams(-1, 0.5, 0)
    with pytest.raises(ValueError):
        GnpParams(10, -0.1, 0)
    with pytest.raises(ValueError):
        GnpParams(10, 1.5, 0)


def test_degenerate_probabilities():
    assert sample_gnp(GnpParams(30, 0.0, 7)).m == 0
    assert sample_gnp(GnpParams(30, 1.0, 7)) == complete_graph(30)
    assert sample_gnp(GnpParams(0, 0.5, 1)).n == 0
    assert sample_gnp(GnpParams(1, 0.5, 1)).m == 0


def test_frozen_samples():
    for n, p, seed, m, digest in FROZEN_SAMPLES:
        g = sample_gnp(GnpParams(n, p, seed))
        assert g.m == m
        assert hashlib.sha256(dumps_edgelist(g).encode()).hexdigest() == digest


def test_determinism_and_seed_sensitivity():
    a = sample_gnp(GnpParams(200, 0.05, 11))
    b = sample_gnp(GnpParams(200, 0.05, 11))
    c = sample_gnp(GnpParams(200, 0.05, 12))
    assert a == b
    assert a != c


def test_edge_counts_concentrate():
    # m ~ Binomial(C(n,2), p); every fixed seed within 4 sigma, and the
    # 200-seed mean within 5 standard errors of the expectation
    n, p = 1000, 0.05
    pairs = n * (n - 1) // 2
    mu = pairs * p
    sigma = math.sqrt(pairs * p * (1 - p))
    ms = [sample_gnp(GnpParams(n, p, seed)).m for seed in range(200)]
    assert all(abs(m - mu) < 4 * sigma for m in ms)
    assert abs(sum(ms) / len(ms) - mu) < 5 * sigma / math.sqrt(len(ms))


def test_dense_path_agrees_with_complement_counts():
    # p > 0.5 goes through the complement sampler; the counts must still
    # concentrate around the same binomial mean
    n, p = 300, 0.8
    pairs = n * (n - 1) // 2
    mu, sigma = pairs * p, math.sqrt(pairs * p * (1 - p))
    for seed in range(20):
        m = sample_gnp(GnpParams(n, p, seed)).m
        assert abs(m - mu) < 4 * sigma


def test_decode_pair_enumerates_canonical_order():
    for n in (2, 5, 10, 37):
        expected = list(combinations(range(n), 2))
        got = [decode_pair(k, n) for k in range(n * (n - 1) // 2)]
        assert got == expected
    with pytest.raises(ValueError, match="out of range"):
        decode_pair(10, 5)


def test_sprinkle_partitions_edges():
    g = sample_gnp(GnpParams(120, 0.2, 3))
    sp = sprinkle(g, 0.3, seed=9)
    assert sp.kept.m + sp.rest.m == g.m
    assert union(sp.kept, sp.rest) == g
    assert subtract(sp.kept, g).m == 0  # kept edges all come from g
    # deterministic per seed, different across seeds
    again = sprinkle(g, 0.3, seed=9)
    assert again.kept == sp.kept and again.rest == sp.rest
    other = sprinkle(g, 0.3, seed=10)
    assert other.kept != sp.kept


def test_sprinkle_fraction_boundaries():
    g = sample_gnp(GnpParams(60, 0.3, 1))
    all_kept = sprinkle(g, 1.0, seed=4)
    assert all_kept.kept == g and all_kept.rest.m == 0
    none_kept = sprinkle(g, 0.0, seed=4)
    assert none_kept.kept.m == 0 and none_kept.rest == g
    with pytest.raises(ValueError):
        sprinkle(g, -0.1, seed=4)
    with pytest.raises(ValueError):
        sprinkle(g, 1.1, seed=4)


def test_sprinkle_kept_counts():
    # kept size ~ Binomial(m, delta); frozen counts for two seeds plus a
    # 4-sigma window over fifty
    k100 = complete_graph(100)
    assert sprinkle(k100, 0.3, seed=7).kept.m == 1513
    assert sprinkle(k100, 0.3, seed=8).kept.m == 1415
    mu = k100.m * 0.3
    sigma = math.sqrt(k100.m * 0.3 * 0.7)
    for seed in range(50):
        assert abs(sprinkle(k100, 0.3, seed=seed).kept.m - mu) < 4 * sigma
