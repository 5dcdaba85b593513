import numpy as np
import pytest

from degreerank import BaConfig, degree_histogram, generate_ba, save_edge_list
from degreerank.errors import InvalidConfig


def test_forced_first_step():
    # with n0 == m the first arrival must link to every seed node
    g = generate_ba(BaConfig(n=11, n0=10, m=10, rng_seed=7))
    assert g.edge_count == 10
    assert g.degree(10) == 10
    assert all(g.degree(v) == 1 for v in range(10))


def test_edge_count_identity():
    g = generate_ba(BaConfig(n=1000, n0=10, m=10, rng_seed=3))
    assert g.node_count == 1000
    assert g.edge_count == 990 * 10
    assert int(g.degrees.sum()) == 19800


@pytest.mark.parametrize("seed", [0, 1, 99])
def test_non_seed_degree_lower_bound(seed):
    g = generate_ba(BaConfig(n=500, n0=10, m=10, rng_seed=seed))
    assert (g.degrees[10:] >= 10).all()
    # the last arrival is never a target afterwards
    assert g.degree(499) == 10


def test_histogram_of_ba_has_min_degree_at_most_m():
    g = generate_ba(BaConfig(n=1000, n0=10, m=10, rng_seed=3))
    hist = degree_histogram(g)
    # seed nodes may end below m, everyone else is >= m
    assert hist.k_min_true <= 10
    assert hist.k_max_true > 10


def test_deterministic_same_seed(tmp_path):
    cfg = BaConfig(n=800, n0=10, m=5, rng_seed=1234)
    g1, g2 = generate_ba(cfg), generate_ba(cfg)
    assert g1 == g2
    f1, f2 = tmp_path / "a.txt", tmp_path / "b.txt"
    save_edge_list(g1, f1)
    save_edge_list(g2, f2)
    assert f1.read_bytes() == f2.read_bytes()


def test_different_seeds_differ():
    a = generate_ba(BaConfig(n=800, n0=10, m=5, rng_seed=1))
    b = generate_ba(BaConfig(n=800, n0=10, m=5, rng_seed=2))
    assert a != b


@pytest.mark.parametrize(
    "n,n0,m",
    [(5, 10, 10), (10, 10, 10), (100, 5, 6), (100, 5, 0)],
)
def test_invalid_configs(n, n0, m):
    with pytest.raises(InvalidConfig):
        generate_ba(BaConfig(n=n, n0=n0, m=m, rng_seed=0))


def test_degree_ccdf_roughly_linear_on_loglog():
    # power-law sanity on a large instance: CCDF slope near 1 - gamma = -2
    g = generate_ba(BaConfig(n=100_000, n0=10, m=10, rng_seed=5))
    hist = degree_histogram(g)
    ks = np.array(sorted(hist.counts))
    counts = np.array([hist.counts[int(k)] for k in ks], dtype=float)
    ccdf = counts[::-1].cumsum()[::-1] / g.node_count
    mid = (ks >= 20) & (ccdf * g.node_count >= 100)
    x, y = np.log10(ks[mid]), np.log10(ccdf[mid])
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (slope * x + intercept)
    r2 = 1 - residuals.var() / y.var()
    assert -2.6 < slope < -1.4
    assert r2 > 0.98
