import numpy as np
import pytest

from degreerank import BaConfig, build_graph, generate_ba


def random_edge_set(rng: np.random.Generator, max_nodes: int = 1000) -> list[tuple[int, int]]:
    """A non-empty simple edge set on up to max_nodes dense-ish node ids."""
    n = int(rng.integers(2, max_nodes + 1))
    cap = n * (n - 1) // 2
    target = int(rng.integers(1, min(4 * n, cap) + 1))
    edges: set[tuple[int, int]] = set()
    while len(edges) < target:
        u, v = int(rng.integers(0, n)), int(rng.integers(0, n))
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return sorted(edges)


@pytest.fixture(scope="session")
def path3():
    return build_graph([(0, 1), (1, 2)])


@pytest.fixture(scope="session")
def complete4():
    return build_graph([(u, v) for u in range(4) for v in range(u + 1, 4)])


@pytest.fixture(scope="session")
def ba_2000():
    return generate_ba(BaConfig(n=2000, n0=10, m=10, rng_seed=42))
