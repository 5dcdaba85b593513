"""Barabási–Albert preferential-attachment network generation.

Growth starts from n0 disconnected seed nodes. Each arriving node links to m
distinct existing nodes with probability proportional to their degree; while
total degree is still zero (the first arrival) targets are drawn uniformly.
Generation is deterministic in the seed: the same config always yields the
same edge set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from degreerank import _kernels
from degreerank.errors import InvalidConfig
from degreerank.graph_core import Graph, build_graph


@dataclass(frozen=True)
class BaConfig:
    """Generation parameters: n total nodes, n0 seed nodes, m links per arrival."""

    n: int
    n0: int
    m: int
    rng_seed: int

    def validate(self) -> None:
        # m distinct targets must exist from the first step on
        if not 1 <= self.m <= self.n0 < self.n:
            raise InvalidConfig(
                f"need 1 <= m <= n0 < n, got m={self.m}, n0={self.n0}, n={self.n}"
            )
        if self.rng_seed < 0:
            raise InvalidConfig("rng_seed must be non-negative")


def generate_ba(cfg: BaConfig) -> Graph:
    """Generate a BA graph with exactly (n - n0) * m edges.

    Every node added after the seed phase ends with degree >= m. Raises
    InvalidConfig if the config invariants do not hold.
    """
    cfg.validate()
    src, dst = _kernels.ba_edges(cfg.n, cfg.n0, cfg.m, cfg.rng_seed)
    # build_graph re-checks the simple-graph invariants on the kernel output
    return build_graph(np.column_stack((src, dst)))
