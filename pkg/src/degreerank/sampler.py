"""Random-walk sampling and network-parameter estimation.

A simple random walk (uniform neighbor steps, burn-in, thinning) produces
degree-biased observations. From one walk sample we estimate:

  network size   -- degree-corrected collision estimator,
                    n = ((R-1)/R) * psi1 * psi_inv / (2C), where psi1 sums
                    observed degrees, psi_inv sums their reciprocals, and C
                    counts colliding observation pairs;
  average degree -- harmonic mean of observed degrees, unbiased under the
                    walk's degree-proportional stationary distribution;
  degree bounds  -- min / max degree seen in the sample.

fit_params then turns (n, k_min, k_max, d_avg) into the power-law constants
(gamma, c) and the rank-curve coefficients (a, b).

The two sum-based estimators run in exact rational arithmetic and convert
to float once at the end, so algebraic identities (e.g. exactness on regular
graphs) hold exactly.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import isfinite

import numpy as np

from degreerank import _kernels
from degreerank.errors import (
    DegenerateDegrees,
    InsufficientGraph,
    InvalidConfig,
    NoCollisions,
    NonScaleFree,
    StuckWalk,
    ValidationError,
)
from degreerank.graph_core import Graph

DEFAULT_BURN_IN = 1000
DEFAULT_THINNING = 10


@dataclass(frozen=True)
class WalkConfig:
    """Walk parameters. Defaults: 1000-step burn-in, thinning every 10 steps."""

    sample_count: int
    rng_seed: int
    burn_in_steps: int = DEFAULT_BURN_IN
    thinning_interval: int = DEFAULT_THINNING
    start_node: int | None = None

    def validate(self) -> None:
        if self.sample_count < 2:
            raise InvalidConfig("sample_count must be >= 2 (collision pairs needed)")
        if self.thinning_interval < 1:
            raise InvalidConfig("thinning_interval must be >= 1")
        if self.burn_in_steps < 0:
            raise InvalidConfig("burn_in_steps must be >= 0")
        if self.rng_seed < 0:
            raise InvalidConfig("rng_seed must be non-negative")

    @property
    def total_steps(self) -> int:
        return self.burn_in_steps + self.sample_count * self.thinning_interval

    def metadata(self) -> dict:
        return {
            "seed": self.rng_seed,
            "burn_in": self.burn_in_steps,
            "thinning": self.thinning_interval,
            "sample_count": self.sample_count,
        }


@dataclass(frozen=True)
class WalkSample:
    """Ordered (node id, degree) observations retained from one walk."""

    node_ids: np.ndarray
    degrees: np.ndarray

    @property
    def observations(self) -> list[tuple[int, int]]:
        return [(int(u), int(d)) for u, d in zip(self.node_ids, self.degrees)]

    @property
    def unique_node_count(self) -> int:
        return len(np.unique(self.node_ids))

    def __len__(self) -> int:
        return len(self.node_ids)


@dataclass(frozen=True)
class NetworkParams:
    """Estimated network parameters and the derived rank-curve constants."""

    n_est: float
    k_min: int
    k_max: int
    d_avg: float
    gamma: float
    c: float
    a: float
    b: float
    walk_meta: dict | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        doc = {
            "n_est": self.n_est,
            "k_min": self.k_min,
            "k_max": self.k_max,
            "d_avg": self.d_avg,
            "gamma": self.gamma,
            "c": self.c,
            "a": self.a,
            "b": self.b,
        }
        if self.walk_meta is not None:
            doc.update(self.walk_meta)
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "NetworkParams":
        meta_keys = ("seed", "burn_in", "thinning", "sample_count")
        meta = {k: doc[k] for k in meta_keys if k in doc}
        return cls(
            n_est=float(doc["n_est"]),
            k_min=int(doc["k_min"]),
            k_max=int(doc["k_max"]),
            d_avg=float(doc["d_avg"]),
            gamma=float(doc["gamma"]),
            c=float(doc["c"]),
            a=float(doc["a"]),
            b=float(doc["b"]),
            walk_meta=meta or None,
        )


def random_walk(g: Graph, cfg: WalkConfig) -> WalkSample:
    """Run a simple random walk on g and retain cfg.sample_count observations.

    Each step moves to a uniformly random neighbor. The first
    cfg.burn_in_steps steps are discarded; afterwards the node reached by
    every cfg.thinning_interval-th step is retained. Deterministic given
    (g, cfg).
    """
    cfg.validate()
    if g.edge_count == 0:
        raise InsufficientGraph("graph has no edges")
    if cfg.start_node is None:
        start = -1
    else:
        if not 0 <= cfg.start_node < g.node_count:
            raise ValidationError(f"start_node {cfg.start_node} out of range")
        if g.degree(cfg.start_node) == 0:
            raise StuckWalk(f"start node {cfg.start_node} has degree 0")
        start = cfg.start_node
    indptr, indices = g.csr()
    nodes = _kernels.walk_nodes(
        indptr,
        indices,
        start,
        cfg.burn_in_steps,
        cfg.thinning_interval,
        cfg.sample_count,
        cfg.rng_seed,
    )
    return WalkSample(node_ids=nodes, degrees=g.degrees[nodes])


def collision_count(s: WalkSample) -> int:
    """Number of observation pairs i < j that landed on the same node."""
    return sum(c * (c - 1) // 2 for c in Counter(s.node_ids.tolist()).values())


def estimate_size(s: WalkSample) -> float:
    """Collision-based network-size estimate from a degree-biased sample.

    Raises NoCollisions when no node repeats; the caller must enlarge the
    sample.
    """
    r = len(s)
    if r < 2:
        raise ValidationError("size estimation needs at least 2 observations")
    c = collision_count(s)
    if c == 0:
        raise NoCollisions(f"no collisions among {r} observations")
    psi1 = int(s.degrees.sum())
    psi_inv = sum(Fraction(1, int(d)) for d in s.degrees)
    return float(Fraction(r - 1, r) * psi1 * psi_inv / (2 * c))


def estimate_avg_degree(s: WalkSample) -> float:
    """Harmonic mean of observed degrees; exact on regular graphs."""
    r = len(s)
    if r < 1:
        raise ValidationError("average-degree estimation needs observations")
    return float(r / sum(Fraction(1, int(d)) for d in s.degrees))


def estimate_degree_bounds(s: WalkSample) -> tuple[int, int]:
    """(min, max) degree present in the sample."""
    if len(s) < 1:
        raise ValidationError("degree bounds need observations")
    return int(s.degrees.min()), int(s.degrees.max())


def fit_params(
    n_est: float,
    k_min: int,
    k_max: int,
    d_avg: float,
    walk_meta: dict | None = None,
) -> NetworkParams:
    """Derive the power-law and rank-curve constants from the four estimates.

    gamma = 2 + k_min / (d_avg - k_min)
    c     = (gamma - 1) / (k_min^(1-gamma) - k_max^(1-gamma))
    a     = n_est / (k_min^(1-gamma) - k_max^(1-gamma))
    b     = 1 - n_est * k_max^(1-gamma) / (k_min^(1-gamma) - k_max^(1-gamma))

    so that the predicted rank a * k^(1-gamma) + b is exactly 1 at k_max and
    exactly n_est + 1 at k_min.
    """
    if n_est <= 0:
        raise ValidationError(f"n_est must be positive, got {n_est}")
    if k_min < 1:
        raise DegenerateDegrees(f"k_min must be >= 1, got {k_min}")
    # checked before the bounds so a regular graph (k_min == k_max == d_avg)
    # reports the actual problem: no power-law exponent exists
    if d_avg <= k_min:
        raise NonScaleFree(f"d_avg={d_avg} <= k_min={k_min}: exponent undefined")
    if k_min >= k_max:
        raise DegenerateDegrees(f"need k_min < k_max, got ({k_min}, {k_max})")

    gamma = 2.0 + k_min / (d_avg - k_min)
    denom = k_min ** (1.0 - gamma) - k_max ** (1.0 - gamma)
    if not isfinite(gamma) or denom <= 0.0:
        raise NonScaleFree(f"non-finite exponent fit (gamma={gamma})")
    c = (gamma - 1.0) / denom
    a = n_est / denom
    b = 1.0 - n_est * k_max ** (1.0 - gamma) / denom
    return NetworkParams(
        n_est=float(n_est),
        k_min=int(k_min),
        k_max=int(k_max),
        d_avg=float(d_avg),
        gamma=gamma,
        c=c,
        a=a,
        b=b,
        walk_meta=walk_meta,
    )


def estimate_all(g: Graph, cfg: WalkConfig) -> NetworkParams:
    """One walk, all four estimates, fitted constants.

    The walk configuration is recorded in the result's metadata.
    """
    sample = random_walk(g, cfg)
    n_est = estimate_size(sample)
    d_avg = estimate_avg_degree(sample)
    k_min, k_max = estimate_degree_bounds(sample)
    return fit_params(n_est, k_min, k_max, d_avg, walk_meta=cfg.metadata())


def params_from_histogram(hist) -> NetworkParams:
    """Ground-truth fit: feed exact histogram totals to fit_params."""
    return fit_params(
        n_est=float(hist.node_count),
        k_min=hist.k_min_true,
        k_max=hist.k_max_true,
        d_avg=hist.d_avg_true,
        walk_meta={"mode": "ground_truth"},
    )


def save_params(p: NetworkParams, path, manifest: str | None = None) -> None:
    doc = p.to_dict()
    if manifest is not None:
        doc["manifest"] = manifest
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_params(path) -> NetworkParams:
    with open(path, "r", encoding="utf-8") as fh:
        return NetworkParams.from_dict(json.load(fh))


def estimate_with_retry(
    g: Graph, cfg: WalkConfig, max_doublings: int = 5
) -> tuple[NetworkParams, int]:
    """estimate_all, doubling sample_count on NoCollisions.

    Returns (params, total walk steps used across attempts). Re-raises
    NoCollisions once the doubling cap is exhausted.
    """
    steps_used = 0
    attempt = cfg
    for _ in range(max_doublings + 1):
        steps_used += attempt.total_steps
        try:
            return estimate_all(g, attempt), steps_used
        except NoCollisions:
            attempt = replace(attempt, sample_count=attempt.sample_count * 2)
    raise NoCollisions(
        f"no collisions after {max_doublings} doublings "
        f"({steps_used} walk steps used); increase the sample budget"
    )
