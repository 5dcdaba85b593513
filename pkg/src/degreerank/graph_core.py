"""Immutable undirected simple graph plus edge-list persistence.

The graph is stored in compressed sparse row form (``indptr``/``indices``)
with neighbor lists sorted per node, which makes equality checks and the
edge-list round-trip canonical and lets the sampling kernels walk the
adjacency without conversion.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from degreerank.errors import (
    DuplicateEdge,
    EmptyEdgeSet,
    ParseError,
    SelfLoop,
    ValidationError,
)


class Graph:
    """Undirected simple graph over dense node ids ``0..node_count-1``.

    Instances are immutable after construction and safe to share across
    threads. Use :func:`build_graph` or :func:`load_edge_list` instead of
    calling the constructor directly; they validate the simple-graph
    invariants (no self-loops, no duplicate edges).
    """

    __slots__ = ("_indptr", "_indices", "_degrees")

    def __init__(self, indptr: np.ndarray, indices: np.ndarray):
        self._indptr = indptr
        self._indices = indices
        self._degrees = np.diff(indptr)
        for arr in (self._indptr, self._indices, self._degrees):
            arr.flags.writeable = False

    @property
    def node_count(self) -> int:
        return len(self._indptr) - 1

    @property
    def edge_count(self) -> int:
        return len(self._indices) // 2

    @property
    def degrees(self) -> np.ndarray:
        """Read-only int64 array of all node degrees."""
        return self._degrees

    def degree(self, v: int) -> int:
        self._check_node(v)
        return int(self._degrees[v])

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of ``v`` (read-only view)."""
        self._check_node(v)
        return self._indices[self._indptr[v] : self._indptr[v + 1]]

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """The raw (indptr, indices) arrays, for the walk kernels."""
        return self._indptr, self._indices

    def edges(self) -> np.ndarray:
        """All edges as an (E, 2) array with u < v, sorted lexicographically."""
        src = np.repeat(np.arange(self.node_count, dtype=np.int64), self._degrees)
        mask = src < self._indices
        return np.column_stack((src[mask], self._indices[mask]))

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self.node_count:
            raise ValidationError(f"node {v} out of range [0, {self.node_count})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._indptr, other._indptr) and np.array_equal(
            self._indices, other._indices
        )

    def __hash__(self):
        return hash((self.node_count, self.edge_count))

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


@dataclass(frozen=True)
class DegreeHistogram:
    """Node counts per degree value, with the derived ground-truth totals."""

    counts: dict[int, int]
    node_count: int
    k_min_true: int
    k_max_true: int
    d_avg_true: float


def build_graph(edges) -> Graph:
    """Build a validated Graph from unordered node-id pairs.

    ``edges`` may be any (E, 2) array-like: a list of pairs or a numpy
    array. Node count is 1 + the largest id seen. Self-loops and duplicate
    pairs (in either orientation) are rejected.
    """
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        raise EmptyEdgeSet()
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValidationError("edges must be pairs of node ids")
    if arr.min() < 0:
        raise ValidationError("node ids must be non-negative")

    loops = arr[:, 0] == arr[:, 1]
    if loops.any():
        raise SelfLoop(int(arr[loops.argmax(), 0]))

    lo = np.minimum(arr[:, 0], arr[:, 1])
    hi = np.maximum(arr[:, 0], arr[:, 1])
    order = np.lexsort((hi, lo))
    lo, hi = lo[order], hi[order]
    dup = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
    if dup.any():
        i = int(dup.argmax())
        raise DuplicateEdge(int(lo[i]), int(hi[i]))

    n = int(hi.max()) + 1
    counts = np.bincount(lo, minlength=n) + np.bincount(hi, minlength=n)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    src = np.concatenate((lo, hi))
    dst = np.concatenate((hi, lo))
    order = np.lexsort((dst, src))
    return Graph(indptr, dst[order])


def degree_histogram(g: Graph) -> DegreeHistogram:
    """Exact degree histogram and ground-truth k_min / k_max / d_avg."""
    bins = np.bincount(g.degrees)
    counts = {int(k): int(c) for k, c in enumerate(bins) if c > 0}
    total = int(g.degrees.sum())
    return DegreeHistogram(
        counts=counts,
        node_count=g.node_count,
        k_min_true=min(counts),
        k_max_true=max(counts),
        d_avg_true=total / g.node_count,
    )


def load_edge_list(path) -> Graph:
    """Read a whitespace-separated "u v" edge list; '#' lines are comments."""
    pairs = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens = stripped.split()
            if len(tokens) != 2:
                raise ParseError(lineno, f"expected 2 fields, got {len(tokens)}")
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(lineno, f"non-integer node id in {stripped!r}")
            if u < 0 or v < 0:
                raise ParseError(lineno, "negative node id")
            pairs.append((u, v))
    if not pairs:
        raise EmptyEdgeSet()
    return build_graph(pairs)


def save_edge_list(g: Graph, path, comments: tuple[str, ...] = ()) -> None:
    """Write each undirected edge once as "u v" with u < v, sorted.

    ``comments`` are emitted first as '#'-prefixed lines. The comment-free
    output is the canonical form: saving a loaded graph reproduces it.
    """
    buf = io.StringIO()
    for text in comments:
        buf.write(f"# {text}\n")
    for u, v in g.edges():
        buf.write(f"{u} {v}\n")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(buf.getvalue())
