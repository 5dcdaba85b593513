"""Degree-rank prediction, exact ranking, and error analytics.

The predicted rank of a degree-k node is the closed-form curve

    rank(k) = a * k^(1-gamma) + b

whose constants come from sampler.fit_params; it equals 1 at k_max and
n_est + 1 at k_min and decreases strictly in between for gamma > 1. The
actual rank is competition-style: 1 + number of nodes with strictly greater
degree, so tied degrees share a rank. Predictions are reported unclamped;
rank_clamp is available for presentation.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass

import numpy as np

from degreerank.errors import UnknownNode, ValidationError
from degreerank.graph_core import DegreeHistogram, Graph, degree_histogram
from degreerank.sampler import NetworkParams


@dataclass(frozen=True)
class RankRow:
    degree: int
    actual_rank: int
    predicted_rank: float
    abs_error: float


@dataclass(frozen=True)
class DegreeRankTable:
    """One row per distinct degree, ascending; ranks therefore descend."""

    rows: tuple[RankRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def degrees(self) -> list[int]:
        return [r.degree for r in self.rows]

    def abs_errors(self) -> np.ndarray:
        return np.array([r.abs_error for r in self.rows], dtype=np.float64)


@dataclass(frozen=True)
class ErrorReport:
    """Per-network aggregate: mean/std of row errors, and mean as % of size."""

    network_size: int
    average_error: float
    std_dev: float
    pct_error: float

    def to_dict(self) -> dict:
        return {
            "network_size": self.network_size,
            "average_error": self.average_error,
            "std_dev": self.std_dev,
            "pct_error": self.pct_error,
        }

    def summary_line(self) -> str:
        return (
            f"nodes={self.network_size} average_error={self.average_error:.2f} "
            f"std_dev={self.std_dev:.2f} pct_error={self.pct_error:.4f}%"
        )


def predict_rank(p: NetworkParams, k: float) -> float:
    """Closed-form predicted rank a * k^(1-gamma) + b. Requires k > 0."""
    if k <= 0:
        raise ValidationError(f"degree must be positive, got {k}")
    return p.a * float(k) ** (1.0 - p.gamma) + p.b


def rank_clamp(rank: float, p: NetworkParams) -> float:
    """Clamp a predicted rank into [1, n_est] (presentation aid, off by default)."""
    return min(max(rank, 1.0), p.n_est)


def exact_rank(g: Graph, u: int) -> int:
    """Competition rank of node u: 1 + count of strictly higher-degree nodes."""
    if not 0 <= u < g.node_count:
        raise UnknownNode(u, g.node_count)
    return int(np.count_nonzero(g.degrees > g.degrees[u])) + 1


def exact_rank_table(g: Graph) -> dict[int, int]:
    """Actual rank per distinct degree, in one histogram pass."""
    return rank_table_from_counts(degree_histogram(g).counts)


def rank_table_from_counts(counts: dict[int, int]) -> dict[int, int]:
    """rank(k) = 1 + sum of counts over degrees strictly greater than k."""
    table: dict[int, int] = {}
    above = 0
    for k in sorted(counts, reverse=True):
        table[k] = above + 1
        above += counts[k]
    return table


def report_from_table(table: DegreeRankTable, network_size: int) -> ErrorReport:
    """Aggregate row errors: equal weight per distinct degree, population std."""
    errors = table.abs_errors()
    average = float(errors.mean())
    return ErrorReport(
        network_size=network_size,
        average_error=average,
        std_dev=float(errors.std(ddof=0)),
        pct_error=average * 100.0 / network_size,
    )


def evaluate_histogram(
    hist: DegreeHistogram, p: NetworkParams
) -> tuple[DegreeRankTable, ErrorReport]:
    """Rank table and error report for a degree histogram.

    One row per distinct positive degree; degree-0 nodes (possible only in
    loaded graphs with id gaps) have no prediction and are skipped.
    """
    actual = rank_table_from_counts(hist.counts)
    rows = []
    for k in sorted(actual):
        if k <= 0:
            continue
        predicted = predict_rank(p, k)
        rows.append(
            RankRow(
                degree=k,
                actual_rank=actual[k],
                predicted_rank=predicted,
                abs_error=abs(actual[k] - predicted),
            )
        )
    table = DegreeRankTable(rows=tuple(rows))
    return table, report_from_table(table, hist.node_count)


def evaluate(g: Graph, p: NetworkParams) -> tuple[DegreeRankTable, ErrorReport]:
    """Rank table and error report for a graph against fitted parameters."""
    return evaluate_histogram(degree_histogram(g), p)


CSV_HEADER = ("degree", "actual_rank", "predicted_rank", "abs_error")


def save_rank_table(table: DegreeRankTable, path, comments: tuple[str, ...] = ()) -> None:
    """Write the table as CSV; floats keep full round-trip precision."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for text in comments:
            fh.write(f"# {text}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in table.rows:
            writer.writerow([r.degree, r.actual_rank, repr(r.predicted_rank), repr(r.abs_error)])


def load_rank_table(path) -> DegreeRankTable:
    rows = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        lines = [ln for ln in fh if not ln.startswith("#")]
    reader = csv.reader(lines)
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise ValidationError(f"unexpected rank-table header: {header}")
    for degree, actual, predicted, err in reader:
        rows.append(
            RankRow(
                degree=int(degree),
                actual_rank=int(actual),
                predicted_rank=float(predicted),
                abs_error=float(err),
            )
        )
    return DegreeRankTable(rows=tuple(rows))


def save_report(report: ErrorReport, path, manifest: str | None = None) -> None:
    doc = report.to_dict()
    if manifest is not None:
        doc["manifest"] = manifest
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_report(path) -> ErrorReport:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    return ErrorReport(
        network_size=int(doc["network_size"]),
        average_error=float(doc["average_error"]),
        std_dev=float(doc["std_dev"]),
        pct_error=float(doc["pct_error"]),
    )
