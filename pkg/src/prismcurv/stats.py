"""Summary statistics and figure-ready payloads for curvature records.

The plotting itself lives in a separate package; everything here emits
plain columns so any renderer (or spreadsheet) can consume it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .curvature import TOL_WEIGHTED, CurvatureRecord
from .errors import DomainError
from .prisms import EdgeClass

CLASS_ORDER = (EdgeClass.SPATIAL, EdgeClass.TEMPORAL, EdgeClass.DIAGONAL)
FIGURE_KINDS = ("scatter", "hist", "by_class", "dt_dep")


@dataclass(frozen=True)
class ClassStats:
    count: int
    mean_f: float | None
    sem_f: float | None

    def to_dict(self) -> dict:
        return {"count": self.count, "mean_f": self.mean_f, "sem_f": self.sem_f}


@dataclass(frozen=True)
class StatsSummary:
    n_edges: int
    n_triangles: int
    pct_disagree: float
    mean_f: float
    mean_f_aug: float
    pearson_corr: float | None
    per_class: dict[str, ClassStats]
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "n_edges": self.n_edges,
            "n_triangles": self.n_triangles,
            "pct_disagree": self.pct_disagree,
            "mean_f": self.mean_f,
            "mean_f_aug": self.mean_f_aug,
            "pearson_corr": self.pearson_corr,
            "per_class": {k: v.to_dict() for k, v in self.per_class.items()},
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _sem(values: np.ndarray) -> float | None:
    if len(values) < 2:
        return None
    return float(values.std(ddof=1) / math.sqrt(len(values)))


def table_stats(records: list[CurvatureRecord]) -> StatsSummary:
    """Aggregate a curvature table; raises on an empty record list."""
    if not records:
        raise DomainError("no curvature records to summarize")
    f = np.array([r.F for r in records])
    f_aug = np.array([r.F_aug for r in records])
    notes = []
    if f.std() == 0.0 or f_aug.std() == 0.0:
        pearson = None
        notes.append("pearson undefined: at least one series is constant")
    else:
        pearson = float(np.corrcoef(f, f_aug)[0, 1])
    per_class = {}
    for cls in CLASS_ORDER:
        vals = np.array([r.F for r in records if r.edge_class is cls])
        per_class[cls.value] = ClassStats(
            count=len(vals),
            mean_f=float(vals.mean()) if len(vals) else None,
            sem_f=_sem(vals),
        )
    # each triangle is counted once per bounding edge
    tri_incidences = sum(r.n_tri for r in records)
    return StatsSummary(
        n_edges=len(records),
        n_triangles=tri_incidences // 3,
        pct_disagree=100.0
        * sum(1 for r in records if abs(r.diff) > TOL_WEIGHTED)
        / len(records),
        mean_f=float(f.mean()),
        mean_f_aug=float(f_aug.mean()),
        pearson_corr=pearson,
        per_class=per_class,
        notes=tuple(notes),
    )


def _fmt(x) -> str:
    if x is None:
        return "nan"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def figure_data(
    records: list[CurvatureRecord], which: str
) -> tuple[list[str], list[tuple]]:
    """Columns and rows for one figure payload.

    scatter   F, F_aug, class           one point per edge
    hist      shared Freedman-Diaconis bins with counts for F and F_aug
    by_class  per-class means with standard errors (absent classes omitted)
    dt_dep    diff against slice gap for temporal and diagonal edges
    """
    if not records:
        raise DomainError("no curvature records to export")
    if which == "scatter":
        cols = ["F", "F_aug", "class"]
        rows = [(r.F, r.F_aug, r.edge_class.value) for r in records]
        return cols, rows
    if which == "hist":
        pooled = np.array([r.F for r in records] + [r.F_aug for r in records])
        edges = np.histogram_bin_edges(pooled, bins="fd")
        count_f, _ = np.histogram([r.F for r in records], bins=edges)
        count_aug, _ = np.histogram([r.F_aug for r in records], bins=edges)
        cols = ["bin_left", "bin_right", "count_F", "count_F_aug"]
        rows = [
            (float(edges[k]), float(edges[k + 1]), int(count_f[k]), int(count_aug[k]))
            for k in range(len(edges) - 1)
        ]
        return cols, rows
    if which == "by_class":
        cols = ["class", "count", "mean_F", "sem_F", "mean_F_aug", "sem_F_aug", "mean_diff"]
        rows = []
        for cls in CLASS_ORDER:
            sub = [r for r in records if r.edge_class is cls]
            if not sub:
                continue
            f = np.array([r.F for r in sub])
            fa = np.array([r.F_aug for r in sub])
            rows.append(
                (
                    cls.value,
                    len(sub),
                    float(f.mean()),
                    _sem(f),
                    float(fa.mean()),
                    _sem(fa),
                    float(np.mean([r.diff for r in sub])),
                )
            )
        return cols, rows
    if which == "dt_dep":
        cols = ["dt", "diff", "class"]
        rows = [
            (r.dt, r.diff, r.edge_class.value)
            for r in records
            if r.edge_class is not EdgeClass.SPATIAL
        ]
        return cols, rows
    raise DomainError(f"unknown figure payload {which!r}")


def render_csv(cols: list[str], rows: list[tuple]) -> str:
    lines = [",".join(cols)]
    for row in rows:
        lines.append(",".join(_fmt(x) for x in row))
    return "\n".join(lines) + "\n"


def records_csv(records: list[CurvatureRecord]) -> str:
    lines = [CurvatureRecord.CSV_COLUMNS]
    lines.extend(r.csv_row() for r in records)
    return "\n".join(lines) + "\n"
