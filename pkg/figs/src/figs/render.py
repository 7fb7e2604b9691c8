"""Render the four curvature figure payloads as PDF files.

The input CSVs are the external interface of the prismcurv pipeline
(its figdata and pipeline subcommands); nothing here imports that
package.  Rendering is batch-only and deterministic: Agg backend,
fixed style, no creation timestamp in the output metadata.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

FIGURE_KINDS = ("scatter", "hist", "by_class", "dt_dep")

# one color per edge class, shared by every panel that splits by class
CLASS_COLORS = {
    "spatial": "tab:blue",
    "temporal": "tab:orange",
    "diagonal": "tab:green",
}

# one color per curvature variant (histogram overlay, class bars)
VARIANT_COLORS = {"F": "0.35", "F_aug": "tab:red"}

_REQUIRED = {
    "scatter": ("F", "F_aug", "class"),
    "hist": ("bin_left", "bin_right", "count_F", "count_F_aug"),
    "by_class": (
        "class",
        "count",
        "mean_F",
        "sem_F",
        "mean_F_aug",
        "sem_F_aug",
        "mean_diff",
    ),
    "dt_dep": ("dt", "diff", "class"),
}


class SchemaError(ValueError):
    """Input CSV does not match the documented payload schema."""


@dataclass(frozen=True)
class FigureSpec:
    """One rendering job: payload file, image file, payload kind."""

    csv_path: Path
    out_path: Path
    kind: str

    def __post_init__(self):
        if self.kind not in FIGURE_KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}")
        object.__setattr__(self, "csv_path", Path(self.csv_path))
        object.__setattr__(self, "out_path", Path(self.out_path))


def _read_rows(spec: FigureSpec) -> list[dict]:
    with open(spec.csv_path, newline="") as fh:
        reader = csv.DictReader(fh)
        fields = reader.fieldnames or ()
        for name in _REQUIRED[spec.kind]:
            if name not in fields:
                raise SchemaError(f"{spec.csv_path}: missing column {name!r}")
        return list(reader)


def _class_split(rows, x_key, y_key):
    for cls, color in CLASS_COLORS.items():
        pts = [
            (float(r[x_key]), float(r[y_key])) for r in rows if r["class"] == cls
        ]
        if pts:
            yield cls, color, [p[0] for p in pts], [p[1] for p in pts]


def _draw_scatter(ax, rows):
    values = [float(r[k]) for r in rows for k in ("F", "F_aug")]
    lo, hi = (min(values), max(values)) if values else (0.0, 1.0)
    if lo == hi:
        lo, hi = lo - 1.0, hi + 1.0
    ax.plot([lo, hi], [lo, hi], ls="--", lw=1.0, color="0.5", label="identity")
    for cls, color, xs, ys in _class_split(rows, "F", "F_aug"):
        ax.scatter(xs, ys, s=14, alpha=0.75, color=color, label=cls)
    ax.set_xlabel("original curvature F")
    ax.set_ylabel("augmented curvature F_aug")


def _draw_hist(ax, rows):
    if not rows:
        ax.set_xlabel("curvature")
        ax.set_ylabel("edges")
        return
    edges = [float(r["bin_left"]) for r in rows] + [float(rows[-1]["bin_right"])]
    for key, label in (("count_F", "F"), ("count_F_aug", "F_aug")):
        ax.stairs(
            [float(r[key]) for r in rows],
            edges,
            lw=1.4,
            color=VARIANT_COLORS[label],
            label=label,
        )
    ax.set_xlabel("curvature")
    ax.set_ylabel("edges")


def _draw_by_class(ax, rows):
    width = 0.38
    idx = list(range(len(rows)))
    for sign, mean_key, sem_key, label in (
        (-1, "mean_F", "sem_F", "F"),
        (1, "mean_F_aug", "sem_F_aug", "F_aug"),
    ):
        ax.bar(
            [i + sign * width / 2 for i in idx],
            [float(r[mean_key]) for r in rows],
            width,
            yerr=[float(r[sem_key]) for r in rows],
            capsize=3,
            color=VARIANT_COLORS[label],
            label=label,
        )
    ax.set_xticks(idx, [r["class"] for r in rows])
    ax.axhline(0.0, lw=0.8, color="0.6")
    ax.set_ylabel("mean curvature")


def _draw_dt_dep(ax, rows):
    for cls, color, xs, ys in _class_split(rows, "dt", "diff"):
        ax.scatter(xs, ys, s=14, alpha=0.75, color=color, label=cls)
    gaps = sorted({int(float(r["dt"])) for r in rows})
    if gaps:
        ax.set_xticks(gaps)
    ax.set_xlabel("slice gap")
    ax.set_ylabel("F - F_aug")


_DRAW = {
    "scatter": _draw_scatter,
    "hist": _draw_hist,
    "by_class": _draw_by_class,
    "dt_dep": _draw_dt_dep,
}


def render(spec: FigureSpec) -> Path:
    """Render one payload to its output path and return that path."""
    rows = _read_rows(spec)
    fig, ax = plt.subplots(figsize=(4.6, 3.5))
    try:
        _DRAW[spec.kind](ax, rows)
        if ax.get_legend_handles_labels()[0]:
            ax.legend(frameon=False, fontsize=8)
        fig.tight_layout()
        spec.out_path.parent.mkdir(parents=True, exist_ok=True)
        # CreationDate must stay out of the PDF for byte determinism
        fig.savefig(spec.out_path, metadata={"CreationDate": None})
    finally:
        plt.close(fig)
    return spec.out_path


def render_all(csv_dir: Path | str, out_dir: Path | str) -> list[Path]:
    csv_dir, out_dir = Path(csv_dir), Path(out_dir)
    return [
        render(FigureSpec(csv_dir / f"{kind}.csv", out_dir / f"{kind}.pdf", kind))
        for kind in FIGURE_KINDS
    ]


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="render_figs",
        description="Render the four prismcurv figure CSVs to PDF.",
    )
    parser.add_argument("csv_dir", help="directory holding the payload CSVs")
    parser.add_argument("out_dir", help="directory to write the PDFs into")
    args = parser.parse_args(argv)
    try:
        for path in render_all(args.csv_dir, args.out_dir):
            print(path)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def app():
    raise SystemExit(main())
