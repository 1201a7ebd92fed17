"""Filesystem reports for a field: delimited tables plus rendered figures.

Writes the +/* operation tables as CSV, the element orders as CSV, and a
PNG rendering of both tables side by side (annotated grids for small
fields, plain heat grids above 16 elements).
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .field_extension import (
    FieldSpec,
    enumerate_elements,
    operation_code_tables,
    operation_tables,
)
from .structure import generator_report

ANNOTATION_LIMIT = 16


def _write_table_csv(path: Path, op: str, labels: list[str], rows) -> None:
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow([op] + labels)
        for label, row in zip(labels, rows):
            writer.writerow([label] + [str(e) for e in row])


def _render_tables_figure(F: FieldSpec, path: Path, dpi: int = 150) -> None:
    add_codes, mul_codes = operation_code_tables(F)
    labels = [str(e) for e in enumerate_elements(F)]
    q = F.q
    fig, axes = plt.subplots(1, 2, figsize=(max(4, q * 0.9) * 2, max(4, q * 0.9)))
    for ax, codes, op in ((axes[0], add_codes, "+"), (axes[1], mul_codes, "·")):
        grid = np.array(codes)
        ax.matshow(grid, cmap="Blues", vmin=0, vmax=q - 1)
        ax.set_title(op, fontsize=16)
        if q <= ANNOTATION_LIMIT:
            ax.set_xticks(range(q))
            ax.set_yticks(range(q))
            ax.set_xticklabels(labels, rotation=45, ha="left")
            ax.set_yticklabels(labels)
            for i in range(q):
                for j in range(q):
                    ax.text(j, i, labels[grid[i][j]], va="center", ha="center")
        else:
            ax.set_xticks([])
            ax.set_yticks([])
    fig.suptitle(str(F))
    fig.tight_layout()
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)


def write_field_report(F: FieldSpec, outdir: Path, seed: int = 0) -> list[Path]:
    """Write addition.csv, multiplication.csv, orders.csv and tables.png
    into outdir; returns the written paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    add, mul = operation_tables(F)
    labels = [str(e) for e in enumerate_elements(F)]

    paths = []
    for name, op, table in (
        ("addition.csv", "+", add),
        ("multiplication.csv", "*", mul),
    ):
        path = outdir / name
        _write_table_csv(path, op, labels, table)
        paths.append(path)

    rep = generator_report(F)
    orders_path = outdir / "orders.csv"
    with orders_path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["element", "multiplicative_order", "is_generator"])
        for a, n in rep.order_table.items():
            writer.writerow([str(a), n, n == F.q - 1])
    paths.append(orders_path)

    figure_path = outdir / "tables.png"
    _render_tables_figure(F, figure_path)
    paths.append(figure_path)
    return paths
