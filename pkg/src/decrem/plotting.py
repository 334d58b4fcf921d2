"""Rendering benchmark CSVs as PNG figures.

Matplotlib is imported lazily with the Agg backend so the library never
needs a display.  Figures avoid wall-clock metadata; rendering the same
CSV twice gives identical bytes.
"""

from __future__ import annotations

import csv
from pathlib import Path

__all__ = ["render_bench_png"]

_OP_STYLE = {
    "build": ("tab:gray", "s"),
    "delete": ("tab:blue", "."),
    "delv": ("tab:blue", "."),
    "query": ("tab:orange", "x"),
}


def render_bench_png(csv_path: str | Path, png_path: str | Path | None = None) -> Path:
    """Plot h_size and per-op nanos against deletion index; returns the PNG path."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    csv_path = Path(csv_path)
    if png_path is None:
        png_path = csv_path.with_suffix(".png")
    png_path = Path(png_path)

    rows = []
    with open(csv_path, newline="") as fh:
        for rec in csv.DictReader(fh):
            rows.append((rec["algo"], int(rec["k_index"]), rec["op"],
                         int(rec["nanos"]), int(rec["h_size"])))
    if not rows:
        raise ValueError(f"{csv_path} has no data rows")
    algos = sorted({r[0] for r in rows})
    title = f"decremental bench: algo={','.join(algos)}"

    fig, (ax_h, ax_t) = plt.subplots(2, 1, figsize=(7, 6), sharex=True)
    fig.suptitle(title)

    ks = [r[1] for r in rows if r[2] in ("delete", "delv")]
    hs = [r[4] for r in rows if r[2] in ("delete", "delv")]
    ax_h.plot(ks, hs, color="tab:green", lw=1)
    ax_h.set_ylabel("|H| after deletion")
    ax_h.grid(True, alpha=0.3)

    for op in ("build", "delete", "delv", "query"):
        pts = [(r[1], r[3]) for r in rows if r[2] == op]
        if not pts:
            continue
        color, marker = _OP_STYLE[op]
        ax_t.plot([p[0] for p in pts], [p[1] for p in pts],
                  marker, color=color, label=op, ms=4)
    ax_t.set_xlabel("deletion index")
    ax_t.set_ylabel("nanos per op")
    ax_t.grid(True, alpha=0.3)
    ax_t.legend(loc="upper left", fontsize=8)

    fig.savefig(png_path, dpi=100, metadata={"Software": "decrem bench"})
    plt.close(fig)
    return png_path
