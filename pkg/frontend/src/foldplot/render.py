"""Panel rendering on top of matplotlib (headless)."""

from __future__ import annotations

from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .reader import ParsedTable, read_table  # noqa: E402

PANELS = ("curves", "relative-error", "both")


@dataclass(frozen=True)
class FigureSpec:
    csv: str
    out: str
    panel: str = "both"
    xlabel: str = "omega t"
    title: str = ""

    def __post_init__(self):
        if self.panel not in PANELS:
            raise ValueError(f"panel must be one of {PANELS}")


def _draw_curves(ax, table: ParsedTable, xlabel: str) -> None:
    t = table.columns["t"]
    ax.plot(t, table.columns["log_rho_exact"], label="log rho (exact)",
            color="tab:blue", linewidth=1.4)
    ax.plot(t, table.columns["log_rho_leading"], label="log rho (leading)",
            color="tab:orange", linewidth=1.2, linestyle="--")
    if len(t) == 1:
        ax.plot(t, table.columns["log_rho_exact"], "o", color="tab:blue")
        ax.plot(t, table.columns["log_rho_leading"], "x", color="tab:orange")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("log rho")
    ax.legend(loc="best", fontsize=9)


def _draw_rel_error(ax, table: ParsedTable, xlabel: str) -> None:
    t = table.columns["t"]
    ax.plot(t, table.columns["rel_error"], color="tab:red", linewidth=1.2)
    if len(t) == 1:
        ax.plot(t, table.columns["rel_error"], "o", color="tab:red")
    ax.axhline(0.0, color="gray", linewidth=0.6)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("relative error")


def render(spec: FigureSpec) -> str:
    """Render the spec's CSV to an image file; returns the output path.

    Plotting reads the parsed floats only; the numeric data is never
    modified (linear axes, no rescaling).
    """
    table = read_table(spec.csv)
    if spec.panel == "both":
        fig, (ax_l, ax_r) = plt.subplots(1, 2, figsize=(11, 4.2))
        _draw_curves(ax_l, table, spec.xlabel)
        _draw_rel_error(ax_r, table, spec.xlabel)
    else:
        fig, ax = plt.subplots(figsize=(6, 4.2))
        if spec.panel == "curves":
            _draw_curves(ax, table, spec.xlabel)
        else:
            _draw_rel_error(ax, table, spec.xlabel)
    fig.suptitle(spec.title or table.label(), fontsize=11)
    fig.tight_layout()
    fig.savefig(spec.out, dpi=150)
    plt.close(fig)
    return spec.out
