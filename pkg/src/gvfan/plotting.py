"""Matplotlib rendering of rank-2 g-fans in the unit-height ray style."""

from __future__ import annotations

from pathlib import Path

import matplotlib
from matplotlib.figure import Figure

from .fan import Fan
from .rank2 import Rank2Params, limiting_slopes

RAY_COLOR = "black"
LIMIT_COLOR = "red"


def ray_segment(v) -> tuple[float, float]:
    """Endpoint of the drawn segment: height 1 above the x-axis, else unit max-norm."""
    x, y = v
    if y > 0:
        return x / y, 1.0
    m = max(abs(x), abs(y))
    return x / m, y / m


def plot_rank2_fan(fan: Fan, params: Rank2Params | None = None, ax=None):
    """Draw the rays of a 2-dimensional fan; limiting rays in red when bc >= 4."""
    if fan.dim != 2:
        raise ValueError("only 2-dimensional fans can be drawn")
    if ax is None:
        fig = Figure(figsize=(4, 4))
        ax = fig.add_subplot(1, 1, 1)
    ax.annotate("", xy=(1.1, 0), xytext=(-1.1, 0), arrowprops=dict(arrowstyle="->", lw=0.6))
    ax.annotate("", xy=(0, 1.1), xytext=(0, -1.1), arrowprops=dict(arrowstyle="->", lw=0.6))
    for r in fan.rays:
        x, y = ray_segment(r)
        ax.plot([0, x], [0, y], color=RAY_COLOR, lw=0.8)
    if params is not None and not params.finite:
        s_minus, s_plus = limiting_slopes(params)
        for s, label in ((s_plus, "$r_+$"), (s_minus, "$r_-$")):
            x = 1.0 / float(s)
            ax.plot([0, x], [0, 1], color=LIMIT_COLOR, lw=1.2)
            if s_minus != s_plus:
                ax.text(x, 1.08, label, ha="center", fontsize=9)
        if s_minus == s_plus:
            ax.text(1.0 / float(s_plus), 1.08, "$r_+=r_-$", ha="center", fontsize=9)
    if params is not None:
        ax.set_title(rf"$\mathcal{{F}}(B_{{{params.b},{params.c}}})$", fontsize=10)
    ax.set_xlim(-1.2, 1.2)
    ax.set_ylim(-1.2, 1.3)
    ax.set_aspect("equal")
    ax.set_axis_off()
    return ax


def save_svg(fig: Figure, path: str | Path) -> Path:
    """Write an SVG whose bytes depend only on the figure content."""
    path = Path(path)
    with matplotlib.rc_context({"svg.hashsalt": "gvfan", "svg.fonttype": "path"}):
        fig.savefig(path, format="svg", metadata={"Date": None})
    return path


def render_rank2(fan: Fan, params: Rank2Params, out: str | Path) -> Path:
    ax = plot_rank2_fan(fan, params)
    return save_svg(ax.figure, out)
