"""Rendering report tables to static figure files.

Uses the non-interactive matplotlib backend.  SVG output is kept
reproducible: element ids are derived from a fixed hash salt and no
creation date is embedded, so rendering the same data twice gives the
same bytes.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .errors import DomainError  # noqa: E402
from .report import SweepReport  # noqa: E402

_RC_DETERMINISTIC = {"svg.hashsalt": "skatelo"}


def _metadata(path: str) -> dict | None:
    # SVG embeds a creation date unless told not to
    return {"Date": None} if str(path).endswith(".svg") else None


def render_timeseries(
    header: Sequence[str], rows: Iterable[Sequence], path: str, xlabel: str = "series"
) -> None:
    """Line chart of rating trajectories, one line per player."""
    rows = list(rows)
    if len(header) < 2:
        raise DomainError("timeseries header names no players")
    if not rows:
        raise DomainError("no rows to plot")
    xs = [row[0] for row in rows]
    with plt.rc_context(_RC_DETERMINISTIC):
        fig, ax = plt.subplots(figsize=(8.0, 4.5))
        for column, player in enumerate(header[1:], start=1):
            points = [(x, row[column]) for x, row in zip(xs, rows) if row[column] is not None]
            if points:
                ax.plot(
                    [p[0] for p in points],
                    [p[1] for p in points],
                    label=player,
                    linewidth=1.2,
                )
        ax.set_xlabel(xlabel)
        ax.set_ylabel("rating")
        ax.legend(loc="best", fontsize=8)
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
        fig.tight_layout()
        fig.savefig(path, metadata=_metadata(path))
        plt.close(fig)


def render_sweep(report: SweepReport, path: str) -> None:
    """Final-rating spread against K, one line pair per switch setting."""
    if not report.rows:
        raise DomainError("no rows to plot")
    groups: dict[tuple[bool, bool], list] = {}
    for row in report.rows:
        groups.setdefault((row.chance_hand, row.chance_flat), []).append(row)
    with plt.rc_context(_RC_DETERMINISTIC):
        fig, ax = plt.subplots(figsize=(8.0, 4.5))
        for (i1, i2), rows in sorted(groups.items()):
            rows = sorted(rows, key=lambda r: r.k)
            ks = [r.k for r in rows]
            label = f"i1={int(i1)} i2={int(i2)}"
            ax.plot(ks, [r.p90 - r.p10 for r in rows], marker="o", label=f"{label} p90-p10")
            ax.plot(
                ks,
                [r.maximum - r.minimum for r in rows],
                marker="s",
                linestyle="--",
                label=f"{label} max-min",
            )
        ax.set_xlabel("K")
        ax.set_ylabel("final rating spread")
        ax.legend(loc="best", fontsize=7)
        ax.spines["top"].set_visible(False)
        ax.spines["right"].set_visible(False)
        fig.tight_layout()
        fig.savefig(path, metadata=_metadata(path))
        plt.close(fig)
