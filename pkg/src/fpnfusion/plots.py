"""Figures written next to the CSV/markdown outputs of the CLI."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "figure.dpi": 110,
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "legend.frameon": False,
}


def _save(fig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def bench_figure(report, path, metric: str = "mse") -> Path:
    """Grouped bars: one group per (dataset, horizon), one bar per model."""
    cells = report.cells()
    models = report.models()
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(max(4.0, 0.9 * len(cells) + 2), 3.2))
        width = 0.8 / max(1, len(models))
        xs = np.arange(len(cells))
        for k, m in enumerate(models):
            vals = []
            for ds, h in cells:
                r = report.get(ds, h, m)
                vals.append(getattr(r, metric) if r is not None and r.ok else np.nan)
            ax.bar(xs + (k - (len(models) - 1) / 2) * width, vals, width, label=m)
        ax.set_xticks(xs)
        ax.set_xticklabels([f"{ds}\n{h}" for ds, h in cells], fontsize=7)
        ax.set_ylabel(metric.upper())
        ax.legend(ncols=min(3, len(models)), fontsize=7)
        return _save(fig, path)


def pyramid_figure(levels: list[np.ndarray], path, title: str = "") -> Path:
    """Each level drawn over the span of the input so scales line up."""
    base = len(levels[0])
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6.0, 3.0))
        for i, lvl in enumerate(levels, start=1):
            t = np.linspace(0, base - 1, len(lvl))
            ax.plot(t, lvl, lw=1.6 - 0.25 * (i - 1), label=f"level {i} (len {len(lvl)})")
        ax.set_xlabel("time step")
        if title:
            ax.set_title(title)
        ax.legend(fontsize=7)
        return _save(fig, path)


def training_curve(tlog, path) -> Path:
    ep = [r.epoch for r in tlog.epochs]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 3.0))
        ax.plot(ep, [r.train_loss for r in tlog.epochs], marker="o", ms=3, label="train loss")
        ax.plot(ep, [r.val_mse for r in tlog.epochs], marker="s", ms=3, label="val MSE")
        if tlog.best_epoch:
            ax.axvline(tlog.best_epoch, color="grey", ls="--", lw=0.8)
        ax.set_xlabel("epoch")
        ax.legend()
        return _save(fig, path)


def efficiency_figure(records, path) -> Path:
    names = [r.model for r in records]
    with plt.rc_context(STYLE):
        fig, (a1, a2) = plt.subplots(1, 2, figsize=(7.0, 3.0))
        a1.bar(names, [r.macs / 1e6 for r in records])
        a1.set_ylabel("MACs (M)")
        a2.bar(names, [r.params / 1e6 for r in records], color="tab:orange")
        a2.set_ylabel("parameters (M)")
        for a in (a1, a2):
            a.tick_params(axis="x", labelrotation=30, labelsize=7)
        return _save(fig, path)
