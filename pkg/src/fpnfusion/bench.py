"""Benchmark grid runner: dataset x horizon x model cells, trained and tested."""

from __future__ import annotations

import logging
import os
import time
from dataclasses import replace
from pathlib import Path

import numpy as np

from .data import PreparedData, WindowSet, dataset_info, load_csv, prepare, resolve_dataset
from .efficiency import count_params
from .evaluation import BenchReport, BenchRow, evaluate
from .models import ModelSpec, layer_layout, parse_variant
from .pyramid import PyramidConfig
from .training import TrainConfig, train

log = logging.getLogger(__name__)

MEM_BUDGET_ENV = "FPNFUSION_MEM_BUDGET_MB"
DEFAULT_MEM_BUDGET_MB = 1536

# smoke runs: a sliver of every split and a short epoch budget
SMOKE_FRACTION = 0.01
SMOKE_MAX_EPOCHS = 2


class ProtocolError(ValueError):
    """A requested cell falls outside a dataset's evaluation protocol."""


def check_horizons(dataset: str, horizons: list[int]) -> None:
    info = dataset_info(dataset)
    if info is None:
        return
    bad = [h for h in horizons if h not in info.horizons]
    if bad:
        raise ProtocolError(
            f"{info.name} is evaluated at horizons {list(info.horizons)}; got {bad}"
        )


def default_lookback(dataset: str) -> int:
    info = dataset_info(dataset)
    return info.lookback if info else 336


def memory_budget() -> int:
    return int(float(os.environ.get(MEM_BUDGET_ENV, DEFAULT_MEM_BUDGET_MB)) * 2**20)


def estimate_train_bytes(spec: ModelSpec, batch_size: int) -> int:
    """Rough peak footprint of training ``spec``.

    Five parameter-sized buffers (weights, gradients, two Adam moments, best
    copy) plus cached layer inputs and outputs for forward and backward.
    """
    per_series = spec.lookback + spec.horizon + sum(a + b for a, b in layer_layout(spec).values())
    acts = 2 * batch_size * spec.channels * per_series
    return 8 * (5 * count_params(spec) + acts)


def channel_groups(spec: ModelSpec, batch_size: int, budget: int | None = None) -> list[range]:
    """Split channels into contiguous groups that each fit ``budget`` bytes.

    Shared-weight models always form a single group.
    """
    budget = memory_budget() if budget is None else budget
    C = spec.channels
    if not spec.individual or estimate_train_bytes(spec, batch_size) <= budget:
        return [range(C)]
    one = estimate_train_bytes(replace(spec, channels=1), batch_size)
    size = max(1, budget // one)
    return [range(a, min(a + size, C)) for a in range(0, C, size)]


def _channel_subset(data: PreparedData, cols: range) -> PreparedData:
    sl = slice(cols.start, cols.stop)

    def sub(ws: WindowSet) -> WindowSet:
        return WindowSet(ws.values[:, sl], ws.rows, ws.lookback, ws.horizon, ws.index)

    return replace(data, columns=data.columns[sl], train=sub(data.train), val=sub(data.val), test=sub(data.test))


def run_cell(data: PreparedData, model: str, horizon: int, cfg: TrainConfig,
             seeds: list[int], stages: int = 4, individual: bool = True,
             ma_kernel: int = 25, budget: int | None = None) -> BenchRow:
    """Train and test one cell, averaging over ``seeds``.

    Channel-individual models too large for the memory budget are trained
    group by group. Each group then early-stops on its own validation MSE;
    the test metrics are pooled with channel-count weights, which equals the
    all-channel average because every group sees the same windows.
    """
    variant = parse_variant(model)
    spec = ModelSpec(variant, data.train.lookback, horizon, data.channels,
                     pyramid=PyramidConfig(stages), ma_kernel=ma_kernel, individual=individual)
    groups = channel_groups(spec, cfg.batch_size, budget)
    t0 = time.perf_counter()
    mses, maes = [], []
    for seed in seeds:
        m = a = 0.0
        for cols in groups:
            part = data if len(groups) == 1 else _channel_subset(data, cols)
            state, _ = train(replace(spec, channels=len(cols)), part, replace(cfg, seed=seed))
            gm, ga = evaluate(state, part.test)
            m += gm * (len(cols) / spec.channels)
            a += ga * (len(cols) / spec.channels)
            del state
        mses.append(m)
        maes.append(a)
    notes = f"trained in {len(groups)} channel groups" if len(groups) > 1 else ""
    return BenchRow(
        data.name, horizon, variant.label, float(np.mean(mses)), float(np.mean(maes)),
        seed=seeds[0], runtime_s=time.perf_counter() - t0, n_seeds=len(seeds),
        mse_std=float(np.std(mses)), mae_std=float(np.std(maes)), notes=notes,
    )


def run_grid(datasets: list[str], models: list[str], horizons: list[int] | None = None, *,
             univariate: bool = False, cfg: TrainConfig = TrainConfig(), seeds: list[int] | None = None,
             lookback: int | None = None, subsample: float | None = None,
             root: str | Path | None = None, stages: int = 4, individual: bool = True,
             ma_kernel: int = 25, budget: int | None = None) -> BenchReport:
    """Run every (dataset, horizon, model) cell; failures are recorded, not raised.

    ``horizons=None`` uses each dataset's standard horizons. ``subsample``
    keeps that fraction of the windows of every split (smoke runs).
    Protocol violations and unknown models raise before anything trains.
    """
    seeds = seeds or [cfg.seed]
    for m in models:
        parse_variant(m)
    plan = []
    for ds in datasets:
        info = dataset_info(ds)
        hs = horizons or (list(info.horizons) if info else [96, 192, 336, 720])
        check_horizons(ds, hs)
        plan.append((ds, hs))

    report = BenchReport(univariate=univariate)
    for ds, hs in plan:
        L = lookback or default_lookback(ds)
        try:
            raw = load_csv(resolve_dataset(ds, root), name=dataset_info(ds).name if dataset_info(ds) else ds)
        except (OSError, ValueError) as exc:
            for h in hs:
                for m in models:
                    report.add(BenchRow(ds, h, parse_variant(m).label, status="failed", error=str(exc)))
            log.error("%s: %s", ds, exc)
            continue
        for h in hs:
            try:
                data = prepare(raw, L, h, univariate=univariate)
                if subsample:
                    data.train, data.val, data.test = (
                        w.subsample(subsample) for w in (data.train, data.val, data.test)
                    )
            except ValueError as exc:
                for m in models:
                    report.add(BenchRow(raw.name, h, parse_variant(m).label, status="failed", error=str(exc)))
                continue
            for m in models:
                try:
                    row = run_cell(data, m, h, cfg, seeds, stages, individual, ma_kernel, budget)
                except Exception as exc:  # a failing cell must not sink the grid
                    log.exception("%s/%s/%s failed", raw.name, h, m)
                    row = BenchRow(raw.name, h, parse_variant(m).label, status="failed",
                                   error=f"{type(exc).__name__}: {exc}")
                else:
                    log.info("%s T=%d %s: mse %.4f mae %.4f (%.1fs)",
                             row.dataset, h, row.model, row.mse, row.mae, row.runtime_s)
                report.add(row)
    return report
