"""Seeded mini-batch training with Adam and early stopping on validation MSE."""

from __future__ import annotations

import csv
import json
import logging
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .core import AdamState, NonFiniteError, adam_step
from .data import PreparedData, WindowSet
from .evaluation import evaluate
from .models import Gradients, ModelSpec, ModelState, backward, forward, init_model, save_checkpoint

log = logging.getLogger(__name__)


@dataclass
class TrainConfig:
    batch_size: int = 32
    max_epochs: int = 30
    patience: int = 3
    lr: float = 1e-3
    lr_decay: float = 0.5
    decay_after: int = 3
    seed: int = 0
    shuffle: bool = True

    def __post_init__(self):
        if self.batch_size < 1 or self.max_epochs < 1 or self.patience < 0:
            raise ValueError(f"invalid training config {self}")
        if not self.lr > 0 or not 0 < self.lr_decay <= 1:
            raise ValueError(f"invalid learning-rate settings lr={self.lr} decay={self.lr_decay}")

    def lr_at(self, epoch: int) -> float:
        """Learning rate for 1-based ``epoch``: constant, then halved each epoch."""
        return self.lr * self.lr_decay ** max(0, epoch - self.decay_after)


@dataclass
class EpochRecord:
    epoch: int
    train_loss: float
    val_mse: float
    val_mae: float
    lr: float
    wall_s: float


@dataclass
class TrainLog:
    epochs: list[EpochRecord] = field(default_factory=list)
    best_epoch: int = 0
    stopped_early: bool = False

    @property
    def best(self) -> EpochRecord:
        return self.epochs[self.best_epoch - 1]

    def write_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(EpochRecord.__dataclass_fields__)
            for r in self.epochs:
                w.writerow(asdict(r).values())

    def summary(self) -> dict:
        return {
            "best_epoch": self.best_epoch,
            "epochs_run": len(self.epochs),
            "stopped_early": self.stopped_early,
            "best_val_mse": self.best.val_mse if self.epochs else None,
            "best_val_mae": self.best.val_mae if self.epochs else None,
        }


class TrainingDiverged(RuntimeError):
    def __init__(self, msg: str, last_good: ModelState, log: TrainLog):
        super().__init__(msg)
        self.last_good = last_good
        self.log = log


def loss_batch(state: ModelState, x: np.ndarray, y: np.ndarray) -> tuple[float, Gradients]:
    """Batch MSE and its gradients."""
    pred, cache = forward(state, x)
    if pred.shape != y.shape:
        raise ValueError(f"target shape {y.shape} != prediction shape {pred.shape}")
    diff = pred - y
    loss = float(np.mean(diff * diff))
    return loss, backward(state, cache, 2.0 * diff / diff.size)


def train(spec: ModelSpec, data: PreparedData | tuple[WindowSet, WindowSet], cfg: TrainConfig = TrainConfig(),
          checkpoint: str | Path | None = None) -> tuple[ModelState, TrainLog]:
    """Train ``spec`` and return the best-validation state with its log.

    ``data`` is a :class:`PreparedData` or a ``(train, val)`` pair of window
    sets. Raises :class:`TrainingDiverged` carrying the last finite state if the
    loss or a gradient stops being finite.
    """
    train_set, val_set = (data.train, data.val) if isinstance(data, PreparedData) else data
    if train_set.channels != spec.channels:
        raise ValueError(f"data has {train_set.channels} channels, spec expects {spec.channels}")
    state = init_model(spec, cfg.seed)
    rng = np.random.default_rng(cfg.seed)
    opt = AdamState(lr=cfg.lr)
    tlog = TrainLog()
    best_state, best_mse, stale = state.copy(), np.inf, 0
    params = state.params()

    for epoch in range(1, cfg.max_epochs + 1):
        t0 = time.perf_counter()
        opt.lr = cfg.lr_at(epoch)
        order = rng.permutation(len(train_set)) if cfg.shuffle else np.arange(len(train_set))
        total, count = 0.0, 0
        for x, y in train_set.batches(cfg.batch_size, order):
            loss, grads = loss_batch(state, x, y)
            try:
                if not np.isfinite(loss):
                    raise NonFiniteError(f"loss became {loss}")
                adam_step(opt, params, grads.params)
            except NonFiniteError as exc:
                msg = f"epoch {epoch}, step {opt.step}: {exc}"
                raise TrainingDiverged(msg, best_state, tlog) from exc
            total += loss * len(x)
            count += len(x)
        val_mse, val_mae = evaluate(state, val_set)
        rec = EpochRecord(epoch, total / count, val_mse, val_mae, opt.lr, time.perf_counter() - t0)
        tlog.epochs.append(rec)
        log.info("epoch %d train %.5f val mse %.5f mae %.5f lr %.2e",
                 epoch, rec.train_loss, val_mse, val_mae, opt.lr)
        if val_mse < best_mse:
            best_mse, best_state, stale = val_mse, state.copy(), 0
            tlog.best_epoch = epoch
            if checkpoint is not None:
                save_checkpoint(best_state, checkpoint, {"epoch": epoch, "val_mse": val_mse})
        else:
            stale += 1
            if stale >= cfg.patience:
                tlog.stopped_early = True
                break
    return best_state, tlog


def write_run(out_dir: str | Path, state: ModelState, tlog: TrainLog, extra: dict) -> dict[str, Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "checkpoint": save_checkpoint(state, out / "model.npz", extra),
        "log": out / "trainlog.csv",
        "summary": out / "summary.json",
    }
    tlog.write_csv(paths["log"])
    paths["summary"].write_text(json.dumps({**tlog.summary(), **extra}, indent=2, sort_keys=True) + "\n")
    return paths
