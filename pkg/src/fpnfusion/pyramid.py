"""Multi-scale pyramid of a series built by repeated average pooling.

Level 1 is the input itself; every further level pools the previous one
(kernel 3, stride 2, no padding by default), so deeper levels are shorter
and smoother.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import PoolConfig, ShapeError, avg_pool_1d, avg_pool_1d_backward, pool_length


class InvalidPyramidConfig(ValueError):
    """The pyramid is too deep for the series length."""


@dataclass(frozen=True)
class PyramidConfig:
    stages: int = 4
    pool: PoolConfig = field(default_factory=PoolConfig)

    def __post_init__(self):
        if self.stages < 1:
            raise InvalidPyramidConfig(f"stages must be >= 1, got {self.stages}")


def level_lengths(base: int, cfg: PyramidConfig) -> list[int]:
    """Lengths of all ``cfg.stages`` levels for a series of length ``base``."""
    if base < 1:
        raise InvalidPyramidConfig(f"base length must be >= 1, got {base}")
    lengths = [base]
    for level in range(2, cfg.stages + 1):
        n = pool_length(lengths[-1], cfg.pool)
        if n < 1:
            raise InvalidPyramidConfig(
                f"level {level} would have length {n} (base length {base}, "
                f"{cfg.stages} stages, kernel {cfg.pool.kernel}, stride {cfg.pool.stride})"
            )
        lengths.append(n)
    return lengths


def level_length(base: int, cfg: PyramidConfig, i: int) -> int:
    """Length of level ``i`` (1-based)."""
    if not 1 <= i <= cfg.stages:
        raise ValueError(f"level index {i} outside 1..{cfg.stages}")
    return level_lengths(base, PyramidConfig(i, cfg.pool))[-1]


@dataclass
class Pyramid:
    levels: list[np.ndarray]
    base_len: int
    axis: int = 0

    @property
    def lengths(self) -> list[int]:
        return [lv.shape[self.axis] for lv in self.levels]


def build_pyramid(x: np.ndarray, cfg: PyramidConfig = PyramidConfig(), axis: int = 0) -> Pyramid:
    """Pool ``x`` along ``axis`` (time) ``cfg.stages - 1`` times.

    With the default ``axis=0`` a ``(L, C)`` block pools each channel on its
    own; models pass ``axis=-1`` for their channel-first layout.
    """
    x = np.asarray(x, dtype=np.float64)
    lengths = level_lengths(x.shape[axis], cfg)
    cur = np.moveaxis(x, axis, -1)
    levels = [x]
    for _ in range(1, cfg.stages):
        cur = avg_pool_1d(cur, cfg.pool)
        levels.append(np.moveaxis(cur, -1, axis))
    pyr = Pyramid(levels, x.shape[axis], axis)
    assert pyr.lengths == lengths
    return pyr


def pyramid_backward(cfg: PyramidConfig, base_len: int, level_grads: list[np.ndarray],
                     axis: int = 0) -> np.ndarray:
    """Pull per-level cotangents back to the input series."""
    lengths = level_lengths(base_len, cfg)
    if len(level_grads) != cfg.stages:
        raise ShapeError(f"expected {cfg.stages} level gradients, got {len(level_grads)}")
    for i, (g, n) in enumerate(zip(level_grads, lengths), start=1):
        if g.shape[axis] != n:
            raise ShapeError(f"level {i} gradient has length {g.shape[axis]}, expected {n}")
    grad = np.moveaxis(np.asarray(level_grads[-1], dtype=np.float64), axis, -1)
    for i in range(cfg.stages - 1, 0, -1):
        grad = avg_pool_1d_backward(cfg.pool, lengths[i - 1], grad)
        grad = grad + np.moveaxis(level_grads[i - 1], axis, -1)
    return np.moveaxis(grad, -1, axis)
