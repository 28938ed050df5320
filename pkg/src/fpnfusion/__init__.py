"""Pyramid-fusion linear forecasters and linear baselines, in plain numpy."""

from .core import AdamState, LinearLayer, PoolConfig, adam_step, avg_pool_1d, mae, mse
from .models import ModelSpec, ModelState, Variant, backward, forward, init_model, parse_variant
from .pyramid import PyramidConfig, build_pyramid, level_length, level_lengths
from .training import TrainConfig, train

__version__ = "0.1.0"

__all__ = [
    "AdamState",
    "LinearLayer",
    "ModelSpec",
    "ModelState",
    "PoolConfig",
    "PyramidConfig",
    "TrainConfig",
    "Variant",
    "adam_step",
    "avg_pool_1d",
    "backward",
    "build_pyramid",
    "forward",
    "init_model",
    "level_length",
    "level_lengths",
    "mae",
    "mse",
    "parse_variant",
    "train",
]
