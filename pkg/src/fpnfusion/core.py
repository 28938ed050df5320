"""Small dense-array toolkit: linear maps, 1-D average pooling, losses and Adam.

Everything works on float64 numpy arrays. Each forward op has a matching
backward op returning exact gradients; models chain them by hand.

Linear layers come in two flavours:

* a plain layer, ``weight`` of shape ``(out, in)``, applied to inputs of
  shape ``(..., in)``;
* a channel bank, ``weight`` of shape ``(C, out, in)``, holding one
  independent layer per channel and applied to inputs of shape
  ``(C, N, in)``.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ShapeError",
    "NonFiniteError",
    "LinearLayer",
    "PoolConfig",
    "AdamState",
    "linear_forward",
    "linear_backward",
    "avg_pool_1d",
    "avg_pool_1d_backward",
    "pool_length",
    "mse",
    "mae",
    "adam_step",
    "count_multiplies",
]


class ShapeError(ValueError):
    """Array shapes do not fit the operation."""


class NonFiniteError(FloatingPointError):
    """A NaN or Inf showed up where only finite values are allowed."""


# Active multiply counters; linear_forward adds its weight multiplies to each.
_COUNTERS: list[list[int]] = []


@contextlib.contextmanager
def count_multiplies():
    """Count linear-layer weight multiplies executed inside the block.

    >>> with count_multiplies() as c:
    ...     _ = linear_forward(LinearLayer.zeros(4, 2), np.ones(4))
    >>> c[0]
    8
    """
    counter = [0]
    _COUNTERS.append(counter)
    try:
        yield counter
    finally:
        _COUNTERS.remove(counter)


@dataclass
class LinearLayer:
    weight: np.ndarray
    bias: np.ndarray

    def __post_init__(self):
        self.weight = np.asarray(self.weight, dtype=np.float64)
        self.bias = np.asarray(self.bias, dtype=np.float64)
        if self.weight.ndim not in (2, 3):
            raise ShapeError(f"weight must be 2-D or 3-D, got shape {self.weight.shape}")
        if self.bias.shape != self.weight.shape[:-1]:
            raise ShapeError(
                f"bias shape {self.bias.shape} does not match weight shape {self.weight.shape}"
            )

    @classmethod
    def zeros(cls, in_len: int, out_len: int, channels: int | None = None) -> LinearLayer:
        lead = () if channels is None else (channels,)
        return cls(np.zeros(lead + (out_len, in_len)), np.zeros(lead + (out_len,)))

    @classmethod
    def uniform(cls, in_len: int, out_len: int, rng: np.random.Generator,
                channels: int | None = None) -> LinearLayer:
        """Weights ~ U(-1/sqrt(in_len), 1/sqrt(in_len)), zero bias."""
        lead = () if channels is None else (channels,)
        bound = 1.0 / np.sqrt(in_len)
        weight = rng.uniform(-bound, bound, size=lead + (out_len, in_len))
        return cls(weight, np.zeros(lead + (out_len,)))

    @property
    def in_len(self) -> int:
        return self.weight.shape[-1]

    @property
    def out_len(self) -> int:
        return self.weight.shape[-2]

    @property
    def banked(self) -> bool:
        return self.weight.ndim == 3

    @property
    def parameter_count(self) -> int:
        return self.weight.size + self.bias.size

    def copy(self) -> LinearLayer:
        return LinearLayer(self.weight.copy(), self.bias.copy())


def _check_linear_input(layer: LinearLayer, x: np.ndarray) -> None:
    if x.shape[-1] != layer.in_len:
        raise ShapeError(f"expected input length {layer.in_len}, got {x.shape[-1]}")
    if layer.banked and (x.ndim != 3 or x.shape[0] != layer.weight.shape[0]):
        raise ShapeError(
            f"channel bank of {layer.weight.shape[0]} layers expects input (C, N, in), "
            f"got {x.shape}"
        )


def linear_forward(layer: LinearLayer, x: np.ndarray) -> np.ndarray:
    """``out[..., j] = bias[j] + sum_i weight[j, i] * x[..., i]``."""
    x = np.asarray(x, dtype=np.float64)
    _check_linear_input(layer, x)
    if layer.banked:
        out = np.matmul(x, layer.weight.transpose(0, 2, 1)) + layer.bias[:, None, :]
    else:
        out = x @ layer.weight.T + layer.bias
    if _COUNTERS:
        n = (x.size // layer.in_len) * layer.in_len * layer.out_len
        for c in _COUNTERS:
            c[0] += n
    return out


def linear_backward(layer: LinearLayer, x: np.ndarray, out_grad: np.ndarray):
    """Return ``(weight_grad, bias_grad, in_grad)`` for :func:`linear_forward`."""
    x = np.asarray(x, dtype=np.float64)
    out_grad = np.asarray(out_grad, dtype=np.float64)
    _check_linear_input(layer, x)
    if out_grad.shape != x.shape[:-1] + (layer.out_len,):
        raise ShapeError(
            f"out_grad shape {out_grad.shape} does not match forward output "
            f"{x.shape[:-1] + (layer.out_len,)}"
        )
    if layer.banked:
        weight_grad = np.matmul(out_grad.transpose(0, 2, 1), x)
        bias_grad = out_grad.sum(axis=1)
    else:
        g2 = out_grad.reshape(-1, layer.out_len)
        weight_grad = g2.T @ x.reshape(-1, layer.in_len)
        bias_grad = g2.sum(axis=0)
    in_grad = np.matmul(out_grad, layer.weight)
    return weight_grad, bias_grad, in_grad


@dataclass(frozen=True)
class PoolConfig:
    kernel: int = 3
    stride: int = 2
    padding: int = 0

    def __post_init__(self):
        if self.kernel < 1 or self.stride < 1 or self.padding < 0:
            raise ValueError(f"invalid pooling config {self}")


def pool_length(n: int, cfg: PoolConfig) -> int:
    """Output length ``floor((n + 2p - k) / s + 1)``; may be < 1 for short inputs."""
    return (n + 2 * cfg.padding - cfg.kernel) // cfg.stride + 1


def avg_pool_1d(x: np.ndarray, cfg: PoolConfig = PoolConfig()) -> np.ndarray:
    """Average pooling along the last axis.

    Padding is zero padding and padded zeros count towards the window mean.
    """
    x = np.asarray(x, dtype=np.float64)
    n = x.shape[-1]
    m = pool_length(n, cfg)
    if m < 1:
        raise ShapeError(
            f"input length {n} too short for kernel {cfg.kernel} with padding {cfg.padding}"
        )
    if cfg.padding:
        pad = [(0, 0)] * (x.ndim - 1) + [(cfg.padding, cfg.padding)]
        x = np.pad(x, pad)
    span = cfg.stride * (m - 1) + 1
    acc = x[..., 0:span:cfg.stride].copy()
    for t in range(1, cfg.kernel):
        acc += x[..., t:t + span:cfg.stride]
    return acc / cfg.kernel


def avg_pool_1d_backward(cfg: PoolConfig, n: int, out_grad: np.ndarray) -> np.ndarray:
    """Gradient of :func:`avg_pool_1d` w.r.t. an input of length ``n``."""
    out_grad = np.asarray(out_grad, dtype=np.float64)
    m = pool_length(n, cfg)
    if m < 1 or out_grad.shape[-1] != m:
        raise ShapeError(f"out_grad length {out_grad.shape[-1]} inconsistent with n={n} (expects {m})")
    padded = n + 2 * cfg.padding
    grad = np.zeros(out_grad.shape[:-1] + (padded,))
    share = out_grad / cfg.kernel
    span = cfg.stride * (m - 1) + 1
    for t in range(cfg.kernel):
        grad[..., t:t + span:cfg.stride] += share
    if cfg.padding:
        grad = grad[..., cfg.padding:cfg.padding + n]
    return grad


def _check_same_shape(pred, target):
    pred = np.asarray(pred, dtype=np.float64)
    target = np.asarray(target, dtype=np.float64)
    if pred.shape != target.shape:
        raise ShapeError(f"prediction shape {pred.shape} != target shape {target.shape}")
    return pred, target


def mse(pred, target) -> float:
    pred, target = _check_same_shape(pred, target)
    return float(np.mean((pred - target) ** 2))


def mae(pred, target) -> float:
    pred, target = _check_same_shape(pred, target)
    return float(np.mean(np.abs(pred - target)))


@dataclass
class AdamState:
    lr: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    step: int = 0
    m: dict[str, np.ndarray] = field(default_factory=dict)
    v: dict[str, np.ndarray] = field(default_factory=dict)


def adam_step(state: AdamState, params: dict[str, np.ndarray],
              grads: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    """One bias-corrected Adam update, applied to ``params`` in place.

    Moments live in ``state`` keyed by parameter name and are created lazily.
    Raises :class:`NonFiniteError` before touching anything if a gradient is
    not finite.
    """
    for name, g in grads.items():
        if name not in params:
            raise KeyError(f"gradient for unknown parameter {name!r}")
        if g.shape != params[name].shape:
            raise ShapeError(f"{name}: gradient shape {g.shape} != parameter shape {params[name].shape}")
        if not np.all(np.isfinite(g)):
            raise NonFiniteError(f"non-finite gradient for {name!r} at step {state.step + 1}")

    state.step += 1
    b1, b2 = state.beta1, state.beta2
    c1 = 1.0 - b1 ** state.step
    c2 = 1.0 - b2 ** state.step
    for name, g in grads.items():
        m = state.m.get(name)
        if m is None:
            m = state.m[name] = np.zeros_like(g)
            state.v[name] = np.zeros_like(g)
        v = state.v[name]
        # in-place with one scratch buffer; big per-channel banks make temporaries costly
        tmp = np.multiply(g, 1.0 - b1)
        m *= b1
        m += tmp
        np.multiply(g, g, out=tmp)
        tmp *= 1.0 - b2
        v *= b2
        v += tmp
        np.divide(v, c2, out=tmp)
        np.sqrt(tmp, out=tmp)
        tmp += state.eps
        np.divide(m, tmp, out=tmp)
        tmp *= state.lr / c1
        params[name] -= tmp
    return params
