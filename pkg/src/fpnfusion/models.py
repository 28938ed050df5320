"""Linear forecasting models with hand-written backward passes.

Every model maps a look-back block of shape ``(B, L, C)`` to a forecast of
shape ``(B, T, C)``. Internally series are held channel-first, ``(C, B, len)``,
so that per-channel weight banks can be applied with one batched matmul.

Variants
--------
linear       one L->T head
nlinear      L->T head on the series minus its last value, last value added back
dlinear      moving-average trend / residual seasonal split, one head each, summed
fpn-linear   all pyramid levels concatenated, one head to T
fpnm-linear  one head per pyramid level mapping to T, outputs summed
fpn-fusion   one head per level mapping level_i(L) -> level_i(T), then fused
             deepest first: y'_S = y_S, y'_i = fuse_i([y_i, y'_{i+1}])
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .core import (
    LinearLayer,
    PoolConfig,
    ShapeError,
    avg_pool_1d,
    avg_pool_1d_backward,
    linear_backward,
    linear_forward,
)
from .pyramid import PyramidConfig, build_pyramid, level_lengths, pyramid_backward

CHECKPOINT_FORMAT = "fpnfusion-checkpoint"
CHECKPOINT_VERSION = 1


class Variant(str, enum.Enum):
    LINEAR = "linear"
    NLINEAR = "nlinear"
    DLINEAR = "dlinear"
    FPN_LINEAR = "fpn-linear"
    FPNM_LINEAR = "fpnm-linear"
    FPN_FUSION = "fpn-fusion"

    @property
    def uses_pyramid(self) -> bool:
        return self in (Variant.FPN_LINEAR, Variant.FPNM_LINEAR, Variant.FPN_FUSION)

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    Variant.LINEAR: "Linear",
    Variant.NLINEAR: "NLinear",
    Variant.DLINEAR: "DLinear",
    Variant.FPN_LINEAR: "FPNLinear",
    Variant.FPNM_LINEAR: "FPNMLinear",
    Variant.FPN_FUSION: "FPN-fusion",
}


def _norm(name: str) -> str:
    return name.lower().replace("-", "").replace("_", "").replace(" ", "")


def parse_variant(name: str | Variant) -> Variant:
    """Accepts ``fpn-fusion``, ``FPNFusion``, ``fpn_fusion`` and so on."""
    if isinstance(name, Variant):
        return name
    key = _norm(name)
    for v in Variant:
        if key in (_norm(v.value), _norm(v.label)):
            return v
    valid = ", ".join(v.value for v in Variant)
    raise ValueError(f"unknown model variant {name!r}; valid variants: {valid}")


class InvalidSpec(ValueError):
    pass


@dataclass(frozen=True)
class ModelSpec:
    variant: Variant
    lookback: int
    horizon: int
    channels: int = 1
    pyramid: PyramidConfig = field(default_factory=PyramidConfig)
    ma_kernel: int = 25
    individual: bool = True

    def __post_init__(self):
        object.__setattr__(self, "variant", parse_variant(self.variant))
        for name in ("lookback", "horizon", "channels"):
            if getattr(self, name) < 1:
                raise InvalidSpec(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.variant.uses_pyramid:
            try:
                level_lengths(self.lookback, self.pyramid)
                level_lengths(self.horizon, self.pyramid)
            except ValueError as exc:
                raise InvalidSpec(str(exc)) from exc
        if self.variant is Variant.DLINEAR and not 1 <= self.ma_kernel <= 2 * self.lookback:
            raise InvalidSpec(
                f"moving-average kernel {self.ma_kernel} must lie in 1..2*lookback ({2 * self.lookback})"
            )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["variant"] = self.variant.value
        return d

    @classmethod
    def from_dict(cls, d: dict) -> ModelSpec:
        d = dict(d)
        pyr = d.pop("pyramid", None) or {}
        pool = PoolConfig(**pyr.get("pool", {}))
        return cls(pyramid=PyramidConfig(pyr.get("stages", 4), pool), **d)


def layer_layout(spec: ModelSpec) -> dict[str, tuple[int, int]]:
    """Ordered ``name -> (in_len, out_len)`` for every layer of ``spec``."""
    L, T, v = spec.lookback, spec.horizon, spec.variant
    if v in (Variant.LINEAR, Variant.NLINEAR):
        return {"head": (L, T)}
    if v is Variant.DLINEAR:
        return {"trend": (L, T), "seasonal": (L, T)}
    lx = level_lengths(L, spec.pyramid)
    if v is Variant.FPN_LINEAR:
        return {"head": (sum(lx), T)}
    if v is Variant.FPNM_LINEAR:
        return {f"head{i}": (n, T) for i, n in enumerate(lx, start=1)}
    ly = level_lengths(T, spec.pyramid)
    layout = {f"head{i}": (lx[i - 1], ly[i - 1]) for i in range(1, len(lx) + 1)}
    for i in range(1, len(ly)):
        layout[f"fuse{i}"] = (ly[i - 1] + ly[i], ly[i - 1])
    return layout


@dataclass
class ModelState:
    spec: ModelSpec
    layers: dict[str, LinearLayer]

    def params(self) -> dict[str, np.ndarray]:
        """Flat view ``{"<layer>.weight": array, "<layer>.bias": array}``.

        The arrays are the layers' own buffers, so in-place updates stick.
        """
        out = {}
        for name, layer in self.layers.items():
            out[f"{name}.weight"] = layer.weight
            out[f"{name}.bias"] = layer.bias
        return out

    @property
    def parameter_count(self) -> int:
        return sum(layer.parameter_count for layer in self.layers.values())

    def copy(self) -> ModelState:
        return ModelState(self.spec, {k: v.copy() for k, v in self.layers.items()})


@dataclass
class Gradients:
    params: dict[str, np.ndarray]
    input: np.ndarray


def init_model(spec: ModelSpec, seed: int = 0) -> ModelState:
    rng = np.random.default_rng(seed)
    bank = spec.channels if spec.individual else None
    layers = {
        name: LinearLayer.uniform(n_in, n_out, rng, channels=bank)
        for name, (n_in, n_out) in layer_layout(spec).items()
    }
    return ModelState(spec, layers)


def zero_model(spec: ModelSpec) -> ModelState:
    bank = spec.channels if spec.individual else None
    return ModelState(spec, {
        name: LinearLayer.zeros(n_in, n_out, channels=bank)
        for name, (n_in, n_out) in layer_layout(spec).items()
    })


# -- moving average (trend extraction) ---------------------------------------

def _ma_pads(k: int) -> tuple[int, int]:
    left = k // 2
    return left, k - 1 - left


def moving_average(x: np.ndarray, k: int) -> np.ndarray:
    """Stride-1 moving average along the last axis, replicate-padded to keep length."""
    x = np.asarray(x, dtype=np.float64)
    n = x.shape[-1]
    if k < 1 or k > 2 * n:
        raise ValueError(f"moving-average kernel {k} invalid for series of length {n}")
    left, right = _ma_pads(k)
    padded = np.concatenate(
        [np.repeat(x[..., :1], left, axis=-1), x, np.repeat(x[..., -1:], right, axis=-1)], axis=-1
    )
    return avg_pool_1d(padded, PoolConfig(k, 1, 0))


def moving_average_backward(k: int, n: int, out_grad: np.ndarray) -> np.ndarray:
    left, right = _ma_pads(k)
    g = avg_pool_1d_backward(PoolConfig(k, 1, 0), n + k - 1, out_grad)
    dx = g[..., left:left + n].copy()
    dx[..., 0] += g[..., :left].sum(axis=-1)
    dx[..., -1] += g[..., left + n:].sum(axis=-1)
    return dx


# -- forward / backward -------------------------------------------------------

def _check_batch(spec: ModelSpec, batch: np.ndarray) -> np.ndarray:
    batch = np.asarray(batch, dtype=np.float64)
    if batch.ndim != 3 or batch.shape[1:] != (spec.lookback, spec.channels):
        raise ShapeError(
            f"expected batch of shape (B, {spec.lookback}, {spec.channels}), got {batch.shape}"
        )
    return batch


def forward(state: ModelState, batch: np.ndarray):
    """Return ``(pred, cache)``; ``pred`` has shape ``(B, T, C)``."""
    spec = state.spec
    batch = _check_batch(spec, batch)
    x = np.ascontiguousarray(batch.transpose(2, 0, 1))  # (C, B, L)
    lay = state.layers
    v = spec.variant
    cache = {"variant": v, "batch_shape": batch.shape}

    if v is Variant.LINEAR:
        cache["x"] = x
        y = linear_forward(lay["head"], x)
    elif v is Variant.NLINEAR:
        last = x[..., -1:]
        xs = x - last
        cache["xs"] = xs
        y = linear_forward(lay["head"], xs) + last
    elif v is Variant.DLINEAR:
        trend = moving_average(x, spec.ma_kernel)
        seasonal = x - trend
        cache["trend"], cache["seasonal"] = trend, seasonal
        y = linear_forward(lay["trend"], trend) + linear_forward(lay["seasonal"], seasonal)
    else:
        levels = build_pyramid(x, spec.pyramid, axis=-1).levels
        if v is Variant.FPN_LINEAR:
            z = np.concatenate(levels, axis=-1)
            cache["z"] = z
            y = linear_forward(lay["head"], z)
        elif v is Variant.FPNM_LINEAR:
            cache["levels"] = levels
            y = linear_forward(lay["head1"], levels[0])
            for i in range(2, len(levels) + 1):
                y = y + linear_forward(lay[f"head{i}"], levels[i - 1])
        else:
            S = len(levels)
            heads = [linear_forward(lay[f"head{i}"], levels[i - 1]) for i in range(1, S + 1)]
            fuse_in = {}
            fused = heads[-1]
            for i in range(S - 1, 0, -1):
                z = np.concatenate([heads[i - 1], fused], axis=-1)
                fuse_in[i] = z
                fused = linear_forward(lay[f"fuse{i}"], z)
            cache["levels"], cache["fuse_in"] = levels, fuse_in
            y = fused
    return y.transpose(1, 2, 0), cache


def backward(state: ModelState, cache: dict, pred_grad: np.ndarray) -> Gradients:
    """Exact gradients of ``sum(pred * pred_grad)`` w.r.t. every parameter and the input."""
    spec = state.spec
    if cache.get("variant") is not spec.variant:
        raise ShapeError("cache was produced by a different model variant")
    B = cache["batch_shape"][0]
    pred_grad = np.asarray(pred_grad, dtype=np.float64)
    if pred_grad.shape != (B, spec.horizon, spec.channels):
        raise ShapeError(
            f"pred_grad shape {pred_grad.shape} != forward output {(B, spec.horizon, spec.channels)}"
        )
    g = np.ascontiguousarray(pred_grad.transpose(2, 0, 1))  # (C, B, T)
    lay = state.layers
    v = spec.variant
    grads: dict[str, np.ndarray] = {}

    def back(name, inp, out_grad):
        dw, db, dx = linear_backward(lay[name], inp, out_grad)
        grads[f"{name}.weight"], grads[f"{name}.bias"] = dw, db
        return dx

    if v is Variant.LINEAR:
        dx = back("head", cache["x"], g)
    elif v is Variant.NLINEAR:
        dxs = back("head", cache["xs"], g)
        dx = dxs.copy()
        dx[..., -1] += g.sum(axis=-1) - dxs.sum(axis=-1)
    elif v is Variant.DLINEAR:
        dtrend = back("trend", cache["trend"], g)
        dseason = back("seasonal", cache["seasonal"], g)
        dx = dseason + moving_average_backward(spec.ma_kernel, spec.lookback, dtrend - dseason)
    else:
        lx = level_lengths(spec.lookback, spec.pyramid)
        if v is Variant.FPN_LINEAR:
            dz = back("head", cache["z"], g)
            bounds = np.cumsum(lx)[:-1]
            level_grads = np.split(dz, bounds, axis=-1)
        elif v is Variant.FPNM_LINEAR:
            level_grads = [back(f"head{i}", lvl, g) for i, lvl in enumerate(cache["levels"], start=1)]
        else:
            ly = level_lengths(spec.horizon, spec.pyramid)
            S = len(lx)
            head_grads = [None] * S
            d_fused = g
            for i in range(1, S):
                dz = back(f"fuse{i}", cache["fuse_in"][i], d_fused)
                head_grads[i - 1] = dz[..., :ly[i - 1]]
                d_fused = dz[..., ly[i - 1]:]
            head_grads[S - 1] = d_fused
            level_grads = [
                back(f"head{i}", cache["levels"][i - 1], head_grads[i - 1]) for i in range(1, S + 1)
            ]
        dx = pyramid_backward(spec.pyramid, spec.lookback, level_grads, axis=-1)

    # Parameter order follows the layer layout so optimizers iterate deterministically.
    ordered = {k: grads[k] for k in state.params()}
    return Gradients(ordered, dx.transpose(1, 2, 0))


def predict(state: ModelState, batch: np.ndarray) -> np.ndarray:
    return forward(state, batch)[0]


# -- checkpoints ----------------------------------------------------------------

def save_checkpoint(state: ModelState, path: str | Path, extra: dict | None = None) -> Path:
    """Write an ``.npz`` checkpoint.

    Layout: ``__format__`` and ``__version__`` identify the container,
    ``__spec__`` holds the model spec as JSON, ``__extra__`` free-form JSON
    metadata, and each parameter is stored as ``<layer>.weight`` /
    ``<layer>.bias`` (npy arrays carry their own shape header).
    """
    path = Path(path)
    if path.suffix != ".npz":
        path = path.with_suffix(".npz")
    path.parent.mkdir(parents=True, exist_ok=True)
    arrays = {
        "__format__": np.array(CHECKPOINT_FORMAT),
        "__version__": np.array(CHECKPOINT_VERSION),
        "__spec__": np.array(json.dumps(state.spec.to_dict(), sort_keys=True)),
        "__extra__": np.array(json.dumps(extra or {}, sort_keys=True)),
    }
    arrays.update(state.params())
    with open(path, "wb") as fh:
        np.savez(fh, **arrays)
    return path


def load_checkpoint(path: str | Path) -> tuple[ModelState, dict]:
    with np.load(path, allow_pickle=False) as data:
        if "__format__" not in data or str(data["__format__"]) != CHECKPOINT_FORMAT:
            raise ValueError(f"{path}: not a {CHECKPOINT_FORMAT} file")
        version = int(data["__version__"])
        if version != CHECKPOINT_VERSION:
            raise ValueError(f"{path}: unsupported checkpoint version {version}")
        spec = ModelSpec.from_dict(json.loads(str(data["__spec__"])))
        extra = json.loads(str(data["__extra__"]))
        state = zero_model(spec)
        for name, arr in state.params().items():
            stored = data[name]
            if stored.shape != arr.shape:
                raise ShapeError(f"{path}: {name} has shape {stored.shape}, expected {arr.shape}")
            arr[...] = stored
    return state, extra
