"""Parameter and multiply-accumulate (MAC) accounting.

MACs count the weight multiplies of the linear layers over a whole batch.
Bias adds, pooling/moving-average adds and the elementwise combine steps are
tallied separately as ``add_ops`` and never folded into MACs.
"""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass

import numpy as np

from .core import count_multiplies
from .models import ModelSpec, ModelState, Variant, forward
from .pyramid import level_lengths

# Reference efficiency figures (L=336, T=96, C=7, batch 32), quoted, not computed.
QUOTED_TABLE = {
    "FPN-fusion": {"macs": 13.56e6, "params": 0.42e6},
    "DLinear": {"macs": 14.52e6, "params": 0.45e6},
    "PatchTST": {"macs": 164.97e6, "params": 0.46e6},
    "Autoformer": {"macs": 90517.61e6, "params": 10.54e6},
    "Informer": {"macs": 79438.08e6, "params": 11.33e6},
}


class ConsistencyError(RuntimeError):
    """Instrumented and closed-form counts disagree."""


def _weights_and_outputs(spec: ModelSpec) -> tuple[int, int]:
    """(total weight entries, total output units) of one channel's layers."""
    L, T, v = spec.lookback, spec.horizon, spec.variant
    if v in (Variant.LINEAR, Variant.NLINEAR):
        return L * T, T
    if v is Variant.DLINEAR:
        return 2 * L * T, 2 * T
    lx = level_lengths(L, spec.pyramid)
    if v is Variant.FPN_LINEAR:
        return sum(lx) * T, T
    if v is Variant.FPNM_LINEAR:
        return sum(lx) * T, len(lx) * T
    ly = level_lengths(T, spec.pyramid)
    w = sum(a * b for a, b in zip(lx, ly))
    w += sum((ly[i] + ly[i + 1]) * ly[i] for i in range(len(ly) - 1))
    outs = sum(ly) + sum(ly[:-1])
    return w, outs


def count_params(spec: ModelSpec) -> int:
    w, b = _weights_and_outputs(spec)
    return (w + b) * (spec.channels if spec.individual else 1)


def count_macs(spec: ModelSpec, batch: int) -> int:
    w, _ = _weights_and_outputs(spec)
    return batch * spec.channels * w


def count_add_ops(spec: ModelSpec, batch: int) -> int:
    """Additions outside the linear layers' dot products.

    Includes bias adds, every pooling window's ``k - 1`` adds, the DLinear
    moving average and residual, the NLinear shift, and output sums.
    """
    L, T, v = spec.lookback, spec.horizon, spec.variant
    _, bias_adds = _weights_and_outputs(spec)
    per_series = bias_adds
    if v is Variant.NLINEAR:
        per_series += L + T
    elif v is Variant.DLINEAR:
        per_series += L * (spec.ma_kernel - 1) + L + T
    elif v.uses_pyramid:
        k = spec.pyramid.pool.kernel
        per_series += sum(level_lengths(L, spec.pyramid)[1:]) * (k - 1)
        if v is Variant.FPNM_LINEAR:
            per_series += (spec.pyramid.stages - 1) * T
    return batch * spec.channels * per_series


@dataclass
class EfficiencyRecord:
    model: str
    L: int
    T: int
    C: int
    batch: int
    params: int
    macs: int
    add_ops: int
    notes: str = ""


def instrument_forward(state: ModelState, batch: np.ndarray | int = 32, seed: int = 0) -> EfficiencyRecord:
    """Run one real forward pass with a multiply counter and cross-check it.

    ``batch`` is either a ``(B, L, C)`` array or a batch size, in which case a
    seeded Gaussian batch is generated.
    """
    spec = state.spec
    if isinstance(batch, (int, np.integer)):
        batch = np.random.default_rng(seed).standard_normal((int(batch), spec.lookback, spec.channels))
    B = batch.shape[0]
    with count_multiplies() as counter:
        forward(state, batch)
    macs = count_macs(spec, B)
    if counter[0] != macs:
        raise ConsistencyError(
            f"{spec.variant.value}: instrumented MACs {counter[0]} != closed form {macs}"
        )
    params = count_params(spec)
    if state.parameter_count != params:
        raise ConsistencyError(
            f"{spec.variant.value}: model holds {state.parameter_count} parameters, closed form {params}"
        )
    return EfficiencyRecord(
        model=spec.variant.label, L=spec.lookback, T=spec.horizon, C=spec.channels, batch=B,
        params=params, macs=macs, add_ops=count_add_ops(spec, B),
        notes="individual" if spec.individual else "shared",
    )


def records_csv(records: list[EfficiencyRecord], with_quoted: bool = True) -> str:
    buf = io.StringIO()
    cols = list(EfficiencyRecord.__dataclass_fields__)
    if with_quoted:
        cols += ["quoted_macs", "quoted_params"]
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in records:
        row = list(asdict(r).values())
        if with_quoted:
            q = QUOTED_TABLE.get(r.model, {})
            row += [q.get("macs", ""), q.get("params", "")]
        w.writerow(row)
    return buf.getvalue()


def _human(n: float) -> str:
    return f"{n / 1e6:.2f}M"


def records_table(records: list[EfficiencyRecord]) -> str:
    header = f"{'Model':<12} {'L':>5} {'T':>5} {'C':>5} {'batch':>6} {'MACs':>14} {'Params':>10} {'add-ops':>12} {'quoted MACs':>12} {'quoted Params':>14}"
    lines = [header, "-" * len(header)]
    for r in records:
        q = QUOTED_TABLE.get(r.model)
        qm = _human(q["macs"]) if q else "-"
        qp = _human(q["params"]) if q else "-"
        lines.append(
            f"{r.model:<12} {r.L:>5} {r.T:>5} {r.C:>5} {r.batch:>6} {r.macs:>14,} {r.params:>10,} "
            f"{r.add_ops:>12,} {qm:>12} {qp:>14}"
        )
    return "\n".join(lines)
