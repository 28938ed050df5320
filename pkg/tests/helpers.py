"""Independent oracles shared by the tests."""

import numpy as np


def rel_err(a, b) -> float:
    """Max abs difference scaled by the larger max magnitude of the two arrays."""
    a, b = np.asarray(a, float), np.asarray(b, float)
    scale = max(np.max(np.abs(a)), np.max(np.abs(b)), 1e-12)
    return float(np.max(np.abs(a - b)) / scale)


def numeric_grad(f, x, h=1e-5):
    """Central differences of the scalar function ``f`` at array ``x`` (perturbed in place)."""
    g = np.zeros_like(x)
    it = np.nditer(x, flags=["multi_index"])
    for _ in it:
        idx = it.multi_index
        old = x[idx]
        x[idx] = old + h
        fp = f()
        x[idx] = old - h
        fm = f()
        x[idx] = old
        g[idx] = (fp - fm) / (2 * h)
    return g


def loop_linear(weight, bias, v):
    """Scalar-loop dense layer."""
    out = []
    for j in range(len(bias)):
        s = bias[j]
        for i in range(len(v)):
            s += weight[j][i] * v[i]
        out.append(s)
    return np.array(out)


def loop_pool(x, k, s, p=0):
    """Window means by explicit slicing over a zero-padded copy."""
    xp = [0.0] * p + list(x) + [0.0] * p
    out = []
    j = 0
    while j * s + k <= len(xp):
        out.append(sum(xp[j * s:j * s + k]) / k)
        j += 1
    return np.array(out)


def write_series_csv(path, values, columns=None, start="2016-07-01 00:00:00", freq="h"):
    import pandas as pd

    values = np.asarray(values)
    columns = columns or [f"c{i}" for i in range(values.shape[1] - 1)] + ["OT"]
    df = pd.DataFrame(values, columns=columns)
    df.insert(0, "date", pd.date_range(start, periods=len(values), freq=freq).strftime("%Y-%m-%d %H:%M:%S"))
    df.to_csv(path, index=False, float_format="%.6f")
    return path


def synthetic_values(n, channels, seed=0):
    """Noisy daily/weekly seasonal series with a slow drift, one column per channel."""
    rng = np.random.default_rng(seed)
    t = np.arange(n)[:, None]
    phase = rng.uniform(0, 2 * np.pi, size=(1, channels))
    amp = rng.uniform(0.5, 2.0, size=(1, channels))
    x = amp * np.sin(2 * np.pi * t / 24 + phase) + 0.5 * np.sin(2 * np.pi * t / 168 + 2 * phase)
    x = x + 0.002 * t * rng.uniform(-1, 1, size=(1, channels))
    return x + 0.2 * rng.standard_normal((n, channels)) + 10
