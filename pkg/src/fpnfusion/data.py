"""Benchmark CSV loading, chronological splits, scaling and sliding windows."""

from __future__ import annotations

import csv
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

import numpy as np
import pandas as pd

log = logging.getLogger(__name__)

DATA_ROOT_ENV = "FPNFUSION_DATA_ROOT"


@dataclass(frozen=True)
class DatasetInfo:
    name: str
    filename: str
    channels: int
    rows: int
    granularity: str
    lookback: int = 336
    horizons: tuple[int, ...] = (96, 192, 336, 720)
    target: str = "OT"


_STD_H = (96, 192, 336, 720)

KNOWN_DATASETS: dict[str, DatasetInfo] = {
    d.name.lower(): d
    for d in [
        DatasetInfo("ETTh1", "ETTh1.csv", 7, 17420, "1hour"),
        DatasetInfo("ETTh2", "ETTh2.csv", 7, 17420, "1hour"),
        DatasetInfo("ETTm1", "ETTm1.csv", 7, 69680, "5min"),
        DatasetInfo("ETTm2", "ETTm2.csv", 7, 69680, "5min"),
        DatasetInfo("traffic", "traffic.csv", 862, 17544, "1hour"),
        DatasetInfo("electricity", "electricity.csv", 321, 26304, "1hour"),
        # 21 measured indicators in the public weather.csv
        DatasetInfo("weather", "weather.csv", 21, 52696, "10min"),
        DatasetInfo("ILI", "national_illness.csv", 7, 966, "1week", lookback=104,
                    horizons=(24, 36, 48, 60)),
    ]
}


def dataset_info(name: str) -> DatasetInfo | None:
    return KNOWN_DATASETS.get(name.lower())


class DataError(ValueError):
    pass


@dataclass
class RawDataset:
    name: str
    timestamps: np.ndarray
    values: np.ndarray  # (N, C)
    columns: list[str]
    granularity: str = ""

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def n_channels(self) -> int:
        return self.values.shape[1]


def load_csv(path: str | Path, name: str | None = None) -> RawDataset:
    """Read a benchmark CSV: a ``date`` column followed by numeric channels."""
    path = Path(path)
    name = name or path.stem
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        raise DataError(f"{path}: file is empty") from None
    if df.shape[1] == 0 or df.columns[0].strip().lower() != "date":
        raise DataError(f"{path}: first column must be 'date'")
    if len(df) == 0:
        raise DataError(f"{path}: no data rows")
    if df.shape[1] < 2:
        raise DataError(f"{path}: no value columns")

    cols = list(df.columns[1:])
    values = np.empty((len(df), len(cols)))
    for j, col in enumerate(cols):
        num = pd.to_numeric(df[col].str.strip(), errors="coerce")
        bad = num.isna().to_numpy()
        if bad.any():
            i = int(np.argmax(bad))
            # +2: header is line 1, data rows start at line 2
            raise DataError(
                f"{path}: unparseable cell {df[col].iloc[i]!r} at row {i + 2}, column {j + 2} ({col!r})"
            )
        values[:, j] = num.to_numpy(dtype=np.float64)

    try:
        stamps = pd.to_datetime(df.iloc[:, 0].str.strip())
    except (ValueError, TypeError) as exc:
        raise DataError(f"{path}: cannot parse date column: {exc}") from None
    stamps = stamps.to_numpy()
    d = np.diff(stamps)
    if (d == np.timedelta64(0)).any():
        i = int(np.argmax(d == np.timedelta64(0)))
        raise DataError(f"{path}: duplicate timestamp {stamps[i + 1]} at row {i + 3}")
    if (d < np.timedelta64(0)).any():
        i = int(np.argmax(d < np.timedelta64(0)))
        raise DataError(f"{path}: timestamps not increasing at row {i + 3}")

    info = dataset_info(name)
    if info is not None and (values.shape[1] != info.channels or values.shape[0] != info.rows):
        log.warning("%s: loaded %d rows x %d channels, expected %d x %d",
                    name, values.shape[0], values.shape[1], info.rows, info.channels)
    log.info("%s: %d rows, %d channels", name, values.shape[0], values.shape[1])
    return RawDataset(name, stamps, values, cols, info.granularity if info else "")


# -- manifest / resolution ------------------------------------------------------

MANIFEST_FIELDS = ("name", "path", "channels", "granularity")


def read_manifest(path: str | Path) -> dict[str, dict]:
    """CSV manifest with header ``name,path,channels,granularity``.

    Relative paths resolve against the manifest's directory.
    """
    path = Path(path)
    out = {}
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        missing = set(MANIFEST_FIELDS) - set(reader.fieldnames or [])
        if missing:
            raise DataError(f"{path}: manifest missing columns {sorted(missing)}")
        for row in reader:
            p = Path(row["path"])
            if not p.is_absolute():
                p = path.parent / p
            out[row["name"].lower()] = {
                "name": row["name"], "path": p,
                "channels": int(row["channels"]) if row["channels"] else None,
                "granularity": row["granularity"],
            }
    return out


def data_root(root: str | Path | None = None) -> Path:
    return Path(root or os.environ.get(DATA_ROOT_ENV) or "data")


def resolve_dataset(name: str, root: str | Path | None = None) -> Path:
    """Find a dataset file by name or path.

    Order: an existing file path, ``manifest.csv`` in the data root, then the
    known file name inside the data root.
    """
    p = Path(name)
    if p.suffix == ".csv" and p.exists():
        return p
    base = data_root(root)
    manifest = base / "manifest.csv"
    if manifest.exists():
        entry = read_manifest(manifest).get(name.lower())
        if entry is not None:
            return entry["path"]
    info = dataset_info(name)
    return base / (info.filename if info else f"{name}.csv")


# -- splits ---------------------------------------------------------------------

@dataclass(frozen=True)
class SplitSpec:
    train: tuple[int, int]
    val: tuple[int, int]
    test: tuple[int, int]
    lookback: int = 0

    def window_range(self, part: str) -> tuple[int, int]:
        """Row range used to cut windows for ``part``.

        Validation and test ranges reach back ``lookback`` rows so their first
        target block starts right at the split border.
        """
        start, end = getattr(self, part)
        if part != "train":
            start -= self.lookback
        return max(start, 0), end


def standard_split(name: str, n_rows: int, lookback: int, horizon: int = 1) -> SplitSpec:
    key = name.lower()
    if key.startswith("etth"):
        tr, va, te = 12 * 30 * 24, 4 * 30 * 24, 4 * 30 * 24
    elif key.startswith("ettm"):
        tr, va, te = 12 * 30 * 24 * 4, 4 * 30 * 24 * 4, 4 * 30 * 24 * 4
    else:
        tr = int(n_rows * 0.7)
        te = int(n_rows * 0.2)
        va = n_rows - tr - te
    if tr + va + te > n_rows:
        raise DataError(f"{name}: {n_rows} rows cannot hold the {tr}/{va}/{te} split")
    split = SplitSpec((0, tr), (tr, tr + va), (tr + va, tr + va + te), lookback)
    for part in ("train", "val", "test"):
        a, b = split.window_range(part)
        if b - a < lookback + horizon:
            raise DataError(
                f"{name}: {part} range of {b - a} rows is too short for lookback {lookback} "
                f"+ horizon {horizon}"
            )
    return split


# -- scaling --------------------------------------------------------------------

@dataclass
class Scaler:
    mean: np.ndarray
    std: np.ndarray

    def apply(self, values: np.ndarray) -> np.ndarray:
        return (values - self.mean) / self.std

    def inverse(self, values: np.ndarray) -> np.ndarray:
        return values * self.std + self.mean


def fit_scaler(values: np.ndarray, split: SplitSpec, columns: list[str] | None = None) -> Scaler:
    a, b = split.train
    train = values[a:b]
    mean = train.mean(axis=0)
    std = train.std(axis=0)
    zero = np.flatnonzero(std == 0)
    if zero.size:
        names = [columns[i] for i in zero] if columns else list(zero)
        raise DataError(f"zero variance on train rows for channel(s) {names}")
    return Scaler(mean, std)


# -- windows --------------------------------------------------------------------

@dataclass
class SeriesWindow:
    x: np.ndarray  # (L, C)
    y: np.ndarray  # (T, C)
    start: int


@dataclass
class WindowSet:
    """All stride-1 windows inside ``rows`` of a standardized matrix."""

    values: np.ndarray
    rows: tuple[int, int]
    lookback: int
    horizon: int
    index: np.ndarray = field(default=None)

    def __post_init__(self):
        a, b = self.rows
        n = b - a - self.lookback - self.horizon + 1
        if self.index is None:
            self.index = np.arange(max(n, 0))
        if n < 1:
            raise DataError(
                f"row range {self.rows} too short for lookback {self.lookback} + horizon {self.horizon}"
            )

    @property
    def channels(self) -> int:
        return self.values.shape[1]

    def __len__(self) -> int:
        return len(self.index)

    def starts(self) -> np.ndarray:
        return self.rows[0] + self.index

    def batch(self, idx) -> tuple[np.ndarray, np.ndarray]:
        s = self.starts()[np.asarray(idx)]
        span = np.arange(self.lookback + self.horizon)
        block = self.values[s[:, None] + span[None, :]]
        return block[:, :self.lookback], block[:, self.lookback:]

    def batches(self, batch_size: int, order=None) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        order = np.arange(len(self)) if order is None else order
        for i in range(0, len(order), batch_size):
            yield self.batch(order[i:i + batch_size])

    def __iter__(self) -> Iterator[SeriesWindow]:
        for i, s in enumerate(self.starts()):
            x, y = self.batch([i])
            yield SeriesWindow(x[0], y[0], int(s))

    def subsample(self, fraction: float) -> WindowSet:
        """Evenly spaced subset keeping about ``fraction`` of the windows (at least one)."""
        k = max(1, int(round(len(self) * fraction)))
        pick = np.unique(np.linspace(0, len(self) - 1, k).round().astype(int))
        return WindowSet(self.values, self.rows, self.lookback, self.horizon, self.index[pick])


def windows(values: np.ndarray, split: SplitSpec, part: str, lookback: int, horizon: int) -> WindowSet:
    return WindowSet(values, split.window_range(part), lookback, horizon)


@dataclass
class PreparedData:
    name: str
    columns: list[str]
    scaler: Scaler
    split: SplitSpec
    train: WindowSet
    val: WindowSet
    test: WindowSet

    @property
    def channels(self) -> int:
        return self.train.channels


def prepare(ds: RawDataset, lookback: int, horizon: int, univariate: bool = False,
            target: str | None = None, split: SplitSpec | None = None) -> PreparedData:
    """Split, standardize on train rows and cut windows for all three parts."""
    values, columns = ds.values, list(ds.columns)
    if univariate:
        info = dataset_info(ds.name)
        target = target or (info.target if info else columns[-1])
        if target not in columns:
            raise DataError(f"{ds.name}: target channel {target!r} not in {columns}")
        j = columns.index(target)
        values, columns = values[:, j:j + 1], [target]
    split = split or standard_split(ds.name, len(values), lookback, horizon)
    scaler = fit_scaler(values, split, columns)
    std = scaler.apply(values)
    return PreparedData(
        ds.name, columns, scaler, split,
        *(windows(std, split, part, lookback, horizon) for part in ("train", "val", "test")),
    )
