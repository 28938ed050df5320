"""Test metrics, benchmark reports and cross-model comparisons."""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, field, fields

import numpy as np

from .models import predict

REPORT_SCHEMA = "fpnfusion-bench-report/1"


def _eval_batch_size(lookback: int, channels: int) -> int:
    # keep a batch of windows around 2M floats
    return int(max(1, min(256, 2_000_000 // max(1, lookback * channels))))


def evaluate(state, test_windows, batch_size: int | None = None) -> tuple[float, float]:
    """MSE and MAE over every window, step and channel, in standardized units."""
    if len(test_windows) == 0:
        raise ValueError("cannot evaluate on an empty window set")
    if batch_size is None:
        batch_size = _eval_batch_size(test_windows.lookback, test_windows.channels)
    sq = ab = 0.0
    n = 0
    for x, y in test_windows.batches(batch_size):
        d = predict(state, x) - y
        sq += float(np.sum(d * d))
        ab += float(np.sum(np.abs(d)))
        n += d.size
    return sq / n, ab / n


@dataclass
class BenchRow:
    dataset: str
    horizon: int
    model: str
    mse: float = float("nan")
    mae: float = float("nan")
    seed: int = 0
    runtime_s: float = 0.0
    n_seeds: int = 1
    mse_std: float = 0.0
    mae_std: float = 0.0
    status: str = "ok"
    error: str = ""
    notes: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "ok"


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    univariate: bool = False

    def add(self, row: BenchRow) -> None:
        self.rows.append(row)

    def cells(self) -> list[tuple[str, int]]:
        seen = []
        for r in self.rows:
            if (r.dataset, r.horizon) not in seen:
                seen.append((r.dataset, r.horizon))
        return seen

    def models(self) -> list[str]:
        seen = []
        for r in self.rows:
            if r.model not in seen:
                seen.append(r.model)
        return seen

    def get(self, dataset: str, horizon: int, model: str) -> BenchRow | None:
        for r in self.rows:
            if r.dataset == dataset and r.horizon == horizon and r.model == model:
                return r
        return None

    def failures(self) -> list[BenchRow]:
        return [r for r in self.rows if not r.ok]

    def best_flags(self) -> dict[tuple[str, int, str], tuple[bool, bool]]:
        """``(dataset, horizon, model) -> (mse is row-min, mae is row-min)``; ties all flagged."""
        flags = {}
        for ds, h in self.cells():
            row = [r for r in self.rows if r.dataset == ds and r.horizon == h and r.ok]
            if not row:
                continue
            best_mse = min(r.mse for r in row)
            best_mae = min(r.mae for r in row)
            for r in row:
                flags[(ds, h, r.model)] = (r.mse == best_mse, r.mae == best_mae)
        return flags


class MissingCells(KeyError):
    pass


def improvement(report: BenchReport, base_model: str, new_model: str,
                method: str = "mean-relative") -> dict[str, float]:
    """Relative error reduction of ``new_model`` against ``base_model``.

    ``mean-relative`` averages ``(base - new) / base`` over cells.
    ``ratio-of-means`` compares the cell-averaged metrics instead,
    ``(mean(base) - mean(new)) / mean(new)``, which is how headline
    improvement figures for this model family are usually summarised.
    """
    pairs, missing = [], []
    for ds, h in report.cells():
        b, n = report.get(ds, h, base_model), report.get(ds, h, new_model)
        if b is None or not b.ok:
            missing.append(f"{base_model}@{ds}/{h}")
        if n is None or not n.ok:
            missing.append(f"{new_model}@{ds}/{h}")
        if b is not None and n is not None and b.ok and n.ok:
            pairs.append((b, n))
    if missing:
        raise MissingCells("missing cells: " + ", ".join(missing))
    if not pairs:
        raise MissingCells("report has no cells")
    out = {}
    for metric in ("mse", "mae"):
        base = np.array([getattr(b, metric) for b, _ in pairs])
        new = np.array([getattr(n, metric) for _, n in pairs])
        if method == "mean-relative":
            out[metric] = float(np.mean((base - new) / base))
        elif method == "ratio-of-means":
            out[metric] = float((base.mean() - new.mean()) / new.mean())
        else:
            raise ValueError(f"unknown improvement method {method!r}")
    return out


def report_from_table(table: dict, models: list[str] | None = None) -> BenchReport:
    """Build a report from a ``model -> (dataset, horizon) -> (mse, mae)`` mapping."""
    rep = BenchReport()
    for model in models or list(table):
        for (ds, h), (m, a) in table[model].items():
            rep.add(BenchRow(ds, h, model, m, a))
    return rep


# -- emission -------------------------------------------------------------------

CSV_COLUMNS = [f.name for f in fields(BenchRow)] + ["mse_best", "mae_best", "quoted_mse", "quoted_mae"]


def _fmt(v: float) -> str:
    return "" if v is None or (isinstance(v, float) and np.isnan(v)) else f"{v:.6f}"


def emit_table(report: BenchReport, fmt: str = "markdown", quoted: dict | None = None) -> str:
    """Render ``report`` as ``markdown`` or ``csv`` text.

    ``quoted`` is an optional ``model -> (dataset, horizon) -> (mse, mae)``
    mapping of published numbers; they are shown in extra columns marked
    "quoted" and never take part in the best-value flags.
    """
    if fmt == "csv":
        return _emit_csv(report, quoted)
    if fmt in ("markdown", "md"):
        return _emit_markdown(report, quoted)
    raise ValueError(f"unknown table format {fmt!r}")


def _quoted_lookup(quoted, model, ds, h):
    if not quoted or model not in quoted:
        return None
    for (qds, qh), v in quoted[model].items():
        if qds.lower() == ds.lower() and qh == h:
            return v
    return None


def _emit_csv(report: BenchReport, quoted) -> str:
    buf = io.StringIO()
    buf.write(f"# schema: {REPORT_SCHEMA}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    flags = report.best_flags()
    for r in report.rows:
        d = asdict(r)
        d["mse"], d["mae"] = _fmt(r.mse), _fmt(r.mae)
        d["mse_std"], d["mae_std"] = _fmt(r.mse_std), _fmt(r.mae_std)
        d["runtime_s"] = f"{r.runtime_s:.3f}"
        fm, fa = flags.get((r.dataset, r.horizon, r.model), (False, False))
        d["mse_best"], d["mae_best"] = int(fm), int(fa)
        q = _quoted_lookup(quoted, r.model, r.dataset, r.horizon)
        d["quoted_mse"], d["quoted_mae"] = (q if q else ("", ""))
        w.writerow([d[c] for c in CSV_COLUMNS])
    return buf.getvalue()


def _emit_markdown(report: BenchReport, quoted) -> str:
    models = report.models()
    qmodels = list(quoted) if quoted else []
    head = ["Dataset", "T"]
    for m in models:
        head += [f"{m} MSE", f"{m} MAE"]
    for m in qmodels:
        head += [f"{m} MSE (quoted)", f"{m} MAE (quoted)"]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    flags = report.best_flags()
    for ds, h in report.cells():
        cells = [ds, str(h)]
        for m in models:
            r = report.get(ds, h, m)
            if r is None:
                cells += ["", ""]
            elif not r.ok:
                cells += ["failed", "failed"]
            else:
                fm, fa = flags[(ds, h, m)]
                for val, std, best in ((r.mse, r.mse_std, fm), (r.mae, r.mae_std, fa)):
                    s = f"{val:.3f}" + (f" ± {std:.3f}" if r.n_seeds > 1 else "")
                    cells.append(f"**{s}**" if best else s)
        for m in qmodels:
            q = _quoted_lookup(quoted, m, ds, h)
            cells += [f"{q[0]:.3f}", f"{q[1]:.3f}"] if q else ["", ""]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def read_report_csv(text: str) -> BenchReport:
    rows = []
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    for d in csv.DictReader(lines):
        rows.append(BenchRow(
            dataset=d["dataset"], horizon=int(d["horizon"]), model=d["model"],
            mse=float(d["mse"]) if d["mse"] else float("nan"),
            mae=float(d["mae"]) if d["mae"] else float("nan"),
            seed=int(d["seed"]), runtime_s=float(d["runtime_s"]), n_seeds=int(d["n_seeds"]),
            mse_std=float(d["mse_std"] or 0), mae_std=float(d["mae_std"] or 0),
            status=d["status"], error=d["error"], notes=d.get("notes", ""),
        ))
    return BenchReport(rows)
