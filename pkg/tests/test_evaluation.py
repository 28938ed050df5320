import numpy as np
import pytest

from fpnfusion.core import mae, mse
from fpnfusion.data import WindowSet
from fpnfusion.evaluation import (
    BenchReport,
    BenchRow,
    MissingCells,
    emit_table,
    evaluate,
    improvement,
    read_report_csv,
    report_from_table,
)
from fpnfusion.models import ModelSpec, init_model, predict, zero_model
from fpnfusion.pyramid import PyramidConfig
from fpnfusion.reference_results import ABLATION, MULTIVARIATE


def noise_windows(n=500, L=24, T=12, C=2, seed=0):
    v = np.random.default_rng(seed).standard_normal((n, C))
    return WindowSet(v, (0, n), L, T)


def test_perfect_model_scores_zero():
    ws = noise_windows(C=1, L=8, T=8)

    class Same(WindowSet):
        def batch(self, idx):
            x, _ = super().batch(idx)
            return x, x.copy()

    same = Same(ws.values, ws.rows, 8, 8)
    state = zero_model(ModelSpec("linear", 8, 8))
    state.layers["head"].weight[...] = np.eye(8)
    assert evaluate(state, same) == (0.0, 0.0)


def test_zero_model_gives_target_second_moment():
    ws = noise_windows()
    state = zero_model(ModelSpec("linear", 24, 12, channels=2))
    _, y = ws.batch(np.arange(len(ws)))
    m, a = evaluate(state, ws)
    assert m == pytest.approx(np.mean(y ** 2), rel=1e-12)
    assert a == pytest.approx(np.mean(np.abs(y)), rel=1e-12)


def test_matches_metrics_on_concatenated_predictions():
    ws = noise_windows()
    state = init_model(ModelSpec("fpn-fusion", 24, 12, channels=2, pyramid=PyramidConfig(3)), seed=1)
    x, y = ws.batch(np.arange(len(ws)))
    pred = predict(state, x)
    m, a = evaluate(state, ws, batch_size=37)
    assert m == pytest.approx(mse(pred, y), rel=1e-12)
    assert a == pytest.approx(mae(pred, y), rel=1e-12)


def test_batch_partition_invariance():
    ws = noise_windows(n=800)
    state = init_model(ModelSpec("dlinear", 24, 12, channels=2, ma_kernel=5), seed=2)
    m1, a1 = evaluate(state, ws, batch_size=1)
    m2, a2 = evaluate(state, ws, batch_size=256)
    assert abs(m1 - m2) < 1e-10 and abs(a1 - a2) < 1e-10


def two_model_report(base, new):
    rep = BenchReport()
    for i, (b, n) in enumerate(zip(base, new)):
        rep.add(BenchRow("toy", 96 * (i + 1), "DLinear", b, b))
        rep.add(BenchRow("toy", 96 * (i + 1), "FPN-fusion", n, n))
    return rep


def test_improvement_examples():
    assert improvement(two_model_report([1.0, 2.0], [0.5, 1.0]), "DLinear", "FPN-fusion") == {"mse": 0.5, "mae": 0.5}
    same = two_model_report([0.3, 0.7], [0.3, 0.7])
    assert improvement(same, "DLinear", "FPN-fusion") == {"mse": 0.0, "mae": 0.0}
    assert improvement(same, "DLinear", "DLinear", method="ratio-of-means") == {"mse": 0.0, "mae": 0.0}


def test_improvement_lists_missing_cells():
    rep = two_model_report([1.0, 2.0], [0.5, 1.0])
    rep.rows.pop()
    with pytest.raises(MissingCells, match="FPN-fusion@toy/192"):
        improvement(rep, "DLinear", "FPN-fusion")


def test_improvement_unknown_method():
    with pytest.raises(ValueError):
        improvement(two_model_report([1.0], [0.5]), "DLinear", "FPN-fusion", method="median")


def test_quoted_ablation_ratio_of_means():
    # Headline gains over DLinear recomputed from the published ablation grid.
    rep = report_from_table(ABLATION, ["DLinear", "FPN-fusion"])
    imp = improvement(rep, "DLinear", "FPN-fusion", method="ratio-of-means")
    assert imp["mse"] == pytest.approx(0.168, abs=5e-4)
    assert imp["mae"] == pytest.approx(0.118, abs=1e-3)


def test_quoted_table_mean_relative_is_smaller():
    rep = report_from_table(MULTIVARIATE, ["DLinear", "FPN-fusion"])
    imp = improvement(rep, "DLinear", "FPN-fusion")
    assert 0.0 < imp["mse"] < 0.168 and 0.0 < imp["mae"] < 0.118


def test_emit_empty_report_is_header_only():
    md = emit_table(BenchReport())
    assert md.splitlines() == ["| Dataset | T |", "|---|---|"]
    csv_text = emit_table(BenchReport(), "csv")
    assert csv_text.splitlines()[0].startswith("# schema:") and len(csv_text.splitlines()) == 2


def test_emit_flags_minimum():
    rep = BenchReport([BenchRow("ETTh1", 96, "A", 0.40, 0.30), BenchRow("ETTh1", 96, "B", 0.38, 0.31)])
    md = emit_table(rep)
    assert "**0.380**" in md and "**0.300**" in md
    assert "**0.400**" not in md and "**0.310**" not in md
    rows = list(read_csv_rows(emit_table(rep, "csv")))
    assert [(r["model"], r["mse_best"], r["mae_best"]) for r in rows] == [("A", "0", "1"), ("B", "1", "0")]


def test_emit_ties_flag_all():
    rep = BenchReport([BenchRow("ETTh1", 96, "A", 0.4, 0.3), BenchRow("ETTh1", 96, "B", 0.4, 0.3)])
    assert emit_table(rep).count("**") == 8


def test_emit_failed_cell_not_flagged():
    rep = BenchReport([BenchRow("ETTh1", 96, "A", 0.4, 0.3),
                       BenchRow("ETTh1", 96, "B", status="failed", error="boom")])
    md = emit_table(rep)
    assert "failed" in md and "**0.400**" in md


def test_emit_byte_stable_and_csv_round_trip():
    rep = report_from_table(ABLATION, ["DLinear", "FPN-fusion"])
    assert emit_table(rep, "csv") == emit_table(rep, "csv")
    assert emit_table(rep) == emit_table(rep)
    back = read_report_csv(emit_table(rep, "csv"))
    assert [(r.dataset, r.horizon, r.model, r.mse, r.mae) for r in back.rows] == \
        [(r.dataset, r.horizon, r.model, r.mse, r.mae) for r in rep.rows]


def test_quoted_columns_are_marked_and_not_flagged():
    rep = BenchReport([BenchRow("ETTh1", 96, "FPN-fusion", 0.5, 0.5)])
    md = emit_table(rep, quoted={"PatchTST": MULTIVARIATE["PatchTST"]})
    assert "PatchTST MSE (quoted)" in md
    assert "**0.500**" in md  # a smaller quoted number does not steal the flag
    rows = list(read_csv_rows(emit_table(rep, "csv", quoted={"FPN-fusion": MULTIVARIATE["FPN-fusion"]})))
    assert rows[0]["quoted_mse"] == str(MULTIVARIATE["FPN-fusion"][("ETTh1", 96)][0])


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_table(BenchReport(), "html")


def test_multi_seed_cells_show_spread():
    rep = BenchReport([BenchRow("ETTh1", 96, "A", 0.4, 0.3, n_seeds=3, mse_std=0.01, mae_std=0.02)])
    assert "0.400 ± 0.010" in emit_table(rep)


def read_csv_rows(text):
    import csv
    return csv.DictReader([ln for ln in text.splitlines() if not ln.startswith("#")])
