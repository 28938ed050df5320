import subprocess
import sys

import numpy as np
import pytest

from fpnfusion.cli import main
from fpnfusion.data import DATA_ROOT_ENV
from fpnfusion.evaluation import read_report_csv
from fpnfusion.models import load_checkpoint
from helpers import synthetic_values, write_series_csv


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_help_exits_zero():
    proc = subprocess.run([sys.executable, "-m", "fpnfusion", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "inspect-pyramid" in proc.stdout


def test_subcommand_help(capsys):
    with pytest.raises(SystemExit) as info:
        main(["train", "--help"])
    assert info.value.code == 0 and "--univariate" in capsys.readouterr().out


def test_unknown_variant_lists_valid(capsys):
    with pytest.raises(SystemExit) as info:
        main(["profile", "--model", "transformer"])
    err = capsys.readouterr().err
    assert info.value.code == 2 and "fpn-fusion" in err and "dlinear" in err


def test_profile_defaults(capsys):
    code, out, _ = run(capsys, "profile")
    assert code == 0
    assert "424,256" in out and "13,499,360" in out
    assert "452,928" in out and "14,450,688" in out


def test_profile_csv_and_figure(capsys, tmp_path):
    code, _, _ = run(capsys, "profile", "--model", "fpn-fusion", "--csv", str(tmp_path / "eff.csv"),
                     "--figures", str(tmp_path / "fig"))
    assert code == 0
    assert (tmp_path / "eff.csv").read_text().splitlines()[1].startswith("FPN-fusion,336,96,7,32,424256,13499360")
    assert (tmp_path / "fig" / "efficiency.png").stat().st_size > 0


def test_profile_invalid_spec(capsys):
    code, _, err = run(capsys, "profile", "--model", "fpn-fusion", "--horizon", "6")
    assert code == 2 and "level" in err


def test_inspect_pyramid_lengths(capsys):
    code, out, _ = run(capsys, "inspect-pyramid", "--lookback", "336", "--stages", "4")
    assert code == 0
    rows = [ln.split() for ln in out.splitlines()[2:]]
    assert [int(r[1]) for r in rows] == [336, 167, 83, 41]


def test_inspect_pyramid_constant_has_zero_variance(capsys):
    code, out, _ = run(capsys, "inspect-pyramid", "--constant", "3.5")
    assert code == 0
    assert all(float(ln.split()[2]) == 0.0 for ln in out.splitlines()[2:])


def test_inspect_pyramid_too_deep(capsys):
    code, _, err = run(capsys, "inspect-pyramid", "--lookback", "10", "--stages", "4")
    assert code == 2 and "level 4" in err


def test_inspect_pyramid_dataset_and_figure(capsys, small_csv, tmp_path):
    code, out, _ = run(capsys, "inspect-pyramid", "--dataset", str(small_csv), "--lookback", "96",
                       "--offset", "10", "--figures", str(tmp_path))
    assert code == 0 and "OT" in out and (tmp_path / "pyramid.png").exists()


def test_missing_dataset_exits_2_with_path(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(DATA_ROOT_ENV, str(tmp_path))
    code, _, err = run(capsys, "train", "--dataset", "ETTh1", "--model", "fpn-fusion", "--horizon", "96")
    assert code == 2 and str(tmp_path / "ETTh1.csv") in err


def test_train_requires_flags(capsys):
    code, _, err = run(capsys, "train", "--model", "linear")
    assert code == 2 and "--dataset" in err


def test_ili_horizon_96_rejected(capsys):
    code, _, err = run(capsys, "bench", "--datasets", "ILI", "--horizons", "96")
    assert code == 2 and "24, 36, 48, 60" in err


def test_train_end_to_end(capsys, small_csv, tmp_path):
    code, out, _ = run(capsys, "train", "--dataset", str(small_csv), "--model", "fpn-fusion", "--horizon", "24",
                       "--lookback", "48", "--max-epochs", "2", "--stages", "3", "--out", str(tmp_path / "run"),
                       "--figures", str(tmp_path / "fig"))
    assert code == 0
    fields = dict(kv.split("=", 1) for kv in out.split())
    assert fields["model"] == "FPN-fusion" and fields["T"] == "24" and float(fields["test_mse"]) > 0
    state, extra = load_checkpoint(fields["checkpoint"])
    assert state.spec.channels == 3 and extra["test_mse"] == pytest.approx(float(fields["test_mse"]), abs=1e-6)
    assert (tmp_path / "run" / "trainlog.csv").exists()
    assert (tmp_path / "fig" / "training_curve.png").exists()


def test_train_univariate_is_reproducible(capsys, small_csv, tmp_path):
    args = ["train", "--dataset", str(small_csv), "--model", "dlinear", "--horizon", "12",
            "--lookback", "48", "--max-epochs", "2", "--univariate", "--ma-kernel", "5"]
    _, a, _ = run(capsys, *args, "--out", str(tmp_path / "a"))
    _, b, _ = run(capsys, *args, "--out", str(tmp_path / "b"))
    strip = lambda s: s.split(" checkpoint=")[0]
    assert strip(a) == strip(b)
    pa, _ = load_checkpoint(tmp_path / "a" / "model.npz")
    pb, _ = load_checkpoint(tmp_path / "b" / "model.npz")
    assert all(pa.params()[k].tobytes() == pb.params()[k].tobytes() for k in pa.params())


def test_config_file_with_flag_override(capsys, small_csv, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(f"# toy run\ndataset = {small_csv}\nmodel = nlinear\nhorizon = 12\n"
                   "lookback = 48\nmax-epochs = 1\nunivariate = true\n")
    code, out, _ = run(capsys, "train", "--config", str(cfg), "--horizon", "24", "--out", str(tmp_path / "r"))
    assert code == 0 and "model=NLinear" in out and "T=24" in out
    state, _ = load_checkpoint(tmp_path / "r" / "model.npz")
    assert state.spec.channels == 1


def test_config_unknown_key(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = blue\n")
    with pytest.raises(SystemExit) as info:
        main(["profile", "--config", str(cfg)])
    assert info.value.code == 2 and "colour" in capsys.readouterr().err


def test_bench_two_models_one_cell(capsys, tmp_path):
    write_series_csv(tmp_path / "toy.csv", synthetic_values(600, 2, seed=5))
    code, out, _ = run(capsys, "bench", "--datasets", "toy", "--models", "fpn-fusion,dlinear",
                       "--horizons", "24", "--lookback", "96", "--max-epochs", "2", "--data-root", str(tmp_path),
                       "--out", str(tmp_path / "rep"), "--figures", str(tmp_path / "fig"))
    assert code == 0
    report = read_report_csv((tmp_path / "rep" / "bench_report.csv").read_text())
    assert [(r.dataset, r.horizon, r.model) for r in report.rows] == [("toy", 24, "FPN-fusion"), ("toy", 24, "DLinear")]
    assert "FPN-fusion vs DLinear" in out
    assert (tmp_path / "fig" / "bench_mse.png").exists()


def test_bench_records_failed_cell(capsys, tmp_path):
    write_series_csv(tmp_path / "toy.csv", synthetic_values(600, 1, seed=5))
    code, out, err = run(capsys, "bench", "--datasets", "toy,absent", "--models", "linear", "--horizons", "24",
                         "--lookback", "48", "--max-epochs", "1", "--data-root", str(tmp_path),
                         "--out", str(tmp_path / "rep"))
    assert code == 1 and "FAILED absent" in err
    rows = read_report_csv((tmp_path / "rep" / "bench_report.csv").read_text()).rows
    assert [r.status for r in rows] == ["ok", "failed"]


def test_bench_quoted_columns(capsys, tmp_path):
    write_series_csv(tmp_path / "ETTh1.csv", synthetic_values(17420, 7, seed=2),
                     ["HUFL", "HULL", "MUFL", "MULL", "LUFL", "LULL", "OT"])
    code, out, _ = run(capsys, "bench", "--datasets", "ETTh1", "--models", "linear", "--horizons", "96",
                       "--univariate", "--smoke", "--max-epochs", "1", "--quoted", "--data-root", str(tmp_path),
                       "--out", str(tmp_path / "rep"))
    assert code == 0 and "FPN-fusion MSE (quoted)" in out and "0.055" in out
