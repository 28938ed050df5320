"""Command-line entry point: ``fpnfusion {train,bench,profile,inspect-pyramid}``.

Exit codes: 0 success, 1 at least one benchmark cell failed, 2 usage or
configuration error.

Every subcommand takes ``--config FILE``, a flat ``key = value`` file whose
keys are the long option names (``batch-size`` or ``batch_size``). Flags on
the command line override file values. ``#`` starts a comment.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import plots
from .bench import SMOKE_FRACTION, SMOKE_MAX_EPOCHS, ProtocolError, check_horizons, default_lookback, run_grid
from .core import PoolConfig
from .data import DATA_ROOT_ENV, DataError, dataset_info, load_csv, prepare, resolve_dataset
from .efficiency import ConsistencyError, instrument_forward, records_csv, records_table
from .evaluation import MissingCells, emit_table, evaluate, improvement
from .models import InvalidSpec, ModelSpec, Variant, init_model, parse_variant
from .pyramid import InvalidPyramidConfig, PyramidConfig, build_pyramid, level_lengths
from .reference_results import MULTIVARIATE, UNIVARIATE
from .training import TrainConfig, TrainingDiverged, train, write_run

log = logging.getLogger("fpnfusion")

EXIT_OK, EXIT_CELL_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _variant(name: str) -> Variant:
    try:
        return parse_variant(name)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def _str_list(text: str) -> list[str]:
    return [t for t in text.replace(",", " ").split() if t]


def read_config(path: str | Path) -> dict[str, str]:
    out = {}
    for n, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected 'key = value', got {line!r}")
        k, v = (s.strip() for s in line.split("=", 1))
        out[k.replace("-", "_")] = v
    return out


def _add_training_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("training")
    g.add_argument("--batch-size", type=int, default=32)
    g.add_argument("--max-epochs", type=int, default=30)
    g.add_argument("--patience", type=int, default=3)
    g.add_argument("--lr", type=float, default=1e-3)
    g.add_argument("--lr-decay", type=float, default=0.5)
    g.add_argument("--decay-after", type=int, default=3)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--stages", type=int, default=4, help="pyramid levels for FPN variants")
    g.add_argument("--ma-kernel", type=int, default=25, help="DLinear moving-average window")
    g.add_argument("--shared", action="store_true", help="share head weights across channels")
    g.add_argument("--lookback", type=int, help="look-back window (default per dataset)")
    g.add_argument("--univariate", action="store_true", help="forecast the target channel only")
    g.add_argument("--data-root", help=f"dataset directory (default ${DATA_ROOT_ENV} or ./data)")


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    parser = argparse.ArgumentParser(prog="fpnfusion", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train one model on one dataset")
    p.add_argument("--config")
    p.add_argument("--dataset", help="known dataset name or path to a CSV")
    p.add_argument("--model", type=_variant)
    p.add_argument("--horizon", type=int)
    p.add_argument("--target", help="target channel for --univariate (default OT / last column)")
    p.add_argument("--out", help="run directory (default runs/<dataset>-<model>-<horizon>)")
    p.add_argument("--figures", help="directory for the training-curve figure")
    _add_training_flags(p)

    p = sub.add_parser("bench", help="run a dataset x model x horizon grid")
    p.add_argument("--config")
    p.add_argument("--datasets", type=_str_list)
    p.add_argument("--models", type=_str_list, default=["fpn-fusion", "dlinear"])
    p.add_argument("--horizons", type=_int_list, help="default: each dataset's standard horizons")
    p.add_argument("--seeds", type=int, default=1, help="seeds per cell (mean and std reported)")
    p.add_argument("--subsample", type=float, help="keep this fraction of windows per split")
    p.add_argument("--smoke", action="store_true",
                   help=f"quick run: --subsample {SMOKE_FRACTION} and at most {SMOKE_MAX_EPOCHS} epochs")
    p.add_argument("--quoted", action="store_true", help="add quoted reference columns")
    p.add_argument("--out", default="bench", help="output directory for report files")
    p.add_argument("--figures", help="directory for report figures")
    _add_training_flags(p)

    p = sub.add_parser("profile", help="parameter and MAC accounting")
    p.add_argument("--config")
    p.add_argument("--model", nargs="+", type=_variant, default=[Variant.FPN_FUSION, Variant.DLINEAR])
    p.add_argument("--lookback", type=int, default=336)
    p.add_argument("--horizon", type=int, default=96)
    p.add_argument("--channels", type=int, default=7)
    p.add_argument("--batch", type=int, default=32)
    p.add_argument("--stages", type=int, default=4)
    p.add_argument("--ma-kernel", type=int, default=25)
    p.add_argument("--shared", action="store_true")
    p.add_argument("--csv", help="write the efficiency CSV here")
    p.add_argument("--figures", help="directory for the efficiency figure")

    p = sub.add_parser("inspect-pyramid", help="pyramid level lengths and variances")
    p.add_argument("--config")
    p.add_argument("--lookback", type=int, default=336)
    p.add_argument("--stages", type=int, default=4)
    p.add_argument("--kernel", type=int, default=3)
    p.add_argument("--stride", type=int, default=2)
    p.add_argument("--padding", type=int, default=0)
    p.add_argument("--dataset", help="take the sample from this dataset (standardized)")
    p.add_argument("--data-root")
    p.add_argument("--channel", help="channel name (default: target / last column)")
    p.add_argument("--offset", type=int, default=0, help="first row of the sample")
    p.add_argument("--constant", type=float, help="use a constant series instead of data")
    p.add_argument("--seed", type=int, default=0, help="seed of the random-walk sample")
    p.add_argument("--figures", help="directory for the pyramid figure")
    return parser, sub.choices


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser, subparsers = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        sub = subparsers[args.command]
        try:
            cfg = read_config(args.config)
        except OSError as exc:
            parser.error(f"cannot read config: {exc}")
        except UsageError as exc:
            parser.error(str(exc))
        actions = {a.dest: a for a in sub._actions}
        defaults = {}
        for k, v in cfg.items():
            if k not in actions or k in ("config", "help"):
                parser.error(f"{args.config}: unknown key {k!r}")
            act = actions[k]
            if isinstance(act, argparse._StoreTrueAction):
                defaults[k] = v.lower() in ("1", "true", "yes", "on")
                continue
            try:
                val = act.type(v) if act.type else v
                if act.nargs == "+":
                    val = [act.type(t) if act.type else t for t in _str_list(v)]
            except (argparse.ArgumentTypeError, ValueError) as exc:
                parser.error(f"{args.config}: bad value for {k}: {exc}")
            defaults[k] = val
        sub.set_defaults(**defaults)
        args = parser.parse_args(argv)
    return args


def _train_config(args) -> TrainConfig:
    try:
        return TrainConfig(batch_size=args.batch_size, max_epochs=args.max_epochs, patience=args.patience,
                           lr=args.lr, lr_decay=args.lr_decay, decay_after=args.decay_after, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load(dataset: str, root):
    path = resolve_dataset(dataset, root)
    if not path.exists():
        raise UsageError(f"dataset file not found: {path}")
    info = dataset_info(dataset)
    return load_csv(path, name=info.name if info else Path(dataset).stem)


def cmd_train(args) -> int:
    for flag in ("dataset", "model", "horizon"):
        if getattr(args, flag) is None:
            raise UsageError(f"train: --{flag} is required")
    raw = _load(args.dataset, args.data_root)
    L = args.lookback or default_lookback(raw.name)
    try:
        data = prepare(raw, L, args.horizon, univariate=args.univariate, target=args.target)
        spec = ModelSpec(args.model, L, args.horizon, data.channels, PyramidConfig(args.stages),
                         args.ma_kernel, individual=not args.shared)
    except (DataError, InvalidSpec, InvalidPyramidConfig) as exc:
        raise UsageError(str(exc)) from None
    cfg = _train_config(args)
    out = Path(args.out or f"runs/{raw.name}-{spec.variant.value}-{args.horizon}")
    try:
        state, tlog = train(spec, data, cfg)
    except TrainingDiverged as exc:
        print(f"training diverged: {exc}", file=sys.stderr)
        write_run(out, exc.last_good, exc.log, {"diverged": str(exc)})
        return EXIT_CELL_FAILED
    test_mse, test_mae = evaluate(state, data.test)
    extra = {
        "dataset": raw.name, "model": spec.variant.label, "horizon": args.horizon, "lookback": L,
        "univariate": args.univariate, "seed": cfg.seed,
        "test_mse": test_mse, "test_mae": test_mae,
    }
    paths = write_run(out, state, tlog, extra)
    if args.figures:
        plots.training_curve(tlog, Path(args.figures) / "training_curve.png")
    best = tlog.best
    print(f"dataset={raw.name} model={spec.variant.label} T={args.horizon} L={L} "
          f"best_epoch={tlog.best_epoch} val_mse={best.val_mse:.6f} val_mae={best.val_mae:.6f} "
          f"test_mse={test_mse:.6f} test_mae={test_mae:.6f} checkpoint={paths['checkpoint']}")
    return EXIT_OK


def cmd_bench(args) -> int:
    if not args.datasets:
        raise UsageError("bench: --datasets is required")
    try:
        for m in args.models:
            parse_variant(m)
        for ds in args.datasets:
            if args.horizons:
                check_horizons(ds, args.horizons)
    except (ValueError, ProtocolError) as exc:
        raise UsageError(str(exc)) from None
    cfg = _train_config(args)
    subsample = args.subsample
    if args.smoke:
        subsample = subsample or SMOKE_FRACTION
        cfg = replace(cfg, max_epochs=min(cfg.max_epochs, SMOKE_MAX_EPOCHS))
    seeds = [args.seed + k for k in range(max(1, args.seeds))]
    report = run_grid(
        args.datasets, args.models, args.horizons, univariate=args.univariate, cfg=cfg, seeds=seeds,
        lookback=args.lookback, subsample=subsample, root=args.data_root,
        stages=args.stages, individual=not args.shared, ma_kernel=args.ma_kernel,
    )
    quoted = None
    if args.quoted:
        quoted = UNIVARIATE if args.univariate else MULTIVARIATE
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "bench_report.csv").write_text(emit_table(report, "csv", quoted))
    md = emit_table(report, "markdown", quoted)
    (out / "bench_report.md").write_text(md)
    print(md, end="")
    models = report.models()
    if "FPN-fusion" in models and "DLinear" in models:
        try:
            imp = improvement(report, "DLinear", "FPN-fusion")
            print(f"FPN-fusion vs DLinear: MSE reduction {imp['mse']:.1%}, MAE reduction {imp['mae']:.1%}")
        except MissingCells as exc:
            print(f"improvement not computed: {exc}")
    if args.figures:
        plots.bench_figure(report, Path(args.figures) / "bench_mse.png", "mse")
        plots.bench_figure(report, Path(args.figures) / "bench_mae.png", "mae")
    for r in report.failures():
        print(f"FAILED {r.dataset} T={r.horizon} {r.model}: {r.error}", file=sys.stderr)
    return EXIT_CELL_FAILED if report.failures() else EXIT_OK


def cmd_profile(args) -> int:
    records = []
    for v in args.model:
        try:
            spec = ModelSpec(v, args.lookback, args.horizon, args.channels,
                             PyramidConfig(args.stages), args.ma_kernel, individual=not args.shared)
        except (InvalidSpec, InvalidPyramidConfig) as exc:
            raise UsageError(str(exc)) from None
        if args.batch < 0:
            raise UsageError("--batch must be >= 0")
        try:
            records.append(instrument_forward(init_model(spec, 0), args.batch))
        except ConsistencyError as exc:
            print(f"internal consistency failure: {exc}", file=sys.stderr)
            return EXIT_CELL_FAILED
    print(records_table(records))
    if args.csv:
        Path(args.csv).parent.mkdir(parents=True, exist_ok=True)
        Path(args.csv).write_text(records_csv(records))
    if args.figures:
        plots.efficiency_figure(records, Path(args.figures) / "efficiency.png")
    return EXIT_OK


def cmd_inspect_pyramid(args) -> int:
    try:
        cfg = PyramidConfig(args.stages, PoolConfig(args.kernel, args.stride, args.padding))
        lengths = level_lengths(args.lookback, cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.constant is not None:
        x, source = np.full(args.lookback, args.constant), f"constant {args.constant}"
    elif args.dataset:
        raw = _load(args.dataset, args.data_root)
        try:
            data = prepare(raw, args.lookback, 1, univariate=True, target=args.channel)
        except DataError as exc:
            raise UsageError(str(exc)) from None
        values = data.train.values[:, 0]
        if not 0 <= args.offset <= len(values) - args.lookback:
            raise UsageError(f"offset {args.offset} out of range for {len(values)} rows")
        x = values[args.offset:args.offset + args.lookback]
        source = f"{raw.name}:{data.columns[0]} rows {args.offset}..{args.offset + args.lookback - 1}"
    else:
        x = np.cumsum(np.random.default_rng(args.seed).standard_normal(args.lookback))
        source = f"random walk (seed {args.seed})"
    levels = build_pyramid(x, cfg).levels
    print(f"source: {source}")
    print(f"{'level':>5} {'length':>7} {'variance':>12}")
    for i, (n, lvl) in enumerate(zip(lengths, levels), start=1):
        print(f"{i:>5} {n:>7} {float(np.var(lvl)):>12.6f}")
    if args.figures:
        plots.pyramid_figure(levels, Path(args.figures) / "pyramid.png", source)
    return EXIT_OK


COMMANDS = {
    "train": cmd_train,
    "bench": cmd_bench,
    "profile": cmd_profile,
    "inspect-pyramid": cmd_inspect_pyramid,
}


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"fpnfusion {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
