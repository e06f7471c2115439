"""Command-line entry points.

Subcommands:
  gen-data   simulate a maintenance history and write the tau,x dataset CSV
  train      fit the estimator; write model JSON, training-record CSV and
             residuals CSV
  simulate   one policy run; write the event ledger CSV and print the cost rate
  sweep      sweep the inspection interval; write the comparison CSV (and
             optional SVG charts) and print the reduction summary

Exit codes: 0 success, 1 usage/config, 2 I/O, 3 data/training, 4 model/policy.
"""

from __future__ import annotations

import argparse
import sys

from .config import RunConfig, apply_preset, load_config
from .rng import DATA_NAMESPACE, INIT_NAMESPACE, SPLIT_NAMESPACE, derive_stream
from .simulate import simulate_classical, simulate_ncbm
from .svg import line_chart
from .sweep import comparison_metrics, run_sweep
from .training import (
    ModelFormatError,
    _atomic_write,
    generate_training_data,
    load_dataset,
    load_model,
    risk_margin,
    save_dataset,
    save_model,
    split_dataset,
    train_model,
)

EXIT_USAGE = 1
EXIT_IO = 2
EXIT_DATA = 3
EXIT_MODEL = 4

SWEEP_HEADER = (
    "t_i,classical_mean,classical_std,ncbm_mean,ncbm_std,"
    "classical_mean_ema,classical_std_ema,ncbm_mean_ema,ncbm_std_ema"
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--seed", type=int, help="master seed")
    common.add_argument("--preset", choices=("desk", "full"), help="sweep preset")
    common.add_argument("--gamma", type=float, dest="discount_rate", help="discount rate")
    common.add_argument("--ncbm-semantics", choices=("code", "prose"), dest="ncbm_semantics")
    common.add_argument("--deterministic", action="store_true", default=None,
                        help="replace degradation draws with the mean path")
    common.add_argument("--t-i", type=float, dest="t_i", help="inspection interval (years)")
    common.add_argument("--k-checks", type=int, dest="k_checks")
    common.add_argument("--n-reps", type=int, dest="n_reps")
    common.add_argument("--alpha", type=float, dest="alpha", help="EMA smoothing factor")
    common.add_argument("--workers", type=int, dest="workers")
    common.add_argument("--grid-step", type=float, dest="grid_step")

    parser = _Parser(prog="ncbm", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-data", parents=[common], help="generate training data CSV")
    p.add_argument("--out", required=True, help="output dataset CSV path")

    p = sub.add_parser("train", parents=[common], help="train the estimator")
    p.add_argument("--data", required=True, help="input dataset CSV")
    p.add_argument("--model-out", required=True, help="output model JSON path")
    p.add_argument("--record-out", help="training-record CSV (default: <model>.record.csv)")
    p.add_argument("--residuals-out", help="residuals CSV (default: <model>.residuals.csv)")

    p = sub.add_parser("simulate", parents=[common], help="single policy run")
    p.add_argument("--policy", required=True, choices=("classical", "ncbm"))
    p.add_argument("--model", help="model JSON (required for ncbm)")
    p.add_argument("--ledger-out", required=True, help="event ledger CSV path")

    p = sub.add_parser("sweep", parents=[common], help="inspection-interval sweep")
    p.add_argument("--model", required=True, help="model JSON path")
    p.add_argument("--out-prefix", required=True, help="output prefix for CSV/SVG")
    p.add_argument("--svg", action="store_true", help="also write SVG charts")
    return parser


_OVERRIDE_KEYS = (
    "seed",
    "discount_rate",
    "ncbm_semantics",
    "deterministic",
    "t_i",
    "k_checks",
    "n_reps",
    "alpha",
    "workers",
    "grid_step",
)


def _resolve_config(args) -> RunConfig:
    overrides = {
        key: getattr(args, key)
        for key in _OVERRIDE_KEYS
        if getattr(args, key, None) is not None
    }
    try:
        config = load_config(args.config, None)
        if args.preset:
            config = apply_preset(config, args.preset)
        if overrides:
            config = load_config(None, {**_config_dict(config), **overrides})
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    return config


def _config_dict(config: RunConfig) -> dict:
    import dataclasses

    return dataclasses.asdict(config)


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def cmd_gen_data(args) -> int:
    config = _resolve_config(args)
    gen = derive_stream(config.seed, DATA_NAMESPACE, 0).generator()
    data = generate_training_data(
        config.process(), config.x_pc, config.x_fc, config.t_horizon,
        config.sample_interval, gen,
    )
    save_dataset(data, args.out)
    print(f"wrote {len(data)} records to {args.out}")
    return 0


def cmd_train(args) -> int:
    config = _resolve_config(args)
    data = load_dataset(args.data)
    splits = split_dataset(data, derive_stream(config.seed, SPLIT_NAMESPACE, 0).generator())
    try:
        model, record = train_model(
            data,
            splits,
            derive_stream(config.seed, INIT_NAMESPACE, 0).generator(),
            hidden_size=config.hidden_size,
            activation=config.activation,
            learning_rate=config.learning_rate,
            max_epochs=config.max_epochs,
            patience=config.patience,
        )
    except ValueError as exc:
        print(f"training failed: {exc}", file=sys.stderr)
        return EXIT_DATA
    margin = risk_margin(model, data)
    save_model(model, margin, args.model_out)

    record_path = args.record_out or args.model_out + ".record.csv"
    lines = ["epoch,train_mse,val_mse,test_mse,grad_norm"]
    for e in range(record.epochs_run):
        lines.append(
            f"{e},{_fmt(record.train_mse[e])},{_fmt(record.val_mse[e])},"
            f"{_fmt(record.test_mse[e])},{_fmt(record.grad_norm[e])}"
        )
    _atomic_write(record_path, "\n".join(lines) + "\n")

    residuals_path = args.residuals_out or args.model_out + ".residuals.csv"
    from .neural import mlp_forward

    outputs = mlp_forward(model, data.tau)
    lines = ["tau,target,output,error"]
    for t, d, o in zip(data.tau, data.x, outputs):
        lines.append(f"{_fmt(t)},{_fmt(d)},{_fmt(o)},{_fmt(d - o)}")
    _atomic_write(residuals_path, "\n".join(lines) + "\n")

    print(
        f"trained {record.epochs_run} epochs (best {record.best_epoch}); "
        f"risk margin {margin.err:.6g}; model written to {args.model_out}"
    )
    return 0


def cmd_simulate(args) -> int:
    config = _resolve_config(args)
    gen = derive_stream(config.seed, 0, 0).generator()
    if args.policy == "ncbm":
        if not args.model:
            print("ncbm policy requires --model", file=sys.stderr)
            return EXIT_MODEL
        model, margin = load_model(args.model)
        outcome = simulate_ncbm(config.policy(), model, margin, gen)
    else:
        outcome = simulate_classical(config.policy(), gen)
    lines = ["event_type,time,discounted_cost"]
    for event_type, t, cost in outcome.ledger.events(config.costs()):
        lines.append(f"{event_type},{_fmt(t)},{_fmt(cost)}")
    _atomic_write(args.ledger_out, "\n".join(lines) + "\n")
    print(f"cost_rate {_fmt(outcome.cost_rate)}")
    return 0


def cmd_sweep(args) -> int:
    config = _resolve_config(args)
    model, margin = load_model(args.model)
    result = run_sweep(
        config.grid(),
        config.policy(),
        model,
        margin,
        config.n_reps,
        config.seed,
        alpha=config.alpha,
        workers=config.workers,
    )
    lines = [SWEEP_HEADER]
    for idx in range(result.grid.size):
        lines.append(
            ",".join(
                _fmt(series[idx])
                for series in (
                    result.grid,
                    result.classical_mean,
                    result.classical_std,
                    result.ncbm_mean,
                    result.ncbm_std,
                    result.classical_mean_ema,
                    result.classical_std_ema,
                    result.ncbm_mean_ema,
                    result.ncbm_std_ema,
                )
            )
        )
    csv_path = args.out_prefix + ".csv"
    _atomic_write(csv_path, "\n".join(lines) + "\n")
    if args.svg:
        _atomic_write(
            args.out_prefix + "_cost_rate.svg",
            line_chart(
                result.grid,
                {"classical": result.classical_mean_ema, "n-cbm": result.ncbm_mean_ema},
                "Cost Rate",
                "Inspection interval (year)",
                "Expectation of cost rate (per year)",
            ),
        )
        _atomic_write(
            args.out_prefix + "_cost_std.svg",
            line_chart(
                result.grid,
                {"classical": result.classical_std_ema, "n-cbm": result.ncbm_std_ema},
                "Standard Deviation of Cost Rate",
                "Inspection interval (year)",
                "Standard deviation of cost rate",
            ),
        )
    metrics = comparison_metrics(result)
    print(
        f"mean cost reduction {metrics['mean_cost_reduction_pct']:.2f}% "
        f"mean std reduction {metrics['mean_std_reduction_pct']:.2f}%"
    )
    return 0


_COMMANDS = {
    "gen-data": cmd_gen_data,
    "train": cmd_train,
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModelFormatError as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except FileNotFoundError as exc:
        if args.command in ("sweep", "simulate") and exc.filename == getattr(args, "model", None):
            print(f"model error: {exc}", file=sys.stderr)
            return EXIT_MODEL
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
