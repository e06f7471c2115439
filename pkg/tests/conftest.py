"""Shared fixtures: the default trained pipeline and desk-preset sweeps.

Everything expensive is session-scoped so the acceptance suite and the
unit tests share one trained model and one pair of sweeps.
"""

import dataclasses
from types import SimpleNamespace

import pytest

from ncbm import (
    RunConfig,
    apply_preset,
    generate_training_data,
    risk_margin,
    run_sweep,
    save_model,
    split_dataset,
    train_model,
)
from ncbm.rng import DATA_NAMESPACE, INIT_NAMESPACE, SPLIT_NAMESPACE, derive_stream


@pytest.fixture(scope="session")
def desk_config():
    return apply_preset(RunConfig(), "desk")


@pytest.fixture(scope="session")
def pipeline(desk_config):
    """Dataset, splits, trained model and risk margin at the default seed."""
    cfg = desk_config
    data = generate_training_data(
        cfg.process(),
        cfg.x_pc,
        cfg.x_fc,
        cfg.t_horizon,
        cfg.sample_interval,
        derive_stream(cfg.seed, DATA_NAMESPACE, 0).generator(),
    )
    splits = split_dataset(data, derive_stream(cfg.seed, SPLIT_NAMESPACE, 0).generator())
    model, record = train_model(
        data,
        splits,
        derive_stream(cfg.seed, INIT_NAMESPACE, 0).generator(),
        hidden_size=cfg.hidden_size,
        activation=cfg.activation,
        learning_rate=cfg.learning_rate,
        max_epochs=cfg.max_epochs,
        patience=cfg.patience,
    )
    margin = risk_margin(model, data)
    return SimpleNamespace(
        config=cfg, data=data, splits=splits, model=model, record=record, margin=margin
    )


def _desk_sweep(pipeline, discount_rate):
    cfg = pipeline.config
    policy = dataclasses.replace(
        cfg.policy(),
        costs=dataclasses.replace(cfg.costs(), discount_rate=discount_rate),
    )
    return run_sweep(
        cfg.grid(),
        policy,
        pipeline.model,
        pipeline.margin,
        cfg.n_reps,
        cfg.seed,
        alpha=cfg.alpha,
    )


@pytest.fixture(scope="session")
def sweep_gamma0(pipeline):
    return _desk_sweep(pipeline, 0.0)


@pytest.fixture(scope="session")
def sweep_gamma005(pipeline):
    return _desk_sweep(pipeline, 0.05)


@pytest.fixture(scope="session")
def model_file(pipeline, tmp_path_factory):
    path = tmp_path_factory.mktemp("model") / "model.json"
    save_model(pipeline.model, pipeline.margin, str(path))
    return str(path)
