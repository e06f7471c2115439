"""Condition-based maintenance simulation with a neural degradation estimator.

Compares a classical threshold-inspection policy against a neural variant
that replaces physical inspections with a trained estimator plus a risk
margin, over a gamma-process degradation model.
"""

from .config import DEFAULT_SEED, RunConfig, apply_preset, load_config
from .estimator import DegradationRegressor
from .gamma_process import GammaProcess, gamma_moments, gamma_pdf, sample_degradation
from .neural import (
    MlpModel,
    apply_update,
    backprop_gradient,
    minmax_denormalize,
    minmax_normalize,
    mlp_forward,
    mse,
    perceptron_output,
    sigmoid,
    sse,
    tanh_act,
)
from .rng import RngStream, derive_stream
from .simulate import (
    CostLedger,
    CostParams,
    PolicyConfig,
    SimOutcome,
    Thresholds,
    cost_rate_from_ledger,
    simulate_classical,
    simulate_ncbm,
)
from .sweep import SweepGrid, SweepResult, comparison_metrics, ema_smooth, run_sweep
from .training import (
    DegradationDataset,
    RiskMargin,
    SplitIndices,
    TrainingRecord,
    generate_training_data,
    load_dataset,
    load_model,
    risk_margin,
    save_dataset,
    save_model,
    split_dataset,
    train_model,
)

__all__ = [
    "DEFAULT_SEED",
    "CostLedger",
    "CostParams",
    "DegradationDataset",
    "DegradationRegressor",
    "GammaProcess",
    "MlpModel",
    "PolicyConfig",
    "RiskMargin",
    "RngStream",
    "RunConfig",
    "SimOutcome",
    "SplitIndices",
    "SweepGrid",
    "SweepResult",
    "Thresholds",
    "TrainingRecord",
    "apply_preset",
    "apply_update",
    "backprop_gradient",
    "comparison_metrics",
    "cost_rate_from_ledger",
    "derive_stream",
    "ema_smooth",
    "gamma_moments",
    "gamma_pdf",
    "generate_training_data",
    "load_config",
    "load_dataset",
    "load_model",
    "minmax_denormalize",
    "minmax_normalize",
    "mlp_forward",
    "mse",
    "perceptron_output",
    "risk_margin",
    "run_sweep",
    "sample_degradation",
    "save_dataset",
    "save_model",
    "sigmoid",
    "simulate_classical",
    "simulate_ncbm",
    "split_dataset",
    "sse",
    "tanh_act",
    "train_model",
]
