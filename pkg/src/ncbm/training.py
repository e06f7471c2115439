"""Training pipeline for the degradation estimator.

Generates (elapsed time, degradation) pairs by stochastic simulation,
splits them 70/15/15, trains the 1-H-1 network with full-batch gradient
descent and early stopping, computes the risk margin and serializes the
result to JSON.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass, field

import numpy as np

from .gamma_process import GammaProcess, sample_degradation
from .neural import MlpModel, apply_update, backprop_gradient, mlp_forward


class ModelFormatError(ValueError):
    """Raised when a model file is malformed; message names the field."""


@dataclass(frozen=True)
class DegradationDataset:
    """Ordered (tau, x) records from one simulated maintenance history."""

    tau: np.ndarray
    x: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "tau", np.asarray(self.tau, dtype=float))
        object.__setattr__(self, "x", np.asarray(self.x, dtype=float))
        if self.tau.shape != self.x.shape:
            raise ValueError("tau and x must have the same length")

    def __len__(self) -> int:
        return self.tau.size

    @property
    def records(self):
        return list(zip(self.tau.tolist(), self.x.tolist()))


@dataclass(frozen=True)
class SplitIndices:
    train: np.ndarray
    validation: np.ndarray
    test: np.ndarray


@dataclass(frozen=True)
class RiskMargin:
    """Signed maximum residual (target - estimate) over the full dataset."""

    err: float


@dataclass
class TrainingRecord:
    """Per-epoch curves; MSE values are in original target units."""

    train_mse: list = field(default_factory=list)
    val_mse: list = field(default_factory=list)
    test_mse: list = field(default_factory=list)
    grad_norm: list = field(default_factory=list)
    best_epoch: int = 0

    @property
    def epochs_run(self) -> int:
        return len(self.train_mse)


def generate_training_data(
    proc: GammaProcess,
    x_pc: float,
    x_fc: float,
    horizon: float,
    sample_interval: float,
    gen: np.random.Generator,
) -> DegradationDataset:
    """Simulate one maintenance history and collect (tau, x) pairs.

    Every sample_interval a degradation level is drawn at the time elapsed
    since the last replacement; crossing the preventive threshold (which
    the failure threshold implies) resets the replacement clock.
    """
    if sample_interval <= 0:
        raise ValueError("sample_interval must be positive")
    if horizon <= sample_interval:
        raise ValueError("horizon must exceed sample_interval")
    if not (0 < x_pc < x_fc):
        raise ValueError("thresholds must satisfy 0 < x_pc < x_fc")
    taus, xs = [], []
    t_replace = 0.0
    i = 1
    while i * sample_interval < horizon:
        t_i = i * sample_interval
        tau = t_i - t_replace
        x = sample_degradation(proc, tau, gen)
        taus.append(tau)
        xs.append(x)
        if x >= x_pc:
            t_replace = t_i
        i += 1
    return DegradationDataset(np.array(taus), np.array(xs))


def split_dataset(data: DegradationDataset, gen: np.random.Generator) -> SplitIndices:
    """Random 70/15/15 partition; 15% shares rounded to nearest integer."""
    n = len(data)
    if n == 0:
        raise ValueError("cannot split an empty dataset")
    perm = gen.permutation(n)
    n_side = int(n * 0.15 + 0.5)
    return SplitIndices(
        train=np.sort(perm[2 * n_side :]),
        validation=np.sort(perm[:n_side]),
        test=np.sort(perm[n_side : 2 * n_side]),
    )


def _init_model(
    hidden_size: int,
    activation: str,
    in_min: float,
    in_max: float,
    out_min: float,
    out_max: float,
    gen: np.random.Generator,
) -> MlpModel:
    return MlpModel(
        hidden_weights=gen.uniform(-0.5, 0.5, hidden_size),
        hidden_biases=gen.uniform(-0.5, 0.5, hidden_size),
        output_weights=gen.uniform(-0.5, 0.5, hidden_size),
        output_bias=float(gen.uniform(-0.5, 0.5)),
        hidden_activation=activation,
        in_min=in_min,
        in_max=in_max,
        out_min=out_min,
        out_max=out_max,
    )


def train_model(
    data: DegradationDataset,
    splits: SplitIndices,
    init_gen: np.random.Generator,
    hidden_size: int = 10,
    activation: str = "tanh",
    learning_rate: float = 0.2,
    max_epochs: int = 10000,
    patience: int = 6,
) -> tuple[MlpModel, TrainingRecord]:
    """Full-batch gradient-descent training with validation early stopping.

    Stops after `patience` consecutive epochs of nondecreasing validation
    MSE or at max_epochs, and returns the weights of the best-validation
    epoch. Normalization bounds come from the full dataset.
    """
    if hidden_size < 1:
        raise ValueError("hidden_size must be at least 1")
    in_min, in_max = float(data.tau.min()), float(data.tau.max())
    out_min, out_max = float(data.x.min()), float(data.x.max())
    if in_min == in_max or out_min == out_max:
        raise ValueError("degenerate dataset: constant tau or constant x")

    model = _init_model(hidden_size, activation, in_min, in_max, out_min, out_max, init_gen)
    # Normalized-space MSE scales to original units by (half the target range)^2.
    out_scale = ((out_max - out_min) / 2.0) ** 2

    def split_mse(m: MlpModel, idx: np.ndarray) -> float:
        pred = mlp_forward(m, data.tau[idx])
        return float(np.mean((pred - data.x[idx]) ** 2))

    record = TrainingRecord()
    best_model = model
    best_val = math.inf
    stall = 0
    for epoch in range(max_epochs):
        grad, _ = backprop_gradient(model, data.tau[splits.train], data.x[splits.train])
        model = apply_update(model, grad, learning_rate)
        val = split_mse(model, splits.validation)
        record.train_mse.append(split_mse(model, splits.train))
        record.val_mse.append(val)
        record.test_mse.append(split_mse(model, splits.test))
        record.grad_norm.append(grad.norm())
        if val < best_val:
            best_val = val
            best_model = model
            record.best_epoch = epoch
            stall = 0
        else:
            # epochs without a new validation best count toward the stop
            stall += 1
            if stall >= patience:
                break
    return best_model, record


def risk_margin(model: MlpModel, data: DegradationDataset) -> RiskMargin:
    """Maximum signed residual over the full dataset.

    Negative when the model over-predicts every record; the margin is used
    as-is, it is never clamped.
    """
    if len(data) == 0:
        raise ValueError("risk margin of an empty dataset is undefined")
    residuals = data.x - mlp_forward(model, data.tau)
    return RiskMargin(err=float(residuals.max()))


def save_model(model: MlpModel, margin: RiskMargin, path: str) -> None:
    """Write model + margin as JSON; atomic so failures leave no partial file."""
    payload = {
        "input_dim": 1,
        "hidden": model.hidden_size,
        "activation": model.hidden_activation,
        "w1": [[w] for w in model.hidden_weights.tolist()],
        "b1": model.hidden_biases.tolist(),
        "w2": [model.output_weights.tolist()],
        "b2": model.output_bias,
        "in_min": model.in_min,
        "in_max": model.in_max,
        "out_min": model.out_min,
        "out_max": model.out_max,
        "risk_margin": margin.err,
    }
    _atomic_write(path, json.dumps(payload, indent=2) + "\n")


def load_model(path: str) -> tuple[MlpModel, RiskMargin]:
    """Read a model file, validating dimensions and field types."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelFormatError(f"not valid JSON: {exc}") from exc
    for key in (
        "input_dim",
        "hidden",
        "activation",
        "w1",
        "b1",
        "w2",
        "b2",
        "in_min",
        "in_max",
        "out_min",
        "out_max",
        "risk_margin",
    ):
        if key not in payload:
            raise ModelFormatError(f"missing field {key!r}")
    if payload["input_dim"] != 1:
        raise ModelFormatError("input_dim: only single-input models are supported")
    hidden = payload["hidden"]
    if not isinstance(hidden, int) or hidden < 1:
        raise ModelFormatError("hidden: must be a positive integer")
    w1 = np.asarray(payload["w1"], dtype=float)
    if w1.shape != (hidden, 1):
        raise ModelFormatError(f"w1: expected shape ({hidden}, 1), got {w1.shape}")
    b1 = np.asarray(payload["b1"], dtype=float)
    if b1.shape != (hidden,):
        raise ModelFormatError(f"b1: expected length {hidden}, got {b1.shape}")
    w2 = np.asarray(payload["w2"], dtype=float)
    if w2.shape != (1, hidden):
        raise ModelFormatError(f"w2: expected shape (1, {hidden}), got {w2.shape}")
    try:
        model = MlpModel(
            hidden_weights=w1[:, 0],
            hidden_biases=b1,
            output_weights=w2[0],
            output_bias=float(payload["b2"]),
            hidden_activation=payload["activation"],
            in_min=float(payload["in_min"]),
            in_max=float(payload["in_max"]),
            out_min=float(payload["out_min"]),
            out_max=float(payload["out_max"]),
        )
    except (TypeError, ValueError) as exc:
        raise ModelFormatError(str(exc)) from exc
    return model, RiskMargin(err=float(payload["risk_margin"]))


def save_dataset(data: DegradationDataset, path: str) -> None:
    """CSV export with header tau,x at 12 significant digits."""
    lines = ["tau,x"]
    lines += [f"{t:.12g},{v:.12g}" for t, v in zip(data.tau, data.x)]
    _atomic_write(path, "\n".join(lines) + "\n")


def load_dataset(path: str) -> DegradationDataset:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        header = fh.readline().strip()
        if header != "tau,x":
            raise ValueError(f"unexpected dataset header {header!r}")
        taus, xs = [], []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            t, v = line.split(",")
            taus.append(float(t))
            xs.append(float(v))
    return DegradationDataset(np.array(taus), np.array(xs))


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
