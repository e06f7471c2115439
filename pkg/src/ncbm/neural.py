"""Feed-forward network primitives for the 1-H-1 degradation estimator.

Covers the perceptron decision unit, sigmoid / hyperbolic-tangent
activations, min-max normalization, the forward pass, squared-error
losses and exact full-batch gradients for gradient-descent training.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

ACTIVATIONS = ("tanh", "sigmoid")


def perceptron_output(inputs, weights, threshold: float) -> int:
    """Binary decision unit: 1 iff the weighted input sum exceeds threshold."""
    x = np.asarray(inputs, dtype=float)
    w = np.asarray(weights, dtype=float)
    if x.shape != w.shape:
        raise ValueError("inputs and weights must have the same length")
    return 1 if float(w @ x) > threshold else 0


def sigmoid(z):
    """1/(1+exp(-z)), stable for large |z|."""
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=float))
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return float(out[0]) if scalar else out


def tanh_act(z):
    """(e^z - e^-z)/(e^z + e^-z)."""
    out = np.tanh(np.asarray(z, dtype=float))
    return float(out) if out.ndim == 0 else out


def minmax_normalize(x, lo: float, hi: float):
    """Map [lo, hi] linearly onto [-1, 1]."""
    if lo >= hi:
        raise ValueError("normalization requires lo < hi")
    out = 2.0 * (np.asarray(x, dtype=float) - lo) / (hi - lo) - 1.0
    return float(out) if out.ndim == 0 else out


def minmax_denormalize(y, lo: float, hi: float):
    """Inverse of minmax_normalize."""
    if lo >= hi:
        raise ValueError("normalization requires lo < hi")
    out = (np.asarray(y, dtype=float) + 1.0) * (hi - lo) / 2.0 + lo
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class MlpModel:
    """1-H-1 network with min-max normalization on input and target.

    hidden_weights, hidden_biases, output_weights are length-H vectors;
    the output unit is linear.
    """

    hidden_weights: np.ndarray
    hidden_biases: np.ndarray
    output_weights: np.ndarray
    output_bias: float
    hidden_activation: str
    in_min: float
    in_max: float
    out_min: float
    out_max: float

    def __post_init__(self):
        object.__setattr__(self, "hidden_weights", np.asarray(self.hidden_weights, dtype=float))
        object.__setattr__(self, "hidden_biases", np.asarray(self.hidden_biases, dtype=float))
        object.__setattr__(self, "output_weights", np.asarray(self.output_weights, dtype=float))
        h = self.hidden_weights.shape
        if self.hidden_biases.shape != h or self.output_weights.shape != h:
            raise ValueError("weight and bias vectors must all have length H")
        if self.hidden_activation not in ACTIVATIONS:
            raise ValueError(f"unknown activation {self.hidden_activation!r}")
        if not (self.in_min < self.in_max):
            raise ValueError("in_min must be less than in_max")
        if not (self.out_min < self.out_max):
            raise ValueError("out_min must be less than out_max")
        for arr in (self.hidden_weights, self.hidden_biases, self.output_weights):
            if not np.all(np.isfinite(arr)):
                raise ValueError("model parameters must be finite")
        if not np.isfinite(self.output_bias):
            raise ValueError("model parameters must be finite")

    @property
    def hidden_size(self) -> int:
        return self.hidden_weights.shape[0]

    def _activation(self):
        return np.tanh if self.hidden_activation == "tanh" else sigmoid


def _raw_forward(model: MlpModel, u: np.ndarray):
    """Normalized-space forward pass; returns (hidden, output)."""
    act = model._activation()
    h = act(np.outer(u, model.hidden_weights) + model.hidden_biases)
    return h, h @ model.output_weights + model.output_bias


def mlp_forward(model: MlpModel, tau):
    """Estimated degradation level for an elapsed time tau.

    Inputs outside the stored normalization range are still evaluated;
    their normalized value simply leaves [-1, 1].
    """
    scalar = np.ndim(tau) == 0
    tau_arr = np.atleast_1d(np.asarray(tau, dtype=float))
    u = np.atleast_1d(minmax_normalize(tau_arr, model.in_min, model.in_max))
    _, o = _raw_forward(model, u)
    y = minmax_denormalize(o, model.out_min, model.out_max)
    return float(y[0]) if scalar else y


def sse(desired, outputs) -> float:
    """Half the sum of squared residuals."""
    d = np.asarray(desired, dtype=float)
    o = np.asarray(outputs, dtype=float)
    if d.shape != o.shape:
        raise ValueError("desired and outputs must have the same length")
    r = d - o
    return 0.5 * float(r @ r)


def mse(desired, outputs) -> float:
    """Mean of squared residuals."""
    d = np.asarray(desired, dtype=float)
    o = np.asarray(outputs, dtype=float)
    if d.shape != o.shape:
        raise ValueError("desired and outputs must have the same length")
    if d.size == 0:
        raise ValueError("mse of an empty batch is undefined")
    r = d - o
    return float(r @ r) / d.size


@dataclass(frozen=True)
class Gradient:
    """Gradient of the batch MSE, same shape as the model parameters."""

    hidden_weights: np.ndarray
    hidden_biases: np.ndarray
    output_weights: np.ndarray
    output_bias: float

    def norm(self) -> float:
        return float(
            np.sqrt(
                np.sum(self.hidden_weights**2)
                + np.sum(self.hidden_biases**2)
                + np.sum(self.output_weights**2)
                + self.output_bias**2
            )
        )


def backprop_gradient(model: MlpModel, taus, targets) -> tuple[Gradient, float]:
    """Exact gradient of the normalized-space batch MSE plus that MSE.

    Errors propagate backwards from the linear output unit; for a sigmoid
    hidden unit the per-unit factor is o*(1-o), for tanh it is 1-o**2.
    """
    taus = np.asarray(taus, dtype=float)
    targets = np.asarray(targets, dtype=float)
    if taus.size == 0:
        raise ValueError("gradient of an empty batch is undefined")
    if taus.shape != targets.shape:
        raise ValueError("taus and targets must have the same length")
    u = np.atleast_1d(minmax_normalize(taus, model.in_min, model.in_max))
    g = np.atleast_1d(minmax_normalize(targets, model.out_min, model.out_max))
    h, o = _raw_forward(model, u)
    n = u.size
    delta = 2.0 * (o - g) / n
    if model.hidden_activation == "tanh":
        dact = 1.0 - h * h
    else:
        dact = h * (1.0 - h)
    dhidden = np.outer(delta, model.output_weights) * dact
    grad = Gradient(
        hidden_weights=dhidden.T @ u,
        hidden_biases=dhidden.sum(axis=0),
        output_weights=h.T @ delta,
        output_bias=float(delta.sum()),
    )
    return grad, float(np.mean((o - g) ** 2))


def apply_update(model: MlpModel, grad: Gradient, learning_rate: float) -> MlpModel:
    """One gradient-descent step; returns a new model."""
    if learning_rate <= 0:
        raise ValueError("learning_rate must be positive")
    return replace(
        model,
        hidden_weights=model.hidden_weights - learning_rate * grad.hidden_weights,
        hidden_biases=model.hidden_biases - learning_rate * grad.hidden_biases,
        output_weights=model.output_weights - learning_rate * grad.output_weights,
        output_bias=model.output_bias - learning_rate * grad.output_bias,
    )
