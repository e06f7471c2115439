"""Scikit-learn style wrapper around the degradation estimator.

Lets the network drop into ordinary sklearn workflows (clone, get_params,
pipelines, cross-validation) while the underlying training loop stays the
plain full-batch gradient descent used everywhere else in this package.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_is_fitted

from .neural import mlp_forward
from .rng import INIT_NAMESPACE, SPLIT_NAMESPACE, derive_stream
from .training import DegradationDataset, risk_margin, split_dataset, train_model


def _as_column(X, name: str) -> np.ndarray:
    """Validate a single-feature input and flatten it to 1-D."""
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D or a single-column 2-D array")
    if arr.size == 0:
        raise ValueError(f"{name} must be nonempty")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


class DegradationRegressor(RegressorMixin, BaseEstimator):
    """1-H-1 network regressor for degradation-vs-elapsed-time data.

    fit() splits the data 70/15/15, trains with early stopping on the
    validation share and keeps the best-validation weights. After fitting,
    `model_` holds the network, `margin_` the signed maximum residual over
    the full training input and `record_` the per-epoch curves.
    """

    def __init__(
        self,
        hidden_size: int = 10,
        activation: str = "tanh",
        learning_rate: float = 0.2,
        max_epochs: int = 10000,
        patience: int = 6,
        random_state: int = 0,
    ):
        self.hidden_size = hidden_size
        self.activation = activation
        self.learning_rate = learning_rate
        self.max_epochs = max_epochs
        self.patience = patience
        self.random_state = random_state

    def fit(self, X, y):
        tau = _as_column(X, "X")
        target = _as_column(y, "y")
        if tau.shape != target.shape:
            raise ValueError("X and y must have the same number of samples")
        data = DegradationDataset(tau, target)
        seed = int(self.random_state)
        splits = split_dataset(data, derive_stream(seed, SPLIT_NAMESPACE, 0).generator())
        self.model_, self.record_ = train_model(
            data,
            splits,
            derive_stream(seed, INIT_NAMESPACE, 0).generator(),
            hidden_size=self.hidden_size,
            activation=self.activation,
            learning_rate=self.learning_rate,
            max_epochs=self.max_epochs,
            patience=self.patience,
        )
        self.margin_ = risk_margin(self.model_, data)
        self.n_features_in_ = 1
        return self

    def predict(self, X):
        check_is_fitted(self, "model_")
        tau = _as_column(X, "X")
        return np.asarray(mlp_forward(self.model_, tau))
