"""Gamma-process degradation law: density, moments and sampling.

Degradation accumulated over an elapsed time tau since the last replacement
is Gamma distributed with shape a*tau and rate b, so the mean level is
a*tau/b and the variance a*tau/b**2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class GammaProcess:
    """Degradation-law parameters.

    a: shape growth per year (1/year)
    b: rate parameter (1/degradation-unit); equivalent MATLAB-style
       scale is 1/b.
    """

    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise ValueError("gamma process requires a > 0 and b > 0")

    def mean(self, t: float) -> float:
        return self.a * t / self.b

    def variance(self, t: float) -> float:
        return self.a * t / (self.b * self.b)


def gamma_pdf(x: float, shape: float, rate: float) -> float:
    """Density of Gamma(shape, rate) at x >= 0."""
    if shape <= 0 or rate <= 0:
        raise ValueError("shape and rate must be positive")
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x == 0.0:
        if shape > 1:
            return 0.0
        if shape == 1:
            return rate
        return math.inf
    log_pdf = (
        shape * math.log(rate)
        + (shape - 1.0) * math.log(x)
        - rate * x
        - math.lgamma(shape)
    )
    return math.exp(log_pdf)


def gamma_moments(proc: GammaProcess, t: float) -> tuple[float, float]:
    """(mean, variance) of the degradation level after elapsed time t."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return proc.mean(t), proc.variance(t)


def _standard_gamma(gen: np.random.Generator, shape: float) -> float:
    """One draw from Gamma(shape, 1) via the Marsaglia-Tsang squeeze.

    Shapes below 1 are boosted with a shape+1 draw scaled by U**(1/shape).
    """
    if shape < 1.0:
        u = gen.random()
        while u <= 0.0:  # guard against a zero uniform under the 1/shape power
            u = gen.random()
        return _standard_gamma(gen, shape + 1.0) * u ** (1.0 / shape)
    d = shape - 1.0 / 3.0
    c = 1.0 / math.sqrt(9.0 * d)
    while True:
        x = gen.standard_normal()
        v = 1.0 + c * x
        if v <= 0.0:
            continue
        v = v * v * v
        u = gen.random()
        x2 = x * x
        if u < 1.0 - 0.0331 * x2 * x2:
            return d * v
        if math.log(u) < 0.5 * x2 + d * (1.0 - v + math.log(v)):
            return d * v


def sample_degradation(proc: GammaProcess, tau: float, gen: np.random.Generator) -> float:
    """One degradation draw after elapsed time tau since replacement.

    tau = 0 is the degenerate point mass at zero.
    """
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    if tau == 0.0:
        return 0.0
    return _standard_gamma(gen, proc.a * tau) / proc.b
