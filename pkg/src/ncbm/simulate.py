"""Policy simulators and discounted cost-rate accounting.

Two inspection policies over the same gamma degradation law:

* classical: inspect every T_I years, replace preventively when the
  observed level crosses x_pc and correctively when it crosses x_fc;
* neural (N-CBM): at each inspection point a trained estimator plus risk
  margin decides whether to replace, with no physical measurement.

Between inspections both policies probe for failures K-1 times per
interval (a modeling device, not a billed inspection).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from .gamma_process import GammaProcess, sample_degradation
from .neural import MlpModel, mlp_forward
from .training import RiskMargin

NCBM_SEMANTICS = ("code", "prose")


@dataclass(frozen=True)
class CostParams:
    """Normalized event costs and the exponential discount rate (1/year)."""

    c_inspect: float = 0.1
    c_prevent: float = 1.0
    c_fail: float = 10.0
    discount_rate: float = 0.0

    def __post_init__(self):
        if min(self.c_inspect, self.c_prevent, self.c_fail) < 0:
            raise ValueError("costs must be nonnegative")
        if not (self.c_fail >= self.c_prevent >= self.c_inspect):
            warnings.warn(
                "unusual cost ordering: expected c_fail >= c_prevent >= c_inspect",
                stacklevel=2,
            )


@dataclass(frozen=True)
class Thresholds:
    x_pc: float = 2.0
    x_fc: float = 3.09

    def __post_init__(self):
        if not (0 < self.x_pc < self.x_fc):
            raise ValueError("thresholds must satisfy 0 < x_pc < x_fc")


@dataclass(frozen=True)
class PolicyConfig:
    horizon: float
    inspection_interval: float
    mid_checks: int
    proc: GammaProcess
    costs: CostParams
    thresholds: Thresholds
    deterministic_mode: bool = False
    ncbm_semantics: str = "code"
    path_consistent: bool = False

    def __post_init__(self):
        if self.horizon <= 0:
            raise ValueError("horizon must be positive")
        if self.inspection_interval <= 0:
            raise ValueError("inspection_interval must be positive")
        if self.mid_checks < 1:
            raise ValueError("mid_checks must be at least 1")
        if self.ncbm_semantics not in NCBM_SEMANTICS:
            raise ValueError(f"ncbm_semantics must be one of {NCBM_SEMANTICS}")


@dataclass
class CostLedger:
    """Timestamped maintenance events over one simulated horizon."""

    inspection_times: list = field(default_factory=list)
    preventive_times: list = field(default_factory=list)
    failure_times: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.inspection_times)

    @property
    def n_p(self) -> int:
        return len(self.preventive_times)

    @property
    def n_f(self) -> int:
        return len(self.failure_times)

    def events(self, costs: CostParams):
        """(event_type, time, discounted_cost) rows sorted by time."""
        g = costs.discount_rate
        rows = [
            ("inspection", t, costs.c_inspect * math.exp(-g * t))
            for t in self.inspection_times
        ]
        rows += [
            ("preventive", t, costs.c_prevent * math.exp(-g * t))
            for t in self.preventive_times
        ]
        rows += [("failure", t, costs.c_fail * math.exp(-g * t)) for t in self.failure_times]
        rows.sort(key=lambda r: (r[1], r[0]))
        return rows


@dataclass(frozen=True)
class SimOutcome:
    cost_rate: float
    ledger: CostLedger


def cost_rate_from_ledger(ledger: CostLedger, costs: CostParams, horizon: float) -> float:
    """Total discounted cost divided by the horizon."""
    if horizon <= 0:
        raise ValueError("horizon must be positive")
    g = costs.discount_rate
    terms = [costs.c_inspect * math.exp(-g * t) for t in ledger.inspection_times]
    terms += [costs.c_prevent * math.exp(-g * t) for t in ledger.preventive_times]
    terms += [costs.c_fail * math.exp(-g * t) for t in ledger.failure_times]
    return math.fsum(terms) / horizon


class _DegradationSampler:
    """Draws the observed degradation level at a given absolute time.

    Default draws are independent marginals Gamma(a*tau, b), matching the
    reference policy definitions. path_consistent instead accumulates
    independent gamma increments between observation times, and
    deterministic mode returns the mean path a*tau/b.
    """

    def __init__(self, config: PolicyConfig, gen):
        self._proc = config.proc
        self._deterministic = config.deterministic_mode
        self._path_consistent = config.path_consistent
        self._gen = gen
        self._level = 0.0
        self._t_last = 0.0

    def observe(self, t: float, t_replace: float) -> float:
        tau = t - t_replace
        if self._deterministic:
            return self._proc.mean(tau)
        if not self._path_consistent:
            return sample_degradation(self._proc, tau, self._gen)
        if t_replace > self._t_last:
            self._level = 0.0
            self._t_last = t_replace
        self._level += sample_degradation(self._proc, t - self._t_last, self._gen)
        self._t_last = t
        return self._level


def _mid_interval_checks(config, sampler, ledger, i, t_replace):
    """Failure probes between inspections; returns (t_replace, inspect_due)."""
    t_i_prev = (i - 1) * config.inspection_interval
    k_total = config.mid_checks
    dt = config.inspection_interval / k_total
    inspect_due = True
    for k in range(1, k_total):
        c = t_i_prev + k * dt
        x = sampler.observe(c, t_replace)
        if x >= config.thresholds.x_fc:
            ledger.failure_times.append(c)
            t_replace = c
        if c >= config.horizon:
            # The scheduled inspection still runs when the horizon was hit
            # exactly on the last probe.
            inspect_due = k == k_total - 1
            break
    return t_replace, inspect_due


def simulate_classical(config: PolicyConfig, gen) -> SimOutcome:
    """Statistical CBM: threshold rules on a measured degradation level."""
    ledger = CostLedger()
    t_replace = 0.0
    sampler = _DegradationSampler(config, gen)
    i = 1
    while i * config.inspection_interval < config.horizon:
        t_i = i * config.inspection_interval
        t_replace, inspect_due = _mid_interval_checks(config, sampler, ledger, i, t_replace)
        if inspect_due:
            x = sampler.observe(t_i, t_replace)
            ledger.inspection_times.append(t_i)
            if x >= config.thresholds.x_fc:
                ledger.failure_times.append(t_i)
                t_replace = t_i
            elif x >= config.thresholds.x_pc:
                ledger.preventive_times.append(t_i)
                t_replace = t_i
        i += 1
    return SimOutcome(cost_rate_from_ledger(ledger, config.costs, config.horizon), ledger)


def simulate_ncbm(config: PolicyConfig, model: MlpModel, margin: RiskMargin, gen) -> SimOutcome:
    """Neural CBM: the estimator plus risk margin replaces the measurement.

    'code' semantics bill an inspection only when the estimator triggers a
    preventive replacement; 'prose' semantics always bill the inspection
    and apply the full three-region threshold logic to the estimate.
    """
    ledger = CostLedger()
    t_replace = 0.0
    sampler = _DegradationSampler(config, gen)
    i = 1
    while i * config.inspection_interval < config.horizon:
        t_i = i * config.inspection_interval
        t_replace, inspect_due = _mid_interval_checks(config, sampler, ledger, i, t_replace)
        if inspect_due:
            estimate = mlp_forward(model, t_i - t_replace) + margin.err
            if config.ncbm_semantics == "code":
                if estimate >= config.thresholds.x_fc:
                    ledger.inspection_times.append(t_i)
                    ledger.preventive_times.append(t_i)
                    t_replace = t_i
            else:
                ledger.inspection_times.append(t_i)
                if estimate >= config.thresholds.x_fc:
                    ledger.failure_times.append(t_i)
                    t_replace = t_i
                elif estimate >= config.thresholds.x_pc:
                    ledger.preventive_times.append(t_i)
                    t_replace = t_i
        i += 1
    return SimOutcome(cost_rate_from_ledger(ledger, config.costs, config.horizon), ledger)
