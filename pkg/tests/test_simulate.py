"""Policy simulators and cost accounting."""

import math
from fractions import Fraction

import pytest

from ncbm import (
    CostLedger,
    CostParams,
    GammaProcess,
    MlpModel,
    PolicyConfig,
    RiskMargin,
    Thresholds,
    cost_rate_from_ledger,
    simulate_classical,
    simulate_ncbm,
)
from ncbm.rng import derive_stream

PROC = GammaProcess(a=10.0 / 9.0, b=100.0 / 9.0)


def constant_model(level: float) -> MlpModel:
    """Network whose output is `level` for every input (zero weights)."""
    return MlpModel(
        hidden_weights=[0.0] * 3,
        hidden_biases=[0.0] * 3,
        output_weights=[0.0] * 3,
        output_bias=0.0,
        hidden_activation="tanh",
        in_min=0.0,
        in_max=50.0,
        out_min=level - 1.0,
        out_max=level + 1.0,
    )


def make_config(t_i=25.0, mid_checks=2, horizon=50.0, discount_rate=0.0, **kw):
    return PolicyConfig(
        horizon=horizon,
        inspection_interval=t_i,
        mid_checks=mid_checks,
        proc=PROC,
        costs=CostParams(discount_rate=discount_rate),
        thresholds=Thresholds(),
        **kw,
    )


def exact_rate(n, n_p, n_f, horizon=50.0):
    """Undiscounted cost rate via exact rational arithmetic."""
    return float(Fraction(0.1) * n + n_p + 10 * n_f) / horizon


def test_cost_params_validation():
    with pytest.raises(ValueError):
        CostParams(c_inspect=-0.1)
    with pytest.warns(UserWarning):
        CostParams(c_inspect=5.0, c_prevent=1.0, c_fail=10.0)


def test_thresholds_and_policy_validation():
    with pytest.raises(ValueError):
        Thresholds(x_pc=3.0, x_fc=2.0)
    with pytest.raises(ValueError):
        make_config(t_i=0.0)
    with pytest.raises(ValueError):
        make_config(mid_checks=0)
    with pytest.raises(ValueError):
        make_config(ncbm_semantics="other")


def test_ledger_events_sorted_and_discounted():
    ledger = CostLedger(
        inspection_times=[10.0, 5.0], preventive_times=[10.0], failure_times=[2.5]
    )
    costs = CostParams(discount_rate=0.05)
    rows = ledger.events(costs)
    assert [r[1] for r in rows] == sorted(r[1] for r in rows)
    assert rows[0] == ("failure", 2.5, pytest.approx(10.0 * math.exp(-0.125)))
    kinds = [r[0] for r in rows if r[1] == 10.0]
    assert kinds == ["inspection", "preventive"]


def test_cost_rate_from_ledger_matches_exact_oracle():
    ledger = CostLedger(
        inspection_times=[5.0] * 7, preventive_times=[10.0] * 2, failure_times=[20.0] * 3
    )
    rate = cost_rate_from_ledger(ledger, CostParams(), 50.0)
    assert rate == exact_rate(7, 2, 3)
    with pytest.raises(ValueError):
        cost_rate_from_ledger(ledger, CostParams(), 0.0)


def test_deterministic_classical_single_inspection():
    # mean path reaches 2.5 at t=25: one billed inspection, one preventive
    outcome = simulate_classical(make_config(deterministic_mode=True), gen=None)
    assert outcome.ledger.inspection_times == [25.0]
    assert outcome.ledger.preventive_times == [25.0]
    assert outcome.ledger.failure_times == []
    assert outcome.cost_rate == exact_rate(1, 1, 0)


def test_deterministic_classical_repeating_cycle():
    # T_I=10: mean path hits the preventive threshold every second inspection
    outcome = simulate_classical(make_config(t_i=10.0, deterministic_mode=True), gen=None)
    assert outcome.ledger.inspection_times == [10.0, 20.0, 30.0, 40.0]
    assert outcome.ledger.preventive_times == [20.0, 40.0]
    assert outcome.ledger.failure_times == []
    assert outcome.cost_rate == exact_rate(4, 2, 0)


def test_deterministic_mid_probe_detects_failure():
    # probes every 5 years: the mean path crosses x_fc=3.09 at t=35,
    # before the scheduled inspection at 40
    outcome = simulate_classical(
        make_config(t_i=40.0, mid_checks=8, deterministic_mode=True), gen=None
    )
    assert outcome.ledger.failure_times == [35.0]
    assert outcome.ledger.inspection_times == [40.0]
    assert outcome.ledger.preventive_times == []


def test_discounted_deterministic_rate():
    outcome = simulate_classical(
        make_config(deterministic_mode=True, discount_rate=0.05), gen=None
    )
    expected = math.fsum([0.1 * math.exp(-1.25), 1.0 * math.exp(-1.25)]) / 50.0
    assert outcome.cost_rate == pytest.approx(expected, rel=1e-15)


def test_ncbm_code_semantics_bills_only_on_trigger():
    model = constant_model(2.5)
    config = make_config(deterministic_mode=True)
    # below the failure threshold: no billed event at all
    quiet = simulate_ncbm(config, model, RiskMargin(err=0.0), gen=None)
    assert quiet.ledger.inspection_times == []
    assert quiet.cost_rate == 0.0
    # margin pushes the estimate over x_fc: inspection + preventive together
    loud = simulate_ncbm(config, model, RiskMargin(err=0.6), gen=None)
    assert loud.ledger.inspection_times == [25.0]
    assert loud.ledger.preventive_times == [25.0]
    assert loud.cost_rate == exact_rate(1, 1, 0)


def test_ncbm_prose_semantics_three_regions():
    model = constant_model(2.5)
    config = make_config(deterministic_mode=True, ncbm_semantics="prose")
    mid = simulate_ncbm(config, model, RiskMargin(err=0.0), gen=None)
    # 2.5 sits between x_pc and x_fc: inspection billed plus preventive
    assert mid.ledger.inspection_times == [25.0]
    assert mid.ledger.preventive_times == [25.0]
    high = simulate_ncbm(config, model, RiskMargin(err=0.6), gen=None)
    assert high.ledger.failure_times == [25.0]
    low = simulate_ncbm(
        make_config(t_i=10.0, deterministic_mode=True, ncbm_semantics="prose"),
        constant_model(1.0),
        RiskMargin(err=0.0),
        gen=None,
    )
    assert low.ledger.inspection_times == [10.0, 20.0, 30.0, 40.0]
    assert low.ledger.preventive_times == []


def test_stochastic_run_reproducible_and_consistent():
    config = make_config(t_i=5.0)
    a = simulate_classical(config, derive_stream(21, 3, 4).generator())
    b = simulate_classical(config, derive_stream(21, 3, 4).generator())
    assert a.ledger.events(config.costs) == b.ledger.events(config.costs)
    assert a.cost_rate == b.cost_rate
    assert a.cost_rate == cost_rate_from_ledger(a.ledger, config.costs, config.horizon)


def test_path_consistent_mode_runs_and_reproduces():
    config = make_config(t_i=5.0, path_consistent=True)
    a = simulate_classical(config, derive_stream(9, 0, 0).generator())
    b = simulate_classical(config, derive_stream(9, 0, 0).generator())
    assert a.cost_rate == b.cost_rate
    assert a.ledger.n == len(a.ledger.inspection_times)
