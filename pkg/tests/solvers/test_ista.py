import numpy as np
import pytest

from pycatalyst.core import EvalCounter
from pycatalyst.envelope import make_subproblem
from pycatalyst.exceptions import NonConvergenceError
from pycatalyst.problems import LossKind, RegKind, build_formulation
from pycatalyst.solvers import StoppingRule, ista_solve
from tests.helpers import reference_minimum


@pytest.fixture
def sub(logistic_data):
    objective = build_formulation(LossKind.LOGISTIC, RegKind.l1_only(0.01), logistic_data)
    return make_subproblem(objective, np.full(logistic_data.p, 0.5), 0.2)


def test_absolute_rule_certifies_true_gap(sub):
    _, optimum = reference_minimum(sub)
    counter = EvalCounter()
    result = ista_solve(sub, np.zeros(sub.p), StoppingRule.absolute(1e-8), counter)

    assert result.satisfied
    assert result.certificate.bound_on_gap <= 1e-8
    assert sub.value(result.point) - optimum <= 1e-8 + 1e-12
    assert counter.full_passes == result.inner_iterations
    assert result.passes == result.inner_iterations - 1


def test_relative_rule(sub):
    rule = StoppingRule.relative(0.1, sub.center)
    result = ista_solve(sub, np.zeros(sub.p), rule, EvalCounter())
    assert result.satisfied
    assert rule.satisfied_by(result.certificate, sub)


def test_budget_rule_runs_exact_passes(sub):
    counter = EvalCounter()
    result = ista_solve(sub, np.zeros(sub.p), StoppingRule.fixed_budget(7), counter)

    assert result.satisfied
    assert result.passes == 7
    assert result.inner_iterations == 7
    assert counter.full_passes == 7
    assert result.certificate is None


def test_values_decrease(sub):
    values = []

    def callback(point, iterations):
        values.append(sub.value(point))
        return False

    ista_solve(sub, np.zeros(sub.p), StoppingRule.fixed_budget(30), EvalCounter(), callback=callback)
    assert all(later <= earlier + 1e-15 for earlier, later in zip(values, values[1:]))


def test_safety_cap(sub):
    with pytest.raises(NonConvergenceError) as e_info:
        ista_solve(sub, np.zeros(sub.p), StoppingRule.absolute(1e-300), EvalCounter(), max_passes=3)
    assert e_info.value.certificate is not None


def test_callback_stop_is_not_satisfied(sub):
    result = ista_solve(
        sub, np.zeros(sub.p), StoppingRule.absolute(1e-300), EvalCounter(), callback=lambda z, t: True
    )
    assert not result.satisfied
    assert result.passes == 1
