import math

import pytest

from pycatalyst.catalyst import (
    KAPPA_FLOOR,
    MethodClass,
    ScheduleKind,
    beta_coefficient,
    delta_schedule,
    epsilon_schedule,
    kappa_default,
    solve_alpha,
)
from pycatalyst.exceptions import InputError


@pytest.mark.parametrize(
    "alpha_prev,q,expected",
    [
        (0.5, 0.25, 0.5),
        (1.0, 0.0, (math.sqrt(5) - 1) / 2),
        (0.6180340, 0.0, 0.4558869),
    ],
)
def test_solve_alpha(alpha_prev, q, expected):
    assert solve_alpha(alpha_prev, q) == pytest.approx(expected, abs=1e-7)


def test_solve_alpha_solves_the_recursion():
    for alpha_prev, q in [(1.0, 0.3), (1e-4, 0.0), (0.9, 1e-8), (1e-6, 0.5)]:
        alpha = solve_alpha(alpha_prev, q)
        assert 0 < alpha <= 1
        assert alpha * alpha == pytest.approx((1 - alpha) * alpha_prev * alpha_prev + q * alpha, rel=1e-10)


@pytest.mark.parametrize("alpha_prev,q", [(0.0, 0.5), (-1.0, 0.5), (0.5, 1.5), (0.5, -0.1)])
def test_solve_alpha_validation(alpha_prev, q):
    with pytest.raises(InputError):
        solve_alpha(alpha_prev, q)


def test_alpha_fixed_point():
    q = 0.01
    alpha = math.sqrt(q)
    expected_beta = (1 - math.sqrt(q)) / (1 + math.sqrt(q))
    for _ in range(10000):
        alpha_next = solve_alpha(alpha, q)
        assert alpha_next == pytest.approx(math.sqrt(q), abs=1e-12)
        assert beta_coefficient(alpha, alpha_next) == pytest.approx(expected_beta, abs=1e-12)
        alpha = alpha_next


def test_alpha_decay_without_strong_convexity():
    alpha = 1.0
    for k in range(1, 1001):
        alpha_next = solve_alpha(alpha, 0.0)
        assert alpha_next < alpha
        assert alpha_next <= 2.0 / (k + 2)
        alpha = alpha_next


def test_beta_coefficient():
    assert beta_coefficient(0.5, 0.5) == pytest.approx(1 / 3)
    assert beta_coefficient(1.0, 0.6180340) == 0.0
    assert beta_coefficient(0.6180340, 0.4558869) == pytest.approx(0.281753, abs=1e-6)


def test_epsilon_schedule_strongly_convex():
    # q = 0.25, rho = 0.45
    assert epsilon_schedule(1, 1.0, 3.0, 1.0) == pytest.approx(0.275)
    assert epsilon_schedule(1, 1.0, 3.0, 1.0, kind=ScheduleKind.THEORETICAL) == pytest.approx(2 / 9 * 0.55)


def test_epsilon_schedule_convex():
    assert epsilon_schedule(0, 0.0, 1.0, 1.0) == pytest.approx(0.5)
    assert epsilon_schedule(1, 0.0, 1.0, 1.0) == pytest.approx(1 / (2 * 2 ** 4.1))
    assert epsilon_schedule(1, 0.0, 1.0, 1.0) == pytest.approx(0.029158, abs=1e-5)
    assert epsilon_schedule(1, 0.0, 1.0, 1.0, kind=ScheduleKind.BOX) == pytest.approx(1 / (2 * 3 ** 4.1))
    assert epsilon_schedule(1, 0.0, 1.0, 1.0, kind=ScheduleKind.THEORETICAL) == pytest.approx(2 / (9 * 2 ** 4.1))


@pytest.mark.parametrize("mu", [0.0, 0.1])
@pytest.mark.parametrize("kind", list(ScheduleKind))
def test_epsilon_schedule_is_decreasing(mu, kind):
    values = [epsilon_schedule(k, mu, 1.0, 3.0, kind=kind) for k in range(1, 50)]
    assert all(value > 0 for value in values)
    assert all(later < earlier for earlier, later in zip(values, values[1:]))


def test_epsilon_schedule_validation():
    with pytest.raises(InputError):
        epsilon_schedule(-1, 0.0, 1.0, 1.0)
    with pytest.raises(InputError):
        epsilon_schedule(1, 0.0, 1.0, 0.0)


def test_delta_schedule():
    assert delta_schedule(5, 1.0, 3.0) == pytest.approx(1 / 3)
    assert delta_schedule(1, 0.0, 1.0) == pytest.approx(0.25)
    assert delta_schedule(1, 1e-12, 1.0) < 1e-5


def test_kappa_default():
    assert kappa_default(MethodClass.FULL_GRADIENT, 1.0, 0.01, 100) == pytest.approx(0.98)
    assert kappa_default(MethodClass.INCREMENTAL, 1.0, 0.0, 99) == pytest.approx(0.01)


def test_kappa_default_well_conditioned(caplog):
    kappa = kappa_default(MethodClass.INCREMENTAL, 1.0, 0.1, 100)

    assert kappa == pytest.approx(KAPPA_FLOOR)
    assert "well conditioned" in caplog.text


def test_kappa_default_full_gradient_floor(caplog):
    assert kappa_default(MethodClass.FULL_GRADIENT, 2.0, 1.0, 10) == pytest.approx(2.0 * KAPPA_FLOOR)


def test_schedule_kind_from_value():
    assert ScheduleKind.from_value("box") == ScheduleKind.BOX
    assert ScheduleKind.from_value("fast") is None
