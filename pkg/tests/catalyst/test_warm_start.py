import numpy as np
import pytest

from pycatalyst.catalyst import Criterion, momentum_point, warm_start_point
from pycatalyst.core import EvalCounter
from pycatalyst.envelope import make_subproblem
from pycatalyst.problems import L1Regularizer
from tests.helpers import quadratic_objective


@pytest.fixture
def smooth_objective():
    return quadratic_objective(np.array([[1.0]]), [0.0])


@pytest.fixture
def composite_objective():
    return quadratic_objective(np.array([[1.0]]), [0.0], reg=L1Regularizer(0.5))


def test_stalled_momentum_gives_x_k(smooth_objective):
    y = np.array([2.0])
    sub = make_subproblem(smooth_objective, y, 1.0)
    z0 = warm_start_point(Criterion.C1, np.array([1.0]), y, y.copy(), sub, 0.0, 1.0, 1.0)
    np.testing.assert_array_equal(z0, [1.0])


def test_smooth_momentum_point(smooth_objective):
    y_k, y_km1 = np.array([2.0]), np.array([0.0])
    sub = make_subproblem(smooth_objective, y_k, 1.0)
    z0 = momentum_point(np.array([1.0]), y_k, y_km1, sub, mu=1.0, kappa=1.0, L=1.0)
    # 1 + 1/2 * (2 - 0)
    np.testing.assert_allclose(z0, [2.0])


def test_composite_momentum_point_takes_prox_gradient_step(composite_objective):
    """
    w0 = 1 + (2 - 0) = 3; gradient 3 + (3 - 2) = 4 at step 1/2 gives 1;
    soft-thresholding at 0.25 gives 0.75.
    """
    y_k, y_km1 = np.array([2.0]), np.array([0.0])
    sub = make_subproblem(composite_objective, y_k, 1.0)
    counter = EvalCounter()
    z0 = warm_start_point(Criterion.C1, np.array([1.0]), y_k, y_km1, sub, 0.0, 1.0, 1.0, counter)

    np.testing.assert_allclose(z0, [0.75])
    assert counter.full_passes == 1
    assert counter.prox_calls == 1


def test_c2_smooth_starts_at_center(smooth_objective):
    y_k = np.array([2.0])
    sub = make_subproblem(smooth_objective, y_k, 1.0)
    z0 = warm_start_point(Criterion.C2, np.array([1.0]), y_k, np.array([0.0]), sub, 0.0, 1.0, 1.0)

    np.testing.assert_array_equal(z0, y_k)
    assert z0 is not y_k


def test_c2_composite_steps_from_center(composite_objective):
    y_k = np.array([2.0])
    sub = make_subproblem(composite_objective, y_k, 1.0)
    z0 = warm_start_point(Criterion.C2, np.array([1.0]), y_k, np.array([0.0]), sub, 0.0, 1.0, 1.0)
    # gradient at 2 is 2, step 1/2 gives 1, threshold 0.25
    np.testing.assert_allclose(z0, [0.75])


@pytest.mark.parametrize("criterion", [Criterion.C3, Criterion.C1STAR])
def test_best_of_two_keeps_x_k(smooth_objective, criterion):
    y_k, y_km1 = np.array([0.5]), np.array([-3.0])
    sub = make_subproblem(smooth_objective, y_k, 1.0)
    # momentum point 0.25 + 3.5 = 3.75 is worse than x_k = 0.25 for h(z) = z^2/2 + (z - 0.5)^2/2
    z0 = warm_start_point(criterion, np.array([0.25]), y_k, y_km1, sub, 0.0, 1.0, 1.0)
    np.testing.assert_array_equal(z0, [0.25])


@pytest.mark.parametrize("criterion", [Criterion.C3, Criterion.C1STAR])
def test_best_of_two_takes_momentum(smooth_objective, criterion):
    y_k, y_km1 = np.array([0.5]), np.array([0.2])
    sub = make_subproblem(smooth_objective, y_k, 1.0)
    # momentum point 0.3 beats x_k = 0 for h with minimizer 0.25
    z0 = warm_start_point(criterion, np.array([0.0]), y_k, y_km1, sub, 0.0, 1.0, 1.0)
    np.testing.assert_allclose(z0, [0.3])


def test_best_of_two_tie_prefers_momentum(smooth_objective):
    y_k, y_km1 = np.array([0.5]), np.array([0.0])
    sub = make_subproblem(smooth_objective, y_k, 1.0)
    # x_k = 0 and momentum point 0.5 sit symmetrically around the minimizer 0.25
    z0 = warm_start_point(Criterion.C3, np.array([0.0]), y_k, y_km1, sub, 0.0, 1.0, 1.0)
    np.testing.assert_allclose(z0, [0.5])
