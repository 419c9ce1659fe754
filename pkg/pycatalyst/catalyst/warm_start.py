import logging

from pycatalyst.catalyst.config import Criterion
from pycatalyst.problems import ZeroRegularizer

logger = logging.getLogger(__name__)


def _is_smooth(sub):
    return isinstance(sub.base.reg, ZeroRegularizer)


def _prox_gradient_step(sub, w, L, counter):
    eta = 1.0 / (L + sub.kappa)
    grad = sub.smooth_gradient(w, counter)
    return sub.prox(w - eta * grad, eta, counter)


def momentum_point(x_k, y_k, y_km1, sub_next, mu, kappa, L, counter=None):
    """
    x_k + kappa/(kappa + mu) (y_k - y_{k-1}), followed by one prox-gradient step on
    the next sub-problem when psi is not zero.
    """
    w0 = x_k + (kappa / (kappa + mu)) * (y_k - y_km1)
    if _is_smooth(sub_next):
        return w0
    return _prox_gradient_step(sub_next, w0, L, counter)


def warm_start_point(criterion, x_k, y_k, y_km1, sub_next, mu, kappa, L, counter=None):
    """
    Starting point of the inner solver for the sub-problem centered at y_k.

    C1 uses the momentum point; C2 starts from y_k (one prox-gradient step from it when psi
    is not zero); C3 and C1* take whichever of x_k and the momentum point has the lower
    sub-problem value, the momentum point winning ties.
    """
    if criterion == Criterion.C1:
        return momentum_point(x_k, y_k, y_km1, sub_next, mu, kappa, L, counter)

    if criterion == Criterion.C2:
        if _is_smooth(sub_next):
            return y_k.copy()
        return _prox_gradient_step(sub_next, y_k, L, counter)

    candidate = momentum_point(x_k, y_k, y_km1, sub_next, mu, kappa, L, counter)
    if sub_next.value(x_k) < sub_next.value(candidate):
        logger.debug("warm start keeps x_k")
        return x_k.copy()
    return candidate
