"""
Outer-loop coefficients: the alpha recursion, the extrapolation weight, the accuracy
schedules for the sub-problems and the default smoothing parameter.
"""
from enum import Enum
import logging
import math

from pycatalyst.exceptions import InputError

logger = logging.getLogger(__name__)

# kappa used when the closed-form choice is non-positive, relative to the smoothness constant
KAPPA_FLOOR = 1e-6


class ScheduleKind(Enum):
    PRACTICAL = "PRACTICAL"
    THEORETICAL = "THEORETICAL"
    BOX = "BOX"

    @staticmethod
    def from_value(string):
        try:
            return ScheduleKind(string.upper())
        except (ValueError, AttributeError):
            return None


class MethodClass(Enum):
    FULL_GRADIENT = "FULL_GRADIENT"
    INCREMENTAL = "INCREMENTAL"


def solve_alpha(alpha_prev, q):
    """
    The root in (0, 1] of alpha^2 + (alpha_prev^2 - q) alpha - alpha_prev^2 = 0.
    """
    if not alpha_prev > 0:
        raise InputError(f"alpha_prev must be positive, got {alpha_prev}")
    if not 0 <= q <= 1:
        raise InputError(f"q must lie in [0, 1], got {q}")

    b = alpha_prev * alpha_prev - q
    c = alpha_prev * alpha_prev
    root = math.sqrt(b * b + 4.0 * c)
    # pick the form without cancellation; both give the positive root
    if b >= 0:
        return 2.0 * c / (b + root)
    return (root - b) / 2.0


def beta_coefficient(alpha_prev, alpha_cur):
    """
    alpha_prev (1 - alpha_prev) / (alpha_prev^2 + alpha_cur)
    """
    return alpha_prev * (1.0 - alpha_prev) / (alpha_prev * alpha_prev + alpha_cur)


def _q(mu, kappa):
    return mu / (mu + kappa)


def epsilon_schedule(k, mu, kappa, f_x0, kind=ScheduleKind.PRACTICAL, rho_factor=0.9, gamma=0.1):
    """
    Target accuracy of the k-th sub-problem, an absolute bound on its gap.

    With mu > 0 the schedule decays like (1 - rho)^k with rho = rho_factor sqrt(q);
    with mu = 0 it decays polynomially with exponent 4 + gamma.
    """
    if k < 0:
        raise InputError(f"k must be non-negative, got {k}")
    if not f_x0 > 0:
        raise InputError(f"the initial gap bound must be positive, got {f_x0}")

    if mu > 0:
        rho = rho_factor * math.sqrt(_q(mu, kappa))
        factor = 2.0 / 9.0 if kind == ScheduleKind.THEORETICAL else 0.5
        return factor * (1.0 - rho) ** k * f_x0

    exponent = 4.0 + gamma
    if kind == ScheduleKind.THEORETICAL:
        return 2.0 * f_x0 / (9.0 * (k + 1) ** exponent)
    if kind == ScheduleKind.BOX:
        return f_x0 / (2.0 * (k + 2) ** exponent)
    return f_x0 / (2.0 * (k + 1) ** exponent)


def delta_schedule(k, mu, kappa):
    """
    Relative accuracy of the k-th sub-problem: sqrt(q) / (2 - sqrt(q)) when mu > 0, else 1/(k+1)^2.
    """
    if mu > 0:
        root_q = math.sqrt(_q(mu, kappa))
        return root_q / (2.0 - root_q)
    return 1.0 / (k + 1) ** 2


def kappa_default(method, smoothness, mu, n):
    """
    Closed-form smoothing parameter: L - 2 mu for full-gradient methods,
    (L_bar - mu)/(n + 1) - mu for incremental ones.

    A problem that is already well conditioned makes the formula non-positive; then a tiny
    kappa (KAPPA_FLOOR times the smoothness constant) is returned and a warning logged.
    """
    if method == MethodClass.FULL_GRADIENT:
        well_conditioned = not smoothness > 2.0 * mu
        kappa = smoothness - 2.0 * mu
    else:
        well_conditioned = not smoothness > (n + 2) * mu
        kappa = (smoothness - mu) / (n + 1) - mu

    if well_conditioned or not kappa > 0:
        floor = KAPPA_FLOOR * smoothness
        logger.warning(
            "problem is well conditioned (L=%.6g, mu=%.6g, n=%d): acceleration is not expected, using kappa=%.6g",
            smoothness,
            mu,
            n,
            floor,
        )
        return floor
    return kappa
