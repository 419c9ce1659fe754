from enum import Enum
import logging
import math

from pycatalyst.catalyst.schedules import MethodClass, ScheduleKind, kappa_default
from pycatalyst.exceptions import ConfigError
from pycatalyst.solvers import DEFAULT_MAX_PASSES, SolverMethod

logger = logging.getLogger(__name__)


class Criterion(Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C1STAR = "C1STAR"

    @staticmethod
    def from_value(string):
        """
        c1, c2, c3 or c1star (c1* is accepted too)
        """
        try:
            return Criterion(string.upper().replace("*", "STAR"))
        except (ValueError, AttributeError):
            return None


class CatalystConfig:
    """
    Outer-loop settings. kappa=None means "auto" (kappa_default for the inner method);
    mu=None takes the strong convexity of the objective.
    """

    def __init__(
        self,
        kappa=None,
        mu=None,
        criterion=Criterion.C1,
        schedule=ScheduleKind.PRACTICAL,
        rho_factor=0.9,
        gamma=0.1,
        max_outer=1000,
        target=None,
        seed=0,
        max_passes=DEFAULT_MAX_PASSES,
        f_x0_bound=None,
    ):
        validations = []
        if kappa is not None and not kappa > 0:
            validations.append(f"kappa must be positive, got {kappa}")
        if mu is not None and not mu >= 0:
            validations.append(f"mu must be non-negative, got {mu}")
        if not 0 < rho_factor < 1:
            validations.append(f"rho_factor must lie in (0, 1), got {rho_factor}")
        if not gamma > 0:
            validations.append(f"gamma must be positive, got {gamma}")
        if int(max_outer) < 1:
            validations.append(f"max_outer must be at least 1, got {max_outer}")
        if int(max_passes) < 1:
            validations.append(f"max_passes must be at least 1, got {max_passes}")
        if target is not None and not target > 0:
            validations.append(f"target must be positive, got {target}")
        if f_x0_bound is not None and not f_x0_bound > 0:
            validations.append(f"f_x0_bound must be positive, got {f_x0_bound}")
        if validations:
            raise ConfigError("; ".join(validations))

        self.kappa = kappa
        self.mu = mu
        self.criterion = criterion
        self.schedule = schedule
        self.rho_factor = float(rho_factor)
        self.gamma = float(gamma)
        self.max_outer = int(max_outer)
        self.target = target
        self.seed = seed
        self.max_passes = int(max_passes)
        self.f_x0_bound = f_x0_bound

    def __repr__(self):
        return (
            f"CatalystConfig(kappa={self.kappa}, mu={self.mu}, criterion={self.criterion.name}, "
            f"schedule={self.schedule.name}, max_outer={self.max_outer}, target={self.target})"
        )


class ResolvedParameters:
    def __init__(self, kappa, mu, q, alpha0, rho):
        self.kappa = kappa
        self.mu = mu
        self.q = q
        self.alpha0 = alpha0
        self.rho = rho

    def __repr__(self):
        return (
            f"ResolvedParameters(kappa={self.kappa:.6g}, mu={self.mu:.6g}, q={self.q:.6g}, "
            f"alpha0={self.alpha0:.6g})"
        )


def method_class(method):
    if method is not None and method.is_incremental:
        return MethodClass.INCREMENTAL
    return MethodClass.FULL_GRADIENT


def resolve_config(obj, config, method=None):
    """
    Fix kappa, mu, q = mu/(mu + kappa) and alpha_0 (sqrt(q) when mu > 0, else 1) for a run.
    """
    mu = obj.mu_total if config.mu is None else float(config.mu)

    kappa = config.kappa
    if kappa is None:
        klass = method_class(method)
        smoothness = obj.smooth.L_bar_max if klass == MethodClass.INCREMENTAL else obj.L
        kappa = kappa_default(klass, smoothness, mu, obj.n)
    kappa = float(kappa)

    q = mu / (mu + kappa)
    alpha0 = math.sqrt(q) if mu > 0 else 1.0
    resolved = ResolvedParameters(kappa, mu, q, alpha0, config.rho_factor * math.sqrt(q))
    logger.info("resolved %s", resolved)
    return resolved
