"""
The three empirical-risk formulations: ridge logistic regression, lasso and elastic-net.
"""
from enum import Enum
import logging

from pycatalyst.core import CompositeObjective
from pycatalyst.exceptions import InputError
from pycatalyst.problems.losses import LinearModelOracle, LossKind
from pycatalyst.problems.regularizers import (
    ElasticNetRegularizer,
    L1Regularizer,
    ZeroRegularizer,
)

logger = logging.getLogger(__name__)


class RegType(Enum):
    RIDGE = "RIDGE"
    L1 = "L1"
    ELASTIC_NET = "ELASTIC_NET"

    @staticmethod
    def from_value(string):
        try:
            return RegType(string.upper())
        except (ValueError, AttributeError):
            return None


class RegKind:
    """
    RidgeOnly(mu) | L1Only(lam) | ElasticNet(lam, mu)
    """

    def __init__(self, reg_type, lam=0.0, mu=0.0):
        if lam < 0 or mu < 0:
            raise InputError(f"regularization weights must be non-negative, got lam={lam}, mu={mu}")
        self.reg_type = reg_type
        self.lam = float(lam) if reg_type != RegType.RIDGE else 0.0
        self.mu = float(mu) if reg_type != RegType.L1 else 0.0

    @classmethod
    def ridge_only(cls, mu):
        return cls(RegType.RIDGE, mu=mu)

    @classmethod
    def l1_only(cls, lam):
        return cls(RegType.L1, lam=lam)

    @classmethod
    def elastic_net(cls, lam, mu):
        return cls(RegType.ELASTIC_NET, lam=lam, mu=mu)

    @property
    def strong_convexity(self):
        return self.mu

    def __eq__(self, other):
        return (self.reg_type, self.lam, self.mu) == (other.reg_type, other.lam, other.mu)

    def __repr__(self):
        return f"RegKind({self.reg_type.name}, lam={self.lam}, mu={self.mu})"


def build_formulation(kind, reg, data):
    """
    Assemble f = f_0 + psi for a loss and a regularizer over a dataset.

    The ridge of RidgeOnly is folded into the smooth part (every component gradient gets + mu x);
    the ridge of ElasticNet stays in psi and is handled by its prox.
    """
    if data.n == 0:
        raise InputError("cannot build a formulation over an empty dataset")

    if reg.reg_type == RegType.RIDGE:
        smooth = LinearModelOracle(data, kind, ridge=reg.mu)
        regularizer = ZeroRegularizer()
    elif reg.reg_type == RegType.L1:
        smooth = LinearModelOracle(data, kind)
        regularizer = L1Regularizer(reg.lam)
    elif reg.reg_type == RegType.ELASTIC_NET:
        smooth = LinearModelOracle(data, kind)
        regularizer = ElasticNetRegularizer(reg.lam, reg.mu)
    else:
        raise InputError(f"unknown regularization {reg}")

    objective = CompositeObjective(smooth, regularizer)
    logger.debug("built formulation %s", objective)
    return objective
