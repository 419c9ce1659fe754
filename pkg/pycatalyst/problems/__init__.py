from pycatalyst.problems.losses import (
    LossKind,
    LinearModelOracle,
    QuadraticOracle,
    logistic_value_grad,
    squared_error_value_grad,
)
from pycatalyst.problems.regularizers import (
    ZeroRegularizer,
    L1Regularizer,
    ElasticNetRegularizer,
    prox_l1,
    prox_elastic_net,
)
from pycatalyst.problems.formulation import RegKind, RegType, build_formulation
