from enum import Enum

from pycatalyst.solvers.base import (
    DEFAULT_MAX_PASSES,
    InnerResult,
    PassMonitor,
    RuleKind,
    StoppingRule,
    contraction_estimate,
)
from pycatalyst.solvers.exact import exact_quadratic_solve
from pycatalyst.solvers.exceptions import ContractViolationError, UnknownSolverError
from pycatalyst.solvers.ista import ista_solve
from pycatalyst.solvers.miso import (
    MisoState,
    miso_cold_state,
    miso_shift_state,
    miso_solve,
    miso_solve_from_point,
)
from pycatalyst.solvers.saga import SagaTable, saga_solve
from pycatalyst.solvers.svrg import svrg_solve


class SolverMethod(Enum):
    ISTA = "ISTA"
    SVRG = "SVRG"
    SAGA = "SAGA"
    MISO = "MISO"
    EXACT = "EXACT"

    @staticmethod
    def from_value(string):
        try:
            return SolverMethod(string.upper())
        except (ValueError, AttributeError):
            return None

    @property
    def is_incremental(self):
        return self in (SolverMethod.SVRG, SolverMethod.SAGA, SolverMethod.MISO)


def get_solver(method):
    """
    Look up an inner solver by SolverMethod or by name.
    Every solver takes (sub, z0, rule, counter, rng=None, callback=None, max_passes=...).
    """
    if not isinstance(method, SolverMethod):
        resolved = SolverMethod.from_value(method)
        if resolved is None:
            raise UnknownSolverError(method)
        method = resolved

    solver = None
    if method == SolverMethod.ISTA:
        solver = ista_solve
    elif method == SolverMethod.SVRG:
        solver = svrg_solve
    elif method == SolverMethod.SAGA:
        solver = saga_solve
    elif method == SolverMethod.MISO:
        solver = miso_solve_from_point
    elif method == SolverMethod.EXACT:
        solver = exact_quadratic_solve

    if solver:
        return solver
    else:
        raise UnknownSolverError(method)
