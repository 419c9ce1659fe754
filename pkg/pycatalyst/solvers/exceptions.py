from pycatalyst.exceptions import PycatalystError


class SolverError(PycatalystError):
    pass


class UnknownSolverError(SolverError):
    def __init__(self, method):
        self.method = method
        super().__init__("Unknown inner solver: {}".format(method))


class ContractViolationError(SolverError):
    """
    An inner method observed something its convergence contract rules out,
    e.g. a MISO lower bound sitting above the objective.
    """

    pass
