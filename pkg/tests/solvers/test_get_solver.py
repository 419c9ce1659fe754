import pytest
from unittest.mock import patch

from pycatalyst.solvers import SolverMethod, UnknownSolverError, get_solver


@pytest.mark.parametrize(
    "name,function",
    [
        ("ista", "ista_solve"),
        ("svrg", "svrg_solve"),
        ("saga", "saga_solve"),
        ("miso", "miso_solve_from_point"),
        ("exact", "exact_quadratic_solve"),
    ],
)
def test_get_solver_by_name(name, function):
    with patch(f"pycatalyst.solvers.{function}") as solver:
        assert get_solver(name) == solver


def test_get_solver_by_method():
    with patch("pycatalyst.solvers.svrg_solve") as solver:
        assert get_solver(SolverMethod.SVRG) == solver


def test_get_unknown_solver():
    """
    get_solver should raise UnknownSolverError if given an unknown method
    """
    with pytest.raises(UnknownSolverError) as e_info:
        get_solver("UNKNOWN METHOD")
    assert e_info.value.method == "UNKNOWN METHOD"


def test_incremental_methods():
    assert SolverMethod.MISO.is_incremental
    assert SolverMethod.SAGA.is_incremental
    assert not SolverMethod.ISTA.is_incremental
    assert not SolverMethod.EXACT.is_incremental
