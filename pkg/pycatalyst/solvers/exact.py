import logging

from scipy import linalg

from pycatalyst.envelope import Certificate, CertificateKind, exact_prox_quadratic
from pycatalyst.exceptions import UnsupportedMethodError
from pycatalyst.problems import QuadraticOracle, ZeroRegularizer
from pycatalyst.solvers.base import DEFAULT_MAX_PASSES, PassMonitor

logger = logging.getLogger(__name__)


def exact_quadratic_solve(sub, z0, rule, counter, rng=None, callback=None, max_passes=DEFAULT_MAX_PASSES):
    """
    Exact minimizer of a quadratic sub-problem with psi = 0, charged as one full pass.
    z0, rng and the rule are accepted for a uniform signature; the answer is certified with gap 0.
    """
    smooth = sub.base.smooth
    if not isinstance(smooth, QuadraticOracle) or not isinstance(sub.base.reg, ZeroRegularizer):
        raise UnsupportedMethodError("the exact solver only handles quadratics without a regularizer")

    if sub.kappa > 0:
        point = exact_prox_quadratic(smooth.Q, smooth.b, sub.center, sub.kappa)
    else:
        point = linalg.solve(smooth.Q, smooth.b, assume_a="pos")
    counter.add_full_pass()

    monitor = PassMonitor(sub, rule, "exact", max_passes=max_passes, callback=callback)
    cert = Certificate(CertificateKind.ABSOLUTE_GAP, 0.0, point)
    if rule.needs_certificate:
        monitor.certify(cert)
    monitor.passes = 1
    return monitor.result(point, 1, certificate=cert, satisfied=True)
