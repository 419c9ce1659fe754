import logging

from pycatalyst.core import as_vector
from pycatalyst.envelope import EnvelopeParams, residual_gap_bound
from pycatalyst.solvers.base import DEFAULT_MAX_PASSES, PassMonitor

logger = logging.getLogger(__name__)


def ista_solve(sub, z0, rule, counter, rng=None, callback=None, max_passes=DEFAULT_MAX_PASSES):
    """
    Proximal gradient descent on h with step 1/(L + kappa). Every iteration is one full pass.

    Under a certified rule each step doubles as the certificate of the point it produces,
    so checking costs one extra prox per pass and no extra gradient.
    """
    params = EnvelopeParams.for_subproblem(sub)
    eta = params.eta
    monitor = PassMonitor(sub, rule, "ista", max_passes=max_passes, callback=callback)
    z = as_vector(z0, sub.p, name="z0").copy()
    t = 0

    while True:
        grad = sub.smooth_gradient(z, counter)
        if rule.needs_certificate:
            cert = residual_gap_bound(sub, z, params, counter=counter, grad=grad)
            z = cert.at_point
            t += 1
            if monitor.certify(cert):
                return monitor.result(z, t, certificate=cert, satisfied=True)
        else:
            z = sub.prox(z - eta * grad, eta, counter)
            t += 1

        if monitor.end_pass(z, t):
            return monitor.result(z, t, satisfied=not monitor.stopped_by_callback)
