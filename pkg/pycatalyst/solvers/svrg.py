import logging

import numpy as np

from pycatalyst.core import as_vector
from pycatalyst.envelope import EnvelopeParams, residual_gap_bound
from pycatalyst.solvers.base import DEFAULT_MAX_PASSES, PassMonitor

logger = logging.getLogger(__name__)


def svrg_solve(sub, z0, rule, counter, rng=None, callback=None, max_passes=DEFAULT_MAX_PASSES):
    """
    Proximal SVRG, epoch length m = n, last iterate carried into the next epoch.

    Each epoch computes the anchor gradient (one full pass), certifies the anchor when the rule
    asks for it, then takes n corrected steps v = g_i(z) - g_i(anchor) + grad h_0(anchor),
    two component gradients each. Step size 1/(L_bar + kappa).
    """
    rng = rng if rng is not None else np.random.default_rng()
    params = EnvelopeParams.for_subproblem(sub)
    eta = 1.0 / sub.L_bar_max
    monitor = PassMonitor(sub, rule, "svrg", max_passes=max_passes, callback=callback)
    z = as_vector(z0, sub.p, name="z0").copy()
    t = 0

    while True:
        anchor = z
        anchor_grad = sub.smooth_gradient(anchor, counter)
        if rule.needs_certificate:
            cert = residual_gap_bound(sub, anchor, params, counter=counter, grad=anchor_grad)
            if monitor.certify(cert):
                return monitor.result(cert.at_point, t, certificate=cert, satisfied=True)

        for i in rng.integers(sub.n, size=sub.n):
            direction = (
                sub.component_gradient(i, z, counter)
                - sub.component_gradient(i, anchor, counter)
                + anchor_grad
            )
            z = sub.prox(z - eta * direction, eta, counter)
            t += 1

        if monitor.end_pass(z, t):
            return monitor.result(z, t, satisfied=not monitor.stopped_by_callback)
