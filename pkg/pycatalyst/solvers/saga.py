import logging

import numpy as np

from pycatalyst.core import as_vector, eval_grad_component
from pycatalyst.envelope import EnvelopeParams, residual_gap_bound
from pycatalyst.solvers.base import DEFAULT_MAX_PASSES, PassMonitor

logger = logging.getLogger(__name__)


class SagaTable:
    """
    The last gradient of every component f_i (without the proximity term) and their average.
    Building it at a point costs one full pass.
    """

    def __init__(self, sub, z, counter):
        self.sub = sub
        self.memory = np.array([sub.base.smooth.component_gradient(i, z) for i in range(sub.n)])
        counter.add_full_pass()
        self.average = self.memory.mean(axis=0)

    def direction(self, i, fresh, z):
        """
        Unbiased estimate of grad h_0(z) built from a fresh gradient of component i.
        """
        return fresh - self.memory[i] + self.average + self.sub.kappa * (z - self.sub.center)

    def update(self, i, fresh):
        self.average += (fresh - self.memory[i]) / self.sub.n
        self.memory[i] = fresh

    def resync(self):
        self.average = self.memory.mean(axis=0)

    def smooth_gradient(self, z):
        """
        grad h_0(z), exact when every entry of the table was computed at z.
        """
        return self.average + self.sub.kappa * (z - self.sub.center)


def saga_solve(sub, z0, rule, counter, rng=None, callback=None, max_passes=DEFAULT_MAX_PASSES):
    """
    Proximal SAGA with step 1/(3 (L_bar + kappa)). The table is built at z0, which also
    certifies z0 for free; after that the rule is checked once every n iterations.
    """
    rng = rng if rng is not None else np.random.default_rng()
    params = EnvelopeParams.for_subproblem(sub)
    eta = 1.0 / (3.0 * sub.L_bar_max)
    monitor = PassMonitor(sub, rule, "saga", max_passes=max_passes, callback=callback)
    z = as_vector(z0, sub.p, name="z0").copy()
    table = SagaTable(sub, z, counter)
    t = 0

    if rule.needs_certificate:
        cert = residual_gap_bound(sub, z, params, counter=counter, grad=table.smooth_gradient(z))
        if monitor.certify(cert):
            return monitor.result(cert.at_point, t, certificate=cert, satisfied=True)

    while True:
        for i in rng.integers(sub.n, size=sub.n):
            fresh = eval_grad_component(sub.base, i, z, counter)
            direction = table.direction(i, fresh, z)
            table.update(i, fresh)
            z = sub.prox(z - eta * direction, eta, counter)
            t += 1
        table.resync()

        if rule.needs_certificate:
            cert = residual_gap_bound(sub, z, params, counter=counter)
            if monitor.certify(cert):
                return monitor.result(cert.at_point, t, certificate=cert, satisfied=True)

        if monitor.end_pass(z, t):
            return monitor.result(z, t, satisfied=not monitor.stopped_by_callback)
