"""
Proximal MISO with a dual-gap certificate.

Every component keeps a quadratic lower bound
d_i(x) = a_i + (sigma/2) ||x - c_i||^2 of f_i + (kappa/2) ||. - y||^2,
with sigma = mu + kappa the strong convexity of the smooth part of the sub-problem.
The average model d(x) = (1/n) sum_i d_i(x) + psi(x) is minimized in closed form by
prox_{psi/sigma}(w) with w the mean of the centers, and h(z) - d(z) bounds the gap of z.
"""
import logging

import numpy as np

from pycatalyst.core import as_vector
from pycatalyst.envelope import Certificate, CertificateKind
from pycatalyst.exceptions import InputError, UnsupportedMethodError
from pycatalyst.solvers.base import DEFAULT_MAX_PASSES, PassMonitor
from pycatalyst.solvers.exceptions import ContractViolationError

logger = logging.getLogger(__name__)

LOWER_BOUND_TOLERANCE = 1e-9


def _tolerance(value):
    return LOWER_BOUND_TOLERANCE * max(1.0, abs(value))


class MisoState:
    def __init__(self, centers, offsets, modulus):
        self.centers = np.array(centers, dtype=np.float64)
        self.offsets = np.array(offsets, dtype=np.float64)
        self.modulus = float(modulus)
        self.w = self.centers.mean(axis=0)
        self.dual_value = None

    @property
    def n(self):
        return self.centers.shape[0]

    def minimizer(self, sub, counter=None):
        return sub.prox(self.w, 1.0 / self.modulus, counter)

    def surrogate_values(self, z):
        return self.offsets + 0.5 * self.modulus * np.sum((self.centers - z) ** 2, axis=1)

    def lower_bound(self, sub, z):
        return float(np.mean(self.surrogate_values(z))) + sub.base.reg.value(z)

    def update(self, i, z, value, grad, delta):
        """
        Move surrogate i a fraction delta towards the tight minorant built at z.
        Raises ContractViolationError when the current surrogate already sits above f_i(z).
        """
        current = self.offsets[i] + 0.5 * self.modulus * float(np.sum((self.centers[i] - z) ** 2))
        if current > value + _tolerance(value):
            raise ContractViolationError(
                f"surrogate of component {i} exceeds its function value "
                f"({current:.17g} > {value:.17g}); is the component convex?"
            )

        center = z - grad / self.modulus
        offset = value - float(np.dot(grad, grad)) / (2.0 * self.modulus)
        old_center = self.centers[i]
        mixed_center = (1.0 - delta) * old_center + delta * center
        spread = float(np.sum((old_center - center) ** 2))
        mixed_offset = (
            (1.0 - delta) * self.offsets[i]
            + delta * offset
            + 0.5 * self.modulus * delta * (1.0 - delta) * spread
        )

        self.w += (mixed_center - old_center) / self.n
        self.centers[i] = mixed_center
        self.offsets[i] = mixed_offset

    def resync(self):
        self.w = self.centers.mean(axis=0)

    def copy(self):
        return MisoState(self.centers, self.offsets, self.modulus)

    def __repr__(self):
        return f"MisoState(n={self.n}, modulus={self.modulus:.6g}, dual_value={self.dual_value})"


def _surrogate_modulus(sub):
    modulus = sub.smooth_mu
    if not modulus > 0:
        raise UnsupportedMethodError(
            "MISO needs a strongly convex smooth part; use catalyst mode or a ridge term"
        )
    return modulus


def miso_cold_state(sub, z, counter):
    """
    Surrogates of every component built at z; one full pass.
    """
    modulus = _surrogate_modulus(sub)
    z = as_vector(z, sub.p, name="z")
    proximity = sub.kappa * (z - sub.center)
    centers = np.empty((sub.n, sub.p))
    offsets = np.empty(sub.n)
    for i in range(sub.n):
        grad = sub.base.smooth.component_gradient(i, z) + proximity
        centers[i] = z - grad / modulus
        offsets[i] = sub.component_value(i, z) - float(np.dot(grad, grad)) / (2.0 * modulus)
    counter.add_full_pass()
    return MisoState(centers, offsets, modulus)


def miso_shift_state(state, y_prev, y_next, kappa):
    """
    Re-center surrogates of f_i + (kappa/2)||. - y_prev||^2 onto f_i + (kappa/2)||. - y_next||^2.
    The two differ by an affine function, so every surrogate stays a lower bound.
    """
    y_prev = np.asarray(y_prev, dtype=np.float64)
    y_next = np.asarray(y_next, dtype=np.float64)
    sigma = state.modulus
    v = kappa * (y_prev - y_next)
    e = 0.5 * kappa * (float(np.dot(y_next, y_next)) - float(np.dot(y_prev, y_prev)))

    centers = state.centers - v / sigma
    offsets = state.offsets + e + state.centers @ v - float(np.dot(v, v)) / (2.0 * sigma)
    return MisoState(centers, offsets, sigma)


def dual_gap_certificate(sub, state, z):
    value = sub.value(z)
    lower = state.lower_bound(sub, z)
    state.dual_value = lower
    if lower > value + _tolerance(value):
        raise ContractViolationError(
            f"MISO lower bound {lower:.17g} above objective {value:.17g}"
        )
    return Certificate(CertificateKind.DUAL_GAP, max(value - lower, 0.0), z)


def mixing_step(sub, modulus):
    """
    delta = min(1, n sigma / (2 (L_bar + kappa - sigma)))
    """
    excess = sub.L_bar_max - modulus
    if excess <= 0:
        return 1.0
    return min(1.0, sub.n * modulus / (2.0 * excess))


def miso_solve(sub, state, rule, counter, rng=None, callback=None, max_passes=DEFAULT_MAX_PASSES):
    """
    Run MISO from the surrogates in state. Returns (InnerResult, state); the state is updated
    in place and can be shifted onto the next sub-problem.
    """
    rng = rng if rng is not None else np.random.default_rng()
    modulus = _surrogate_modulus(sub)
    if not np.isclose(modulus, state.modulus, rtol=1e-12, atol=0.0):
        raise InputError(f"state modulus {state.modulus} does not match sub-problem modulus {modulus}")

    delta = mixing_step(sub, modulus)
    monitor = PassMonitor(sub, rule, "miso", max_passes=max_passes, callback=callback)
    z = state.minimizer(sub, counter)
    t = 0

    if rule.needs_certificate:
        cert = dual_gap_certificate(sub, state, z)
        if monitor.certify(cert):
            return monitor.result(z, t, certificate=cert, satisfied=True, state=state), state

    while True:
        for i in rng.integers(sub.n, size=sub.n):
            value = sub.component_value(i, z)
            grad = sub.component_gradient(i, z, counter)
            state.update(i, z, value, grad, delta)
            z = state.minimizer(sub, counter)
            t += 1
        state.resync()
        z = state.minimizer(sub, counter)

        if rule.needs_certificate:
            cert = dual_gap_certificate(sub, state, z)
            if monitor.certify(cert):
                return monitor.result(z, t, certificate=cert, satisfied=True, state=state), state

        if monitor.end_pass(z, t):
            return monitor.result(z, t, satisfied=not monitor.stopped_by_callback, state=state), state


def miso_solve_from_point(sub, z0, rule, counter, rng=None, callback=None, max_passes=DEFAULT_MAX_PASSES):
    """
    MISO behind the common solver signature: surrogates are built at z0 first.
    The final state is attached to the result.
    """
    state = miso_cold_state(sub, z0, counter)
    result, _ = miso_solve(sub, state, rule, counter, rng=rng, callback=callback, max_passes=max_passes)
    return result
