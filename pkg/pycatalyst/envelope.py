"""
The Moreau-envelope layer.

For a prox-center y and smoothing parameter kappa, the sub-problem is
h(z) = f(z) + (kappa/2) ||z - y||^2. Its minimizer p(y) defines the envelope
F(y) = h(p(y)) with gradient kappa (y - p(y)). This module builds sub-problems
and certifies approximate minimizers of them.
"""
from enum import Enum
import logging
import math

import numpy as np
from scipy import linalg

from pycatalyst.core import as_vector, eval_grad_component, eval_grad_full, eval_prox
from pycatalyst.exceptions import InputError

logger = logging.getLogger(__name__)


class Subproblem:
    """
    h(z) = f_0(z) + (kappa/2) ||z - y||^2 + psi(z).

    The quadratic term is treated as part of every component's smooth gradient,
    so h_0 = f_0 + (kappa/2) ||. - y||^2 is (L + kappa)-smooth and (mu + kappa)-strongly convex.
    kappa = 0 is allowed here and gives back the original objective; make_subproblem rejects it.
    """

    def __init__(self, base, center, kappa):
        self.base = base
        self.center = as_vector(center, base.p, name="y")
        self.kappa = float(kappa)

    @property
    def n(self):
        return self.base.n

    @property
    def p(self):
        return self.base.p

    @property
    def L(self):
        return self.base.L + self.kappa

    @property
    def L_bar_max(self):
        return self.base.smooth.L_bar_max + self.kappa

    @property
    def mu(self):
        """strong convexity modulus of h"""
        return self.base.mu_total + self.kappa

    @property
    def smooth_mu(self):
        """strong convexity of the smooth part alone; the modulus MISO's surrogates can carry"""
        return self.base.smooth.mu + self.kappa

    def _proximity(self, z):
        diff = z - self.center
        return 0.5 * self.kappa * float(np.dot(diff, diff))

    def smooth_value(self, z):
        return self.base.smooth.value(z) + self._proximity(z)

    def value(self, z):
        return self.smooth_value(z) + self.base.reg.value(z)

    def component_value(self, i, z):
        return self.base.smooth.component_value(i, z) + self._proximity(z)

    def smooth_gradient(self, z, counter=None):
        if counter is None:
            grad = self.base.smooth.full_gradient(z)
        else:
            grad = eval_grad_full(self.base, z, counter)
        return grad + self.kappa * (z - self.center)

    def component_gradient(self, i, z, counter):
        return eval_grad_component(self.base, i, z, counter) + self.kappa * (z - self.center)

    def prox(self, v, step, counter=None):
        return eval_prox(self.base, v, step, counter)

    def __repr__(self):
        return f"Subproblem(kappa={self.kappa:.6g}, L={self.L:.6g}, mu={self.mu:.6g})"


class EnvelopeParams:
    def __init__(self, eta, q):
        if eta <= 0:
            raise InputError(f"gradient-mapping step must be positive, got {eta}")
        if not 0 <= q <= 1:
            raise InputError(f"q must lie in [0, 1], got {q}")
        self.eta = float(eta)
        self.q = float(q)

    @classmethod
    def for_subproblem(cls, sub):
        mu = sub.base.mu_total
        q = mu / (mu + sub.kappa) if mu + sub.kappa > 0 else 0.0
        return cls(eta=1.0 / sub.L, q=q)

    def __repr__(self):
        return f"EnvelopeParams(eta={self.eta:.6g}, q={self.q:.6g})"


class CertificateKind(Enum):
    ABSOLUTE_GAP = "ABSOLUTE_GAP"
    MAPPING_BOUND = "MAPPING_BOUND"
    DUAL_GAP = "DUAL_GAP"


class Certificate:
    """
    A certified upper bound on h(at_point) - h*. For MAPPING_BOUND certificates
    at_point is the prox-gradient image [z]_eta, not the point z it was computed at.
    """

    def __init__(self, kind, bound_on_gap, at_point):
        if not bound_on_gap >= 0:
            raise InputError(f"gap bound must be non-negative, got {bound_on_gap}")
        self.kind = kind
        self.bound_on_gap = float(bound_on_gap)
        self.at_point = at_point

    def __repr__(self):
        return f"Certificate({self.kind.name}, bound_on_gap={self.bound_on_gap:.6g})"


def make_subproblem(obj, y, kappa):
    if not kappa > 0:
        raise InputError(f"kappa must be positive, got {kappa}")
    return Subproblem(obj, y, kappa)


def gradient_mapping(sub, z, params=None, counter=None, grad=None):
    """
    One prox-gradient step [z]_eta = prox_{eta psi}(z - eta grad h_0(z)) and the
    gradient-mapping norm ||z - [z]_eta|| / eta.

    A gradient of h_0 at z that the caller already paid for can be passed as grad.
    """
    if params is None:
        params = EnvelopeParams.for_subproblem(sub)
    z = as_vector(z, sub.p, name="z")
    if grad is None:
        grad = sub.smooth_gradient(z, counter)

    eta = params.eta
    mapped = sub.prox(z - eta * grad, eta, counter)
    mapping_norm = float(np.linalg.norm(z - mapped)) / eta
    return mapped, mapping_norm


def residual_gap_bound(sub, z, params=None, counter=None, grad=None):
    """
    Certify [z]_eta through h([z]_eta) - h* <= ||gradient mapping||^2 / (2 (kappa + mu)).
    """
    mapped, mapping_norm = gradient_mapping(sub, z, params, counter=counter, grad=grad)
    modulus = sub.mu
    bound = mapping_norm ** 2 / (2.0 * modulus) if modulus > 0 else math.inf
    return Certificate(CertificateKind.MAPPING_BOUND, bound, mapped)


def check_c1(cert, eps):
    if not eps > 0:
        raise InputError(f"eps must be positive, got {eps}")
    return cert.bound_on_gap <= eps


def mapping_norm_satisfies_c1(mapping_norm, kappa, eps):
    """
    The gradient-mapping form of C1: ||z - [z]_eta|| / eta <= sqrt(2 kappa eps).
    """
    if not eps > 0:
        raise InputError(f"eps must be positive, got {eps}")
    return mapping_norm <= math.sqrt(2.0 * kappa * eps)


def relative_threshold(delta, kappa, z_cert, y):
    """
    (delta kappa / 2) ||z_cert - y||^2
    """
    diff = np.asarray(z_cert) - np.asarray(y)
    return 0.5 * delta * kappa * float(np.dot(diff, diff))


def check_c2(cert, delta, z_cert, y, kappa):
    """
    C2: h(z_cert) - h* <= (delta kappa / 2) ||z_cert - y||^2, with z_cert = cert.at_point.
    """
    if not 0 < delta < 1:
        raise InputError(f"delta must lie in (0, 1), got {delta}")
    return cert.bound_on_gap <= relative_threshold(delta, kappa, z_cert, y)


def envelope_gradient_estimate(y, z, kappa):
    """
    g(z) = kappa (y - z); exact envelope gradient when z = p(y).
    """
    return kappa * (np.asarray(y, dtype=np.float64) - np.asarray(z, dtype=np.float64))


def envelope_value(obj, y, kappa, prox_point):
    """
    F(y) = f(p(y)) + (kappa/2) ||p(y) - y||^2 given the proximal point p(y).
    """
    diff = prox_point - y
    return obj.value(prox_point) + 0.5 * kappa * float(np.dot(diff, diff))


def exact_prox_quadratic(Q, b, y, kappa):
    """
    Exact p(y) = (Q + kappa I)^{-1} (b + kappa y) for f(x) = (1/2) x^T Q x - b^T x.
    """
    Q = np.atleast_2d(np.asarray(Q, dtype=np.float64))
    if Q.shape[0] != Q.shape[1] or not np.allclose(Q, Q.T):
        raise InputError("Q must be a symmetric matrix")
    eigenvalues = linalg.eigvalsh(Q)
    if eigenvalues[0] < -1e-10 * max(1.0, float(np.max(np.abs(eigenvalues)))):
        raise InputError(f"Q must be positive semi-definite, smallest eigenvalue {eigenvalues[0]}")
    if not kappa > 0:
        raise InputError(f"kappa must be positive, got {kappa}")

    p = Q.shape[0]
    b = as_vector(b, p, name="b")
    y = as_vector(y, p, name="y")
    return linalg.solve(Q + kappa * np.eye(p), b + kappa * y, assume_a="pos")
