"""
Certified reference optima for relative-gap traces.

The returned f* is a certified LOWER bound: the value of a prox-gradient image minus an upper
bound on its gap, so relative gaps measured against it are never negative.
"""
import hashlib
import json
import logging
import os

import numpy as np
from scipy import linalg

from pycatalyst.bench.exceptions import FstarCertificationError
from pycatalyst.catalyst import CatalystConfig, Criterion, catalyst_run
from pycatalyst.core import EvalCounter
from pycatalyst.envelope import EnvelopeParams, Subproblem, gradient_mapping
from pycatalyst.exceptions import NonConvergenceError
from pycatalyst.problems import LinearModelOracle, QuadraticOracle, ZeroRegularizer
from pycatalyst.solvers import SolverMethod

logger = logging.getLogger(__name__)


def dataset_fingerprint(dataset):
    digest = hashlib.sha256()
    features = dataset.features
    digest.update(np.asarray(features.shape, dtype=np.int64).tobytes())
    for array in (features.indptr, features.indices, features.data, dataset.labels):
        digest.update(np.ascontiguousarray(array).tobytes())
    return digest.hexdigest()


def formulation_key(loss, reg):
    return f"{loss.name}|{reg.reg_type.name}|{reg.lam!r}|{reg.mu!r}"


class FstarCache:
    """
    f* values keyed by (dataset fingerprint, formulation), with the relative accuracy each was
    certified to. Backed by a JSON file when a path is given.
    """

    def __init__(self, path=None):
        self.path = path
        self.entries = {}
        if path is not None and os.path.exists(path):
            with open(path, "r") as cache_file:
                self.entries = json.load(cache_file)
            logger.debug("loaded %d cached f* values from %s", len(self.entries), path)

    def get(self, key, accuracy):
        entry = self.entries.get(key)
        if entry is not None and entry["accuracy"] <= accuracy:
            return entry["fstar"]
        return None

    def put(self, key, fstar, accuracy):
        self.entries[key] = {"fstar": fstar, "accuracy": accuracy}
        if self.path is not None:
            with open(self.path, "w") as cache_file:
                json.dump(self.entries, cache_file, indent=2, sort_keys=True)


default_cache = FstarCache()


def _solution_radius(obj):
    """
    A bound R >= ||x*|| for l1-regularized objectives with a non-negative loss:
    lam ||x*||_1 <= f(x*) <= f(0).
    """
    lam = getattr(obj.reg, "lam", 0.0)
    if lam > 0 and isinstance(obj.smooth, LinearModelOracle):
        return obj.value(np.zeros(obj.p)) / lam
    return None


def certify_objective(obj, x):
    """
    (point, f(point), bound) with point the prox-gradient image of x and f(point) - f* <= bound.

    Strongly convex objectives use the gradient-mapping residual. Otherwise the prox-gradient
    inequality f(point) <= f(z) + <G(x), x - z> - (eta/2) ||G(x)||^2 at z = x* gives
    f(point) - f* <= ||G(x)|| ||x - x*||, measured from x and not from point,
    with ||x*|| bounded through the l1 term.
    """
    sub = Subproblem(obj, np.zeros(obj.p), 0.0)
    params = EnvelopeParams(eta=1.0 / obj.L, q=0.0)
    point, mapping_norm = gradient_mapping(sub, x, params)
    value = obj.value(point)

    if obj.mu_total > 0:
        return point, value, mapping_norm ** 2 / (2.0 * obj.mu_total)

    radius = _solution_radius(obj)
    if radius is None:
        raise FstarCertificationError(
            "cannot certify f* for an objective that is neither strongly convex nor l1-regularized; "
            "pass the reference value with FSTAR"
        )
    return point, value, mapping_norm * (float(np.linalg.norm(x)) + radius)


def _exact_quadratic_fstar(obj):
    if (
        isinstance(obj.smooth, QuadraticOracle)
        and isinstance(obj.reg, ZeroRegularizer)
        and obj.smooth.mu > 0
    ):
        minimizer = linalg.solve(obj.smooth.Q, obj.smooth.b, assume_a="pos")
        return obj.value(minimizer)
    return None


def certified_fstar(obj, accuracy, method=None, seed=0, max_outer=1000, check_every=1):
    """
    Minimize f with one Catalyst run (criterion C1), certifying the outer iterate every
    check_every outer iterations, until the certified gap is at most accuracy relative to |f|.
    Returns f(point) - bound.

    :raises:
        FstarCertificationError: the accuracy was not reached within max_outer outer iterations.
    """
    exact = _exact_quadratic_fstar(obj)
    if exact is not None:
        return exact

    if method is None:
        method = SolverMethod.SVRG if obj.n > 1 else SolverMethod.ISTA

    counter = EvalCounter()
    best = {"bound": float("inf"), "fstar": None}

    def certify(k, x_k):
        if k % check_every != 0:
            return False
        _, value, bound = certify_objective(obj, x_k)
        logger.debug("f* check at outer %d: f=%.17g bound=%.3g", k, value, bound)
        if bound < best["bound"]:
            best["bound"] = bound
        if bound <= accuracy * max(abs(value), 1e-300):
            best["fstar"] = value - bound
            return True
        return False

    config = CatalystConfig(criterion=Criterion.C1, max_outer=max_outer, seed=seed)
    try:
        catalyst_run(obj, np.zeros(obj.p), config, method, counter, callback=certify)
    except NonConvergenceError as error:
        raise FstarCertificationError(f"inner solver failed while estimating f*: {error}")

    if best["fstar"] is None:
        raise FstarCertificationError(
            f"could not certify f* to relative accuracy {accuracy:.3g} within {max_outer} outer iterations "
            f"(best bound {best['bound']:.3g}); increase the budget or pass FSTAR explicitly"
        )
    logger.info(
        "certified f* = %.17g (bound %.3g, %d effective gradients)",
        best["fstar"],
        best["bound"],
        counter.effective_grads(obj.n),
    )
    return best["fstar"]
