"""
The accelerated outer loop and the plain baseline it is compared against.
"""
import logging

import numpy as np
from tqdm import tqdm

from pycatalyst.catalyst.config import Criterion, resolve_config
from pycatalyst.catalyst.schedules import (
    beta_coefficient,
    delta_schedule,
    epsilon_schedule,
    solve_alpha,
)
from pycatalyst.catalyst.warm_start import warm_start_point
from pycatalyst.core import as_vector
from pycatalyst.envelope import Subproblem, make_subproblem
from pycatalyst.exceptions import NonConvergenceError, UnsupportedMethodError
from pycatalyst.solvers import (
    DEFAULT_MAX_PASSES,
    SolverMethod,
    StoppingRule,
    get_solver,
    miso_cold_state,
    miso_shift_state,
    miso_solve,
)
from pycatalyst.trace import Trace, relative_gap

logger = logging.getLogger(__name__)

# sub-problem accuracies are never asked below this multiple of max(|f(x_k)|, 1)
ACCURACY_FLOOR = 64 * np.finfo(np.float64).eps


class CatalystState:
    def __init__(self, x0, alpha0, f_x0):
        self.x_prev = x0
        self.x_cur = x0
        self.y_prev = x0
        self.y_cur = x0
        self.alpha_prev = alpha0
        self.alpha_cur = alpha0
        self.k = 0
        self.f_x0 = f_x0

    def advance(self, x_next, q):
        """
        Accept x_k, update alpha and extrapolate y_k = x_k + beta_k (x_k - x_{k-1}).
        Returns beta_k.
        """
        alpha_next = solve_alpha(self.alpha_cur, q)
        beta = beta_coefficient(self.alpha_cur, alpha_next)

        y_next = x_next + beta * (x_next - self.x_cur)

        self.x_prev, self.x_cur = self.x_cur, x_next
        self.y_prev, self.y_cur = self.y_cur, y_next
        self.alpha_prev, self.alpha_cur = self.alpha_cur, alpha_next
        self.k += 1
        return beta

    def __repr__(self):
        return f"CatalystState(k={self.k}, alpha={self.alpha_cur:.6g})"


def _resolve_method(inner):
    if isinstance(inner, SolverMethod):
        return inner
    return SolverMethod.from_value(inner)


def _initial_gap_bound(obj, x0, config, fstar):
    """
    Upper bound on f(x_0) - f* for the schedules. f(x_0) serves when positive (losses here are
    non-negative); otherwise f(x_0) - f* when a reference is known, else 1.
    """
    if config.f_x0_bound is not None:
        return float(config.f_x0_bound)
    f_x0 = obj.value(x0)
    if f_x0 > 0:
        return f_x0
    if fstar is not None and f_x0 - fstar > 0:
        logger.warning("f(x0)=%.6g is not positive, bounding the initial gap by f(x0) - f*", f_x0)
        return f_x0 - fstar
    logger.warning("f(x0)=%.6g is not positive and no reference is known, bounding the initial gap by 1", f_x0)
    return 1.0


def accuracy_floor(f_value):
    return ACCURACY_FLOOR * max(abs(f_value), 1.0)


def _stopping_rule(criterion, k, params, f_x0, config, center, floor):
    if criterion == Criterion.C2:
        return StoppingRule.relative(delta_schedule(k, params.mu, params.kappa), center, floor=floor)
    if criterion == Criterion.C3:
        return StoppingRule.fixed_budget(1)
    eps = epsilon_schedule(
        k,
        params.mu,
        params.kappa,
        f_x0,
        kind=config.schedule,
        rho_factor=config.rho_factor,
        gamma=config.gamma,
    )
    if eps < floor:
        logger.debug("outer %d: eps_k=%.3g below floating-point resolution, using %.3g", k, eps, floor)
    return StoppingRule.absolute(max(eps, floor))


def catalyst_run(
    obj, x0, config, inner, counter, rng=None, fstar=None, progress=False, wall_clock=False, callback=None
):
    """
    Run the accelerated inexact proximal-point loop with the given inner method.

    Every sub-problem h_k(z) = f(z) + (kappa/2)||z - y_{k-1}||^2 is solved to the accuracy the
    criterion asks for, and x_k is always the point the inner solver certified (or returned after
    its budget). Trace samples are taken after every inner pass and after every outer iteration.
    No sub-problem is asked for an accuracy finer than the floating-point resolution of f(x_{k-1}).

    callback(k, x_k) is called after every outer iteration; returning True ends the run.

    :raises:
        NonConvergenceError: an inner solve hit its safety cap; the partial trace is attached.
    """
    method = _resolve_method(inner)
    solver = get_solver(inner)
    params = resolve_config(obj, config, method)
    rng = rng if rng is not None else np.random.default_rng(config.seed)

    x0 = as_vector(x0, obj.p, name="x0").copy()
    f_x0 = _initial_gap_bound(obj, x0, config, fstar)
    state = CatalystState(x0, params.alpha0, f_x0)
    miso_state = None

    trace = Trace(obj.n, fstar=fstar, wall_clock=wall_clock)
    f_current = obj.value(x0)
    trace.record(counter, 0, 0, f_current)
    logger.info(
        "catalyst-%s: kappa=%.6g q=%.6g alpha0=%.6g criterion=%s",
        method.name.lower() if method else inner,
        params.kappa,
        params.q,
        params.alpha0,
        config.criterion.name,
    )

    outer = tqdm(range(1, config.max_outer + 1), desc="catalyst", unit="outer", disable=not progress)
    for k in outer:
        center = state.y_cur
        sub = make_subproblem(obj, center, params.kappa)
        rule = _stopping_rule(config.criterion, k, params, f_x0, config, center, accuracy_floor(f_current))

        def record_pass(point, iterations, k=k):
            trace.record(counter, k, iterations, obj.value(point))
            return False

        try:
            if method == SolverMethod.MISO:
                if miso_state is None or config.criterion == Criterion.C2:
                    miso_state = miso_cold_state(sub, center, counter)
                else:
                    miso_state = miso_shift_state(miso_state, state.y_prev, center, params.kappa)
                result, miso_state = miso_solve(
                    sub, miso_state, rule, counter, rng=rng, callback=record_pass, max_passes=config.max_passes
                )
            else:
                if k == 1:
                    z0 = state.x_cur
                else:
                    z0 = warm_start_point(
                        config.criterion,
                        state.x_cur,
                        center,
                        state.y_prev,
                        sub,
                        params.mu,
                        params.kappa,
                        obj.L,
                        counter,
                    )
                result = solver(sub, z0, rule, counter, rng=rng, callback=record_pass, max_passes=config.max_passes)
        except NonConvergenceError as error:
            logger.error("outer iteration %d: %s", k, error)
            trace.final_point = state.x_cur
            error.trace = trace
            raise

        x_k = result.point
        value = obj.value(x_k)
        f_current = value
        trace.record(counter, k, result.inner_iterations, value)
        state.advance(x_k, params.q)

        gap = relative_gap(value, fstar)
        logger.info(
            "outer %d: inner passes %d, f(x_k)=%.17g, rel_gap=%.6g",
            k,
            result.passes,
            value,
            gap,
        )
        if config.target is not None and gap <= config.target:
            logger.info("target %.3g reached after %d outer iterations", config.target, k)
            break
        if callback is not None and callback(k, x_k):
            logger.info("stopped by callback after %d outer iterations", k)
            break
    else:
        if config.target is not None and fstar is not None:
            logger.warning("max_outer=%d exhausted before reaching target %.3g", config.max_outer, config.target)

    trace.final_point = state.x_cur
    return trace


def plain_run(
    obj,
    x0,
    inner,
    counter,
    target=None,
    fstar=None,
    max_passes=DEFAULT_MAX_PASSES,
    rng=None,
    seed=0,
    progress=False,
    wall_clock=False,
):
    """
    Run the inner method on f itself for up to max_passes passes, stopping early at the target
    relative gap. Running out of passes is not an error.

    :raises:
        UnsupportedMethodError: MISO on an objective whose smooth part is not strongly convex.
    """
    method = _resolve_method(inner)
    solver = get_solver(inner)
    if method == SolverMethod.MISO and not obj.smooth.mu > 0:
        raise UnsupportedMethodError(
            "MISO is not available on an objective whose smooth part is not strongly convex"
        )
    rng = rng if rng is not None else np.random.default_rng(seed)

    x0 = as_vector(x0, obj.p, name="x0").copy()
    sub = Subproblem(obj, np.zeros(obj.p), 0.0)
    trace = Trace(obj.n, fstar=fstar, wall_clock=wall_clock)
    trace.record(counter, 0, 0, obj.value(x0))
    logger.info("plain-%s: max_passes=%d", method.name.lower() if method else inner, max_passes)

    with tqdm(total=max_passes, desc="plain", unit="pass", disable=not progress) as bar:

        def record_pass(point, iterations):
            bar.update(1)
            sample = trace.record(counter, 0, iterations, obj.value(point))
            return target is not None and sample.rel_gap <= target

        result = solver(
            sub,
            x0,
            StoppingRule.fixed_budget(max_passes),
            counter,
            rng=rng,
            callback=record_pass,
            max_passes=max_passes,
        )

    last = trace.last
    if (last.component_grads, last.full_passes) != counter.snapshot()[:2]:
        trace.record(counter, 0, result.inner_iterations, obj.value(result.point))

    trace.final_point = result.point
    gap = trace.last.rel_gap
    if target is not None and fstar is not None and not gap <= target:
        logger.warning("plain run used %d passes without reaching target %.3g (rel_gap=%.6g)", max_passes, target, gap)
    return trace
