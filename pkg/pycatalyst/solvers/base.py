"""
Stopping rules, inner results and the pass bookkeeping shared by every inner method.
"""
from enum import Enum
import logging

import numpy as np

from pycatalyst.envelope import check_c1, check_c2
from pycatalyst.exceptions import InputError, NonConvergenceError

logger = logging.getLogger(__name__)

# passes over the data allowed per sub-problem before a certified rule gives up
DEFAULT_MAX_PASSES = 1000


class RuleKind(Enum):
    ABSOLUTE = "ABSOLUTE"
    RELATIVE = "RELATIVE"
    BUDGET = "BUDGET"


class StoppingRule:
    """
    Absolute(eps) | Relative(delta, center y) | Budget(T passes).
    Budget rules never evaluate certificates.
    """

    def __init__(self, kind, eps=None, delta=None, center=None, budget=None, floor=0.0):
        self.kind = kind
        self.floor = float(floor)
        self.eps = eps
        self.delta = delta
        self.center = center
        self.budget = budget

    @classmethod
    def absolute(cls, eps):
        if not eps > 0:
            raise InputError(f"eps must be positive, got {eps}")
        return cls(RuleKind.ABSOLUTE, eps=float(eps))

    @classmethod
    def relative(cls, delta, center, floor=0.0):
        """
        A certified gap at or below floor is accepted even when the relative threshold is smaller.
        """
        if not 0 < delta < 1:
            raise InputError(f"delta must lie in (0, 1), got {delta}")
        return cls(RuleKind.RELATIVE, delta=float(delta), center=np.asarray(center, dtype=np.float64), floor=floor)

    @classmethod
    def fixed_budget(cls, passes):
        if int(passes) < 1:
            raise InputError(f"budget must be at least one pass, got {passes}")
        return cls(RuleKind.BUDGET, budget=int(passes))

    @property
    def needs_certificate(self):
        return self.kind != RuleKind.BUDGET

    def satisfied_by(self, cert, sub):
        if self.kind == RuleKind.ABSOLUTE:
            return check_c1(cert, self.eps)
        if self.kind == RuleKind.RELATIVE:
            if self.floor > 0 and cert.bound_on_gap <= self.floor:
                return True
            return check_c2(cert, self.delta, cert.at_point, self.center, sub.kappa)
        return False

    def __repr__(self):
        if self.kind == RuleKind.ABSOLUTE:
            return f"StoppingRule.absolute({self.eps:.6g})"
        if self.kind == RuleKind.RELATIVE:
            return f"StoppingRule.relative({self.delta:.6g})"
        return f"StoppingRule.fixed_budget({self.budget})"


class InnerResult:
    def __init__(self, point, inner_iterations, certificate, satisfied, passes=0, gaps=None, state=None):
        self.point = point
        self.inner_iterations = inner_iterations
        self.certificate = certificate
        self.satisfied = satisfied
        self.passes = passes
        self.gaps = gaps if gaps is not None else []
        self.state = state

    def __repr__(self):
        return (
            f"InnerResult(inner_iterations={self.inner_iterations}, passes={self.passes}, "
            f"satisfied={self.satisfied}, certificate={self.certificate})"
        )


class PassMonitor:
    """
    Per-solve bookkeeping: passes completed, certified gaps seen, the best certificate,
    the per-pass callback and the safety cap.
    """

    def __init__(self, sub, rule, method, max_passes=DEFAULT_MAX_PASSES, callback=None):
        self.sub = sub
        self.rule = rule
        self.method = method
        self.max_passes = max_passes
        self.callback = callback
        self.passes = 0
        self.gaps = []
        self.best = None
        self.stopped_by_callback = False

    def certify(self, cert):
        """
        Record a certificate; True when it satisfies the stopping rule.
        """
        self.gaps.append(cert.bound_on_gap)
        if self.best is None or cert.bound_on_gap < self.best.bound_on_gap:
            self.best = cert
        satisfied = self.rule.satisfied_by(cert, self.sub)
        logger.debug(
            "%s pass %d: %s bound %.6g%s",
            self.method,
            self.passes,
            cert.kind.name,
            cert.bound_on_gap,
            " (satisfied)" if satisfied else "",
        )
        return satisfied

    def end_pass(self, point, iterations):
        """
        Close a pass over the data; True when the solve must stop here without a satisfied rule:
        budget spent or the callback asked to stop.
        Raises NonConvergenceError when a certified rule runs past the safety cap.
        """
        self.passes += 1
        if self.callback is not None and self.callback(point, iterations):
            self.stopped_by_callback = True
            return True
        if self.rule.kind == RuleKind.BUDGET:
            return self.passes >= self.rule.budget
        if self.passes >= self.max_passes:
            raise NonConvergenceError(
                f"{self.method} did not satisfy {self.rule} within {self.max_passes} passes "
                f"(best bound {self.best.bound_on_gap if self.best else float('nan'):.6g})",
                certificate=self.best,
            )
        return False

    def result(self, point, iterations, certificate=None, satisfied=False, state=None):
        if certificate is None:
            certificate = self.best
        return InnerResult(
            point,
            iterations,
            certificate,
            satisfied,
            passes=self.passes,
            gaps=list(self.gaps),
            state=state,
        )


def contraction_estimate(gaps):
    """
    Empirical linear rate tau from a trace of certified gaps: fit log(gap_t) = a + t log(r)
    by least squares and return 1 - r. Non-positive gaps are dropped before fitting.
    """
    gaps = np.asarray(gaps, dtype=np.float64)
    steps = np.arange(gaps.size)
    keep = gaps > 0
    if np.count_nonzero(keep) < 5:
        raise InputError(f"at least 5 positive gaps are needed, got {np.count_nonzero(keep)}")

    slope, _ = np.polyfit(steps[keep], np.log(gaps[keep]), 1)
    return 1.0 - float(np.exp(slope))
