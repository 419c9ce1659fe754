"""
Convergence traces: one sample per inner pass and per outer iteration, written as CSV.
"""
import csv
import logging
import math
import time

from pycatalyst.exceptions import InputError

logger = logging.getLogger(__name__)

CSV_HEADER = [
    "grad_evals",
    "full_passes",
    "effective_grads",
    "outer_iter",
    "inner_iters",
    "f_value",
    "rel_gap",
    "wall_ms",
]


def relative_gap(value, fstar):
    """
    (f - f*) / |f*|, or f - f* when f* is zero; nan without a reference.
    """
    if fstar is None:
        return math.nan
    if fstar != 0:
        return (value - fstar) / abs(fstar)
    return value - fstar


class TraceSample:
    def __init__(
        self,
        component_grads,
        full_passes,
        effective_grads,
        outer_iter,
        inner_iters,
        f_value,
        rel_gap,
        wall_ms,
    ):
        self.component_grads = int(component_grads)
        self.full_passes = int(full_passes)
        self.effective_grads = int(effective_grads)
        self.outer_iter = int(outer_iter)
        self.inner_iters = int(inner_iters)
        self.f_value = float(f_value)
        self.rel_gap = float(rel_gap)
        self.wall_ms = float(wall_ms)

    def as_row(self):
        return [
            str(self.component_grads),
            str(self.full_passes),
            str(self.effective_grads),
            str(self.outer_iter),
            str(self.inner_iters),
            f"{self.f_value:.17g}",
            f"{self.rel_gap:.17g}",
            f"{self.wall_ms:.17g}",
        ]

    def __eq__(self, other):
        return self.as_row() == other.as_row()

    def __repr__(self):
        return "TraceSample({})".format(", ".join(self.as_row()))


class Trace:
    """
    Samples of a run against an optional f* reference.
    wall_ms is written as 0 unless wall_clock is on, so reruns give identical files.
    """

    def __init__(self, n, fstar=None, wall_clock=False):
        self.n = n
        self.fstar = fstar
        self.wall_clock = wall_clock
        self.samples = []
        self.final_point = None
        self._started = time.perf_counter()

    def record(self, counter, outer_iter, inner_iters, f_value):
        wall_ms = (time.perf_counter() - self._started) * 1000.0 if self.wall_clock else 0.0
        sample = TraceSample(
            counter.component_grads,
            counter.full_passes,
            counter.effective_grads(self.n),
            outer_iter,
            inner_iters,
            f_value,
            relative_gap(f_value, self.fstar),
            wall_ms,
        )
        self.samples.append(sample)
        return sample

    @property
    def last(self):
        return self.samples[-1] if self.samples else None

    def first_reaching(self, target):
        """
        The first sample whose relative gap is at or below target, or None.
        """
        for sample in self.samples:
            if sample.rel_gap <= target:
                return sample
        return None

    def __len__(self):
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)


def emit_csv(trace, path):
    with open(path, "w", newline="") as out_file:
        writer = csv.writer(out_file, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for sample in trace.samples:
            writer.writerow(sample.as_row())
    logger.debug("wrote %d samples to %s", len(trace.samples), path)


def read_csv(path):
    with open(path, "r", newline="") as in_file:
        reader = csv.reader(in_file)
        header = next(reader, None)
        if header != CSV_HEADER:
            raise InputError(f"unexpected trace header in {path}: {header}")

        trace = Trace(n=None)
        for row in reader:
            trace.samples.append(
                TraceSample(
                    int(row[0]),
                    int(row[1]),
                    int(row[2]),
                    int(row[3]),
                    int(row[4]),
                    float(row[5]),
                    float(row[6]),
                    float(row[7]),
                )
            )
    return trace
