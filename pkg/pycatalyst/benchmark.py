import gzip
import logging
import os
import sys

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from pycatalyst.bench.experiment import RunMode
from pycatalyst.bench.fstar import (
    FstarCache,
    certified_fstar,
    dataset_fingerprint,
    default_cache,
    formulation_key,
)
from pycatalyst.catalyst import catalyst_run, plain_run, resolve_config
from pycatalyst.core import EvalCounter
from pycatalyst.data import emit_svmlight, gen_synthetic, normalize_rows, read_dataset
from pycatalyst.exceptions import NonConvergenceError
from pycatalyst.problems import build_formulation
from pycatalyst.trace import emit_csv

logger = logging.getLogger(__name__)

# f* is certified this much tighter than the run's relative-gap target
FSTAR_ACCURACY_FACTOR = 1e-3

SWEEP_EXPONENTS = (-2, -1, 0, 1, 2)


def load_dataset(config):
    if config.data_path is not None:
        dataset = read_dataset(config.data_path)
    else:
        dataset = gen_synthetic(config.synthetic)
    if config.normalize:
        dataset = normalize_rows(dataset)
    logger.info("dataset: %s", dataset)
    return dataset


def estimate_fstar(config, dataset=None, objective=None, cache=None):
    """
    Reference optimum for the experiment, certified to 1e-3 times its target and cached per
    (dataset, formulation). An explicit fstar in the config wins.

    :raises:
        FstarCertificationError: the required accuracy could not be certified.
    """
    if config.fstar is not None:
        return config.fstar

    if dataset is None:
        dataset = load_dataset(config)
    if objective is None:
        objective = build_formulation(config.loss, config.reg, dataset)
    if cache is None:
        cache = FstarCache(config.fstar_cache) if config.fstar_cache else default_cache

    accuracy = FSTAR_ACCURACY_FACTOR * config.target
    key = "{}|{}".format(dataset_fingerprint(dataset), formulation_key(config.loss, config.reg))
    fstar = cache.get(key, accuracy)
    if fstar is not None:
        logger.debug("f* cache hit for %s", key)
        return fstar

    logger.info("estimating f* to relative accuracy %.3g...", accuracy)
    fstar = certified_fstar(objective, accuracy, seed=config.seed)
    cache.put(key, fstar, accuracy)
    return fstar


def run_experiment(config, progress=False, cache=None):
    """
    Run one experiment as the CLI would and write its trace to config.out when set.

    :raises:
        NonConvergenceError: an inner solve hit its safety cap; the partial trace is written first.
    """
    dataset = load_dataset(config)
    objective = build_formulation(config.loss, config.reg, dataset)
    fstar = estimate_fstar(config, dataset=dataset, objective=objective, cache=cache)
    logger.info("f* = %.17g", fstar)

    counter = EvalCounter(count_full_passes=config.count_full_passes)
    rng = np.random.default_rng(config.seed)
    x0 = np.zeros(objective.p)

    try:
        if config.mode == RunMode.PLAIN:
            trace = plain_run(
                objective,
                x0,
                config.method,
                counter,
                target=config.target,
                fstar=fstar,
                max_passes=config.max_passes,
                rng=rng,
                progress=progress,
                wall_clock=config.wall_clock,
            )
        else:
            trace = catalyst_run(
                objective,
                x0,
                config.catalyst,
                config.method,
                counter,
                rng=rng,
                fstar=fstar,
                progress=progress,
                wall_clock=config.wall_clock,
            )
    except NonConvergenceError as error:
        if config.out and error.trace is not None:
            emit_csv(error.trace, config.out)
            logger.error("partial trace written to %s", config.out)
        raise

    if config.out:
        emit_csv(trace, config.out)
        logger.info("trace written to %s", config.out)

    reached = trace.first_reaching(config.target)
    if reached is not None:
        logger.info(
            "%s-%s reached rel_gap %.3g after %d effective gradients",
            config.mode.name.lower(),
            config.method.name.lower(),
            config.target,
            reached.effective_grads,
        )
    return trace


def sweep_output_path(out, exponent):
    stem, ext = os.path.splitext(out)
    return f"{stem}_kappa_{exponent}{ext or '.csv'}"


def sweep_kappa(config, jobs=1, progress=False):
    """
    Run the experiment on the grid kappa = 10^i kappa_0, i in -2..2, kappa_0 being the configured
    kappa or the default for the method. One trace file per grid point.
    Returns a list of (exponent, kappa, trace).
    """
    dataset = load_dataset(config)
    objective = build_formulation(config.loss, config.reg, dataset)
    kappa0 = resolve_config(objective, config.catalyst, config.method).kappa
    fstar = estimate_fstar(config, dataset=dataset, objective=objective)
    out = config.out or "sweep.csv"

    grid = []
    for exponent in SWEEP_EXPONENTS:
        kappa = kappa0 * 10.0 ** exponent
        grid.append(
            (
                exponent,
                kappa,
                config.replace(
                    mode=RunMode.CATALYST,
                    fstar=fstar,
                    out=sweep_output_path(out, exponent),
                    catalyst_kappa=kappa,
                ),
            )
        )

    logger.info("sweeping kappa over %s around %.6g", list(SWEEP_EXPONENTS), kappa0)
    traces = Parallel(n_jobs=jobs)(
        delayed(run_experiment)(point_config)
        for _, _, point_config in tqdm(grid, desc="sweep", unit="kappa", disable=not progress)
    )
    return [(exponent, kappa, trace) for (exponent, kappa, _), trace in zip(grid, traces)]


def write_synthetic(spec, path, normalize=False):
    """
    Generate a synthetic dataset and write it in svmlight format (gzip for .gz paths, stdout for -).
    """
    dataset = gen_synthetic(spec)
    if normalize:
        dataset = normalize_rows(dataset)

    if path == "-":
        emit_svmlight(dataset, sys.stdout)
    elif path.endswith(".gz"):
        with gzip.open(path, "wt", encoding="utf-8") as out_file:
            emit_svmlight(dataset, out_file)
    else:
        with open(path, "w", encoding="utf-8") as out_file:
            emit_svmlight(dataset, out_file)
    logger.info("wrote %s to %s", dataset, path)
    return dataset
