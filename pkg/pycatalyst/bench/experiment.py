"""
Experiment settings: the flat key set shared by config files, environment and CLI flags,
and the parser that validates it into an ExperimentConfig.
"""
from copy import deepcopy
from enum import Enum
import logging
import os

from pycatalyst.catalyst import CatalystConfig, Criterion, ScheduleKind
from pycatalyst.data import SyntheticKind, SyntheticSpec
from pycatalyst.exceptions import ArgumentValidationError, ConfigError
from pycatalyst.problems import LossKind, RegKind, RegType
from pycatalyst.solvers import SolverMethod

logger = logging.getLogger(__name__)

# solvers selectable for experiments; the exact solver only exists for quadratic test problems
EXPERIMENT_METHODS = (SolverMethod.ISTA, SolverMethod.SVRG, SolverMethod.SAGA, SolverMethod.MISO)

DEFAULTS = {
    "data": None,
    "synthetic_kind": None,
    "n": 100,
    "p": 10,
    "condition": 1.0,
    "sparsity": 1.0,
    "noise": 0.1,
    "normalize": True,
    "loss": "logistic",
    "reg": "ridge",
    "lam": 0.0,
    "mu": 0.0,
    "method": "svrg",
    "mode": "catalyst",
    "criterion": "c1",
    "kappa": "auto",
    "schedule": "practical",
    "gamma": 0.1,
    "rho_factor": 0.9,
    "max_outer": 1000,
    "max_passes": 1000,
    "target": 1e-6,
    "seed": 0,
    "out": None,
    "fstar": None,
    "fstar_cache": None,
    "count_full_passes": True,
    "wall_clock": False,
}

CONFIG_KEYS = tuple(DEFAULTS)


class RunMode(Enum):
    PLAIN = "PLAIN"
    CATALYST = "CATALYST"

    @staticmethod
    def from_value(string):
        try:
            return RunMode(string.upper())
        except (ValueError, AttributeError):
            return None


class ExperimentConfig:
    def __init__(
        self,
        data_path,
        synthetic,
        normalize,
        loss,
        reg,
        method,
        mode,
        catalyst,
        target,
        out,
        seed,
        max_passes,
        fstar=None,
        fstar_cache=None,
        count_full_passes=True,
        wall_clock=False,
    ):
        self.data_path = data_path
        self.synthetic = synthetic
        self.normalize = normalize
        self.loss = loss
        self.reg = reg
        self.method = method
        self.mode = mode
        self.catalyst = catalyst
        self.target = target
        self.out = out
        self.seed = seed
        self.max_passes = max_passes
        self.fstar = fstar
        self.fstar_cache = fstar_cache
        self.count_full_passes = count_full_passes
        self.wall_clock = wall_clock

    def replace(self, **changes):
        """
        A deep copy with some attributes changed; catalyst_<name> keys change the catalyst settings.
        """
        copied = deepcopy(self)
        for key, value in changes.items():
            if key.startswith("catalyst_"):
                setattr(copied.catalyst, key[len("catalyst_") :], value)
            else:
                setattr(copied, key, value)
        return copied

    def __repr__(self):
        source = self.data_path if self.data_path is not None else self.synthetic
        return (
            f"ExperimentConfig({source}, {self.loss.name}, {self.reg}, method={self.method.name}, "
            f"mode={self.mode.name}, {self.catalyst})"
        )


def _is_set(value):
    return value is not None and value != ""


class ExperimentParser:
    """
    Turns a raw mapping (config file keys overlaid with environment and CLI values) into an
    ExperimentConfig. Every problem found is reported at once through ArgumentValidationError.
    """

    TRUE_VALUES = ("true", "yes", "on", "1")
    FALSE_VALUES = ("false", "no", "off", "0")

    def __init__(self):
        self.validations = []

    def _number(self, raw, key, cast=float, minimum=None, exclusive=False):
        value = raw[key]
        if value is None:
            return None
        try:
            number = cast(value)
        except (TypeError, ValueError):
            self.validations.append(f"Invalid {key.upper()}: {value}")
            return None
        if minimum is not None and (number <= minimum if exclusive else number < minimum):
            bound = "greater than" if exclusive else "at least"
            self.validations.append(f"Invalid {key.upper()}: {value} (must be {bound} {minimum})")
            return None
        return number

    def _boolean(self, raw, key):
        value = raw[key]
        if isinstance(value, bool):
            return value
        if str(value).lower() in self.TRUE_VALUES:
            return True
        if str(value).lower() in self.FALSE_VALUES:
            return False
        self.validations.append(f"Invalid {key.upper()}: {value}")
        return None

    def _choice(self, raw, key, enum_type, allowed=None):
        value = raw[key]
        resolved = enum_type.from_value(value)
        if resolved is None or (allowed is not None and resolved not in allowed):
            self.validations.append(f"Unknown {key.upper()}: {value}")
        return resolved

    def _kappa(self, raw):
        value = raw["kappa"]
        if value is None or str(value).lower() == "auto":
            return None
        return self._number(raw, "kappa", minimum=0, exclusive=True)

    def _synthetic(self, raw, seed):
        kind = self._choice(raw, "synthetic_kind", SyntheticKind)
        n = self._number(raw, "n", int, minimum=1)
        p = self._number(raw, "p", int, minimum=1)
        condition = self._number(raw, "condition", minimum=1)
        sparsity = self._number(raw, "sparsity", minimum=0, exclusive=True)
        noise = self._number(raw, "noise", minimum=0)
        if None in (kind, n, p, condition, sparsity, noise, seed):
            return None
        if sparsity > 1:
            self.validations.append(f"Invalid SPARSITY: {sparsity} (must be at most 1)")
            return None
        return SyntheticSpec(kind, n, p, condition=condition, sparsity=sparsity, noise=noise, seed=seed)

    def parse(self, raw):
        unknown = sorted(set(raw) - set(CONFIG_KEYS))
        if unknown:
            raise ConfigError("Unknown config keys: {}".format(", ".join(unknown)))

        raw = {**DEFAULTS, **{key: value for key, value in raw.items() if _is_set(value)}}
        self.validations = []
        seed = self._number(raw, "seed", int, minimum=0)

        data_path = raw["data"]
        synthetic = None
        if data_path is None and raw["synthetic_kind"] is None:
            self.validations.append("Missing DATA or SYNTHETIC_KIND")
        elif data_path is not None and raw["synthetic_kind"] is not None:
            self.validations.append("DATA and SYNTHETIC_KIND are mutually exclusive")
        elif data_path is not None:
            if data_path != "-" and not os.path.exists(data_path):
                self.validations.append(f"DATA file not found: {data_path}")
        else:
            synthetic = self._synthetic(raw, seed)

        loss = self._choice(raw, "loss", LossKind)
        reg_type = self._choice(raw, "reg", RegType)
        lam = self._number(raw, "lam", minimum=0)
        mu = self._number(raw, "mu", minimum=0)
        method = self._choice(raw, "method", SolverMethod, allowed=EXPERIMENT_METHODS)
        mode = self._choice(raw, "mode", RunMode)
        criterion = self._choice(raw, "criterion", Criterion)
        schedule = self._choice(raw, "schedule", ScheduleKind)
        kappa = self._kappa(raw)
        gamma = self._number(raw, "gamma", minimum=0, exclusive=True)
        rho_factor = self._number(raw, "rho_factor", minimum=0, exclusive=True)
        max_outer = self._number(raw, "max_outer", int, minimum=1)
        max_passes = self._number(raw, "max_passes", int, minimum=1)
        target = self._number(raw, "target", minimum=0, exclusive=True)
        fstar = self._number(raw, "fstar")
        normalize = self._boolean(raw, "normalize")
        count_full_passes = self._boolean(raw, "count_full_passes")
        wall_clock = self._boolean(raw, "wall_clock")

        if rho_factor is not None and rho_factor >= 1:
            self.validations.append(f"Invalid RHO_FACTOR: {rho_factor} (must be below 1)")

        if len(self.validations) > 0:
            raise ArgumentValidationError(self.validations)

        reg = RegKind(reg_type, lam=lam, mu=mu)
        catalyst = CatalystConfig(
            kappa=kappa,
            criterion=criterion,
            schedule=schedule,
            rho_factor=rho_factor,
            gamma=gamma,
            max_outer=max_outer,
            target=target,
            seed=seed,
            max_passes=max_passes,
        )
        config = ExperimentConfig(
            data_path=data_path,
            synthetic=synthetic,
            normalize=normalize,
            loss=loss,
            reg=reg,
            method=method,
            mode=mode,
            catalyst=catalyst,
            target=target,
            out=raw["out"],
            seed=seed,
            max_passes=max_passes,
            fstar=fstar,
            fstar_cache=raw["fstar_cache"],
            count_full_passes=count_full_passes,
            wall_clock=wall_clock,
        )
        logger.debug("parsed %s", config)
        return config
