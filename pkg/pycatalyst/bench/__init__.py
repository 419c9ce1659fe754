from pycatalyst.bench.config import read_config
from pycatalyst.bench.exceptions import (
    BenchError,
    ConfigSyntaxError,
    FstarCertificationError,
    UnknownConfigTypeError,
)
from pycatalyst.bench.experiment import (
    CONFIG_KEYS,
    DEFAULTS,
    ExperimentConfig,
    ExperimentParser,
    RunMode,
)
from pycatalyst.bench.fstar import (
    FstarCache,
    certified_fstar,
    certify_objective,
    dataset_fingerprint,
    default_cache,
    formulation_key,
)
