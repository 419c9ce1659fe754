import pytest

from pycatalyst.bench.experiment import CONFIG_KEYS, DEFAULTS, ExperimentParser, RunMode
from pycatalyst.catalyst import Criterion, ScheduleKind
from pycatalyst.data import SyntheticKind
from pycatalyst.exceptions import ArgumentValidationError, ConfigError
from pycatalyst.problems import LossKind, RegKind
from pycatalyst.solvers import SolverMethod


@pytest.fixture
def parser():
    return ExperimentParser()


def synthetic(**values):
    return {"synthetic_kind": "logistic", **values}


def test_defaults(parser):
    config = parser.parse(synthetic())

    assert config.synthetic.kind == SyntheticKind.LOGISTIC
    assert (config.synthetic.n, config.synthetic.p) == (100, 10)
    assert config.data_path is None
    assert config.normalize is True
    assert config.loss == LossKind.LOGISTIC
    assert config.reg == RegKind.ridge_only(0.0)
    assert config.method == SolverMethod.SVRG
    assert config.mode == RunMode.CATALYST
    assert config.catalyst.criterion == Criterion.C1
    assert config.catalyst.kappa is None
    assert config.catalyst.schedule == ScheduleKind.PRACTICAL
    assert config.target == 1e-6
    assert config.catalyst.target == 1e-6
    assert config.seed == 0
    assert config.count_full_passes is True
    assert config.wall_clock is False


def test_every_default_is_a_key():
    assert set(CONFIG_KEYS) == set(DEFAULTS)


def test_string_values_from_environment(parser):
    config = parser.parse(
        synthetic(
            n="50",
            p="4",
            reg="elastic_net",
            lam="0.01",
            mu="1e-3",
            method="MISO",
            mode="plain",
            criterion="c1*",
            kappa="0.5",
            schedule="box",
            normalize="false",
            count_full_passes="no",
            seed="9",
        )
    )

    assert (config.synthetic.n, config.synthetic.p) == (50, 4)
    assert config.synthetic.seed == 9
    assert config.reg == RegKind.elastic_net(0.01, 1e-3)
    assert config.method == SolverMethod.MISO
    assert config.mode == RunMode.PLAIN
    assert config.catalyst.criterion == Criterion.C1STAR
    assert config.catalyst.kappa == 0.5
    assert config.catalyst.schedule == ScheduleKind.BOX
    assert config.normalize is False
    assert config.count_full_passes is False


def test_empty_values_fall_back_to_defaults(parser):
    config = parser.parse(synthetic(method="", kappa=None))
    assert config.method == SolverMethod.SVRG
    assert config.catalyst.kappa is None


def test_unknown_key(parser):
    with pytest.raises(ConfigError) as e_info:
        parser.parse(synthetic(step_size=0.1))
    assert "step_size" in str(e_info.value)


def test_missing_data(parser):
    with pytest.raises(ArgumentValidationError) as e_info:
        parser.parse({})
    assert e_info.value.validation_messages == ["Missing DATA or SYNTHETIC_KIND"]


def test_data_and_synthetic_exclusive(parser, tmp_path):
    path = tmp_path / "train.svm"
    path.write_text("1 1:1\n")
    with pytest.raises(ArgumentValidationError) as e_info:
        parser.parse({"data": str(path), "synthetic_kind": "logistic"})
    assert "DATA and SYNTHETIC_KIND are mutually exclusive" in e_info.value.validation_messages


def test_data_file(parser, tmp_path):
    path = tmp_path / "train.svm"
    path.write_text("1 1:1\n")
    config = parser.parse({"data": str(path)})

    assert config.data_path == str(path)
    assert config.synthetic is None


def test_data_file_not_found(parser):
    with pytest.raises(ArgumentValidationError) as e_info:
        parser.parse({"data": "/does/not/exist.svm"})
    assert e_info.value.validation_messages == ["DATA file not found: /does/not/exist.svm"]


def test_collects_every_problem(parser):
    with pytest.raises(ArgumentValidationError) as e_info:
        parser.parse(synthetic(loss="hinge", n="x", method="exact", target="0", rho_factor="1.5"))

    assert e_info.value.validation_messages == [
        "Invalid N: x",
        "Unknown LOSS: hinge",
        "Unknown METHOD: exact",
        "Invalid TARGET: 0 (must be greater than 0)",
        "Invalid RHO_FACTOR: 1.5 (must be below 1)",
    ]


@pytest.mark.parametrize(
    "key,value,message",
    [
        ("kappa", "-1", "Invalid KAPPA: -1 (must be greater than 0)"),
        ("lam", "-0.5", "Invalid LAM: -0.5 (must be at least 0)"),
        ("criterion", "c9", "Unknown CRITERION: c9"),
        ("normalize", "maybe", "Invalid NORMALIZE: maybe"),
        ("sparsity", "2", "Invalid SPARSITY: 2.0 (must be at most 1)"),
        ("seed", "-3", "Invalid SEED: -3 (must be at least 0)"),
    ],
)
def test_single_validation(parser, key, value, message):
    with pytest.raises(ArgumentValidationError) as e_info:
        parser.parse(synthetic(**{key: value}))
    assert e_info.value.validation_messages == [message]


def test_replace(parser):
    config = parser.parse(synthetic())
    changed = config.replace(out="run.csv", catalyst_kappa=0.25)

    assert changed.out == "run.csv"
    assert changed.catalyst.kappa == 0.25
    assert config.out is None
    assert config.catalyst.kappa is None
