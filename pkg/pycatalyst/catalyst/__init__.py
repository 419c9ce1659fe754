from pycatalyst.catalyst.config import (
    CatalystConfig,
    Criterion,
    ResolvedParameters,
    method_class,
    resolve_config,
)
from pycatalyst.catalyst.driver import CatalystState, catalyst_run, plain_run
from pycatalyst.catalyst.schedules import (
    KAPPA_FLOOR,
    MethodClass,
    ScheduleKind,
    beta_coefficient,
    delta_schedule,
    epsilon_schedule,
    kappa_default,
    solve_alpha,
)
from pycatalyst.catalyst.warm_start import momentum_point, warm_start_point
