"""Hardy nonlocality for noisy Hardy states.

Builds Hardy states mixed with white or colored noise, computes the joint
probabilities of the Hardy events, decides local-model explicability with a
linear program and evaluates the closed-form noise thresholds.
"""

__version__ = "0.1.0"

from .errors import (
    ColoredNoiseRequiresTwoQubits,
    ConsistencyError,
    DimensionMismatch,
    HardyNoiseError,
    InvalidInput,
    InvalidSpec,
    NotHermitian,
    NotPositive,
    TraceNotOne,
)
from .hardy import SchmidtSpec, Observable, hardy_state, observable, x_basis, y_basis
from .lhv import (
    BehaviorConstraints,
    DeterministicStrategy,
    MeasureConstraintSet,
    enumerate_strategies,
    hardy_inequality,
    lhv_feasible,
    measure_constraints,
    quartet_feasibility,
)
from .noise import NoiseKind, NoisyHardyState, mix, mix_colored, mix_white
from .probabilities import (
    HardyQuartet,
    OutcomePair,
    Variant,
    born_joint,
    behavior_table,
    closed_form,
    quartet_colored_2x2,
    quartet_white_2x2,
    sextet_white_highdim,
)
from .qstate import DensityOperator, projector, tensor, trace_distance, validate_density
from .thresholds import (
    ThresholdReport,
    horodecki_M,
    report,
    threshold_chsh_white,
    threshold_colored,
    threshold_white_2x2,
    threshold_white_highdim,
    tracedist_criterion,
)

__all__ = [
    "behavior_table",
    "BehaviorConstraints",
    "born_joint",
    "closed_form",
    "ColoredNoiseRequiresTwoQubits",
    "ConsistencyError",
    "DensityOperator",
    "DeterministicStrategy",
    "DimensionMismatch",
    "enumerate_strategies",
    "hardy_inequality",
    "hardy_state",
    "HardyNoiseError",
    "HardyQuartet",
    "horodecki_M",
    "InvalidInput",
    "InvalidSpec",
    "lhv_feasible",
    "measure_constraints",
    "MeasureConstraintSet",
    "mix",
    "mix_colored",
    "mix_white",
    "NoiseKind",
    "NoisyHardyState",
    "NotHermitian",
    "NotPositive",
    "Observable",
    "observable",
    "OutcomePair",
    "projector",
    "quartet_colored_2x2",
    "quartet_feasibility",
    "quartet_white_2x2",
    "report",
    "SchmidtSpec",
    "sextet_white_highdim",
    "tensor",
    "threshold_chsh_white",
    "threshold_colored",
    "threshold_white_2x2",
    "threshold_white_highdim",
    "ThresholdReport",
    "trace_distance",
    "tracedist_criterion",
    "TraceNotOne",
    "validate_density",
    "Variant",
    "x_basis",
    "y_basis",
]
