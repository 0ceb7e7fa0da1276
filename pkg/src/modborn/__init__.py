"""Nonlocal boxes from two-qubit states under a power-law measurement rule."""

from .analysis import (
    ChshReport,
    NoSignalingReport,
    chsh_observables_closed_form,
    chsh_value,
    correlator,
    isotropy_check,
    no_signaling_report,
    nonisotropic_chsh_closed_form,
    nosignal_residual_eq15,
    pr_angle_region,
    pr_distance,
    solve_power_for_chsh,
)
from .boxgen import bell_closed_form, chsh_observables_box, joint_distribution, pr_box
from .core import (
    BehaviorBox,
    DegenerateAmplitudes,
    MeasurementConfig,
    OutOfRange,
    ProbabilityRule,
    TwoQubitState,
    basis_change,
)
from .oracle import born_oracle, mc_sampler
from .rules import check_axioms, eval_f0

__all__ = [
    "BehaviorBox",
    "ChshReport",
    "DegenerateAmplitudes",
    "MeasurementConfig",
    "NoSignalingReport",
    "OutOfRange",
    "ProbabilityRule",
    "TwoQubitState",
    "basis_change",
    "bell_closed_form",
    "born_oracle",
    "check_axioms",
    "chsh_observables_box",
    "chsh_observables_closed_form",
    "chsh_value",
    "correlator",
    "eval_f0",
    "isotropy_check",
    "joint_distribution",
    "mc_sampler",
    "no_signaling_report",
    "nonisotropic_chsh_closed_form",
    "nosignal_residual_eq15",
    "pr_angle_region",
    "pr_box",
    "pr_distance",
    "solve_power_for_chsh",
]
