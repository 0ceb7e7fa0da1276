"""No-signaling, CHSH and isotropy analysis of behavior boxes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from .boxgen import bell_closed_form, chsh_observables_box, joint_distribution, pr_box
from .core import (
    TWO_PI,
    BehaviorBox,
    MeasurementConfig,
    OutOfRange,
    ProbabilityRule,
    TwoQubitState,
    reduce_angle,
    settings,
)
from .rules import eval_f0

DEFAULT_NS_TOL = 1e-9

# cos(pi/8) and sin(pi/8) up to the common factor 1/2
_SQRT_PLUS = math.sqrt(2.0 + math.sqrt(2.0))
_SQRT_MINUS = math.sqrt(2.0 - math.sqrt(2.0))
TRIVIAL_CC_THRESHOLD = 4.0 * math.sqrt(2.0 / 3.0)
TSIRELSON = 2.0 * math.sqrt(2.0)


@dataclass(frozen=True)
class SignalingResidual:
    party: Literal["alice", "bob"]  # whose marginal is compared
    output: int
    setting: int  # that party's own input, held fixed
    residual: float


@dataclass(frozen=True)
class NoSignalingReport:
    max_violation_alice_to_bob: float
    max_violation_bob_to_alice: float
    residuals: tuple[SignalingResidual, ...]
    tol: float

    @property
    def max_violation(self) -> float:
        return max(self.max_violation_alice_to_bob, self.max_violation_bob_to_alice)

    @property
    def passed(self) -> bool:
        return self.max_violation <= self.tol


def no_signaling_report(box: BehaviorBox, tol: float = DEFAULT_NS_TOL) -> NoSignalingReport:
    """Check all eight marginal-independence constraints.

    Alice to Bob: ``sum_a P(a,b|0,y) == sum_a P(a,b|1,y)`` for each ``b, y``.
    Bob to Alice: ``sum_b P(a,b|x,0) == sum_b P(a,b|x,1)`` for each ``a, x``.
    """
    bob = box.bob_marginal()  # (x, y, b)
    alice = box.alice_marginal()  # (x, y, a)
    residuals = []
    for y in (0, 1):
        for b in (0, 1):
            r = abs(float(bob[0, y, b] - bob[1, y, b]))
            residuals.append(SignalingResidual("bob", b, y, r))
    for x in (0, 1):
        for a in (0, 1):
            r = abs(float(alice[x, 0, a] - alice[x, 1, a]))
            residuals.append(SignalingResidual("alice", a, x, r))
    a2b = max(r.residual for r in residuals if r.party == "bob")
    b2a = max(r.residual for r in residuals if r.party == "alice")
    return NoSignalingReport(a2b, b2a, tuple(residuals), tol)


def nosignal_residual_eq15(
    state: TwoQubitState, theta: float, rule: ProbabilityRule
) -> float:
    """Bob's ``b=0, y=0`` marginal gap between Alice's two settings.

    Computed from the sequentially generated box, so it vanishes exactly
    when that single no-signaling constraint holds.
    """
    # Bob's y=1 axis does not enter the y=0 constraint
    box = joint_distribution(state, MeasurementConfig(theta, 0.0), rule)
    bob = box.bob_marginal()
    return abs(float(bob[0, 0, 0] - bob[1, 0, 0]))


def correlator(box: BehaviorBox, x: int, y: int) -> float:
    """``P(0,0|x,y) + P(1,1|x,y) - P(0,1|x,y) - P(1,0|x,y)``."""
    t = box.table[x, y]
    return float(t[0, 0] + t[1, 1] - t[0, 1] - t[1, 0])


def correlators(box: BehaviorBox) -> np.ndarray:
    return np.array([[correlator(box, x, y) for y in (0, 1)] for x in (0, 1)])


@dataclass(frozen=True)
class ChshReport:
    value: float
    correlators: np.ndarray  # C[x, y]
    minus_cell: tuple[int, int]  # (x, y) carrying the minus sign

    def placement(self, minus_cell: tuple[int, int]) -> float:
        """``|sum C - 2 C[minus_cell]|`` for a given sign placement."""
        return abs(float(self.correlators.sum() - 2.0 * self.correlators[minus_cell]))


def chsh_value(box: BehaviorBox) -> ChshReport:
    """Maximize the CHSH combination over the four minus-sign placements.

    Ties go to the lexicographically smallest minus cell.
    """
    c = correlators(box)
    total = float(c.sum())
    best_val = -1.0
    best_cell = (0, 0)
    for cell in settings():
        v = abs(total - 2.0 * float(c[cell]))
        if v > best_val:
            best_val, best_cell = v, cell
    return ChshReport(best_val, c, best_cell)


def nonisotropic_chsh_closed_form(
    theta: float, theta_tilde: float, rule: ProbabilityRule
) -> float:
    """CHSH combination of the Bell-state box with the minus sign on ``(1, 1)``."""

    def g0(p: float, q: float) -> float:
        return eval_f0(rule, p, q)

    def g1(p: float, q: float) -> float:
        return eval_f0(rule, q, p)

    ht = theta_tilde / 2.0
    h = theta / 2.0
    hs = (theta + theta_tilde) / 2.0
    st, ct = math.sin(ht), math.cos(ht)
    s, c = math.sin(h), math.cos(h)
    ss, cs = math.sin(hs), math.cos(hs)
    return (
        1.0
        + g0(st, ct) - g1(st, ct)
        + g1(s, c) - g0(s, c)
        + g1(ss, cs) - g0(ss, cs)
    )


def isotropy_residual(box: BehaviorBox) -> float:
    """Largest deviation from ``C00 == C01 == C10 == -C11`` with unbiased marginals."""
    c = correlators(box)
    target = c[0, 0]
    marg = np.concatenate([box.alice_marginal().ravel(), box.bob_marginal().ravel()])
    return float(
        max(
            abs(c[0, 1] - target),
            abs(c[1, 0] - target),
            abs(c[1, 1] + target),
            np.max(np.abs(marg - 0.5)),
        )
    )


def isotropy_check(box: BehaviorBox, tol: float = 1e-12) -> bool:
    return isotropy_residual(box) <= tol


def pr_distance(box: BehaviorBox) -> float:
    """Mean per-setting total-variation distance to the PR box."""
    diff = np.abs(box.table - pr_box().table).sum(axis=(2, 3))
    return float(0.5 * diff.mean())


def _in_open(x: float, lo: float, hi: float) -> bool:
    return lo < x < hi


def pr_angle_region(theta: float, theta_tilde: float) -> bool:
    """True when the Bell-state box tends to the PR box as the power grows.

    Requires ``|cos(t/2)| > |sin(t/2)|``, ``|sin(tt/2)| > |cos(tt/2)|`` and
    ``|cos((t+tt)/2)| > |sin((t+tt)/2)|``, evaluated on angles reduced mod
    ``2 pi`` so that boundary points like ``pi/2`` are excluded exactly.
    """
    q = math.pi / 2.0

    def cos_dominant(angle: float) -> bool:
        r = reduce_angle(angle)
        return r < q or r > 3.0 * q

    t = reduce_angle(theta)
    tt = reduce_angle(theta_tilde)
    return cos_dominant(t) and _in_open(tt, q, 3.0 * q) and cos_dominant(t + tt)


def chsh_observables_closed_form(rule: ProbabilityRule) -> float:
    """CHSH value of the CHSH-observables box as a function of the power."""
    if rule.is_limit:
        return 4.0
    n = rule.power
    # divide through by sqrt(2 + sqrt2)^n to stay finite for large n
    r = (_SQRT_MINUS / _SQRT_PLUS) ** n
    return 4.0 * (1.0 - r) / (1.0 + r)


def chsh_observables_deficit(rule: ProbabilityRule) -> float:
    """``4 - chsh_observables_closed_form(rule)`` without cancellation.

    The closed form rounds to exactly 4.0 in doubles once ``n`` exceeds
    about 43; the deficit stays resolvable far beyond that.
    """
    if rule.is_limit:
        return 0.0
    r = (_SQRT_MINUS / _SQRT_PLUS) ** rule.power
    return 8.0 * r / (1.0 + r)


def solve_power_for_chsh(
    target: float,
    tol: float = 1e-10,
    lower: float = 1e-6,
    upper: float = 64.0,
    max_iter: int = 400,
) -> float:
    """Power ``n`` at which the CHSH-observables box reaches ``target``.

    Bisection on the strictly increasing closed form.
    """
    if not (0.0 < target < 4.0):
        raise OutOfRange(f"target must lie in (0, 4), got {target!r}")

    def f(n: float) -> float:
        return chsh_observables_closed_form(ProbabilityRule(n)) - target

    for _ in range(64):
        if f(lower) < 0.0:
            break
        lower /= 2.0
    else:
        raise OutOfRange(f"target {target!r} below the smallest resolvable value")
    for _ in range(64):
        if f(upper) > 0.0:
            break
        upper *= 2.0
    else:
        raise OutOfRange(f"target {target!r} too close to the supremum 4")

    lo, hi = lower, upper
    mid = 0.5 * (lo + hi)
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if abs(fm) < tol:
            return mid
        if fm < 0.0:
            lo = mid
        else:
            hi = mid
        if not lo < 0.5 * (lo + hi) < hi:
            break
    return mid


def chsh_vs_power(
    theta: float,
    theta_tilde: float,
    powers: Iterable[ProbabilityRule],
    mode: Literal["bell", "chsh-observables"] = "bell",
) -> list[tuple[float, float]]:
    """``(n, chsh)`` rows for a grid of powers."""
    rows = []
    for rule in powers:
        if mode == "bell":
            box = bell_closed_form(theta, theta_tilde, rule)
        elif mode == "chsh-observables":
            box = chsh_observables_box(rule)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        rows.append((rule.power, chsh_value(box).value))
    return rows


def chsh_vs_angle(
    theta: float, theta_tildes: Iterable[float], rule: ProbabilityRule
) -> list[tuple[float, float]]:
    """``(theta_tilde, chsh)`` rows for the Bell-state box at fixed ``theta``."""
    return [
        (tt, chsh_value(bell_closed_form(theta, tt, rule)).value) for tt in theta_tildes
    ]


def angle_grid(count: int, stop: float = TWO_PI) -> np.ndarray:
    """``count`` evenly spaced angles on ``[0, stop)``."""
    return np.linspace(0.0, stop, count, endpoint=False)
