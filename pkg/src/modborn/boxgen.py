"""Behavior boxes from sequential measurements on a shared two-qubit state.

Alice measures first and her outcome follows the Born rule. Her measurement
collapses Bob's qubit onto a pure state, which Bob then measures with the
(possibly modified) power-law rule.
"""

from __future__ import annotations

import math

import numpy as np

from .core import (
    UP_DOWN,
    BehaviorBox,
    MeasurementConfig,
    ProbabilityRule,
    TwoQubitState,
    settings,
    spin_eigenbasis,
)
from .rules import eval_f0

# CHSH observables as spin directions in the z-x plane, angle from +z:
#   Q = sigma_z, R = sigma_x, T = (sigma_z - sigma_x)/sqrt2, S = -(sigma_z + sigma_x)/sqrt2
_R_BASIS = spin_eigenbasis(math.pi / 2.0)
_Q_BASIS = UP_DOWN
_T_BASIS = spin_eigenbasis(-math.pi / 4.0)
_S_BASIS = spin_eigenbasis(-3.0 * math.pi / 4.0)
CHSH_ALICE_BASES = (_R_BASIS, _Q_BASIS)
CHSH_BOB_BASES = (_T_BASIS, _S_BASIS)


def sequential_step(
    psi: np.ndarray,
    alice_basis: np.ndarray,
    bob_basis: np.ndarray,
    rule: ProbabilityRule,
) -> tuple[np.ndarray, np.ndarray]:
    """One setting of the sequential procedure.

    ``psi`` is the 2x2 amplitude array ``psi[A, B]``; the bases hold outcome
    eigenvectors as columns. Returns Alice's Born probabilities ``p_a`` and
    Bob's conditional probabilities ``q[a, b] = P(b | a)``.
    """
    # row a: Bob's unnormalized state after Alice projects on column a
    bob_states = alice_basis.conj().T @ psi
    alice_probs = np.sum(np.abs(bob_states) ** 2, axis=1)
    cond = np.zeros((2, 2))
    for a in (0, 1):
        if alice_probs[a] == 0.0:
            cond[a] = 0.5  # unreachable branch; value never contributes
            continue
        collapsed = bob_states[a] / math.sqrt(alice_probs[a])
        c0, c1 = bob_basis.conj().T @ collapsed
        cond[a, 0] = eval_f0(rule, c0, c1)
        cond[a, 1] = eval_f0(rule, c1, c0)
    return alice_probs, cond


def _sequential_box(
    psi: np.ndarray,
    alice_bases: tuple[np.ndarray, np.ndarray],
    bob_bases: tuple[np.ndarray, np.ndarray],
    rule: ProbabilityRule,
) -> BehaviorBox:
    table = np.zeros((2, 2, 2, 2))
    for x, y in settings():
        pa, cond = sequential_step(psi, alice_bases[x], bob_bases[y], rule)
        table[x, y] = pa[:, None] * cond
    return BehaviorBox(table)


def joint_distribution(
    state: TwoQubitState, cfg: MeasurementConfig, rule: ProbabilityRule
) -> BehaviorBox:
    """``P(a, b | x, y)`` for ``state`` measured along the axes in ``cfg``."""
    return _sequential_box(
        state.matrix(),
        (cfg.alice_basis(0), cfg.alice_basis(1)),
        (cfg.bob_basis(0), cfg.bob_basis(1)),
        rule,
    )


def conditional_tables(
    state: TwoQubitState, cfg: MeasurementConfig, rule: ProbabilityRule
) -> tuple[np.ndarray, np.ndarray]:
    """Alice's probabilities ``(x, y, a)`` and Bob's conditionals ``(x, y, a, b)``."""
    psi = state.matrix()
    pa = np.zeros((2, 2, 2))
    cond = np.zeros((2, 2, 2, 2))
    for x, y in settings():
        pa[x, y], cond[x, y] = sequential_step(
            psi, cfg.alice_basis(x), cfg.bob_basis(y), rule
        )
    return pa, cond


def bell_closed_form(
    theta: float, theta_tilde: float, rule: ProbabilityRule
) -> BehaviorBox:
    """Closed-form box for the state with ``alpha = beta = 1/sqrt(2)``."""
    half = theta / 2.0
    half_t = theta_tilde / 2.0
    half_sum = (theta + theta_tilde) / 2.0

    def g(p: float, q: float) -> float:
        return eval_f0(rule, abs(p), abs(q))

    # (P(0,0) = P(1,1), P(0,1) = P(1,0)) per setting
    cells = {
        (0, 0): (0.5, 0.0),
        (1, 0): (
            0.5 * g(math.cos(half), math.sin(half)),
            0.5 * g(math.sin(half), math.cos(half)),
        ),
        (0, 1): (
            0.5 * g(math.sin(half_t), math.cos(half_t)),
            0.5 * g(math.cos(half_t), math.sin(half_t)),
        ),
        (1, 1): (
            0.5 * g(math.sin(half_sum), math.cos(half_sum)),
            0.5 * g(math.cos(half_sum), math.sin(half_sum)),
        ),
    }
    table = np.zeros((2, 2, 2, 2))
    for (x, y), (same, diff) in cells.items():
        table[x, y] = [[same, diff], [diff, same]]
    return BehaviorBox(table)


def pr_box() -> BehaviorBox:
    """``P(a, b | x, y) = 1/2`` when ``a XOR b == x AND y``, else 0."""
    table = np.zeros((2, 2, 2, 2))
    for x, y in settings():
        for a in (0, 1):
            for b in (0, 1):
                if a ^ b == x & y:
                    table[x, y, a, b] = 0.5
    return BehaviorBox(table)


def chsh_observables_box(rule: ProbabilityRule) -> BehaviorBox:
    """Box generated by the CHSH observables on the ``alpha = beta`` Bell state.

    Inputs map ``x=0 -> R``, ``x=1 -> Q``, ``y=0 -> T``, ``y=1 -> S``;
    eigenvalue +1 is output 0 and -1 is output 1.
    """
    return _sequential_box(
        TwoQubitState.bell().matrix(),
        CHSH_ALICE_BASES,
        CHSH_BOB_BASES,
        rule,
    )
