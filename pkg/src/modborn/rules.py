"""Evaluation and axiom checking for the power-law outcome rule."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import DegenerateAmplitudes, ProbabilityRule

F0 = Callable[[complex, complex], float]

DEFAULT_SCALES: tuple[complex, ...] = (0.25, 3.0, 1j, -0.7 + 0.2j, 1e-3)


def eval_f0(rule: ProbabilityRule, a0: complex, a1: complex) -> float:
    """Probability of outcome 0 for a qubit with amplitudes ``(a0, a1)``.

    ``F1`` is ``eval_f0(rule, a1, a0)``. The power is applied to the
    smaller-over-larger magnitude ratio so large powers cannot overflow.
    """
    m0 = abs(a0)
    m1 = abs(a1)
    if m0 == 0.0 and m1 == 0.0:
        raise DegenerateAmplitudes("both amplitudes are zero")
    n = rule.power
    if rule.is_limit:
        w0 = m0 * m0
        w1 = m1 * m1
        if w0 > w1:
            return 1.0
        if w0 < w1:
            return 0.0
        return 0.5
    # an exact eigenstate is certain for every power, including the n -> 0 limit
    if m1 == 0.0:
        return 1.0
    if m0 == 0.0:
        return 0.0
    if n == 0.0:
        return 0.5
    if m0 >= m1:
        r = (m1 / m0) ** n
        return 1.0 / (1.0 + r)
    r = (m0 / m1) ** n
    return r / (1.0 + r)


def eval_f1(rule: ProbabilityRule, a0: complex, a1: complex) -> float:
    return eval_f0(rule, a1, a0)


@dataclass(frozen=True)
class AxiomReport:
    normalization: bool
    relabeling: bool
    phase: bool
    scale: bool
    normalization_residual: float
    relabeling_residual: float
    phase_residual: float
    scale_residual: float

    @property
    def passed(self) -> bool:
        return self.normalization and self.relabeling and self.phase and self.scale


def check_axioms(
    rule: ProbabilityRule,
    samples: Iterable[tuple[complex, complex]],
    tol: float = 1e-12,
    f0: F0 | None = None,
    f1: F0 | None = None,
    scales: Sequence[complex] = DEFAULT_SCALES,
) -> AxiomReport:
    """Test the four rule axioms on a set of amplitude pairs.

    ``f0`` / ``f1`` replace the power rule, e.g. to inject a rule known to be
    broken. When only ``f0`` is supplied, ``F1(p, q)`` is taken as ``F0(q, p)``.
    """
    if f0 is None:
        def f0(p: complex, q: complex) -> float:
            return eval_f0(rule, p, q)
    if f1 is None:
        _f0 = f0

        def f1(p: complex, q: complex) -> float:
            return _f0(q, p)

    norm = relabel = phase = scale = 0.0
    for p, q in samples:
        p = complex(p)
        q = complex(q)
        v = f0(p, q)
        norm = max(norm, abs(v + f1(p, q) - 1.0))
        relabel = max(relabel, abs(v - f1(q, p)))
        phase = max(phase, abs(v - f0(complex(abs(p)), complex(abs(q)))))
        for s in scales:
            scale = max(scale, abs(v - f0(s * p, s * q)))
    return AxiomReport(
        normalization=norm <= tol,
        relabeling=relabel <= tol,
        phase=phase <= tol,
        scale=scale <= tol,
        normalization_residual=norm,
        relabeling_residual=relabel,
        phase_residual=phase,
        scale_residual=scale,
    )


def random_amplitude_pairs(rng, count: int) -> list[tuple[complex, complex]]:
    """Non-degenerate complex pairs with uniform phases, for axiom sweeps."""
    mags = rng.uniform(0.01, 1.0, size=(count, 2))
    phases = rng.uniform(0.0, 2.0 * cmath.pi, size=(count, 2))
    return [
        (cmath.rect(m[0], ph[0]), cmath.rect(m[1], ph[1]))
        for m, ph in zip(mags, phases)
    ]
