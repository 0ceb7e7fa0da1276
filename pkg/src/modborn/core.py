"""Shared types and measurement conventions.

Conventions used everywhere in the package:

* Computational basis ``{|up>, |down>}`` is indexed ``0, 1``.
* Alice, ``x = 0``: axis ``+z``, outcome 0 is ``|up>``.
* Alice, ``x = 1``: axis ``theta``; eigenstates ``|theta>`` (outcome 0) and
  ``|theta_perp>`` (outcome 1) with
  ``|up> = cos(t/2)|theta> + sin(t/2)|theta_perp>`` and
  ``|down> = -sin(t/2)|theta> + cos(t/2)|theta_perp>``.
* Bob, ``y = 0``: axis ``-z``, outcome 0 is ``|down>``.
* Bob, ``y = 1``: axis ``theta_tilde`` with the same relation as Alice's.

Eigenstate phases follow the relation above literally. Probabilities do not
depend on that choice, intermediate amplitudes do.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

TWO_PI = 2.0 * math.pi
NORMALIZATION_TOL = 1e-9


class DegenerateAmplitudes(ValueError):
    """Both amplitudes handed to a probability rule vanish."""


class OutOfRange(ValueError):
    """A requested target lies outside the attainable range."""


def reduce_angle(angle: float) -> float:
    """Reduce an angle to ``[0, 2*pi)``."""
    if not math.isfinite(angle):
        raise ValueError(f"angle must be finite, got {angle!r}")
    r = math.fmod(angle, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    # fmod of a tiny negative number plus 2*pi rounds up to 2*pi
    if r >= TWO_PI:
        r = 0.0
    return r


def basis_change(theta: float) -> np.ndarray:
    """Coefficients of ``|up>, |down>`` in the ``|theta>, |theta_perp>`` basis.

    Row ``i`` holds the expansion of computational state ``i``::

        |up>   =  M[0, 0] |theta> + M[0, 1] |theta_perp>
        |down> =  M[1, 0] |theta> + M[1, 1] |theta_perp>

    The columns are therefore the eigenstates ``|theta>`` and ``|theta_perp>``
    written in the computational basis.
    """
    if not math.isfinite(theta):
        raise ValueError(f"theta must be finite, got {theta!r}")
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    return np.array([[c, s], [-s, c]])


def spin_eigenbasis(phi: float) -> np.ndarray:
    """Eigenbasis of ``cos(phi) sigma_z + sin(phi) sigma_x``.

    Column 0 is the +1 eigenvector, column 1 the -1 eigenvector. Note that
    ``basis_change(theta)`` equals ``spin_eigenbasis(-theta)``.
    """
    c = math.cos(phi / 2.0)
    s = math.sin(phi / 2.0)
    return np.array([[c, -s], [s, c]])


# Columns: outcome-0 and outcome-1 eigenvectors in the computational basis.
UP_DOWN = np.eye(2)
DOWN_UP = np.array([[0.0, 1.0], [1.0, 0.0]])


@dataclass(frozen=True)
class TwoQubitState:
    """``alpha |up, down> + beta |down, up>``, normalized on construction."""

    alpha: complex
    beta: complex

    def __post_init__(self) -> None:
        a = complex(self.alpha)
        b = complex(self.beta)
        for v in (a, b):
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise ValueError("amplitudes must be finite")
        norm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        if norm == 0.0:
            raise ValueError("state has zero norm")
        object.__setattr__(self, "alpha", a / norm)
        object.__setattr__(self, "beta", b / norm)

    @classmethod
    def bell(cls) -> TwoQubitState:
        return cls(1.0, 1.0)

    @classmethod
    def from_weight(cls, alpha2: float, phase: float = 0.0) -> TwoQubitState:
        """State with ``|alpha|^2 = alpha2`` and relative phase ``phase`` on beta."""
        if not 0.0 <= alpha2 <= 1.0:
            raise ValueError(f"alpha2 must lie in [0, 1], got {alpha2!r}")
        beta = math.sqrt(1.0 - alpha2) * complex(math.cos(phase), math.sin(phase))
        return cls(math.sqrt(alpha2), beta)

    def vector(self) -> np.ndarray:
        """Amplitudes on ``|A B>`` with index ``2*A + B``."""
        return np.array([0.0, self.alpha, self.beta, 0.0], dtype=complex)

    def matrix(self) -> np.ndarray:
        """Amplitudes as a 2x2 array ``psi[A, B]``."""
        return self.vector().reshape(2, 2)


@dataclass(frozen=True)
class MeasurementConfig:
    """Alice's ``x=1`` angle and Bob's ``y=1`` angle, both reduced to ``[0, 2pi)``."""

    theta: float
    theta_tilde: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", reduce_angle(float(self.theta)))
        object.__setattr__(self, "theta_tilde", reduce_angle(float(self.theta_tilde)))

    def alice_basis(self, x: int) -> np.ndarray:
        return UP_DOWN if x == 0 else basis_change(self.theta)

    def bob_basis(self, y: int) -> np.ndarray:
        return DOWN_UP if y == 0 else basis_change(self.theta_tilde)


def settings() -> Iterator[tuple[int, int]]:
    """The four input pairs ``(x, y)`` in lexicographic order."""
    for x in (0, 1):
        for y in (0, 1):
            yield x, y


@dataclass(frozen=True, eq=False)
class BehaviorBox:
    """Conditional distribution ``P(a, b | x, y)`` of a two-input two-output box.

    ``table`` is stored with axes ``(x, y, a, b)``; use :meth:`prob` to read
    entries in the ``P(a, b | x, y)`` order.
    """

    table: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        t = np.array(self.table, dtype=float)
        if t.shape != (2, 2, 2, 2):
            raise ValueError(f"expected shape (2, 2, 2, 2), got {t.shape}")
        if not np.all(np.isfinite(t)):
            raise ValueError("box entries must be finite")
        if t.min() < -NORMALIZATION_TOL or t.max() > 1.0 + NORMALIZATION_TOL:
            raise ValueError("box entries must lie in [0, 1]")
        sums = t.sum(axis=(2, 3))
        worst = float(np.max(np.abs(sums - 1.0)))
        if worst > NORMALIZATION_TOL:
            raise ValueError(f"per-setting sums deviate from 1 by {worst:.3e}")
        t.flags.writeable = False
        object.__setattr__(self, "table", t)

    def prob(self, a: int, b: int, x: int, y: int) -> float:
        return float(self.table[x, y, a, b])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BehaviorBox):
            return NotImplemented
        return bool(np.array_equal(self.table, other.table))

    __hash__ = None  # type: ignore[assignment]

    def alice_marginal(self) -> np.ndarray:
        """``sum_b P(a, b | x, y)`` with axes ``(x, y, a)``."""
        return self.table.sum(axis=3)

    def bob_marginal(self) -> np.ndarray:
        """``sum_a P(a, b | x, y)`` with axes ``(x, y, b)``."""
        return self.table.sum(axis=2)

    def max_deviation(self, other: BehaviorBox) -> float:
        return float(np.max(np.abs(self.table - other.table)))

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        """``{"p": rows}``: row ``2x + y`` holds ``P(a, b|x, y)`` at column ``2a + b``."""
        return {"p": self.table.reshape(4, 4).tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> BehaviorBox:
        return cls(np.asarray(data["p"], dtype=float).reshape(2, 2, 2, 2))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> BehaviorBox:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x", "y", "a", "b", "p"])
        for x, y in settings():
            for a in (0, 1):
                for b in (0, 1):
                    writer.writerow([x, y, a, b, repr(float(self.table[x, y, a, b]))])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> BehaviorBox:
        reader = csv.DictReader(io.StringIO(text))
        if reader.fieldnames != ["x", "y", "a", "b", "p"]:
            raise ValueError(f"unexpected CSV header {reader.fieldnames}")
        t = np.full((2, 2, 2, 2), np.nan)
        for row in reader:
            t[int(row["x"]), int(row["y"]), int(row["a"]), int(row["b"])] = float(row["p"])
        if np.isnan(t).any():
            raise ValueError("CSV does not cover all 16 cells")
        return cls(t)


@dataclass(frozen=True)
class ProbabilityRule:
    """Power-law outcome rule ``|a0|^n / (|a0|^n + |a1|^n)``.

    ``power = 2`` is the Born rule; ``power = math.inf`` is the exact
    winner-takes-all limit.
    """

    power: float

    def __post_init__(self) -> None:
        p = float(self.power)
        if math.isnan(p) or p < 0.0:
            raise ValueError(f"power must be >= 0, got {self.power!r}")
        object.__setattr__(self, "power", p)

    @property
    def is_limit(self) -> bool:
        return math.isinf(self.power)

    @property
    def is_born(self) -> bool:
        return self.power == 2.0

    @classmethod
    def born(cls) -> ProbabilityRule:
        return cls(2.0)

    @classmethod
    def limit(cls) -> ProbabilityRule:
        return cls(math.inf)

    @classmethod
    def parse(cls, token: str | float) -> ProbabilityRule:
        """Accept a number or the tokens ``inf`` / ``infinity``."""
        if isinstance(token, str) and token.strip().lower() in ("inf", "infinity", "+inf"):
            return cls.limit()
        return cls(float(token))
