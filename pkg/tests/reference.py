"""Independent test oracles. Nothing here imports the production rule code."""

import math

import numpy as np


def power_f0(n, p, q):
    """Literal power rule |p|^n / (|p|^n + |q|^n), with the n = inf limit."""
    mp, mq = abs(p), abs(q)
    if math.isinf(n):
        return 1.0 if mp > mq else 0.0 if mp < mq else 0.5
    if mp == 0 or mq == 0:
        return 1.0 if mq == 0 else 0.0
    if n == 0:
        return 0.5
    return mp**n / (mp**n + mq**n)


def transcribed_box(alpha, beta, theta, theta_tilde, n):
    """Joint distribution written out cell by cell from the four published tables.

    Returns an array with axes (x, y, a, b).
    """
    F0 = lambda p, q: power_f0(n, p, q)  # noqa: E731
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    ct, st = math.cos(theta_tilde / 2), math.sin(theta_tilde / 2)
    a2, b2 = abs(alpha) ** 2, abs(beta) ** 2
    A1 = a2 * c**2 + b2 * s**2
    A2 = a2 * s**2 + b2 * c**2
    C1 = alpha * c * st + beta * s * ct
    C2 = alpha * c * ct - beta * s * st
    D1 = -alpha * s * st + beta * c * ct
    D2 = alpha * s * ct + beta * c * st

    P = np.zeros((2, 2, 2, 2))
    # x=0, y=0
    P[0, 0, 0, 0] = a2
    P[0, 0, 1, 0] = 0.0
    P[0, 0, 0, 1] = 0.0
    P[0, 0, 1, 1] = b2
    # x=1, y=0
    P[1, 0, 0, 0] = A1 * F0(alpha * c, beta * s)
    P[1, 0, 1, 0] = A2 * F0(alpha * s, beta * c)
    P[1, 0, 0, 1] = A1 * F0(beta * s, alpha * c)
    P[1, 0, 1, 1] = A2 * F0(beta * c, alpha * s)
    # x=0, y=1
    P[0, 1, 0, 0] = a2 * F0(st, ct)
    P[0, 1, 1, 0] = b2 * F0(ct, st)
    P[0, 1, 0, 1] = a2 * F0(ct, st)
    P[0, 1, 1, 1] = b2 * F0(st, ct)
    # x=1, y=1
    P[1, 1, 0, 0] = A1 * F0(C1, C2)
    P[1, 1, 1, 0] = A2 * F0(D1, D2)
    P[1, 1, 0, 1] = A1 * F0(C2, C1)
    P[1, 1, 1, 1] = A2 * F0(D2, D1)
    return P


def marginal_gap_residual(alpha, beta, theta, n):
    """|LHS - RHS| of Bob's b=0, y=0 marginal equation, as scalar arithmetic."""
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    a2, b2 = abs(alpha) ** 2, abs(beta) ** 2
    lhs = a2
    rhs = (a2 * c**2 + b2 * s**2) * power_f0(n, alpha * c, beta * s) + (
        a2 * s**2 + b2 * c**2
    ) * power_f0(n, alpha * s, beta * c)
    return abs(lhs - rhs)


def reversed_born_box(psi_matrix, alice_bases, bob_bases):
    """Sequential Born rule with Bob measuring first, then Alice."""
    P = np.zeros((2, 2, 2, 2))
    for x in (0, 1):
        for y in (0, 1):
            for b in (0, 1):
                alice_state = psi_matrix @ bob_bases[y][:, b].conj()
                pb = float(np.sum(np.abs(alice_state) ** 2))
                if pb == 0.0:
                    continue
                alice_state = alice_state / math.sqrt(pb)
                for a in (0, 1):
                    amp = np.vdot(alice_bases[x][:, a], alice_state)
                    P[x, y, a, b] = pb * abs(amp) ** 2
    return P


def chsh_by_enumeration(table):
    """Max over all four minus-sign placements, correlators from raw cells."""
    C = table[:, :, 0, 0] + table[:, :, 1, 1] - table[:, :, 0, 1] - table[:, :, 1, 0]
    best = 0.0
    for mx in (0, 1):
        for my in (0, 1):
            signs = np.ones((2, 2))
            signs[mx, my] = -1
            best = max(best, abs(float((signs * C).sum())))
    return best


def random_state(rng):
    """Haar-random amplitudes on the span of |up,down> and |down,up>."""
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    v /= np.linalg.norm(v)
    return complex(v[0]), complex(v[1])


def step_edges(grid, values, level=3.0):
    """Locate steps by midline crossings; sign of the local derivative gives direction."""
    shifted = np.asarray(values) - level
    out = []
    for i in range(len(grid) - 1):
        if shifted[i] == 0.0 or shifted[i] * shifted[i + 1] < 0:
            # linear interpolation for the crossing point
            f = shifted[i] / (shifted[i] - shifted[i + 1]) if shifted[i] != shifted[i + 1] else 0.0
            x = grid[i] + f * (grid[i + 1] - grid[i])
            slope = np.sign(values[i + 1] - values[i])
            out.append((float(x), int(slope)))
    return out
