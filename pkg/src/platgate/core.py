"""Theory parameters and quantum integers.

Everything downstream is a function of the pair (k, N): the root of unity
q = exp(2*pi*i/(k+N)) and A = q^N.  Quantum integers [n] = sin(n*theta)/sin(theta)
(theta = 2*pi/(k+N)) appear in every matrix entry, and several of them sit in
denominators, so construction refuses parameter pairs where any of [2]..[6]
or A - 1/A vanishes.

Quantum integers are evaluated as a ratio of real sines rather than by complex
division: near a root of unity the complex form (q^n - q^-n)/(q - q^-1) picks
up a spurious imaginary part while the sine ratio stays exactly real.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

#: below this magnitude a denominator counts as vanished
DEGENERACY_TOL = 1e-9


class DegenerateParamsError(ValueError):
    """A denominator of the operator set vanishes at this (k, N)."""


class NegativeRadicandError(DegenerateParamsError):
    """A quantum integer required under a square root is negative at this (k, N)."""


class BranchInconsistencyError(DegenerateParamsError):
    """The principal square-root branch breaks an operator identity at this (k, N)."""


@dataclass(frozen=True)
class TheoryParams:
    """Immutable parameter bundle; safe to share across workers."""

    k: int
    N: int
    theta: float     # 2*pi/(k+N)
    q: complex       # exp(i*theta)
    A: complex       # q^N


def theory_params(k: int, N: int = 2, tol: float = DEGENERACY_TOL) -> TheoryParams:
    """Build parameters for level k and rank N, gating out degenerate pairs.

    Raises ValueError for k < 1 or N < 2 and DegenerateParamsError when any
    of [2]..[6] or A - 1/A falls below ``tol`` in magnitude.
    """
    if not isinstance(k, int) or not isinstance(N, int):
        raise ValueError(f"k and N must be integers, got k={k!r}, N={N!r}")
    if k < 1:
        raise ValueError(f"level k must be >= 1, got {k}")
    if N < 2:
        raise ValueError(f"rank N must be >= 2, got {N}")

    theta = 2.0 * math.pi / (k + N)
    q = cmath.exp(1j * theta)
    A = cmath.exp(1j * N * theta)

    sin_theta = math.sin(theta)
    for m in range(2, 7):
        if abs(math.sin(m * theta) / sin_theta) <= tol:
            raise DegenerateParamsError(
                f"[{m}]_q vanishes at k={k}, N={N} (k+N={k + N})")
    if abs(A - 1 / A) <= tol:
        raise DegenerateParamsError(f"A - 1/A vanishes at k={k}, N={N}")

    return TheoryParams(k=k, N=N, theta=theta, q=q, A=A)


def qint(n: int, params: TheoryParams) -> float:
    """Quantum integer [n] = sin(n*theta)/sin(theta); [0] = 0, [1] = 1 exactly."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"quantum integer index must be a nonnegative integer, got {n!r}")
    if n == 0:
        return 0.0
    return math.sin(n * params.theta) / math.sin(params.theta)
