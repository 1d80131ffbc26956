"""Crossing and mixing matrices for adjoint 2-strand cables.

A crossing of two adjoint cables acts on the three fusion channels
(trivial, adjoint, four-box) of a cable pair.  In the basis that
diagonalizes the adjacent pair, the braiding matrix is

    R = diag(1, -q^2, q^6)

and the three physical crossing types differ only by a unit-modulus framing
factor: antiparallel strands of one component use R itself, parallel strands
use q^-4 R, and strands of two different link components use q^-8 R.

The mixing matrix (entries built from quantum integers [n]) changes between
the bases in which the outer (positions 1, 3) and inner (position 2)
crossings are diagonal.  It is real orthogonal; its inverse is computed
explicitly and checked against the transpose rather than assumed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import DegenerateParamsError, NegativeRadicandError, TheoryParams, qint

_ORTHOGONALITY_TOL = 1e-10

#: fusion channels of an adjoint cable pair, in basis order
CableBasis = ("trivial", "adjoint", "four-box")


class CrossingKind(enum.Enum):
    """How the two cables at a crossing relate in the plat closure."""

    SAME_PARALLEL = "same-parallel"
    SAME_ANTIPARALLEL = "same-antiparallel"
    DIFFERENT = "different"


@dataclass(frozen=True)
class CableSet:
    """Cable crossing data for a given (k, N); immutable and shareable."""

    R: np.ndarray                    # diag(1, -q^2, q^6)
    Smix: np.ndarray                 # real orthogonal mixing matrix
    Sinv: np.ndarray                 # explicit inverse of Smix
    T_same_parallel: np.ndarray      # q^-4 R
    T_same_antiparallel: np.ndarray  # R
    T_different: np.ndarray          # q^-8 R
    params: TheoryParams

    def scalar_for(self, kind: CrossingKind) -> complex:
        """Unit-modulus framing factor attached to a crossing of this kind."""
        q = self.params.q
        if kind is CrossingKind.SAME_ANTIPARALLEL:
            return 1.0 + 0.0j
        if kind is CrossingKind.SAME_PARALLEL:
            return q ** -4
        return q ** -8

    def diagonal_for(self, kind: CrossingKind) -> np.ndarray:
        """Diagonal entries of the crossing matrix for this kind."""
        return self.scalar_for(kind) * np.diagonal(self.R)


def cable_matrices(params: TheoryParams) -> CableSet:
    """Build the 3x3 braiding/mixing matrices for the given parameters.

    Square roots of quantum integers are taken on the positive real branch;
    a negative radicand is reported as NegativeRadicandError rather than
    silently complexified.
    """
    q = params.q
    q2, q3, q4, q5, q6 = (qint(n, params) for n in range(2, 7))

    for name, value in (("[3]", q3), ("[5]", q5), ("[3][5]", q3 * q5)):
        if value < 0:
            raise NegativeRadicandError(
                f"{name} = {value:.6g} < 0 at k={params.k}, N={params.N}; "
                "mixing-matrix square roots leave the real branch here")

    s3, s5, s35 = math.sqrt(q3), math.sqrt(q5), math.sqrt(q3 * q5)
    Smix = np.array([
        [1 / q3,   s3 / q3,               s5 / q3],
        [s3 / q3,  q6 / (q3 * q4),        -q2 * s35 / (q3 * q4)],
        [-s5 / q3, q2 * s35 / (q3 * q4),  -q2 / (q3 * q4)],
    ])
    Sinv = np.linalg.inv(Smix)

    eye = np.eye(3)
    if np.linalg.norm(Smix @ Sinv - eye) > _ORTHOGONALITY_TOL:
        raise DegenerateParamsError(
            f"mixing matrix is numerically singular at k={params.k}, N={params.N}")
    if np.linalg.norm(Sinv - Smix.T) > _ORTHOGONALITY_TOL:
        raise DegenerateParamsError(
            f"mixing matrix fails orthogonality at k={params.k}, N={params.N}")

    R = np.diag([1.0 + 0.0j, -q**2, q**6])
    return CableSet(
        R=R,
        Smix=Smix,
        Sinv=Sinv,
        T_same_parallel=q**-4 * R,
        T_same_antiparallel=R.copy(),
        T_different=q**-8 * R,
        params=params,
    )


def crossing_operator(position: int, kind: CrossingKind, sign: int,
                      cables: CableSet) -> np.ndarray:
    """Operator of a single signed crossing at a plat position.

    Positions 1 and 3 act diagonally in the reference basis; position 2 is
    conjugated by the mixing matrix.  sign=-1 gives the exact inverse.
    """
    if position not in (1, 2, 3):
        raise ValueError(f"position must be 1, 2 or 3, got {position}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    d = cables.diagonal_for(kind) ** sign
    if position == 2:
        return cables.Smix @ np.diag(d) @ cables.Sinv
    return np.diag(d)
