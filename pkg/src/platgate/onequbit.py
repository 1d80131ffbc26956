"""One-qubit operator set on the two fusion channels of a 4-plat.

The qubit basis is the pair of channels (trivial, adjoint) a cup pair can
carry.  Four 2x2 operators act on it: the diagonal crossing operators T and
Tbar and the basis changes S and Sbar.  Products of these evaluate braids;
a brute-force enumerator approximates arbitrary targets, exercising the
universality of the set.

Square roots in the S/Sbar entries are taken on the principal branch; the
constructor then verifies S.S = I, Sbar.Sbar = I and unitarity, and raises
BranchInconsistencyError if the branch choice breaks them.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .core import BranchInconsistencyError, TheoryParams

#: diagonal gate distance within which a target counts as unitary
_UNITARY_TOL = 1e-8
_IDENTITY_TOL = 1e-10

QubitBasis = ("trivial", "adjoint")

#: token vocabulary for operator sequences, in tie-break order
TOKENS = ("S", "Sbar", "T", "Tbar")
_INVOLUTIONS = frozenset({"S", "Sbar"})

#: sequence token with an integer exponent, e.g. ("T", -3)
OpSequence = list[tuple[str, int]]


class MalformedSequenceError(ValueError):
    """An operator sequence uses unknown tokens or illegal exponents."""


@dataclass(frozen=True)
class OneQubitSet:
    """The four 2x2 operators for a given (k, N)."""

    S: np.ndarray
    T: np.ndarray
    Sbar: np.ndarray
    Tbar: np.ndarray
    params: TheoryParams

    def matrix(self, token: str, exponent: int = 1) -> np.ndarray:
        """Matrix of token**exponent (S-type tokens are involutions)."""
        _check_token(token, exponent)
        base = getattr(self, token)
        if token in _INVOLUTIONS:
            return base
        d = np.diagonal(base) ** exponent
        return np.diag(d)


def one_qubit_matrices(params: TheoryParams) -> OneQubitSet:
    """Build S, T, Sbar, Tbar from the theory parameters."""
    q, A = params.q, params.A

    prefactor = cmath.sqrt((q + 1 / q) * (A - 1 / A))
    ra = cmath.sqrt(A / q - q / A)
    rb = cmath.sqrt(A * q - 1 / (A * q))
    S = np.array([[ra, rb], [rb, -ra]], dtype=complex) / prefactor

    T = np.array([[q / A, 0], [0, -1 / (q * A)]], dtype=complex)

    diag = (q - 1 / q) / (A - 1 / A)
    off = cmath.sqrt((A * q - 1 / (A * q)) * (A / q - q / A)) / (A - 1 / A)
    Sbar = np.array([[diag, off], [off, -diag]], dtype=complex)

    Tbar = np.array([[1, 0], [0, -A]], dtype=complex)

    eye = np.eye(2)
    for name, M in (("S", S), ("Sbar", Sbar)):
        if np.linalg.norm(M @ M - eye) > _IDENTITY_TOL:
            raise BranchInconsistencyError(
                f"{name}.{name} != I at k={params.k}, N={params.N}: "
                "principal square-root branch is inconsistent here")
        if np.linalg.norm(M @ M.conj().T - eye) > _IDENTITY_TOL:
            raise BranchInconsistencyError(
                f"{name} is not unitary at k={params.k}, N={params.N}: "
                "principal square-root branch is inconsistent here")

    return OneQubitSet(S=S, T=T, Sbar=Sbar, Tbar=Tbar, params=params)


def _check_token(token: str, exponent: int) -> None:
    if token not in TOKENS:
        raise MalformedSequenceError(f"unknown token {token!r}")
    if not isinstance(exponent, int) or exponent == 0:
        raise MalformedSequenceError(f"exponent must be a nonzero integer, got {exponent!r}")
    if token in _INVOLUTIONS and abs(exponent) != 1:
        raise MalformedSequenceError(
            f"{token} is an involution; exponent must be +-1, got {exponent}")


def evaluate_sequence(seq: OpSequence, ops: OneQubitSet) -> tuple[np.ndarray, complex]:
    """Evaluate a token sequence into its operator and amplitude.

    The first token acts first, so each new factor multiplies on the left.
    Returns (B, B[0,0]); the empty sequence gives the identity.
    """
    B = np.eye(2, dtype=complex)
    for token, exponent in seq:
        B = ops.matrix(token, exponent) @ B
    return B, complex(B[0, 0])


def gate_distance(U: np.ndarray, V: np.ndarray) -> float:
    """Frobenius distance between U and V minimized over a global phase.

    The minimizing phase is arg(tr(U^dag V)); applying it and taking the
    norm of the difference directly avoids the catastrophic cancellation of
    the norm-expansion formula when U and V agree up to phase.
    """
    t = complex(np.trace(U.conj().T @ V))
    phase = t.conjugate() / abs(t) if abs(t) > 0 else 1.0
    return float(np.linalg.norm(U - phase * V))


@dataclass(frozen=True)
class GateApproximation:
    sequence: OpSequence
    distance: float
    matrix: np.ndarray


# elementary letters for enumeration: (token, exponent step), tie-break order
_LETTERS = (("S", 1), ("Sbar", 1), ("T", 1), ("T", -1), ("Tbar", 1), ("Tbar", -1))
_LETTER_INVERSE = (0, 1, 3, 2, 5, 4)
#: subtrees deeper than this are expanded level-by-level as numpy batches
_VECTOR_DEPTH = 7


def approximate_gate(target: np.ndarray, ops: OneQubitSet, max_len: int) -> GateApproximation:
    """Brute-force best word of at most max_len letters approximating target.

    Letters are S, Sbar, T, T^-1, Tbar, Tbar^-1; words are free-reduced during
    enumeration (no letter followed by its inverse, S-type letters never
    repeated).  Ties in distance break by shorter length, then lexicographic
    letter order, so the result is deterministic and independent of any
    partitioning of the search.
    """
    target = np.asarray(target, dtype=complex)
    if target.shape != (2, 2):
        raise ValueError(f"target must be 2x2, got shape {target.shape}")
    if np.linalg.norm(target @ target.conj().T - np.eye(2)) > _UNITARY_TOL:
        raise ValueError("target is not unitary within 1e-8")
    if not 0 <= max_len <= 14:
        raise ValueError(f"max_len must be in [0, 14], got {max_len}")

    letters = np.stack([ops.matrix(t, e) for t, e in _LETTERS])
    tconj = target.conj()

    def distances(prods: np.ndarray) -> np.ndarray:
        traces = np.einsum("ij,nij->n", tconj, prods)
        moduli = np.abs(traces)
        phases = np.where(moduli > 0, traces / np.where(moduli > 0, moduli, 1.0), 1.0)
        diffs = target[None, :, :] - phases[:, None, None] * prods
        return np.sqrt(np.einsum("nij,nij->n", diffs, diffs.conj()).real)

    # best = (distance, length, letter tuple, matrix)
    empty = np.eye(2, dtype=complex)
    best = (float(gate_distance(target, empty)), 0, (), empty)

    def consider(dist: float, word: tuple[int, ...], matrix: np.ndarray) -> None:
        nonlocal best
        cand = (dist, len(word), word)
        if cand < best[:3]:
            best = (dist, len(word), word, matrix)

    def expand_vectorized(prefix: tuple[int, ...], prod: np.ndarray, last: int, depth: int) -> None:
        prods = prod[None, :, :]
        lasts = np.array([last])
        words = np.zeros((1, 0), dtype=np.int8)
        for _ in range(depth):
            keep_prods, keep_words, keep_lasts = [], [], []
            for idx in range(6):
                ok = lasts != _LETTER_INVERSE[idx]
                if idx < 2:
                    ok &= lasts != idx  # S-type letters square to the identity
                if not ok.any():
                    continue
                keep_prods.append(letters[idx] @ prods[ok])
                keep_lasts.append(np.full(int(ok.sum()), idx, dtype=np.int64))
                keep_words.append(np.concatenate(
                    [words[ok], np.full((int(ok.sum()), 1), idx, dtype=np.int8)], axis=1))
            if not keep_prods:
                return
            prods = np.concatenate(keep_prods)
            lasts = np.concatenate(keep_lasts)
            words = np.concatenate(keep_words)
            dists = distances(prods)
            i_min = int(np.argmin(dists))
            d_min = float(dists[i_min])
            ties = np.flatnonzero(dists == d_min)
            row = min(ties, key=lambda r: tuple(words[r]))
            consider(d_min, prefix + tuple(int(x) for x in words[row]), prods[row])

    def walk(prefix: tuple[int, ...], prod: np.ndarray, last: int, remaining: int) -> None:
        if remaining <= _VECTOR_DEPTH:
            expand_vectorized(prefix, prod, last, remaining)
            return
        for idx in range(6):
            if _LETTER_INVERSE[idx] == last or (idx < 2 and idx == last):
                continue
            child = letters[idx] @ prod
            word = prefix + (idx,)
            consider(float(gate_distance(target, child)), word, child)
            walk(word, child, idx, remaining - 1)

    walk((), empty, -1, max_len)

    return GateApproximation(sequence=_merge_letters(best[2]),
                             distance=best[0], matrix=best[3])


def _merge_letters(word: tuple[int, ...]) -> OpSequence:
    """Collapse letter runs into (token, exponent) items."""
    seq: OpSequence = []
    for idx in word:
        token, step = _LETTERS[idx]
        if seq and seq[-1][0] == token and token not in _INVOLUTIONS:
            seq[-1] = (token, seq[-1][1] + step)
        else:
            seq.append((token, step))
    return [item for item in seq if item[1] != 0]
