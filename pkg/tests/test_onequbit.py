from __future__ import annotations

import cmath
import math
import random

import numpy as np
import pytest

from platgate import (
    MalformedSequenceError,
    approximate_gate,
    evaluate_sequence,
    gate_distance,
    one_qubit_matrices,
    theory_params,
)


def test_tbar_is_printed_diagonal(ops26, params26):
    assert ops26.Tbar[0, 0] == 1
    assert ops26.Tbar[1, 1] == -params26.A
    assert ops26.Tbar[0, 1] == 0 and ops26.Tbar[1, 0] == 0


def test_t_is_printed_diagonal(ops26, params26):
    q, A = params26.q, params26.A
    assert ops26.T[0, 0] == q / A
    assert ops26.T[1, 1] == -1 / (q * A)


def test_s_is_involution_and_unitary(ops26):
    eye = np.eye(2)
    assert np.linalg.norm(ops26.S @ ops26.S - eye) < 1e-10
    assert np.linalg.norm(ops26.S @ ops26.S.conj().T - eye) < 1e-10


def test_sbar_involution_real_symmetric(ops26):
    eye = np.eye(2)
    assert np.linalg.norm(ops26.Sbar @ ops26.Sbar - eye) < 1e-10
    assert np.abs(ops26.Sbar.imag).max() < 1e-12
    assert ops26.Sbar[0, 1] == ops26.Sbar[1, 0]


@pytest.mark.parametrize("k", [5, 7, 9, 12, 26, 42, 100])
def test_involutions_across_k(k):
    ops = one_qubit_matrices(theory_params(k, 2))
    eye = np.eye(2)
    for M in (ops.S, ops.Sbar):
        assert np.linalg.norm(M @ M - eye) < 1e-10
        assert np.linalg.norm(M @ M.conj().T - eye) < 1e-10


def test_evaluate_empty_sequence(ops26):
    B, amp = evaluate_sequence([], ops26)
    assert np.array_equal(B, np.eye(2))
    assert amp == 1


def test_evaluate_inverse_pair(ops26):
    B, amp = evaluate_sequence([("T", 1), ("T", -1)], ops26)
    assert np.linalg.norm(B - np.eye(2)) < 1e-14
    assert amp == pytest.approx(1, abs=1e-14)


def test_evaluate_sts_against_naive_multiplication(ops26):
    # independent step-by-step multiplication with plain python complexes
    B, amp = evaluate_sequence([("S", 1), ("T", 2), ("S", 1)], ops26)

    def mul(X, Y):
        return [[sum(X[r][t] * Y[t][s] for t in range(2)) for s in range(2)]
                for r in range(2)]

    S = [[complex(ops26.S[r, s]) for s in range(2)] for r in range(2)]
    T = [[complex(ops26.T[r, s]) for s in range(2)] for r in range(2)]
    expected = mul(S, mul(T, mul(T, S)))
    for r in range(2):
        for s in range(2):
            assert B[r, s] == pytest.approx(expected[r][s], abs=1e-12)
    assert amp == pytest.approx(expected[0][0], abs=1e-12)


def test_malformed_sequences(ops26):
    with pytest.raises(MalformedSequenceError):
        evaluate_sequence([("X", 1)], ops26)
    with pytest.raises(MalformedSequenceError):
        evaluate_sequence([("T", 0)], ops26)
    with pytest.raises(MalformedSequenceError):
        evaluate_sequence([("S", 2)], ops26)


def test_long_words_stay_unitary():
    rng = random.Random(7)
    eye = np.eye(2)
    for k in (9, 26, 42):
        ops = one_qubit_matrices(theory_params(k, 2))
        for _ in range(40):
            seq = []
            for _ in range(20):
                token = rng.choice(("S", "Sbar", "T", "Tbar"))
                exp = rng.choice((1, -1)) if token in ("S", "Sbar") else rng.choice((-3, -1, 1, 2))
                seq.append((token, exp))
            B, _ = evaluate_sequence(seq, ops)
            assert np.linalg.norm(B @ B.conj().T - eye) < 1e-10


def test_distance_phase_invariance(ops26):
    U = ops26.S @ ops26.T
    for beta in (0.0, 0.3, 1.2, -2.5, math.pi):
        assert gate_distance(U, cmath.exp(1j * beta) * U) < 1e-12


def test_approximate_t_itself(ops26):
    res = approximate_gate(ops26.T, ops26, max_len=3)
    assert res.distance < 1e-12
    assert res.sequence == [("T", 1)]


def test_approximate_identity(ops26):
    res = approximate_gate(np.eye(2), ops26, max_len=3)
    assert res.distance == 0.0
    assert res.sequence == []


def test_approximate_rejects_nonunitary(ops26):
    with pytest.raises(ValueError):
        approximate_gate(np.array([[1.0, 0.0], [0.0, 2.0]]), ops26, max_len=2)
    with pytest.raises(ValueError):
        approximate_gate(np.eye(2), ops26, max_len=15)


def test_exchange_target_monotone_at_k42():
    ops = one_qubit_matrices(theory_params(42, 2))
    target = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    dists = [approximate_gate(target, ops, max_len=L).distance
             for L in range(2, 11)]
    for shorter, longer in zip(dists, dists[1:]):
        assert longer <= shorter + 1e-12
    assert dists[-1] < dists[0]  # length 10 genuinely beats length 2 here


def test_best_sequence_reevaluates_to_reported_distance(ops26):
    rng = np.random.default_rng(3)
    thetas = rng.uniform(0, 2 * np.pi, size=3)
    target = np.array([[np.cos(thetas[0]), np.sin(thetas[0]) * np.exp(1j * thetas[1])],
                       [-np.sin(thetas[0]) * np.exp(-1j * thetas[1]),
                        np.cos(thetas[0])]]) * np.exp(1j * thetas[2])
    res = approximate_gate(target, ops26, max_len=5)
    B, _ = evaluate_sequence(res.sequence, ops26)
    assert gate_distance(target, B) == pytest.approx(res.distance, abs=1e-12)
