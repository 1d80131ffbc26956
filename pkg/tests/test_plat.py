from __future__ import annotations

import itertools
import math
import random

import numpy as np
import pytest

from naive_eval import naive_components_of, naive_evaluate
from platgate import (
    BraidWord,
    CrossingKind,
    NonIdentityPermutationError,
    assign_crossing_kinds,
    cable_matrices,
    evaluate_braid,
    parse_ascii,
    plat_connectivity,
    render_ascii,
    theory_params,
    two_qubit_gate,
    word_from_json,
    word_from_text,
    word_to_json,
    word_to_text,
)

ANTI = CrossingKind.SAME_ANTIPARALLEL
DIFF = CrossingKind.DIFFERENT


def random_word(rng: random.Random, length: int) -> BraidWord:
    return BraidWord(tuple(rng.choice((1, -1, 2, -2, 3, -3)) for _ in range(length)))


def close_to_identity(word: BraidWord) -> BraidWord:
    """Append generators sorting the permutation back to the identity."""
    slots = [1, 2, 3, 4]
    for g in word:
        i = abs(g)
        slots[i - 1], slots[i] = slots[i], slots[i - 1]
    extra = []
    while slots != [1, 2, 3, 4]:
        for i in range(3):
            if slots[i] > slots[i + 1]:
                slots[i], slots[i + 1] = slots[i + 1], slots[i]
                extra.append(i + 1)
                break
    return BraidWord(word.generators + tuple(extra))


def test_braidword_validation():
    BraidWord(())
    BraidWord((1, -3, 2))
    for bad in ((0,), (4,), (-5,)):
        with pytest.raises(ValueError):
            BraidWord(bad)


def test_connectivity_empty_word():
    d = plat_connectivity(BraidWord(()))
    assert d.perm == (1, 2, 3, 4)
    assert d.components == (frozenset({1, 2}), frozenset({3, 4}))
    assert d.cable_up == (True, False, True, False)


def test_connectivity_single_sigma2():
    d = plat_connectivity(BraidWord((2,)))
    assert d.perm == (1, 3, 2, 4)
    assert d.components == (frozenset({1, 2, 3, 4}),)


def test_connectivity_sigma2_squared():
    d = plat_connectivity(BraidWord((2, 2)))
    assert d.perm == (1, 2, 3, 4)
    assert d.components == (frozenset({1, 2}), frozenset({3, 4}))


def test_connectivity_matches_naive_bfs():
    rng = random.Random(11)
    for _ in range(200):
        word = random_word(rng, rng.randint(0, 12))
        d = plat_connectivity(word)
        assert list(d.components) == naive_components_of(list(word))


def test_kinds_sigma1_antiparallel():
    d = plat_connectivity(BraidWord((1,)))
    assert assign_crossing_kinds(d) == (ANTI,)


def test_kinds_sigma2_squared_different():
    d = plat_connectivity(BraidWord((2, 2)))
    assert assign_crossing_kinds(d) == (DIFF, DIFF)


def test_kinds_empty():
    assert assign_crossing_kinds(plat_connectivity(BraidWord(()))) == ()


def test_kinds_parallel_appears_in_single_component_closures():
    # sigma_2 sigma_1 sigma_1: second sigma_1 crossing has cables 1 and 3
    # (both oriented up) in one component
    word = BraidWord((2, 1, 1))
    kinds = assign_crossing_kinds(plat_connectivity(word))
    assert CrossingKind.SAME_PARALLEL in kinds


def test_evaluate_empty(cables26):
    res = evaluate_braid(BraidWord(()), cables26)
    assert np.array_equal(res.B, np.eye(3))
    assert res.amplitude == 1
    assert res.P == 1.0
    assert res.phi == 0.0
    assert res.leakage == 0.0


def test_evaluate_inverse_pair(cables26):
    res = evaluate_braid(BraidWord((1, -1)), cables26)
    assert np.linalg.norm(res.B - np.eye(3)) < 1e-12
    assert res.P == pytest.approx(1.0, abs=1e-12)


def test_evaluate_sigma1_squared_is_r_squared(cables26):
    res = evaluate_braid(BraidWord((1, 1)), cables26)
    assert np.abs(res.B - cables26.R @ cables26.R).max() < 1e-15
    assert res.amplitude == pytest.approx(1.0, abs=1e-12)
    assert res.P == pytest.approx(1.0, abs=1e-12)
    assert res.phi == pytest.approx(0.0, abs=1e-12)


def test_evaluate_sigma2_squared_amplitude(cables26, params26):
    res = evaluate_braid(BraidWord((2, 2)), cables26)
    r2 = np.diag(np.diagonal(cables26.R) ** 2)
    expected = params26.q**-16 * (cables26.Smix @ r2 @ cables26.Sinv)[0, 0]
    assert res.amplitude == pytest.approx(expected, abs=1e-12)
    assert res.P < 1.0


def test_gate_mode_rejects_open_permutation(cables26):
    with pytest.raises(NonIdentityPermutationError):
        evaluate_braid(BraidWord((2,)), cables26, mode="gate")
    evaluate_braid(BraidWord((2,)), cables26, mode="invariant")


def test_evaluate_rejects_unknown_mode(cables26):
    with pytest.raises(ValueError):
        evaluate_braid(BraidWord(()), cables26, mode="banana")


def test_two_qubit_gate_empty(cables26):
    gate = two_qubit_gate(BraidWord(()), cables26)
    assert gate.entries == (1, 1, 1, 1)
    assert gate.case_iv_leakage == 0.0


def test_two_qubit_gate_sigma1_squared(cables26):
    gate = two_qubit_gate(BraidWord((1, 1)), cables26)
    for entry in gate.entries:
        assert entry == pytest.approx(1.0, abs=1e-12)
    assert gate.case_iv_leakage == pytest.approx(0.0, abs=1e-12)


def test_two_qubit_gate_sigma2_squared(cables26):
    res = evaluate_braid(BraidWord((2, 2)), cables26)
    gate = two_qubit_gate(BraidWord((2, 2)), cables26)
    assert gate.entries[0] == 1
    assert gate.entries[1] == pytest.approx(1.0, abs=1e-12)
    assert gate.entries[2] == pytest.approx(1.0, abs=1e-12)
    assert gate.entries[3] == res.amplitude
    assert gate.case_iv_leakage == pytest.approx(1 - res.P, abs=1e-12)


def test_two_qubit_gate_moduli(cables26):
    rng = random.Random(5)
    for _ in range(50):
        word = close_to_identity(random_word(rng, rng.randint(0, 10)))
        gate = two_qubit_gate(word, cables26)
        assert abs(gate.entries[0]) == 1.0
        assert abs(abs(gate.entries[1]) - 1.0) < 1e-9
        assert abs(abs(gate.entries[2]) - 1.0) < 1e-9
        assert abs(gate.entries[3]) <= 1.0 + 1e-9


def test_reidemeister_ii_all_positions(cables26):
    eye = np.eye(3)
    for i in (1, 2, 3):
        for pair in ((i, -i), (-i, i)):
            res = evaluate_braid(BraidWord(pair), cables26)
            assert np.linalg.norm(res.B - eye) < 1e-12


def test_far_commutation_insertion(cables26):
    rng = random.Random(13)
    for _ in range(60):
        word = random_word(rng, rng.randint(0, 10))
        cut = rng.randint(0, len(word))
        with_13 = BraidWord(word.generators[:cut] + (1, 3) + word.generators[cut:])
        with_31 = BraidWord(word.generators[:cut] + (3, 1) + word.generators[cut:])
        a = evaluate_braid(with_13, cables26, mode="invariant")
        b = evaluate_braid(with_31, cables26, mode="invariant")
        assert np.abs(a.B - b.B).max() < 1e-12


def test_unitarity_random_gate_words(cables26):
    rng = random.Random(17)
    eye = np.eye(3)
    for _ in range(300):
        word = close_to_identity(random_word(rng, rng.randint(0, 24)))
        res = evaluate_braid(word, cables26)
        assert np.linalg.norm(res.B @ res.B.conj().T - eye) < 1e-9
        assert 0.0 <= res.P <= 1.0 + 1e-9


def test_matches_naive_evaluator_exhaustive_length4():
    cables = cable_matrices(theory_params(12, 2))
    letters = (1, -1, 2, -2, 3, -3)
    for combo in itertools.product(letters, repeat=4):
        B = evaluate_braid(BraidWord(combo), cables, mode="invariant").B
        naive = np.array(naive_evaluate(list(combo), 12, 2))
        assert np.abs(B - naive).max() < 1e-12


# --- interchange formats ---------------------------------------------------

def test_word_text_round_trips():
    for text in ("", "2 2 -1 -1 3 3", "1", "-3 -3 2"):
        word = word_from_text(text)
        assert word_to_text(word) == " ".join(text.split())
    rng = random.Random(23)
    for _ in range(100):
        word = random_word(rng, rng.randint(0, 15))
        assert word_from_text(word_to_text(word)) == word


def test_word_text_rejects_garbage():
    for bad in ("2 x", "4", "0", "1.5"):
        with pytest.raises(ValueError):
            word_from_text(bad)


def test_word_json_round_trips():
    text = '{"k":26,"N":2,"word":[2,2,-1,-1]}'
    word, k, n = word_from_json(text)
    assert (k, n) == (26, 2)
    assert word.generators == (2, 2, -1, -1)
    assert word_to_json(word, k, n) == text
    rng = random.Random(29)
    for _ in range(50):
        word = random_word(rng, rng.randint(0, 12))
        assert word_from_json(word_to_json(word, 42, 3)) == (word, 42, 3)


def test_word_json_rejects_garbage():
    for bad in ("{", '{"k":26}', '{"k":"x","N":2,"word":[]}'):
        with pytest.raises(ValueError):
            word_from_json(bad)


def test_render_empty_word():
    assert render_ascii(BraidWord(())) == "| | | |"
    assert parse_ascii("| | | |") == BraidWord(())


def test_render_single_sigma2():
    text = render_ascii(BraidWord((2,)))
    assert text == "| \\ / |"
    assert parse_ascii(text) == BraidWord((2,))


def test_render_round_trips():
    rng = random.Random(31)
    for _ in range(80):
        word = random_word(rng, rng.randint(0, 14))
        assert parse_ascii(render_ascii(word)) == word


def test_render_fourteen_crossing_word():
    word = BraidWord((2, 2, 1, 1, 1, 2, 2, 2, 2, 1, 1, -2, -2, 1))
    text = render_ascii(word)
    assert len(text.splitlines()) == 14
    assert parse_ascii(text) == word


def test_parse_ascii_rejects_garbage():
    for bad in ("| |", "| x x |", "\\ | | /"):
        with pytest.raises(ValueError):
            parse_ascii(bad)
