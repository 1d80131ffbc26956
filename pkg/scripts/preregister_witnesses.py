#!/usr/bin/env python3
"""Standalone brute-force search for high-fidelity entangling braid words.

Self-contained on purpose: everything is recomputed from the raw formulas
(no imports from the library) so the recorded witnesses are an independent
ground truth.  Enumerates plat braid words on 4 cables made of syllables
sigma_i^e with even exponents: such words keep the cable permutation
trivial, the link closes into the two components {1,2} and {3,4}, and the
crossing operators are position-determined:

  positions 1,3 -> R^e          (same pair, antiparallel strands)
  position  2   -> S (q^-8 R)^e S^-1   (cables from different components)

For each word we record P = |B[0,0]|^2 and phi = arg(B[0,0]) and keep the
best candidates with P >= 0.99 and |phi| >= 0.1*pi.

Usage: python3 scripts/preregister_witnesses.py [out.json]
"""

import cmath
import json
import math
import sys

import numpy as np

KS = (26, 33, 42)
N = 2
MAX_SYLLABLES = 6
EXPONENTS = (2, -2, 4, -4, 6, -6)
P_MIN = 0.99
PHI_MIN = 0.1 * math.pi
KEEP = 5


def qint(n: int, theta: float) -> float:
    return math.sin(n * theta) / math.sin(theta)


def mixing_matrix(theta: float) -> np.ndarray:
    q2, q3, q4, q5, q6 = (qint(n, theta) for n in (2, 3, 4, 5, 6))
    s3, s5, s35 = math.sqrt(q3), math.sqrt(q5), math.sqrt(q3 * q5)
    return np.array(
        [
            [1 / q3, s3 / q3, s5 / q3],
            [s3 / q3, q6 / (q3 * q4), -q2 * s35 / (q3 * q4)],
            [-s5 / q3, q2 * s35 / (q3 * q4), -q2 / (q3 * q4)],
        ]
    )


def syllable_matrices(k: int) -> dict[tuple[int, int], np.ndarray]:
    """Matrix of sigma_pos^exp for every position and allowed even exponent."""
    theta = 2 * math.pi / (k + N)
    q = cmath.exp(1j * theta)
    r_diag = np.array([1.0, -q**2, q**6])
    smix = mixing_matrix(theta)
    sinv = np.linalg.inv(smix)
    out = {}
    for e in EXPONENTS:
        out[(1, e)] = np.diag(r_diag**e)
        out[(3, e)] = np.diag(r_diag**e)
        out[(2, e)] = smix @ np.diag((q**-8 * r_diag) ** e) @ sinv
    return out


def search_even(k: int) -> list[dict]:
    mats = syllable_matrices(k)
    found = []

    def visit(word, product):
        amp = product[0, 0]
        p = abs(amp) ** 2
        phi = cmath.phase(amp)
        if p >= P_MIN and abs(phi) >= PHI_MIN:
            found.append({"word": list(word), "P": p, "phi": phi})

    def dfs(word, product, last_pos, depth):
        visit(word, product)
        if depth == MAX_SYLLABLES:
            return
        for pos in (1, 2, 3):
            if pos == last_pos:
                continue
            if last_pos == 3 and pos == 1:  # commuting pair; keep sorted form only
                continue
            for e in EXPONENTS:
                syl = [pos if e > 0 else -pos] * abs(e)
                dfs(word + syl, mats[(pos, e)] @ product, pos, depth + 1)

    dfs([], np.eye(3, dtype=complex), 0, 0)
    found.sort(key=lambda c: (-c["P"], len(c["word"]), c["word"]))
    return found[:KEEP]


def search_general(k: int, max_length: int = 20) -> list[dict]:
    """Iterative-deepening scan over arbitrary words whose permutation closes.

    Tracks the cable sitting in each slot; a crossing between cables of the
    same bottom pair is antiparallel (matrix R^sign), between cables of
    different pairs it picks up the extra q^-8 framing factor.  Words are
    free-reduced and (3,1)-sorted by construction.  Stops at the first
    length that yields qualifying candidates.
    """
    theta = 2 * math.pi / (k + N)
    q = cmath.exp(1j * theta)
    rd = np.array([1.0, -q**2, q**6])
    smix = mixing_matrix(theta)
    sinv = np.linalg.inv(smix)
    mats = {}
    for pos in (1, 2, 3):
        for sign in (1, -1):
            for same_pair in (True, False):
                d = ((1.0 if same_pair else q**-8) * rd) ** sign
                mats[(pos, sign, same_pair)] = (
                    np.diag(d) if pos in (1, 3) else smix @ np.diag(d) @ sinv
                )

    def inversions(slots):
        return sum(1 for i in range(4) for j in range(i + 1, 4) if slots[i] > slots[j])

    for target_len in range(1, max_length + 1):
        found = []

        def dfs(word, product, slots, last, depth):
            if depth == target_len:
                if slots == (1, 2, 3, 4):
                    amp = product[0, 0]
                    p = abs(amp) ** 2
                    phi = cmath.phase(amp)
                    if p >= P_MIN and abs(phi) >= PHI_MIN:
                        found.append({"word": list(word), "P": p, "phi": phi})
                return
            for pos in (1, 2, 3):
                if last is not None and abs(last) == 3 and pos == 1:
                    continue
                for sign in (1, -1):
                    g = pos * sign
                    if last is not None and g == -last:
                        continue
                    a, b = slots[pos - 1], slots[pos]
                    ns = list(slots)
                    ns[pos - 1], ns[pos] = ns[pos], ns[pos - 1]
                    ns = tuple(ns)
                    if inversions(ns) > target_len - depth - 1:
                        continue
                    same_pair = {a, b} in ({1, 2}, {3, 4})
                    dfs(word + [g], mats[(pos, sign, same_pair)] @ product,
                        ns, g, depth + 1)

        dfs([], np.eye(3, dtype=complex), (1, 2, 3, 4), None, 0)
        if found:
            found.sort(key=lambda c: (-c["P"], len(c["word"]), c["word"]))
            return found[:KEEP]
    return []


def main() -> None:
    out_path = sys.argv[1] if len(sys.argv) > 1 else "tests/data/witnesses.json"
    result = {"N": N,
              "budget": {"max_syllables": MAX_SYLLABLES, "max_abs_exponent": 6,
                         "fallback_max_length": 20},
              "P_min": P_MIN, "phi_min": PHI_MIN, "witnesses": {}}
    for k in KS:
        best = search_even(k)
        mode = "even-syllable"
        if not best:
            best = search_general(k)
            mode = "general-dfs"
        result["witnesses"][str(k)] = {"mode": mode, "candidates": best}
        print(f"k={k}: {len(best)} witnesses kept ({mode})")
        for c in best:
            print(f"  P={c['P']:.6f} phi={c['phi'] / math.pi:+.4f}*pi  word={c['word']}")
    with open(out_path, "w") as fh:
        json.dump(result, fh, indent=1)
    print(f"wrote {out_path}")


if __name__ == "__main__":
    main()
