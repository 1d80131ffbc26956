"""Enumeration and ranking of gate-mode braid words by fidelity and phase.

Two enumeration modes cover the useful word shapes:

  * even-syllable: blocks sigma_i^e with even exponents.  Every cable comes
    home after each block, so the permutation stays trivial and the crossing
    operator of a block depends only on its position (outer blocks are
    antiparallel same-component crossings, the middle block couples the two
    components).
  * general-dfs: arbitrary words up to a length cap, pruned by how far the
    running permutation is from the identity, emitting only words that
    close (identity permutation).

Both modes emit exactly the words that are their own canonical form
(free-reduced, commuting (3,1) pairs sorted), one representative per class
reachable within the budget.  Search evaluates every emitted word, carrying
prefix products down the enumeration tree, and ranks hits by probability
(descending), then shorter length, then lexicographic word, so results are
reproducible and independent of how the work is split across processes.
"""

from __future__ import annotations

import heapq
import itertools
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from io import StringIO
import csv
from typing import Iterator

import multiprocessing
import numpy as np

from .cables import cable_matrices
from .core import TheoryParams
from .plat import BraidWord, principal_angle, word_to_text

MODES = ("even-syllable", "general-dfs")

_POSITIONS = (1, 2, 3)
_IDENTITY_SLOTS = (1, 2, 3, 4)


@dataclass(frozen=True)
class SearchConfig:
    """Budget and thresholds for one search run."""

    params: TheoryParams
    mode: str = "even-syllable"
    max_syllables: int = 6
    max_abs_exponent: int = 6       # even-syllable mode; even, >= 2
    max_length: int = 12            # general mode length cap
    p_min: float = 0.99
    phi_min: float = 0.1 * math.pi  # radians
    top_n: int = 10

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not 0.0 <= self.p_min <= 1.0:
            raise ValueError(f"p_min must be in [0, 1], got {self.p_min}")
        if self.phi_min < 0.0:
            raise ValueError(f"phi_min must be >= 0, got {self.phi_min}")
        if self.max_syllables < 0 or self.max_length < 0:
            raise ValueError("budgets must be nonnegative")
        if self.max_abs_exponent < 2 or self.max_abs_exponent % 2:
            raise ValueError(
                f"max_abs_exponent must be a positive even integer, got {self.max_abs_exponent}")
        if self.top_n < 1:
            raise ValueError(f"top_n must be >= 1, got {self.top_n}")

    def exponents(self) -> tuple[int, ...]:
        """Even syllable exponents in enumeration order: 2, -2, 4, -4, ..."""
        out = []
        for e in range(2, self.max_abs_exponent + 1, 2):
            out.extend((e, -e))
        return tuple(out)


@dataclass(frozen=True)
class Candidate:
    """One qualifying word with its evaluation."""

    word: BraidWord
    P: float
    phi: float
    length: int


@dataclass(frozen=True)
class SearchResult:
    candidates: tuple[Candidate, ...]
    status: str            # "ok" | "no-candidates"
    evaluated: int         # words evaluated across the enumeration


def canonicalize(word: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs and sort commuting (3,1) pairs, to fixpoint."""
    gens = list(word)
    changed = True
    while changed:
        changed = False
        reduced: list[int] = []
        for g in gens:
            if reduced and reduced[-1] == -g:
                reduced.pop()
                changed = True
            else:
                reduced.append(g)
        gens = reduced
        for i in range(len(gens) - 1):
            if abs(gens[i]) == 3 and abs(gens[i + 1]) == 1:
                gens[i], gens[i + 1] = gens[i + 1], gens[i]
                changed = True
    return BraidWord(tuple(gens))


def _syllable(pos: int, exponent: int) -> tuple[int, ...]:
    g = pos if exponent > 0 else -pos
    return (g,) * abs(exponent)


def _next_positions(last_pos: int) -> tuple[int, ...]:
    """Syllable positions allowed after last_pos in a canonical word."""
    if last_pos == 0:
        return _POSITIONS
    if last_pos == 3:
        return (2,)          # 3 -> 1 would sort; 3 -> 3 would merge
    return tuple(p for p in _POSITIONS if p != last_pos)


def enumerate_gate_words(config: SearchConfig) -> Iterator[BraidWord]:
    """Yield identity-permutation words within the budget, canonical forms only."""
    yield BraidWord(())
    if config.mode == "even-syllable":
        yield from _enumerate_even(config)
    else:
        yield from _enumerate_general(config)


def _enumerate_even(config: SearchConfig) -> Iterator[BraidWord]:
    exponents = config.exponents()

    def rec(word: tuple[int, ...], last_pos: int, used: int) -> Iterator[BraidWord]:
        if used == config.max_syllables:
            return
        for pos in _next_positions(last_pos):
            for e in exponents:
                grown = word + _syllable(pos, e)
                yield BraidWord(grown)
                yield from rec(grown, pos, used + 1)

    yield from rec((), 0, 0)


def _inversions(slots: tuple[int, ...]) -> int:
    return sum(1 for i in range(4) for j in range(i + 1, 4) if slots[i] > slots[j])


def _general_children(slots: tuple[int, ...], last: int,
                      remaining: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Letters extendable from a canonical prefix, with permutation pruning."""
    for pos in _POSITIONS:
        if last != 0 and abs(last) == 3 and pos == 1:
            continue
        for sign in (1, -1):
            g = pos * sign
            if last != 0 and g == -last:
                continue
            grown = list(slots)
            grown[pos - 1], grown[pos] = grown[pos], grown[pos - 1]
            grown = tuple(grown)
            if _inversions(grown) > remaining:
                continue
            yield g, grown


def _enumerate_general(config: SearchConfig) -> Iterator[BraidWord]:
    def rec(word: tuple[int, ...], slots: tuple[int, ...], last: int) -> Iterator[BraidWord]:
        if len(word) == config.max_length:
            return
        remaining = config.max_length - len(word) - 1
        for g, grown_slots in _general_children(slots, last, remaining):
            grown = word + (g,)
            if grown_slots == _IDENTITY_SLOTS:
                yield BraidWord(grown)
            yield from rec(grown, grown_slots, g)

    yield from rec((), _IDENTITY_SLOTS, 0)


# --- evaluation fast paths --------------------------------------------------
#
# For any identity-permutation word the closure has the two components
# {1,2} and {3,4}; a crossing is antiparallel-same-component when both its
# cables are in one pair and picks up q^-8 otherwise.  This makes crossing
# matrices a function of the prefix alone, so prefix products are shared.

def _crossing_table(params: TheoryParams) -> dict:
    """(position, sign, same_pair) -> 3x3 matrix."""
    cables = cable_matrices(params)
    q = params.q
    r_diag = np.diagonal(cables.R)
    table = {}
    for pos in _POSITIONS:
        for sign in (1, -1):
            for same_pair in (True, False):
                d = ((1.0 if same_pair else q ** -8) * r_diag) ** sign
                table[(pos, sign, same_pair)] = (
                    np.diag(d) if pos in (1, 3)
                    else cables.Smix @ np.diag(d) @ cables.Sinv)
    return table


def _syllable_table(params: TheoryParams, exponents: tuple[int, ...]) -> dict:
    """(position, exponent) -> 3x3 matrix of sigma_pos^exponent, identity layout."""
    cables = cable_matrices(params)
    q = params.q
    r_diag = np.diagonal(cables.R)
    table = {}
    for e in exponents:
        table[(1, e)] = np.diag(r_diag ** e)
        table[(3, e)] = np.diag(r_diag ** e)
        d = ((q ** -8) * r_diag) ** e
        table[(2, e)] = cables.Smix @ np.diag(d) @ cables.Sinv
    return table


_EYE3 = np.eye(3, dtype=complex)


def _hit_or_none(word: tuple[int, ...], product: np.ndarray,
                 config: SearchConfig) -> tuple | None:
    amp = complex(product[0, 0])
    p = abs(amp) ** 2
    phi = principal_angle(amp)
    if p >= config.p_min and abs(phi) >= config.phi_min:
        return (p, phi, word)
    return None


def _rank_key(hit: tuple) -> tuple:
    p, _phi, word = hit
    return (-p, len(word), word)


def _search_even_branch(config: SearchConfig, branch: tuple[int, int],
                        reuse_prefix: bool) -> tuple[list, int]:
    """Evaluate the subtree of words starting with syllable `branch`."""
    table = _syllable_table(config.params, config.exponents())
    hits: list = []
    evaluated = 0

    def product_of(syllables: tuple[tuple[int, int], ...]) -> np.ndarray:
        acc = _EYE3
        for pos, e in syllables:
            acc = table[(pos, e)] @ acc
        return acc

    def visit(word, syllables, product):
        nonlocal evaluated
        evaluated += 1
        hit = _hit_or_none(word, product, config)
        if hit is not None:
            hits.append(hit)

    def rec(word, syllables, product, last_pos, used):
        visit(word, syllables, product)
        if used == config.max_syllables:
            return
        for pos in _next_positions(last_pos):
            for e in config.exponents():
                grown_syl = syllables + ((pos, e),)
                grown = word + _syllable(pos, e)
                prod = (table[(pos, e)] @ product if reuse_prefix
                        else product_of(grown_syl))
                rec(grown, grown_syl, prod, pos, used + 1)

    pos0, e0 = branch
    rec(_syllable(pos0, e0), ((pos0, e0),), table[(pos0, e0)] @ _EYE3
        if reuse_prefix else product_of(((pos0, e0),)), pos0, 1)
    return heapq.nsmallest(config.top_n, hits, key=_rank_key), evaluated


def _search_general_branch(config: SearchConfig, branch: int, reuse_prefix: bool,
                           exact_length: int | None = None) -> tuple[list, int]:
    """Evaluate the subtree of general words starting with letter `branch`."""
    table = _crossing_table(config.params)
    max_length = config.max_length if exact_length is None else exact_length
    hits: list = []
    evaluated = 0

    def matrix(g: int, slots: tuple[int, ...]) -> np.ndarray:
        pos = abs(g)
        a, b = slots[pos - 1], slots[pos]
        same_pair = (a in (1, 2)) == (b in (1, 2))
        return table[(pos, 1 if g > 0 else -1, same_pair)]

    def product_of(word: tuple[int, ...]) -> np.ndarray:
        acc = _EYE3
        slots = _IDENTITY_SLOTS
        for g in word:
            acc = matrix(g, slots) @ acc
            pos = abs(g)
            grown = list(slots)
            grown[pos - 1], grown[pos] = grown[pos], grown[pos - 1]
            slots = tuple(grown)
        return acc

    def rec(word, slots, product, last):
        nonlocal evaluated
        if slots == _IDENTITY_SLOTS and (exact_length is None or len(word) == exact_length):
            evaluated += 1
            hit = _hit_or_none(word, product, config)
            if hit is not None:
                hits.append(hit)
        if len(word) == max_length:
            return
        remaining = max_length - len(word) - 1
        for g, grown_slots in _general_children(slots, last, remaining):
            grown = word + (g,)
            prod = (matrix(g, slots) @ product if reuse_prefix
                    else product_of(grown))
            rec(grown, grown_slots, prod, g)

    g0 = branch
    slots0 = list(_IDENTITY_SLOTS)
    pos0 = abs(g0)
    slots0[pos0 - 1], slots0[pos0] = slots0[pos0], slots0[pos0 - 1]
    rec((g0,), tuple(slots0), matrix(g0, _IDENTITY_SLOTS) @ _EYE3
        if reuse_prefix else product_of((g0,)), g0)
    return heapq.nsmallest(config.top_n, hits, key=_rank_key), evaluated


def _branches(config: SearchConfig, exact_length: int | None = None) -> list:
    if config.mode == "even-syllable":
        if config.max_syllables == 0:
            return []
        return [(pos, e) for pos in _POSITIONS for e in config.exponents()]
    cap = config.max_length if exact_length is None else exact_length
    if cap == 0:
        return []
    return [pos * sign for pos in _POSITIONS for sign in (1, -1)]


def _branch_worker(payload) -> list:
    config, branches, reuse_prefix, exact_length = payload
    out = []
    for branch in branches:
        if config.mode == "even-syllable":
            hits, count = _search_even_branch(config, branch, reuse_prefix)
        else:
            hits, count = _search_general_branch(config, branch, reuse_prefix,
                                                 exact_length)
        out.append((branch, hits, count))
    return out


def resolve_workers(workers: int | None) -> int:
    """None -> PLATGATE_THREADS env (0 or unset means auto)."""
    if workers is None:
        raw = os.environ.get("PLATGATE_THREADS", "0")
        workers = int(raw)
    if workers < 0:
        raise ValueError(f"worker count must be >= 0, got {workers}")
    if workers == 0:
        workers = os.cpu_count() or 1
    return workers


def _run_branches(config: SearchConfig, workers: int | None, reuse_prefix: bool,
                  exact_length: int | None = None) -> tuple[list, int]:
    """Evaluate all branches, merging per-branch results in branch order."""
    branches = _branches(config, exact_length)
    nworkers = min(resolve_workers(workers), max(len(branches), 1))
    if nworkers <= 1 or len(branches) <= 1:
        grouped = [_branch_worker((config, branches, reuse_prefix, exact_length))]
    else:
        chunks = [branches[i::nworkers] for i in range(nworkers)]
        ctx = multiprocessing.get_context("fork")
        with ProcessPoolExecutor(max_workers=nworkers, mp_context=ctx) as pool:
            grouped = list(pool.map(
                _branch_worker,
                [(config, chunk, reuse_prefix, exact_length) for chunk in chunks]))

    by_branch = {branch: (hits, count)
                 for group in grouped for branch, hits, count in group}
    all_hits: list = []
    evaluated = 0
    for branch in branches:
        hits, count = by_branch[branch]
        all_hits.extend(hits)
        evaluated += count

    # the empty word belongs to no branch
    if exact_length is None or exact_length == 0:
        evaluated += 1
        hit = _hit_or_none((), _EYE3, config)
        if hit is not None:
            all_hits.append(hit)

    return heapq.nsmallest(config.top_n, all_hits, key=_rank_key), evaluated


def search_entangling(config: SearchConfig, workers: int | None = None,
                      reuse_prefix: bool = True) -> SearchResult:
    """Rank all enumerated words by P (desc), length, lexicographic word."""
    hits, evaluated = _run_branches(config, workers, reuse_prefix)
    candidates = tuple(
        Candidate(word=BraidWord(word), P=p, phi=phi, length=len(word))
        for p, phi, word in hits)
    status = "ok" if candidates else "no-candidates"
    return SearchResult(candidates=candidates, status=status, evaluated=evaluated)


def search_with_fallback(config: SearchConfig, fallback_max_length: int = 20,
                         workers: int | None = None) -> SearchResult:
    """Primary search, then iterative-deepening general search if it came up empty.

    The fallback scans general gate-mode words length by length and stops at
    the first length that yields qualifying candidates (each length is
    completed before the decision, so results stay deterministic).  An
    exhaustive sweep of all words up to length 20 is far beyond reach; the
    deepening strategy keeps the budget honest while terminating as soon as
    the threshold is attainable.
    """
    result = search_entangling(config, workers=workers)
    if result.candidates:
        return result
    evaluated = result.evaluated
    fb = replace(config, mode="general-dfs", max_length=fallback_max_length)
    for length in range(0, fallback_max_length + 1):
        hits, count = _run_branches(fb, workers, True, exact_length=length)
        evaluated += count
        if hits:
            candidates = tuple(
                Candidate(word=BraidWord(word), P=p, phi=phi, length=len(word))
                for p, phi, word in hits)
            return SearchResult(candidates=candidates, status="ok",
                                evaluated=evaluated)
    return SearchResult(candidates=(), status="no-candidates", evaluated=evaluated)


# --- result export ----------------------------------------------------------

_SIG = "{:.12g}"


def result_to_csv(result: SearchResult, params: TheoryParams) -> str:
    """CSV with columns k, N, word, length, P, phi_over_pi."""
    buf = StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "N", "word", "length", "P", "phi_over_pi"])
    for cand in result.candidates:
        writer.writerow([
            params.k, params.N, word_to_text(cand.word), cand.length,
            _SIG.format(cand.P), _SIG.format(cand.phi / math.pi),
        ])
    return buf.getvalue()


def result_to_json(result: SearchResult, params: TheoryParams) -> str:
    """JSON array of candidate records."""
    records = [{
        "k": params.k,
        "N": params.N,
        "word": list(cand.word),
        "length": cand.length,
        "P": float(_SIG.format(cand.P)),
        "phi": float(_SIG.format(cand.phi)),
        "phi_over_pi": float(_SIG.format(cand.phi / math.pi)),
    } for cand in result.candidates]
    return json.dumps(records, indent=1)
