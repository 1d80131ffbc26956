"""Braid words on four cables, plat closure, and gate evaluation.

A word is a sequence of signed generators: +i crosses the cables at slots
i and i+1 positively, -i negatively, for i in 1..3.  Generators are listed
bottom to top and each crossing operator multiplies the running product on
the left.

The plat closure joins slots (1,2) and (3,4) with cups at the bottom and
caps at the top.  Which crossing operator a generator picks up depends on
global data of the closed diagram:

  * cables of two different link components     -> the q^-8 R crossing,
  * same component, opposite orientation tags   -> R itself,
  * same component, equal orientation tags      -> the q^-4 R crossing.

Orientation tags are fixed by the bottom cups (cables 1 and 3 run up,
cables 2 and 4 run down) and travel with the cable; component membership
comes from a union-find over cups, caps and through-strands.

Gate mode demands that the word's permutation is the identity, so the
closure always has the two components {1,2} and {3,4}; invariant mode
accepts any word.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .cables import CableSet, CrossingKind, crossing_operator

_IDENTITY_SLOTS = (1, 2, 3, 4)


class NonIdentityPermutationError(ValueError):
    """Gate-mode evaluation of a word whose cables do not return home."""


@dataclass(frozen=True)
class BraidWord:
    """Signed generator list; +2 means a positive crossing at position 2."""

    generators: tuple[int, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            if not isinstance(g, int) or not 1 <= abs(g) <= 3:
                raise ValueError(f"generator must be +-1..3, got {g!r}")
        object.__setattr__(self, "generators", gens)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self) -> str:
        return word_to_text(self)


@dataclass(frozen=True)
class PlatDiagram:
    """Connectivity data of a plat-closed word.

    perm[c-1] is the top slot reached by cable c; cables_by_step[t][s-1] is
    the cable sitting at slot s after t generators; cable_up[c-1] is the
    orientation tag fixed by the bottom cups.  components partitions the
    cables of the closed diagram into link components.
    """

    word: BraidWord
    perm: tuple[int, int, int, int]
    cables_by_step: tuple[tuple[int, int, int, int], ...]
    cable_up: tuple[bool, bool, bool, bool]
    components: tuple[frozenset[int], ...]

    def same_component(self, a: int, b: int) -> bool:
        return any(a in comp and b in comp for comp in self.components)


def plat_connectivity(word: BraidWord) -> PlatDiagram:
    """Trace cables through the word and close the diagram."""
    slots = [1, 2, 3, 4]
    steps = [tuple(slots)]
    for g in word:
        i = abs(g)
        slots[i - 1], slots[i] = slots[i], slots[i - 1]
        steps.append(tuple(slots))

    final = steps[-1]
    perm = [0, 0, 0, 0]
    for s, c in enumerate(final, start=1):
        perm[c - 1] = s

    # union-find over the four cables: bottom cups, then top caps
    parent = list(range(5))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        parent[find(a)] = find(b)

    union(1, 2)
    union(3, 4)
    union(final[0], final[1])
    union(final[2], final[3])

    groups: dict[int, set[int]] = {}
    for c in range(1, 5):
        groups.setdefault(find(c), set()).add(c)
    components = tuple(sorted((frozenset(g) for g in groups.values()), key=min))

    return PlatDiagram(
        word=word,
        perm=tuple(perm),
        cables_by_step=tuple(steps),
        cable_up=(True, False, True, False),
        components=components,
    )


def assign_crossing_kinds(diagram: PlatDiagram) -> tuple[CrossingKind, ...]:
    """Label every crossing of the word by its operator kind."""
    kinds = []
    for t, g in enumerate(diagram.word):
        i = abs(g)
        a = diagram.cables_by_step[t][i - 1]
        b = diagram.cables_by_step[t][i]
        if not diagram.same_component(a, b):
            kinds.append(CrossingKind.DIFFERENT)
        elif diagram.cable_up[a - 1] != diagram.cable_up[b - 1]:
            kinds.append(CrossingKind.SAME_ANTIPARALLEL)
        else:
            kinds.append(CrossingKind.SAME_PARALLEL)
    return tuple(kinds)


@dataclass(frozen=True)
class EvalResult:
    """Braid operator with its computational-space amplitude data."""

    B: np.ndarray
    amplitude: complex
    P: float
    phi: float
    leakage: float


def principal_angle(z: complex) -> float:
    """Argument of z normalized to (-pi, pi]."""
    phi = math.atan2(z.imag, z.real)
    if phi <= -math.pi:
        phi = math.pi
    return phi


def evaluate_braid(word: BraidWord, cables: CableSet,
                   mode: str = "gate") -> EvalResult:
    """Evaluate a word into its operator B and the quantities derived from B[0,0].

    In gate mode the word must have the identity permutation; invariant mode
    accepts any word.
    """
    if mode not in ("gate", "invariant"):
        raise ValueError(f"mode must be 'gate' or 'invariant', got {mode!r}")
    diagram = plat_connectivity(word)
    if mode == "gate" and diagram.perm != _IDENTITY_SLOTS:
        raise NonIdentityPermutationError(
            f"word {word_to_text(word)!r} permutes the cables to {diagram.perm}; "
            "gate mode needs them back in place")
    kinds = assign_crossing_kinds(diagram)

    B = np.eye(3, dtype=complex)
    for g, kind in zip(word, kinds):
        B = crossing_operator(abs(g), kind, 1 if g > 0 else -1, cables) @ B

    amplitude = complex(B[0, 0])
    P = abs(amplitude) ** 2
    return EvalResult(B=B, amplitude=amplitude, P=P,
                      phi=principal_angle(amplitude), leakage=1.0 - P)


@dataclass(frozen=True)
class DiagonalGate:
    """Two-qubit gate entries for the four charge sectors.

    The first three sectors carry pure phases (a trivial cable pair cannot
    interact), so entries[0] is exactly 1 and entries[1:3] are products of
    the framing scalars picked up by crossings between the two adjoint
    cables of that sector.  entries[3] is the full cable amplitude; its
    modulus falls short of 1 by the leakage out of computational space.
    """

    entries: tuple[complex, complex, complex, complex]
    case_iv_leakage: float

    def matrix(self) -> np.ndarray:
        return np.diag(self.entries)


def two_qubit_gate(word: BraidWord, cables: CableSet) -> DiagonalGate:
    """Assemble the approximate diagonal two-qubit gate for a gate-mode word."""
    result = evaluate_braid(word, cables, mode="gate")
    diagram = plat_connectivity(word)
    kinds = assign_crossing_kinds(diagram)

    def sector_phase(pair: frozenset[int]) -> complex:
        phase = 1.0 + 0.0j
        for t, (g, kind) in enumerate(zip(word, kinds)):
            i = abs(g)
            a = diagram.cables_by_step[t][i - 1]
            b = diagram.cables_by_step[t][i]
            if a in pair and b in pair:
                phase *= cables.scalar_for(kind) ** (1 if g > 0 else -1)
        return phase

    g_ii = sector_phase(frozenset({3, 4}))
    g_iii = sector_phase(frozenset({1, 2}))
    return DiagonalGate(
        entries=(1.0 + 0.0j, g_ii, g_iii, result.amplitude),
        case_iv_leakage=result.leakage,
    )


# --- text, JSON and ASCII interchange -------------------------------------

def word_to_text(word: BraidWord) -> str:
    """Whitespace-separated signed positions, e.g. '2 2 -1 -1'."""
    return " ".join(str(g) for g in word)


def word_from_text(text: str) -> BraidWord:
    try:
        gens = tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise ValueError(f"malformed braid word {text!r}: {exc}") from None
    return BraidWord(gens)


def word_to_json(word: BraidWord, k: int, N: int) -> str:
    """Canonical JSON form, e.g. '{"k":26,"N":2,"word":[2,2,-1,-1]}'."""
    return json.dumps({"k": k, "N": N, "word": list(word)},
                      separators=(",", ":"))


def word_from_json(text: str) -> tuple[BraidWord, int, int]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed braid JSON: {exc}") from None
    if not isinstance(obj, dict) or not {"k", "N", "word"} <= obj.keys():
        raise ValueError("braid JSON needs keys 'k', 'N' and 'word'")
    k, N, gens = obj["k"], obj["N"], obj["word"]
    if not isinstance(k, int) or not isinstance(N, int) or not isinstance(gens, list):
        raise ValueError("braid JSON fields have wrong types")
    return BraidWord(tuple(int(g) for g in gens)), k, N


_STRAND_ROW = "| | | |"


def render_ascii(word: BraidWord) -> str:
    """Four-column diagram, one row per generator, first generator at the bottom."""
    rows = []
    for g in reversed(word.generators):
        cells = ["|"] * 4
        i = abs(g)
        cells[i - 1], cells[i] = ("\\", "/") if g > 0 else ("/", "\\")
        rows.append(" ".join(cells))
    if not rows:
        rows = [_STRAND_ROW]
    return "\n".join(rows)


def parse_ascii(text: str) -> BraidWord:
    """Inverse of render_ascii; rows without a crossing are plain strands."""
    gens = []
    for line in reversed([ln for ln in text.splitlines() if ln.strip()]):
        cells = line.split()
        if len(cells) != 4:
            raise ValueError(f"diagram row must have 4 cells, got {line!r}")
        marks = [s for s, c in enumerate(cells) if c != "|"]
        if not marks:
            continue
        if len(marks) != 2 or marks[1] != marks[0] + 1:
            raise ValueError(f"row has no single adjacent crossing: {line!r}")
        left, right = cells[marks[0]], cells[marks[1]]
        if (left, right) == ("\\", "/"):
            gens.append(marks[0] + 1)
        elif (left, right) == ("/", "\\"):
            gens.append(-(marks[0] + 1))
        else:
            raise ValueError(f"unrecognized crossing glyphs in row {line!r}")
    return BraidWord(tuple(gens))
