"""Tensor-product multiplicities for SU(N) representation labels.

Labels are reduced partitions (no column of height N).  Products are
computed by the Littlewood-Richardson rule: the second factor is added one
row at a time as a horizontal strip, keeping the running ballot condition
that by the end of each row the boxes of label i never outnumber the boxes
of label i-1 placed in earlier rows.  Shapes deeper than N rows are pruned
during the chain (every intermediate shape sits inside the final one) and
full columns are struck at the end.

Everything is exact integer arithmetic; a Schur-Weyl count over standard
tableaux doubles as an independent oracle for invariants of (V (x) Vbar)^m.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class InvalidLabelError(ValueError):
    """A partition that is not a valid reduced SU(N) label."""


def reduce_partition(parts: Sequence[int], n: int) -> tuple[int, ...]:
    """Strike full columns of height n and trailing zeros."""
    shape = [p for p in parts]
    while shape and shape[-1] == 0:
        shape.pop()
    if len(shape) > n:
        raise InvalidLabelError(f"partition {tuple(parts)} has more than {n} rows")
    while len(shape) == n and shape[-1] > 0:
        m = shape[-1]
        shape = [p - m for p in shape]
        while shape and shape[-1] == 0:
            shape.pop()
    return tuple(shape)


@dataclass(frozen=True, order=True)
class RepLabel:
    """Reduced partition labelling an SU(N) irreducible representation."""

    partition: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.partition)
        if any(not isinstance(p, int) or p < 0 for p in parts):
            raise InvalidLabelError(f"partition entries must be nonnegative ints: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidLabelError(f"partition must be weakly decreasing: {parts}")
        if parts and parts[-1] == 0:
            raise InvalidLabelError(f"partition must be reduced (no trailing zeros): {parts}")
        object.__setattr__(self, "partition", parts)

    @classmethod
    def from_partition(cls, parts: Sequence[int], n: int) -> "RepLabel":
        return cls(reduce_partition(parts, n))

    @staticmethod
    def trivial() -> "RepLabel":
        return RepLabel(())

    @staticmethod
    def fundamental() -> "RepLabel":
        return RepLabel((1,))

    @staticmethod
    def antifundamental(n: int) -> "RepLabel":
        return RepLabel((1,) * (n - 1))

    @staticmethod
    def adjoint(n: int) -> "RepLabel":
        if n == 2:
            return RepLabel((2,))
        return RepLabel((2,) + (1,) * (n - 2))

    @staticmethod
    def four_box() -> "RepLabel":
        return RepLabel((4,))

    def validate_for(self, n: int) -> None:
        if len(self.partition) >= n:
            raise InvalidLabelError(
                f"label {self.partition} is not reduced for SU({n})")

    def boxes(self) -> int:
        return sum(self.partition)

    def dimension(self, n: int) -> int:
        return weyl_dimension(self.partition, n)


def weyl_dimension(partition: Sequence[int], n: int) -> int:
    """Dimension of the SU(n) irreducible with this highest weight."""
    lam = list(partition) + [0] * (n - len(partition))
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert dim.denominator == 1
    return int(dim)


def _horizontal_strips(shape: tuple[int, ...], size: int,
                       max_rows: int) -> Iterator[tuple[int, ...]]:
    """Partitions reached from shape by adding a horizontal strip of `size` boxes."""
    nrows = min(len(shape) + 1, max_rows)
    padded = list(shape) + [0] * (nrows - len(shape))
    acc = [0] * nrows

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == nrows:
            if remaining == 0:
                yield tuple(acc)
            return
        # partition condition caps at the new previous row; the strip condition
        # (no two added boxes in a column) caps at the old previous row
        cap = min(padded[i] + remaining,
                  acc[i - 1] if i > 0 else size + padded[0],
                  padded[i - 1] if i > 0 else size + padded[0])
        for new_len in range(cap, padded[i] - 1, -1):
            acc[i] = new_len
            yield from rec(i + 1, remaining - (new_len - padded[i]))

    yield from rec(0, size)


def _lr_product(a: tuple[int, ...], b: tuple[int, ...],
                nrows: int) -> Counter:
    """Multiset of shapes in the product s_a * s_b with at most nrows rows."""
    # state: (shape, per-row counts of the label just placed)
    states = Counter({(a, None): 1})
    for strip_size in b:
        next_states: Counter = Counter()
        for (shape, prev), mult in states.items():
            for grown in _horizontal_strips(shape, strip_size, nrows):
                old = list(shape) + [0] * (len(grown) - len(shape))
                added = tuple(grown[r] - old[r] for r in range(len(grown)))
                if prev is not None:
                    placed = 0
                    earlier = 0
                    ok = True
                    for r in range(len(grown)):
                        placed += added[r]
                        if placed > earlier:
                            ok = False
                            break
                        earlier += prev[r] if r < len(prev) else 0
                    if not ok:
                        continue
                key = (tuple(x for x in grown if x > 0), added)
                next_states[key] += mult
        states = next_states
    out: Counter = Counter()
    for (shape, _), mult in states.items():
        out[shape] += mult
    return out


def _tensor_general(a: RepLabel, b: RepLabel, n: int) -> Counter:
    out: Counter = Counter()
    for shape, mult in _lr_product(a.partition, b.partition, n).items():
        out[RepLabel(reduce_partition(shape, n))] += mult
    return out


def _tensor_su2(a: RepLabel, b: RepLabel) -> Counter:
    m = a.partition[0] if a.partition else 0
    p = b.partition[0] if b.partition else 0
    out: Counter = Counter()
    for c in range(abs(m - p), m + p + 1, 2):
        out[RepLabel(reduce_partition((c,), 2))] += 1
    return out


def tensor_decompose(a: RepLabel, b: RepLabel, n: int) -> Counter:
    """Decompose a (x) b into SU(n) labels with exact multiplicities."""
    if n < 2:
        raise InvalidLabelError(f"rank must be >= 2, got {n}")
    a.validate_for(n)
    b.validate_for(n)
    if n == 2:
        return _tensor_su2(a, b)
    return _tensor_general(a, b, n)


def trivial_multiplicity(factors: Iterable[RepLabel], n: int) -> int:
    """Multiplicity of the trivial representation in an iterated product."""
    factors = list(factors)
    if not factors:
        raise InvalidLabelError("factor list must be nonempty")
    state: Counter = Counter({RepLabel.trivial(): 1})
    for factor in factors:
        next_state: Counter = Counter()
        for label, mult in state.items():
            for out_label, out_mult in tensor_decompose(label, factor, n).items():
                next_state[out_label] += mult * out_mult
        state = next_state
    return state[RepLabel.trivial()]


def _partitions(total: int, max_rows: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_rows == 0:
        return
    cap = total if max_part is None else min(total, max_part)
    for first in range(cap, 0, -1):
        for rest in _partitions(total - first, max_rows - 1, first):
            yield (first,) + rest


def _standard_tableaux(shape: tuple[int, ...]) -> int:
    """Hook length formula, exact."""
    if not shape:
        return 1
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])]
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    return math.factorial(sum(shape)) // hooks


def schur_weyl_oracle(m: int, n: int) -> int:
    """Sum of squared standard-tableaux counts over partitions of m with <= n rows.

    Independent cross-check for the invariants of (V (x) Vbar)^m.
    """
    if not 0 <= m <= 8:
        raise ValueError(f"m must be in [0, 8], got {m}")
    return sum(_standard_tableaux(p) ** 2 for p in _partitions(m, n))
