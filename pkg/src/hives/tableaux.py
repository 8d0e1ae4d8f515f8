"""Littlewood-Richardson coefficients by the classical tableau rule.

This is the independent oracle: c(mu, nu; lam) is the number of skew
semistandard tableaux of shape lam/mu and weight nu whose reverse reading
word (right to left within each row, top row first) is a lattice word.  It
never touches the hive machinery, so agreement between the two counts is a
real cross-check rather than a tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .hive import Partition, is_partition

Filling = dict[tuple[int, int], int]


def _trim(p: Partition) -> tuple[int, ...]:
    """Drop trailing zeros."""
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class SkewShape:
    """The cells of outer/inner, for partitions inner contained in outer."""

    outer: Partition
    inner: Partition

    def __post_init__(self) -> None:
        outer, inner = _trim(self.outer), _trim(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if len(inner) > len(outer) or any(
                inner[r] > outer[r] for r in range(len(inner))):
            raise ValueError(f"{inner} is not contained in {outer}")

    def inner_end(self, row: int) -> int:
        return self.inner[row] if row < len(self.inner) else 0

    def cells(self) -> list[tuple[int, int]]:
        """Skew cells in reading order: rows top down, right to left."""
        return [(r, c)
                for r in range(len(self.outer))
                for c in range(self.outer[r] - 1, self.inner_end(r) - 1, -1)]

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew shape, entries keyed by (row, column)."""

    shape: SkewShape
    entries: Filling

    def __post_init__(self) -> None:
        if set(self.entries) != set(self.shape.cells()):
            raise ValueError("entries do not cover the skew cells exactly")

    def reverse_word(self) -> list[int]:
        """Entries right-to-left within rows, top row first."""
        return [self.entries[c] for c in self.shape.cells()]

    def weight(self) -> tuple[int, ...]:
        word = self.reverse_word()
        top = max(word, default=0)
        return tuple(word.count(v) for v in range(1, top + 1))

    def is_semistandard(self) -> bool:
        for (r, c), v in self.entries.items():
            if (r, c + 1) in self.entries and v > self.entries[(r, c + 1)]:
                return False
            if (r - 1, c) in self.entries and v <= self.entries[(r - 1, c)]:
                return False
        return True

    def is_lattice(self) -> bool:
        counts: dict[int, int] = {}
        for v in self.reverse_word():
            counts[v] = counts.get(v, 0) + 1
            if v > 1 and counts[v] > counts.get(v - 1, 0):
                return False
        return True


def is_lr_filling(shape: SkewShape, entries: Filling, weight: Partition) -> bool:
    """Re-check one filling against all three defining predicates: rows
    weakly increase, columns strictly increase, reverse word is lattice."""
    if set(entries) != set(shape.cells()):
        return False
    if any(v < 1 for v in entries.values()):
        return False
    t = SkewTableau(shape, entries)
    return (t.is_semistandard() and t.is_lattice()
            and t.weight() == _trim(weight))


def _lr_fillings(mu: Partition, nu: Partition, lam: Partition) -> Iterator[Filling]:
    """Depth-first generation of LR fillings of lam/mu with weight nu.

    Cells are filled in reading order, so the lattice-word prefix condition
    and both semistandardness conditions prune the search as it goes.
    """
    mu, nu, lam = _trim(mu), _trim(nu), _trim(lam)
    if sum(mu) + sum(nu) != sum(lam):
        return
    if len(mu) > len(lam) or any(mu[r] > lam[r] for r in range(len(mu))):
        return
    shape = SkewShape(lam, mu)
    cells = shape.cells()
    k = len(nu)
    entries: Filling = {}
    remaining = list(nu)
    counts = [0] * (k + 1)

    def fill(pos: int) -> Iterator[Filling]:
        if pos == len(cells):
            yield dict(entries)
            return
        r, c = cells[pos]
        lo, hi = 1, k
        if (r, c + 1) in entries:
            hi = min(hi, entries[(r, c + 1)])
        if (r - 1, c) in entries:
            lo = max(lo, entries[(r - 1, c)] + 1)
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            entries[(r, c)] = v
            remaining[v - 1] -= 1
            counts[v] += 1
            yield from fill(pos + 1)
            del entries[(r, c)]
            remaining[v - 1] += 1
            counts[v] -= 1

    yield from fill(0)


def lr_coefficient(mu: Partition, nu: Partition, lam: Partition) -> int:
    """The Littlewood-Richardson coefficient c(mu, nu; lam)."""
    for p in (mu, nu, lam):
        if not is_partition(tuple(p)):
            raise ValueError(f"{p} is not a partition")
    return sum(1 for _ in _lr_fillings(tuple(mu), tuple(nu), tuple(lam)))


def partitions_in_box(total: int, max_parts: int, max_part: int) -> list[Partition]:
    """All partitions of ``total`` with at most max_parts parts, each at most
    max_part, in descending lexicographic order."""
    out: list[Partition] = []

    def rec(prefix: list[int], left: int, bound: int, slots: int) -> None:
        if left == 0:
            out.append(tuple(prefix))
            return
        if slots == 0 or bound * slots < left:
            return
        for part in range(min(bound, left), 0, -1):
            prefix.append(part)
            rec(prefix, left - part, part, slots - 1)
            prefix.pop()

    rec([], total, max_part, max_parts)
    return out


def schur_product(mu: Partition, nu: Partition, n: int) -> dict[Partition, int]:
    """Expansion of the product of the Schur functions of mu and nu: all lam
    with at most n parts and positive coefficient, mapped to c(mu, nu; lam)."""
    mu, nu = _trim(tuple(mu)), _trim(tuple(nu))
    total = sum(mu) + sum(nu)
    max_part = (mu[0] if mu else 0) + (nu[0] if nu else 0)
    out: dict[Partition, int] = {}
    for lam in partitions_in_box(total, n, max_part):
        c = lr_coefficient(mu, nu, lam)
        if c:
            out[lam] = c
    return out
