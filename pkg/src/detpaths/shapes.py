"""
Semipartitions and skew shapes.

A semipartition is an infinite weakly decreasing integer sequence that is
eventually constant; it is stored as a finite ``head`` plus the constant
``tail``. Entries of ``head`` equal to the tail are trimmed, so ``len(head)``
is the length.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Semipartition:
    head: tuple[int, ...] = ()
    tail: int = 0

    def __post_init__(self):
        head = tuple(int(v) for v in self.head)
        for a, b in zip(head, head[1:]):
            if b > a:
                raise ValueError(f"not weakly decreasing: {head}")
        if head and head[-1] < self.tail:
            raise ValueError(f"entries below tail {self.tail}: {head}")
        while head and head[-1] == self.tail:
            head = head[:-1]
        object.__setattr__(self, "head", head)

    def __getitem__(self, i: int) -> int:
        """1-based part access; parts past the head equal the tail."""
        if i < 1:
            raise IndexError("parts are indexed from 1")
        return self.head[i - 1] if i <= len(self.head) else self.tail

    def parts(self, count: int) -> tuple[int, ...]:
        return tuple(self[i] for i in range(1, count + 1))

    @property
    def length(self) -> int:
        return len(self.head)

    @property
    def weight(self) -> int:
        """Sum of parts above the tail."""
        return sum(v - self.tail for v in self.head)

    def __str__(self) -> str:
        body = ",".join(str(v) for v in self.head)
        return body if self.tail == 0 else f"{body}@{self.tail}"


def partition(*parts: int) -> Semipartition:
    if any(p < 0 for p in parts):
        raise ValueError("partitions have nonnegative parts")
    return Semipartition(tuple(parts), 0)


def is_partition(s: Semipartition) -> bool:
    return s.tail == 0


def delete_part(s: Semipartition, k: int) -> Semipartition:
    """Drop part k; every later part moves up one place and loses 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    count = max(s.length, k) + 1
    p = s.parts(count)
    new = p[: k - 1] + tuple(v - 1 for v in p[k:])
    return Semipartition(new, s.tail - 1)


def delete_parts(s: Semipartition, ks: Sequence[int]) -> Semipartition:
    """Delete parts k1 < ... < kl, largest index first."""
    ks = tuple(ks)
    if any(b <= a for a, b in zip(ks, ks[1:])):
        raise ValueError(f"index set must be strictly increasing: {ks}")
    for k in reversed(ks):
        s = delete_part(s, k)
    return s


def add_const(s: Semipartition, z: int, m: int | None = None) -> Semipartition:
    """Add z to the first m parts (``m=None`` means every part, tail included)."""
    if m is None or m == math.inf:
        return Semipartition(tuple(v + z for v in s.head), s.tail + z)
    if m < 1:
        raise ValueError("m must be positive")
    count = max(s.length, m)
    p = s.parts(count)
    return Semipartition(tuple(v + z if i < m else v for i, v in enumerate(p)), s.tail)


def contains(mu: Semipartition, lam: Semipartition) -> bool:
    """The relation mu ⊴ lam: componentwise <= and equal tails."""
    if mu.tail != lam.tail:
        return False
    count = max(mu.length, lam.length)
    return all(a <= b for a, b in zip(mu.parts(count), lam.parts(count)))


@dataclass(frozen=True)
class Shape:
    lam: Semipartition
    mu: Semipartition = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.mu is None:
            object.__setattr__(self, "mu", Semipartition((), self.lam.tail))
        if not contains(self.mu, self.lam):
            raise ValueError(f"{self.mu} is not contained in {self.lam}")

    @property
    def length(self) -> int:
        return self.lam.length

    @property
    def tail(self) -> int:
        return self.lam.tail

    @property
    def weight(self) -> int:
        m = self.length
        return sum(a - b for a, b in zip(self.lam.parts(m), self.mu.parts(m)))

    def row_bounds(self, count: int | None = None) -> list[tuple[int, int]]:
        """Per row ``(mu_i, lam_i)`` for rows 1..count (default: length)."""
        count = self.length if count is None else count
        return list(zip(self.mu.parts(count), self.lam.parts(count)))

    def is_normalized(self) -> bool:
        return self.tail == 0

    def is_empty(self) -> bool:
        return self.weight == 0

    def __str__(self) -> str:
        return format_shape(self)


def shape(lam: Iterable[int], mu: Iterable[int] = (), tail: int = 0) -> Shape:
    return Shape(Semipartition(tuple(lam), tail), Semipartition(tuple(mu), tail))


def shift_normalize(sh: Shape) -> Shape:
    """Translate both sides by the constant -tail; the diagram is unchanged."""
    z = -sh.tail
    return Shape(add_const(sh.lam, z), add_const(sh.mu, z))


def shift(sh: Shape, z: int, m: int | None = None) -> Shape:
    return Shape(add_const(sh.lam, z, m), add_const(sh.mu, z, m))


def ferrers_cells(sh: Shape) -> list[tuple[int, int]]:
    """Cells ``(row, column)`` with columns counted from the tail."""
    t = sh.tail
    cells = []
    for i, (a, b) in enumerate(sh.row_bounds(), start=1):
        cells.extend((i, c) for c in range(a - t + 1, b - t + 1))
    return cells


_SHAPE_RE = re.compile(r"^\s*([-\d,\s]*?)\s*(?:/\s*([-\d,\s]*?))?\s*(?:@\s*(-?\d+))?\s*$")


def parse_shape(text: str) -> Shape:
    """Parse ``"l1,l2,.../m1,m2,...@tail"``; ``/mu`` and ``@tail`` are optional."""
    m = _SHAPE_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse shape {text!r}")

    def ints(s):
        s = (s or "").strip()
        return tuple(int(v) for v in s.split(",") if v.strip()) if s else ()

    tail = int(m.group(3)) if m.group(3) else 0
    return shape(ints(m.group(1)), ints(m.group(2)), tail)


def format_shape(sh: Shape) -> str:
    lam = ",".join(str(v) for v in sh.lam.head)
    mu = ",".join(str(v) for v in sh.mu.head)
    text = f"{lam}/{mu}" if mu else lam
    if sh.tail:
        text += f"@{sh.tail}"
    return text


def partitions_in_box(rows: int, cols: int):
    """All partitions with at most ``rows`` parts, each at most ``cols``."""

    def rec(prefix, bound, left):
        yield tuple(prefix)
        if left == 0:
            return
        for v in range(1, bound + 1):
            prefix.append(v)
            yield from rec(prefix, v, left - 1)
            prefix.pop()

    for p in rec([], cols, rows):
        yield p


def shape_lattice(rows: int, cols: int, max_weight: int):
    """Normalized skew shapes lam/mu with lam inside the rows x cols box."""
    boxes = list(partitions_in_box(rows, cols))
    for lam in boxes:
        for mu in boxes:
            if len(mu) > len(lam):
                continue
            padded = mu + (0,) * (len(lam) - len(mu))
            if any(b > a for a, b in zip(lam, padded)):
                continue
            if sum(lam) - sum(mu) > max_weight:
                continue
            yield shape(lam, mu)
