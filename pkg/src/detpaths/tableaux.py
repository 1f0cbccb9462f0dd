"""
Semistandard skew Young tableaux and the tableau-sum route to skew Schur
polynomials, plus the bialternant quotient evaluated at integer points.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .exactpoly import Monomial, Poly, monomial, x
from .shapes import Shape, ferrers_cells


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""


@dataclass(frozen=True)
class Tableau:
    shape: Shape
    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        bounds = self.shape.row_bounds()
        if len(self.rows) != len(bounds):
            raise ValueError("row count does not match the shape")
        for row, (a, b) in zip(self.rows, bounds):
            if len(row) != b - a:
                raise ValueError("row length does not match the shape")
            if any(not 1 <= e <= self.n for e in row):
                raise ValueError(f"entries must lie in 1..{self.n}")
            if any(q < p for p, q in zip(row, row[1:])):
                raise ValueError("rows must weakly increase")
        grid = self.as_dict()
        for (i, c), e in grid.items():
            below = grid.get((i + 1, c))
            if below is not None and below <= e:
                raise ValueError("columns must strictly increase")

    @classmethod
    def _trusted(cls, shape: Shape, rows, n: int) -> "Tableau":
        # skips validation; only for rows produced by the enumerators below
        t = object.__new__(cls)
        object.__setattr__(t, "shape", shape)
        object.__setattr__(t, "rows", rows)
        object.__setattr__(t, "n", n)
        return t

    def as_dict(self) -> dict[tuple[int, int], int]:
        """Entries keyed by the cells of ``ferrers_cells(shape)``."""
        cells = ferrers_cells(self.shape)
        flat = [e for row in self.rows for e in row]
        return dict(zip(cells, flat))

    def count(self, k: int) -> int:
        return sum(row.count(k) for row in self.rows)

    def __str__(self) -> str:
        t = self.shape.tail
        lines = []
        for row, (a, _) in zip(self.rows, self.shape.row_bounds()):
            lines.append("  " * (a - t) + " ".join(f"{e:>1}" for e in row))
        return "\n".join(lines)


def _columns_below(bounds: list[tuple[int, int]]) -> dict[tuple[int, int], int]:
    below = {}
    for i in range(len(bounds) - 1, -1, -1):
        a, b = bounds[i]
        for c in range(a + 1, b + 1):
            nxt = below.get((i + 1, c))
            below[(i, c)] = 0 if nxt is None else nxt + 1
    return below


def _ssyt_rows(sh: Shape, n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    if n < 1:
        raise ValueError("n must be positive")
    bounds = sh.row_bounds()
    cells = [(i, c) for i, (a, b) in enumerate(bounds) for c in range(a + 1, b + 1)]
    below = _columns_below(bounds)
    grid: dict[tuple[int, int], int] = {}

    def rec(idx):
        if idx == len(cells):
            yield tuple(
                tuple(grid[(i, c)] for c in range(a + 1, b + 1))
                for i, (a, b) in enumerate(bounds)
            )
            return
        i, c = cells[idx]
        lo = max(grid.get((i, c - 1), 1), grid.get((i - 1, c), 0) + 1)
        hi = n - below[(i, c)]
        for e in range(lo, hi + 1):
            grid[(i, c)] = e
            yield from rec(idx + 1)
        grid.pop((i, c), None)

    yield from rec(0)


def enumerate_ssyt(sh: Shape, n: int) -> Iterator[Tableau]:
    """
    All n-semistandard tableaux of shape ``sh``.

    Cells are filled row by row, left to right, trying the smallest feasible
    entry first, so the output order is deterministic.
    """
    for rows in _ssyt_rows(sh, n):
        yield Tableau._trusted(sh, rows, n)


def random_ssyt(sh: Shape, n: int, rng: random.Random) -> Tableau | None:
    """
    A random n-semistandard tableau (not uniform), or None if none exists.

    Each cell draws uniformly from its feasible range given the cells already
    filled; the range is never empty once any tableau exists.
    """
    bounds = sh.row_bounds()
    below = _columns_below(bounds)
    if any(v >= n for v in below.values()):
        return None
    grid: dict[tuple[int, int], int] = {}
    rows = []
    for i, (a, b) in enumerate(bounds):
        row = []
        for c in range(a + 1, b + 1):
            lo = max(grid.get((i, c - 1), 1), grid.get((i - 1, c), 0) + 1)
            hi = n - below[(i, c)]
            e = rng.randint(lo, hi)
            grid[(i, c)] = e
            row.append(e)
        rows.append(tuple(row))
    return Tableau._trusted(sh, tuple(rows), n)


def tableau_weight(t: Tableau) -> Monomial:
    return monomial(Counter(x(e) for row in t.rows for e in row))


def skew_schur(sh: Shape, n: int, budget: int | None = None) -> Poly:
    """s_{lam/mu}(x1..xn) as the sum of tableau weights."""
    content: Counter = Counter()
    for k, rows in enumerate(_ssyt_rows(sh, n)):
        if budget is not None and k >= budget:
            raise BudgetExceeded(f"more than {budget} tableaux of shape {sh} (raise --max-tableaux)")
        exps = [0] * (n + 1)
        for row in rows:
            for e in row:
                exps[e] += 1
        content[tuple(exps)] += 1
    return Poly({monomial({x(k): e for k, e in enumerate(exps) if e}): c for exps, c in content.items()})


def _int_det(rows: list[list[int]]) -> int:
    # local Bareiss elimination; kept separate from linalg so the bialternant
    # route shares no code with the Jacobi-Trudi route
    m = [list(r) for r in rows]
    size = len(m)
    sign, prev = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if size else 1


def bialternant_eval(lam: Sequence[int], point: Sequence[int]) -> Fraction:
    """det(x_i^(lam_j + n - j)) / det(x_i^(n - j)) at an integer point."""
    n = len(point)
    lam = tuple(lam)
    if len(lam) > n:
        raise ValueError("partition has more parts than variables")
    if len(set(point)) != n:
        raise ValueError("point coordinates must be pairwise distinct")
    parts = lam + (0,) * (n - len(lam))
    num = [[xi ** (parts[j] + n - 1 - j) for j in range(n)] for xi in point]
    den = [[xi ** (n - 1 - j) for j in range(n)] for xi in point]
    return Fraction(_int_det(num), _int_det(den))
