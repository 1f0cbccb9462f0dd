"""
Matrices over a commutative ring (ints or ``Poly``) with 1-based minor calculus.

Index arguments are 1-based. Column and row selections are taken in the order
given, which is what position-preserving exchanges such as ``shuffle`` need.
"""

from __future__ import annotations

import json
import random
from itertools import combinations, permutations
from typing import Callable, Iterable, Sequence

from .exactpoly import Poly, to_text, y


class RingMatrix:
    __slots__ = ("entries", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        entries = tuple(tuple(r) for r in rows)
        if entries:
            widths = {len(r) for r in entries}
            if len(widths) != 1:
                raise ValueError("matrix rows have different lengths")
            ncols = widths.pop()
        self.entries = entries
        self.nrows = len(entries)
        self.ncols = ncols or 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise IndexError(f"entry ({i},{j}) outside {self.nrows}x{self.ncols}")
        return self.entries[i - 1][j - 1]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_integer(self) -> bool:
        return all(isinstance(v, int) for r in self.entries for v in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        return matmul(self, other)

    def to_json(self) -> list:
        return [[v if isinstance(v, int) else to_text(v) for v in r] for r in self.entries]

    def __repr__(self) -> str:
        return f"RingMatrix({json.dumps(self.to_json())})"


def identity(m: int) -> RingMatrix:
    return RingMatrix(([int(i == j) for j in range(m)] for i in range(m)), m)


def from_json(text: str) -> RingMatrix:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("matrix literal must be a list of rows")
    for r in data:
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError("matrix literal entries must be integers")
    return RingMatrix(data)


def generic_matrix(nrows: int, ncols: int, row_offset: int = 0) -> RingMatrix:
    """Entries y_{i+row_offset,j}: independent variables."""
    return RingMatrix(
        ([Poly.var(y(i + row_offset, j)) for j in range(1, ncols + 1)] for i in range(1, nrows + 1)),
        ncols,
    )


def random_int_matrix(nrows: int, ncols: int, rng: random.Random, lo: int = -9, hi: int = 9) -> RingMatrix:
    return RingMatrix(([rng.randint(lo, hi) for _ in range(ncols)] for _ in range(nrows)), ncols)


def _check_indices(idx: Sequence[int], size: int, what: str) -> tuple[int, ...]:
    idx = tuple(idx)
    for v in idx:
        if not 1 <= v <= size:
            raise IndexError(f"{what} index {v} out of range 1..{size}")
    if len(set(idx)) != len(idx):
        raise ValueError(f"repeated {what} index in {idx}")
    return idx


def complement(X: Iterable[int], size: int) -> tuple[int, ...]:
    X = set(X)
    return tuple(i for i in range(1, size + 1) if i not in X)


def minor(a: RingMatrix, R: Sequence[int], C: Sequence[int]) -> RingMatrix:
    R = _check_indices(R, a.nrows, "row")
    C = _check_indices(C, a.ncols, "column")
    return RingMatrix(([a.entries[i - 1][j - 1] for j in C] for i in R), len(C))


def delete_rowcols(a: RingMatrix, X: Iterable[int], Y: Iterable[int]) -> RingMatrix:
    X, Y = tuple(X), tuple(Y)
    _check_indices(X, a.nrows, "row")
    _check_indices(Y, a.ncols, "column")
    return minor(a, complement(X, a.nrows), complement(Y, a.ncols))


def matmul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    if a.ncols != b.nrows:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    rows = []
    for i in range(a.nrows):
        row = []
        for j in range(b.ncols):
            acc = 0
            for k in range(a.ncols):
                acc = acc + a.entries[i][k] * b.entries[k][j]
            row.append(acc)
        rows.append(row)
    return RingMatrix(rows, b.ncols)


def det_bareiss(a: RingMatrix) -> int:
    """Fraction-free elimination; integer entries only."""
    if not a.is_square():
        raise ValueError(f"determinant of non-square {a.shape} matrix")
    m = [list(r) for r in a.entries]
    size = len(m)
    if size == 0:
        return 1
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
        pivot = m[k][k]
        for i in range(k + 1, size):
            mik = m[i][k]
            rowi, rowk = m[i], m[k]
            for j in range(k + 1, size):
                rowi[j] = (rowi[j] * pivot - mik * rowk[j]) // prev
        prev = pivot
    return sign * m[-1][-1]


def det_cofactor(a: RingMatrix):
    """Division-free first-row expansion memoized over column subsets."""
    if not a.is_square():
        raise ValueError(f"determinant of non-square {a.shape} matrix")
    size = a.nrows
    if size == 0:
        return 1
    rows = a.entries
    memo: dict[int, object] = {}

    def rec(r: int, mask: int):
        if r == size:
            return 1
        hit = memo.get(mask)
        if hit is not None:
            return hit
        total = 0
        sign = 1
        for c in range(size):
            if mask & (1 << c):
                continue
            e = rows[r][c]
            if not _is_zero(e):
                sub = rec(r + 1, mask | (1 << c))
                if not _is_zero(sub):
                    term = e * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    return rec(0, 0)


def _is_zero(v) -> bool:
    return v == 0


def det_leibniz(a: RingMatrix):
    """Brute-force permutation sum; the independent oracle for small sizes."""
    if not a.is_square():
        raise ValueError(f"determinant of non-square {a.shape} matrix")
    size = a.nrows
    total = 0
    for perm in permutations(range(size)):
        term = 1
        for i, j in enumerate(perm):
            term = term * a.entries[i][j]
            if _is_zero(term):
                break
        else:
            total = total + term if permutation_sign(perm) > 0 else total - term
    return total


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign via cycle decomposition; ``perm`` may be 0- or 1-based."""
    base = min(perm) if perm else 0
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - base
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det(a: RingMatrix):
    """Exact determinant: Bareiss over ints, memoized cofactor expansion otherwise."""
    if a.is_integer():
        return det_bareiss(a)
    return det_cofactor(a)


DetFn = Callable[[RingMatrix], object]


def detprod_cminors(a: RingMatrix, I: Sequence[int], J: Sequence[int], det_fn: DetFn = det):
    """det(a[I,J]) * det(a[complement I, complement J])."""
    if not a.is_square():
        raise ValueError("detprod_cminors needs a square matrix")
    if len(I) != len(J):
        raise ValueError("I and J must have the same size")
    m = a.nrows
    return det_fn(minor(a, I, J)) * det_fn(minor(a, complement(I, m), complement(J, m)))


def shuffle(S: Sequence[int], X: Sequence[int], Y: Sequence[int]) -> tuple[int, ...]:
    """Replace the elements of X inside S by those of Y, position for position."""
    S, X, Y = tuple(S), tuple(X), tuple(Y)
    if len(X) != len(Y):
        raise ValueError("X and Y must have the same size")
    if not set(X) <= set(S):
        raise ValueError(f"{X} is not a subset of {S}")
    if set(Y) & set(S):
        raise ValueError(f"{Y} meets {S}")
    pos = {s: i for i, s in enumerate(S)}
    if any(pos[b] <= pos[a] for a, b in zip(X, X[1:])):
        raise ValueError("X must appear in S in the same order")
    out = list(S)
    for xv, yv in zip(X, Y):
        out[pos[xv]] = yv
    return tuple(out)


def sumset(S: Iterable[int], X: Sequence[int]) -> int:
    """Sum of the (1-based) positions of the elements of S within X."""
    pos = {v: i for i, v in enumerate(X, start=1)}
    total = 0
    for s in S:
        if s not in pos:
            raise ValueError(f"{s} is not an element of {tuple(X)}")
        total += pos[s]
    return total


def subsets(S: Sequence[int], k: int):
    """k-subsets of S, each in the order inherited from S."""
    return combinations(tuple(S), k)
