"""
Jacobi-Trudi matrices of complete homogeneous polynomials, the dictionary
between deleting rows/columns and deleting parts, and the substitution of
generic variables for the h-entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .exactpoly import Poly, complete_homogeneous, y
from .linalg import RingMatrix, delete_rowcols
from .shapes import Semipartition, Shape, delete_parts, partition


def h_index(lam: Semipartition, mu: Semipartition, i: int, j: int) -> int:
    return lam[j] - mu[i] - j + i


def h_matrix(lam: Semipartition, mu: Semipartition, n: int, nrows: int, ncols: int) -> RingMatrix:
    """Entries h_{lam_j - mu_i - j + i}(x1..xn) for an explicit size."""
    return RingMatrix(
        (
            [complete_homogeneous(h_index(lam, mu, i, j), 1, n) for j in range(1, ncols + 1)]
            for i in range(1, nrows + 1)
        ),
        ncols,
    )


def jt_matrix(sh: Shape, n: int, size: int | None = None) -> RingMatrix:
    """The m x m Jacobi-Trudi matrix, m = length(sh) unless ``size`` is given."""
    m = sh.length if size is None else size
    return h_matrix(sh.lam, sh.mu, n, m, m)


def jt_indices(sh: Shape, size: int | None = None) -> list[list[int]]:
    m = sh.length if size is None else size
    return [[h_index(sh.lam, sh.mu, i, j) for j in range(1, m + 1)] for i in range(1, m + 1)]


@dataclass
class DeletionVerdict:
    ok: bool
    rowdel: tuple[int, ...]
    coldel: tuple[int, ...]
    mismatches: list = field(default_factory=list)


def check_minor_deletion(sh: Shape, n: int, rowdel: Sequence[int], coldel: Sequence[int]) -> DeletionVerdict:
    """
    Compare the minor of jt(sh) with rows/cols deleted against the h-matrix
    built from mu with the row indices deleted and lam with the column
    indices deleted.
    """
    rowdel, coldel = tuple(rowdel), tuple(coldel)
    m = sh.length
    if any(not 1 <= k <= m for k in rowdel + coldel):
        raise ValueError("deletion indices must lie in 1..length")
    minor = delete_rowcols(jt_matrix(sh, n), rowdel, coldel)
    lam2 = delete_parts(sh.lam, coldel)
    mu2 = delete_parts(sh.mu, rowdel)
    built = h_matrix(lam2, mu2, n, m - len(rowdel), m - len(coldel))
    bad = [
        (i, j)
        for i in range(1, minor.nrows + 1)
        for j in range(1, minor.ncols + 1)
        if minor[i, j] != built[i, j]
    ]
    return DeletionVerdict(not bad, rowdel, coldel, bad)


def distinct_entry_partition(m: int) -> Semipartition:
    """lam_j = (m - j + 1) * m: every index lam_j - j + i, 1 <= i,j <= m, differs."""
    if m < 1:
        raise ValueError("m must be positive")
    lam = partition(*[(m - j + 1) * m for j in range(1, m + 1)])
    idx = [lam[j] - j + i for i in range(1, m + 1) for j in range(1, m + 1)]
    assert len(set(idx)) == len(idx), "h-indices are not pairwise distinct"
    return lam


def genericize(sh: Shape, n: int | None = None, require_distinct: bool = True) -> RingMatrix:
    """
    Replace each h_r in jt(sh) by the variable y_r (h_0 -> 1, h_{r<0} -> 0).

    ``n`` is accepted for symmetry with ``jt_matrix``; the generic matrix does
    not depend on it.
    """
    idx = jt_indices(sh)
    live = [r for row in idx for r in row if r > 0]
    if require_distinct and len(set(live)) != len(live):
        raise ValueError(f"jt({sh}) repeats an h-index: {sorted(live)}")

    def entry(r):
        if r < 0:
            return 0
        if r == 0:
            return 1
        return Poly.var(y(r))

    return RingMatrix(([entry(r) for r in row] for row in idx), len(idx))
