"""
Lattice paths on Z^2 with unit steps H = (1, 0) and V = (0, 1).

A horizontal step at height k carries weight x_k, vertical steps weight 1.
Path families are indexed from the right: path i of a shape lam/mu runs from
the lower point (mu_i - i + t, 1) to the upper point (lam_i - i + t, n).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb
from typing import Iterator, NamedTuple, Sequence

from .exactpoly import Monomial, Poly, complete_homogeneous, monomial, x
from .linalg import permutation_sign
from .shapes import Shape, shape
from .tableaux import BudgetExceeded, Tableau


class Point(NamedTuple):
    x: int
    y: int

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class LatticePath:
    start: Point
    steps: str  # over 'H' and 'V'

    def __post_init__(self):
        object.__setattr__(self, "start", Point(*self.start))
        if set(self.steps) - {"H", "V"}:
            raise ValueError(f"steps must be H or V: {self.steps!r}")

    @property
    def end(self) -> Point:
        h = self.steps.count("H")
        return Point(self.start.x + h, self.start.y + len(self.steps) - h)

    def points(self) -> list[Point]:
        px, py = self.start
        out = [Point(px, py)]
        for s in self.steps:
            if s == "H":
                px += 1
            else:
                py += 1
            out.append(Point(px, py))
        return out

    def arcs(self) -> list[tuple[Point, Point]]:
        pts = self.points()
        return list(zip(pts, pts[1:]))

    def h_heights(self) -> list[int]:
        """Heights of the horizontal steps, in order."""
        out = []
        py = self.start.y
        for s in self.steps:
            if s == "H":
                out.append(py)
            else:
                py += 1
        return out

    def weight(self) -> Monomial:
        return monomial(Counter(x(k) for k in self.h_heights()))

    def index_of(self, q: Point) -> int:
        """Number of steps taken when the path reaches q."""
        return self.points().index(q)

    def split(self, k: int) -> tuple[str, str]:
        return self.steps[:k], self.steps[k:]


@dataclass(frozen=True)
class PathTuple:
    """
    Paths p_1..p_m where p_i ends at upper point i and starts at lower point
    ``perm[i-1]`` (1-based).
    """

    paths: tuple[LatticePath, ...]
    perm: tuple[int, ...]
    shape: Shape | None = None
    n: int | None = None
    t: int = 0

    @property
    def m(self) -> int:
        return len(self.paths)

    @property
    def sign(self) -> int:
        return permutation_sign(self.perm)

    def weight(self) -> Monomial:
        counts: Counter = Counter()
        for p in self.paths:
            counts.update(x(k) for k in p.h_heights())
        return monomial(counts)

    def lower_points(self) -> list[Point]:
        return [p.start for p in self.paths]

    def upper_points(self) -> list[Point]:
        return [p.end for p in self.paths]


def endpoints_for_shape(sh: Shape, n: int, t: int = 0, rows: int | None = None):
    """Lower points (mu_i - i + t, 1) and upper points (lam_i - i + t, n), i = 1..m."""
    if n < 1:
        raise ValueError("n must be positive")
    m = sh.length if rows is None else rows
    bounds = sh.row_bounds(m)
    lower = [Point(a - i + t, 1) for i, (a, _) in enumerate(bounds, start=1)]
    upper = [Point(b - i + t, n) for i, (_, b) in enumerate(bounds, start=1)]
    return lower, upper


def shape_for_points(lower: Sequence[Point], upper: Sequence[Point]) -> tuple[Shape, int]:
    """
    A normalized shape and shift t whose endpoints are the given points.

    Points are taken in right-to-left order; mu is anchored so its last part
    is 1, which keeps every row inside the shape's length.
    """
    lower = sorted(lower, key=lambda p: -p.x)
    upper = sorted(upper, key=lambda p: -p.x)
    m = len(lower)
    if len(upper) != m:
        raise ValueError("need as many upper as lower points")
    if m == 0:
        return shape(()), 0
    t = lower[-1].x + m - 1
    mu = [p.x + i - t for i, p in enumerate(lower, start=1)]
    lam = [p.x + i - t for i, p in enumerate(upper, start=1)]
    return shape(lam, mu), t


def path_from_heights(start: Point, heights: Sequence[int], top: int) -> LatticePath:
    steps = []
    level = start.y
    for h in heights:
        if h < level:
            raise ValueError("heights must be weakly increasing and >= the start level")
        steps.append("V" * (h - level) + "H")
        level = h
    if top < level:
        raise ValueError("path would have to move down")
    steps.append("V" * (top - level))
    return LatticePath(start, "".join(steps))


def tableau_to_paths(T: Tableau, t: int = 0) -> PathTuple:
    """Row i becomes path i; its k-th H step sits at the height of the k-th entry."""
    lower, upper = endpoints_for_shape(T.shape, T.n, t)
    paths = tuple(path_from_heights(s, row, T.n) for s, row in zip(lower, T.rows))
    return PathTuple(paths, tuple(range(1, len(paths) + 1)), T.shape, T.n, t)


def paths_to_tableau(P: PathTuple) -> Tableau:
    if list(P.perm) != list(range(1, P.m + 1)):
        raise ValueError("only identity-permutation tuples correspond to tableaux")
    if not is_nonintersecting(P):
        raise ValueError("intersecting tuples do not correspond to tableaux")
    if P.shape is None or P.n is None:
        raise ValueError("path tuple carries no shape context")
    return Tableau(P.shape, tuple(tuple(p.h_heights()) for p in P.paths), P.n)


def point_multiplicity(P: PathTuple) -> Counter:
    counts: Counter = Counter()
    for p in P.paths:
        counts.update(p.points())
    return counts


def is_nonintersecting(P: PathTuple) -> bool:
    seen: set = set()
    for p in P.paths:
        pts = p.points()
        if seen.intersection(pts):
            return False
        seen.update(pts)
    return True


def intersection_points(P: PathTuple) -> list[Point]:
    """All shared points, in lexicographic order."""
    return sorted(q for q, c in point_multiplicity(P).items() if c >= 2)


def lgv_involution(P: PathTuple) -> PathTuple:
    """Swap the initial segments of the two paths through the smallest shared point."""
    shared = intersection_points(P)
    if not shared:
        raise ValueError("the LGV involution is defined on intersecting tuples only")
    q = shared[0]
    through = [i for i, p in enumerate(P.paths) if q in p.points()]
    assert len(through) == 2, f"{len(through)} paths meet at the minimal point {q}"
    k, l = through
    pk, pl = P.paths[k], P.paths[l]
    hk, tk = pk.split(pk.index_of(q))
    hl, tl = pl.split(pl.index_of(q))
    paths = list(P.paths)
    paths[k] = LatticePath(pl.start, hl + tk)
    paths[l] = LatticePath(pk.start, hk + tl)
    perm = list(P.perm)
    perm[k], perm[l] = perm[l], perm[k]
    return PathTuple(tuple(paths), tuple(perm), P.shape, P.n, P.t)


def all_paths(v: Point, w: Point) -> list[LatticePath]:
    dx, dy = w.x - v.x, w.y - v.y
    if dx < 0 or dy < 0:
        return []
    total = dx + dy
    out = []
    for hs in combinations(range(total), dx):
        steps = ["V"] * total
        for i in hs:
            steps[i] = "H"
        out.append(LatticePath(v, "".join(steps)))
    return out


def count_paths(v: Point, w: Point) -> int:
    dx, dy = w.x - v.x, w.y - v.y
    if dx < 0 or dy < 0:
        return 0
    return comb(dx + dy, dx)


def gf_paths(v: Point, w: Point) -> Poly:
    """Generating function of all paths v -> w: h_{dx}(x_{v.y} .. x_{w.y})."""
    dx = w.x - v.x
    if dx < 0 or w.y < v.y:
        return Poly()
    return complete_homogeneous(dx, v.y, w.y)


def count_signed_tuples(sh: Shape, n: int, t: int = 0) -> int:
    lower, upper = endpoints_for_shape(sh, n, t)
    m = len(lower)
    total = 0
    for perm in permutations(range(m)):
        c = 1
        for j in range(m):
            c *= count_paths(lower[perm[j]], upper[j])
        total += c
    return total


def enumerate_signed_tuples(sh: Shape, n: int, t: int = 0, budget: int = 200_000) -> Iterator[PathTuple]:
    """Every tuple over every permutation: the set whose signed weights give det(jt)."""
    total = count_signed_tuples(sh, n, t)
    if total > budget:
        raise BudgetExceeded(f"{total} signed tuples exceed the budget of {budget} (raise --max-tuples)")
    lower, upper = endpoints_for_shape(sh, n, t)
    m = len(lower)
    for perm in permutations(range(m)):
        choices = [all_paths(lower[perm[j]], upper[j]) for j in range(m)]
        if any(not c for c in choices):
            continue
        one_based = tuple(p + 1 for p in perm)
        for paths in product(*choices):
            yield PathTuple(tuple(paths), one_based, sh, n, t)


def signed_weight_sum(tuples) -> Poly:
    counts: Counter = Counter()
    for P in tuples:
        counts[P.weight()] += P.sign
    return Poly(counts)


def random_path(v: Point, w: Point, rng: random.Random) -> LatticePath:
    dx, dy = w.x - v.x, w.y - v.y
    if dx < 0 or dy < 0:
        raise ValueError("no path between these points")
    steps = ["H"] * dx + ["V"] * dy
    rng.shuffle(steps)
    return LatticePath(v, "".join(steps))


def random_tuple(sh: Shape, n: int, rng: random.Random, t: int = 0) -> PathTuple | None:
    """A random element of the signed set for a random permutation, if one exists."""
    lower, upper = endpoints_for_shape(sh, n, t)
    m = len(lower)
    perm = list(range(m))
    rng.shuffle(perm)
    paths = []
    for j in range(m):
        v, w = lower[perm[j]], upper[j]
        if count_paths(v, w) == 0:
            return None
        paths.append(random_path(v, w, rng))
    return PathTuple(tuple(paths), tuple(p + 1 for p in perm), sh, n, t)


def left_label(i: int, m: int) -> int:
    """Position of right-counted path i when paths are counted from the left."""
    return m + 1 - i
