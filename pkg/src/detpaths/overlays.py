"""
Overlays of a green and a red nonintersecting path family, bicoloured trails
and the recolouring involution.

Every arc of an overlay is carried once per colour that uses it. At a lattice
point the incident arc ends are joined as follows:

* two incoming ends (one per colour) are joined to each other,
* two outgoing ends are joined to each other,
* a single incoming and a single outgoing end of the same colour are joined.

Anything left over is a free end; free ends sit exactly at the points used as
an endpoint by one colour only. A trail is a maximal walk through joined ends;
it alternates direction whenever it changes colour. An arc used by both
colours closes up into a two-arc cycle, so swapping colours on it is a no-op.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .exactpoly import Monomial, Poly, monomial, x
from .paths import LatticePath, PathTuple, Point, shape_for_points, tableau_to_paths
from .tableaux import BudgetExceeded, enumerate_ssyt, random_ssyt
from .verdict import Verdict

GREEN, RED = "green", "red"
OTHER = {GREEN: RED, RED: GREEN}

Arc = tuple  # (tail point, head point, colour)


@dataclass(frozen=True, eq=False)
class Overlay:
    green: PathTuple
    red: PathTuple
    n: int

    def family(self, colour: str) -> PathTuple:
        return self.green if colour == GREEN else self.red

    def weight(self) -> Monomial:
        counts: Counter = Counter()
        for fam in (self.green, self.red):
            for p in fam.paths:
                counts.update(x(k) for k in p.h_heights())
        return monomial(counts)

    def arcs(self) -> list[Arc]:
        return [(p, q, colour) for colour in (GREEN, RED) for path in self.family(colour).paths for p, q in path.arcs()]

    def endpoints(self, colour: str) -> tuple[frozenset, frozenset]:
        fam = self.family(colour)
        return frozenset(fam.lower_points()), frozenset(fam.upper_points())

    def coloured_points(self) -> dict[Point, str]:
        """Points that are endpoints of exactly one colour, with that colour."""
        g = set().union(*self.endpoints(GREEN))
        r = set().union(*self.endpoints(RED))
        return {q: GREEN if q in g else RED for q in g ^ r}

    def key(self) -> tuple:
        return self.green.paths, self.red.paths

    def __eq__(self, other) -> bool:
        if not isinstance(other, Overlay):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())


@dataclass(frozen=True)
class BicolouredTrail:
    start: Point
    end: Point
    arcs: tuple[Arc, ...]

    def endpoints(self) -> frozenset:
        return frozenset((self.start, self.end))


def _ends_by_point(arcs: Sequence[Arc]) -> dict[Point, dict[str, list]]:
    at: dict = {}
    for arc in arcs:
        p, q, _ = arc
        at.setdefault(p, {"in": [], "out": []})["out"].append(arc)
        at.setdefault(q, {"in": [], "out": []})["in"].append(arc)
    return at


def _junctions(arcs: Sequence[Arc]):
    """
    Map each arc end ``(arc, point)`` to the end it is joined with, or None if
    the end is free.
    """
    joined: dict = {}
    for v, ends in _ends_by_point(arcs).items():
        ins, outs = ends["in"], ends["out"]
        if len(ins) > 2 or len(outs) > 2:
            raise ValueError(f"more than one path of a colour meets {v}")
        pairs = []
        if len(ins) == 2:
            pairs.append((ins[0], ins[1]))
            ins = []
        if len(outs) == 2:
            pairs.append((outs[0], outs[1]))
            outs = []
        if len(ins) == 1 and len(outs) == 1 and ins[0][2] == outs[0][2]:
            pairs.append((ins[0], outs[0]))
            ins, outs = [], []
        for a, b in pairs:
            joined[(a, v)] = (b, v)
            joined[(b, v)] = (a, v)
        for a in ins + outs:
            joined[(a, v)] = None
    return joined


def free_ends(o: Overlay) -> dict[Point, Arc]:
    out = {}
    for (arc, v), partner in _junctions(o.arcs()).items():
        if partner is None:
            if v in out:
                raise ValueError(f"two free ends at {v}")
            out[v] = arc
    return out


def _walk(joined, arc: Arc, v: Point) -> tuple[list[Arc], Point]:
    """Leave v along ``arc`` and keep following joined ends."""
    trail = []
    while True:
        trail.append(arc)
        p, q, _ = arc
        w = q if v == p else p
        nxt = joined[(arc, w)]
        if nxt is None:
            return trail, w
        arc, v = nxt[0], w


def trail_from(o: Overlay, s: Point) -> BicolouredTrail:
    s = Point(*s)
    joined = _junctions(o.arcs())
    starts = [arc for (arc, v), partner in joined.items() if v == s and partner is None]
    if len(starts) != 1:
        raise ValueError(f"{s} is not a free endpoint of the overlay")
    arcs, end = _walk(joined, starts[0], s)
    return BicolouredTrail(s, end, tuple(arcs))


def all_trails(o: Overlay) -> list[BicolouredTrail]:
    """The open trails, each listed once, started from its lexicographically smaller end."""
    joined = _junctions(o.arcs())
    out = []
    for (arc, v), partner in sorted(joined.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        if partner is None:
            arcs, end = _walk(joined, arc, v)
            if v < end:
                out.append(BicolouredTrail(v, end, tuple(arcs)))
    return out


def matching(o: Overlay) -> frozenset:
    """The pairing of free endpoints by trails: the overlay's matching class."""
    return frozenset(t.endpoints() for t in all_trails(o))


def trail_structure(o: Overlay) -> frozenset:
    """Trails with colours forgotten: endpoints plus the underlying arc multiset."""
    return frozenset(
        (t.endpoints(), frozenset(Counter((p, q) for p, q, _ in t.arcs).items())) for t in all_trails(o)
    )


def _paths_from_arcs(arcs: Sequence[Arc], colour: str) -> list[LatticePath]:
    nxt: dict = {}
    heads = set()
    for p, q, c in arcs:
        if c != colour:
            continue
        if p in nxt:
            raise ValueError(f"two {colour} arcs leave {p}")
        if q in heads:
            raise ValueError(f"two {colour} arcs enter {q}")
        nxt[p] = q
        heads.add(q)
    paths = []
    for start in sorted(set(nxt) - heads, key=lambda v: -v.x):
        steps = []
        v = start
        while v in nxt:
            w = nxt[v]
            steps.append("H" if w.y == v.y else "V")
            v = w
        paths.append(LatticePath(start, "".join(steps)))
    return paths


def _family(paths: list[LatticePath], n: int) -> PathTuple:
    paths = sorted(paths, key=lambda p: -p.end.x)
    seen: set = set()
    for p in paths:
        pts = p.points()
        if seen.intersection(pts):
            raise ValueError("recolouring produced an intersecting family")
        seen.update(pts)
    if [p.start for p in paths] != sorted((p.start for p in paths), key=lambda v: -v.x):
        raise ValueError("recolouring produced a family that is not right-to-left ordered")
    return PathTuple(tuple(paths), tuple(range(1, len(paths) + 1)), None, n)


def recolour(o: Overlay, t: BicolouredTrail) -> Overlay:
    arcs = o.arcs()
    members = Counter(t.arcs)
    if any(Counter(arcs)[a] < c for a, c in members.items()):
        raise ValueError("the trail does not belong to this overlay")
    swapped = [(p, q, OTHER[c]) if (p, q, c) in members else (p, q, c) for p, q, c in arcs]
    green = _family(_paths_from_arcs(swapped, GREEN), o.n)
    red = _family(_paths_from_arcs(swapped, RED), o.n)
    return Overlay(green, red, o.n)


# families and enumeration ------------------------------------------------------


def families_for_points(lower: Sequence[Point], upper: Sequence[Point], n: int) -> Iterator[PathTuple]:
    """Every nonintersecting family joining the lower points (height 1) to the upper points (height n)."""
    if not lower and not upper:
        yield PathTuple((), (), None, n)
        return
    try:
        sh, t = shape_for_points(lower, upper)
    except ValueError:
        return
    for T in enumerate_ssyt(sh, n):
        yield tableau_to_paths(T, t)


def random_family(lower: Sequence[Point], upper: Sequence[Point], n: int, rng: random.Random) -> PathTuple | None:
    if not lower:
        return PathTuple((), (), None, n)
    sh, t = shape_for_points(lower, upper)
    T = random_ssyt(sh, n, rng)
    return None if T is None else tableau_to_paths(T, t)


def enumerate_overlays(
    green_points: tuple[Sequence[Point], Sequence[Point]],
    red_points: tuple[Sequence[Point], Sequence[Point]],
    n: int,
    budget: int = 200_000,
) -> Iterator[Overlay]:
    """All pairs (green family, red family) for the given lower/upper point sets."""
    if n < 2:
        raise ValueError("overlays need n >= 2 so that lower and upper points differ")
    greens = list(families_for_points(*green_points, n))
    reds = list(families_for_points(*red_points, n))
    if len(greens) * len(reds) > budget:
        raise BudgetExceeded(f"{len(greens) * len(reds)} overlays exceed the budget of {budget} (raise --max-overlays)")
    for g, r in product(greens, reds):
        yield Overlay(g, r, n)


def overlay_gf(overlays) -> Poly:
    return Poly(Counter(o.weight() for o in overlays))


# the condensation instance -------------------------------------------------------


def dodgson_configuration(lam: Sequence[int], n: int) -> tuple[list[Point], list[Point]]:
    """Lower points (-i, 1) and upper points (lam_i - i, n), i = 1..m, counted from the right."""
    lam = tuple(lam)
    lower = [Point(-i, 1) for i in range(1, len(lam) + 1)]
    upper = [Point(p - i, n) for i, p in enumerate(lam, start=1)]
    return lower, upper


def _pick(points: Sequence[Point], idx) -> list[Point]:
    return [points[i - 1] for i in idx]


def dodgson_classes(lam: Sequence[int], n: int) -> dict[str, tuple]:
    """
    Point sets (green lower, green upper, red lower, red upper) of the three
    products in the condensation identity; A + C = B.

    A: all points green, red on the inner points 2..m-1.
    B: green on 2..m, red on 1..m-1 (both lower and upper).
    C: green lower 2..m with upper 1..m-1, red lower 1..m-1 with upper 2..m.
    """
    m = len(lam)
    if m < 2:
        raise ValueError("need at least two parts")
    lower, upper = dodgson_configuration(lam, n)
    full, inner = range(1, m + 1), range(2, m)
    head, tail = range(1, m), range(2, m + 1)
    layout = {
        "A": (full, full, inner, inner),
        "B": (tail, tail, head, head),
        "C": (tail, head, head, tail),
    }
    return {
        name: (_pick(lower, gl), _pick(upper, gu), _pick(lower, rl), _pick(upper, ru))
        for name, (gl, gu, rl, ru) in layout.items()
    }


def classify(o: Overlay, classes: dict[str, tuple]) -> str | None:
    key = (
        frozenset(o.green.lower_points()),
        frozenset(o.green.upper_points()),
        frozenset(o.red.lower_points()),
        frozenset(o.red.upper_points()),
    )
    for name, pts in classes.items():
        if key == tuple(frozenset(p) for p in pts):
            return name
    return None


def class_overlays(lam: Sequence[int], n: int, budget: int = 200_000) -> dict[str, list[Overlay]]:
    out = {}
    for name, (gl, gu, rl, ru) in dodgson_classes(lam, n).items():
        out[name] = list(enumerate_overlays((gl, gu), (rl, ru), n, budget))
    return out


def random_class_overlay(lam: Sequence[int], n: int, cls: str, rng: random.Random) -> Overlay | None:
    gl, gu, rl, ru = dodgson_classes(lam, n)[cls]
    g = random_family(gl, gu, n, rng)
    r = random_family(rl, ru, n, rng)
    if g is None or r is None:
        return None
    return Overlay(g, r, n)


def dodgson_switch(o: Overlay, s: Point) -> Overlay:
    """Recolour the trail that starts in the rightmost upper coloured point s."""
    return recolour(o, trail_from(o, s))


def verify_dodgson_bijection(lam: Sequence[int], n: int, budget: int = 200_000) -> Verdict:
    """
    Enumerate the overlay sets A, B, C, recolour the trail from t1 on every
    overlay and confirm that this is a weight-preserving bijection A + C -> B
    whose inverse is the same recolouring.
    """
    lam = tuple(lam)
    params = {"lambda": list(lam), "n": n}
    classes = dodgson_classes(lam, n)
    sets = class_overlays(lam, n, budget)
    s = dodgson_configuration(lam, n)[1][0]
    violations: list[str] = []
    image_of_b: dict[Overlay, str] = {}
    images: Counter = Counter()

    for name in ("A", "C"):
        for o in sets[name]:
            o2 = dodgson_switch(o, s)
            if classify(o2, classes) != "B":
                violations.append(f"{name} overlay maps outside B")
            if o2.weight() != o.weight():
                violations.append(f"{name} overlay changes weight")
            if dodgson_switch(o2, s) != o:
                violations.append(f"{name} overlay: recolouring is not an involution")
            images[o2] += 1
    for o in sets["B"]:
        o2 = dodgson_switch(o, s)
        cls = classify(o2, classes)
        if cls not in ("A", "C"):
            violations.append("B overlay maps outside A and C")
        if o2.weight() != o.weight():
            violations.append("B overlay changes weight")
        if dodgson_switch(o2, s) != o:
            violations.append("B overlay: recolouring is not an involution")
        image_of_b[o] = cls
    if any(c > 1 for c in images.values()):
        violations.append("two overlays share an image in B")
    if set(images) != set(sets["B"]):
        violations.append("the image of A and C does not cover B")

    weights = {k: Counter(o.weight() for o in v) for k, v in sets.items()}
    multiset_ok = weights["A"] + weights["C"] == weights["B"]
    if not multiset_ok:
        violations.append("weight multisets differ: A + C != B")

    notes = [
        f"|A|={len(sets['A'])} |B|={len(sets['B'])} |C|={len(sets['C'])}",
        f"B splits as {sum(1 for c in image_of_b.values() if c == 'A')} to A, "
        f"{sum(1 for c in image_of_b.values() if c == 'C')} to C",
    ]
    trials = sum(len(v) for v in sets.values())
    if violations:
        summary = Counter(violations)
        cx = {"violations": [f"{k} (x{c})" for k, c in sorted(summary.items())]}
        return Verdict("dodgson-bijection", params, "bijective", trials, "fail", cx, None, False, notes)
    return Verdict("dodgson-bijection", params, "bijective", trials, "pass", None, None, trials == 0, notes)
