"""
Sparse multivariate polynomials with arbitrary-precision integer coefficients.

Two disjoint variable families live in one ring: the ``x`` series
``x1, x2, ...`` used by Schur polynomials, and the generic ``y`` variables
(labelled by an integer ``r`` or a pair ``(i, j)``) used to stand in for
matrix entries.

A monomial is a tuple of ``(Var, exponent)`` pairs sorted by variable, so
monomials and polynomials compare structurally.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, NamedTuple, Union


class Var(NamedTuple):
    kind: str  # 'x' or 'y'
    label: tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == "x":
            return f"x{self.label[0]}"
        if len(self.label) == 1:
            return f"y{self.label[0]}"
        return "y" + "_".join(str(v) for v in self.label)


def x(k: int) -> Var:
    if k < 1:
        raise ValueError(f"x-series index must be >= 1, got {k}")
    return Var("x", (k,))


def y(*label: int) -> Var:
    if len(label) not in (1, 2):
        raise ValueError("y variables carry a label r or a pair (i, j)")
    return Var("y", tuple(label))


Monomial = tuple  # tuple[tuple[Var, int], ...]
ONE_MONOMIAL: Monomial = ()


def monomial(exps: Mapping[Var, int]) -> Monomial:
    """Canonical monomial from a ``{var: exponent}`` map; zero exponents dropped."""
    for e in exps.values():
        if e < 0:
            raise ValueError("negative exponent")
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def monomial_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


@lru_cache(maxsize=1 << 18)
def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_str(m: Monomial) -> str:
    parts = []
    for v, e in m:
        parts.append(str(v) if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def _term_key(item):
    m, _ = item
    return (-monomial_degree(m), [(v, -e) for v, e in m])


Scalar = int
PolyLike = Union["Poly", int]


class Poly:
    """Immutable polynomial; ``terms`` maps monomials to nonzero ints."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c: int) -> Poly:
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def var(cls, v: Var) -> Poly:
        return cls({((v, 1),): 1})

    @classmethod
    def from_counter(cls, counts: Mapping[Monomial, int]) -> Poly:
        return cls(dict(counts))

    # inspection
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def variables(self) -> set[Var]:
        return {v for m in self._terms for v, _ in m}

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(monomial_degree(m) for m in self._terms)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {monomial_degree(m) for m in self._terms}
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=_term_key)

    # arithmetic
    @staticmethod
    def _coerce(other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        if not self._terms:
            return o
        out = dict(self._terms)
        for m, c in o._terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly()
            return Poly({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly()
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = _mono_mul(m1, m2)
                out[m] = get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison
    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation
    def eval_int(self, assignment: Mapping[Var, int]) -> int:
        return eval_int(self, assignment)

    def rename(self, mapping: Mapping[Var, Var]) -> Poly:
        """Apply a variable substitution ``v -> mapping.get(v, v)``."""
        out: Counter = Counter()
        for m, c in self._terms.items():
            d: dict = {}
            for v, e in m:
                w = mapping.get(v, v)
                d[w] = d.get(w, 0) + e
            out[monomial(d)] += c
        return Poly(out)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Poly({to_text(self)!r})"


def to_text(p: PolyLike) -> str:
    """Canonical text: graded-lex descending, explicit signs, ``^`` for powers."""
    p = Poly._coerce(p)
    if not p._terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = _mono_str(m)
        if not body:
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a}*{body}"
        if i == 0:
            out.append(text if sign == "+" else "-" + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


def add(p: PolyLike, q: PolyLike) -> Poly:
    return Poly._coerce(p) + Poly._coerce(q)


def mul(p: PolyLike, q: PolyLike) -> Poly:
    return Poly._coerce(p) * Poly._coerce(q)


def eval_int(p: PolyLike, assignment: Mapping[Var, int]) -> int:
    if isinstance(p, int):
        return p
    total = 0
    for m, c in p._terms.items():
        term = c
        for v, e in m:
            try:
                term *= assignment[v] ** e
            except KeyError:
                raise KeyError(f"no value assigned to variable {v}") from None
        total += term
    return total


@lru_cache(maxsize=4096)
def complete_homogeneous(r: int, lo: int, hi: int) -> Poly:
    """h_r(x_lo, ..., x_hi): the sum of all monomials of degree r."""
    if lo < 1 or lo > hi:
        raise ValueError(f"need 1 <= lo <= hi, got lo={lo}, hi={hi}")
    if r < 0:
        return Poly()
    if r == 0:
        return Poly.const(1)
    counts: Counter = Counter()
    for combo in combinations_with_replacement(range(lo, hi + 1), r):
        counts[monomial(Counter(x(k) for k in combo))] += 1
    return Poly(counts)


def sum_polys(polys: Iterable[PolyLike]) -> Poly:
    out: dict = {}
    for p in polys:
        p = Poly._coerce(p)
        for m, c in p._terms.items():
            out[m] = out.get(m, 0) + c
    return Poly(out)
