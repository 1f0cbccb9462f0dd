from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from detpaths.exactpoly import (
    Poly,
    add,
    complete_homogeneous,
    eval_int,
    monomial,
    monomial_degree,
    mul,
    to_text,
    x,
    y,
)

X1, X2, X3 = (Poly.var(x(k)) for k in (1, 2, 3))


def test_h2_in_three_variables_has_all_six_monomials():
    expected = X1 * X1 + X2 * X2 + X3 * X3 + X1 * X2 + X1 * X3 + X2 * X3
    assert complete_homogeneous(2, 1, 3) == expected
    assert to_text(complete_homogeneous(2, 1, 3)) == "x1^2 + x1*x2 + x1*x3 + x2^2 + x2*x3 + x3^2"


def test_h0_is_one_and_negative_index_is_zero():
    assert complete_homogeneous(0, 1, 5) == 1
    assert complete_homogeneous(-3, 1, 2) == 0
    assert complete_homogeneous(-3, 1, 2).is_zero()


@pytest.mark.parametrize("lo,hi", [(0, 2), (3, 2), (-1, 4)])
def test_complete_homogeneous_rejects_bad_ranges(lo, hi):
    with pytest.raises(ValueError):
        complete_homogeneous(1, lo, hi)


def test_add_examples():
    assert add(X1, -X1) == 0
    h1 = complete_homogeneous(1, 1, 2)
    assert add(h1, h1) == 2 * X1 + 2 * X2
    assert add(Poly(), X3) == X3
    assert add(0, X3) == X3


def test_mul_examples():
    assert mul(X1 + X2, X1 - X2) == X1 * X1 - X2 * X2
    p = 3 * X1 * X2 - 7
    assert mul(p, 1) == p
    h1 = complete_homogeneous(1, 1, 2)
    assert mul(h1, h1) == X1 ** 2 + 2 * X1 * X2 + X2 ** 2


def test_eval_examples():
    assert eval_int(complete_homogeneous(2, 1, 3), {x(1): 1, x(2): 1, x(3): 1}) == 6
    assert eval_int(Poly(), {}) == 0
    assert eval_int(X1 * X2, {x(1): 3, x(2): -2}) == -6


def test_eval_missing_variable():
    with pytest.raises(KeyError):
        eval_int(X1 + X2, {x(1): 1})


def test_variable_namespaces_are_disjoint():
    assert x(1) != y(1)
    assert Poly.var(x(1)) != Poly.var(y(1))
    assert str(y(1, 2)) == "y1_2"
    with pytest.raises(ValueError):
        x(0)


def test_zero_coefficients_are_not_stored():
    p = X1 + X2 - X2
    assert len(p) == 1
    assert monomial({x(1): 0, x(2): 1}) == monomial({x(2): 1})
    assert monomial_degree(monomial({})) == 0


def test_text_form_signs_and_constants():
    assert to_text(Poly()) == "0"
    assert to_text(Poly.const(-4)) == "-4"
    assert to_text(X1 - 2 * X2 + 1) == "x1 - 2*x2 + 1"


def test_big_coefficients_stay_exact():
    p = (X1 + 1) ** 40
    assert p.coeff(monomial({x(1): 20})) == comb(40, 20)
    assert eval_int(p, {x(1): 10**6}) == (10**6 + 1) ** 40


@given(st.integers(0, 6), st.integers(1, 4), st.integers(0, 3))
def test_h_term_count_and_degree(r, lo, span):
    h = complete_homogeneous(r, lo, lo + span)
    assert len(h) == comb(r + span, span)
    assert all(monomial_degree(m) == r and c == 1 for m, c in h.items())


small_ints = st.integers(-5, 5)


@st.composite
def polys(draw):
    terms = draw(st.lists(st.tuples(small_ints, st.integers(0, 2), st.integers(0, 2), st.integers(0, 1)), max_size=4))
    p = Poly()
    for c, e1, e2, e3 in terms:
        p = p + c * X1 ** e1 * X2 ** e2 * Poly.var(y(1)) ** e3
    return p


@given(polys(), polys(), polys())
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0


@given(polys(), polys(), small_ints, small_ints, small_ints)
def test_eval_is_a_homomorphism(p, q, a, b, c):
    pt = {x(1): a, x(2): b, y(1): c}
    assert eval_int(p + q, pt) == eval_int(p, pt) + eval_int(q, pt)
    assert eval_int(p * q, pt) == eval_int(p, pt) * eval_int(q, pt)


@given(polys(), polys())
def test_degree_is_additive_for_nonzero_homogeneous_products(p, q):
    for a in (p, q):
        if a.is_zero():
            return
    p_top = Poly({m: c for m, c in p.items() if monomial_degree(m) == p.degree()})
    q_top = Poly({m: c for m, c in q.items() if monomial_degree(m) == q.degree()})
    assert (p_top * q_top).degree() == p_top.degree() + q_top.degree()
    assert (p_top * q_top).is_homogeneous()


def test_to_text_accepts_plain_integers():
    assert to_text(1) == "1"
    assert to_text(0) == "0"
