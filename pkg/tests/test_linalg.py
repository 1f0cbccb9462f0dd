import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from detpaths.exactpoly import Poly, y
from detpaths.jacobitrudi import jt_matrix
from detpaths.linalg import (
    RingMatrix,
    complement,
    delete_rowcols,
    det,
    det_bareiss,
    det_cofactor,
    det_leibniz,
    detprod_cminors,
    from_json,
    generic_matrix,
    identity,
    matmul,
    minor,
    permutation_sign,
    random_int_matrix,
    shuffle,
    sumset,
)
from detpaths.shapes import shape
from detpaths.tableaux import skew_schur


def Y(i, j):
    return Poly.var(y(i, j))


def test_identity_and_empty_determinants():
    assert det(identity(3)) == 1
    assert det(RingMatrix([], 0)) == 1
    assert det_cofactor(RingMatrix([], 0)) == 1


def test_generic_2x2():
    assert det(generic_matrix(2, 2)) == Y(1, 1) * Y(2, 2) - Y(1, 2) * Y(2, 1)


def test_det_of_jt_matrix_is_the_schur_polynomial():
    assert det(jt_matrix(shape((2, 1)), 2)) == skew_schur(shape((2, 1)), 2)


def test_non_square_rejected():
    for f in (det, det_bareiss, det_cofactor, det_leibniz):
        with pytest.raises(ValueError):
            f(RingMatrix([[1, 2, 3], [4, 5, 6]]))


def test_minor_examples():
    a = from_json("[[1,2,3],[4,5,6],[7,8,10]]")
    assert minor(a, (1, 2, 3), (1, 2, 3)) == a
    assert minor(minor(a, (1, 3), (2, 3)), (2,), (1,)) == minor(a, (3,), (2,))
    assert delete_rowcols(a, (2,), (1,)) == minor(a, complement((2,), 3), complement((1,), 3))
    assert minor(a, (3, 1), (1,)).entries == ((7,), (1,))
    with pytest.raises(IndexError):
        minor(a, (4,), (1,))
    with pytest.raises(ValueError):
        minor(a, (1, 1), (1, 2))


def test_detprod_cminors_examples():
    rng = random.Random(11)
    a = random_int_matrix(4, 4, rng)
    assert detprod_cminors(a, (1, 2, 3, 4), (1, 2, 3, 4)) == det(a)
    assert detprod_cminors(a, (), ()) == det(a)
    expected = a[1, 2] * det_leibniz(minor(a, (2, 3, 4), (1, 3, 4)))
    assert detprod_cminors(a, (1,), (2,)) == expected
    with pytest.raises(ValueError):
        detprod_cminors(a, (1,), (1, 2))


def test_shuffle_examples():
    assert shuffle((1, 2, 3), (2,), (5,)) == (1, 5, 3)
    assert shuffle((1, 2, 3), (), ()) == (1, 2, 3)
    assert shuffle((1, 2, 3, 4), (1, 3), (7, 9)) == (7, 2, 9, 4)
    with pytest.raises(ValueError):
        shuffle((1, 2, 3), (4,), (5,))
    with pytest.raises(ValueError):
        shuffle((1, 2, 3), (1,), (2,))
    with pytest.raises(ValueError):
        shuffle((1, 2, 3), (1, 2), (5,))


def test_sumset_examples():
    X = (10, 20, 30, 40, 50)
    assert sumset((), X) == 0
    assert sumset(X, X) == 15
    assert sumset((20, 40), X) == 6
    with pytest.raises(ValueError):
        sumset((25,), X)


def test_permutation_sign():
    assert permutation_sign((1, 2, 3)) == 1
    assert permutation_sign((2, 1, 3)) == -1
    assert permutation_sign((2, 3, 1)) == 1
    assert permutation_sign((1, 0)) == -1


def test_json_literals():
    a = from_json("[[1,-2],[3,4]]")
    assert a.shape == (2, 2) and det(a) == 10
    for bad in ["{}", "[[1,2],[3]]", "[[1.5]]", "[[true]]"]:
        with pytest.raises(ValueError):
            from_json(bad)


int_matrices = st.integers(1, 5).flatmap(
    lambda m: st.lists(st.lists(st.integers(-9, 9), min_size=m, max_size=m), min_size=m, max_size=m)
)


@given(int_matrices)
def test_three_determinants_agree(rows):
    a = RingMatrix(rows)
    assert det_bareiss(a) == det_cofactor(a) == det_leibniz(a)


@given(int_matrices, st.data())
def test_alternating(rows, data):
    m = len(rows)
    if m < 2:
        return
    i, j = data.draw(st.lists(st.integers(0, m - 1), min_size=2, max_size=2, unique=True))
    swapped = [list(r) for r in rows]
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert det(RingMatrix(swapped)) == -det(RingMatrix(rows))
    dup = [list(r) for r in rows]
    dup[j] = list(dup[i])
    assert det(RingMatrix(dup)) == 0


@given(st.integers(1, 5), st.integers(0, 10**6))
def test_multiplicativity(m, seed):
    rng = random.Random(seed)
    a, b = random_int_matrix(m, m, rng), random_int_matrix(m, m, rng)
    assert det(matmul(a, b)) == det(a) * det(b)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_generic_cofactor_equals_permutation_sum(m):
    g = generic_matrix(m, m)
    assert det_cofactor(g) == det_leibniz(g)
    assert len(det(g)) == [1, 2, 6, 24][m - 1]
