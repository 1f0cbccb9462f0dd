import pytest
from hypothesis import given
from hypothesis import strategies as st

from detpaths.shapes import (
    Semipartition,
    Shape,
    add_const,
    contains,
    delete_part,
    delete_parts,
    ferrers_cells,
    format_shape,
    parse_shape,
    partition,
    partitions_in_box,
    shape,
    shape_lattice,
    shift,
    shift_normalize,
)

LAM = partition(9, 7, 5, 3, 3, 1)


def test_delete_part_example():
    assert delete_part(partition(5, 3, 2), 2) == Semipartition((5, 1), -1)


def test_delete_two_parts_of_shifted_lambda():
    shifted = add_const(LAM, 1, 6)
    assert shifted == partition(10, 8, 6, 4, 4, 2)
    once = delete_part(shifted, 6)
    assert delete_part(once, 1) == Semipartition((7, 5, 3, 3), -2)
    assert delete_parts(shifted, (1, 6)) == Semipartition((7, 5, 3, 3), -2)


def test_delete_first_part_of_constant_partition():
    ones = partition(1, 1, 1, 1)
    assert delete_part(ones, 1) == Semipartition((0, 0, 0), -1)


def test_delete_parts_singleton_and_empty():
    assert delete_parts(LAM, (3,)) == delete_part(LAM, 3)
    assert delete_parts(LAM, ()) == LAM
    with pytest.raises(ValueError):
        delete_parts(LAM, (3, 2))


def test_fold_order_matters_and_largest_index_goes_first():
    s = partition(10, 8, 6, 4, 4, 2)
    smallest_first = delete_part(delete_part(s, 1), 6)
    assert smallest_first != delete_parts(s, (1, 6))


def test_add_const_examples():
    assert add_const(partition(3, 1), 1) == Semipartition((4, 2), 1)
    assert add_const(partition(3, 1), 2, 2) == partition(5, 3)
    assert add_const(partition(), -2) == Semipartition((), -2)


def test_shift_normalize_examples():
    sh = Shape(Semipartition((7, 5, 3, 3), -2), Semipartition((0, 0, 0, 0), -2))
    assert shift_normalize(sh) == shape((9, 7, 5, 5), (2, 2, 2, 2))
    norm = shape((3, 1), (1,))
    assert shift_normalize(norm) == norm


def test_shape_with_negative_tail_has_the_cells_of_its_normalization():
    sigma = Shape(Semipartition((6, 4, 2, 2), -1), Semipartition((), -1))
    assert sigma.length == 4
    assert ferrers_cells(sigma) == ferrers_cells(shift_normalize(sigma))
    assert shift_normalize(sigma) == shape((7, 5, 3, 3))


def test_ferrers_cells_examples():
    assert set(ferrers_cells(shape((2, 1), (0, 0)))) == {(1, 1), (1, 2), (2, 1)}
    big = shape((8, 5, 5, 4, 2, 2, 2), (3, 2, 2, 1))
    # 5 + 3 + 3 + 3 + 2 + 2 + 2
    assert len(ferrers_cells(big)) == 20 == big.weight
    moved = shape((8 + 2, 5 + 2, 5 + 2, 4 + 2, 2 + 2, 2 + 2, 2 + 2), (3 + 2, 2 + 2, 2 + 2, 1 + 2, 2, 2, 2))
    assert {(i, c - 2) for i, c in ferrers_cells(moved)} == set(ferrers_cells(big))


def test_contains_examples():
    assert contains(partition(0), partition(3, 1))
    assert not contains(partition(4), partition(3, 1))
    assert contains(partition(3, 2, 2, 1), partition(8, 5, 5, 4, 2, 2, 2))
    assert not contains(Semipartition((), -1), partition(1))


def test_shape_rejects_non_containment():
    with pytest.raises(ValueError):
        shape((2,), (3,))


def test_semipartition_normalizes_trailing_tail_entries():
    assert Semipartition((3, 1, 0, 0), 0) == partition(3, 1)
    assert partition(3, 1, 0).length == 2
    with pytest.raises(ValueError):
        Semipartition((1, 2))
    with pytest.raises(ValueError):
        Semipartition((1, -1), 0)


def test_parse_and_format_round_trip():
    for text in ["2,1", "3,3,1/1", "6,4,2,2/@-1", "5,1/2@-1", ""]:
        sh = parse_shape(text)
        assert parse_shape(format_shape(sh)) == sh
    assert parse_shape("1/0") == shape((1,))
    assert parse_shape("").weight == 0
    with pytest.raises(ValueError):
        parse_shape("a,b")


def test_box_and_lattice_sizes():
    # partitions in a 2 x 2 box: (), 1, 2, 11, 21, 22
    assert len(list(partitions_in_box(2, 2))) == 6
    assert all(sh.weight <= 3 for sh in shape_lattice(3, 3, 3))
    assert shape((2, 1), (1,)) in set(shape_lattice(2, 2, 2))


semipartitions = st.builds(
    lambda tail, steps: Semipartition(tuple(tail + sum(steps[i:]) for i in range(len(steps))), tail),
    st.integers(-3, 3),
    st.lists(st.integers(0, 3), max_size=6),
)


@given(semipartitions, st.integers(1, 8))
def test_delete_part_laws(s, k):
    d = delete_part(s, k)
    assert d.tail == s.tail - 1
    assert d.length == max(s.length, k) - 1


@given(semipartitions, st.lists(st.integers(1, 8), unique=True, max_size=4))
def test_delete_parts_is_the_largest_first_fold(s, ks):
    ks = sorted(ks)
    expected = s
    for k in sorted(ks, reverse=True):
        expected = delete_part(expected, k)
    assert delete_parts(s, ks) == expected


@st.composite
def shapes(draw):
    lam = draw(semipartitions)
    m = lam.length
    mu_parts = []
    bound = None
    for i in range(1, m + 1):
        hi = lam[i] if bound is None else min(lam[i], bound)
        v = draw(st.integers(lam.tail, hi))
        mu_parts.append(v)
        bound = v
    return Shape(lam, Semipartition(tuple(mu_parts), lam.tail))


@given(shapes(), st.integers(-3, 3))
def test_shift_preserves_weight_and_cells(sh, z):
    norm = shift_normalize(sh)
    assert norm.tail == 0
    assert norm.weight == sh.weight
    assert ferrers_cells(norm) == ferrers_cells(sh)
    assert ferrers_cells(shift(sh, z)) == ferrers_cells(sh)
    assert shift_normalize(norm) == norm
