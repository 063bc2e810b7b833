from math import factorial

import pytest
from hypothesis import given

from posetcorr import young
from posetcorr.enumeration import count_linear_extensions
from posetcorr.poset import skew_shape_poset
from strategies import partitions


def test_conjugate():
    assert young.conjugate((3, 1)) == (2, 1, 1)
    assert young.conjugate(()) == ()


def test_containment():
    assert young.contained_in((2, 2), (3, 2, 1))
    assert not young.contained_in((3, 2, 1), (2, 2))


def test_statistics():
    assert young.weight((3, 1)) == 4
    assert young.nstat((1,)) == 1
    assert young.nstat((2, 1)) == 1 * 2 + 2 * 1


def test_join_meet_examples():
    assert young.join((3, 1), (2, 2)) == (3, 2)
    assert young.meet((3, 1), (2, 2)) == (2, 1)
    a, b = young.skew((3, 1), (1,)), young.skew((2, 2), (1, 1))
    assert young.join(a, b) == young.skew((3, 2), (1, 1))
    assert young.meet(a, b) == young.skew((2, 1), (1,))


def test_skew_needs_containment():
    with pytest.raises(ValueError):
        young.skew((1,), (2,))
    with pytest.raises(ValueError):
        young.partition((1, 2))


def test_hook_examples():
    assert young.hook_length_count((5,)) == 1
    assert young.hook_length_count((2, 1)) == 2
    assert young.hook_length_count((2, 2)) == 2
    assert young.hook_lengths((2, 2)) == [3, 2, 2, 1]


def test_cells_row_major():
    assert young.cells(young.skew((3, 1), (1,))) == [(1, 2), (1, 3), (2, 1)]


def test_text_round_trip():
    s = young.parse_skew("4,2,1/2,1")
    assert s == young.skew((4, 2, 1), (2, 1))
    assert young.parse_skew(young.format_skew(s)) == s
    assert young.parse_partition(young.format_partition((3, 3, 1))) == (3, 3, 1)
    with pytest.raises(ValueError):
        young.parse_partition("2,x")


def test_partition_generators():
    assert [sum(1 for _ in young.partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert sum(1 for _ in young.partitions_in_box(3, 3)) == 20


@pytest.mark.parametrize("n", range(8))
def test_hook_length_matches_extensions(n):
    for lam in young.partitions_of(n):
        assert young.hook_length_count(lam) == count_linear_extensions(skew_shape_poset(lam))
        assert factorial(n) % young.hook_length_count(lam) == 0


@given(partitions())
def test_conjugate_involution(lam):
    assert young.conjugate(young.conjugate(lam)) == lam
    assert young.weight(young.conjugate(lam)) == young.weight(lam)


@given(partitions(), partitions(), partitions())
def test_lattice_laws(a, b, c):
    J, M = young.join, young.meet
    assert J(a, M(a, b)) == a and M(a, J(a, b)) == a
    assert J(J(a, b), c) == J(a, J(b, c))
    assert M(M(a, b), c) == M(a, M(b, c))
    assert J(a, a) == M(a, a) == a
    assert young.contained_in(M(a, b), a) and young.contained_in(a, J(a, b))


@given(partitions(), partitions())
def test_weight_is_modular(a, b):
    assert young.weight(young.join(a, b)) + young.weight(young.meet(a, b)) == \
        young.weight(a) + young.weight(b)
