import pytest
from hypothesis import given
from hypothesis import strategies as st

from posetcorr import young
from posetcorr.instances import all_posets
from posetcorr.poset import (CycleError, antichain, build_poset, chain, dual, enumerate_lower_ideals,
                             enumerate_upper_ideals, ideal_check, induced_subposet, linear_sum,
                             parallel_sum, parse_poset_text, poset_construct, skew_shape_poset)
from strategies import posets


def test_build_chain_from_path():
    P, perm = build_poset(3, [(0, 1), (1, 2)])
    assert P.relations() == {(0, 1), (0, 2), (1, 2)}
    assert perm == (0, 1, 2)


def test_build_antichain():
    P, _ = build_poset(3, [])
    assert P.relations() == set()


def test_cycle_rejected():
    with pytest.raises(CycleError):
        build_poset(2, [(0, 1), (1, 0)])
    with pytest.raises(CycleError):
        build_poset(1, [(0, 0)])


def test_out_of_range_cover():
    with pytest.raises(ValueError):
        build_poset(2, [(0, 2)])


def test_relabel_to_natural():
    P, perm = build_poset(3, [(2, 0), (0, 1)])
    assert P == chain(3)
    assert perm == (1, 2, 0)


def test_chain_is_repeated_linear_sum():
    c1 = chain(1)
    assert poset_construct("chain", 3) == linear_sum(linear_sum(c1, c1), c1)


def test_parallel_sum_of_points():
    assert parallel_sum(chain(1), chain(1)) == antichain(2)
    assert poset_construct("parallel_sum", chain(1), chain(1)) == antichain(2)


def test_construct_rejects_unknown_kind():
    with pytest.raises(ValueError):
        poset_construct("tree", 3)


def test_skew_shape_posets():
    assert skew_shape_poset(young.skew((3, 1), (1, 1))).is_isomorphic(chain(2))
    assert skew_shape_poset(young.skew((3, 2, 1), (2, 1))).is_isomorphic(antichain(3))
    assert skew_shape_poset(young.skew((2, 1), (2, 1))).n == 0


def test_ideal_check_examples():
    C2 = chain(2)
    assert ideal_check(C2, {0}, "lower")
    assert not ideal_check(C2, {1}, "lower")
    assert ideal_check(C2, {1}, "upper")
    with pytest.raises(ValueError):
        ideal_check(C2, {0}, "middle")


def test_lower_ideal_examples():
    assert len(enumerate_lower_ideals(antichain(2))) == 4
    assert enumerate_lower_ideals(chain(2)) == [frozenset(), {0}, {0, 1}]
    for n in range(6):
        assert len(enumerate_lower_ideals(chain(n))) == n + 1


def test_induced_subposet_examples():
    P = all_posets(3)[2]
    assert induced_subposet(P, range(3)) == P
    assert induced_subposet(P, []).n == 0
    sub = induced_subposet(chain(3), {0, 2})
    assert sub.is_isomorphic(chain(2))
    assert sub.ids == (0, 2) and sub.universe == 3


def test_text_round_trip():
    P = from_text = parse_poset_text("4\n1 3\n2 3  # comment\n3 4\n")
    assert from_text.n == 4
    assert parse_poset_text(P.to_text()) == P


@pytest.mark.parametrize("text", ["", "2\n1\n", "2\n1 2 3\n", "x\n"])
def test_text_errors(text):
    with pytest.raises(ValueError):
        parse_poset_text(text)


def test_poset_counts():
    assert [len(all_posets(n)) for n in range(6)] == [1, 1, 2, 5, 16, 63]


@given(posets(6))
def test_dual_is_involution(P):
    assert dual(dual(P)).is_isomorphic(P)


@given(posets(6))
def test_ideal_complement_bijection(P):
    lowers = enumerate_lower_ideals(P)
    uppers = enumerate_upper_ideals(P)
    assert len(lowers) == len(uppers)
    full = frozenset(range(P.n))
    for S in lowers:
        assert ideal_check(P, S, "lower")
        assert ideal_check(P, full - S, "upper")


@given(posets(5), st.data())
def test_lower_iff_complement_upper(P, data):
    S = data.draw(st.sets(st.integers(0, max(P.n - 1, 0)), max_size=P.n)) if P.n else set()
    rest = set(range(P.n)) - S
    assert ideal_check(P, S, "lower") == ideal_check(P, rest, "upper")


@given(posets(5), posets(3))
def test_constructors_keep_natural_labeling(P, Q):
    for R in (P, Q, dual(P), linear_sum(P, Q), parallel_sum(P, Q)):
        assert all(i < j for i, j in R.relations())


@given(posets(6))
def test_ideals_closed_under_union_and_intersection(P):
    ideals = set(enumerate_lower_ideals(P))
    for A in ideals:
        for B in ideals:
            assert A | B in ideals and A & B in ideals


@given(posets(5), st.data())
def test_canonical_form_ignores_labels(P, data):
    perm = data.draw(st.permutations(range(P.n)))
    Q, _ = build_poset(P.n, [(perm[i], perm[j]) for i, j in P.covers()])
    assert Q.canonical_form() == P.canonical_form()
