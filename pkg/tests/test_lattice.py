import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from posetcorr.enumeration import order_polynomial
from posetcorr.instances import posets_up_to, random_fkg_weights
from posetcorr.lattice import (CapExceeded, LatticeIntegrityError, ModularFunctionFamily,
                               ModularityError, WeightFunction, ad_check, ad_multi_check,
                               boolean_lattice, build_lattice, chain_lattice, complement,
                               complemented_elements, count_family, cross_product_indicators,
                               ddp_indicators, ddp_lattice, diamond_m3, fishburn_indicators,
                               from_tables, pentagon_n5, ppartition_lattice, shepp_lattice,
                               value_family, verify_lattice)
from posetcorr.poset import _bits, antichain, chain, lower_ideal_masks
from strategies import posets


def test_single_point_chain():
    L = build_lattice("ppartition", chain(1), 1)
    assert len(L) == 2 and L.bottom == 0 and L.top == 1
    assert L.join.tolist() == [[0, 1], [1, 1]]
    with pytest.raises(ValueError):
        build_lattice("tree", chain(1), 1)


@given(posets(4), st.integers(0, 3))
def test_size_is_order_polynomial(P, t):
    assert len(ppartition_lattice(P, t)) == order_polynomial(P, t)


def test_shepp_antichain_example():
    L = shepp_lattice(antichain(2), 1, 0)
    assert len(L) == 4
    assert verify_lattice(L).ok


def test_shepp_is_distributive_everywhere():
    for P in posets_up_to(4):
        for t in range(3):
            for y in range(P.n):
                assert verify_lattice(shepp_lattice(P, t, y)).ok, (P, t, y)


def test_value_family_on_small_chain():
    L = ppartition_lattice(chain(2), 2)
    assert len(L) == 6
    assert verify_lattice(L, [value_family(L)]).ok


def test_count_family_is_modular():
    for P in posets_up_to(3):
        L = ppartition_lattice(P, 2)
        assert verify_lattice(L, [count_family(L, 2)]).ok


def test_diamond_and_pentagon():
    for L, law in ((diamond_m3(), "distributivity"), (pentagon_n5(), "distributivity")):
        rep = verify_lattice(L)
        assert not rep.ok and rep.law == law
        x, y, z = rep.witness
        J, M = L.join, L.meet
        assert M[x, J[y, z]] != J[M[x, y], M[x, z]]


def test_broken_tables_detected():
    J = np.array([[0, 1], [1, 1]])
    M = np.array([[0, 0], [0, 1]])
    assert verify_lattice(from_tables(J, M)).ok
    J2 = J.copy()
    J2[0, 1] = 0
    assert verify_lattice(from_tables(J2, M)).law == "commutativity"
    J3 = J.copy()
    J3[1, 0] = J3[0, 1] = -1
    assert verify_lattice(from_tables(J3, M)).law == "closure"


def test_non_modular_family_detected():
    L = boolean_lattice(2)
    assert verify_lattice(chain_lattice(3), [ModularFunctionFamily(np.array([[0, 0, 5]]))]).ok
    fam = ModularFunctionFamily(np.array([[0, 0, 0, 5]]), "bad")
    rep = verify_lattice(L, [fam])
    assert not rep.ok and rep.law == "modularity:bad[0]"
    with pytest.raises(ModularityError):
        fam.require_modular(L)


def test_cap_and_sampling():
    L = ppartition_lattice(antichain(4), 2)
    with pytest.raises(CapExceeded):
        verify_lattice(L, cap=10)
    rep = verify_lattice(L, [value_family(L)], cap=10, sample=500)
    assert rep.ok and rep.checked == "sampled"
    assert not verify_lattice(diamond_m3(), cap=2, sample=2000).ok


def test_complements():
    B2 = boolean_lattice(2)
    assert complement(B2, 1) == 2
    assert complement(B2, B2.bottom) == B2.top and complement(B2, B2.top) == B2.bottom
    assert complement(chain_lattice(3), 1) is None
    with pytest.raises(LatticeIntegrityError):
        complement(diamond_m3(), 1)


def test_complements_unique_in_distributive_lattices():
    lattices = [boolean_lattice(k) for k in range(4)] + [chain_lattice(4)]
    lattices += [ppartition_lattice(P, 2) for P in posets_up_to(3)]
    for L in lattices:
        assert verify_lattice(L).ok
        for x in range(len(L)):
            hits = [y for y in range(len(L)) if L.meet[x, y] == L.bottom and L.join[x, y] == L.top]
            assert len(hits) <= 1
            assert complement(L, x) == (hits[0] if hits else None)
    assert complemented_elements(boolean_lattice(3)) == list(range(8))


def test_ddp_lattice_coordinates():
    L = ddp_lattice(chain(2), 2, 1)
    assert L.offset == 1 and len(L) == order_polynomial(chain(2), 3)
    assert L.values(0) == (-1, -1) and L.values(len(L) - 1) == (2, 2)
    assert L.index((0, 1)) == L.index(L.values(L.index((0, 1))))


def test_all_ones_weights():
    L = ppartition_lattice(chain(2), 2)
    ones = [1] * len(L)
    rep = ad_check(L, ones, ones, ones, ones)
    assert rep.ok and rep.lhs == rep.rhs == len(L) ** 2


def test_fishburn_indicators_hypothesis():
    for P in posets_up_to(3):
        ideals = [sorted(_bits(m)) for m in lower_ideal_masks(P)]
        L = ppartition_lattice(P, 2)
        for A in ideals:
            for B in ideals:
                assert ad_check(L, *fishburn_indicators(L, A, B, [], []), mode="hypothesis").ok


def test_doubled_top_violation():
    L = ppartition_lattice(chain(2), 1)
    alpha = [1] * len(L)
    alpha[L.top] = 2
    rep = ad_check(L, alpha, [1] * 3, [1] * 3, [1] * 3, mode="hypothesis")
    # every pair (top, y) violates; the report names the least one in row-major order
    assert rep.hypothesis is False and rep.witness == (L.top, L.bottom)
    assert rep.witness_values == (2, 1, 1, 1)
    assert ad_check(L, alpha, [0, 0, 1], [1] * 3, [1] * 3, mode="hypothesis").witness == (L.top, L.top)


def test_ad_check_modes():
    L = boolean_lattice(2)
    with pytest.raises(ValueError):
        ad_check(L, [1] * 4, [1] * 4, [1] * 4, [1] * 4, mode="sideways")
    rep = ad_check(L, [1] * 4, [1] * 4, [1] * 4, [1] * 4, mode="conclusion")
    assert rep.hypothesis is None and rep.conclusion
    with pytest.raises(ValueError):
        WeightFunction((1, -1))


def test_fkg_instances():
    rng = random.Random(0)
    for _ in range(40):
        k = rng.randint(1, 5)
        L = boolean_lattice(k)
        w = random_fkg_weights(k, rng)
        rep = ad_check(L, *w)
        assert rep.ok
        sub = [i for i in range(len(L)) if rng.random() < 0.5]
        assert ad_check(L, *w, X=sub, Y=sub[::-1]).ok


def test_multi_check_specializes_to_numbers():
    rng = random.Random(1)
    L = boolean_lattice(3)
    w = random_fkg_weights(3, rng)
    fam = ModularFunctionFamily(L.states.T.copy(), "coords")
    multi = ad_multi_check(L, *w, fam)
    plain = ad_check(L, *w, mode="conclusion")
    assert multi.ok
    assert Fraction(multi.lhs.sum_coefficients(), multi.scale) == plain.lhs
    assert Fraction(multi.rhs.sum_coefficients(), multi.scale) == plain.rhs


def test_multi_check_fishburn_on_small_chain():
    L = ppartition_lattice(chain(2), 1)
    rep = ad_multi_check(L, *fishburn_indicators(L, [0], [], [], []), value_family(L))
    assert rep.ok


def test_multi_check_ddp():
    L = ddp_lattice(chain(2), 2, 1)
    for z in range(2):
        for k in range(2):
            rep = ad_multi_check(L, *ddp_indicators(L, z, k, 1, 1), value_family(L))
            assert rep.ok
    with pytest.raises(ValueError):
        ddp_indicators(ppartition_lattice(chain(2), 2), 0, 0, 1, 1)


def test_cross_product_indicators_on_shepp():
    P = antichain(3)
    L = shepp_lattice(P, 1, 1)
    for k in range(2):
        for l in range(2):
            assert ad_check(L, *cross_product_indicators(L, 0, 1, 2, k, l)).ok


def test_multi_check_rejects_non_modular():
    L = boolean_lattice(2)
    with pytest.raises(ModularityError):
        ad_multi_check(L, [1] * 4, [1] * 4, [1] * 4, [1] * 4,
                       ModularFunctionFamily(np.array([[0, 0, 0, 5]])))
