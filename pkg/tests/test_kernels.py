import random
from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from posetcorr import kernels
from posetcorr.enumeration import (SliceConstraint, count_linear_extensions, count_p_partitions,
                                   enumerate_p_partitions)
from posetcorr.instances import posets_up_to, random_fkg_weights
from posetcorr.lattice import (ad_check, boolean_lattice, diamond_m3, pentagon_n5,
                               ppartition_lattice, shepp_lattice, verify_lattice, value_family)
from posetcorr.poly import MultiPoly
from posetcorr.poset import antichain, chain, parallel_sum
from strategies import polys, posets

needs_compiled = pytest.mark.skipif("compiled" not in kernels.available(),
                                    reason="compiled kernels not built")


def both(fn):
    out = []
    for name in kernels.available():
        with kernels.using(name):
            out.append(fn())
    return out


def same(fn):
    vals = both(fn)
    assert all(v == vals[0] for v in vals[1:])
    return vals[0]


def test_backend_switching():
    start = kernels.active()
    with kernels.using("python"):
        assert kernels.active() == "python"
    assert kernels.active() == start
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")
    with pytest.raises(ValueError):
        with kernels.using("fortran"):
            pass
    assert kernels.active() == start


def test_using_restores_after_error():
    start = kernels.active()
    with pytest.raises(RuntimeError):
        with kernels.using("python"):
            raise RuntimeError
    assert kernels.active() == start


@needs_compiled
def test_compiled_is_default():
    assert kernels.active() == "compiled"


def test_missing_extension(monkeypatch):
    monkeypatch.setattr(kernels, "_ckernels", None)
    assert kernels.available() == ["python"]
    with pytest.raises(RuntimeError):
        kernels.set_backend("compiled")


@given(posets(7))
def test_extension_count_parity(P):
    same(lambda: count_linear_extensions(P))


@given(posets(5), st.integers(0, 3))
def test_ppartition_parity(P, t):
    same(lambda: count_p_partitions(P, t))
    same(lambda: count_p_partitions(P, t, threshold=0))
    same(lambda: enumerate_p_partitions(P, t))
    if P.n:
        c = SliceConstraint.fix(0, min(t, 1))
        same(lambda: enumerate_p_partitions(P, t, c))


@given(polys(2, 4, 6, 50), polys(2, 4, 6, 50))
def test_poly_mul_parity(f, g):
    assert same(lambda: f * g) == g * f


def test_lattice_parity():
    for P in posets_up_to(3):
        for t in range(3):
            Ls = both(lambda: ppartition_lattice(P, t))
            L = Ls[0]
            assert all((M.join == L.join).all() and (M.meet == L.meet).all() for M in Ls)
            assert same(lambda: verify_lattice(L, [value_family(L)]).ok)
            for y in range(P.n):
                S = both(lambda: shepp_lattice(P, t, y))
                assert all((s.join == S[0].join).all() and (s.meet == S[0].meet).all() for s in S)
    for L in (diamond_m3(), pentagon_n5()):
        reps = both(lambda: verify_lattice(L))
        assert len({(r.law, r.witness) for r in reps}) == 1


def test_ad_violation_parity():
    rng = random.Random(3)
    for _ in range(30):
        k = rng.randint(1, 4)
        L = boolean_lattice(k)
        w = [list(v) for v in random_fkg_weights(k, rng)]
        w[0][rng.randrange(len(L))] *= 3
        reps = both(lambda: ad_check(L, *w, mode="hypothesis"))
        assert len({(r.hypothesis, r.witness) for r in reps}) == 1


def test_overflow_falls_back():
    # counts past 2**63 and huge coefficients must come out exact on every backend
    P = parallel_sum(chain(40), chain(40))
    assert same(lambda: kernels.count_linear_extensions(P.below)) == comb(80, 40)
    big = MultiPoly.univariate([2 ** 70, 1])
    assert same(lambda: big * big) == MultiPoly.univariate([2 ** 140, 2 ** 71, 1])
    L = boolean_lattice(2)
    huge = [2 ** 80] * 4
    assert same(lambda: ad_check(L, huge, huge, huge, huge).ok)
    assert same(lambda: count_p_partitions(antichain(8), 300)) == 301 ** 8


def test_raw_kernels_agree():
    below = [0, 0, 0b11, 0b1]
    raw = both(lambda: kernels.count_linear_extensions(below))
    # 0 < 2, 1 < 2, 0 < 3
    assert raw == [5] * len(raw)
    ka = np.array([0, 1, 3], dtype=np.int64)
    ca = np.array([1, -2, 5], dtype=np.int64)
    outs = both(lambda: kernels.poly_mul_dense(ka, ca, ka, ca, 7))
    for keys, coefs in outs:
        assert keys.tolist() == outs[0][0].tolist() and coefs.tolist() == outs[0][1].tolist()


def test_mixed_size_weights():
    L = boolean_lattice(2)
    big = [2 ** 80, 2 ** 80, 2 ** 80, 2 ** 80]
    small = [1, 1, 1, 1]
    assert same(lambda: ad_check(L, big, small, big, small).ok)
    assert same(lambda: ad_check(L, big, small, small, small, mode="hypothesis").witness) == (0, 0)
