"""Explicit finite lattices, modular functions and Ahlswede-Daykin checks.

A :class:`LatticeInstance` stores its elements as rows of an integer array
together with precomputed join and meet index tables.  Lattices of
P-partitions come in three flavors:

``ppartition``
    order-preserving maps ``X -> {0..t}`` with pointwise max and min;
``ddp``
    the same with values ``{-b..t}``; rows are stored shifted by ``+b`` and
    :meth:`LatticeInstance.values` reports the unshifted maps;
``shepp``
    maps into ``{0..t}`` with operations anchored at an element ``y``::

        [S v T](w) = max(S(w) - S(y), T(w) - T(y)) + min(S(y), T(y))
        [S ^ T](w) = min(S(w) - S(y), T(w) - T(y)) + max(S(y), T(y))

Exhaustive checks over pairs are refused above ``PAIR_CAP`` elements unless
an explicit sampling budget is passed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .enumeration import p_partition_array
from .poly import MultiPoly, Dominance, poly_geq_coeffwise
from .poset import Poset

PAIR_CAP = 2000


class CapExceeded(ValueError):
    pass


class LatticeIntegrityError(RuntimeError):
    pass


class ModularityError(ValueError):
    def __init__(self, family: str, index: int, pair: tuple[int, int]):
        self.family, self.index, self.pair = family, index, pair
        super().__init__(f"r_{index} of {family} is not modular at pair {pair}")


@dataclass(frozen=True, eq=False)
class LatticeInstance:
    states: np.ndarray
    join: np.ndarray
    meet: np.ndarray
    kind: str = "explicit"
    offset: int = 0
    poset: Poset | None = None
    t: int | None = None
    anchor: int | None = None

    def __len__(self) -> int:
        return len(self.states)

    @property
    def size(self) -> int:
        return len(self.states)

    def values(self, i: int) -> tuple[int, ...]:
        """Element ``i`` in reported coordinates (DDP rows lose their shift)."""
        return tuple(v - self.offset for v in self.states[i].tolist())

    @cached_property
    def _lookup(self) -> dict:
        return {tuple(row): k for k, row in enumerate(self.states.tolist())}

    def index(self, values: Sequence[int]) -> int:
        return self._lookup[tuple(v + self.offset for v in values)]

    @cached_property
    def bottom(self) -> int | None:
        hits = np.flatnonzero((self.meet == np.arange(len(self))[:, None]).all(axis=1))
        return int(hits[0]) if hits.size else None

    @cached_property
    def top(self) -> int | None:
        hits = np.flatnonzero((self.join == np.arange(len(self))[:, None]).all(axis=1))
        return int(hits[0]) if hits.size else None

    def select(self, predicate) -> np.ndarray:
        """Boolean mask of elements whose reported values satisfy ``predicate``."""
        return np.array([bool(predicate(self.values(i))) for i in range(len(self))], dtype=bool)

    def __repr__(self) -> str:
        return f"LatticeInstance(kind={self.kind!r}, size={len(self)})"


def _instance(states, mode=0, **meta) -> LatticeInstance:
    states = np.ascontiguousarray(states, dtype=np.int64)
    join, meet = kernels.lattice_tables(states, mode, meta.get("anchor") or 0)
    return LatticeInstance(states, np.asarray(join), np.asarray(meet), **meta)


def ppartition_lattice(P: Poset, t: int) -> LatticeInstance:
    if t < 0:
        raise ValueError("t must be nonnegative")
    return _instance(p_partition_array(P, t), kind="ppartition", poset=P, t=t)


def ddp_lattice(P: Poset, t: int, b: int) -> LatticeInstance:
    """Order-preserving maps into ``{-b..t}``, stored shifted by ``+b``."""
    if t < 0 or b < 0:
        raise ValueError("need t >= 0 and b >= 0")
    return _instance(p_partition_array(P, t + b), kind="ddp", offset=b, poset=P, t=t)


def shepp_lattice(P: Poset, t: int, y: int) -> LatticeInstance:
    if t < 0:
        raise ValueError("t must be nonnegative")
    if not 0 <= y < P.n:
        raise ValueError(f"anchor {y} out of range")
    return _instance(p_partition_array(P, t), mode=1, kind="shepp", poset=P, t=t, anchor=y)


def build_lattice(kind: str, *params) -> LatticeInstance:
    builders = {"ppartition": ppartition_lattice, "ddp": ddp_lattice, "shepp": shepp_lattice}
    if kind not in builders:
        raise ValueError(f"unknown lattice kind {kind!r}")
    return builders[kind](*params)


def boolean_lattice(k: int) -> LatticeInstance:
    """Subsets of a ``k``-set as 0/1 vectors, in lexicographic order."""
    return _instance(np.array(list(product((0, 1), repeat=k)), dtype=np.int64).reshape(1 << k, k),
                     kind="boolean")


def chain_lattice(m: int) -> LatticeInstance:
    return _instance(np.arange(m, dtype=np.int64).reshape(m, 1), kind="chain")


def from_tables(join, meet, kind: str = "explicit", states=None) -> LatticeInstance:
    join = np.asarray(join, dtype=np.int32)
    meet = np.asarray(meet, dtype=np.int32)
    if states is None:
        states = np.arange(len(join), dtype=np.int64).reshape(-1, 1)
    return LatticeInstance(np.asarray(states, dtype=np.int64), join, meet, kind=kind)


def _tables_from_order(leq: list[list[bool]]):
    m = len(leq)
    join = np.full((m, m), -1, dtype=np.int32)
    meet = np.full((m, m), -1, dtype=np.int32)
    for x in range(m):
        for y in range(m):
            ups = [z for z in range(m) if leq[x][z] and leq[y][z]]
            downs = [z for z in range(m) if leq[z][x] and leq[z][y]]
            least = [z for z in ups if all(leq[z][u] for u in ups)]
            greatest = [z for z in downs if all(leq[d][z] for d in downs)]
            join[x, y] = least[0] if least else -1
            meet[x, y] = greatest[0] if greatest else -1
    return join, meet


def diamond_m3() -> LatticeInstance:
    """Bottom 0, three pairwise incomparable atoms 1..3, top 4."""
    leq = [[x == y or x == 0 or y == 4 for y in range(5)] for x in range(5)]
    return from_tables(*_tables_from_order(leq), kind="M3")


def pentagon_n5() -> LatticeInstance:
    """Bottom 0 < 1 < 2 < top 4, with 3 incomparable to 1 and 2."""
    below = {0: set(), 1: {0}, 2: {0, 1}, 3: {0}, 4: {0, 1, 2, 3}}
    leq = [[x == y or x in below[y] for y in range(5)] for x in range(5)]
    return from_tables(*_tables_from_order(leq), kind="N5")


@dataclass(frozen=True)
class LatticeReport:
    ok: bool
    law: str | None = None
    witness: tuple | None = None
    checked: str = "exhaustive"


def _sampled_axioms(L: LatticeInstance, budget: int, seed: int):
    J, M = L.join, L.meet
    m = len(L)
    rng = np.random.default_rng(seed)
    x, y, z = (rng.integers(0, m, budget) for _ in range(3))
    pair_checks = (
        ("closure", (J[x, y] < 0) | (M[x, y] < 0)),
    )
    for law, bad in pair_checks:
        if bad.any():
            k = int(np.flatnonzero(bad)[0])
            return law, (int(x[k]), int(y[k]))
    pair_checks = (
        ("commutativity", (J[x, y] != J[y, x]) | (M[x, y] != M[y, x])),
        ("idempotency", (J[x, x] != x) | (M[x, x] != x)),
        ("absorption", (J[x, M[x, y]] != x) | (M[x, J[x, y]] != x)),
    )
    for law, bad in pair_checks:
        if bad.any():
            k = int(np.flatnonzero(bad)[0])
            return law, (int(x[k]), int(y[k]))
    closed = (J[y, z] >= 0) & (M[y, z] >= 0) & (J[x, y] >= 0) & (M[x, y] >= 0) & (M[x, z] >= 0)
    triple_checks = (
        ("join-associativity", J[J[x, y], z] != J[x, J[y, z]]),
        ("meet-associativity", M[M[x, y], z] != M[x, M[y, z]]),
        ("distributivity", M[x, J[y, z]] != J[M[x, y], M[x, z]]),
    )
    for law, bad in triple_checks:
        bad = bad & closed
        if bad.any():
            k = int(np.flatnonzero(bad)[0])
            return law, (int(x[k]), int(y[k]), int(z[k]))
    return None


def verify_lattice(L: LatticeInstance, families: Iterable["ModularFunctionFamily"] = (),
                   cap: int = PAIR_CAP, sample: int | None = None, seed: int = 0) -> LatticeReport:
    """Closure, lattice laws, distributivity over all triples, then modularity.

    Above ``cap`` elements an explicit ``sample`` budget is required; sampled
    checks draw that many random pairs and triples.
    """
    if len(L) > cap:
        if sample is None:
            raise CapExceeded(f"lattice has {len(L)} elements, above the cap of {cap}; "
                              "pass a sampling budget to check it")
        found = _sampled_axioms(L, sample, seed)
        if found:
            return LatticeReport(False, found[0], found[1], "sampled")
        for fam in families:
            rng = np.random.default_rng(seed + 1)
            x, y = rng.integers(0, len(L), sample), rng.integers(0, len(L), sample)
            for i, r in enumerate(fam.values):
                r = np.asarray(r, dtype=object)
                bad = np.flatnonzero(r[x] + r[y] != r[L.join[x, y]] + r[L.meet[x, y]])
                if bad.size:
                    k = int(bad[0])
                    return LatticeReport(False, f"modularity:{fam.name}[{i}]",
                                         (int(x[k]), int(y[k])), "sampled")
        return LatticeReport(True, checked="sampled")
    found = kernels.lattice_axioms(L.join, L.meet)
    if found:
        return LatticeReport(False, found[0], tuple(int(v) for v in found[1]))
    for fam in families:
        found = fam.violation(L)
        if found:
            i, pair = found
            return LatticeReport(False, f"modularity:{fam.name}[{i}]", pair)
    return LatticeReport(True)


def complement(L: LatticeInstance, x: int, bottom: int | None = None, top: int | None = None) -> int | None:
    """The element ``y`` with ``x ^ y = bottom`` and ``x v y = top``, if any."""
    bottom = L.bottom if bottom is None else bottom
    top = L.top if top is None else top
    if bottom is None or top is None:
        raise ValueError("lattice has no bottom or top")
    hits = np.flatnonzero((L.meet[x] == bottom) & (L.join[x] == top))
    if hits.size > 1:
        raise LatticeIntegrityError(
            f"element {x} has complements {hits.tolist()}; the lattice is not distributive")
    return int(hits[0]) if hits.size else None


# -- modular functions ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class ModularFunctionFamily:
    """Functions ``r_1..r_l`` on lattice elements, stored as an ``(l, |L|)`` array."""

    values: np.ndarray
    name: str = "r"

    @property
    def arity(self) -> int:
        return len(self.values)

    def exponents(self) -> list[tuple[int, ...]]:
        """``r(x)`` as an exponent vector, for each element ``x``."""
        return [tuple(col) for col in np.asarray(self.values).T.tolist()]

    def violation(self, L: LatticeInstance):
        for i, r in enumerate(self.values):
            pair = kernels.modular_violation([int(v) for v in r], L.join, L.meet)
            if pair is not None:
                return i, (int(pair[0]), int(pair[1]))
        return None

    def require_modular(self, L: LatticeInstance) -> None:
        found = self.violation(L)
        if found:
            raise ModularityError(self.name, *found)


def value_family(L: LatticeInstance) -> ModularFunctionFamily:
    """``r_i(T) = T(x_i)`` in stored coordinates, one function per element identity.

    Variables follow the poset's identities, so subposets stay aligned with
    their parent.  DDP lattices use the shifted values, which multiplies
    every generating function by the same monomial.
    """
    P = L.poset
    universe = P.universe if P is not None else L.states.shape[1]
    ids = P.ids if P is not None else range(L.states.shape[1])
    vals = np.zeros((universe, len(L)), dtype=np.int64)
    for col, e in enumerate(ids):
        vals[e] = L.states[:, col]
    return ModularFunctionFamily(vals, "value")


def count_family(L: LatticeInstance, N: int | None = None) -> ModularFunctionFamily:
    """``r_i(T) = #{x : T(x) = i}`` for ``i = 0..N`` in stored coordinates."""
    if N is None:
        N = int(L.states.max()) if L.states.size else 0
    vals = np.stack([(L.states == i).sum(axis=1) for i in range(N + 1)]) if len(L) else \
        np.zeros((N + 1, 0), dtype=np.int64)
    return ModularFunctionFamily(vals.astype(np.int64), "count")


# -- weights and AD checks -----------------------------------------------


@dataclass(frozen=True)
class WeightFunction:
    values: tuple

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise ValueError("weights must be nonnegative")
        object.__setattr__(self, "values", vals)

    @classmethod
    def indicator(cls, mask) -> "WeightFunction":
        return cls(tuple(int(bool(b)) for b in mask))

    @classmethod
    def constant(cls, m: int, value=1) -> "WeightFunction":
        return cls((value,) * m)

    def __len__(self) -> int:
        return len(self.values)

    def denominator(self) -> int:
        return lcm(*(v.denominator for v in self.values)) if self.values else 1

    def scaled(self, factor: int) -> list[int]:
        return [int(v * factor) for v in self.values]

    def total(self, subset: Iterable[int]) -> Fraction:
        return sum((self.values[i] for i in subset), Fraction(0))


def _as_weight(w) -> WeightFunction:
    return w if isinstance(w, WeightFunction) else WeightFunction(tuple(w))


def _subset(L: LatticeInstance, X) -> list[int]:
    if X is None:
        return list(range(len(L)))
    X = np.asarray(X)
    if X.dtype == bool:
        return np.flatnonzero(X).tolist()
    return sorted(set(int(x) for x in X))


def set_join(L: LatticeInstance, X: Sequence[int], Y: Sequence[int]) -> list[int]:
    if not X or not Y:
        return []
    return np.unique(L.join[np.ix_(X, Y)]).tolist()


def set_meet(L: LatticeInstance, X: Sequence[int], Y: Sequence[int]) -> list[int]:
    if not X or not Y:
        return []
    return np.unique(L.meet[np.ix_(X, Y)]).tolist()


@dataclass(frozen=True)
class ADReport:
    hypothesis: bool | None = None
    witness: tuple[int, int] | None = None
    witness_values: tuple | None = None
    lhs: Fraction | None = None
    rhs: Fraction | None = None
    conclusion: bool | None = None

    @property
    def ok(self) -> bool:
        return self.hypothesis is not False and self.conclusion is not False


def _integer_weights(alpha, beta, gamma, delta):
    """Clear denominators so ``a*b <= g*d`` keeps its truth value over integers."""
    da, db, dg, dd = (w.denominator() for w in (alpha, beta, gamma, delta))
    return (alpha.scaled(da * dg * dd), beta.scaled(db),
            gamma.scaled(dg * da * db), delta.scaled(dd))


def ad_hypothesis(L: LatticeInstance, alpha, beta, gamma, delta,
                  cap: int = PAIR_CAP, sample: int | None = None, seed: int = 0):
    """First pair ``(x, y)``, lexicographically, with ``a(x)b(y) > g(x v y)d(x ^ y)``."""
    alpha, beta, gamma, delta = map(_as_weight, (alpha, beta, gamma, delta))
    if len(L) > cap:
        if sample is None:
            raise CapExceeded(f"lattice has {len(L)} elements, above the pair cap of {cap}; "
                              "pass a sampling budget to check it")
        rng = np.random.default_rng(seed)
        pairs = sorted(zip(rng.integers(0, len(L), sample).tolist(),
                           rng.integers(0, len(L), sample).tolist()))
        for x, y in pairs:
            if alpha.values[x] * beta.values[y] > \
                    gamma.values[L.join[x, y]] * delta.values[L.meet[x, y]]:
                return x, y
        return None
    found = kernels.ad_violation(*_integer_weights(alpha, beta, gamma, delta), L.join, L.meet)
    return None if found is None else (int(found[0]), int(found[1]))


def ad_check(L: LatticeInstance, alpha, beta, gamma, delta, X=None, Y=None,
             mode: str = "both", cap: int = PAIR_CAP, sample: int | None = None,
             seed: int = 0) -> ADReport:
    """Check the four-functions hypothesis and/or its set-sum conclusion."""
    if mode not in ("hypothesis", "conclusion", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    alpha, beta, gamma, delta = map(_as_weight, (alpha, beta, gamma, delta))
    out: dict = {}
    if mode in ("hypothesis", "both"):
        w = ad_hypothesis(L, alpha, beta, gamma, delta, cap, sample, seed)
        out["hypothesis"] = w is None
        if w is not None:
            x, y = w
            out["witness"] = w
            out["witness_values"] = (alpha.values[x], beta.values[y],
                                     gamma.values[L.join[x, y]], delta.values[L.meet[x, y]])
    if mode in ("conclusion", "both"):
        Xs, Ys = _subset(L, X), _subset(L, Y)
        lhs = alpha.total(Xs) * beta.total(Ys)
        rhs = gamma.total(set_join(L, Xs, Ys)) * delta.total(set_meet(L, Xs, Ys))
        out.update(lhs=lhs, rhs=rhs, conclusion=lhs <= rhs)
    return ADReport(**out)


def rho_sum(L: LatticeInstance, rho: WeightFunction, r: ModularFunctionFamily,
            subset: Sequence[int], scale: int = 1) -> MultiPoly:
    """``sum over x in subset of rho(x) * q^r(x)``, multiplied by ``scale``."""
    exps = r.exponents()
    acc: dict = {}
    for x in subset:
        c = rho.values[x] * scale
        if c:
            if c.denominator != 1:
                raise ValueError("scale does not clear the weight denominators")
            acc[exps[x]] = acc.get(exps[x], 0) + int(c)
    return MultiPoly(r.arity, acc)


@dataclass(frozen=True)
class ADMultiReport:
    lhs: MultiPoly
    rhs: MultiPoly
    dominance: Dominance
    scale: int = 1

    @property
    def ok(self) -> bool:
        return self.dominance.holds


def ad_multi_check(L: LatticeInstance, alpha, beta, gamma, delta, r: ModularFunctionFamily,
                   X=None, Y=None) -> ADMultiReport:
    """Coefficientwise check of ``a(X) b(Y) <= g(X v Y) d(X ^ Y)`` with ``q^r`` weights.

    Rational weights are scaled to integers; both sides end up multiplied by
    the same factor, the product of the four weight denominators.
    """
    r.require_modular(L)
    alpha, beta, gamma, delta = map(_as_weight, (alpha, beta, gamma, delta))
    Xs, Ys = _subset(L, X), _subset(L, Y)
    da, db, dg, dd = (w.denominator() for w in (alpha, beta, gamma, delta))
    lhs = rho_sum(L, alpha, r, Xs, da) * rho_sum(L, beta, r, Ys, db)
    rhs = rho_sum(L, gamma, r, set_join(L, Xs, Ys), dg) * rho_sum(L, delta, r, set_meet(L, Xs, Ys), dd)
    # lhs carries da*db, rhs carries dg*dd; bring both to the product of all four
    lhs, rhs = lhs * (dg * dd), rhs * (da * db)
    return ADMultiReport(lhs, rhs, poly_geq_coeffwise(rhs, lhs), da * db * dg * dd)


# -- indicator constructions ----------------------------------------------


def fishburn_indicators(L: LatticeInstance, A, B, C, D):
    """Four indicators for lower ideals ``A, B`` and upper ideals ``C, D``.

    Each picks the maps that vanish on one lower set and equal ``t`` on one
    upper set: ``(A, C)``, ``(B, D)``, ``(A & B, C | D)``, ``(A | B, C & D)``.
    """
    t = L.t
    S = L.states - L.offset
    A, B, C, D = (sorted(set(s)) for s in (A, B, C, D))

    def ind(zero, full):
        ok = np.ones(len(L), dtype=bool)
        if zero:
            ok &= (S[:, zero] == 0).all(axis=1)
        if full:
            ok &= (S[:, full] == t).all(axis=1)
        return WeightFunction.indicator(ok)

    sa, sb, sc, sd = map(set, (A, B, C, D))
    return (ind(A, C), ind(B, D),
            ind(sorted(sa & sb), sorted(sc | sd)), ind(sorted(sa | sb), sorted(sc & sd)))


def ddp_indicators(L: LatticeInstance, z: int, k: int, a: int, b: int):
    """Indicators on the shifted lattice ``{-b..t}`` used for the DDP inequality."""
    if L.kind != "ddp" or L.offset != b:
        raise ValueError("ddp indicators need the ddp lattice built with the same b")
    t = L.t
    S = L.states - L.offset
    nonneg = (S >= 0).all(axis=1)
    capped = (S <= t - b).all(axis=1)
    at_k, at_ka = S[:, z] == k, S[:, z] == k + a
    return tuple(WeightFunction.indicator(m) for m in
                 (at_k & nonneg, at_ka & capped, at_ka & nonneg, at_k & capped))


def cross_product_indicators(L: LatticeInstance, x: int, y: int, z: int, k: int, l: int):
    S = L.states - L.offset
    gy, gz = S[:, y] - S[:, x], S[:, z] - S[:, y]

    def ind(dk, dl):
        return WeightFunction.indicator((gy == k + dk) & (gz == l + dl))

    return ind(0, 0), ind(1, 1), ind(0, 1), ind(1, 0)


def complemented_elements(L: LatticeInstance) -> list[int]:
    return [x for x in range(len(L)) if complement(L, x) is not None]
