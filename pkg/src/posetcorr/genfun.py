"""Generating functions of P-partitions as :class:`MultiPoly` values.

Variable conventions:

* ``q`` flavor: one variable ``q``, weight ``q**|A|`` with ``|A|`` the sum of values;
* ``multivariate-q``: one variable per element identity of the poset's
  universe, named ``q1..qm``; subposets keep the parent's variables;
* profile ``K_z``: variables ``z0..zN``, exponent of ``z_i`` is the number
  of elements with value ``i``;
* Schur polynomials: variables ``z1..zN``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import young
from .enumeration import SliceConstraint, count_p_partitions, p_partition_array
from .poly import MultiPoly, QPow
from .poset import Poset, skew_shape_poset

FLAVORS = ("plain", "q", "multivariate-q", "profile")


def q_names(universe: int) -> tuple[str, ...]:
    return tuple(f"q{i + 1}" for i in range(universe))


def z_names(N: int, start: int = 0) -> tuple[str, ...]:
    return tuple(f"z{i}" for i in range(start, N + 1))


def _from_counts(rows: np.ndarray, nvars: int, names) -> MultiPoly:
    """Collect exponent rows (one per object) into a polynomial."""
    if len(rows) == 0:
        return MultiPoly(nvars, {}, names)
    keys, counts = np.unique(rows, axis=0, return_counts=True)
    return MultiPoly._raw(nvars, dict(zip(map(tuple, keys.tolist()), counts.tolist())), tuple(names))


def weight_gf(rows: np.ndarray) -> MultiPoly:
    if len(rows) == 0:
        return MultiPoly(1, {})
    hist = np.bincount(rows.sum(axis=1))
    return MultiPoly._raw(1, {(d,): int(c) for d, c in enumerate(hist.tolist()) if c}, ("q",))


def element_gf(P: Poset, rows: np.ndarray) -> MultiPoly:
    exps = np.zeros((len(rows), P.universe), dtype=np.int64)
    if P.n:
        exps[:, list(P.ids)] = rows
    # distinct maps give distinct exponent vectors, so every coefficient is 1
    return MultiPoly._raw(P.universe, dict.fromkeys(map(tuple, exps.tolist()), 1), q_names(P.universe))


def value_count_gf(rows: np.ndarray, first: int, last: int) -> MultiPoly:
    span = np.arange(first, last + 1)
    counts = (rows[:, :, None] == span[None, None, :]).sum(axis=1) if len(rows) else rows
    names = z_names(last, first)
    return _from_counts(counts, len(span), names)


def order_poly(P: Poset, t: int, flavor: str = "plain", c: SliceConstraint | None = None) -> MultiPoly:
    """``Omega(P,t)`` in the requested flavor, restricted by ``c`` when given."""
    if flavor == "plain":
        return MultiPoly.constant(count_p_partitions(P, t, c))
    rows = p_partition_array(P, t, c)
    if flavor == "q":
        return weight_gf(rows)
    if flavor == "multivariate-q":
        return element_gf(P, rows)
    if flavor == "profile":
        return value_count_gf(rows, 0, t)
    raise ValueError(f"unknown flavor {flavor!r}")


def profile_gf(P: Poset, N: int) -> MultiPoly:
    if N < 0:
        raise ValueError("N must be nonnegative")
    return value_count_gf(p_partition_array(P, N), 0, N)


@dataclass(frozen=True)
class GFSpec:
    flavor: str
    poset: Poset
    bound: int
    constraint: SliceConstraint | None = None

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.bound < 0:
            raise ValueError("bound must be nonnegative")
        if self.flavor == "profile" and self.constraint is not None:
            raise ValueError("profile generating functions take no slice constraint")
        if self.constraint is not None:
            self.constraint.validate(self.poset.n)

    def build(self) -> MultiPoly:
        return order_poly(self.poset, self.bound, self.flavor, self.constraint)


def column_strict_edges(shape) -> list[tuple[int, int]]:
    """Cover pairs of the skew poset that join vertically adjacent cells."""
    cells = young.cells(shape)
    index = {cell: k for k, cell in enumerate(cells)}
    return [(index[(i, j)], index[(i + 1, j)]) for (i, j) in cells if (i + 1, j) in index]


def ssyt_array(shape, N: int) -> np.ndarray:
    """Semistandard tableaux with entries ``1..N``, one row-major filling per row."""
    if not isinstance(shape, young.SkewShape):
        shape = young.skew(shape)
    P = skew_shape_poset(shape)
    return p_partition_array(P, N, strict=column_strict_edges(shape), low=1)


def schur_poly(shape, N: int) -> MultiPoly:
    if N < 1:
        raise ValueError("need at least one variable")
    return value_count_gf(ssyt_array(shape, N), 1, N)


def principal_specialization(lam: Sequence[int], D: int) -> MultiPoly:
    """``s_lam(q, q^2, q^3, ...)`` truncated at degree ``D``.

    Computed as ``Omega_q(P_lam, inf) * q**n(lam)`` with ``n(lam)`` summing
    row indices counted from 1.  A P-partition contributing below degree
    ``D`` has every entry at most ``D - n(lam)``, so a finite bound suffices.
    """
    lam = young.partition(lam)
    shift = young.nstat(lam)
    if D < shift:
        return MultiPoly(1, {})
    gf = weight_gf(p_partition_array(skew_shape_poset(lam), D - shift))
    return gf.shift((shift,)).truncate(D)


def specialize_all(f: MultiPoly, value) -> MultiPoly:
    return f.substitute([value] * f.nvars)


def geometric_plan(nvars: int, start: int = 0) -> list[QPow]:
    """``z_i <- q**(i + start)`` for every variable."""
    return [QPow(i + start) for i in range(nvars)]

