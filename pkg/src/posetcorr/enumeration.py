"""Linear extensions and P-partitions: listing, counting and slices.

A P-partition with bound ``t`` is an order-preserving map ``A: X -> {0..t}``.
Listings assign values in index order, smallest value first, so rows come
out in lexicographic order.  Counting uses dynamic programs over lower
ideals (see :mod:`posetcorr.kernels`) and falls back to backtracking when
the state space would be too large.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import kernels
from .poset import Poset

# Ideal DPs run over the full 2^n subset cube; past this many subsets the
# counters switch to backtracking.
DP_THRESHOLD = 1 << 20

LinearExtension = tuple


def _extensions(P: Poset):
    n = P.n
    order: list[int] = []

    def rec(mask):
        if len(order) == n:
            yield tuple(order)
            return
        for x in range(n):
            if not mask >> x & 1 and P.below[x] & mask == P.below[x]:
                order.append(x)
                yield from rec(mask | 1 << x)
                order.pop()

    yield from rec(0)


def count_linear_extensions(P: Poset, threshold: int = DP_THRESHOLD) -> int:
    if P.n == 0:
        return 1
    if 1 << P.n <= threshold:
        return kernels.count_linear_extensions(P.below)
    return sum(1 for _ in _extensions(P))


def enumerate_linear_extensions(P: Poset, mode: str = "list"):
    """All linear extensions in lexicographic order, or ``e(P)`` when ``mode='count'``."""
    if mode == "count":
        return count_linear_extensions(P)
    if mode != "list":
        raise ValueError(f"mode must be 'list' or 'count', not {mode!r}")
    return list(_extensions(P))


def is_linear_extension(P: Poset, L: Sequence[int]) -> bool:
    if sorted(L) != list(range(P.n)):
        return False
    seen = 0
    for x in L:
        if P.below[x] & seen != P.below[x]:
            return False
        seen |= 1 << x
    return True


MAJ_CONVENTIONS = ("descent", "ascent", "dual")
DEFAULT_MAJ = "dual"


def major_index(P: Poset, L: Sequence[int], convention: str = DEFAULT_MAJ) -> int:
    """Major index of a linear extension read as the word ``w = L`` of natural labels.

    ``"dual"`` (the default) sums ``n - i`` over descents ``w_i > w_{i+1}``,
    positions counted from 1.  This is the classical major index of the
    reversed word on the dual poset, which is what order-preserving maps
    need.  ``"descent"`` sums ``i`` over the same descents and ``"ascent"``
    sums ``i`` over ``w_i < w_{i+1}``; both are kept for calibration.
    """
    if not is_linear_extension(P, L):
        raise ValueError(f"{tuple(L)} is not a linear extension")
    n = len(L)
    if convention == "dual":
        return sum(n - i for i in range(1, n) if L[i - 1] > L[i])
    if convention == "descent":
        return sum(i for i in range(1, n) if L[i - 1] > L[i])
    if convention == "ascent":
        return sum(i for i in range(1, n) if L[i - 1] < L[i])
    raise ValueError(f"unknown convention {convention!r}")


def maj_generating_function(P: Poset, convention: str = DEFAULT_MAJ) -> list[int]:
    """Coefficients of the sum of ``q**maj(L)`` over all linear extensions."""
    coeffs = [0] * (P.n * (P.n - 1) // 2 + 1)
    for L in _extensions(P):
        coeffs[major_index(P, L, convention)] += 1
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class SliceConstraint:
    """Restrict P-partitions by fixed values and/or one gap triple.

    ``fixed`` maps element index to its required value.  ``differences``
    is ``(x, y, z, k, l)`` meaning ``A(y) - A(x) = k`` and ``A(z) - A(y) = l``.
    """

    fixed: Mapping[int, int] = field(default_factory=dict)
    differences: tuple[int, int, int, int, int] | None = None

    def validate(self, n: int) -> None:
        for x in self.fixed:
            if not 0 <= x < n:
                raise ValueError(f"constraint element {x} out of range")
        if self.differences is not None:
            x, y, z, k, l = self.differences
            if len({x, y, z}) != 3:
                raise ValueError("difference constraint needs three distinct elements")
            if not all(0 <= e < n for e in (x, y, z)):
                raise ValueError("difference constraint element out of range")

    @classmethod
    def fix(cls, element: int, value: int) -> "SliceConstraint":
        return cls({element: value})

    @classmethod
    def gaps(cls, x: int, y: int, z: int, k: int, l: int) -> "SliceConstraint":
        return cls({}, (x, y, z, k, l))


def edge_preds(P: Poset, strict: Iterable[tuple[int, int]] = ()) -> list[list[tuple[int, int]]]:
    """Cover constraints as ``preds[j] = [(i, s), ...]`` meaning ``A(j) >= A(i) + s``."""
    strict = set(strict)
    preds: list[list[tuple[int, int]]] = [[] for _ in range(P.n)]
    for i, j in P.covers():
        preds[j].append((i, 1 if (i, j) in strict else 0))
    return preds


def _propagate(preds, lo, hi):
    """Tighten bounds along edges; returns False when some range is empty."""
    n = len(lo)
    for j in range(n):
        for i, s in preds[j]:
            lo[j] = max(lo[j], lo[i] + s)
    for j in range(n - 1, -1, -1):
        for i, s in preds[j]:
            hi[i] = min(hi[i], hi[j] - s)
    return all(lo[i] <= hi[i] for i in range(n))


def _bound_sets(P: Poset, t: int, c: SliceConstraint | None, low: int):
    """Yield ``(lo, hi)`` bound vectors whose solution sets partition the slice."""
    n = P.n
    lo = [low] * n
    hi = [t] * n
    if c is not None:
        c.validate(n)
        for x, v in c.fixed.items():
            lo[x] = max(lo[x], v)
            hi[x] = min(hi[x], v)
    if c is None or c.differences is None:
        yield lo, hi
        return
    x, y, z, k, l = c.differences
    for v in range(low, t + 1):
        a, b = list(lo), list(hi)
        for e, val in ((x, v), (y, v + k), (z, v + k + l)):
            a[e] = max(a[e], val)
            b[e] = min(b[e], val)
        yield a, b


def p_partition_array(P: Poset, t: int, c: SliceConstraint | None = None,
                      strict: Iterable[tuple[int, int]] = (), low: int = 0) -> np.ndarray:
    """P-partitions as rows of a ``(count, n)`` int64 array, lexicographically sorted.

    ``strict`` lists cover pairs that must increase strictly; ``low`` is the
    smallest allowed value (1 for tableaux).
    """
    if t < 0:
        raise ValueError("bound t must be nonnegative")
    preds = edge_preds(P, strict)
    blocks = []
    for lo, hi in _bound_sets(P, t, c, low):
        if _propagate(preds, lo, hi):
            blocks.append(kernels.enumerate_pp(preds, np.array(lo, dtype=np.int64),
                                               np.array(hi, dtype=np.int64)))
    if not blocks:
        return np.zeros((0, P.n), dtype=np.int64)
    rows = np.concatenate(blocks) if len(blocks) > 1 else blocks[0]
    if len(blocks) > 1 and len(rows) and P.n:
        rows = rows[np.lexsort(rows.T[::-1])]
    return rows


def enumerate_p_partitions(P: Poset, t: int, c: SliceConstraint | None = None) -> list[tuple[int, ...]]:
    return [tuple(r) for r in p_partition_array(P, t, c).tolist()]


def count_p_partitions(P: Poset, t: int, c: SliceConstraint | None = None,
                       strict: Iterable[tuple[int, int]] = (), low: int = 0,
                       threshold: int = DP_THRESHOLD) -> int:
    if t < 0:
        raise ValueError("bound t must be nonnegative")
    strict = tuple(strict)
    preds = edge_preds(P, strict)
    total = 0
    for lo, hi in _bound_sets(P, t, c, low):
        if not _propagate(preds, lo, hi):
            continue
        if P.n == 0:
            total += 1
        elif not strict and 1 << P.n <= threshold:
            total += kernels.count_pp_ideals(P.below, t, np.array(lo, dtype=np.int64),
                                             np.array(hi, dtype=np.int64))
        else:
            total += kernels.count_pp_enum(preds, np.array(lo, dtype=np.int64),
                                           np.array(hi, dtype=np.int64))
    return total


def order_polynomial(P: Poset, t: int) -> int:
    return count_p_partitions(P, t)



def asymptotic_ratio(P: Poset, t: int) -> Fraction:
    """``Omega(P,t) n! / (t^n e(P))``, which tends to 1 as ``t`` grows."""
    if t < 1:
        raise ValueError("bound t must be positive")
    return Fraction(order_polynomial(P, t) * factorial(P.n), t ** P.n * count_linear_extensions(P))
