"""Brute-force reference computations.

Nothing here shares code paths with the counting kernels: linear extensions
are filtered permutations, P-partitions are filtered points of the box
``{lo..t}^n`` checked against the full relation, and tableaux are built row
by row from weakly increasing tuples.  Verifiers compare against these
before issuing a verdict.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product

from . import young
from .poly import MultiPoly


@lru_cache(maxsize=4096)
def _e(below: tuple[int, ...]) -> int:
    n = len(below)
    count = 0
    for perm in permutations(range(n)):
        pos = [0] * n
        for k, x in enumerate(perm):
            pos[x] = k
        if all(pos[i] < pos[j] for j in range(n) for i in range(n) if below[j] >> i & 1):
            count += 1
    return count


def linear_extension_count(P) -> int:
    return _e(tuple(P.below))


@lru_cache(maxsize=4096)
def _pp_rows(below, t, fixed, differences):
    n = len(below)
    rel = [(i, j) for j in range(n) for i in range(n) if below[j] >> i & 1]
    out = []
    for A in product(range(t + 1), repeat=n):
        if any(A[i] > A[j] for i, j in rel):
            continue
        if any(A[x] != v for x, v in fixed):
            continue
        if differences is not None:
            x, y, z, k, l = differences
            if A[y] - A[x] != k or A[z] - A[y] != l:
                continue
        out.append(A)
    return tuple(out)


def p_partitions(P, t, c=None) -> tuple[tuple[int, ...], ...]:
    fixed = tuple(sorted(c.fixed.items())) if c is not None else ()
    diffs = c.differences if c is not None else None
    return _pp_rows(tuple(P.below), t, fixed, diffs)


def order_poly(P, t, c=None) -> int:
    return len(p_partitions(P, t, c))


def order_poly_q(P, t, c=None) -> MultiPoly:
    acc: dict = {}
    for A in p_partitions(P, t, c):
        key = (sum(A),)
        acc[key] = acc.get(key, 0) + 1
    return MultiPoly(1, acc)


def order_poly_bq(P, t, c=None) -> MultiPoly:
    acc: dict = {}
    for A in p_partitions(P, t, c):
        exp = [0] * P.universe
        for e, v in zip(P.ids, A):
            exp[e] = v
        key = tuple(exp)
        acc[key] = acc.get(key, 0) + 1
    return MultiPoly(P.universe, acc)


def profile(P, N) -> MultiPoly:
    acc: dict = {}
    for A in p_partitions(P, N):
        key = tuple(A.count(v) for v in range(N + 1))
        acc[key] = acc.get(key, 0) + 1
    return MultiPoly(N + 1, acc, [f"z{i}" for i in range(N + 1)])


@lru_cache(maxsize=4096)
def _ssyt(outer, inner, N):
    rows = []
    for i, lam in enumerate(outer):
        mu = inner[i] if i < len(inner) else 0
        rows.append(list(combinations_with_replacement(range(1, N + 1), lam - mu)))
    out = []
    for filling in product(*rows):
        ok = True
        for i in range(1, len(outer)):
            start = inner[i] if i < len(inner) else 0
            above_start = inner[i - 1] if i - 1 < len(inner) else 0
            for col in range(start, outer[i]):
                if col >= above_start and filling[i - 1][col - above_start] >= filling[i][col - start]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(filling)
    return tuple(out)


def ssyt(shape, N):
    """Semistandard tableaux of a skew shape with entries in ``1..N``, as row tuples."""
    if not isinstance(shape, young.SkewShape):
        shape = young.skew(shape)
    return _ssyt(tuple(shape.outer), tuple(shape.inner), N)


def schur(shape, N) -> MultiPoly:
    acc: dict = {}
    for filling in ssyt(shape, N):
        flat = [v for row in filling for v in row]
        key = tuple(flat.count(v) for v in range(1, N + 1))
        acc[key] = acc.get(key, 0) + 1
    return MultiPoly(N, acc, [f"z{i}" for i in range(1, N + 1)])


def maj_polynomial(P, convention: str = "dual") -> MultiPoly:
    """Sum of ``q**maj`` over valid orderings found among all permutations."""
    n = P.n
    acc: dict = {}
    for perm in permutations(range(n)):
        pos = {x: k for k, x in enumerate(perm)}
        if any(pos[i] > pos[j] for j in range(n) for i in range(n) if P.below[j] >> i & 1):
            continue
        if convention == "dual":
            d = sum(n - k for k in range(1, n) if perm[k - 1] > perm[k])
        elif convention == "descent":
            d = sum(k for k in range(1, n) if perm[k - 1] > perm[k])
        else:
            d = sum(k for k in range(1, n) if perm[k - 1] < perm[k])
        acc[(d,)] = acc.get((d,), 0) + 1
    return MultiPoly(1, acc)
