"""Reference kernels in pure Python and numpy.

Every function here has a twin with the same signature in the compiled
``_ckernels`` extension.  The two are interchangeable; tests run both.

Conventions shared by both backends:

* a poset on ``n`` elements is given by ``below``, a sequence of bitmasks
  where bit ``j`` of ``below[i]`` is set iff element ``j`` is strictly
  below element ``i`` (transitively closed, natural labeling);
* P-partition constraints are given by ``preds``, where ``preds[i]`` lists
  pairs ``(j, s)`` with ``j < i`` meaning ``A(i) >= A(j) + s``;
* lattices are given by ``join`` and ``meet`` index tables, ``-1`` marking
  a result that fell outside the element set.
"""
from __future__ import annotations

import numpy as np

BACKEND = "python"


def count_linear_extensions(below):
    n = len(below)
    full = (1 << n) - 1
    layer = {0: 1}
    for _ in range(n):
        nxt = {}
        for mask, ways in layer.items():
            for x in range(n):
                bit = 1 << x
                if not mask & bit and below[x] & mask == below[x]:
                    key = mask | bit
                    nxt[key] = nxt.get(key, 0) + ways
        layer = nxt
    return layer.get(full, 0)


def count_pp_ideals(below, t, lo, hi):
    """Count order-preserving maps with ``lo[x] <= A(x) <= hi[x] <= t``.

    Each such map is a multichain ``J_0 <= ... <= J_t = X`` of lower ideals
    with ``J_v = {x : A(x) <= v}``; the count runs a sum-over-subsets
    transform once per level.
    """
    n = len(below)
    size = 1 << n
    ideal = [all(below[x] & m == below[x] for x in range(n) if m >> x & 1)
             for m in range(size)]

    def allowed(v):
        must_in = sum(1 << x for x in range(n) if hi[x] <= v)
        must_out = sum(1 << x for x in range(n) if lo[x] > v)
        return [ideal[m] and m & must_in == must_in and not m & must_out
                for m in range(size)]

    ok = allowed(0)
    f = [1 if ok[m] else 0 for m in range(size)]
    for v in range(1, t + 1):
        for b in range(n):
            bit = 1 << b
            for m in range(size):
                if m & bit:
                    f[m] += f[m ^ bit]
        ok = allowed(v)
        f = [f[m] if ok[m] else 0 for m in range(size)]
    return f[size - 1]


def _walk(preds, lo, hi, visit):
    n = len(lo)
    vals = [0] * n

    def rec(i):
        if i == n:
            visit(vals)
            return
        start = lo[i]
        for j, s in preds[i]:
            if vals[j] + s > start:
                start = vals[j] + s
        for v in range(start, hi[i] + 1):
            vals[i] = v
            rec(i + 1)

    rec(0)


def enumerate_pp(preds, lo, hi):
    n = len(lo)
    rows = []
    _walk(preds, lo, hi, lambda vals: rows.append(tuple(vals)))
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


def count_pp_enum(preds, lo, hi):
    total = [0]

    def bump(_):
        total[0] += 1

    _walk(preds, lo, hi, bump)
    return total[0]


def poly_mul_dense(ka, ca, kb, cb, keyspace):
    acc = {}
    for k1, c1 in zip(ka.tolist(), ca.tolist()):
        for k2, c2 in zip(kb.tolist(), cb.tolist()):
            k = k1 + k2
            acc[k] = acc.get(k, 0) + c1 * c2
    keys = sorted(k for k, c in acc.items() if c)
    return (np.array(keys, dtype=np.int64),
            np.array([acc[k] for k in keys], dtype=np.int64))


def lattice_tables(states, mode, anchor):
    """Join/meet index tables for a lexicographically sorted state array.

    ``mode`` 0 is pointwise max/min; mode 1 is the anchored operation
    ``max(S(w) - S(y), T(w) - T(y)) + min(S(y), T(y))`` (and dually) with
    ``y = anchor``.
    """
    states = np.asarray(states, dtype=np.int64)
    m, n = states.shape
    join = np.full((m, m), -1, dtype=np.int32)
    meet = np.full((m, m), -1, dtype=np.int32)
    if m == 0:
        return join, meet
    radix = int(states.max()) + 1 if states.size else 1
    powers = radix ** np.arange(n - 1, -1, -1, dtype=np.int64)
    codes = states @ powers

    def locate(block):
        c = block @ powers
        pos = np.searchsorted(codes, c)
        pos = np.minimum(pos, m - 1)
        inside = ((block >= 0) & (block < radix)).all(axis=1)
        return np.where(inside & (codes[pos] == c), pos, -1).astype(np.int32)

    if mode == 1:
        diff = states - states[:, [anchor]]
    for x in range(m):
        if mode == 0:
            hi = np.maximum(states[x], states)
            lo = np.minimum(states[x], states)
        else:
            sy, ty = states[x, anchor], states[:, anchor][:, None]
            hi = np.maximum(diff[x], diff) + np.minimum(sy, ty)
            lo = np.minimum(diff[x], diff) + np.maximum(sy, ty)
        join[x] = locate(hi)
        meet[x] = locate(lo)
    return join, meet


def _first(mask):
    idx = np.flatnonzero(mask)
    return int(idx[0]) if idx.size else None


def lattice_axioms(join, meet):
    """First violated lattice law, as ``(law, witness)``, or ``None``.

    Pair laws are checked in the order closure, commutativity, idempotency,
    absorption; then triples ``(x, y, z)`` in lexicographic order against
    join-associativity, meet-associativity and distributivity.
    """
    join = np.asarray(join)
    meet = np.asarray(meet)
    m = join.shape[0]
    bad = _first(((join < 0) | (meet < 0)).ravel())
    if bad is not None:
        return "closure", divmod(bad, m)
    bad = _first(((join != join.T) | (meet != meet.T)).ravel())
    if bad is not None:
        return "commutativity", divmod(bad, m)
    ar = np.arange(m)
    bad = _first((join[ar, ar] != ar) | (meet[ar, ar] != ar))
    if bad is not None:
        return "idempotency", (bad,)
    absorb = (join[ar[:, None], meet] != ar[:, None]) | (meet[ar[:, None], join] != ar[:, None])
    bad = _first(absorb.ravel())
    if bad is not None:
        return "absorption", divmod(bad, m)
    laws = ("join-associativity", "meet-associativity", "distributivity")
    for x in range(m):
        jx, mx = join[x], meet[x]
        masks = (join[jx[:, None], ar[None, :]] != jx[join],
                 meet[mx[:, None], ar[None, :]] != mx[meet],
                 mx[join] != join[mx[:, None], mx[None, :]])
        bad = _first((masks[0] | masks[1] | masks[2]).ravel())
        if bad is not None:
            y, z = divmod(bad, m)
            law = next(name for name, mask in zip(laws, masks) if mask[y, z])
            return law, (x, y, z)
    return None


def _weights(*arrays):
    # one dtype for all arrays, so products never mix int64 with big ints
    arrays = [list(a) for a in arrays]
    small = all(-(1 << 30) < v < (1 << 30) for a in arrays for v in a)
    return [np.array(a, dtype=np.int64 if small else object) for a in arrays]


def modular_violation(r, join, meet):
    r, = _weights(r)
    join = np.asarray(join)
    meet = np.asarray(meet)
    bad = _first((r[:, None] + r[None, :] != r[join] + r[meet]).ravel())
    return None if bad is None else divmod(bad, len(r))


def ad_violation(alpha, beta, gamma, delta, join, meet):
    """First pair ``(x, y)`` with ``alpha[x]*beta[y] > gamma[x v y]*delta[x ^ y]``."""
    alpha, beta, gamma, delta = _weights(alpha, beta, gamma, delta)
    join = np.asarray(join)
    meet = np.asarray(meet)
    m = len(alpha)
    for x in range(m):
        if alpha[x] == 0:
            continue
        lhs = alpha[x] * beta
        rhs = gamma[join[x]] * delta[meet[x]]
        bad = _first((lhs > rhs).astype(bool))
        if bad is not None:
            return x, bad
    return None
