"""Finite posets with a natural labeling, ideals and induced subposets.

Elements are indexed ``0..n-1`` and every constructor relabels so that the
index map is a linear extension (``i < j`` whenever ``i`` precedes ``j``).
The strict order is stored transitively closed as one bitmask per element:
bit ``j`` of ``below[i]`` is set iff ``j`` is strictly below ``i``.

Each element also carries an identity in ``ids``.  Identities survive
:func:`induced_subposet`, so generating functions of subposets are written
in the variables of the parent poset.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Iterator

from . import young


class CycleError(ValueError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("cover relation has a cycle: " + " -> ".join(map(str, self.cycle)))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    below: tuple[int, ...]
    ids: tuple[int, ...] = None
    universe: int = None

    def __post_init__(self):
        below = tuple(int(b) for b in self.below)
        object.__setattr__(self, "below", below)
        n = len(below)
        if self.ids is None:
            object.__setattr__(self, "ids", tuple(range(n)))
        else:
            object.__setattr__(self, "ids", tuple(self.ids))
        if self.universe is None:
            object.__setattr__(self, "universe", max(self.ids, default=-1) + 1)
        if len(self.ids) != n or len(set(self.ids)) != n:
            raise ValueError("ids must be distinct, one per element")
        if any(not 0 <= e < self.universe for e in self.ids):
            raise ValueError("ids must lie in range(universe)")
        for i, b in enumerate(below):
            if b >> i:
                raise ValueError(f"labeling is not natural at element {i}")
            for j in _bits(b):
                if below[j] & ~b:
                    raise ValueError("relation is not transitively closed")

    @property
    def n(self) -> int:
        return len(self.below)

    def __len__(self) -> int:
        return len(self.below)

    def less(self, i: int, j: int) -> bool:
        return bool(self.below[j] >> i & 1)

    @cached_property
    def above(self) -> tuple[int, ...]:
        up = [0] * self.n
        for j, b in enumerate(self.below):
            for i in _bits(b):
                up[i] |= 1 << j
        return tuple(up)

    def relations(self) -> set[tuple[int, int]]:
        return {(i, j) for j, b in enumerate(self.below) for i in _bits(b)}

    def covers(self) -> list[tuple[int, int]]:
        """Transitive reduction, as sorted ``(lower, upper)`` pairs."""
        out = []
        for j, b in enumerate(self.below):
            for i in _bits(b):
                # i is covered by j unless some k sits strictly between them
                if not any(self.below[k] >> i & 1 for k in _bits(b)):
                    out.append((i, j))
        return sorted(out)

    def labels(self) -> list[str]:
        return [f"x{e + 1}" for e in self.ids]

    def mask(self, subset: Iterable[int]) -> int:
        m = 0
        for i in subset:
            if not 0 <= i < self.n:
                raise ValueError(f"element {i} out of range for a poset on {self.n} elements")
            m |= 1 << i
        return m

    def canonical_form(self) -> tuple[int, ...]:
        """Isomorphism invariant: the least ``below`` tuple over natural relabelings."""
        best = None
        for perm in permutations(range(self.n)):
            # perm[i] is the new index of old element i
            if any(perm[i] > perm[j] for i, j in self.relations()):
                continue
            new = [0] * self.n
            for j, b in enumerate(self.below):
                new[perm[j]] = sum(1 << perm[i] for i in _bits(b))
            cand = tuple(new)
            if best is None or cand < best:
                best = cand
        return best if best is not None else ()

    def is_isomorphic(self, other: "Poset") -> bool:
        return self.n == other.n and self.canonical_form() == other.canonical_form()

    def to_text(self) -> str:
        """Serialize as ``n`` followed by 1-based cover pairs, one per line."""
        lines = [str(self.n)] + [f"{i + 1} {j + 1}" for i, j in self.covers()]
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        rels = ", ".join(f"{i}<{j}" for i, j in self.covers())
        return f"Poset(n={self.n}, covers=[{rels}])"


def _closure(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    below = [0] * n
    for i, j in pairs:
        below[j] |= 1 << i
    changed = True
    while changed:
        changed = False
        for j in range(n):
            acc = below[j]
            for i in _bits(below[j]):
                acc |= below[i]
            if acc != below[j]:
                below[j] = acc
                changed = True
    return below


def _find_cycle(n: int, edges: dict[int, list[int]]) -> list[int]:
    color = [0] * n
    stack: list[int] = []

    def dfs(u):
        color[u] = 1
        stack.append(u)
        for v in edges.get(u, ()):
            if color[v] == 1:
                return stack[stack.index(v):] + [v]
            if color[v] == 0:
                found = dfs(v)
                if found:
                    return found
        stack.pop()
        color[u] = 2
        return None

    for u in range(n):
        if color[u] == 0:
            found = dfs(u)
            if found:
                return found
    return []


def build_poset(n: int, covers: Iterable[tuple[int, int]], ids=None, universe=None):
    """Build a poset from 0-based cover pairs ``(lower, upper)``.

    Returns ``(poset, perm)`` where ``perm[i]`` is the new index of input
    element ``i``.  Elements are relabeled by a topological sort that
    always takes the smallest available original index.
    """
    covers = [(int(i), int(j)) for i, j in covers]
    for i, j in covers:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"cover ({i}, {j}) out of range for n={n}")
        if i == j:
            raise CycleError([i, i])
    edges: dict[int, list[int]] = {}
    indeg = [0] * n
    for i, j in sorted(set(covers)):
        edges.setdefault(i, []).append(j)
        indeg[j] += 1
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in edges.get(u, ()):
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if len(order) < n:
        raise CycleError(_find_cycle(n, edges))
    perm = [0] * n
    for new, old in enumerate(order):
        perm[old] = new
    below = _closure(n, [(perm[i], perm[j]) for i, j in covers])
    if ids is not None:
        new_ids = [0] * n
        for old, e in enumerate(ids):
            new_ids[perm[old]] = e
        ids = new_ids
    return Poset(tuple(below), ids, universe), tuple(perm)


def from_relations(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    return build_poset(n, pairs)[0]


def chain(n: int) -> Poset:
    return Poset(tuple((1 << i) - 1 for i in range(n)))


def antichain(n: int) -> Poset:
    return Poset((0,) * n)


def dual(P: Poset) -> Poset:
    """Reverse the order; element identities are carried along."""
    Q, _ = build_poset(P.n, [(j, i) for i, j in P.covers()], ids=P.ids, universe=P.universe)
    return Q


def linear_sum(P: Poset, Q: Poset) -> Poset:
    """Every element of ``P`` below every element of ``Q``; fresh identities."""
    low = (1 << P.n) - 1
    return Poset(P.below + tuple(low | (b << P.n) for b in Q.below))


def parallel_sum(P: Poset, Q: Poset) -> Poset:
    return Poset(P.below + tuple(b << P.n for b in Q.below))


def poset_construct(kind: str, *args) -> Poset:
    if kind == "chain":
        return chain(*args)
    if kind == "antichain":
        return antichain(*args)
    if kind == "dual":
        return dual(*args)
    if kind == "linear_sum":
        return linear_sum(*args)
    if kind == "parallel_sum":
        return parallel_sum(*args)
    raise ValueError(f"unknown construction {kind!r}")


def skew_shape_poset(shape) -> Poset:
    """Cells of a skew shape, ordered by ``(i, j) <= (i', j')`` iff ``i <= i'`` and ``j <= j'``.

    Cells are indexed row-major, in the order of :func:`young.cells`.
    """
    cells = young.cells(shape)
    below = []
    for a, (i, j) in enumerate(cells):
        below.append(sum(1 << b for b, (k, l) in enumerate(cells[:a]) if k <= i and l <= j))
    return Poset(tuple(below))


def ideal_check(P: Poset, subset: Iterable[int], kind: str = "lower") -> bool:
    m = P.mask(subset)
    rel = P.below if kind == "lower" else P.above if kind == "upper" else None
    if rel is None:
        raise ValueError(f"kind must be 'lower' or 'upper', not {kind!r}")
    return all(rel[x] & m == rel[x] for x in _bits(m))


def lower_ideal_masks(P: Poset) -> list[int]:
    """Bitmasks of all lower ideals, in increasing numeric order."""
    ideals = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for m in frontier:
            for x in range(P.n):
                bit = 1 << x
                if not m & bit and P.below[x] & m == P.below[x] and m | bit not in ideals:
                    ideals.add(m | bit)
                    nxt.append(m | bit)
        frontier = nxt
    return sorted(ideals)


def enumerate_lower_ideals(P: Poset) -> list[frozenset[int]]:
    return [frozenset(_bits(m)) for m in lower_ideal_masks(P)]


def enumerate_upper_ideals(P: Poset) -> list[frozenset[int]]:
    full = (1 << P.n) - 1
    return [frozenset(_bits(full ^ m)) for m in lower_ideal_masks(P)]


def induced_subposet(P: Poset, subset: Iterable[int]) -> Poset:
    """Restriction to ``subset``, ordered by parent index, keeping parent identities."""
    keep = sorted(set(subset))
    P.mask(keep)
    pos = {old: new for new, old in enumerate(keep)}
    below = tuple(sum(1 << pos[i] for i in _bits(P.below[j]) if i in pos) for j in keep)
    return Poset(below, tuple(P.ids[i] for i in keep), P.universe)


def parse_poset_text(text: str) -> Poset:
    """Parse the text format: first line ``n``, then ``i j`` cover pairs (1-based)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty poset description")
    n = int(lines[0])
    covers = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad cover line: {ln!r}")
        i, j = int(parts[0]) - 1, int(parts[1]) - 1
        covers.append((i, j))
    return build_poset(n, covers)[0]
