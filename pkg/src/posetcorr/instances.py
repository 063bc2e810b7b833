"""Instance generators: exhaustive small posets and seeded random ones."""
from __future__ import annotations

import random
from functools import lru_cache
from fractions import Fraction
from itertools import combinations, product

from .poset import Poset, _bits, _closure, lower_ideal_masks


@lru_cache(maxsize=None)
def all_posets(n: int) -> tuple[Poset, ...]:
    """Every poset on ``n`` elements up to isomorphism, naturally labeled.

    Candidates are all transitively closed relations contained in ``i < j``;
    each class is represented by its canonical form.
    """
    pairs = list(combinations(range(n), 2))
    seen = {}
    for bits in range(1 << len(pairs)):
        rel = [p for k, p in enumerate(pairs) if bits >> k & 1]
        below = [0] * n
        for i, j in rel:
            below[j] |= 1 << i
        if _closure(n, rel) != below:
            continue
        P = Poset(tuple(below))
        key = P.canonical_form()
        if key not in seen:
            seen[key] = Poset(key)
    return tuple(seen[k] for k in sorted(seen))


def random_poset(n: int, rng: random.Random, density: float | None = None) -> Poset:
    """Random naturally labeled poset: each pair ``i < j`` is a relation with the given odds."""
    if density is None:
        density = rng.uniform(0.15, 0.6)
    rel = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < density]
    return Poset(tuple(_closure(n, rel)))


def random_bipartite_poset(n: int, rng: random.Random, density: float | None = None) -> Poset:
    """Height at most 2: a random bottom level, each bottom/top pair a cover with the given odds."""
    if density is None:
        density = rng.uniform(0.2, 0.7)
    low = rng.randint(0, n)
    rel = [(i, j) for i in range(low) for j in range(low, n) if rng.random() < density]
    return Poset(tuple(_closure(n, rel)))


def random_posets(count: int, n_range: tuple[int, int], seed: int = 0, bipartite: bool = False) -> list[Poset]:
    rng = random.Random(seed)
    make = random_bipartite_poset if bipartite else random_poset
    return [make(rng.randint(*n_range), rng) for _ in range(count)]


def upper_ideal_masks(P: Poset) -> list[int]:
    full = (1 << P.n) - 1
    return sorted(full ^ m for m in lower_ideal_masks(P))


def random_quadruple(P: Poset, rng: random.Random):
    """Lower ideals ``A, B`` and upper ideals ``C, D`` with ``A & C = B & D = {}``."""
    lowers = lower_ideal_masks(P)
    uppers = upper_ideal_masks(P)
    A, B = rng.choice(lowers), rng.choice(lowers)
    C = rng.choice([u for u in uppers if not u & A])
    D = rng.choice([u for u in uppers if not u & B])
    return tuple(sorted(_bits(m)) for m in (A, B, C, D))


def all_quadruples(P: Poset):
    """Every admissible ``(A, B, C, D)``, as index lists."""
    lowers = lower_ideal_masks(P)
    uppers = upper_ideal_masks(P)
    for A in lowers:
        for B in lowers:
            for C in (u for u in uppers if not u & A):
                for D in (u for u in uppers if not u & B):
                    yield tuple(sorted(_bits(m)) for m in (A, B, C, D))


def posets_up_to(max_n: int) -> list[Poset]:
    return [P for n in range(max_n + 1) for P in all_posets(n)]


def random_fkg_weights(k: int, rng: random.Random, upsets: int = 3):
    """Four-functions weights on the Boolean lattice ``B_k`` from a product measure.

    ``mu`` has independent rational odds per coordinate; ``f`` and ``g`` are
    increasing, each a maximum of scaled indicators of random principal up-sets.
    Returns ``(mu*f, mu*g, mu*f*g, mu)`` as lists of Fractions, in the element
    order of :func:`posetcorr.lattice.boolean_lattice`.
    """
    odds = [Fraction(rng.randint(1, 9), 10) for _ in range(k)]
    points = list(product((0, 1), repeat=k))

    def increasing():
        gens = [(tuple(rng.randint(0, 1) for _ in range(k)), rng.randint(1, 5)) for _ in range(upsets)]
        return [max([c for g, c in gens if all(a >= b for a, b in zip(p, g))], default=0) + 1
                for p in points]

    mu = [Fraction(1) for _ in points]
    for i, p in enumerate(points):
        for bit, o in zip(p, odds):
            mu[i] *= o if bit else 1 - o
    f, g = increasing(), increasing()
    return ([m * a for m, a in zip(mu, f)], [m * b for m, b in zip(mu, g)],
            [m * a * b for m, a, b in zip(mu, f, g)], mu)
