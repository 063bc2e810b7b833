"""Integer partitions, skew shapes and their componentwise lattice operations.

Partitions are plain tuples of positive integers in weakly decreasing
order; the empty tuple is the empty partition.  Rows and columns of a
Young diagram are numbered from 1, so the cell ``(i, j)`` lies in row ``i``
and column ``j``.
"""
from __future__ import annotations

from math import factorial
from typing import Iterator, NamedTuple, Sequence

Partition = tuple


def partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a trimmed partition tuple."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    return parts


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition = ()

    def __str__(self) -> str:
        return format_skew(self)


def skew(outer: Sequence[int], inner: Sequence[int] = ()) -> SkewShape:
    lam, mu = partition(outer), partition(inner)
    if not contained_in(mu, lam):
        raise ValueError(f"inner shape {mu} is not contained in {lam}")
    return SkewShape(lam, mu)


def _padded(a: Partition, b: Partition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    k = max(len(a), len(b))
    return tuple(a) + (0,) * (k - len(a)), tuple(b) + (0,) * (k - len(b))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def contained_in(mu: Partition, lam: Partition) -> bool:
    """True when the diagram of ``mu`` fits inside the diagram of ``lam``."""
    a, b = _padded(mu, lam)
    return all(x <= y for x, y in zip(a, b))


def weight(lam: Partition) -> int:
    return sum(lam)


def nstat(lam: Partition) -> int:
    """Sum of row indices over all cells, rows counted from 1.

    This is ``sum(i * lam_i)``; note it differs from Macdonald's
    ``sum((i - 1) * lam_i)`` by ``|lam|``.
    """
    return sum(i * part for i, part in enumerate(lam, start=1))


def join(a, b):
    """Componentwise maximum of two partitions or two skew shapes."""
    if isinstance(a, SkewShape):
        return SkewShape(join(a.outer, b.outer), join(a.inner, b.inner))
    x, y = _padded(a, b)
    return partition(max(p, q) for p, q in zip(x, y))


def meet(a, b):
    """Componentwise minimum of two partitions or two skew shapes."""
    if isinstance(a, SkewShape):
        return SkewShape(meet(a.outer, b.outer), meet(a.inner, b.inner))
    x, y = _padded(a, b)
    return partition(min(p, q) for p, q in zip(x, y))


def cells(shape) -> list[tuple[int, int]]:
    """Cells of a partition or skew shape in row-major order."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape), ())
    lam, mu = _padded(shape.outer, shape.inner)
    return [(i, j) for i, (lo, hi) in enumerate(zip(mu, lam), start=1)
            for j in range(lo + 1, hi + 1)]


def size(shape) -> int:
    return len(cells(shape))


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in cells(lam)]


def hook_length_count(lam: Partition) -> int:
    """Number of standard Young tableaux of straight shape ``lam``."""
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return factorial(weight(lam)) // prod


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions whose diagram fits in a ``rows x cols`` rectangle."""
    def rec(prefix: tuple[int, ...], bound: int) -> Iterator[Partition]:
        yield partition(prefix)
        if len(prefix) == rows:
            return
        for part in range(1, bound + 1):
            yield from rec(prefix + (part,), part)

    yield from rec((), cols)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    return partition(int(p) for p in text.split(","))


def parse_skew(text: str) -> SkewShape:
    """Parse ``"3,1/1"`` (or a straight ``"3,1"``) into a skew shape."""
    outer, _, inner = text.partition("/")
    return skew(parse_partition(outer), parse_partition(inner))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def format_skew(shape: SkewShape) -> str:
    if not shape.inner:
        return format_partition(shape.outer)
    return f"{format_partition(shape.outer)}/{format_partition(shape.inner)}"
