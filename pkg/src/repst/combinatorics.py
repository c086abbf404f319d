"""Integer partitions, cycle types and set partitions.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the empty partition.  Set partitions are tuples of blocks,
each block a tuple of labels listed in ground order, and blocks sorted by
their least element.  Both representations are hashable and immutable.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Hashable, Iterable, Iterator, Sequence

Partition = tuple[int, ...]
SetPartition = tuple[tuple[Hashable, ...], ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate `parts` and return it as a partition tuple."""
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {p}")
    return p


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    """True if the Young diagram of `inner` sits inside that of `outer`."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return list(gen(n, n))


def partitions_up_to(n: int) -> list[Partition]:
    """Partitions of 0, 1, ..., n, grouped by size, each group in reverse lex order."""
    return [lam for k in range(n + 1) for lam in enumerate_partitions(k)]


def hook_lengths(lam: Partition) -> list[int]:
    lc = conjugate(lam)
    return [lam[i] - j + lc[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


@lru_cache(maxsize=None)
def hook_dimension(lam: Partition) -> int:
    """Dimension of the Specht module V_lam (hook length formula)."""
    lam = as_partition(lam)
    return math.factorial(size(lam)) // math.prod(hook_lengths(lam))


def cells(lam: Partition) -> list[tuple[int, int]]:
    """Cells (i, j) of the Young diagram, 1-based row and column indices."""
    return [(i + 1, j + 1) for i, row in enumerate(lam) for j in range(row)]


def pad_partition(lam: Partition, m: int) -> Partition:
    """The padded partition (m - |lam|, lam_1, lam_2, ...).

    Valid only for m >= |lam| + lam_1, so that the new first row is the longest.
    """
    lam = as_partition(lam)
    first = lam[0] if lam else 0
    if m < size(lam) + first:
        raise ValueError(f"m={m} is below the padding bound |lam|+lam_1={size(lam) + first}")
    head = m - size(lam)
    return ((head,) if head > 0 else ()) + lam


def cycle_type(perm: Sequence[int]) -> Partition:
    """Cycle type of a permutation given as a sequence of images of 0..n-1."""
    n = len(perm)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        k, length = start, 0
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def multiplicities(rho: Partition) -> Counter:
    return Counter(rho)


# ---------------------------------------------------------------- set partitions


def _restricted_growth(n: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    word = [0] * n
    maxes = [0] * n

    def rec(i: int) -> Iterator[list[int]]:
        if i == n:
            yield word
            return
        top = maxes[i - 1] + 1
        for v in range(top + 1):
            word[i] = v
            maxes[i] = max(maxes[i - 1], v)
            yield from rec(i + 1)

    word[0] = 0
    yield from rec(1)


def enumerate_set_partitions(ground: Sequence[Hashable]) -> list[SetPartition]:
    """All set partitions of `ground`, in lexicographic order of restricted growth words.

    The first element is the single-block partition, the last one the discrete partition.
    """
    ground = list(ground)
    out = []
    for word in _restricted_growth(len(ground)):
        k = max(word) + 1 if word else 0
        blocks: list[list[Hashable]] = [[] for _ in range(k)]
        for label, b in zip(ground, word):
            blocks[b].append(label)
        out.append(tuple(tuple(b) for b in blocks))
    return out


def canonical_set_partition(blocks: Iterable[Iterable[Hashable]], ground: Sequence[Hashable]) -> SetPartition:
    """Sort labels inside blocks and blocks by least label, both in ground order.

    Raises ValueError if the blocks are not a set partition of `ground`.
    """
    pos = {x: i for i, x in enumerate(ground)}
    bl = [sorted(b, key=pos.__getitem__) for b in blocks]
    if any(not b for b in bl):
        raise ValueError("empty block")
    flat = [x for b in bl for x in b]
    if len(flat) != len(set(flat)) or set(flat) != set(ground):
        raise ValueError("blocks do not partition the ground set")
    bl.sort(key=lambda b: pos[b[0]])
    return tuple(tuple(b) for b in bl)


def refines(pi: SetPartition, rho: SetPartition) -> bool:
    """True if every block of pi lies inside a block of rho (pi is finer)."""
    where = {x: i for i, b in enumerate(rho) for x in b}
    if set(where) != {x for b in pi for x in b}:
        return False
    return all(len({where[x] for x in b}) == 1 for b in pi)


def coarsenings(pi: SetPartition, ground: Sequence[Hashable] | None = None) -> list[SetPartition]:
    """All set partitions rho with pi <= rho (pi refines rho), pi included.

    Labels must be sortable when `ground` is not given.
    """
    if ground is None:
        ground = sorted(x for b in pi for x in b)
    out = []
    for merge in enumerate_set_partitions(range(len(pi))):
        blocks = [[x for i in group for x in pi[i]] for group in merge]
        out.append(canonical_set_partition(blocks, ground))
    return out


def moebius_partition_lattice(pi: SetPartition, rho: SetPartition) -> int:
    """Moebius function of the set-partition lattice on the interval [pi, rho]."""
    if not refines(pi, rho):
        raise ValueError("pi must refine rho")
    where = {x: i for i, b in enumerate(rho) for x in b}
    counts = Counter(where[b[0]] for b in pi)
    return math.prod((-1) ** (k - 1) * math.factorial(k - 1) for k in counts.values())


@lru_cache(maxsize=None)
def bell_number(n: int) -> int:
    """Bell number via the Bell triangle."""
    if n < 0:
        raise ValueError("n must be non-negative")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]
