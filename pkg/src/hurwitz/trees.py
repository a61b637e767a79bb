"""Genus-zero counts: totally labeled weighted bicolored plane trees.

A genus-zero quasi-one-face map is a plane tree with positive integer
edge weights; its passport is the pair of vertex-weight vectors.  This
module decides existence (gcd bound of Boccara and Zannier) and counts
the trees by Kochetkov's inclusion-exclusion over passport partitions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .passports import FilledPassport, QuasiOneFacePassport, fill

__all__ = [
    "TreePassport",
    "Block",
    "tree_exists",
    "enumerate_passport_partitions",
    "kochetkov_count",
    "rooted_tree_count",
    "rooted_weighted_tree_count",
]


@dataclass(frozen=True)
class TreePassport:
    """Totally labeled genus-zero passport: two vertex-weight vectors.

    Positions in the vectors are the labels; equal weights at different
    positions are distinct vertices.  A valid passport has equal weight
    sums ``n`` on both sides, and the tree has ``m = |w1| + |w2| - 1``
    weighted edges.
    """

    w1: tuple[int, ...]
    w2: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.w1 or not self.w2:
            raise ValueError("both weight vectors must be nonempty")
        if any(w < 1 for w in self.w1 + self.w2):
            raise ValueError("weights must be positive")
        if sum(self.w1) != sum(self.w2):
            raise ValueError(
                f"weight sums differ: {sum(self.w1)} != {sum(self.w2)}"
            )

    @classmethod
    def from_filled(cls, f: FilledPassport) -> TreePassport:
        if f.genus != 0:
            raise ValueError("tree passports have genus 0")
        return cls(f.w1, f.w2)

    @property
    def n(self) -> int:
        return sum(self.w1)

    @property
    def vertex_count(self) -> int:
        return len(self.w1) + len(self.w2)

    @property
    def m(self) -> int:
        return self.vertex_count - 1


# A block of a passport partition: positions into w1 and into w2 with
# equal weight sums, both sides nonempty.
Block = tuple[tuple[int, ...], tuple[int, ...]]


def _as_tree_passport(p: TreePassport | QuasiOneFacePassport) -> TreePassport:
    if isinstance(p, QuasiOneFacePassport):
        return TreePassport.from_filled(fill(p))
    return p


def tree_exists(p: TreePassport | QuasiOneFacePassport) -> bool:
    """Whether any weighted bicolored plane tree has this passport.

    True iff ``(v - 1) * gcd(all weights) <= n`` (Boccara, Zannier).
    Accepts any genus-zero quasi-one-face passport; the gcd runs over the
    weight multiset.
    """
    if isinstance(p, QuasiOneFacePassport) and p.genus != 0:
        raise ValueError("tree existence is a genus-0 question")
    p = _as_tree_passport(p)
    g = math.gcd(*p.w1, *p.w2)
    return (p.vertex_count - 1) * g <= p.n


def _subsets_with_sum(
    positions: tuple[int, ...], weights: Sequence[int], target: int
) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets of ``positions`` whose weights sum to ``target``,
    in increasing bitmask order (deterministic)."""
    k = len(positions)
    for mask in range(1, 1 << k):
        subset = tuple(positions[i] for i in range(k) if mask >> i & 1)
        if sum(weights[i] for i in subset) == target:
            yield subset


def _split(
    rem1: tuple[int, ...],
    rem2: tuple[int, ...],
    w1: Sequence[int],
    w2: Sequence[int],
) -> Iterator[tuple[Block, ...]]:
    if not rem1:
        if not rem2:
            yield ()
        return
    if not rem2:
        return
    anchor, rest1 = rem1[0], rem1[1:]
    k = len(rest1)
    # The block containing the anchor: any extension of the anchor on the
    # left, any right side of equal weight.  Anchoring on the smallest
    # remaining position makes each unordered partition appear once.
    for mask in range(1 << k):
        left = (anchor,) + tuple(rest1[i] for i in range(k) if mask >> i & 1)
        target = sum(w1[i] for i in left)
        if target > sum(w2[j] for j in rem2):
            continue
        for right in _subsets_with_sum(rem2, w2, target):
            next1 = tuple(i for i in rest1 if i not in left)
            next2 = tuple(j for j in rem2 if j not in right)
            for tail in _split(next1, next2, w1, w2):
                yield ((left, right),) + tail


def enumerate_passport_partitions(
    p: TreePassport | QuasiOneFacePassport,
) -> Iterator[tuple[Block, ...]]:
    """All partitions of the passport into sub-passports, each exactly once.

    Every block pairs nonempty position sets of equal weight sum; the
    blocks partition both sides.  The trivial one-block partition is
    always yielded first.  Order is deterministic.
    """
    p = _as_tree_passport(p)
    all1 = tuple(range(len(p.w1)))
    all2 = tuple(range(len(p.w2)))
    for blocks in _split(all1, all2, p.w1, p.w2):
        seen1 = [i for left, _ in blocks for i in left]
        seen2 = [j for _, right in blocks for j in right]
        assert sorted(seen1) == list(all1) and sorted(seen2) == list(all2), (
            "partition blocks fail to cover the positions exactly once"
        )
        yield blocks


@lru_cache(maxsize=None)
def _kochetkov(w1: tuple[int, ...], w2: tuple[int, ...]) -> int:
    p = TreePassport(w1, w2)
    m = p.m
    # The k-block term carries m**(k-2), rational when k == 1; multiply
    # the whole sum by m and divide exactly at the end.
    scaled = 0
    for blocks in enumerate_passport_partitions(p):
        k = len(blocks)
        x = 1
        for left, right in blocks:
            x *= math.factorial(len(left) + len(right) - 1)
        scaled += (-1) ** (k - 1) * m ** (k - 1) * x
    quotient, remainder = divmod(scaled, m)
    assert remainder == 0, f"inclusion-exclusion sum not divisible by m for {p}"
    return quotient


def kochetkov_count(p: TreePassport | QuasiOneFacePassport) -> int:
    """Number of totally labeled weighted bicolored plane trees with this
    passport (inclusion-exclusion over passport partitions).

    The count depends only on the weight multisets, so results are cached
    on the sorted vectors.
    """
    p = _as_tree_passport(p)
    return _kochetkov(
        tuple(sorted(p.w1, reverse=True)), tuple(sorted(p.w2, reverse=True))
    )


def rooted_tree_count(p: TreePassport | QuasiOneFacePassport) -> int:
    """Trees rooted at one of the ``n`` unweighted edges: n * kochetkov_count."""
    p = _as_tree_passport(p)
    return p.n * kochetkov_count(p)


def rooted_weighted_tree_count(p: TreePassport | QuasiOneFacePassport) -> int:
    """Trees rooted at one of the ``m`` weighted edges: m * kochetkov_count."""
    p = _as_tree_passport(p)
    return p.m * kochetkov_count(p)
