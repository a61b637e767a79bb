"""Rooted quasi-one-face map counts for arbitrary passports.

Positive genus reduces to genus zero by vertex splitting: sum over cycle
data (how far each vertex is split), refine each vertex weight into an
odd number of ordered positive parts, count the resulting plane trees,
and reweight.  The result is

    rooted = n / (2^(2g) * factorial(passport))
             * sum over cycle data L of R(L)^-1
             * sum over row refinements of the tree count,

evaluated in exact rational arithmetic and asserted integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from .passports import (
    FilledPassport,
    QuasiOneFacePassport,
    fill,
    passport_factorial,
)
from .trees import TreePassport, kochetkov_count, tree_exists

__all__ = [
    "CycleData",
    "RowRefinedPassport",
    "enumerate_cycle_data",
    "r_weight",
    "enumerate_row_refinements",
    "rooted_one_face_count",
    "rooted_count",
    "weighted_hurwitz",
    "exists_quasi_one_face",
]


@dataclass(frozen=True)
class CycleData:
    """Splitting depths per vertex: two sequences of nonnegative integers.

    Vertex ``i`` of color ``k`` splits into ``2*mu_k[i] + 1`` tree
    vertices; the total of both sequences is the genus being removed.
    """

    mu1: tuple[int, ...]
    mu2: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.mu1) + sum(self.mu2)


def _nonneg_compositions(total: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _nonneg_compositions(total - first, k - 1):
            yield (first,) + rest


def enumerate_cycle_data(g: int, u1: int, u2: int) -> list[CycleData]:
    """All cycle data of total ``g`` for ``u1`` black and ``u2`` white
    vertices, in reverse-lexicographic order."""
    if g < 0 or u1 < 1 or u2 < 1:
        raise ValueError("need g >= 0 and positive vertex counts")
    return [
        CycleData(parts[:u1], parts[u1:])
        for parts in _nonneg_compositions(g, u1 + u2)
    ]


def r_weight(data: CycleData) -> int:
    """Product of the split sizes 2*mu + 1 over all vertices."""
    weight = 1
    for mu in data.mu1 + data.mu2:
        weight *= 2 * mu + 1
    return weight


@dataclass(frozen=True)
class RowRefinedPassport:
    """A genus-zero passport refining a filled one row by row.

    Row ``i`` of color ``k`` is an ordered composition of the filled
    passport's ``i``-th weight into ``2*mu_k[i] + 1`` positive parts.
    """

    m: int
    n: int
    rows1: tuple[tuple[int, ...], ...]
    rows2: tuple[tuple[int, ...], ...]

    def tree_passport(self) -> TreePassport:
        flat1 = tuple(w for row in self.rows1 for w in row)
        flat2 = tuple(w for row in self.rows2 for w in row)
        return TreePassport(flat1, flat2)


def compositions(total: int, k: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of ``total`` into ``k`` positive parts,
    first part largest first."""
    if k < 1:
        return
    if k == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(total - k + 1, 0, -1):
        for rest in compositions(total - first, k - 1):
            yield (first,) + rest


def enumerate_row_refinements(
    f: FilledPassport, data: CycleData
) -> Iterator[RowRefinedPassport]:
    """Stream every row refinement of ``f`` prescribed by the cycle data.

    Empty when some weight cannot be written as 2*mu + 1 positive parts.
    """
    if len(data.mu1) != len(f.w1) or len(data.mu2) != len(f.w2):
        raise ValueError("cycle data lengths must match the filled passport")
    options1 = [list(compositions(w, 2 * mu + 1)) for w, mu in zip(f.w1, data.mu1)]
    options2 = [list(compositions(w, 2 * mu + 1)) for w, mu in zip(f.w2, data.mu2)]
    if any(not rows for rows in options1 + options2):
        return
    for rows1 in product(*options1):
        for rows2 in product(*options2):
            yield RowRefinedPassport(f.m, f.n, rows1, rows2)


def _inner_sum(f: FilledPassport) -> Fraction:
    total = Fraction(0)
    for data in enumerate_cycle_data(f.genus, len(f.w1), len(f.w2)):
        # No composition exists when a split exceeds its weight.
        if any(2 * mu + 1 > w for w, mu in zip(f.w1, data.mu1)):
            continue
        if any(2 * mu + 1 > w for w, mu in zip(f.w2, data.mu2)):
            continue
        subtotal = 0
        for refinement in enumerate_row_refinements(f, data):
            subtotal += kochetkov_count(refinement.tree_passport())
        total += Fraction(subtotal, r_weight(data))
    return total


def rooted_one_face_count(f: FilledPassport) -> int:
    """Rooted weighted one-face maps for a totally labeled passport
    (rooted at one of the ``m`` weighted edges)."""
    value = Fraction(f.m) * _inner_sum(f) / 4**f.genus
    assert value.denominator == 1, f"one-face count not integral for {f}"
    return int(value)


def rooted_count(q: QuasiOneFacePassport) -> int:
    """Number of rooted quasi-one-face maps with passport ``q``."""
    q.require_valid()
    f = fill(q)
    one_face = rooted_one_face_count(f)
    value = Fraction(q.n * one_face, q.m * passport_factorial(q))
    assert value.denominator == 1, f"rooted count not integral for {q}"
    return int(value)


def weighted_hurwitz(q: QuasiOneFacePassport) -> Fraction:
    """Weighted Hurwitz number: rooted count over n, i.e. the sum of
    1/|Aut| over the maps with this passport."""
    return Fraction(rooted_count(q), q.n)


def exists_quasi_one_face(q: QuasiOneFacePassport) -> bool:
    """Whether any quasi-one-face map has passport ``q``.

    Always true in positive genus; genus zero is the plane-tree gcd bound.
    """
    q.require_valid()
    if q.genus > 0:
        return True
    return tree_exists(TreePassport.from_filled(fill(q)))
