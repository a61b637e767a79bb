"""Unrooted quasi-one-face map counts, assembled from rooted counts of
cyclic quotients.

The count is ``(1/n) * sum over divisors l of n, admissible symbols, and
divisions of rooted(quotient) * epi0(symbol, l)``.  An equivalent route
goes through Burnside's lemma: conjugation by a permutation fixes a
nonempty set of edge-numbered maps only when the permutation is regular
of type ``(l^m)``, and the fixed-map count per type is
``l^(m-1) * (m-1)! * rooted(quotient) * epi0``.  Both assemblies are
computed and cross-asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .arith import divisors, epi0_count
from .orbifolds import (
    OrbifoldSymbol,
    SigmaLabeledPassport,
    divide_passport,
    divide_quasi_one_face,
    enumerate_symbols,
)
from .passports import Passport, QuasiOneFacePassport
from .rooted import rooted_count

__all__ = [
    "QuotientTerm",
    "quotient_terms",
    "unrooted_count",
    "fix_count",
    "burnside_total",
    "assemble_unrooted",
]


@dataclass(frozen=True)
class QuotientTerm:
    """One (divisor, symbol, quotient passport) contribution to the
    unrooted count: it adds ``rooted * epi0`` to ``n * unrooted``."""

    l: int
    m: int
    symbol: OrbifoldSymbol
    sigma_passport: SigmaLabeledPassport
    rooted: int
    epi0: int

    @property
    def contribution(self) -> int:
        return self.rooted * self.epi0


def _require_unlabeled(q: QuasiOneFacePassport) -> None:
    if not (q.dist1.is_unlabeled and q.dist2.is_unlabeled):
        raise ValueError(
            "unrooted counts are defined for unlabeled vertex distributions"
        )


def _terms_for_divisor(q: QuasiOneFacePassport, l: int) -> list[QuotientTerm]:
    if q.m % l or (q.n - q.m) % l:
        return []
    terms = []
    for sym in enumerate_symbols(q.genus, l):
        for quotient in divide_quasi_one_face(q, sym, l):
            terms.append(
                QuotientTerm(
                    l,
                    q.n // l,
                    sym,
                    quotient,
                    rooted_count(quotient.to_quasi_one_face()),
                    epi0_count(sym, l),
                )
            )
    return terms


def quotient_terms(q: QuasiOneFacePassport) -> list[QuotientTerm]:
    """The full audit table: one term per (l, symbol, division), with
    divisors ascending and divisions in search order."""
    q.require_valid()
    _require_unlabeled(q)
    terms: list[QuotientTerm] = []
    for l in divisors(q.n):
        terms.extend(_terms_for_divisor(q, l))
    return terms


def unrooted_count(q: QuasiOneFacePassport) -> tuple[int, list[QuotientTerm]]:
    """Number of unrooted quasi-one-face maps with passport ``q``, plus
    the per-quotient audit terms."""
    terms = quotient_terms(q)
    total = sum(t.contribution for t in terms)
    count, remainder = divmod(total, q.n)
    assert remainder == 0, f"quotient-sum not divisible by n for {q}"
    return count, terms


def fix_count(q: QuasiOneFacePassport, l: int) -> int:
    """Edge-numbered maps with passport ``q`` fixed by conjugation with a
    fixed regular permutation of cycle type ``(l^(n/l))``."""
    q.require_valid()
    _require_unlabeled(q)
    if q.n % l:
        raise ValueError(f"l = {l} does not divide n = {q.n}")
    m = q.n // l
    scale = l ** (m - 1) * math.factorial(m - 1)
    return scale * sum(t.contribution for t in _terms_for_divisor(q, l))


def burnside_total(q: QuasiOneFacePassport) -> int:
    """Unrooted count assembled through Burnside's lemma over all regular
    cycle types; asserted equal to :func:`unrooted_count`."""
    total = Fraction(0)
    for l in divisors(q.n):
        m = q.n // l
        total += Fraction(fix_count(q, l), math.factorial(m) * l**m)
    assert total.denominator == 1, f"Burnside average not integral for {q}"
    count = int(total)
    assert count == unrooted_count(q)[0], (
        "Burnside assembly disagrees with the quotient-sum assembly"
    )
    return count


def assemble_unrooted(
    p: Passport, rooted_of: Callable[[SigmaLabeledPassport], int]
) -> int:
    """Rooted-to-unrooted assembly for an arbitrary unlabeled passport.

    The identity ``unrooted = (1/n) * sum rooted(quotient) * epi0`` holds
    for general passports, but closed-form rooted counts are only
    available in the quasi-one-face case, so the rooted counts of the
    divided passports are supplied by the caller (e.g. from the
    permutation oracle).
    """
    p.validate().raise_if_invalid()
    total = 0
    for l in divisors(p.n):
        for sym in enumerate_symbols(p.genus, l):
            for quotient in divide_passport(p, sym, l):
                total += rooted_of(quotient) * epi0_count(sym, l)
    count, remainder = divmod(total, p.n)
    assert remainder == 0, f"quotient-sum not divisible by n for {p}"
    return count
