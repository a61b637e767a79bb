"""Cyclic quotients of surfaces: orbifold symbols, admissibility, and the
multiplication/division between symbols and passports.

An orbifold symbol ``(g2; t1, ..., tr)`` records the genus of a quotient
surface and the cone point orders of the branch points.  Harvey's
conditions decide when the quotient of a genus-``g1`` surface by a cyclic
group of order ``l`` realizes the symbol.  Multiplying a symbol into a
quotient-side passport recovers the covering passport; division searches
for all quotient-side passports over a given symbol.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .arith import divisors
from .passports import (
    Passport,
    QuasiOneFacePassport,
    WeightDistribution,
    WeightEntry,
)

__all__ = [
    "OrbifoldSymbol",
    "parse_symbol",
    "harvey_check",
    "enumerate_symbols",
    "SigmaEntry",
    "SigmaLabeledPassport",
    "multiply",
    "divide_passport",
    "divide_quasi_one_face",
]


@dataclass(frozen=True)
class OrbifoldSymbol:
    """Quotient genus plus the multiset of cone point orders.

    Canonical form drops orders equal to 1 and sorts descending, so
    symbol equality is multiset equality.
    """

    genus: int
    orders: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError("orbifold genus must be nonnegative")
        if any(t < 1 for t in self.orders):
            raise ValueError("cone orders must be positive")
        canonical = tuple(sorted((t for t in self.orders if t > 1), reverse=True))
        object.__setattr__(self, "orders", canonical)

    @property
    def period(self) -> int:
        """lcm of the cone orders (1 when there are none)."""
        return math.lcm(*self.orders) if self.orders else 1

    def render(self) -> str:
        return f"{self.genus};" + ",".join(str(t) for t in self.orders)

    def __str__(self) -> str:
        return self.render()


def parse_symbol(text: str) -> OrbifoldSymbol:
    """Parse the text form ``"g2;t1,t2,..."`` (cone list may be empty)."""
    head, sep, tail = text.partition(";")
    try:
        genus = int(head)
    except ValueError:
        raise ValueError(f"bad orbifold symbol {text!r}") from None
    tail = tail.strip()
    if not sep or not tail:
        return OrbifoldSymbol(genus)
    try:
        orders = tuple(int(tok) for tok in tail.split(","))
    except ValueError:
        raise ValueError(f"bad cone orders in {text!r}") from None
    return OrbifoldSymbol(genus, orders)


def harvey_check(g1: int, l: int, sym: OrbifoldSymbol) -> bool:
    """Whether the genus-``g1`` surface has a cyclic quotient of order ``l``
    realizing the orbifold symbol ``sym`` (Harvey's conditions)."""
    if g1 < 0 or l < 1:
        raise ValueError("need g1 >= 0 and l >= 1")
    orders = sym.orders
    period = sym.period
    if l % period:
        return False
    if sym.genus == 0 and period != l:
        return False
    deficiency = sum(Fraction(t - 1, t) for t in orders)
    if Fraction(2 - 2 * g1) != l * (Fraction(2 - 2 * sym.genus) - deficiency):
        return False
    for i in range(len(orders)):
        rest = orders[:i] + orders[i + 1 :]
        if (math.lcm(*rest) if rest else 1) != period:
            return False
    if period % 2 == 0:
        top = period & -period  # largest power of 2 dividing the period
        if sum(1 for t in orders if t % top == 0) % 2:
            return False
    return True


def _order_candidates(
    target: Fraction, divs_desc: Sequence[int]
) -> Iterator[tuple[int, ...]]:
    if target == 0:
        yield ()
        return
    for i, t in enumerate(divs_desc):
        step = Fraction(t - 1, t)
        if step <= target:
            for rest in _order_candidates(target - step, divs_desc[i:]):
                yield (t,) + rest


def enumerate_symbols(g1: int, l: int) -> list[OrbifoldSymbol]:
    """All orbifold symbols admissible for a cyclic quotient of order ``l``
    of a genus-``g1`` surface.

    The candidate space is finite: the quotient genus is at most ``g1``,
    every cone order is a divisor of ``l`` at least 2, and the
    Riemann-Hurwitz identity pins the sum of (1 - 1/t) exactly.
    """
    if g1 < 0 or l < 1:
        raise ValueError("need g1 >= 0 and l >= 1")
    divs_desc = [d for d in reversed(divisors(l)) if d >= 2]
    found: list[OrbifoldSymbol] = []
    for g2 in range(g1 + 1):
        target = Fraction(2 - 2 * g2) - Fraction(2 - 2 * g1, l)
        if target < 0:
            break
        for orders in _order_candidates(target, divs_desc):
            sym = OrbifoldSymbol(g2, orders)
            if harvey_check(g1, l, sym):
                found.append(sym)
    found.sort(key=lambda s: (s.genus, s.orders))
    return found


@dataclass(frozen=True)
class SigmaEntry:
    """One index of a symbol-labeled distribution: weight, cone order,
    multiplicity."""

    weight: int
    order: int
    multiplicity: int

    def render(self) -> str:
        text = str(self.weight) if self.order == 1 else f"{self.weight}@{self.order}"
        return text if self.multiplicity == 1 else f"{text}^{self.multiplicity}"


@dataclass(frozen=True)
class SigmaLabeledPassport:
    """Passport of a quotient map, indexed by (weight, cone order) pairs.

    ``genus`` is the quotient genus, ``m`` the quotient edge count, and
    ``colors`` the black/white/face entry lists.  The (weight, order)
    pairs are pairwise distinct within a color, with one sanctioned
    exception: in the face color the distinguished face may coincide with
    the plain weight-1 faces when the quotient is trivial; it is then kept
    first.  Entries are sorted by weight then order, descending.
    """

    genus: int
    m: int
    colors: tuple[
        tuple[SigmaEntry, ...], tuple[SigmaEntry, ...], tuple[SigmaEntry, ...]
    ]

    def __post_init__(self) -> None:
        ordered = tuple(
            tuple(sorted(color, key=lambda e: (-e.weight, -e.order)))
            for color in self.colors
        )
        object.__setattr__(self, "colors", ordered)
        for k, color in enumerate(ordered):
            pairs = [(e.weight, e.order) for e in color]
            if len(pairs) != len(set(pairs)) and not (
                k == 2 and sorted(set(pairs)) == [(1, 1)]
            ):
                raise ValueError(f"duplicate (weight, order) pair in color {k + 1}")
            if any(e.weight < 1 or e.order < 1 or e.multiplicity < 1 for e in color):
                raise ValueError("entries need positive weight, order, multiplicity")

    def symbol(self) -> OrbifoldSymbol:
        """The orbifold symbol spelled by the entries' cone orders."""
        orders: list[int] = []
        for color in self.colors:
            for e in color:
                orders.extend([e.order] * e.multiplicity)
        return OrbifoldSymbol(self.genus, tuple(orders))

    def color_total(self, k: int) -> int:
        return sum(e.weight * e.multiplicity for e in self.colors[k])

    def validate(self) -> None:
        for k in range(3):
            if self.color_total(k) != self.m:
                raise ValueError(
                    f"color {k + 1} weights sum to {self.color_total(k)}, "
                    f"expected {self.m}"
                )
        units = sum(e.multiplicity for color in self.colors for e in color)
        if units - self.m != 2 - 2 * self.genus:
            raise ValueError("Euler formula violated for quotient passport")

    def to_passport(self) -> Passport:
        """View as a general passport whose indices are (weight, order)
        labels; two distinct cone orders of equal weight stay distinct."""
        def dist(color: tuple[SigmaEntry, ...]) -> WeightDistribution:
            entries = []
            for i, e in enumerate(color):
                label = str(e.weight) if e.order == 1 else f"{e.weight}@{e.order}"
                if any(
                    other is not e and (other.weight, other.order) == (e.weight, e.order)
                    for other in color
                ):
                    label += f"#{i}"  # the sanctioned distinguished-face collision
                entries.append(WeightEntry(label, e.weight, e.multiplicity))
            return WeightDistribution(tuple(entries))

        return Passport(
            self.genus,
            self.m,
            (dist(self.colors[0]), dist(self.colors[1]), dist(self.colors[2])),
        )

    def to_quasi_one_face(self) -> QuasiOneFacePassport:
        """View as a quasi-one-face passport (the first face entry is the
        distinguished face; all others must be plain weight-1 faces)."""
        faces = self.colors[2]
        special = faces[0]
        if special.multiplicity != 1:
            raise ValueError("distinguished face must have multiplicity 1")
        for e in faces[1:]:
            if e.weight != 1 or e.order != 1:
                raise ValueError("face distribution is not quasi-one-face")
        def dist(color: tuple[SigmaEntry, ...]) -> WeightDistribution:
            # order-1 entries carry no quotient data; keep the plain label
            # so dividing by the trivial symbol returns the passport itself
            return WeightDistribution(
                tuple(
                    WeightEntry(
                        str(e.weight) if e.order == 1 else f"{e.weight}@{e.order}",
                        e.weight,
                        e.multiplicity,
                    )
                    for e in color
                )
            )

        return QuasiOneFacePassport(
            self.genus, special.weight, self.m, dist(self.colors[0]), dist(self.colors[1])
        )

    def render(self) -> str:
        body = " | ".join(
            " ".join(e.render() for e in color) for color in self.colors
        )
        return f"({self.genus}, {self.m}; {body})"

    def __str__(self) -> str:
        return self.render()


def multiply(sym: OrbifoldSymbol, l: int, q: SigmaLabeledPassport) -> Passport:
    """Recover the covering passport from a quotient-side passport.

    Each entry ``(w, t, lam)`` contributes the part ``w*t`` with
    multiplicity ``lam * l / t``; the edge count is ``l * m``.  Requires a
    Harvey-admissible triple; in particular every order must divide ``l``.
    """
    if q.symbol() != sym:
        raise ValueError("passport cone orders do not spell the symbol")
    q.validate()
    n = l * q.m
    dists = []
    for color in q.colors:
        parts: dict[int, int] = {}
        for e in color:
            if l % e.order:
                raise ValueError(
                    f"cone order {e.order} does not divide the group order {l}"
                )
            value = e.weight * e.order
            parts[value] = parts.get(value, 0) + e.multiplicity * (l // e.order)
        dists.append(
            WeightDistribution(
                tuple(WeightEntry(str(v), v, c) for v, c in parts.items())
            )
        )
    units = sum(d.unit_count for d in dists)
    cover_genus, parity = divmod(2 + n - units, 2)
    assert parity == 0, "covering passport fails Euler parity"
    deficiency = sum(Fraction(t - 1, t) for t in sym.orders)
    rh = Fraction(2) - l * (Fraction(2 - 2 * sym.genus) - deficiency)
    assert rh == 2 * cover_genus, "Euler genus disagrees with Riemann-Hurwitz"
    return Passport(cover_genus, n, (dists[0], dists[1], dists[2]))


def _part_options(value: int, count: int, l: int) -> list[tuple[SigmaEntry, ...]]:
    """Ways to pull the part ``value^count`` back to quotient entries.

    Chooses distinct cone orders ``t`` (dividing both ``l`` and ``value``)
    with multiplicities ``lam >= 1`` such that ``sum(lam * l/t) == count``.
    """
    ts = [t for t in reversed(divisors(l)) if value % t == 0]

    def search(idx: int, remaining: int) -> Iterator[tuple[SigmaEntry, ...]]:
        if remaining == 0:
            yield ()
            return
        for j in range(idx, len(ts)):
            t = ts[j]
            step = l // t
            for taken in range(step, remaining + 1, step):
                entry = SigmaEntry(value // t, t, taken // step)
                for rest in search(j + 1, remaining - taken):
                    yield (entry,) + rest

    return list(search(0, count))


def divide_passport(
    p: Passport, sym: OrbifoldSymbol, l: int
) -> list[SigmaLabeledPassport]:
    """All quotient-side passports multiplying back to ``p`` over ``sym``.

    ``p`` must be unlabeled (injective weights per color) and the triple
    (genus, l, sym) Harvey-admissible.  Returns an empty list when no
    division exists.  Output order is deterministic: color-major,
    part-value-major, cone orders descending.
    """
    p.validate().raise_if_invalid()
    if not all(d.is_unlabeled for d in p.dists):
        raise ValueError("division is defined for unlabeled passports")
    if not harvey_check(p.genus, l, sym):
        raise ValueError("triple fails the admissibility conditions")
    if p.n % l:
        return []
    m = p.n // l
    per_color: list[list[tuple[SigmaEntry, ...]]] = []
    for dist in p.dists:
        options = [
            _part_options(entry.weight, entry.multiplicity, l)
            for entry in dist.entries
        ]
        combos = [
            tuple(e for group in combo for e in group)
            for combo in product(*options)
        ]
        per_color.append(combos)
    wanted = sym.orders
    results: list[SigmaLabeledPassport] = []
    for c1, c2, c3 in product(*per_color):
        orders: list[int] = []
        for color in (c1, c2, c3):
            for e in color:
                if e.order > 1:
                    orders.extend([e.order] * e.multiplicity)
        if tuple(sorted(orders, reverse=True)) != wanted:
            continue
        candidate = SigmaLabeledPassport(sym.genus, m, (c1, c2, c3))
        candidate.validate()
        assert multiply(sym, l, candidate) == p, "division fails to multiply back"
        results.append(candidate)
    assert len(set(results)) == len(results), "duplicate divisions produced"
    return results


def _trivial_division(q: QuasiOneFacePassport) -> SigmaLabeledPassport:
    def entries(dist: WeightDistribution) -> tuple[SigmaEntry, ...]:
        return tuple(SigmaEntry(e.weight, 1, e.multiplicity) for e in dist.entries)

    faces = [SigmaEntry(q.m, 1, 1)]
    if q.n > q.m:
        faces.append(SigmaEntry(1, 1, q.n - q.m))
    return SigmaLabeledPassport(
        q.genus, q.n, (entries(q.dist1), entries(q.dist2), tuple(faces))
    )


def divide_quasi_one_face(
    q: QuasiOneFacePassport, sym: OrbifoldSymbol, l: int
) -> list[SigmaLabeledPassport]:
    """Divide a quasi-one-face passport; every result is quasi-one-face.

    Empty unless ``l`` divides both ``m`` and ``n - m`` (the distinguished
    face must pull back from a single face of order ``l``, the plain faces
    from plain faces).
    """
    q.require_valid()
    if not (q.dist1.is_unlabeled and q.dist2.is_unlabeled):
        raise ValueError("division is defined for unlabeled passports")
    if not harvey_check(q.genus, l, sym):
        raise ValueError("triple fails the admissibility conditions")
    if l == 1:
        return [_trivial_division(q)]
    if q.m % l or (q.n - q.m) % l:
        return []
    results = divide_passport(q.to_passport(), sym, l)
    for r in results:
        special = r.colors[2][0]
        assert special.order == l and special.weight == q.m // l, (
            "quotient face distribution is not quasi-one-face"
        )
    return results
