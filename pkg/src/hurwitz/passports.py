"""Passports: weight distributions of hypermaps, with labels and multiplicities.

A passport records, per color (black vertices, white vertices, faces), a
weight distribution: a list of entries ``(label, weight, multiplicity)``
meaning "``multiplicity`` units of weight ``weight``, collectively labeled
``label``".  Distinct entries of equal weight model labeled units; an
*unlabeled* distribution has pairwise distinct weights and is just an
integer partition.  A *totally labeled* distribution has every
multiplicity equal to one.

The central object is the quasi-one-face passport: a passport whose face
distribution is ``(m 1^(n-m))`` -- one distinguished face of weight ``m``
and ``n - m`` faces of weight 1.  When ``m == 1`` the distinguished face
keeps a separate label so it stays distinguishable from the others.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterator

from .partitions import Partition, as_partition, parse_partition, partitions_of

__all__ = [
    "WeightEntry",
    "WeightDistribution",
    "Passport",
    "QuasiOneFacePassport",
    "FilledPassport",
    "ValidationReport",
    "validate_passport",
    "fill",
    "passport_factorial",
    "enumerate_quasi_one_face",
]


@dataclass(frozen=True)
class WeightEntry:
    """One index of a weight distribution."""

    label: str
    weight: int
    multiplicity: int


@dataclass(frozen=True)
class WeightDistribution:
    """A finite list of labeled, weighted, counted entries.

    Entries are kept in canonical order: weight descending, then label
    ascending, so equal distributions compare equal.
    """

    entries: tuple[WeightEntry, ...]

    def __post_init__(self) -> None:
        ordered = tuple(
            sorted(self.entries, key=lambda e: (-e.weight, e.label))
        )
        object.__setattr__(self, "entries", ordered)

    @classmethod
    def from_partition(cls, partition: Partition | str) -> WeightDistribution:
        """Unlabeled distribution: one entry per distinct part."""
        partition = as_partition(partition)
        return cls(
            tuple(
                WeightEntry(str(part), part, count)
                for part, count in partition.counts()
            )
        )

    @property
    def total_weight(self) -> int:
        return sum(e.weight * e.multiplicity for e in self.entries)

    @property
    def unit_count(self) -> int:
        """Number of vertices/faces this distribution describes."""
        return sum(e.multiplicity for e in self.entries)

    @property
    def is_totally_labeled(self) -> bool:
        return all(e.multiplicity == 1 for e in self.entries)

    @property
    def is_unlabeled(self) -> bool:
        """True when the weight function is injective."""
        weights = [e.weight for e in self.entries]
        return len(weights) == len(set(weights))

    def weights_multiset(self) -> tuple[int, ...]:
        """All unit weights with multiplicity, weakly decreasing."""
        out: list[int] = []
        for e in self.entries:
            out.extend([e.weight] * e.multiplicity)
        return tuple(sorted(out, reverse=True))

    def to_partition(self) -> Partition:
        return Partition(self.weights_multiset())

    def violations(self, name: str = "distribution") -> list[str]:
        problems = []
        if not self.entries:
            problems.append(f"{name}: empty index set")
        labels = [e.label for e in self.entries]
        if len(labels) != len(set(labels)):
            problems.append(f"{name}: duplicate index labels")
        if any(e.weight < 1 for e in self.entries):
            problems.append(f"{name}: nonpositive weight")
        if any(e.multiplicity < 1 for e in self.entries):
            problems.append(f"{name}: nonpositive multiplicity")
        return problems

    def render(self) -> str:
        return self.to_partition().render()


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a passport validation: ok, or the violated constraints."""

    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_if_invalid(self) -> None:
        if self.violations:
            raise ValueError("; ".join(self.violations))


@dataclass(frozen=True)
class Passport:
    """Genus, edge count and three weight distributions (black, white, face)."""

    genus: int
    n: int
    dists: tuple[WeightDistribution, WeightDistribution, WeightDistribution]

    @classmethod
    def from_partitions(
        cls,
        genus: int,
        n: int,
        p1: Partition | str,
        p2: Partition | str,
        p3: Partition | str,
    ) -> Passport:
        return cls(
            genus,
            n,
            (
                WeightDistribution.from_partition(p1),
                WeightDistribution.from_partition(p2),
                WeightDistribution.from_partition(p3),
            ),
        )

    @property
    def unit_counts(self) -> tuple[int, int, int]:
        return tuple(d.unit_count for d in self.dists)  # type: ignore[return-value]

    def validate(self) -> ValidationReport:
        return validate_passport(self)

    def render(self) -> str:
        body = " | ".join(d.render() for d in self.dists)
        return f"({self.genus}, {self.n}; {body})"

    def to_json(self) -> str:
        return json.dumps(
            {
                "genus": self.genus,
                "n": self.n,
                "p1": self.dists[0].render(),
                "p2": self.dists[1].render(),
                "p3": self.dists[2].render(),
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> Passport:
        data = json.loads(text)
        try:
            return cls.from_partitions(
                int(data["genus"]), int(data["n"]),
                data["p1"], data["p2"], data["p3"],
            )
        except KeyError as missing:
            raise ValueError(f"passport JSON lacks field {missing}") from None


def validate_passport(p: Passport) -> ValidationReport:
    """Check the compatibility sums and Euler's formula; never raises."""
    problems: list[str] = []
    if p.genus < 0:
        problems.append("genus must be nonnegative")
    if p.n < 1:
        problems.append("edge count must be positive")
    for name, dist in zip(("p1", "p2", "p3"), p.dists):
        problems.extend(dist.violations(name))
        if dist.total_weight != p.n:
            problems.append(
                f"{name}: weights sum to {dist.total_weight}, expected n = {p.n}"
            )
    units = sum(p.unit_counts)
    if units - p.n != 2 - 2 * p.genus:
        problems.append(
            f"Euler formula violated: {units} - {p.n} != {2 - 2 * p.genus}"
        )
    return ValidationReport(tuple(problems))


_SPECIAL_FACE_SUFFIX = "'"


@dataclass(frozen=True)
class QuasiOneFacePassport:
    """Passport with face distribution ``(m 1^(n-m))``.

    ``m`` is the weight of the distinguished face, ``n`` the edge count,
    and ``dist1``/``dist2`` the black and white vertex distributions.
    By Euler's formula a valid passport has ``m = u1 + u2 + 2*genus - 1``.
    """

    genus: int
    m: int
    n: int
    dist1: WeightDistribution
    dist2: WeightDistribution

    @classmethod
    def from_partitions(
        cls,
        genus: int,
        m: int,
        n: int,
        p1: Partition | str,
        p2: Partition | str,
    ) -> QuasiOneFacePassport:
        return cls(
            genus,
            m,
            n,
            WeightDistribution.from_partition(p1),
            WeightDistribution.from_partition(p2),
        )

    @property
    def u1(self) -> int:
        return self.dist1.unit_count

    @property
    def u2(self) -> int:
        return self.dist2.unit_count

    @property
    def vertex_count(self) -> int:
        return self.u1 + self.u2

    def face_distribution(self) -> WeightDistribution:
        """The ``(m 1^(n-m))`` face data, distinguished face marked.

        For ``m == 1`` the distinguished face collides in weight with the
        plain faces, so it carries a primed label to stay a separate index.
        """
        special_label = str(self.m) + (_SPECIAL_FACE_SUFFIX if self.m == 1 else "")
        entries = [WeightEntry(special_label, self.m, 1)]
        if self.n > self.m:
            entries.append(WeightEntry("1", 1, self.n - self.m))
        return WeightDistribution(tuple(entries))

    def to_passport(self) -> Passport:
        return Passport(self.genus, self.n, (self.dist1, self.dist2, self.face_distribution()))

    def validate(self) -> ValidationReport:
        problems: list[str] = []
        if self.genus < 0:
            problems.append("genus must be nonnegative")
        if not 1 <= self.m <= self.n:
            problems.append(f"m = {self.m} outside 1..n = {self.n}")
        for name, dist in (("p1", self.dist1), ("p2", self.dist2)):
            problems.extend(dist.violations(name))
            if dist.total_weight != self.n:
                problems.append(
                    f"{name}: weights sum to {dist.total_weight}, expected n = {self.n}"
                )
        if self.m != self.vertex_count + 2 * self.genus - 1:
            problems.append(
                f"Euler formula violated: m = {self.m} != v + 2g - 1 "
                f"= {self.vertex_count + 2 * self.genus - 1}"
            )
        return ValidationReport(tuple(problems))

    def require_valid(self) -> None:
        self.validate().raise_if_invalid()

    def weight_gcd(self) -> int:
        """gcd of every vertex weight in both distributions."""
        g = 0
        for dist in (self.dist1, self.dist2):
            for entry in dist.entries:
                g = math.gcd(g, entry.weight)
        return g

    def render(self) -> str:
        return (
            f"({self.genus}, {self.m}, {self.n}; "
            f"{self.dist1.render()} | {self.dist2.render()})"
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "genus": self.genus,
                "m": self.m,
                "n": self.n,
                "p1": self.dist1.render(),
                "p2": self.dist2.render(),
                "p3": self.face_distribution().render(),
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> QuasiOneFacePassport:
        data = json.loads(text)
        try:
            q = cls.from_partitions(
                int(data["genus"]), int(data["m"]), int(data["n"]),
                data["p1"], data["p2"],
            )
        except KeyError as missing:
            raise ValueError(f"passport JSON lacks field {missing}") from None
        if "p3" in data:
            expected = q.face_distribution().weights_multiset()
            if parse_partition(data["p3"]).parts != expected:
                raise ValueError("p3 inconsistent with m and n")
        return q


@dataclass(frozen=True)
class FilledPassport:
    """Totally labeled refinement of a quasi-one-face passport.

    The two weight vectors list each vertex weight individually, in
    canonical order (the order :func:`fill` produces).
    """

    genus: int
    m: int
    n: int
    w1: tuple[int, ...]
    w2: tuple[int, ...]

    def to_quasi_one_face(self) -> QuasiOneFacePassport:
        """The same data as a passport whose entries all have multiplicity 1."""
        def dist(vector: tuple[int, ...]) -> WeightDistribution:
            return WeightDistribution(
                tuple(
                    WeightEntry(f"{w}#{i}", w, 1) for i, w in enumerate(vector)
                )
            )

        return QuasiOneFacePassport(self.genus, self.m, self.n, dist(self.w1), dist(self.w2))


def _filled_vector(dist: WeightDistribution) -> tuple[int, ...]:
    out: list[int] = []
    for entry in dist.entries:  # already (weight desc, label asc)
        out.extend([entry.weight] * entry.multiplicity)
    return tuple(out)


def fill(q: QuasiOneFacePassport) -> FilledPassport:
    """Replace each entry by ``multiplicity`` totally labeled copies of its weight.

    Idempotent on totally labeled passports; the face data is unchanged.
    """
    return FilledPassport(q.genus, q.m, q.n, _filled_vector(q.dist1), _filled_vector(q.dist2))


def passport_factorial(q: QuasiOneFacePassport) -> int:
    """Product of the factorials of all vertex-entry multiplicities.

    This is the number of ways to lift a labeling of the passport to a
    labeling of its filling, and the exact factor between the rooted
    counts of the two (``rooted(fill(q)) == passport_factorial(q) * rooted(q)``).
    """
    result = 1
    for dist in (q.dist1, q.dist2):
        for entry in dist.entries:
            result *= math.factorial(entry.multiplicity)
    return result


def enumerate_quasi_one_face(n: int) -> Iterator[QuasiOneFacePassport]:
    """All valid quasi-one-face passports with unlabeled vertex data and ``n`` edges."""
    for p1 in partitions_of(n):
        d1 = WeightDistribution.from_partition(p1)
        for p2 in partitions_of(n):
            d2 = WeightDistribution.from_partition(p2)
            v = len(p1) + len(p2)
            genus = 0
            while (m := v + 2 * genus - 1) <= n:
                yield QuasiOneFacePassport(genus, m, n, d1, d2)
                genus += 1
