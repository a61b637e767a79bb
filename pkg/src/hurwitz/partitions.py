"""Integer partitions and their power-notation text form.

A partition is a multiset of positive integers kept in weakly decreasing
order.  The text grammar is ``part ( '^' count )?`` tokens separated by
whitespace, e.g. ``"8"``, ``"4^2"``, ``"2^3 1"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

_TOKEN = re.compile(r"(\d+)(?:\^(\d+))?\Z")

__all__ = ["Partition", "parse_partition", "partitions_of"]


@dataclass(frozen=True)
class Partition:
    """Multiset of positive integers, stored weakly decreasing."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(sorted(self.parts, reverse=True))
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise ValueError("partition parts must be positive integers")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def counts(self) -> list[tuple[int, int]]:
        """Distinct parts with multiplicities, largest part first."""
        out: list[tuple[int, int]] = []
        for p in self.parts:
            if out and out[-1][0] == p:
                out[-1] = (p, out[-1][1] + 1)
            else:
                out.append((p, 1))
        return out

    def render(self) -> str:
        """Power-notation text form; inverse of :func:`parse_partition`."""
        return " ".join(
            str(p) if c == 1 else f"{p}^{c}" for p, c in self.counts()
        )

    def __str__(self) -> str:
        return self.render()


def parse_partition(text: str) -> Partition:
    """Parse power notation like ``"4^2"`` or ``"2^3 1"`` into a partition."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty partition text")
    parts: list[int] = []
    for token in tokens:
        match = _TOKEN.match(token)
        if match is None:
            raise ValueError(f"malformed partition token {token!r}")
        part = int(match.group(1))
        count = int(match.group(2)) if match.group(2) else 1
        if part == 0:
            raise ValueError(f"zero part in token {token!r}")
        if count == 0:
            raise ValueError(f"zero count in token {token!r}")
        parts.extend([part] * count)
    return Partition(tuple(parts))


def _descending(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for part in range(min(remaining, max_part), 0, -1):
        for rest in _descending(remaining - part, part):
            yield (part,) + rest


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n``, largest part first, in reverse-lex order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for parts in _descending(n, n if max_part is None else max_part):
        yield Partition(parts)


def as_partition(value: Partition | str | Iterable[int]) -> Partition:
    """Coerce text, an iterable of parts, or a partition to a partition."""
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return parse_partition(value)
    return Partition(tuple(value))
