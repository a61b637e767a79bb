"""Ground-truth brute force over algebraic maps.

An algebraic map is a pair of permutations ``(x, y)`` of the edge set
``{0..n-1}`` whose generated group acts transitively; black vertices are
the cycles of ``x``, white vertices the cycles of ``y``, faces the cycles
of ``y∘x`` (black permutation applied first).  Counting pairs with
prescribed cycle types, with labels weighted in, validates every closed
formula in this package at desk scale.

Permutations are 0-indexed image tuples; the cycle-notation text form is
1-based, e.g. ``"(1,3,2,5,4)"``.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itertools_permutations
from itertools import product
from typing import Iterable, Iterator, Sequence

from .arith import divisors
from .partitions import Partition, as_partition
from .passports import Passport, QuasiOneFacePassport, WeightDistribution

__all__ = [
    "CapExceeded",
    "DEFAULT_CAP",
    "perm_compose",
    "perm_inverse",
    "perm_cycles",
    "perm_cycle_type",
    "permutations_of_type",
    "class_size",
    "is_transitive",
    "parse_cycles",
    "cycles_str",
    "count_numbered_maps",
    "oracle_rooted",
    "oracle_fix",
    "oracle_unrooted",
    "WitnessReport",
    "verify_witness_table",
    "load_witness_rows",
]

DEFAULT_CAP = 10**8


class CapExceeded(RuntimeError):
    """The search space exceeds the configured cap; use the formulas."""


Perm = tuple[int, ...]


def perm_compose(a: Perm, b: Perm) -> Perm:
    """Composition applying ``b`` first, then ``a``."""
    return tuple(a[v] for v in b)


def perm_inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def perm_cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycles of ``p`` (fixed points included), each starting at its
    smallest element, ordered by that element."""
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle = []
        j = start
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = p[j]
        cycles.append(tuple(cycle))
    return cycles


def perm_cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths, weakly decreasing."""
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        k = 0
        j = start
        while not seen[j]:
            seen[j] = True
            k += 1
            j = p[j]
        lengths.append(k)
    lengths.sort(reverse=True)
    return tuple(lengths)


def class_size(n: int, cycle_type: Iterable[int]) -> int:
    """Size of the conjugacy class of the given cycle type in S_n."""
    parts = tuple(sorted(cycle_type, reverse=True))
    if sum(parts) != n:
        raise ValueError("cycle type must partition n")
    size = math.factorial(n)
    for part in parts:
        size //= part
    for count in Counter(parts).values():
        size //= math.factorial(count)
    return size


def permutations_of_type(
    n: int, cycle_type: Partition | Iterable[int]
) -> Iterator[Perm]:
    """Every permutation of ``{0..n-1}`` with the given cycle type exactly
    once, in a fixed deterministic order."""
    parts = as_partition(cycle_type).parts
    if sum(parts) != n:
        raise ValueError("cycle type must partition n")
    counts = Counter(parts)
    lengths_desc = sorted(counts, reverse=True)
    images = list(range(n))

    def gen(remaining: tuple[int, ...]) -> Iterator[Perm]:
        if not remaining:
            yield tuple(images)
            return
        anchor, rest = remaining[0], remaining[1:]
        for length in lengths_desc:
            if counts[length] == 0:
                continue
            counts[length] -= 1
            for tail in _itertools_permutations(rest, length - 1):
                cycle = (anchor,) + tail
                for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                    images[a] = b
                taken = set(tail)
                yield from gen(tuple(e for e in rest if e not in taken))
            counts[length] += 1

    return gen(tuple(range(n)))


def canonical_of_type(n: int, cycle_type: Iterable[int]) -> Perm:
    """A fixed representative: consecutive blocks, longest cycle first."""
    parts = tuple(sorted(cycle_type, reverse=True))
    if sum(parts) != n:
        raise ValueError("cycle type must partition n")
    images = list(range(n))
    start = 0
    for part in parts:
        for j in range(part):
            images[start + j] = start + (j + 1) % part
        start += part
    return tuple(images)


def is_transitive(x: Perm, y: Perm) -> bool:
    """Whether the group generated by ``x`` and ``y`` has a single orbit."""
    n = len(x)
    if len(y) != n:
        raise ValueError("permutations act on different sets")
    if n == 0:
        return False
    seen = [False] * n
    seen[0] = True
    stack = [0]
    found = 1
    while stack:
        i = stack.pop()
        for j in (x[i], y[i]):
            if not seen[j]:
                seen[j] = True
                found += 1
                stack.append(j)
    return found == n


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Perm:
    """Parse 1-based cycle notation like ``"(1,3,2,5,4)"`` or
    ``"(1,2)(3,4)"`` into an image tuple on ``{0..n-1}``."""
    stripped = text.replace(" ", "")
    if _CYCLE.sub("", stripped):
        raise ValueError(f"malformed cycle notation {text!r}")
    images = list(range(n))
    seen: set[int] = set()
    for cycle_text in _CYCLE.findall(stripped):
        if not cycle_text:
            continue
        try:
            elements = [int(tok) - 1 for tok in cycle_text.split(",")]
        except ValueError:
            raise ValueError(f"malformed cycle notation {text!r}") from None
        if any(e < 0 or e >= n for e in elements):
            raise ValueError(f"cycle entry out of range 1..{n} in {text!r}")
        if seen & set(elements) or len(set(elements)) != len(elements):
            raise ValueError(f"repeated entry in cycle notation {text!r}")
        seen.update(elements)
        for a, b in zip(elements, elements[1:] + elements[:1]):
            images[a] = b
    return tuple(images)


def cycles_str(p: Perm) -> str:
    """1-based cycle notation, fixed points omitted."""
    text = "".join(
        "(" + ",".join(str(e + 1) for e in cycle) + ")"
        for cycle in perm_cycles(p)
        if len(cycle) > 1
    )
    return text or "()"


def _as_passport(p: Passport | QuasiOneFacePassport) -> Passport:
    if isinstance(p, QuasiOneFacePassport):
        return p.to_passport()
    return p


def _labeling_factor(dist: WeightDistribution) -> int:
    """Labelings of same-length cycles compatible with the distribution:
    a multinomial per weight class."""
    factor = 1
    by_weight: dict[int, list[int]] = {}
    for e in dist.entries:
        by_weight.setdefault(e.weight, []).append(e.multiplicity)
    for mults in by_weight.values():
        factor *= math.factorial(sum(mults))
        for m in mults:
            factor //= math.factorial(m)
    return factor


def _sum_over(
    candidates: Iterable, term, workers: int
) -> int:
    if workers <= 1:
        return sum(term(c) for c in candidates)
    items = list(candidates)
    chunk = (len(items) + workers - 1) // workers or 1
    slices = [items[i : i + chunk] for i in range(0, len(items), chunk)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        partials = pool.map(lambda part: sum(term(c) for c in part), slices)
        return sum(partials)


def count_numbered_maps(
    p: Passport | QuasiOneFacePassport,
    cap: int | None = None,
    workers: int = 1,
) -> int:
    """Edge-numbered maps with the given passport, counted exhaustively.

    For an unlabeled passport this is the number of pairs ``(x, y)`` with
    the prescribed cycle types for ``x``, ``y`` and ``y∘x`` and transitive
    joint action; labeled distributions multiply in the count of
    compatible labelings.  Only one conjugacy class is enumerated; the
    count extends to the whole search space by conjugation invariance.
    """
    p = _as_passport(p)
    cap = DEFAULT_CAP if cap is None else cap
    n = p.n
    types = [d.weights_multiset() for d in p.dists]
    if any(sum(t) != n for t in types):
        return 0
    if sum(len(t) for t in types) - n != 2 - 2 * p.genus:
        return 0
    sizes = [class_size(n, t) for t in types]
    if sizes[0] * sizes[1] > cap:
        raise CapExceeded(
            f"search space {sizes[0]}*{sizes[1]} exceeds cap {cap}"
        )
    label_factor = 1
    for dist in p.dists:
        label_factor *= _labeling_factor(dist)

    enum_idx = min(range(3), key=lambda i: sizes[i])
    rep_idx = max((i for i in range(3) if i != enum_idx), key=lambda i: sizes[i])
    check_idx = 3 - enum_idx - rep_idx
    rep = canonical_of_type(n, types[rep_idx])
    rep_inv = perm_inverse(rep)
    check_type = types[check_idx]

    def term(candidate: Perm) -> int:
        roles: list[Perm | None] = [None, None, None]
        roles[rep_idx] = rep
        roles[enum_idx] = candidate
        x, y, z = roles
        if z is None:
            z = perm_compose(y, x)  # type: ignore[arg-type]
        elif x is None:
            x = perm_compose(perm_inverse(y), z)  # type: ignore[arg-type]
        else:
            y = perm_compose(z, rep_inv if rep_idx == 0 else perm_inverse(x))
        derived = (x, y, z)[check_idx]
        if perm_cycle_type(derived) != check_type:
            return 0
        return 1 if is_transitive(x, y) else 0  # type: ignore[arg-type]

    pairs = _sum_over(permutations_of_type(n, types[enum_idx]), term, workers)
    return sizes[rep_idx] * pairs * label_factor


def oracle_rooted(
    p: Passport | QuasiOneFacePassport,
    cap: int | None = None,
    workers: int = 1,
) -> int:
    """Rooted map count: numbered count divided (exactly) by (n-1)!."""
    p = _as_passport(p)
    numbered = count_numbered_maps(p, cap, workers)
    quotient, remainder = divmod(numbered, math.factorial(p.n - 1))
    assert remainder == 0, f"numbered count not divisible by (n-1)! for {p}"
    return quotient


@lru_cache(maxsize=64)
def _centralizer_by_type(n: int, l: int) -> dict[tuple[int, ...], tuple[Perm, ...]]:
    """Centralizer of the block regular permutation of type (l^(n/l)),
    bucketed by cycle type."""
    m = n // l
    buckets: dict[tuple[int, ...], list[Perm]] = {}
    for pi in _itertools_permutations(range(m)):
        for shifts in product(range(l), repeat=m):
            images = [0] * n
            for i in range(m):
                base = pi[i] * l
                shift = shifts[i]
                for j in range(l):
                    images[i * l + j] = base + (j + shift) % l
            perm = tuple(images)
            buckets.setdefault(perm_cycle_type(perm), []).append(perm)
    return {t: tuple(ps) for t, ps in buckets.items()}


def _block_regular(n: int, l: int) -> Perm:
    """The fixed representative (0..l-1)(l..2l-1)... of type (l^(n/l))."""
    return tuple((i - i % l) + (i % l + 1) % l for i in range(n))


def _assignment_count(sizes: Sequence[int], quotas: Sequence[int]) -> int:
    """Ways to assign orbits of the given sizes to labeled slots so each
    slot receives exactly its quota."""
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def count(idx: int, remaining: tuple[int, ...]) -> int:
        if idx == len(sizes):
            return 1 if not any(remaining) else 0
        key = (idx, remaining)
        if key in memo:
            return memo[key]
        total = 0
        size = sizes[idx]
        for slot, room in enumerate(remaining):
            if room >= size:
                total += count(
                    idx + 1,
                    remaining[:slot] + (room - size,) + remaining[slot + 1 :],
                )
        memo[key] = total
        return total

    return count(0, tuple(quotas))


def _invariant_labelings(dist: WeightDistribution, perm: Perm, phi: Perm) -> int:
    """Labelings of ``perm``'s cycles compatible with ``dist`` and fixed by
    conjugation with ``phi`` (which must commute with ``perm``)."""
    by_weight: dict[int, list[int]] = {}
    for e in dist.entries:
        by_weight.setdefault(e.weight, []).append(e.multiplicity)
    if all(len(mults) == 1 for mults in by_weight.values()):
        return 1  # unlabeled: the unique labeling is always preserved
    cycles = perm_cycles(perm)
    cycle_of = [0] * len(perm)
    for idx, cycle in enumerate(cycles):
        for e in cycle:
            cycle_of[e] = idx
    image = [cycle_of[phi[cycle[0]]] for cycle in cycles]
    orbit_sizes_by_len: dict[int, list[int]] = {}
    seen = [False] * len(cycles)
    for start in range(len(cycles)):
        if seen[start]:
            continue
        size = 0
        j = start
        while not seen[j]:
            seen[j] = True
            size += 1
            j = image[j]
        orbit_sizes_by_len.setdefault(len(cycles[start]), []).append(size)
    ways = 1
    for weight, quotas in by_weight.items():
        sizes = orbit_sizes_by_len.get(weight, [])
        ways *= _assignment_count(sizes, quotas)
        if ways == 0:
            break
    return ways


def oracle_fix(
    p: Passport | QuasiOneFacePassport,
    l: int,
    cap: int | None = None,
    workers: int = 1,
) -> int:
    """Numbered maps with passport ``p`` fixed by conjugation with the
    block regular permutation of cycle type (l^(n/l)).

    Enumerates only permutations commuting with the representative (its
    centralizer, bucketed by cycle type).
    """
    p = _as_passport(p)
    cap = DEFAULT_CAP if cap is None else cap
    n = p.n
    if n % l:
        raise ValueError(f"l = {l} does not divide n = {n}")
    if l == 1:
        return count_numbered_maps(p, cap, workers)
    types = [d.weights_multiset() for d in p.dists]
    if any(sum(t) != n for t in types):
        return 0
    if sum(len(t) for t in types) - n != 2 - 2 * p.genus:
        return 0
    m = n // l
    centralizer_size = l**m * math.factorial(m)
    if centralizer_size > cap:
        raise CapExceeded(f"centralizer size {centralizer_size} exceeds cap {cap}")
    buckets = _centralizer_by_type(n, l)
    xs = buckets.get(types[0], ())
    ys = buckets.get(types[1], ())
    if len(xs) * len(ys) > cap:
        raise CapExceeded(f"search space {len(xs)}*{len(ys)} exceeds cap {cap}")
    phi = _block_regular(n, l)
    face_type = types[2]

    def term(x: Perm) -> int:
        subtotal = 0
        for y in ys:
            z = perm_compose(y, x)
            if perm_cycle_type(z) != face_type:
                continue
            if not is_transitive(x, y):
                continue
            ways = _invariant_labelings(p.dists[0], x, phi)
            if ways:
                ways *= _invariant_labelings(p.dists[1], y, phi)
            if ways:
                ways *= _invariant_labelings(p.dists[2], z, phi)
            subtotal += ways
        return subtotal

    return _sum_over(xs, term, workers)


def oracle_unrooted(
    p: Passport | QuasiOneFacePassport,
    cap: int | None = None,
    workers: int = 1,
) -> int:
    """Unrooted map count via Burnside's lemma over regular cycle types."""
    p = _as_passport(p)
    total = Fraction(0)
    for l in divisors(p.n):
        m = p.n // l
        total += Fraction(
            oracle_fix(p, l, cap, workers), math.factorial(m) * l**m
        )
    assert total.denominator == 1, f"Burnside average not integral for {p}"
    return int(total)


@dataclass(frozen=True)
class WitnessRowCheck:
    index: int  # 1-based
    ok: bool
    genus: int | None
    messages: tuple[str, ...]


@dataclass(frozen=True)
class WitnessReport:
    rows: tuple[WitnessRowCheck, ...]
    ok: bool
    rooted_distinct: bool
    self_conjugate: tuple[int, ...]
    conjugacy_orbits: tuple[tuple[int, ...], ...]


def load_witness_rows(path) -> list[tuple[str, str]]:
    """Read a witness file: one map per line, two cycle-notation
    permutations separated by whitespace, ``#`` comments."""
    rows = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise ValueError(f"expected two permutations per line, got {line!r}")
            rows.append((tokens[0], tokens[1]))
    return rows


def verify_witness_table(
    rows: Sequence[tuple[str, str] | tuple[Perm, Perm]],
    passport: Passport | QuasiOneFacePassport | None = None,
    n: int | None = None,
) -> WitnessReport:
    """Check claimed algebraic maps row by row.

    Validates each pair (bijectivity, transitivity, genus, and the
    passport's cycle types when given), flags duplicate rooted maps, and
    reports the orbit structure under conjugation by the standard n-cycle
    (rows whose orbit is a fixed point are "self-conjugate").
    """
    expected = _as_passport(passport) if passport is not None else None
    if n is None:
        if expected is not None:
            n = expected.n
        else:
            n = 0
            for row in rows:
                for half in row:
                    if isinstance(half, str):
                        found = [int(tok) for tok in re.findall(r"\d+", half)]
                        n = max(n, max(found, default=0))
                    else:
                        n = max(n, len(half))
    checks: list[WitnessRowCheck] = []
    pairs: list[tuple[Perm, Perm] | None] = []
    for i, (raw_x, raw_y) in enumerate(rows, start=1):
        messages: list[str] = []
        try:
            x = parse_cycles(raw_x, n) if isinstance(raw_x, str) else tuple(raw_x)
            y = parse_cycles(raw_y, n) if isinstance(raw_y, str) else tuple(raw_y)
        except ValueError as err:
            checks.append(WitnessRowCheck(i, False, None, (str(err),)))
            pairs.append(None)
            continue
        genus: int | None = None
        if sorted(x) != list(range(n)) or sorted(y) != list(range(n)):
            messages.append("not a permutation of the edge set")
        else:
            if not is_transitive(x, y):
                messages.append("pair is not transitive")
            z = perm_compose(y, x)
            cycles_total = sum(
                len(perm_cycle_type(p)) for p in (x, y, z)
            )
            genus2, parity = divmod(2 - (cycles_total - n), 2)
            if parity:
                messages.append("Euler characteristic has odd parity")
            else:
                genus = genus2
                if genus < 0:
                    messages.append("negative genus")
            if expected is not None:
                want = [d.weights_multiset() for d in expected.dists]
                have = [perm_cycle_type(p) for p in (x, y, z)]
                if have != want:
                    messages.append(
                        f"cycle types {have} do not match passport {want}"
                    )
                elif expected.genus != genus:
                    messages.append(
                        f"genus {genus} does not match passport genus {expected.genus}"
                    )
        ok = not messages
        checks.append(WitnessRowCheck(i, ok, genus, tuple(messages)))
        pairs.append((x, y) if ok else None)

    # Distinctness as rooted maps: no relabeling fixing the root edge 0
    # carries one row to another.
    rooted_distinct = True
    valid = [(i, pair) for i, pair in enumerate(pairs) if pair is not None]
    if n <= 9:
        for a in range(len(valid)):
            for b in range(a + 1, len(valid)):
                (ia, (xa, ya)), (ib, (xb, yb)) = valid[a], valid[b]
                for sigma_rest in _itertools_permutations(range(1, n)):
                    sigma = (0,) + sigma_rest
                    if (
                        perm_compose(sigma, perm_compose(xa, perm_inverse(sigma)))
                        == xb
                        and perm_compose(
                            sigma, perm_compose(ya, perm_inverse(sigma))
                        )
                        == yb
                    ):
                        rooted_distinct = False
                        break
                if not rooted_distinct:
                    break
            if not rooted_distinct:
                break

    # Orbits under conjugation by the standard n-cycle.
    phi = tuple((i + 1) % n for i in range(n)) if n else ()
    phi_inv = perm_inverse(phi) if n else ()
    index_of = {pair: i for i, pair in enumerate(pairs) if pair is not None}
    successor: dict[int, int] = {}
    for i, pair in enumerate(pairs):
        if pair is None:
            continue
        conj = (
            perm_compose(phi, perm_compose(pair[0], phi_inv)),
            perm_compose(phi, perm_compose(pair[1], phi_inv)),
        )
        if conj in index_of:
            successor[i] = index_of[conj]
    self_conjugate = tuple(
        sorted(i + 1 for i, j in successor.items() if i == j)
    )
    orbits: list[tuple[int, ...]] = []
    visited: set[int] = set()
    for i in sorted(successor):
        if i in visited:
            continue
        orbit = [i]
        visited.add(i)
        j = successor[i]
        while j not in visited and j in successor:
            orbit.append(j)
            visited.add(j)
            j = successor[j]
        orbits.append(tuple(e + 1 for e in orbit))

    ok = all(c.ok for c in checks) and rooted_distinct
    return WitnessReport(
        tuple(checks), ok, rooted_distinct, self_conjugate, tuple(orbits)
    )
