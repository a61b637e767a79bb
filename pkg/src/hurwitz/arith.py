"""Multiplicative number theory for counting epimorphisms onto cyclic groups.

Everything here is exact integer arithmetic; the exponential-sum form of
the von Sterneck function is used only as a test oracle, never at runtime.
"""

from __future__ import annotations

import math
from typing import Iterable

__all__ = [
    "euler_phi",
    "mobius",
    "jordan_phi",
    "von_sterneck",
    "orbicyclic",
    "epi0_count",
    "divisors",
]


def _factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, ascending."""
    factors: list[tuple[int, int]] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n``, ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    divs = [1]
    for p, e in _factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    """Count of 1 <= k <= n coprime to n."""
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    for p, _ in _factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    """Squarefree sign: (-1)^(number of prime factors), 0 on square factors."""
    if n < 1:
        raise ValueError("n must be positive")
    factors = _factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def jordan_phi(k: int, n: int) -> int:
    """Jordan function: sum of mobius(n/d) * d**k over divisors d of n.

    ``jordan_phi(0, n)`` is 1 exactly when n == 1, and ``jordan_phi(1, n)``
    is Euler's totient.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(mobius(n // d) * d**k for d in divisors(n))


def von_sterneck(x: int, n: int) -> int:
    """Ramanujan sum of x mod n, via the closed form.

    Equals ``euler_phi(n) * mobius(n/g) / euler_phi(n/g)`` with
    ``g = gcd(x, n)``; the division is always exact.
    """
    if n < 1:
        raise ValueError("n must be positive")
    q = n // math.gcd(x, n)
    numerator = euler_phi(n) * mobius(q)
    denominator = euler_phi(q)
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0, f"von Sterneck value not integral at ({x}, {n})"
    return quotient


def orbicyclic(orders: Iterable[int]) -> int:
    """Averaged product of Ramanujan sums over the cone orders.

    Computes ``(1/T) * sum_{k=1..T} prod_i eta(k, t_i)`` with ``T`` the lcm
    of the orders (1 for an empty list).  The value counts tuples of
    elements of prescribed orders in Z_T summing to zero, so it is always
    a nonnegative integer; both facts are asserted.
    """
    ts = tuple(orders)
    if any(t < 1 for t in ts):
        raise ValueError("cone orders must be positive")
    period = math.lcm(*ts) if ts else 1
    total = 0
    for k in range(1, period + 1):
        term = 1
        for t in ts:
            term *= von_sterneck(k, t)
            if term == 0:
                break
        total += term
    quotient, remainder = divmod(total, period)
    assert remainder == 0, f"orbicyclic sum not divisible by lcm for {ts}"
    assert quotient >= 0, f"orbicyclic value negative for {ts}"
    return quotient


def _symbol_parts(sigma) -> tuple[int, tuple[int, ...]]:
    if hasattr(sigma, "genus") and hasattr(sigma, "orders"):
        return sigma.genus, tuple(sigma.orders)
    genus, orders = sigma
    return genus, tuple(orders)


def epi0_count(sigma, l: int) -> int:
    """Number of order-preserving epimorphisms from the Fuchsian group of
    an orbifold symbol onto the cyclic group of order ``l``.

    ``sigma`` is an orbifold symbol (anything with ``genus`` and ``orders``
    attributes, or a ``(genus, orders)`` pair).  Returns 0 unless every
    cone order divides ``l``; otherwise
    ``T**(2g) * jordan_phi(2g, l // T) * orbicyclic(orders)`` with ``T``
    the lcm of the orders.
    """
    if l < 1:
        raise ValueError("l must be positive")
    genus, orders = _symbol_parts(sigma)
    period = math.lcm(*orders) if orders else 1
    if l % period:
        return 0
    return period ** (2 * genus) * jordan_phi(2 * genus, l // period) * orbicyclic(orders)
