"""Acceptance suite: every criterion runs at its stated tolerance (all
counts are exact) and prints one pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s``.
"""

import math
import random
import time
from fractions import Fraction
from importlib import resources

import mpmath

from hurwitz.arith import divisors, epi0_count, jordan_phi, von_sterneck
from hurwitz.oracle import (
    load_witness_rows,
    oracle_rooted,
    oracle_unrooted,
    verify_witness_table,
)
from hurwitz.orbifolds import (
    OrbifoldSymbol,
    divide_quasi_one_face,
    enumerate_symbols,
    multiply,
)
from hurwitz.passports import (
    QuasiOneFacePassport,
    enumerate_quasi_one_face,
    fill,
    passport_factorial,
)
from hurwitz.rooted import rooted_count, weighted_hurwitz
from hurwitz.trees import TreePassport, kochetkov_count
from hurwitz.unrooted import burnside_total, unrooted_count


def qu(g, m, n, p1, p2):
    return QuasiOneFacePassport.from_partitions(g, m, n, p1, p2)


def _report(number, description, elapsed, budget):
    print(
        f"criterion {number} PASS ({elapsed:.2f}s, budget {budget:.0f}s): {description}"
    )


def test_criterion_1_genus1_eight_edge_fixture():
    start = time.time()
    q = qu(1, 4, 8, "8", "4^2")
    assert rooted_count(q) == 42
    count, terms = unrooted_count(q)
    assert count == 6
    assert weighted_hurwitz(q) == Fraction(21, 4)
    audit = [(t.l, t.rooted, t.epi0) for t in terms]
    assert audit == [(1, 42, 1), (2, 2, 1), (4, 2, 2)]
    elapsed = time.time() - start
    assert elapsed < 1.0
    _report(1, "rooted 42, unrooted 6, weighted 21/4, 3 audit terms", elapsed, 1)


def test_criterion_2_genus2_five_edge_fixture():
    start = time.time()
    q = qu(2, 5, 5, "5", "5")
    assert rooted_count(q) == 8
    assert unrooted_count(q)[0] == 4
    assert epi0_count(OrbifoldSymbol(0, (5, 5, 5)), 5) == 12
    rows = load_witness_rows(
        resources.files("hurwitz").joinpath("data/genus2_5edge_maps.txt")
    )
    assert len(rows) == 8
    report = verify_witness_table(rows, passport=q)
    assert report.ok
    assert all(check.ok for check in report.rows)
    # Burnside assembly of the oracle: identity fixes 192 numbered maps,
    # each of the 24 five-cycles fixes 12; |S_5| = 120.
    assert oracle_unrooted(q) == (192 + 24 * 12) // 120 == 4
    elapsed = time.time() - start
    assert elapsed < 10.0
    _report(2, "rooted 8, unrooted 4, epi0 12, 8 witnesses, Burnside 4", elapsed, 10)


def test_criterion_3_genus2_six_edge_fixture():
    start = time.time()
    q = qu(2, 5, 6, "6", "6")
    assert rooted_count(q) == 48
    count, terms = unrooted_count(q)
    assert count == 8
    # the division search finds no nontrivial (l, symbol) quotients
    assert [t.l for t in terms] == [1]
    for l in divisors(q.n):
        if l == 1:
            continue
        for sym in enumerate_symbols(q.genus, l):
            assert divide_quasi_one_face(q, sym, l) == []
    formulas_elapsed = time.time() - start
    assert formulas_elapsed < 1.0
    assert oracle_rooted(q) == 48
    assert oracle_unrooted(q) == 8
    elapsed = time.time() - start
    assert elapsed < 60.0
    _report(3, "rooted 48, unrooted 8, only the trivial quotient", elapsed, 60)


def test_criterion_4_tree_subcounts():
    start = time.time()
    first_split = [
        ((6, 1, 1), 6),
        ((5, 2, 1), 6),
        ((4, 3, 1), 2),
        ((4, 2, 2), 2),
        ((3, 3, 2), 6),
    ]
    for w1, expected in first_split:
        assert kochetkov_count(TreePassport(w1, (4, 4))) == expected
    assert kochetkov_count(TreePassport((8,), (2, 1, 1, 4))) == 6
    elapsed = time.time() - start
    assert elapsed < 1.0
    _report(4, "tree sub-counts 6, 6, 2, 2, 6 and 6", elapsed, 1)


def test_criterion_5_oracle_equivalence_sweep():
    start = time.time()
    checked = 0
    for n in range(1, 9):
        for q in enumerate_quasi_one_face(n):
            assert rooted_count(q) == oracle_rooted(q), q.render()
            assert unrooted_count(q)[0] == oracle_unrooted(q), q.render()
            checked += 1
    elapsed = time.time() - start
    assert elapsed < 1800.0
    _report(5, f"all {checked} passports with n <= 8 match the oracle", elapsed, 1800)


def test_criterion_6_property_suites():
    start = time.time()
    pool = [q for n in range(1, 8) for q in enumerate_quasi_one_face(n)]
    rng = random.Random(0)
    sample = rng.sample(pool, 120)

    # fill idempotence
    for q in sample:
        once = fill(q)
        assert fill(once.to_quasi_one_face()) == once

    # factorial relation
    for q in sample:
        filled = fill(q).to_quasi_one_face()
        assert rooted_count(filled) == passport_factorial(q) * rooted_count(q)

    # multiply/divide round trip over every admissible quotient
    for q in sample:
        for l in divisors(q.n):
            if l == 1 or q.m % l or (q.n - q.m) % l:
                continue
            for sym in enumerate_symbols(q.genus, l):
                for quotient in divide_quasi_one_face(q, sym, l):
                    assert multiply(sym, l, quotient) == q.to_passport()

    # Burnside assembly equals the quotient-sum assembly
    for q in sample[:40]:
        assert burnside_total(q) == unrooted_count(q)[0]

    # von Sterneck closed form vs high-precision exponential sum
    mpmath.mp.dps = 40
    for n in range(1, 31):
        coprime = [k for k in range(1, n + 1) if math.gcd(k, n) == 1]
        for x in range(1, n + 1):
            total = mpmath.fsum(
                mpmath.cos(2 * mpmath.pi * k * x / n) for k in coprime
            )
            assert int(mpmath.nint(total)) == von_sterneck(x, n)

    # Jordan multiplicativity
    for a in range(1, 51):
        for b in range(1, 51):
            if math.gcd(a, b) == 1:
                for k in (0, 1, 2, 3):
                    assert jordan_phi(k, a * b) == jordan_phi(k, a) * jordan_phi(k, b)

    # integrality assertions never fire across the sweep: every rooted and
    # unrooted evaluation above completed without AssertionError
    elapsed = time.time() - start
    assert elapsed < 600.0
    _report(6, "all property suites hold", elapsed, 600)


def test_criterion_7_positive_genus_existence():
    start = time.time()
    rng = random.Random(2024)
    pool = [
        q
        for n in range(1, 9)
        for q in enumerate_quasi_one_face(n)
        if q.genus >= 1
    ]
    for _ in range(200):
        q = rng.choice(pool)
        assert rooted_count(q) > 0, q.render()
    elapsed = time.time() - start
    assert elapsed < 300.0
    _report(7, "200 random positive-genus passports all nonempty", elapsed, 300)
