from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from hurwitz.arith import divisors, epi0_count
from hurwitz.orbifolds import (
    OrbifoldSymbol,
    SigmaEntry,
    SigmaLabeledPassport,
    divide_passport,
    divide_quasi_one_face,
    enumerate_symbols,
    harvey_check,
    multiply,
    parse_symbol,
)
from hurwitz.passports import Passport, QuasiOneFacePassport, enumerate_quasi_one_face


def qu(g, m, n, p1, p2):
    return QuasiOneFacePassport.from_partitions(g, m, n, p1, p2)


def test_symbol_canonical_form():
    s = OrbifoldSymbol(0, (1, 2, 1, 4, 4, 1))
    assert s.orders == (4, 4, 2)
    assert s.period == 4
    assert OrbifoldSymbol(0, (2, 4, 4)) == s
    assert s.render() == "0;4,4,2"
    assert OrbifoldSymbol(2).render() == "2;"


def test_parse_symbol():
    assert parse_symbol("0;5,5,5") == OrbifoldSymbol(0, (5, 5, 5))
    assert parse_symbol("2;") == OrbifoldSymbol(2)
    assert parse_symbol("2") == OrbifoldSymbol(2)
    with pytest.raises(ValueError):
        parse_symbol("x;2")
    with pytest.raises(ValueError):
        parse_symbol("0;2,a")


def test_harvey_examples():
    assert harvey_check(2, 5, OrbifoldSymbol(0, (5, 5, 5)))
    assert harvey_check(1, 2, OrbifoldSymbol(0, (2, 2, 2, 2)))
    for g in range(5):
        assert harvey_check(g, 1, OrbifoldSymbol(g))
    assert harvey_check(1, 4, OrbifoldSymbol(0, (4, 4, 2)))
    # genus 0 quotient requires lcm == l
    assert not harvey_check(1, 4, OrbifoldSymbol(0, (2, 2, 2, 2)))
    # Riemann-Hurwitz mismatch
    assert not harvey_check(2, 2, OrbifoldSymbol(0, (2, 2, 2, 2)))
    # sphere rotation: two cone points of full order
    assert harvey_check(0, 7, OrbifoldSymbol(0, (7, 7)))


def test_enumerate_symbols_examples():
    assert OrbifoldSymbol(0, (5, 5, 5)) in enumerate_symbols(2, 5)
    assert enumerate_symbols(1, 2) == [
        OrbifoldSymbol(0, (2, 2, 2, 2)),
        OrbifoldSymbol(1),
    ]
    for g in range(4):
        assert enumerate_symbols(g, 1) == [OrbifoldSymbol(g)]


def test_enumerate_symbols_against_brute_force_scan():
    # independent candidate generation: all multisets of divisors >= 2 with
    # length bounded by twice the largest possible deficiency
    for g1 in range(4):
        for l in range(1, 13):
            divs = [d for d in divisors(l) if d >= 2]
            rmax = 2 * (2 + 2 * g1)
            brute = set()
            for g2 in range(g1 + 1):
                for r in range(rmax + 1):
                    for orders in combinations_with_replacement(divs, r):
                        sym = OrbifoldSymbol(g2, orders)
                        if harvey_check(g1, l, sym):
                            brute.add(sym)
            assert brute == set(enumerate_symbols(g1, l))


def test_epi0_positive_exactly_on_admissible_symbols():
    # Two independent routes to the same realizability fact: the
    # epimorphism count is positive exactly when the Riemann-Hurwitz genus
    # is a nonnegative integer and the admissibility conditions hold.
    for l in range(1, 13):
        divs = [d for d in divisors(l) if d >= 2]
        for g2 in range(4):
            for r in range(7):
                for orders in combinations_with_replacement(divs, r):
                    sym = OrbifoldSymbol(g2, orders)
                    if sym.orders != tuple(sorted(orders, reverse=True)):
                        continue
                    chi = Fraction(2 - 2 * g2) - sum(
                        Fraction(t - 1, t) for t in sym.orders
                    )
                    g1_twice = 2 - l * chi
                    realizable = (
                        g1_twice.denominator == 1
                        and int(g1_twice) >= 0
                        and int(g1_twice) % 2 == 0
                        and harvey_check(int(g1_twice) // 2, l, sym)
                    )
                    assert (epi0_count(sym, l) > 0) == realizable, (sym, l)


def test_multiply_examples():
    quotient = SigmaLabeledPassport(
        0,
        4,
        (
            (SigmaEntry(4, 2, 1),),
            (SigmaEntry(2, 2, 2),),
            (SigmaEntry(2, 2, 1), SigmaEntry(1, 1, 2)),
        ),
    )
    product = multiply(OrbifoldSymbol(0, (2, 2, 2, 2)), 2, quotient)
    assert product == qu(1, 4, 8, "8", "4^2").to_passport()

    point = SigmaLabeledPassport(
        0,
        1,
        (
            (SigmaEntry(1, 5, 1),),
            (SigmaEntry(1, 5, 1),),
            (SigmaEntry(1, 5, 1),),
        ),
    )
    assert multiply(OrbifoldSymbol(0, (5, 5, 5)), 5, point) == Passport.from_partitions(
        2, 5, "5", "5", "5"
    )


def test_multiply_requires_matching_symbol_and_divisibility():
    quotient = SigmaLabeledPassport(
        0,
        1,
        (
            (SigmaEntry(1, 5, 1),),
            (SigmaEntry(1, 5, 1),),
            (SigmaEntry(1, 5, 1),),
        ),
    )
    with pytest.raises(ValueError):
        multiply(OrbifoldSymbol(0, (5, 5)), 5, quotient)
    with pytest.raises(ValueError):
        multiply(OrbifoldSymbol(0, (5, 5, 5)), 3, quotient)


def test_divide_fixture_one():
    p = qu(1, 4, 8, "8", "4^2").to_passport()
    results = divide_passport(p, OrbifoldSymbol(0, (2, 2, 2, 2)), 2)
    assert len(results) == 1
    (r,) = results
    assert r.genus == 0 and r.m == 4
    assert r.colors[0] == (SigmaEntry(4, 2, 1),)
    assert r.colors[1] == (SigmaEntry(2, 2, 2),)
    assert r.colors[2] == (SigmaEntry(2, 2, 1), SigmaEntry(1, 1, 2))


def test_divide_fixture_two():
    p = Passport.from_partitions(2, 5, "5", "5", "5")
    results = divide_passport(p, OrbifoldSymbol(0, (5, 5, 5)), 5)
    assert len(results) == 1
    (r,) = results
    assert r.m == 1
    assert all(color == (SigmaEntry(1, 5, 1),) for color in r.colors)


def test_divide_trivial_symbol():
    q = qu(1, 4, 8, "8", "4^2")
    (r,) = divide_quasi_one_face(q, OrbifoldSymbol(1), 1)
    assert r.to_quasi_one_face() == q
    assert multiply(OrbifoldSymbol(1), 1, r) == q.to_passport()


def test_divide_second_fixture_genus_zero_quotients():
    q = qu(1, 4, 8, "8", "4^2")
    (r,) = divide_quasi_one_face(q, OrbifoldSymbol(0, (4, 4, 2)), 4)
    assert r.colors[0] == (SigmaEntry(2, 4, 1),)
    assert r.colors[1] == (SigmaEntry(2, 2, 1),)
    assert r.colors[2] == (SigmaEntry(1, 4, 1), SigmaEntry(1, 1, 1))
    quotient = r.to_quasi_one_face()
    assert (quotient.genus, quotient.m, quotient.n) == (0, 1, 2)


def test_divide_requires_admissible_triple():
    q = qu(1, 4, 8, "8", "4^2")
    with pytest.raises(ValueError):
        divide_quasi_one_face(q, OrbifoldSymbol(0, (2, 2, 2, 2)), 4)


def test_divide_empty_unless_l_divides_face_data():
    q = qu(2, 5, 6, "6", "6")
    # l = 2 divides n = 6 but not m = 5
    for sym in enumerate_symbols(2, 2):
        assert divide_quasi_one_face(q, sym, 2) == []
    # l = 3: 3 does not divide 5 either
    for sym in enumerate_symbols(2, 3):
        assert divide_quasi_one_face(q, sym, 3) == []


def test_round_trip_over_enumerated_passports():
    for n in (2, 4, 6, 8):
        for q in enumerate_quasi_one_face(n):
            if not (q.dist1.is_unlabeled and q.dist2.is_unlabeled):
                continue
            for l in divisors(n):
                if q.m % l or (q.n - q.m) % l:
                    continue
                for sym in enumerate_symbols(q.genus, l):
                    results = divide_quasi_one_face(q, sym, l)
                    assert len(set(results)) == len(results)
                    for r in results:
                        if l > 1:
                            assert multiply(sym, l, r) == q.to_passport()
                        quotient = r.to_quasi_one_face()
                        assert quotient.validate().ok
                        assert (quotient.m, quotient.n) == (q.m // l, q.n // l)


def test_sigma_passport_rejects_duplicate_pairs():
    with pytest.raises(ValueError):
        SigmaLabeledPassport(
            0,
            4,
            (
                (SigmaEntry(2, 2, 1), SigmaEntry(2, 2, 1)),
                (SigmaEntry(4, 1, 1),),
                (SigmaEntry(4, 1, 1),),
            ),
        )


def test_sigma_passport_symbol_collects_orders():
    r = SigmaLabeledPassport(
        0,
        4,
        (
            (SigmaEntry(4, 2, 1),),
            (SigmaEntry(2, 2, 2),),
            (SigmaEntry(2, 2, 1), SigmaEntry(1, 1, 2)),
        ),
    )
    assert r.symbol() == OrbifoldSymbol(0, (2, 2, 2, 2))
    assert r.render() == "(0, 4; 4@2 | 2@2^2 | 2@2 1^2)"
