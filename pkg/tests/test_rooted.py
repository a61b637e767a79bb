import random
from fractions import Fraction

import pytest

from hurwitz.oracle import oracle_rooted
from hurwitz.passports import (
    QuasiOneFacePassport,
    enumerate_quasi_one_face,
    fill,
    passport_factorial,
)
from hurwitz.rooted import (
    CycleData,
    enumerate_cycle_data,
    enumerate_row_refinements,
    exists_quasi_one_face,
    r_weight,
    rooted_count,
    weighted_hurwitz,
)
from hurwitz.trees import kochetkov_count


def qu(g, m, n, p1, p2):
    return QuasiOneFacePassport.from_partitions(g, m, n, p1, p2)


def test_enumerate_cycle_data_examples():
    assert enumerate_cycle_data(1, 1, 2) == [
        CycleData((1,), (0, 0)),
        CycleData((0,), (1, 0)),
        CycleData((0,), (0, 1)),
    ]
    assert enumerate_cycle_data(0, 3, 2) == [CycleData((0, 0, 0), (0, 0))]
    assert enumerate_cycle_data(2, 1, 1) == [
        CycleData((2,), (0,)),
        CycleData((1,), (1,)),
        CycleData((0,), (2,)),
    ]


def test_r_weight():
    assert r_weight(CycleData((1,), (0, 0))) == 3
    assert r_weight(CycleData((0, 0), (0,))) == 1
    assert r_weight(CycleData((1,), (1,))) == 9
    assert r_weight(CycleData((2,), (1, 1))) == 45


def test_row_refinements_follow_composition_order():
    f = fill(qu(1, 7, 8, "4^2", "2^4"))
    data = CycleData((1, 0), (0, 0, 0, 0))
    refinements = list(enumerate_row_refinements(f, data))
    assert len(refinements) == 3
    assert [r.rows1[0] for r in refinements] == [(2, 1, 1), (1, 2, 1), (1, 1, 2)]
    assert all(r.rows1[1] == (4,) for r in refinements)


def test_row_refinements_trivial_cycle_data():
    f = fill(qu(1, 4, 8, "8", "4^2"))
    zero = CycleData((0,), (0, 0))
    (only,) = enumerate_row_refinements(f, zero)
    assert only.rows1 == ((8,),)
    assert only.rows2 == ((4,), (4,))


def test_row_refinements_count_for_split_of_eight():
    f = fill(qu(1, 4, 8, "8", "4^2"))
    data = CycleData((1,), (0, 0))
    refinements = list(enumerate_row_refinements(f, data))
    assert len(refinements) == 21  # compositions of 8 into 3 ordered parts


def test_row_refinements_empty_when_split_exceeds_weight():
    f = fill(qu(2, 5, 6, "3^2", "6"))
    data = CycleData((2, 0), (0,))  # needs 5 parts out of weight 3
    assert list(enumerate_row_refinements(f, data)) == []


def test_rooted_fixtures():
    assert rooted_count(qu(1, 4, 8, "8", "4^2")) == 42
    assert rooted_count(qu(2, 5, 5, "5", "5")) == 8
    assert rooted_count(qu(2, 5, 6, "6", "6")) == 48


def test_weighted_hurwitz_fixtures():
    assert weighted_hurwitz(qu(1, 4, 8, "8", "4^2")) == Fraction(21, 4)
    assert weighted_hurwitz(qu(2, 5, 6, "6", "6")) == 8
    assert weighted_hurwitz(qu(2, 5, 5, "5", "5")) == Fraction(8, 5)


def test_single_weighted_edge_map():
    for n in (1, 2, 5, 9):
        q = qu(0, 1, n, str(n), str(n))
        assert rooted_count(q) == n
        assert weighted_hurwitz(q) == 1


def test_factorial_relation_on_fixtures():
    for q in (
        qu(1, 4, 8, "8", "4^2"),
        qu(0, 3, 3, "3", "1^3"),
        qu(2, 5, 5, "5", "5"),
        qu(0, 4, 6, "2^3", "3^2"),
    ):
        filled = fill(q).to_quasi_one_face()
        assert rooted_count(filled) == passport_factorial(q) * rooted_count(q)


def test_factorial_relation_across_enumeration():
    for n in (4, 5, 6):
        for q in enumerate_quasi_one_face(n):
            filled = fill(q).to_quasi_one_face()
            assert rooted_count(filled) == passport_factorial(q) * rooted_count(q)


def test_genus_zero_totally_labeled_reduces_to_tree_count():
    for vectors in (((3, 1), (2, 2)), ((4, 2, 2), (4, 4)), ((2, 1, 1), (4,))):
        w1, w2 = vectors
        n = sum(w1)
        m = len(w1) + len(w2) - 1
        from hurwitz.passports import FilledPassport

        f = FilledPassport(0, m, n, tuple(w1), tuple(w2))
        assert rooted_count(f.to_quasi_one_face()) == n * kochetkov_count(
            f.to_quasi_one_face()
        )


def test_invalid_passport_rejected():
    with pytest.raises(ValueError):
        rooted_count(qu(1, 5, 8, "8", "4^2"))


def test_existence_examples():
    assert exists_quasi_one_face(qu(1, 4, 8, "8", "4^2"))
    assert not exists_quasi_one_face(qu(0, 3, 4, "2^2", "2^2"))
    assert exists_quasi_one_face(qu(0, 1, 7, "7", "7"))


def test_existence_iff_positive_count_full_sweep():
    for n in range(1, 9):
        for q in enumerate_quasi_one_face(n):
            assert exists_quasi_one_face(q) == (rooted_count(q) > 0)


def test_positive_genus_always_exists_randomized():
    rng = random.Random(3)
    pool = [
        q
        for n in range(1, 9)
        for q in enumerate_quasi_one_face(n)
        if q.genus >= 1
    ]
    for q in rng.sample(pool, 60):
        assert rooted_count(q) > 0


def test_rooted_matches_oracle_small_sweep():
    for n in (1, 2, 3, 4, 5):
        for q in enumerate_quasi_one_face(n):
            assert rooted_count(q) == oracle_rooted(q)


def test_sigma_labeled_passports_run_transparently():
    # same weights under distinct labels: factorial drops from 2 to 1
    from hurwitz.passports import WeightDistribution, WeightEntry

    plain = qu(1, 7, 8, "4^2", "2^4")
    labeled = QuasiOneFacePassport(
        1,
        7,
        8,
        WeightDistribution(
            (WeightEntry("4@1", 4, 1), WeightEntry("4@2", 4, 1))
        ),
        plain.dist2,
    )
    assert rooted_count(labeled) == 2 * rooted_count(plain)
