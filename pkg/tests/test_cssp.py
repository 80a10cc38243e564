from collections import Counter

import pytest

from altsign import trapezoid
from altsign.cssp import (Cssp, CsspStats, cssp_class, enumerate_cssps,
                          from_json, gf, pretty, stats, structure_violation,
                          to_json, validate, weight)
from altsign.errors import OutOfRangeError
from altsign.exactalg import Gf

# shape-(5,4,2,1) filling with no class
NO_CLASS = ((6, 5, 5, 4, 2), (4, 3, 3, 1), (2, 2), (1,))

# the class-2 example
CLASS2 = Cssp(2, ((7, 7, 6, 6, 3), (6, 5, 5, 1), (4, 2)))

# the eight class-3 objects with first row at most 2, with the table's
# (p, q, r) triples for d = 1, 2, 3
TABLE_K3_N2 = [
    ((), {1: (0, 0, 0), 2: (0, 0, 0), 3: (0, 0, 0)}),
    (((4,),), {1: (0, 0, 1), 2: (0, 0, 1), 3: (0, 0, 1)}),
    (((5, 1),), {1: (0, 1, 1), 2: (0, 1, 1), 3: (0, 1, 1)}),
    (((5, 2),), {1: (1, 0, 1), 2: (0, 0, 1), 3: (0, 0, 1)}),
    (((5, 3),), {1: (0, 0, 1), 2: (1, 0, 1), 3: (0, 0, 1)}),
    (((5, 4),), {1: (0, 0, 1), 2: (0, 0, 1), 3: (1, 0, 1)}),
    (((5, 5),), {1: (0, 0, 1), 2: (0, 0, 1), 3: (0, 0, 1)}),
    (((5, 5), (4,)), {1: (0, 0, 2), 2: (0, 0, 2), 3: (0, 0, 2)}),
]

GF24 = (Gf.monomial(r=2) + 4 * Gf.monomial(r=1) + Gf.monomial(p=1, r=1)
        + Gf.monomial(q=1, r=1) + Gf.one())


class TestValidate:
    def test_structurally_valid_but_classless(self):
        assert structure_violation(NO_CLASS) is None
        assert cssp_class(NO_CLASS) is None
        for k in range(0, 6):
            message = validate(Cssp(k, NO_CLASS))
            assert message is not None and message.startswith("class violation")

    def test_class2_example(self):
        assert validate(CLASS2) is None
        assert cssp_class(CLASS2.rows) == 2

    def test_empty_ok_for_every_class(self):
        for k in range(0, 5):
            assert validate(Cssp(k, ())) is None

    def test_structure_violations_detected(self):
        assert "column" in structure_violation(((3, 2), (2,)))
        assert "row increases" in structure_violation(((2, 3),))
        assert "strictly decreasing" in structure_violation(((2, 1), (3, 1)))


class TestEnumerate:
    def test_k3_n2_table(self):
        found = enumerate_cssps(3, 2)
        assert [c.rows for c in found] == [rows for rows, _ in TABLE_K3_N2]

    def test_n0(self):
        for k in range(0, 4):
            assert enumerate_cssps(k, 0) == [Cssp(k, ())]

    def test_k2_n1(self):
        assert [c.rows for c in enumerate_cssps(2, 1)] == [(), ((3,),)]

    def test_all_valid(self):
        for k in range(0, 4):
            for n in range(0, 4):
                for c in enumerate_cssps(k, n):
                    assert validate(c) is None


class TestStats:
    def test_class2_example_d1(self):
        assert stats(CLASS2, 1) == CsspStats(1, 1, 3, 1)

    def test_table_entries(self):
        for rows, byd in TABLE_K3_N2:
            c = Cssp(3, rows)
            for d, pqr in byd.items():
                assert stats(c, d)[:3] == pqr

    def test_d_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            stats(CLASS2, 3)

    def test_at_most_one_hit_per_row(self):
        # parts weakly decrease while j - i + d strictly increases
        for k in range(1, 4):
            for n in range(0, 4):
                for c in enumerate_cssps(k, n):
                    for d in range(1, k + 1):
                        for i, row in enumerate(c.rows, start=1):
                            hits = sum(1 for t, part in enumerate(row, start=1)
                                       if part == t - 1 + d)
                            assert hits <= 1


class TestWeight:
    def test_51_any_d(self):
        c = Cssp(3, ((5, 1),))
        for d in (1, 2, 3):
            assert weight(c, d) == Gf.monomial(q=1, r=1)

    def test_class0_21_d0(self):
        c = Cssp(0, ((2, 1),))
        assert validate(c) is None
        assert weight(c, 0) == Gf.p_plus_q_minus_1() * Gf.monomial(r=1)

    def test_empty_d0(self):
        assert weight(Cssp(0, ()), 0) == Gf.one()

    def test_d0_admissible_for_all_classes(self):
        # the 1 sits in position 4 of its row, so it counts toward Q
        assert weight(CLASS2, 0) == Gf.monomial(q=1, r=3)

    def test_errors(self):
        with pytest.raises(OutOfRangeError):
            weight(CLASS2, 5)
        with pytest.raises(OutOfRangeError):
            weight(CLASS2, -1)


class TestGf:
    def test_k3_n2_all_d(self):
        for d in (1, 2, 3):
            assert gf(3, 2, d) == GF24

    def test_n0(self):
        for k in range(0, 4):
            for d in range(0, k + 1):
                assert gf(k, 0, d) == Gf.one()

    def test_triple_multisets_agree_across_d(self):
        for k in range(1, 4):
            for n in range(0, 3):
                objs = enumerate_cssps(k, n)
                base = Counter(stats(c, 1)[:3] for c in objs)
                for d in range(2, k + 1):
                    assert Counter(stats(c, d)[:3] for c in objs) == base

    def test_evaluation_counts(self):
        for k in range(0, 4):
            for n in range(0, 4):
                count = len(enumerate_cssps(k, n))
                for d in range(0, k + 1):
                    assert gf(k, n, d).evaluate() == count


class TestTheoremMainSmall:
    def test_matches_trapezoids(self):
        for n in range(1, 4):
            for l in range(1, 5):
                expected = trapezoid.gf(n, l)
                for d in range(0, l):
                    assert gf(l - 1, n, d) == expected, (n, l, d)


class TestInterfaces:
    def test_json_roundtrip(self):
        for c in enumerate_cssps(3, 2):
            assert from_json(to_json(c)) == c

    def test_pretty(self):
        text = pretty(CLASS2)
        lines = text.splitlines()
        assert lines[0].strip() == "7 7 6 6 3"
        assert lines[1].startswith("  ")
        assert pretty(Cssp(1, ())) == "(empty)"
