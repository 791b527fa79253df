"""Sewed 2-component links: parsing, conversion, separability criterion."""

import pytest

import dlknot as dl
from dlknot.diagram import DiagramError, DoubleLine
from dlknot.links import (
    Clasp,
    link_family_rows,
    linking_number,
    make_L,
    parse_sewed,
    separability_check,
    serialize_sewed,
    to_dl_diagram,
)


class TestParse:
    def test_roundtrip(self):
        text = "U1+ C+ O1+ C-"
        assert serialize_sewed(parse_sewed(text)) == text

    def test_bad_token(self):
        with pytest.raises(DiagramError):
            parse_sewed("U1+ Cx O1+")

    def test_passage_skeleton_validated(self):
        with pytest.raises(DiagramError):
            parse_sewed("U1+ C+ U1+")


class TestMakeL:
    def test_small_cases(self):
        assert serialize_sewed(make_L(1, -1, 1)) == "U1+ C+ O1+ C-"
        assert serialize_sewed(make_L(0, 0, 1)) == "U1+ O1+"

    def test_conversion_matches_one_crossing(self):
        for m in range(-5, 6):
            for n in range(-5, 6):
                for eps in (1, -1):
                    assert dl.canonically_equal(
                        to_dl_diagram(make_L(m, n, eps)), dl.one_crossing(m, n, eps)
                    )

    def test_linking_number(self):
        assert linking_number(make_L(2, -2, 1)) == 0
        assert linking_number(make_L(3, 1, 1)) == 4
        assert linking_number(parse_sewed("C+ C+ C-")) == 1


class TestConversion:
    def test_clasps_become_double_lines(self):
        d = to_dl_diagram(parse_sewed("U1+ C+ C- O1+"))
        assert sum(1 for t in d.tokens if isinstance(t, DoubleLine)) == 2

    def test_essential_count_example(self):
        assert dl.essential_count(to_dl_diagram(make_L(2, -2, 1))) == 4


class TestSeparability:
    def test_trivial_clasps_separable(self):
        v = separability_check(parse_sewed("C+ C-"))
        assert v.separable and v.witness is not None

    def test_bare_crossing_separable(self):
        v = separability_check(make_L(0, 0, 1))
        assert v.separable

    def test_negative_parity_crossing_separable_with_certificate(self):
        v = separability_check(make_L(-1, 1, 1))
        assert v.separable
        result = dl.replay(v.witness.trace)
        assert not any(isinstance(t, DoubleLine) for t in result.tokens)

    def test_nonzero_linking_number_obstruction(self):
        v = separability_check(make_L(2, 1, 1))
        assert not v.separable
        assert v.obstruction.crossing is None and v.obstruction.parity == 3

    def test_parity_obstruction(self):
        v = separability_check(make_L(2, -2, 1))
        assert not v.separable
        assert v.obstruction.crossing == 1 and v.obstruction.parity == 2

    def test_obstruction_parity_equals_m(self):
        for m in range(1, 6):
            v = separability_check(make_L(m, -m, 1))
            assert not v.separable and v.obstruction.parity == m


class TestFamilyTable:
    def test_counts_distinct(self):
        rows = link_family_rows(5)
        counts = [r["essential_count"] for r in rows]
        assert counts == [2, 4, 6, 8, 10]

    def test_precondition(self):
        with pytest.raises(ValueError):
            link_family_rows(0)
