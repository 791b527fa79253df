"""Parity normalization, double-line removal, and minimal important subsets."""

import pytest

import dlknot as dl
from dlknot.diagram import DoubleLine
from dlknot.moves import CROSSING_CHANGE, CROSSING_SLIDING, DL_PAIR_CANCEL, mk
from dlknot.projection import ProjectionError

from conftest import random_degree_zero


def _force_parities(d, rng):
    """A degree-0 diagram with every parity in {0, -1}: normalize to all
    zeros, then flip a random subset of crossings."""
    out = dl.parity_projection(d)
    for cid in sorted(out.crossing_ids):
        if rng.random() < 0.5:
            out = dl.apply(out, mk(CROSSING_CHANGE, crossing_id=cid, chirality=1))
    return out


class TestParityProjection:
    def test_fixed_on_all_zero(self):
        d = dl.parse("U1+ D+ D- O1+")
        assert dl.serialize(dl.parity_projection(d)) == dl.serialize(d)

    def test_trivial(self):
        assert dl.parity_projection(dl.parse("")) == dl.parse("")

    def test_negative_parity_gets_crossing_changed(self):
        out = dl.parity_projection(dl.parse("U1+ D- O1+ D+"))
        assert all(p.value == 0 for p in dl.parity_profile(out))
        # the crossing change flipped the crossing sign
        assert next(iter(out.tokens[0:1]))  # non-empty
        assert dl.degree(out) == 0

    def test_rejects_nonzero_degree(self):
        with pytest.raises(ProjectionError):
            dl.parity_projection(dl.parse("D+"))

    def test_normalizes_and_idempotent(self, rng):
        for _ in range(100):
            d = random_degree_zero(rng)
            p = dl.parity_projection(d)
            assert dl.degree(p) == 0
            assert all(w.value == 0 for w in dl.parity_profile(p))
            assert dl.canonically_equal(dl.parity_projection(p), p)


class TestStrip:
    def test_pair(self):
        assert dl.strip_double_lines(dl.parse("D+ D-")) == dl.parse("")

    def test_one_crossing(self):
        assert dl.strip_double_lines(dl.one_crossing(2, 1, 1)) == dl.parse("U1+ O1+")

    def test_strip_after_projection_restores_bare_diagram(self, rng):
        for _ in range(30):
            d = random_degree_zero(rng, max_double_lines=0)
            assert dl.canonically_equal(
                dl.strip_double_lines(dl.parity_projection(d)), d
            )


class TestElimination:
    def test_already_clean(self):
        d = dl.parse("U1+ O1+ U2- O2-")
        cert = dl.eliminate_double_lines(d)
        assert cert.result == d and cert.trace.steps == ()

    def test_single_crossing_negative_parity(self):
        cert = dl.eliminate_double_lines(dl.parse("U1+ D- O1+ D+"))
        assert not any(isinstance(t, DoubleLine) for t in cert.result.tokens)
        assert len(cert.result.crossing_ids) == 1
        assert dl.canonically_equal(dl.replay(cert.trace), cert.result)

    def test_restricted_move_vocabulary(self):
        cert = dl.eliminate_double_lines(dl.parse("U1+ D- O1+ D+ U2+ O2+"))
        allowed = {CROSSING_CHANGE, CROSSING_SLIDING, DL_PAIR_CANCEL}
        assert {s.kind for s in cert.trace.steps} <= allowed

    def test_rejects_bad_parity(self):
        with pytest.raises(ProjectionError):
            dl.eliminate_double_lines(dl.one_crossing(2, -2, 1))

    def test_rejects_nonzero_degree(self):
        with pytest.raises(ProjectionError):
            dl.eliminate_double_lines(dl.parse("U1+ D+ O1+"))

    def test_random_projected_diagrams(self, rng):
        for _ in range(100):
            d = _force_parities(random_degree_zero(rng, 5, 8), rng)
            cert = dl.eliminate_double_lines(d)
            assert not any(isinstance(t, DoubleLine) for t in cert.result.tokens)
            assert dl.canonically_equal(dl.replay(cert.trace), cert.result)


class TestImportantSubsets:
    def test_full_set_always_important_when_clean(self, rng):
        # For degree-0 diagrams whose stripped parities land in {0, -1},
        # the full double-line set is important.
        d = dl.parse("U1+ D+ O1+ D- U2+ O2+")
        reports = dl.important_subsets(d)
        positions = [i for i, t in enumerate(d.tokens) if isinstance(t, DoubleLine)]
        assert any(sorted(r.subset) == positions for r in reports)

    def test_all_zero_has_empty_essential(self):
        d = dl.parse("U1+ D+ D- O1+")
        reports = dl.important_subsets(d)
        assert reports[0].subset == () and reports[0].is_essential
        assert dl.essential_count(d) == 0

    def test_minimal_cardinality_case(self):
        reports = dl.important_subsets(dl.one_crossing(-3, 3, 1))
        minimal = [r for r in reports if r.is_essential]
        assert minimal and all(r.cardinality == 4 for r in minimal)

    def test_reports_reverify(self, rng):
        for _ in range(20):
            d = random_degree_zero(rng, 4, 6)
            for r in dl.important_subsets(d, limit=10):
                kept = tuple(
                    t for i, t in enumerate(d.tokens) if i not in r.subset
                )
                residual = dl.DlDiagram(kept)
                assert dl.degree(residual) == 0
                assert all(
                    p.value in (0, -1) for p in dl.parity_profile(residual)
                )

    def test_limit_caps_output(self):
        d = dl.one_crossing(-2, 2, 1)
        assert len(dl.important_subsets(d, limit=3)) <= 3


class TestEssentialCount:
    def test_known_values(self):
        assert dl.essential_count(dl.one_crossing(2, 3, 1)) == 5
        assert dl.essential_count(dl.one_crossing(-3, -1, 1)) == 4
        assert dl.essential_count(dl.parse("")) == 0

    def test_matches_bruteforce_reports(self, rng):
        for _ in range(20):
            d = random_degree_zero(rng, 3, 6)
            reports = dl.important_subsets(d)
            assert dl.essential_count(d) == min(r.cardinality for r in reports)


class TestEssentialDiagram:
    def test_all_zero_virtual_fixed(self):
        d = dl.parse("U1+ O1+ O2+ U2+")
        out, trace = dl.essential_diagram(d)
        assert dl.canonically_equal(out, d) and trace.steps == ()

    def test_one_crossing_nonnegative_already_essential(self):
        for m, n in [(0, 0), (1, 2), (3, -1)]:
            d = dl.one_crossing(m, n, 1)
            out, _ = dl.essential_diagram(d)
            assert dl.canonically_equal(out, d)

    def test_negative_parity_pair(self):
        d = dl.parse("U1+ D- O1+ D+")
        out, _ = dl.essential_diagram(d)
        assert dl.essential_count(d) == 0
        # all lines of the output are the canonical pair at the flipped crossing
        assert sum(1 for t in out.tokens if isinstance(t, DoubleLine)) in (0, 2)
