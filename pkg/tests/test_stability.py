"""Hilbert-Mumford values, state classification, Schubert-cell sweeps."""

import random
from fractions import Fraction

import pytest

from torusgit.rootsys import (
    alpha_coords_int,
    build_root_datum,
    fundamental_coweight,
    pairing,
    weight_from_alpha,
    weight_support,
    zero_weight,
)
from torusgit.stability import (
    SEMISTABLE_NOT_STABLE,
    STABLE,
    UNSTABLE,
    classify_cells,
    classify_state,
    min_unstable_codim,
    mu,
    schubert_cell_state,
    verify_flag,
    verify_verdict,
)
from torusgit.weyl import (
    act_on_coweight,
    act_on_weight,
    enumerate_weyl,
    identity_element,
    longest_element,
)

A2 = build_root_datum("A", 2)
A3 = build_root_datum("A", 3)
CHI = (3, 3, 1)
LAM1 = fundamental_coweight(A3, 1)


class TestMu:
    def test_highest_weight_point(self):
        assert mu(A3, frozenset({CHI}), LAM1) == -4

    def test_zero_coweight(self):
        state = frozenset({CHI, zero_weight(A3)})
        assert mu(A3, state, (0, 0, 0)) == 0

    def test_lowest_weight_point(self):
        w0chi = act_on_weight(longest_element(A3), CHI)
        assert mu(A3, frozenset({w0chi}), LAM1) == 3

    def test_positive_homogeneity(self):
        rng = random.Random(2)
        state = frozenset({CHI, zero_weight(A3), (1, 0, 1)})
        for _ in range(20):
            lam = tuple(rng.randint(-4, 4) for _ in range(3))
            scaled = tuple(3 * c for c in lam)
            assert mu(A3, state, scaled) == 3 * mu(A3, state, lam)

    def test_empty_state_rejected(self):
        with pytest.raises(ValueError):
            mu(A3, frozenset(), LAM1)

    def test_weyl_equivariance(self):
        rng = random.Random(8)
        elements = enumerate_weyl(A3)
        state = frozenset({CHI, (1, 0, 1), zero_weight(A3), (0, 1, 0)})
        for _ in range(30):
            w = rng.choice(elements)
            lam = tuple(rng.randint(-3, 3) for _ in range(3))
            moved = frozenset(act_on_weight(w, psi) for psi in state)
            assert mu(A3, moved, act_on_coweight(A3, w, lam)) == mu(A3, state, lam)


class TestClassifyState:
    def test_single_regular_weight_unstable(self):
        verdict = classify_state(A3, frozenset({CHI}))
        assert verdict.kind == UNSTABLE
        assert mu(A3, frozenset({CHI}), verdict.destabilizing) < 0

    def test_full_support_stable(self):
        state = frozenset(weight_support(A3, CHI))
        verdict = classify_state(A3, state)
        assert verdict.kind == STABLE
        assert verify_verdict(A3, state, verdict)

    def test_root_segment_strictly_semistable(self):
        a1 = weight_from_alpha(A3, (1, 0, 0))
        state = frozenset({a1, tuple(-c for c in a1)})
        verdict = classify_state(A3, state)
        assert verdict.kind == SEMISTABLE_NOT_STABLE
        assert verify_verdict(A3, state, verdict)
        assert mu(A3, state, verdict.supporting) == 0

    def test_certificates_reverify_random(self):
        rng = random.Random(31)
        support = sorted(weight_support(A3, (2, 0, 2)))
        for _ in range(25):
            state = frozenset(rng.sample(support, rng.randint(1, 9)))
            verdict = classify_state(A3, state)
            assert verify_verdict(A3, state, verdict), state


class TestSchubertCellState:
    def test_longest_element_gives_full_support(self):
        w0 = longest_element(A3)
        assert schubert_cell_state(A3, CHI, w0) == weight_support(A3, CHI)

    def test_identity_gives_highest_weight(self):
        assert schubert_cell_state(A3, CHI, identity_element(A3)) == frozenset({CHI})

    def test_mu_attained_at_extremal_weight(self):
        for w in enumerate_weyl(A3):
            state = schubert_cell_state(A3, CHI, w)
            for i in range(1, 4):
                lam = fundamental_coweight(A3, i)
                assert mu(A3, state, lam) == -pairing(A3, act_on_weight(w, CHI), lam)

    def test_requires_admissible_base(self):
        with pytest.raises(ValueError):
            schubert_cell_state(A3, (1, 0, 0), identity_element(A3))


class TestClassifyCells:
    def test_report_shape(self):
        reports = classify_cells(A3, CHI)
        assert len(reports) == 24
        l0 = longest_element(A3).length
        for r in reports:
            assert r.codim + r.length == l0
        keys = [(r.length, r.w.word) for r in reports]
        assert keys == sorted(keys)

    def test_identity_cell(self):
        r = classify_cells(A3, CHI)[0]
        assert r.w == identity_element(A3)
        assert r.codim == 6
        assert r.generic_verdict.kind == UNSTABLE

    def test_longest_cell(self):
        r = classify_cells(A3, CHI)[-1]
        assert r.codim == 0
        assert r.w_chi_leq_zero
        assert alpha_coords_int(A3, r.w_chi) == (-3, -5, -4)
        assert r.generic_verdict.kind == STABLE

    def test_length_five_cells_antidominant(self):
        for r in classify_cells(A3, CHI):
            if r.length == 5:
                assert r.w_chi_leq_zero

    def test_verdict_multiset_golden(self):
        counts = {}
        for r in classify_cells(A3, CHI):
            counts[r.generic_verdict.kind] = counts.get(r.generic_verdict.kind, 0) + 1
        assert counts == {UNSTABLE: 18, STABLE: 6}

    def test_min_unstable_codim_golden(self):
        assert min_unstable_codim(classify_cells(A3, CHI)) == 2

    def test_all_cell_verdicts_reverify(self):
        for r in classify_cells(A3, CHI):
            state = schubert_cell_state(A3, CHI, r.w)
            assert verify_verdict(A3, state, r.generic_verdict), r.w

    def test_unstable_iff_dominant_orbit_destabilizer(self):
        # LP verdict against brute force over the Weyl orbit of the
        # fundamental coweights, exhaustively for A2 and A3 cells.
        for datum, chi in ((A2, weight_from_alpha(A2, (3, 2))), (A3, CHI)):
            lams = [fundamental_coweight(datum, i)
                    for i in range(1, datum.rank + 1)]
            candidates = [act_on_coweight(datum, w, lam)
                          for w in enumerate_weyl(datum) for lam in lams]
            for r in classify_cells(datum, chi):
                state = schubert_cell_state(datum, chi, r.w)
                brute = any(mu(datum, state, lam) < 0 for lam in candidates)
                assert brute == (r.generic_verdict.kind == UNSTABLE)


class TestVerifyFlag:
    def test_golden_chi_all_pass(self):
        report = verify_flag(A3, CHI)
        assert report.hypotheses_met
        assert report.passed
        assert [c.status for c in report.checks] == ["machine_checked_pass"] * 3

    def test_two_rho_fails_only_mixed_check(self):
        report = verify_flag(A3, (2, 2, 2))
        assert not report.hypotheses_met
        by_name = {c.name: c for c in report.checks}
        assert by_name["non_antidominant_cells_have_codim_ge_2"].passed
        mixed = by_name["no_strictly_semistable_cell"]
        assert not mixed.passed
        assert mixed.witness is not None
        kinds = {r.generic_verdict.kind for r in report.cell_reports}
        assert SEMISTABLE_NOT_STABLE in kinds

    def test_two_rho_witness_reverifies(self):
        report = verify_flag(A3, (2, 2, 2))
        word = next(c.witness["weyl_word"] for c in report.checks if not c.passed)
        match = [r for r in report.cell_reports if list(r.w.word) == word]
        assert match and match[0].generic_verdict.kind == SEMISTABLE_NOT_STABLE
        state = schubert_cell_state(A3, (2, 2, 2), match[0].w)
        assert verify_verdict(A3, state, match[0].generic_verdict)
