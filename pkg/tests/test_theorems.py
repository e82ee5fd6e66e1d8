"""Checkers, the fast profile evaluator, and the published bound tables."""

import dataclasses

import pytest

from hilbertdepth.combinatorics import binom, binom_diff
from hilbertdepth.corpus import compressed_complex_ideal, enumerate_ideals
from hilbertdepth.depth import hdepth_report
from hilbertdepth.ideals import alpha_of_quotient, parse_ideal
from hilbertdepth.theorems import (CHECK_ORDER, CHECKS, VERIFY_CHECKS,
                                   check_bound_equivalence, check_lemma79,
                                   check_main, check_principal_equivalence,
                                   check_q6_bounds, evaluate_profile,
                                   reproduce_bound_tables, run_checks,
                                   witness_from_ideal)


def test_registry_names():
    assert set(CHECKS) == set(CHECK_ORDER)
    assert "beta47-bound" not in VERIFY_CHECKS


def test_principal_equivalence_cases():
    r = hdepth_report(parse_ideal("x1*x2*x3", 3))
    out = check_principal_equivalence(r)
    assert out.applicable and out.passed

    r = hdepth_report(parse_ideal("x1, x2, x3", 3))
    out = check_principal_equivalence(r)
    assert out.applicable and out.passed  # all three sides false

    r = hdepth_report(parse_ideal("x1", 1))
    out = check_principal_equivalence(r)
    assert out.applicable and out.passed  # all three sides true at n = 1


def test_main_small_cases():
    r = hdepth_report(parse_ideal("x1*x2", 2))
    out = check_main(r)
    assert out.applicable and out.passed  # 2 >= 1

    for n in range(1, 5):
        for ideal in enumerate_ideals(n):
            out = check_main(hdepth_report(ideal))
            assert out.applicable and out.passed


def test_bound_equivalence_gating_and_agreement():
    # principal or not-inside-m^2 instances are gated out
    r = hdepth_report(parse_ideal("x1*x2*x3", 3))
    assert not check_bound_equivalence(r).applicable
    r = hdepth_report(parse_ideal("x1, x2*x3", 3))
    assert not check_bound_equivalence(r).applicable

    applicable = 0
    for n in range(2, 6):
        for ideal in enumerate_ideals(n):
            out = check_bound_equivalence(hdepth_report(ideal))
            if out.applicable:
                applicable += 1
                assert out.passed
    assert applicable > 0


def test_q6_bounds_gating():
    # at n <= 6 the quotient depth never reaches 6, so the check never applies
    for ideal in enumerate_ideals(3):
        assert not check_q6_bounds(hdepth_report(ideal)).applicable


def test_lemma79_gating_and_constructed_instance():
    # a quotient realizing the minimal level-7 profile: built from colex-first
    # families, it has beta^7 = (1, 2, 0, ..., 0) and depth exactly 7
    alpha = (1, 9, 33, 65, 75, 51, 19, 3, 0, 0)
    ideal = compressed_complex_ideal(9, alpha)
    assert tuple(alpha_of_quotient(ideal)) == alpha
    r = hdepth_report(ideal)
    assert r.hdepth_quotient == 7
    assert r.beta_triangle_quotient[7].values == (1, 2, 0, 0, 0, 0, 0, 0)
    out = check_lemma79(r)
    assert out.applicable and out.passed

    # principal at n = 9 has q = 8: not applicable
    principal = parse_ideal("*".join(f"x{i}" for i in range(1, 10)), 9)
    assert not check_lemma79(hdepth_report(principal)).applicable


def test_witness_structure_on_forced_failure():
    r = hdepth_report(parse_ideal("x1*x2, x2*x3", 3))
    broken = dataclasses.replace(r, hdepth_ideal=0)
    out = check_main(broken)
    assert out.applicable and not out.passed
    w = out.witness
    assert w is not None
    assert w["check"] == "main" and w["n"] == 3
    assert w["ideal"] == "x1*x2, x2*x3"
    assert "hdepth(I) = 0" in w["violated"]
    assert w["alpha_quotient"] == [1, 3, 1, 0]


def test_witness_from_ideal_none_when_passing():
    assert witness_from_ideal(parse_ideal("x1*x2", 2), "main") is None


def test_evaluate_profile_matches_rich_checkers_exhaustive():
    for n in range(1, 5):
        for ideal in enumerate_ideals(n):
            r = hdepth_report(ideal)
            profile = evaluate_profile(n, tuple(r.alpha_quotient))
            assert profile.q == r.hdepth_quotient
            assert profile.h_ideal == r.hdepth_ideal
            assert profile.principal == r.principal
            assert profile.in_m2 == r.in_m2
            for name, flags in zip(CHECK_ORDER, profile.flags):
                outcome = CHECKS[name](r)
                assert flags == (outcome.applicable, outcome.passed), (name, ideal)


def test_run_checks_default_set():
    outcomes = run_checks(hdepth_report(parse_ideal("x1*x2", 3)))
    assert [o.name for o in outcomes] == list(VERIFY_CHECKS)


# --- published tables ------------------------------------------------------------

def test_bound_tables_reproduce_exactly():
    assert reproduce_bound_tables() == []


def test_bound_table_spot_cells():
    # q=6,k=4 family at multiplier 3
    assert binom_diff(3, 4, 7) == -70
    assert binom_diff(3, 4, 15) == 0
    assert binom_diff(3, 3, 7) == -28  # its k=3 companion row
    assert binom_diff(3, 2, 7) == 0    # its k=2 companion row
    # q=6,k=5 family at multiplier 2
    assert binom_diff(2, 5, 11) == -198
    # q=7,k=7 family at multiplier 1
    assert binom_diff(1, 7, 9) == -48


def test_alpha2_window_rows():
    # the a_2 -> (min a_3, max a_3, cap) companion table recomputes from the
    # beta constraint and the upper shadow bound
    from hilbertdepth.theorems import _alpha2_window_computed

    got = _alpha2_window_computed()
    assert got["min_alpha3"] == (65, 70, 75, 80)
    assert got["max_alpha3"] == (66, 71, 77, 84)
    assert got["max_6a3_minus_10a2"] == (66, 86, 112, 144)


def test_beta47_check_is_search_only():
    # it exists in the registry but not in the verification set, and it is
    # inapplicable wherever q != 7
    r = hdepth_report(parse_ideal("x1*x2", 2))
    out = CHECKS["beta47-bound"](r)
    assert not out.applicable


def test_q7_bound_cap_consistency():
    # at n = 9 the b_3^7 cap C(n-5,3) coincides with the k+1 cap
    assert binom(4, 3) == 4 == 3 + 1


def test_beta47_witness_exists_and_roundtrips():
    # the level-7 bound genuinely fails beyond the covered regimes: this
    # complex on 10 vertices (first a_j faces of each level in colex order)
    # has depth exactly 7 and b_4^7 = 19 > C(6,4) = 15
    alpha = (1, 10, 45, 112, 182, 195, 120, 31, 0, 0, 0)
    ideal = compressed_complex_ideal(10, alpha)
    witness = witness_from_ideal(ideal, "beta47-bound")
    assert witness is not None
    assert witness["violated"] == "b_4^7 = 19 > C(10-4,4) = 15"
    assert witness["hdepth_quotient"] == 7
    # the witness re-parses and re-verifies to the same outcome
    reparsed = parse_ideal(witness["ideal"], witness["n"])
    again = CHECKS["beta47-bound"](hdepth_report(reparsed))
    assert again.applicable and not again.passed
    assert again.witness["violated"] == witness["violated"]
    assert again.witness["alpha_quotient"] == witness["alpha_quotient"]
    # consistently, the depth comparison fails here and bound-equivalence
    # predicts exactly that
    assert witness["hdepth_ideal"] == 6 < 7
    assert CHECKS["bound-equivalence"](hdepth_report(reparsed)).passed
