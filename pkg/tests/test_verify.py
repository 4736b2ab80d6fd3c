"""Goodness checks, bound certificates, exhaustive lemma sweeps, sampled
sweeps, and the witness search."""

from __future__ import annotations

import pytest

from treewheel.canon import is_isomorphic
from treewheel.catalog import CatalogError, claims_by_id, elaborate, n2_recipe, witness_for
from treewheel.families import Clique, Cycle, JoinedStars, Spider, Star, build
from treewheel.graph import disjoint_union, graph6_decode
from treewheel.verify import (
    DEFAULT_SEARCH_BUDGET,
    BoundCertificate,
    VerifyError,
    chvatal_harary,
    is_good,
    run_certificates,
    search_good,
    task_sort_key,
    verify_bondy,
    verify_claim,
    verify_cr1,
    verify_lemma1,
    verify_lemma2_sampled,
    verify_lemma3,
    verify_theorem,
    _cr1_structure,
)


# -- goodness ---------------------------------------------------------------------


def test_two_complete_blocks_are_good_for_the_spider():
    host = disjoint_union(build(Clique(8)), build(Clique(8)))
    report = is_good(host, Spider(9, 2, 1), 8)
    assert report.order == 16
    assert report.is_good
    assert report.tree_embedding is None
    assert report.wheel_embedding is None
    assert report.tree == "S(9;2,1)"


def test_a_large_clique_is_not_good():
    report = is_good(build(Clique(17)), Spider(9, 2, 1), 8)
    assert not report.is_good
    assert report.tree_embedding is not None


def test_wheel_in_complement_spoils_goodness():
    # An edgeless host has a complete complement, which carries the wheel.
    from treewheel.families import Empty

    report = is_good(build(Empty(10)), Spider(11, 1, 1), 8)
    assert not report.is_good
    assert report.wheel_embedding is not None


def test_goodness_rejects_degenerate_wheels():
    with pytest.raises(VerifyError):
        is_good(build(Clique(4)), Spider(5, 1, 1), 2)


def test_chvatal_harary_values_and_errors():
    assert chvatal_harary(7, 3) == 13
    assert chvatal_harary(7, 4) == 19
    assert chvatal_harary(1, 5) == 1
    with pytest.raises(VerifyError):
        chvatal_harary(0, 3)
    with pytest.raises(VerifyError):
        chvatal_harary(3, 1)


# -- theorem certificates ------------------------------------------------------------


def test_certificate_fields_for_a_passing_instance():
    cert = verify_theorem("th6", 9)
    assert cert.theorem_id == "th6"
    assert cert.n == 9 and cert.m == 8 and cert.t is None and cert.variant is None
    assert cert.claim_ids == ("rt8-s21-odd", "rt8-s3-odd")
    assert cert.witness_recipe == "2*K(8)"
    assert cert.order == 16
    assert cert.claimed == 17
    assert cert.order_matches
    assert [v.tree for v in cert.tree_verdicts] == ["S(9;2,1)", "S(9;3)"]
    assert all(v.absent for v in cert.tree_verdicts)
    assert cert.wheel_embedding is None
    assert cert.is_good
    assert cert.implied_bound == 17
    assert cert.passed
    duplicate = verify_theorem("th6", 9)
    assert duplicate == cert  # fully deterministic


def test_th4_construction_passes_below_its_header_bound():
    assert verify_theorem("th4", 7).passed


def test_every_fixed_wheel_certificate_passes_at_small_orders():
    for theorem_id, ns in (
        ("th1", (5, 7)),
        ("th2", (6, 8, 10)),
        ("th3", (8, 10)),
        ("th5", (9, 13)),
        ("th6", (9, 11)),
    ):
        for n in ns:
            cert = verify_theorem(theorem_id, n)
            assert cert.passed, (theorem_id, n)


def test_variant_selects_the_residue_2_reading():
    literal = verify_theorem("n2variant", 10, variant="literal")
    corrected = verify_theorem("n2variant", 10, variant="corrected")
    default = verify_theorem("n2variant", 10)
    assert corrected == default
    assert corrected.passed
    assert corrected.order == 19 and corrected.claimed == 20
    assert corrected.implied_bound == 20
    assert literal.order == 23  # 2n + m - 5 overshoots the claim
    assert not literal.order_matches
    assert not literal.passed
    assert not literal.is_good  # the oversized block hosts the trees
    assert literal.implied_bound is None
    assert any(not v.absent for v in literal.tree_verdicts)


def test_variant_is_rejected_for_single_form_witnesses():
    with pytest.raises(VerifyError) as exc:
        verify_theorem("th1", 7, variant="literal")
    assert "single witness form" in str(exc.value)


def test_certificates_respect_the_generic_chromatic_floor():
    # Every fixed-wheel claim value must sit at or above the generic
    # (chi - 1)(n - 1) + 1 floor with chi = 3 for an even-rimmed wheel.
    from treewheel.catalog import claimed_bound, condition_holds

    for theorem_id in ("th1", "th2", "th3", "th4", "th5", "th6"):
        for n in range(5, 26):
            if not condition_holds(theorem_id, n):
                continue
            assert claimed_bound(theorem_id, n) >= chvatal_harary(n, 3)


# -- claim certificates -----------------------------------------------------------------


def test_claim_lookup_accepts_ids_and_objects():
    by_id = claims_by_id()
    a = verify_claim("rt8-s11-odd", 7)
    b = verify_claim(by_id["rt8-s11-odd"], 7)
    assert a == b
    assert a.claim_ids == ("rt8-s11-odd",)
    assert a.passed


def test_claim_with_pinned_t_resolves_it():
    cert = verify_claim("gen-rsn2t-t1", 11, m=8)
    assert cert.t == 1
    assert cert.passed
    cert = verify_claim("gen-rsn2t-tmax", 12, m=8)
    assert cert.t == 2
    assert cert.passed


def test_claim_with_symbolic_t_needs_an_explicit_value():
    with pytest.raises(CatalogError) as exc:
        verify_claim("gen-rsn2t", 11, m=8)
    assert "explicit t" in str(exc.value)
    assert verify_claim("gen-rsn2t", 11, m=8, t=1).passed


def test_claim_pin_conflicts_are_rejected():
    with pytest.raises(CatalogError) as exc:
        verify_claim("gen-rsn2t-t1", 11, m=8, t=2)
    assert "pins t = 1" in str(exc.value)
    assert verify_claim("gen-rsn2t-t1", 11, m=8, t=1).passed


def test_recorded_only_claims_cannot_be_checked():
    with pytest.raises(CatalogError) as exc:
        verify_claim("star-w8-even", 6)
    assert "recorded-only" in str(exc.value)
    assert "cited-star-even" in str(exc.value)


def test_unknown_claim_ids_are_rejected():
    with pytest.raises(CatalogError) as exc:
        verify_claim("rt8-unknown", 6)
    assert "unknown claim id" in str(exc.value)


# -- the parallel driver ---------------------------------------------------------------


TASKS = [
    ("th6", 11, 8, None, None),
    ("th1", 5, 8, None, None),
    ("rsn2t", 7, 8, 1, None),
    ("n2variant", 10, 8, None, "corrected"),
    ("th1", 7, 8, None, None),
]


def test_run_certificates_sorts_tasks_deterministically():
    certs = run_certificates(TASKS)
    keys = [(c.theorem_id, c.m, -1 if c.t is None else c.t, c.n, c.variant or "")
            for c in certs]
    assert keys == sorted(keys)
    assert keys == sorted(task_sort_key(t) for t in TASKS)
    assert all(c.passed for c in certs)


def test_job_count_does_not_change_the_results():
    assert run_certificates(TASKS, jobs=1) == run_certificates(TASKS, jobs=3)


def test_job_count_must_be_positive():
    with pytest.raises(VerifyError):
        run_certificates(TASKS, jobs=0)


# -- exhaustive lemma sweeps --------------------------------------------------------------


def test_lemma1_holds_on_small_orders():
    for n, classes in ((6, 19), (7, 29)):
        report = verify_lemma1(n)
        assert report.check == "lemma1"
        assert report.in_hypothesis
        assert report.classes == classes
        assert report.holds


def test_lemma1_probe_below_the_hypothesis_finds_the_5_cycle():
    report = verify_lemma1(5)
    assert not report.in_hypothesis
    assert report.classes == 11
    assert len(report.counterexamples) == 1
    ce = report.counterexamples[0]
    assert is_isomorphic(graph6_decode(ce.witness_g6), build(Cycle(5)))
    assert ce.detail == "min degree >= 2 but no S(5;3)"


def test_lemma1_range_is_bounded():
    with pytest.raises(VerifyError):
        verify_lemma1(4)
    with pytest.raises(VerifyError):
        verify_lemma1(13)


def test_lemma3_holds_at_the_smallest_hypothesis_order():
    report = verify_lemma3(9)
    assert report.in_hypothesis
    assert report.classes == 1165
    assert report.holds


def test_lemma3_probe_below_the_hypothesis():
    report = verify_lemma3(8)
    assert not report.in_hypothesis
    assert report.classes == 418
    assert report.holds  # no counterexamples even out of hypothesis here


def test_lemma3_range_is_bounded():
    with pytest.raises(VerifyError):
        verify_lemma3(4)
    with pytest.raises(VerifyError):
        verify_lemma3(13)


def test_pancyclicity_sweep_frozen_values():
    expected = {3: (1, 0), 4: (3, 1), 5: (3, 0), 6: (19, 1), 7: (29, 0)}
    for n, (classes, allowed) in expected.items():
        report = verify_bondy(n)
        assert report.classes == classes, n
        assert report.allowed_exceptions == allowed, n
        assert report.holds


def test_pancyclicity_sweep_range_is_bounded():
    with pytest.raises(VerifyError):
        verify_bondy(2)
    with pytest.raises(VerifyError):
        verify_bondy(10)


# -- sampled sweeps ----------------------------------------------------------------------


def test_sampled_order_2n_sweep_is_deterministic_and_holds():
    a = verify_lemma2_sampled(8, seed=0, count=30)
    b = verify_lemma2_sampled(8, seed=0, count=30)
    assert a == b
    assert a.check == "lemma2"
    assert a.samples == 30
    assert a.hypothesis_hits == 16
    assert dict(a.strategy_hits)["witness-mutation"] == 10
    assert a.holds
    probes = {p.label: p for p in a.injected}
    assert probes["two-blocks-base"].hypothesis_hit
    assert probes["two-blocks-base"].order == 16
    assert not probes["th2-witness"].hypothesis_hit  # targets the hypothesis tree
    assert probes["th2-witness"].order == 15


def test_sampled_sweep_seed_changes_the_stream():
    a = verify_lemma2_sampled(8, seed=0, count=30)
    c = verify_lemma2_sampled(8, seed=1, count=30)
    assert a != c


def test_sampled_sweep_skips_the_even_only_probe_at_odd_n():
    report = verify_lemma2_sampled(9, seed=0, count=9)
    assert [p.label for p in report.injected] == ["two-blocks-base"]
    assert report.holds


def test_sampled_sweep_parameter_errors():
    with pytest.raises(VerifyError):
        verify_lemma2_sampled(7)
    with pytest.raises(VerifyError):
        verify_lemma2_sampled(8, count=0)


def test_structure_sweep_holds_with_its_probes():
    report = verify_cr1(7, seed=0, count=30)
    assert report.check == "cr1"
    assert report.holds
    assert report.hypothesis_hits == 3
    probes = {p.label: p for p in report.injected}
    assert probes["th1-witness"].hypothesis_hit
    assert not probes["two-blocks-base"].hypothesis_hit  # contains the spider
    assert verify_cr1(7, seed=0, count=30) == report


def test_structure_sweep_needs_odd_n_at_least_7():
    with pytest.raises(VerifyError):
        verify_cr1(8)
    with pytest.raises(VerifyError):
        verify_cr1(5)


def test_structure_shape_check_accepts_the_witness_shape():
    # th1 witness at 7 = (4-regular block of order 8) + K_6
    host = elaborate(witness_for("th1", 7))
    assert _cr1_structure(host, 7) is None


def test_structure_shape_check_reports_violations():
    from treewheel.graph import Graph

    k44 = elaborate(witness_for("th1", 7))  # K(4,4) + K(6) layout
    # Remove one bipartite edge: the regular part is no longer 4-regular.
    edges = [e for e in k44.edges() if e != (0, 4)]
    damaged = Graph.from_edges(14, edges)
    reason = _cr1_structure(damaged, 7)
    assert reason is not None
    assert "regular" in reason


# -- witness search ------------------------------------------------------------------------


def test_search_finds_the_trivial_one_vertex_witness():
    outcome = search_good(Star(3), 3, 1)
    assert outcome.status == "found"
    assert outcome.witness_g6 == "@"
    assert outcome.nodes_expanded == 1


def test_search_found_witnesses_are_re_verified_good():
    outcome = search_good(Spider(5, 1, 1), 8, 8)
    assert outcome.status == "found"
    witness = graph6_decode(outcome.witness_g6)
    assert is_good(witness, Spider(5, 1, 1), 8).is_good


def test_search_budget_cuts_off_at_the_stated_node_count():
    outcome = search_good(Spider(5, 1, 1), 8, 11, budget_nodes=50)
    assert outcome.status == "budget-exceeded"
    assert outcome.witness_g6 is None
    assert outcome.nodes_expanded == 51


def test_search_parameter_errors():
    with pytest.raises(VerifyError):
        search_good(Spider(5, 1, 1), 2, 8)
    with pytest.raises(VerifyError):
        search_good(Spider(5, 1, 1), 8, 0)
    with pytest.raises(VerifyError):
        search_good(Spider(5, 1, 1), 8, 8, budget_nodes=0)


def test_search_default_budget_is_large():
    assert DEFAULT_SEARCH_BUDGET == 10**8
