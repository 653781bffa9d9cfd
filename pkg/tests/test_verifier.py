"""Verifier behaviors: determinism, coverage accounting, certificate
soundness, expected verdicts on small universes, and the pinned
counterexamples behind the report-only properties.

The P7B pin shows why transfer to a coarser codomain scale fails when
only the DOMAIN scale is a filter: a set assigned solely to an
off-image point is vacuously satisfied on the finer side yet its
counterpart constrains a nonempty preimage on the coarser side.
"""

import json

import pytest

from scaletop.continuity import ContinuityMode, ScaledMap, check_continuity
from scaletop.finite_topology import discrete_space, sierpinski
from scaletop.scales import Scale, classify, finer, trivial_scale, validate_scale
from scaletop.verifier import (
    MUST_PASS,
    PROPERTY_IDS,
    SEARCH_IDS,
    SweepConfig,
    classical_continuous,
    classical_continuous_at,
    run_property,
    search_counterexample,
)
from scaletop import jsonio


SMALL = SweepConfig(max_points=2, scale_budget=8, sample_budget=400)


def fz(*sets):
    return frozenset(frozenset(s) for s in sets)


def mk_scale(space, tq, *fams) -> Scale:
    return Scale(space, fz(*tq), tuple(fz(*f) for f in fams))


def test_unknown_property_rejected():
    with pytest.raises(KeyError):
        run_property("NOPE", SMALL)
    with pytest.raises(KeyError):
        search_counterexample("NOPE", SMALL)


def test_all_ids_runnable_and_deterministic():
    for pid in PROPERTY_IDS:
        first = run_property(pid, SMALL)
        second = run_property(pid, SMALL)
        assert first.to_bytes() == second.to_bytes(), pid
        doc = first.to_json()
        assert doc["generated"] == doc["tested"] + doc["skipped"]


def test_must_pass_properties_confirm_on_small_universe():
    for pid in MUST_PASS:
        report = run_property(pid, SMALL)
        assert report.verdict == "CONFIRMED_ON_SWEEP", (pid, report.violations)


def test_p3_counterexample_found_at_three_points():
    # A single declared codomain set, assigned only to a point outside
    # the image, separates local from global continuity.
    report = run_property(
        "P3", SweepConfig(max_points=3, scale_budget=4, map_budget=9)
    )
    assert report.verdict == "COUNTEREXAMPLE_FOUND"
    violation = report.violations[0]
    f = jsonio.scaled_map_from_json(violation["map"])
    loc = check_continuity(f, ContinuityMode("strong", "local"))
    glob = check_continuity(f, ContinuityMode("strong", "global"))
    assert loc.holds != glob.holds  # replay: genuinely separating


def test_p7b_domain_filter_branch_pinned_counterexample():
    x_space = discrete_space(2)
    y_space = discrete_space(3)
    q = mk_scale(
        x_space,
        [(0,), (0, 1)],
        [(0,), (0, 1)],
        [(0, 1)],
    )
    r = mk_scale(y_space, [(2,)], [], [], [(2,)])
    v = mk_scale(y_space, [(1, 2)], [], [], [(1, 2)])
    assert validate_scale(q).ok and validate_scale(r).ok and validate_scale(v).ok
    assert classify(q).is_F  # the domain-side filter hypothesis
    assert finer(r, v)  # r refines v
    f = ScaledMap((0, 1), q, r)
    g = ScaledMap((0, 1), q, v)
    assert check_continuity(f, ContinuityMode("strong", "global")).holds
    assert not check_continuity(g, ContinuityMode("strong", "global")).holds


def test_searches_find_separations():
    cfg = SweepConfig(max_points=2, scale_budget=10)
    for claim in SEARCH_IDS:
        report = search_counterexample(claim, cfg)
        if claim == "P3":
            # needs a 3-point codomain; confirmed within this bound
            assert report.verdict == "CONFIRMED_ON_SWEEP"
            continue
        assert report.verdict == "COUNTEREXAMPLE_FOUND", claim
        assert len(report.violations) == 1  # the canonical-minimal one


def test_search_certificates_replay():
    cfg = SweepConfig(max_points=2, scale_budget=10)
    report = search_counterexample("PROBLEM4", cfg)
    doc = report.violations[0]
    f = jsonio.scaled_map_from_json(doc["map"])
    separated = False
    for x in f.domain.space.points:
        weak = check_continuity(
            f, ContinuityMode("weak", "at-point", at_point=x)
        ).holds
        strong = check_continuity(
            f, ContinuityMode("strong", "at-point", at_point=x)
        ).holds
        if weak and not strong:
            separated = True
    assert separated


def test_search_determinism():
    cfg = SweepConfig(max_points=2, scale_budget=10)
    a = search_counterexample("PROBLEM3", cfg)
    b = search_counterexample("PROBLEM3", cfg)
    assert a.to_bytes() == b.to_bytes()


def test_seed_changes_sampled_reports():
    a = run_property("T1", SweepConfig(max_points=2, sample_budget=200, seed=1))
    b = run_property("T1", SweepConfig(max_points=2, sample_budget=200, seed=2))
    assert a.verdict == b.verdict == "CONFIRMED_ON_SWEEP"
    # Different seeds explore different instances.
    assert (a.instances_tested, a.hypothesis_skipped) != (
        b.instances_tested,
        b.hypothesis_skipped,
    ) or a.to_bytes() != b.to_bytes()


def test_parallelism_does_not_change_output(monkeypatch):
    cfg = SweepConfig(max_points=2, scale_budget=6, sample_budget=120)
    monkeypatch.setenv("SCALETOP_THREADS", "1")
    seq = run_property("P4", cfg).to_bytes()
    monkeypatch.setenv("SCALETOP_THREADS", "2")
    par = run_property("P4", cfg).to_bytes()
    assert seq == par


def test_classical_oracle_matches_definitions():
    s = sierpinski()
    d = discrete_space(2)
    ident = (0, 1)
    assert classical_continuous(ident, d, d)
    assert not classical_continuous(ident, s, d)  # {1} pulls back non-open
    # Neighborhood continuity at a point can hold where openness fails.
    assert classical_continuous_at(ident, s, d, 0)
    assert not classical_continuous_at(ident, s, d, 1)


def test_report_json_shape():
    report = run_property("EX16", SMALL)
    doc = json.loads(report.to_bytes())
    for key in ("property", "config", "tested", "skipped", "verdict", "violations"):
        assert key in doc
    assert doc["property"] == "EX16"


def test_violation_cap_and_truncation_count():
    report = run_property(
        "P3",
        SweepConfig(max_points=3, scale_budget=4, map_budget=9, max_violations=2),
    )
    assert len(report.violations) <= 2
    assert report.truncated_violations >= 0
    assert report.verdict == "COUNTEREXAMPLE_FOUND"
