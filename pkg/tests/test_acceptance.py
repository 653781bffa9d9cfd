"""Acceptance suite.

Thirteen numbered criteria pin the library's exit bar: exact fixture
values, exhaustive zero-violation sweeps, sampled composition sweeps,
enumeration counts, and report determinism.  Each test prints one
PASS/FAIL line (visible with ``pytest -s`` or ``-rP``) and enforces the
stated runtime bound; every equality is exact, never approximate.

Run with:  python3 -m pytest tests/test_acceptance.py -v -s
"""

import time
from fractions import Fraction

from scaletop.continuity import ContinuityMode
from scaletop.exactnum import SQRT2, ExactNumber
from scaletop.finite_topology import (
    enumerate_topologies,
    enumerate_topologies_bruteforce,
)
from scaletop.fixtures import (
    EX17_THRESHOLD,
    ex17_map,
    fixture_ex12,
    fixture_ex13,
    fixture_ex15,
)
from scaletop.interval_continuity import (
    default_probe_points,
    iw_check_continuity,
)
from scaletop.intervals import LineSet, SheetPoint, SheetSet, interval
from scaletop.pwmaps import compose, is_a_fuzzy_continuous
from scaletop.verifier import SweepConfig, run_property


class Criterion:
    """Timing + reporting wrapper; prints exactly one line per criterion."""

    def __init__(self, number: int, title: str, limit_seconds: float):
        self.number = number
        self.title = title
        self.limit = limit_seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        status = "PASS" if exc_type is None and elapsed <= self.limit else "FAIL"
        print(
            f"ACCEPTANCE {self.number:02d} {status} "
            f"({elapsed:8.2f}s <= {self.limit:g}s) {self.title}"
        )
        if exc_type is None:
            assert elapsed <= self.limit, (
                f"criterion {self.number} exceeded {self.limit}s ({elapsed:.2f}s)"
            )
        return False


def num(x) -> ExactNumber:
    return ExactNumber(Fraction(x))


def test_criterion_01_bounded_jump_fixture_exact():
    with Criterion(1, "single-jump map: gaps 1/11 and 21/121, threshold verdicts", 1.0):
        f = ex17_map()
        ff = compose(f, f)
        one = SheetPoint(0, num(1))
        assert f.gap(one) == num("1/11")
        assert ff.gap(one) == num("21/121")
        assert is_a_fuzzy_continuous(f, EX17_THRESHOLD).holds is True
        assert is_a_fuzzy_continuous(ff, EX17_THRESHOLD).holds is False


def test_criterion_02_punctured_interval_fixture():
    with Criterion(2, "punctured identity: local holds, global fails at (0,1)", 1.0):
        m = fixture_ex12()
        assert iw_check_continuity(m, ContinuityMode("strong", "local")).holds
        verdict = iw_check_continuity(m, ContinuityMode("strong", "global"))
        assert not verdict.holds
        cert = verdict.certificate
        expected_target = SheetSet((LineSet.of(interval(num(0), num(1))),))
        assert cert["r_open"] == expected_target
        expected_preimage = SheetSet(
            (
                LineSet.of(
                    interval(num(0), num("1/2")), interval(num("1/2"), num(1))
                ),
            )
        )
        assert cert["preimage"] == expected_preimage
        assert not m.domain_scale.is_q_open(cert["preimage"])


def test_criterion_03_crossed_endpoint_classes_fixture():
    with Criterion(3, "crossed endpoint classes: global holds, no point survives", 1.0):
        m = fixture_ex13()
        assert iw_check_continuity(m, ContinuityMode("strong", "global")).holds
        for xv in (num(0), SQRT2):
            verdict = iw_check_continuity(
                m, ContinuityMode("strong", "at-point", at_point=SheetPoint(0, xv))
            )
            assert not verdict.holds


def test_criterion_04_two_sheet_projection_fixture():
    with Criterion(4, "two-sheet projection: weak everywhere, strong nowhere", 1.0):
        m = fixture_ex15()
        assert iw_check_continuity(m, ContinuityMode("weak", "global")).holds
        assert iw_check_continuity(m, ContinuityMode("weak", "local")).holds
        for p in default_probe_points(m):
            assert iw_check_continuity(
                m, ContinuityMode("weak", "at-point", at_point=p)
            ).holds
            assert not iw_check_continuity(
                m, ContinuityMode("strong", "at-point", at_point=p)
            ).holds
        verdict = iw_check_continuity(m, ContinuityMode("strong", "global"))
        assert not verdict.holds
        assert verdict.certificate["preimage"].piece_count > 1  # disconnected


def test_criterion_05_closed_characterization_sweep():
    with Criterion(5, "closed-set characterization = global strong (n<=3)", 600.0):
        report = run_property("P4", SweepConfig(max_points=3, scale_budget=12))
        assert report.verdict == "CONFIRMED_ON_SWEEP", report.violations
        assert report.instances_tested > 1_000_000


def test_criterion_06_trivial_scale_lemmas_sweep():
    with Criterion(6, "trivial scales match the classical oracle (4 notions)", 600.0):
        cfg = SweepConfig(max_points=3)
        for pid in ("L1", "L2", "L5", "L6"):
            report = run_property(pid, cfg)
            assert report.verdict == "CONFIRMED_ON_SWEEP", (pid, report.violations)


def test_criterion_07_weak_flag_equivalences():
    with Criterion(7, "weak flags match closed-set closure laws", 600.0):
        cfg = SweepConfig(max_points=3, scale_budget=64)
        for pid in ("P1A", "P1B", "C1"):
            report = run_property(pid, cfg)
            assert report.verdict == "CONFIRMED_ON_SWEEP", (pid, report.violations)


def test_criterion_08_projection_propositions():
    with Criterion(8, "surjections: local-to-global upgrades", 600.0):
        cfg = SweepConfig(max_points=3, scale_budget=12)
        for pid in ("P2", "P5", "P6"):
            report = run_property(pid, cfg)
            assert report.verdict == "CONFIRMED_ON_SWEEP", (pid, report.violations)


def test_criterion_09_composition_sweep():
    with Criterion(9, "composition sweep, >= 10^4 hypothesis-satisfying triples", 300.0):
        cfg = SweepConfig(max_points=3, sample_budget=8000, seed=0)
        total = 0
        for pid in ("T1", "T2", "P9"):
            report = run_property(pid, cfg)
            assert report.verdict == "CONFIRMED_ON_SWEEP", (pid, report.violations)
            total += report.instances_tested
        assert total >= 10_000, total


def test_criterion_10_constancy_characterization():
    with Criterion(10, "principal scales on discrete codomains: constancy (n<=4)", 600.0):
        cfg = SweepConfig(max_points=4, scale_budget=8)
        for pid in ("T3", "C10"):
            report = run_property(pid, cfg)
            assert report.verdict == "CONFIRMED_ON_SWEEP", (pid, report.violations)


def test_criterion_11_bounded_ball_closed_sets():
    with Criterion(11, "bounded-ball scale: only the empty set is closed", 60.0):
        report = run_property(
            "BQOA_CLAIM", SweepConfig(max_points=2, sample_budget=400)
        )
        assert report.verdict == "CONFIRMED_ON_SWEEP", report.violations
        assert report.instances_tested >= 100


def test_criterion_12_topology_counts():
    with Criterion(12, "labeled topology counts 1, 4, 29, 355 + oracle check", 60.0):
        counts = {n: len(list(enumerate_topologies(n))) for n in (1, 2, 3, 4)}
        assert counts == {1: 1, 2: 4, 3: 29, 4: 355}
        for n in (1, 2, 3):
            fast = [s.opens for s in enumerate_topologies(n)]
            slow = [s.opens for s in enumerate_topologies_bruteforce(n)]
            assert fast == slow


def test_criterion_13_report_determinism():
    with Criterion(13, "same seed, byte-identical verification reports", 120.0):
        exhaustive = SweepConfig(max_points=2, scale_budget=8)
        assert (
            run_property("P4", exhaustive).to_bytes()
            == run_property("P4", exhaustive).to_bytes()
        )
        sampled = SweepConfig(max_points=3, sample_budget=2000, seed=42, mode="sampled")
        assert (
            run_property("T1", sampled).to_bytes()
            == run_property("T1", sampled).to_bytes()
        )
        assert (
            run_property("BQOA_CLAIM", sampled).to_bytes()
            == run_property("BQOA_CLAIM", sampled).to_bytes()
        )
