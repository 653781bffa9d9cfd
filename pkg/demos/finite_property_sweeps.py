#!/usr/bin/env python3
"""Sweep the checkable statements over small finite universes.

Confirmed properties come back with zero violations; claims under test
come back with minimal counterexamples that replay through the checker.
"""

import json

from scaletop import SweepConfig, run_property, search_counterexample
from scaletop.verifier import MUST_PASS, PROPERTIES, REPORT_ONLY, SEARCH_IDS

cfg = SweepConfig(max_points=2, scale_budget=10, sample_budget=2000)

print("Property sweep over all topologies on <= 2 points")
print(f"(scale budget {cfg.scale_budget}, seed {cfg.seed})")
print()
print(f"{'id':6s} {'verdict':22s} {'tested':>8s} {'skipped':>8s}  statement")
print("-" * 100)
for pid in sorted(PROPERTIES):
    report = run_property(pid, cfg)
    print(
        f"{pid:6s} {report.verdict:22s} {report.instances_tested:8d} "
        f"{report.hypothesis_skipped:8d}  {PROPERTIES[pid].description}"
    )

print()
print(f"must-pass set: {', '.join(MUST_PASS)}")
print(f"recorded-only: {', '.join(REPORT_ONLY)}")

print()
print("Separation searches (smallest separating instance, canonical order)")
print("-" * 72)
for claim in SEARCH_IDS:
    report = search_counterexample(claim, SweepConfig(max_points=2, scale_budget=10))
    print(f"{claim:9s} {report.verdict:22s} tested={report.instances_tested}")
    if report.violations:
        doc = report.violations[0]
        table = doc["map"]["table"]
        nx = doc["map"]["domain"]["space"]["n"]
        ny = doc["map"]["codomain"]["space"]["n"]
        print(f"          map {table} between {nx}-point and {ny}-point spaces")

print()
print("A full counterexample record is machine-readable JSON, e.g.:")
report = search_counterexample("PROBLEM3", SweepConfig(max_points=2, scale_budget=10))
print(json.dumps(report.violations[0], sort_keys=True)[:400] + " ...")
