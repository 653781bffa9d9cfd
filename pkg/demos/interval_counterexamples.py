#!/usr/bin/env python3
"""Walk through the four built-in interval-world fixtures.

Each fixture separates two continuity notions that coincide classically.
Everything below is computed in exact arithmetic over Q(sqrt(2)); run
this script and compare the printed verdicts with the narration.
"""

from fractions import Fraction

from scaletop import (
    ContinuityMode,
    SQRT2,
    ExactNumber,
    SheetPoint,
    compose,
    default_probe_points,
    is_a_fuzzy_continuous,
    iw_check_continuity,
)
from scaletop.fixtures import (
    EX17_THRESHOLD,
    ex17_map,
    fixture_ex12,
    fixture_ex13,
    fixture_ex15,
)


def banner(text: str) -> None:
    print()
    print("=" * 72)
    print(text)
    print("=" * 72)


banner("1. A single small jump is tolerated; composing it is not (ex17)")
f = ex17_map()
ff = compose(f, f)
one = SheetPoint(0, ExactNumber(1))
print(f"f is 10x/11 on [0,1) and the identity on [1,2].")
print(f"f(11/20)       = {f.eval(SheetPoint(0, ExactNumber(Fraction(11, 20)))).x}")
print(f"gap of f  at 1 = {f.gap(one)}   (left limit 10/11, value 1)")
print(f"gap of f2 at 1 = {ff.gap(one)}  (left limit 100/121, value 1)")
print(f"threshold a    = {EX17_THRESHOLD}")
print(f"f  within a?     {is_a_fuzzy_continuous(f, EX17_THRESHOLD).holds}")
print(f"f2 within a?     {is_a_fuzzy_continuous(ff, EX17_THRESHOLD).holds}")
print("Bounded-jump continuity is not closed under composition: 1/11 <= 1/10")
print("but the composed jump 21/121 exceeds it.")

banner("2. Local continuity without global continuity (ex12)")
m12 = fixture_ex12()
print("The identity on [0,1/2) u (1/2,1] -> [0,1], with symmetric-interval")
print("trace scales bounded by [0,1] on both sides.")
local = iw_check_continuity(m12, ContinuityMode("strong", "local"))
glob = iw_check_continuity(m12, ContinuityMode("strong", "global"))
print(f"locally continuous?  {local.holds}")
print(f"globally continuous? {glob.holds}")
cert = glob.certificate
print(f"counterexample target: {cert['r_open']}")
print(f"its preimage:          {cert['preimage']}")
print("The preimage is a symmetric trace only around 1/2, and 1/2 is the")
print("one point missing from the carrier, so no point is assigned it.")

banner("3. Global continuity at no point (ex13)")
m13 = fixture_ex13()
print("The identity on the line; the domain scale assigns intervals whose")
print("endpoint rationality matches the point, the codomain scale crosses it.")
glob = iw_check_continuity(m13, ContinuityMode("strong", "global"))
print(f"globally continuous (on all probes)? {glob.holds}")
for xv, label in ((ExactNumber(0), "0 (rational)"), (SQRT2, "sqrt2 (irrational)")):
    verdict = iw_check_continuity(
        m13, ContinuityMode("strong", "at-point", at_point=SheetPoint(0, xv))
    )
    print(f"continuous at {label}? {verdict.holds}")
print("Globally, any same-class interval is assigned somewhere; pointwise,")
print("the crossed classes can never agree.")

banner("4. Weak continuity strictly weaker than continuity (ex15)")
m15 = fixture_ex15()
print("The projection of two stacked copies of [0,1] onto [0,1], with")
print("connected-open scales on both sides.")
print(f"weakly continuous globally?  "
      f"{iw_check_continuity(m15, ContinuityMode('weak', 'global')).holds}")
weak_pts = all(
    iw_check_continuity(m15, ContinuityMode("weak", "at-point", at_point=p)).holds
    for p in default_probe_points(m15)
)
strong_pts = any(
    iw_check_continuity(m15, ContinuityMode("strong", "at-point", at_point=p)).holds
    for p in default_probe_points(m15)
)
print(f"weakly continuous at every probe point?  {weak_pts}")
print(f"strongly continuous at any probe point?  {strong_pts}")
glob = iw_check_continuity(m15, ContinuityMode("strong", "global"))
print(f"strongly continuous globally?            {glob.holds}")
print(f"failing preimage spans both sheets:      "
      f"{glob.certificate['preimage'].piece_count} pieces")
print("Every preimage splits across the two sheets, so it is never")
print("connected; one connected half always fits inside, which is all weak")
print("continuity asks for.")
