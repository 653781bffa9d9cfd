"""Built-in interval-world fixtures.

Four scaled-map fixtures exercise the separations between the
continuity notions:

* ``ex12`` -- the identity on the punctured interval [0,1/2) u (1/2,1]
  into [0,1], both sides carrying symmetric-interval trace scales with
  ambient bounds [0,1].  Locally strong-continuous, globally not: the
  declared probe (0,1) pulls back to a trace whose forced center 1/2 is
  missing from the carrier.
* ``ex13`` -- the identity on the full line; the domain scale assigns
  intervals whose endpoint rationality matches the point, the codomain
  scale the crossed variant.  Globally strong-continuous on every
  probe, strong-continuous at no point (witnessed at 0 and sqrt(2)).
* ``ex15`` -- the two-sheet projection [0,1] x {sheets 0,1} -> [0,1]
  with connected-open scales: weakly continuous everywhere and
  globally, strongly continuous nowhere (preimages split across both
  sheets, so they are never connected).
* ``ex17-f`` / ``ex17-ff`` -- the bounded-jump map (10x/11 on [0,1),
  identity on [1,2]) and its self-composition on truncated symmetric
  ball scales of radius threshold 1/10; the single jump of f is 1/11,
  within threshold, while the composition jumps by 21/121.

``fixtures()`` recomputes every fixture's verdicts and reports them
against the frozen expectations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .continuity import ContinuityMode
from .exactnum import SQRT2, ExactNumber
from .interval_continuity import (
    IntervalScaledMap,
    default_probe_points,
    iw_check_continuity,
)
from .interval_scales import (
    ConnectedOpenScale,
    EndClassScale,
    SymmetricIntervalScale,
    TruncatedBallScale,
    full_line_carrier,
    segment_carrier,
)
from .intervals import Carrier, Interval, LineSet, SheetPoint, SheetSet
from .pwmaps import (
    AffinePiece,
    PiecewiseAffineMap,
    compose,
    is_a_fuzzy_continuous,
)

FIXTURE_NAMES = ("ex12", "ex13", "ex15", "ex17-f", "ex17-ff")

_ZERO = ExactNumber(0)
_ONE = ExactNumber(1)
_HALF = ExactNumber(Fraction(1, 2))


def _iv(lo, hi, lc=False, hc=False) -> Interval:
    return Interval(lo, hi, lc, hc)


def fixture_ex12() -> IntervalScaledMap:
    domain = Carrier.of(
        LineSet.of(_iv(_ZERO, _HALF, True, False), _iv(_HALF, _ONE, False, True))
    )
    codomain = segment_carrier(_ZERO, _ONE)
    ident = PiecewiseAffineMap(
        domain,
        codomain,
        (
            AffinePiece(0, _iv(_ZERO, _HALF, True, False), 0, Fraction(1), Fraction(0)),
            AffinePiece(0, _iv(_HALF, _ONE, False, True), 0, Fraction(1), Fraction(0)),
        ),
    )
    return IntervalScaledMap(
        pam=ident,
        domain_scale=SymmetricIntervalScale(domain, lo_amb=_ZERO, hi_amb=_ONE),
        codomain_scale=SymmetricIntervalScale(codomain, lo_amb=_ZERO, hi_amb=_ONE),
        probe_family=(SheetSet((LineSet.of(_iv(_ZERO, _ONE)),)),),
    )


def fixture_ex13() -> IntervalScaledMap:
    line = full_line_carrier()
    ident = PiecewiseAffineMap(
        line,
        line,
        (AffinePiece(0, _iv(None, None), 0, Fraction(1), Fraction(0)),),
    )
    probes = (
        SheetSet((LineSet.of(_iv(_ZERO, _ONE)),)),
        SheetSet((LineSet.of(_iv(-SQRT2, SQRT2)),)),
        SheetSet((LineSet.of(_iv(_ONE, ExactNumber(3))),)),
    )
    return IntervalScaledMap(
        pam=ident,
        domain_scale=EndClassScale(line, mode="mixed", crossed=False),
        codomain_scale=EndClassScale(line, mode="mixed", crossed=True),
        probe_family=probes,
    )


def fixture_ex15() -> IntervalScaledMap:
    unit = LineSet.of(_iv(_ZERO, _ONE, True, True))
    domain = Carrier.of(unit, unit)
    codomain = Carrier.of(unit)
    proj = PiecewiseAffineMap(
        domain,
        codomain,
        (
            AffinePiece(0, _iv(_ZERO, _ONE, True, True), 0, Fraction(1), Fraction(0)),
            AffinePiece(1, _iv(_ZERO, _ONE, True, True), 0, Fraction(1), Fraction(0)),
        ),
    )
    quarter, three_quarters = ExactNumber(Fraction(1, 4)), ExactNumber(Fraction(3, 4))
    probes = (
        SheetSet((LineSet.of(_iv(quarter, three_quarters)),)),
        SheetSet((LineSet.of(_iv(_ZERO, _ONE)),)),
        codomain.whole(),
    )
    return IntervalScaledMap(
        pam=proj,
        domain_scale=ConnectedOpenScale(domain),
        codomain_scale=ConnectedOpenScale(codomain),
        probe_family=probes,
    )


EX17_THRESHOLD = ExactNumber(Fraction(1, 10))


def ex17_map() -> PiecewiseAffineMap:
    carrier = segment_carrier(_ZERO, ExactNumber(2))
    return PiecewiseAffineMap(
        carrier,
        carrier,
        (
            AffinePiece(0, _iv(_ZERO, _ONE, True, False), 0, Fraction(10, 11), Fraction(0)),
            AffinePiece(0, _iv(_ONE, ExactNumber(2), True, True), 0, Fraction(1), Fraction(0)),
        ),
    )


def _ex17_scaled(pam: PiecewiseAffineMap) -> IntervalScaledMap:
    scale = TruncatedBallScale(
        pam.domain, a=EX17_THRESHOLD, lo=_ZERO, hi=ExactNumber(2)
    )
    return IntervalScaledMap(
        pam=pam, domain_scale=scale, codomain_scale=scale, probe_family=()
    )


def fixture_ex17_f() -> IntervalScaledMap:
    return _ex17_scaled(ex17_map())


def fixture_ex17_ff() -> IntervalScaledMap:
    f = ex17_map()
    return _ex17_scaled(compose(f, f))


def load_fixture(name: str) -> IntervalScaledMap:
    builders = {
        "ex12": fixture_ex12,
        "ex13": fixture_ex13,
        "ex15": fixture_ex15,
        "ex17-f": fixture_ex17_f,
        "ex17-ff": fixture_ex17_ff,
    }
    if name not in builders:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    return builders[name]()


@dataclass(frozen=True)
class FixtureReport:
    fixture: str
    expected: dict
    computed: dict

    @property
    def matches(self) -> bool:
        return self.expected == self.computed


def _verdicts_ex12() -> dict:
    m = fixture_ex12()
    local = iw_check_continuity(m, ContinuityMode("strong", "local"))
    global_ = iw_check_continuity(m, ContinuityMode("strong", "global"))
    cert_target = None
    if global_.certificate is not None:
        cert_target = str(global_.certificate["r_open"])
    return {
        "local_strong": local.holds,
        "global_strong": global_.holds,
        "global_certificate": cert_target,
    }


def _verdicts_ex13() -> dict:
    m = fixture_ex13()
    global_ = iw_check_continuity(m, ContinuityMode("strong", "global"))
    at_zero = iw_check_continuity(
        m,
        ContinuityMode("strong", "at-point", at_point=SheetPoint(0, _ZERO)),
    )
    at_root2 = iw_check_continuity(
        m,
        ContinuityMode("strong", "at-point", at_point=SheetPoint(0, SQRT2)),
    )
    return {
        "global_strong": global_.holds,
        "at_strong_zero": at_zero.holds,
        "at_strong_sqrt2": at_root2.holds,
    }


def _verdicts_ex15() -> dict:
    m = fixture_ex15()
    weak_local = iw_check_continuity(m, ContinuityMode("weak", "local"))
    weak_global = iw_check_continuity(m, ContinuityMode("weak", "global"))
    strong_global = iw_check_continuity(m, ContinuityMode("strong", "global"))
    strong_at_all_probes = all(
        not iw_check_continuity(
            m, ContinuityMode("strong", "at-point", at_point=p)
        ).holds
        for p in default_probe_points(m)
    )
    disconnected_cert = False
    cert = strong_global.certificate
    if cert is not None:
        disconnected_cert = cert["preimage"].piece_count > 1
    return {
        "weak_local": weak_local.holds,
        "weak_global": weak_global.holds,
        "strong_global": strong_global.holds,
        "strong_fails_at_every_probe": strong_at_all_probes,
        "certificate_preimage_disconnected": disconnected_cert,
    }


def _verdicts_ex17() -> dict:
    f = ex17_map()
    ff = compose(f, f)
    one = SheetPoint(0, _ONE)
    return {
        "gap_f_at_1": str(f.gap(one).a),
        "gap_ff_at_1": str(ff.gap(one).a),
        "f_within_threshold": is_a_fuzzy_continuous(f, EX17_THRESHOLD).holds,
        "ff_within_threshold": is_a_fuzzy_continuous(ff, EX17_THRESHOLD).holds,
    }


EXPECTED_VERDICTS: dict[str, dict] = {
    "ex12": {
        "local_strong": True,
        "global_strong": False,
        "global_certificate": "(0, 1)",
    },
    "ex13": {
        "global_strong": True,
        "at_strong_zero": False,
        "at_strong_sqrt2": False,
    },
    "ex15": {
        "weak_local": True,
        "weak_global": True,
        "strong_global": False,
        "strong_fails_at_every_probe": True,
        "certificate_preimage_disconnected": True,
    },
    "ex17": {
        "gap_f_at_1": "1/11",
        "gap_ff_at_1": "21/121",
        "f_within_threshold": True,
        "ff_within_threshold": False,
    },
}


def fixtures() -> list[FixtureReport]:
    """Expected-vs-computed verdicts for every fixture."""
    return [
        FixtureReport("ex12", EXPECTED_VERDICTS["ex12"], _verdicts_ex12()),
        FixtureReport("ex13", EXPECTED_VERDICTS["ex13"], _verdicts_ex13()),
        FixtureReport("ex15", EXPECTED_VERDICTS["ex15"], _verdicts_ex15()),
        FixtureReport("ex17", EXPECTED_VERDICTS["ex17"], _verdicts_ex17()),
    ]
