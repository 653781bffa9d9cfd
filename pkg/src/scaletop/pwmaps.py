"""Piecewise-affine maps between sheeted carriers, with exact one-sided
limits, jump ("gap") computation, composition, and bounded-jump
continuity.

A map is a finite list of affine pieces with rational slope and
intercept, so images and preimages of Q(sqrt(2)) points stay in the
field.  The pieces must cover the domain carrier exactly once; values
at breakpoints are carried by whichever piece (possibly degenerate)
contains the breakpoint, which keeps removable discontinuities
representable.

The gap at a point is the largest discrepancy among the value and the
two one-sided limits; at carrier boundary points only the defined side
contributes.  A map is fuzzy continuous at level ``a`` when every gap
is at most ``a`` (inclusive threshold).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import ExactNumber, exact_max
from .intervals import (
    Carrier,
    Interval,
    LineSet,
    SheetPoint,
    SheetSet,
    normalize,
    point_interval,
)


@dataclass(frozen=True)
class AffinePiece:
    """One affine piece: on ``part`` of domain sheet ``sheet``, the map is
    x -> slope*x + intercept, landing on codomain sheet ``out_sheet``."""

    sheet: int
    part: Interval
    out_sheet: int
    slope: Fraction
    intercept: Fraction

    def value_at(self, x: ExactNumber) -> ExactNumber:
        return x * self.slope + self.intercept

    def image_interval(self) -> Interval:
        if self.slope == 0:
            return point_interval(ExactNumber(self.intercept))
        lo, hi = self.part.lo, self.part.hi
        lo_v = None if lo is None else self.value_at(lo)
        hi_v = None if hi is None else self.value_at(hi)
        if self.slope > 0:
            return Interval(lo_v, hi_v, self.part.lo_closed, self.part.hi_closed)
        return Interval(hi_v, lo_v, self.part.hi_closed, self.part.lo_closed)

    def preimage_interval(self, target: Interval) -> Interval | None:
        """Solve slope*x + intercept in target, restricted to this piece."""
        from .intervals import _intersect_intervals

        if self.slope == 0:
            if target.contains(ExactNumber(self.intercept)):
                return self.part
            return None
        inv = Fraction(1, 1) / self.slope
        lo, hi = target.lo, target.hi
        lo_v = None if lo is None else (lo - self.intercept) * inv
        hi_v = None if hi is None else (hi - self.intercept) * inv
        if self.slope > 0:
            pre = Interval(lo_v, hi_v, target.lo_closed, target.hi_closed)
        else:
            pre = Interval(hi_v, lo_v, target.hi_closed, target.lo_closed)
        return _intersect_intervals(pre, self.part)


class MapDomainError(ValueError):
    """Raised when a point or set falls outside the relevant carrier."""


@dataclass(frozen=True)
class PiecewiseAffineMap:
    domain: Carrier
    codomain: Carrier
    pieces: tuple[AffinePiece, ...]

    def __post_init__(self) -> None:
        for sheet in range(self.domain.n_sheets):
            parts = [p.part for p in self.pieces if p.sheet == sheet]
            if normalize(parts) != self.domain.sheets[sheet]:
                raise ValueError(f"pieces do not cover domain sheet {sheet} exactly")
            for i, a in enumerate(parts):
                for b in parts[i + 1 :]:
                    if not LineSet((a,)).intersect(LineSet((b,))).is_empty:
                        raise ValueError(f"overlapping pieces on domain sheet {sheet}")
        for p in self.pieces:
            if not 0 <= p.out_sheet < self.codomain.n_sheets:
                raise ValueError("piece routes to a nonexistent codomain sheet")
            img = LineSet((p.image_interval(),))
            if not img.issubset(self.codomain.sheets[p.out_sheet]):
                raise ValueError("piece image leaves the codomain carrier")

    # -- evaluation --------------------------------------------------------

    def piece_at(self, p: SheetPoint) -> AffinePiece:
        for piece in self.pieces:
            if piece.sheet == p.sheet and piece.part.contains(p.x):
                return piece
        raise MapDomainError(f"point {p} outside the domain carrier")

    def eval(self, p: SheetPoint) -> SheetPoint:
        piece = self.piece_at(p)
        return SheetPoint(piece.out_sheet, piece.value_at(p.x))

    def image(self, s: SheetSet) -> SheetSet:
        if not s.issubset(self.domain):
            raise MapDomainError("image argument not inside the domain carrier")
        out = [LineSet.empty()] * self.codomain.n_sheets
        for piece in self.pieces:
            cut = LineSet((piece.part,)).intersect(s.sheets[piece.sheet])
            imgs = [
                AffinePiece(
                    piece.sheet, part, piece.out_sheet, piece.slope, piece.intercept
                ).image_interval()
                for part in cut.pieces
            ]
            out[piece.out_sheet] = out[piece.out_sheet].union(normalize(imgs))
        return SheetSet(tuple(out))

    def preimage(self, s: SheetSet) -> SheetSet:
        if not s.issubset(self.codomain):
            raise MapDomainError("preimage argument not inside the codomain carrier")
        out = [LineSet.empty()] * self.domain.n_sheets
        for piece in self.pieces:
            target = s.sheets[piece.out_sheet]
            pres = [piece.preimage_interval(t) for t in target.pieces]
            out[piece.sheet] = out[piece.sheet].union(
                normalize([p for p in pres if p is not None])
            )
        return SheetSet(tuple(out))

    # -- limits and gaps ----------------------------------------------------

    def _side_piece(self, p: SheetPoint, left: bool) -> AffinePiece | None:
        """The piece covering points immediately to one side of p, if the
        carrier has points there."""
        for piece in self.pieces:
            if piece.sheet != p.sheet:
                continue
            part = piece.part
            if left:
                below = part.lo is None or part.lo < p.x
                reaches = part.hi is None or part.hi >= p.x
            else:
                below = part.hi is None or part.hi > p.x
                reaches = part.lo is None or part.lo <= p.x
            if below and reaches:
                return piece
        return None

    def one_sided_limits(
        self, p: SheetPoint
    ) -> tuple[ExactNumber | None, ExactNumber | None]:
        """(left, right) limits at p; None where the carrier has no points
        on that side.  Requires the adjacent pieces to land on the same
        codomain sheet as the value at p."""
        own = self.piece_at(p)
        out: list[ExactNumber | None] = []
        for left in (True, False):
            piece = self._side_piece(p, left)
            if piece is None:
                out.append(None)
            else:
                if piece.out_sheet != own.out_sheet:
                    raise ValueError(
                        "one-sided limit crosses codomain sheets; gap undefined"
                    )
                out.append(piece.value_at(p.x))
        return out[0], out[1]

    def gap(self, p: SheetPoint) -> ExactNumber:
        value = self.eval(p).x
        left, right = self.one_sided_limits(p)
        candidates = []
        if left is not None:
            candidates.append(abs(value - left))
        if right is not None:
            candidates.append(abs(value - right))
        if left is not None and right is not None:
            candidates.append(abs(left - right))
        if not candidates:
            return ExactNumber(0)
        return exact_max(*candidates)

    def gaps(self) -> list[tuple[SheetPoint, ExactNumber]]:
        """All points with positive gap.  Away from piece endpoints the map
        is affine on a carrier interval, so only finitely many candidate
        points need checking."""
        out = []
        for sheet in range(self.domain.n_sheets):
            candidates: set[ExactNumber] = set()
            for piece in self.pieces:
                if piece.sheet != sheet:
                    continue
                for end in (piece.part.lo, piece.part.hi):
                    if end is not None and self.domain.sheets[sheet].member(end):
                        candidates.add(end)
            for x in sorted(candidates):
                p = SheetPoint(sheet, x)
                g = self.gap(p)
                if g.sign() > 0:
                    out.append((p, g))
        return out


def compose(g: PiecewiseAffineMap, f: PiecewiseAffineMap) -> PiecewiseAffineMap:
    """Exact representative of g o f; breakpoints are f's breakpoints plus
    preimages under f of g's breakpoints."""
    if f.codomain.n_sheets != g.domain.n_sheets or not f.codomain.issubset(g.domain):
        raise MapDomainError("codomain of f is not contained in the domain of g")
    pieces: list[AffinePiece] = []
    for fp in f.pieces:
        if fp.slope == 0:
            c = ExactNumber(fp.intercept)
            gp = g.piece_at(SheetPoint(fp.out_sheet, c))
            pieces.append(
                AffinePiece(
                    fp.sheet,
                    fp.part,
                    gp.out_sheet,
                    Fraction(0),
                    Fraction(gp.value_at(c).a),
                )
            )
            continue
        for gp in g.pieces:
            if gp.sheet != fp.out_sheet:
                continue
            cut = fp.preimage_interval(gp.part)
            if cut is None:
                continue
            slope = gp.slope * fp.slope
            intercept = gp.slope * fp.intercept + gp.intercept
            pieces.append(AffinePiece(fp.sheet, cut, gp.out_sheet, slope, intercept))
    return PiecewiseAffineMap(f.domain, g.codomain, tuple(pieces))


def identity_map(carrier: Carrier) -> PiecewiseAffineMap:
    pieces = [
        AffinePiece(sheet, part, sheet, Fraction(1), Fraction(0))
        for sheet in range(carrier.n_sheets)
        for part in carrier.sheets[sheet].pieces
    ]
    return PiecewiseAffineMap(carrier, carrier, tuple(pieces))


def maps_extensionally_equal(
    f: PiecewiseAffineMap, g: PiecewiseAffineMap
) -> bool:
    """Pointwise equality decided on a finite certificate grid: two affine
    maps agreeing at two points of an interval agree on it."""
    if f.domain != g.domain or f.codomain != g.codomain:
        return False
    for sheet in range(f.domain.n_sheets):
        grid: set[ExactNumber] = set()
        for m in (f, g):
            for piece in m.pieces:
                if piece.sheet != sheet:
                    continue
                for end in (piece.part.lo, piece.part.hi):
                    if end is not None:
                        grid.add(end)
        samples: list[ExactNumber] = []
        carrier_sheet = f.domain.sheets[sheet]
        points = sorted(grid)
        for x in points:
            if carrier_sheet.member(x):
                samples.append(x)
        cells = (
            [(None, points[0])]
            + list(zip(points, points[1:]))
            + [(points[-1], None)]
            if points
            else [(None, None)]
        )
        for lo, hi in cells:
            if lo is None and hi is None:
                inner: list[ExactNumber] = [ExactNumber(0), ExactNumber(1)]
            elif lo is None:
                inner = [hi - 1, hi - 2]
            elif hi is None:
                inner = [lo + 1, lo + 2]
            elif lo < hi:
                third = (hi - lo) / 3
                inner = [lo + third, lo + third * 2]
            else:
                continue
            samples.extend(x for x in inner if carrier_sheet.member(x))
        for x in samples:
            p = SheetPoint(sheet, x)
            if f.eval(p) != g.eval(p):
                return False
    return True


@dataclass(frozen=True)
class FuzzyVerdict:
    """Outcome of a bounded-jump continuity test with failure witnesses."""

    holds: bool
    threshold: ExactNumber
    witnesses: tuple[tuple[SheetPoint, ExactNumber], ...]


def is_a_fuzzy_continuous(f: PiecewiseAffineMap, a: ExactNumber) -> FuzzyVerdict:
    """True iff every gap of f is at most ``a`` (inclusive threshold);
    witnesses list every point whose gap exceeds ``a``."""
    if a.sign() < 0:
        raise ValueError("fuzzy-continuity level must be nonnegative")
    bad = tuple((p, g) for p, g in f.gaps() if g > a)
    return FuzzyVerdict(not bad, a, bad)
