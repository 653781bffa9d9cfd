"""Exact interval sets over Q(sqrt(2)) and sheeted carriers.

``Interval`` is a single (possibly unbounded, possibly degenerate)
interval with exact endpoints.  ``LineSet`` is a finite union of
intervals kept in canonical form: pieces are pairwise disjoint,
non-adjacent, and sorted, so structural equality is set equality.
``SheetSet`` lifts a LineSet to finitely many disjoint copies of the
line; a ``Carrier`` is a SheetSet used as the ambient subspace for
relative topology (openness, interior, closure, connectedness in the
subspace sense).

All operations are pure and exact; no floats are consulted anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .exactnum import ExactNumber

Bound = ExactNumber | None  # None encodes -inf for lower / +inf for upper


def _cmp_lower(v1: Bound, c1: bool, v2: Bound, c2: bool) -> int:
    """Order lower bounds; -inf first, closed before open at equal values."""
    if v1 is None:
        return 0 if v2 is None else -1
    if v2 is None:
        return 1
    if v1 != v2:
        return -1 if v1 < v2 else 1
    if c1 == c2:
        return 0
    return -1 if c1 else 1


def _cmp_upper(v1: Bound, c1: bool, v2: Bound, c2: bool) -> int:
    """Order upper bounds; +inf last, open before closed at equal values."""
    if v1 is None:
        return 0 if v2 is None else 1
    if v2 is None:
        return -1
    if v1 != v2:
        return -1 if v1 < v2 else 1
    if c1 == c2:
        return 0
    return 1 if c1 else -1


@dataclass(frozen=True)
class Interval:
    """One interval; infinite ends are open, degenerate needs both closed."""

    lo: Bound
    hi: Bound
    lo_closed: bool
    hi_closed: bool

    def __post_init__(self) -> None:
        if self.lo is None and self.lo_closed:
            raise ValueError("-inf end must be open")
        if self.hi is None and self.hi_closed:
            raise ValueError("+inf end must be open")
        if self.lo is not None and self.hi is not None:
            if self.lo > self.hi:
                raise ValueError("interval requires lo <= hi")
            if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
                raise ValueError("degenerate interval requires closed ends")

    @property
    def is_point(self) -> bool:
        return self.lo is not None and self.lo == self.hi

    @property
    def is_bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    @property
    def is_open_interval(self) -> bool:
        return not self.lo_closed and not self.hi_closed

    def contains(self, p: ExactNumber) -> bool:
        if self.lo is not None and (p < self.lo or (p == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (p > self.hi or (p == self.hi and not self.hi_closed)):
            return False
        return True

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "+inf" if self.hi is None else str(self.hi)
        return f"{left}{lo}, {hi}{right}"


def interval(
    lo: Bound,
    hi: Bound,
    lo_closed: bool = False,
    hi_closed: bool = False,
) -> Interval:
    return Interval(lo, hi, lo_closed, hi_closed)


def point_interval(p: ExactNumber) -> Interval:
    return Interval(p, p, True, True)


FULL_LINE_INTERVAL = Interval(None, None, False, False)


def _intersect_intervals(x: Interval, y: Interval) -> Interval | None:
    if _cmp_lower(x.lo, x.lo_closed, y.lo, y.lo_closed) >= 0:
        lo, lc = x.lo, x.lo_closed
    else:
        lo, lc = y.lo, y.lo_closed
    if _cmp_upper(x.hi, x.hi_closed, y.hi, y.hi_closed) <= 0:
        hi, hc = x.hi, x.hi_closed
    else:
        hi, hc = y.hi, y.hi_closed
    if lo is not None and hi is not None:
        if lo > hi or (lo == hi and not (lc and hc)):
            return None
    return Interval(lo, hi, lc, hc)


def _touches(first: Interval, second: Interval) -> bool:
    """True if ``first`` and ``second`` (first.lo <= second.lo) overlap or
    are adjacent, i.e. their union is a single interval."""
    if first.hi is None:
        return True
    if second.lo is None:
        return True
    if second.lo < first.hi:
        return True
    if second.lo == first.hi and (first.hi_closed or second.lo_closed):
        return True
    return False


@dataclass(frozen=True)
class LineSet:
    """Canonical finite union of intervals on one copy of the line."""

    pieces: tuple[Interval, ...]

    @staticmethod
    def of(*intervals: Interval) -> LineSet:
        return normalize(intervals)

    @staticmethod
    def empty() -> LineSet:
        return LineSet(())

    @staticmethod
    def full_line() -> LineSet:
        return LineSet((FULL_LINE_INTERVAL,))

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    @property
    def is_bounded(self) -> bool:
        return all(p.is_bounded for p in self.pieces)

    def member(self, p: ExactNumber) -> bool:
        return any(piece.contains(p) for piece in self.pieces)

    def union(self, other: LineSet) -> LineSet:
        return normalize(self.pieces + other.pieces)

    def intersect(self, other: LineSet) -> LineSet:
        out = []
        for x in self.pieces:
            for y in other.pieces:
                z = _intersect_intervals(x, y)
                if z is not None:
                    out.append(z)
        return normalize(out)

    def complement(self) -> LineSet:
        """Complement within the whole line."""
        if not self.pieces:
            return LineSet.full_line()
        out = []
        first = self.pieces[0]
        if first.lo is not None:
            out.append(Interval(None, first.lo, False, not first.lo_closed))
        for left, right in zip(self.pieces, self.pieces[1:]):
            out.append(
                Interval(left.hi, right.lo, not left.hi_closed, not right.lo_closed)
            )
        last = self.pieces[-1]
        if last.hi is not None:
            out.append(Interval(last.hi, None, not last.hi_closed, False))
        return normalize(out)

    def difference(self, other: LineSet) -> LineSet:
        return self.intersect(other.complement())

    def issubset(self, other: LineSet) -> bool:
        return self.difference(other).is_empty

    def closure(self) -> LineSet:
        """Topological closure in the whole line (close finite endpoints)."""
        closed = [
            Interval(p.lo, p.hi, p.lo is not None, p.hi is not None)
            for p in self.pieces
        ]
        return normalize(closed)

    def interior(self) -> LineSet:
        """Topological interior in the whole line (open finite endpoints)."""
        out = []
        for p in self.pieces:
            if p.is_point:
                continue
            out.append(Interval(p.lo, p.hi, False, False))
        return normalize(out)

    def is_open_in_line(self) -> bool:
        return all(
            (p.lo is None or not p.lo_closed) and (p.hi is None or not p.hi_closed)
            for p in self.pieces
        )

    def finite_endpoints(self) -> list[ExactNumber]:
        out: list[ExactNumber] = []
        for p in self.pieces:
            if p.lo is not None:
                out.append(p.lo)
            if p.hi is not None and p.hi != p.lo:
                out.append(p.hi)
        return out

    def __str__(self) -> str:
        if not self.pieces:
            return "{}"
        return " u ".join(str(p) for p in self.pieces)


def normalize(intervals: Iterable[Interval]) -> LineSet:
    """Canonical form: sorted, merged where overlapping or adjacent."""
    items = [iv for iv in intervals if iv is not None]
    if not items:
        return LineSet(())

    import functools

    def cmp(x: Interval, y: Interval) -> int:
        c = _cmp_lower(x.lo, x.lo_closed, y.lo, y.lo_closed)
        if c != 0:
            return c
        return _cmp_upper(x.hi, x.hi_closed, y.hi, y.hi_closed)

    items.sort(key=functools.cmp_to_key(cmp))
    merged = [items[0]]
    for nxt in items[1:]:
        cur = merged[-1]
        if _touches(cur, nxt):
            if _cmp_upper(nxt.hi, nxt.hi_closed, cur.hi, cur.hi_closed) > 0:
                hi, hc = nxt.hi, nxt.hi_closed
            else:
                hi, hc = cur.hi, cur.hi_closed
            merged[-1] = Interval(cur.lo, hi, cur.lo_closed, hc)
        else:
            merged.append(nxt)
    return LineSet(tuple(merged))


class SheetPoint(NamedTuple):
    """A point of a sheeted carrier: (sheet index, coordinate)."""

    sheet: int
    x: ExactNumber


@dataclass(frozen=True, eq=False)
class SheetSet:
    """A subset of finitely many disjoint copies of the line."""

    sheets: tuple[LineSet, ...]

    def __post_init__(self) -> None:
        pass

    def __eq__(self, other: object) -> bool:
        # Value equality across SheetSet and its Carrier subclass.
        if not isinstance(other, SheetSet):
            return NotImplemented
        return self.sheets == other.sheets

    def __hash__(self) -> int:
        return hash(self.sheets)

    @staticmethod
    def single(ls: LineSet) -> SheetSet:
        return SheetSet((ls,))

    @property
    def n_sheets(self) -> int:
        return len(self.sheets)

    @property
    def is_empty(self) -> bool:
        return all(s.is_empty for s in self.sheets)

    @property
    def piece_count(self) -> int:
        return sum(len(s.pieces) for s in self.sheets)

    def member(self, p: SheetPoint) -> bool:
        if not 0 <= p.sheet < len(self.sheets):
            return False
        return self.sheets[p.sheet].member(p.x)

    def _check_arity(self, other: SheetSet) -> None:
        if len(self.sheets) != len(other.sheets):
            raise ValueError("sheet-set operands have different sheet counts")

    def union(self, other: SheetSet) -> SheetSet:
        self._check_arity(other)
        return SheetSet(tuple(a.union(b) for a, b in zip(self.sheets, other.sheets)))

    def intersect(self, other: SheetSet) -> SheetSet:
        self._check_arity(other)
        return SheetSet(
            tuple(a.intersect(b) for a, b in zip(self.sheets, other.sheets))
        )

    def difference(self, other: SheetSet) -> SheetSet:
        self._check_arity(other)
        return SheetSet(
            tuple(a.difference(b) for a, b in zip(self.sheets, other.sheets))
        )

    def issubset(self, other: SheetSet) -> bool:
        self._check_arity(other)
        return all(a.issubset(b) for a, b in zip(self.sheets, other.sheets))

    def closure(self) -> SheetSet:
        return SheetSet(tuple(s.closure() for s in self.sheets))

    @property
    def is_bounded(self) -> bool:
        return all(s.is_bounded for s in self.sheets)

    def components(self) -> list[tuple[int, Interval]]:
        """All maximal pieces as (sheet, interval) pairs."""
        return [(i, p) for i, ls in enumerate(self.sheets) for p in ls.pieces]

    def __str__(self) -> str:
        if len(self.sheets) == 1:
            return str(self.sheets[0])
        return "; ".join(f"sheet {i}: {s}" for i, s in enumerate(self.sheets))


class Carrier(SheetSet):
    """The ambient subspace under consideration; sheets must be nonempty."""

    def __post_init__(self) -> None:
        if not self.sheets:
            raise ValueError("carrier needs at least one sheet")
        for i, s in enumerate(self.sheets):
            if s.is_empty:
                raise ValueError(f"carrier sheet {i} is empty")

    @staticmethod
    def of(*sheet_sets: LineSet) -> Carrier:
        return Carrier(tuple(sheet_sets))

    def empty_set(self) -> SheetSet:
        return SheetSet(tuple(LineSet.empty() for _ in self.sheets))

    def whole(self) -> SheetSet:
        return SheetSet(self.sheets)

    def lift(self, ls: LineSet, sheet: int = 0) -> SheetSet:
        """Embed a one-line set on the given sheet, empty elsewhere."""
        return SheetSet(
            tuple(ls if i == sheet else LineSet.empty() for i in range(self.n_sheets))
        )


def complement_within(carrier: SheetSet, s: SheetSet) -> SheetSet:
    if not s.issubset(carrier):
        raise ValueError("set is not contained in the carrier")
    return carrier.difference(s)


def closure_in_carrier(carrier: SheetSet, s: SheetSet) -> SheetSet:
    return s.closure().intersect(carrier)


def is_open_in_carrier(carrier: SheetSet, s: SheetSet) -> bool:
    """Openness in the subspace topology: no point of s is a limit of
    carrier-minus-s."""
    if not s.issubset(carrier):
        raise ValueError("set is not contained in the carrier")
    rest = carrier.difference(s)
    return s.intersect(rest.closure()).is_empty


def interior_in_carrier(carrier: SheetSet, s: SheetSet) -> SheetSet:
    if not s.issubset(carrier):
        raise ValueError("set is not contained in the carrier")
    return carrier.difference(carrier.difference(s).closure().intersect(carrier))


def is_connected_in_carrier(carrier: SheetSet, s: SheetSet) -> bool:
    """Connectedness of s as a subspace.  In canonical form the pieces are
    mutually separated, so s is connected iff it has at most one piece."""
    if not s.issubset(carrier):
        raise ValueError("set is not contained in the carrier")
    return s.piece_count <= 1


def component_containing(s: SheetSet, p: SheetPoint) -> SheetSet | None:
    """The connected component (single piece) of s containing p, if any."""
    if not 0 <= p.sheet < len(s.sheets):
        return None
    for piece in s.sheets[p.sheet].pieces:
        if piece.contains(p.x):
            out = [LineSet.empty()] * len(s.sheets)
            out[p.sheet] = LineSet((piece,))
            return SheetSet(tuple(out))
    return None
