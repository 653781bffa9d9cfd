"""Discontinuity structures (scales) on finite spaces.

A scale assigns each point a family of open neighborhoods drawn from a
declared family ``tq`` of open sets.  Validity means: every assigned
set lies in ``tq`` and is open; every assigned set contains its point
(SC1); every ``tq`` set is assigned to at least one point (SC2).  The
empty set can never lawfully appear in ``tq``: SC1 bars it from every
assignment and SC2 then has no assignee, so its absence is a theorem of
validity rather than a separate axiom.

Structure classification conventions (these decide edge cases for empty
per-point families):

* ``is_F`` / ``is_P`` require every per-point family to be nonempty: a
  filter contains the whole carrier by upward closure, so an empty
  family is not a filter.  Consequently ``f_closure`` seeds ``{carrier}``
  at points with empty assignments (the least filter).
* ``is_U`` / ``is_I`` / ``is_L`` are pure closure conditions and hold
  vacuously on empty families, which keeps each ``*_closure`` a least
  fixpoint.
* Weak flags live on ``tq``; intersection closure is demanded only for
  nonempty intersections, since the empty set can never enter ``tq``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .finite_topology import (
    FiniteSpace,
    PointSet,
    ValidationResult,
    VALID,
    canon,
    set_key,
)


@dataclass(frozen=True)
class Scale:
    """Per-point assignment of open neighborhoods over a declared family.

    Construction checks only shape (assignment arity); call
    :func:`validate_scale` for the axioms, so invalid scales can be
    represented and reported on.
    """

    space: FiniteSpace
    tq: frozenset[PointSet]
    assignment: tuple[frozenset[PointSet], ...]

    def __post_init__(self) -> None:
        if len(self.assignment) != self.space.n_points:
            raise ValueError("assignment must list one family per point")

    def at(self, x: int) -> frozenset[PointSet]:
        return self.assignment[x]

    def assigned_union(self) -> frozenset[PointSet]:
        out: set[PointSet] = set()
        for fam in self.assignment:
            out |= fam
        return frozenset(out)

    def key(self) -> tuple:
        return (
            self.space.key(),
            tuple(sorted((set_key(s) for s in self.tq))),
            tuple(
                tuple(sorted(set_key(s) for s in fam)) for fam in self.assignment
            ),
        )


def validate_scale(scale: Scale) -> ValidationResult:
    """VALID, or the first violated condition with a witness."""
    space = scale.space
    for fam in scale.assignment:
        for a in sorted(fam, key=set_key):
            if not a <= space.carrier:
                return ValidationResult(
                    False, "MALFORMED", (canon(a),), "assigned set leaves the carrier"
                )
    for x in space.points:
        for a in sorted(scale.at(x), key=set_key):
            if a not in scale.tq:
                return ValidationResult(
                    False,
                    "ASSIGNMENT_OUTSIDE_TQ",
                    (x, canon(a)),
                    "assigned set is not in the declared family",
                )
    for a in sorted(scale.tq, key=set_key):
        if a not in space.opens:
            return ValidationResult(
                False, "TQ_NOT_OPEN", (canon(a),), "declared set is not open"
            )
    for x in space.points:
        for a in sorted(scale.at(x), key=set_key):
            if x not in a:
                return ValidationResult(
                    False, "SC1", (x, canon(a)), "assigned set misses its point"
                )
    assigned = scale.assigned_union()
    for a in sorted(scale.tq, key=set_key):
        if a not in assigned:
            return ValidationResult(
                False, "SC2", (canon(a),), "declared set assigned to no point"
            )
    return VALID


def require_valid(scale: Scale) -> Scale:
    result = validate_scale(scale)
    if not result:
        raise ValueError(f"invalid scale: {result.code} {result.witness}")
    return scale


def trivial_scale(space: FiniteSpace) -> Scale:
    """Every point gets all of its open neighborhoods."""
    tq = frozenset(o for o in space.opens if o)
    assignment = tuple(
        frozenset(o for o in space.opens if x in o) for x in space.points
    )
    return Scale(space, tq, assignment)


def p_structure(space: FiniteSpace, chosen: Sequence[PointSet]) -> Scale:
    """Principal scale generated by one chosen open neighborhood per point:
    Q(x) = all opens containing the chosen set."""
    if len(chosen) != space.n_points:
        raise ValueError("need one chosen neighborhood per point")
    for x, o in enumerate(chosen):
        if o not in space.opens or x not in o:
            raise ValueError(f"chosen set at {x} must be an open neighborhood of it")
    assignment = tuple(
        frozenset(b for b in space.opens if chosen[x] <= b) for x in space.points
    )
    tq = frozenset(itertools.chain.from_iterable(assignment))
    return Scale(space, tq, assignment)


@dataclass(frozen=True)
class StructureFlags:
    condition_F: bool
    is_F: bool
    is_P: bool
    is_U: bool
    weak_U: bool
    is_I: bool
    weak_I: bool
    is_L: bool
    weak_L: bool
    neighborhood_closed: bool


def classify(scale: Scale) -> StructureFlags:
    """Compute every structure flag from its defining closure condition."""
    require_valid(scale)
    space = scale.space
    carrier = space.carrier
    tq = scale.tq

    condition_f = all(carrier in scale.at(x) for x in space.points)

    def family_is_filter(x: int) -> bool:
        fam = scale.at(x)
        if not fam:
            return False
        for a, b in itertools.combinations(fam, 2):
            if a & b not in fam:
                return False
        for a in fam:
            for b in space.opens:
                if a <= b and b not in fam:
                    return False
        return True

    is_f = all(family_is_filter(x) for x in space.points)

    def family_is_principal(x: int) -> bool:
        fam = scale.at(x)
        if not fam:
            return False
        generator = carrier
        for a in fam:
            generator &= a
        if generator not in fam:
            return False
        return fam == frozenset(b for b in space.opens if generator <= b)

    is_p = all(family_is_principal(x) for x in space.points)

    is_u = all(
        a | b in scale.at(x)
        for x in space.points
        for a in scale.at(x)
        for b in tq
    )
    weak_u = all(a | b in tq for a in tq for b in tq)
    is_i = all(
        a & b in scale.at(x)
        for x in space.points
        for a in scale.at(x)
        for b in tq
        if x in b
    )
    weak_i = all((a & b in tq) for a in tq for b in tq if a & b)
    is_l = all(
        (a | b in scale.at(x)) and (a & b in scale.at(x))
        for x in space.points
        for a in scale.at(x)
        for b in scale.at(x)
    )
    weak_l = weak_u and weak_i

    nbhd_closed = all(
        any(v <= u for v in scale.at(z))
        for u in tq
        for z in sorted(u)
    )

    return StructureFlags(
        condition_F=condition_f,
        is_F=is_f,
        is_P=is_p,
        is_U=is_u,
        weak_U=weak_u,
        is_I=is_i,
        weak_I=weak_i,
        is_L=is_l,
        weak_L=weak_l,
        neighborhood_closed=nbhd_closed,
    )


# -- open/closed sets under a scale -----------------------------------------


def q_open(scale: Scale, s: PointSet) -> bool:
    """Membership in the union of assignments (= tq for valid scales).
    The empty set is never q-open; the carrier is q-open only when some
    point is assigned it."""
    return s in scale.assigned_union()


def q_closed(scale: Scale, s: PointSet) -> bool:
    return q_open(scale, scale.space.carrier - s)


# -- comparison orders -------------------------------------------------------


def _check_same_space(p: Scale, q: Scale) -> None:
    if p.space != q.space:
        raise ValueError("scales live on different spaces")


def finer_at(p: Scale, q: Scale, x: int) -> bool:
    """p refines q at x: every q-neighborhood of x contains a
    p-neighborhood of x."""
    _check_same_space(p, q)
    return all(any(b <= a for b in p.at(x)) for a in q.at(x))


def finer(p: Scale, q: Scale) -> bool:
    _check_same_space(p, q)
    return all(finer_at(p, q, x) for x in p.space.points)


def is_subscale(h: Scale, q: Scale) -> bool:
    """Pointwise sub-assignment that is itself a valid scale."""
    _check_same_space(h, q)
    if not validate_scale(h):
        return False
    return all(h.at(x) <= q.at(x) for x in h.space.points)


# -- scale algebra -------------------------------------------------------------


class ScaleIntersectionError(ValueError):
    """Intersection produced a family violating SC2; reported, not repaired."""

    def __init__(self, witness: PointSet) -> None:
        self.witness = witness
        super().__init__(
            f"intersection leaves {canon(witness)} assigned to no point"
        )


def scale_union(p: Scale, q: Scale) -> Scale:
    _check_same_space(p, q)
    return Scale(
        p.space,
        p.tq | q.tq,
        tuple(p.at(x) | q.at(x) for x in p.space.points),
    )


def scale_intersection(p: Scale, q: Scale) -> Scale:
    _check_same_space(p, q)
    out = Scale(
        p.space,
        p.tq & q.tq,
        tuple(p.at(x) & q.at(x) for x in p.space.points),
    )
    result = validate_scale(out)
    if not result:
        if result.code == "SC2":
            raise ScaleIntersectionError(frozenset(result.witness[0]))
        raise ValueError(f"intersection is invalid: {result.code}")
    return out


def _fixpoint_closure(scale: Scale, grow) -> Scale:
    """Iterate ``grow(families) -> families`` to its least fixpoint and
    rebuild the scale with tq = union of the families."""
    require_valid(scale)
    families = [set(fam) for fam in scale.assignment]
    while True:
        changed = grow(families)
        if not changed:
            break
    tq = frozenset(itertools.chain.from_iterable(families))
    return Scale(scale.space, tq, tuple(frozenset(f) for f in families))


def f_closure(scale: Scale) -> Scale:
    """Least superscale whose per-point families are filters; empty
    families are seeded with the carrier (the least filter)."""
    space = scale.space

    def grow(families: list[set[PointSet]]) -> bool:
        changed = False
        for x in space.points:
            fam = families[x]
            if not fam:
                fam.add(space.carrier)
                changed = True
                continue
            new: set[PointSet] = set()
            for a, b in itertools.combinations(fam, 2):
                if a & b not in fam:
                    new.add(a & b)
            for a in fam:
                for b in space.opens:
                    if a <= b and b not in fam:
                        new.add(b)
            if new:
                fam |= new
                changed = True
        return changed

    return _fixpoint_closure(scale, grow)


def u_closure(scale: Scale) -> Scale:
    space = scale.space

    def grow(families: list[set[PointSet]]) -> bool:
        tq = set(itertools.chain.from_iterable(families))
        changed = False
        for x in space.points:
            fam = families[x]
            new = {a | b for a in fam for b in tq} - fam
            if new:
                fam |= new
                changed = True
        return changed

    return _fixpoint_closure(scale, grow)


def i_closure(scale: Scale) -> Scale:
    space = scale.space

    def grow(families: list[set[PointSet]]) -> bool:
        tq = set(itertools.chain.from_iterable(families))
        changed = False
        for x in space.points:
            fam = families[x]
            new = {a & b for a in fam for b in tq if x in b} - fam
            if new:
                fam |= new
                changed = True
        return changed

    return _fixpoint_closure(scale, grow)


def l_closure(scale: Scale) -> Scale:
    space = scale.space

    def grow(families: list[set[PointSet]]) -> bool:
        changed = False
        for x in space.points:
            fam = families[x]
            new = ({a | b for a in fam for b in fam} | {
                a & b for a in fam for b in fam
            }) - fam
            if new:
                fam |= new
                changed = True
        return changed

    return _fixpoint_closure(scale, grow)


# -- enumeration ----------------------------------------------------------------


def enumerate_scales(
    space: FiniteSpace,
    budget: int | None = None,
    max_candidates: int = 200_000,
) -> Iterator[Scale]:
    """Valid scales on the space in a fixed canonical order: declared
    families iterated smallest-first over the canonical open list, then
    assignments in row-major product order.  Stops after ``budget`` scales
    or ``max_candidates`` assignment candidates, so a prefix of the
    canonical enumeration is what callers see (the enumeration bound)."""
    nonempty = [o for o in space.opens_sorted() if o]
    m = len(nonempty)
    yielded = 0
    examined = 0
    masks = sorted(range(1 << m), key=lambda mk: (bin(mk).count("1"), mk))
    for mask in masks:
        tq_list = [nonempty[i] for i in range(m) if mask >> i & 1]
        tq = frozenset(tq_list)
        allowed = [
            [a for a in tq_list if x in a] for x in space.points
        ]
        choice_lists = []
        for opts in allowed:
            subsets = []
            for k in range(1 << len(opts)):
                subsets.append(
                    frozenset(opts[i] for i in range(len(opts)) if k >> i & 1)
                )
            choice_lists.append(subsets)
        for combo in itertools.product(*choice_lists):
            examined += 1
            if examined > max_candidates:
                return
            assigned: set[PointSet] = set()
            for fam in combo:
                assigned |= fam
            if assigned != tq:
                continue
            yield Scale(space, tq, tuple(combo))
            yielded += 1
            if budget is not None and yielded >= budget:
                return


def count_scales(space: FiniteSpace, cap: int = 200_000) -> int:
    return sum(1 for _ in enumerate_scales(space, max_candidates=cap))
