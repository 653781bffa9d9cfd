"""Finite-world continuity checks: mode semantics, the closed-set
characterization, composition bookkeeping, and constancy profiles.

A pinned instance separates local from global strong continuity: the
domain is the two-point space with one open singleton carrying its
trivial scale, the codomain is the discrete three-point space with a
scale that assigns {1,2} only to the off-image point 2, so the preimage
{1} of {1,2} is never assigned, while every pointwise demand passes.
"""

import pytest

from scaletop.finite_topology import FiniteSpace, discrete_space, sierpinski
from scaletop.continuity import (
    ALL_MODES,
    ComposedScaledMap,
    ContinuityMode,
    ScaledMap,
    check_closed_characterization,
    check_continuity,
    compose_scaled,
    constancy_profile,
    middle_refines,
    parse_mode,
    replay_certificate,
)
from scaletop.scales import Scale, p_structure, trivial_scale


def fz(*sets):
    return frozenset(frozenset(s) for s in sets)


def mk_scale(space, tq, *fams) -> Scale:
    return Scale(space, fz(*tq), tuple(fz(*f) for f in fams))


def test_mode_parsing():
    m = parse_mode("local-strong")
    assert m.locus == "local" and m.strength == "strong"
    m2 = parse_mode("at-weak", at_point=1)
    assert m2.locus == "at-point" and m2.at_point == 1
    with pytest.raises(ValueError):
        parse_mode("sideways")
    with pytest.raises(ValueError):
        ContinuityMode(locus="at-point")


def test_identity_with_trivial_scales_holds_everywhere():
    for space in (sierpinski(), discrete_space(2)):
        t = trivial_scale(space)
        ident = ScaledMap(tuple(space.points), t, t)
        for mode in ALL_MODES:
            assert check_continuity(ident, mode).holds
        for x in space.points:
            assert check_continuity(
                ident, ContinuityMode("strong", "at-point", at_point=x)
            ).holds


def test_constant_map_with_condition_f_domain():
    # With the whole carrier assigned everywhere, the constant map's
    # preimages (always the carrier) are assigned at every point.
    space = sierpinski()
    dom = mk_scale(
        space,
        [(0, 1)],
        [(0, 1)],
        [(0, 1)],
    )
    cod = trivial_scale(space)
    const = ScaledMap((0, 0), dom, cod)
    for x in space.points:
        assert check_continuity(
            const, ContinuityMode("strong", "at-point", at_point=x)
        ).holds


def pinned_local_vs_global():
    dom_space = sierpinski()
    cod_space = discrete_space(3)
    q = trivial_scale(dom_space)
    r = mk_scale(
        cod_space,
        [(0,), (0, 1), (2,), (1, 2)],
        [(0,)],
        [(0, 1)],
        [(2,), (1, 2)],
    )
    return ScaledMap((0, 1), q, r)


def test_local_strong_without_global_strong():
    f = pinned_local_vs_global()
    assert check_continuity(f, ContinuityMode("strong", "local")).holds
    verdict = check_continuity(f, ContinuityMode("strong", "global"))
    assert not verdict.holds
    assert verdict.certificate == {"r_open": (1, 2), "preimage": (1,)}
    assert replay_certificate(f, verdict.mode, verdict.certificate)


def test_empty_preimage_is_vacuous_globally():
    # Image misses codomain point 1; its singleton imposes no constraint.
    x_space = FiniteSpace.of(1, [(), (0,)])
    y_space = discrete_space(2)
    f = ScaledMap((0,), trivial_scale(x_space), trivial_scale(y_space))
    assert check_continuity(f, ContinuityMode("strong", "global")).holds
    assert check_continuity(f, ContinuityMode("weak", "global")).holds
    assert check_closed_characterization(f).holds


def test_closed_characterization_tracks_global_strong():
    f = pinned_local_vs_global()
    assert not check_closed_characterization(f).holds
    g = ScaledMap(
        (0, 1),
        trivial_scale(sierpinski()),
        trivial_scale(sierpinski()),
    )
    assert check_closed_characterization(g).holds


def test_strong_implies_weak_on_samples():
    f = pinned_local_vs_global()
    for mode in ALL_MODES:
        if mode.strength == "strong":
            weak_mode = ContinuityMode(
                "weak", mode.locus, mode.trivial_domain, mode.at_point
            )
            if check_continuity(f, mode).holds:
                assert check_continuity(f, weak_mode).holds


def test_compose_carries_middle_scales():
    space = discrete_space(2)
    t = trivial_scale(space)
    ident = ScaledMap((0, 1), t, t)
    swap = ScaledMap((1, 0), t, t)
    comp = compose_scaled(swap, ident)
    assert isinstance(comp, ComposedScaledMap)
    assert comp.table == (1, 0)
    assert comp.middle_hypothesis()  # trivial middle scales coincide
    sparse = mk_scale(space, [(0,), (1,)], [(0,)], [(1,)])
    f = ScaledMap((0, 1), t, sparse)
    g = ScaledMap((1, 0), t, t)
    comp2 = compose_scaled(g, f)
    # g's domain scale (trivial) is not pointwise inside f's codomain
    # scale (sparse), so the refinement hypothesis fails.
    assert not comp2.middle_hypothesis()
    assert middle_refines(sparse, t)
    into_sierpinski = ScaledMap(
        (0,),
        trivial_scale(FiniteSpace.of(1, [(), (0,)])),
        trivial_scale(sierpinski()),
    )
    with pytest.raises(ValueError):
        compose_scaled(f, into_sierpinski)  # middle spaces differ


def test_composition_preserves_continuity_when_hypothesis_holds():
    space = sierpinski()
    t = trivial_scale(space)
    f = ScaledMap((0, 1), t, t)
    g = ScaledMap((0, 0), t, t)
    comp = compose_scaled(g, f)
    assert comp.middle_hypothesis()
    for mode in ALL_MODES:
        if check_continuity(f, mode).holds and check_continuity(g, mode).holds:
            assert check_continuity(comp, mode).holds


def test_constancy_profile_examples():
    d2 = discrete_space(2)
    t = trivial_scale(d2)
    const = ScaledMap((0, 0), t, t)
    prof = constancy_profile(const)
    assert prof.locally_constant_at == frozenset({0, 1})
    assert prof.constant_on_components

    ident = ScaledMap((0, 1), t, t)
    prof2 = constancy_profile(ident)
    assert prof2.locally_constant_at == frozenset({0, 1})
    assert prof2.constant_on_components  # singleton components

    indiscrete = FiniteSpace.of(2, [(), (0, 1)])
    ti = trivial_scale(indiscrete)
    ident_i = ScaledMap((0, 1), ti, trivial_scale(d2))
    prof3 = constancy_profile(ident_i)
    assert prof3.locally_constant_at == frozenset()
    assert not prof3.constant_on_components


def test_weak_at_point_vs_principal_domain():
    # With a principal domain scale generated by the whole carrier and a
    # discrete codomain, weak continuity at a point is exactly constancy
    # on the chosen neighborhood.
    space = discrete_space(2)
    ps = p_structure(space, [frozenset({0, 1}), frozenset({0, 1})])
    cod = trivial_scale(discrete_space(2))
    ident = ScaledMap((0, 1), ps, cod)
    verdict = check_continuity(ident, ContinuityMode("weak", "at-point", at_point=0))
    assert not verdict.holds  # identity is not constant on {0,1}
    const = ScaledMap((1, 1), ps, cod)
    assert check_continuity(const, ContinuityMode("weak", "at-point", at_point=0)).holds
