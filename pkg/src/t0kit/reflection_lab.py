"""Reflections of finite T0 spaces into property-defined subclasses.

A class of spaces is given as a decidable predicate.  The module offers
two sobrification routes (irreducible-closed-sets and b-closure of the
canonical image), a k-closure operator inside an ambient space, bounded
checks of the Keimel-Lawson conditions K1-K4 and of the closure
properties (productive, b-closed-hereditary, has equalizers), and a
bounded universal-property verifier.  All quantifiers over "all spaces"
are bounded by an explicit carrier size recorded in the result.

Within the finite testbed every space is sober, so K1 bounded at n says
exactly "K contains every space with at most n points"; classes excluding
some finite space fail it, which is the mechanism behind the negative
controls."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable

from .b_topology import b_closure, is_b_closed
from .constructions import (
    SpaceMap,
    canonical_embedding,
    compose,
    equalizer,
    image_mask,
    preimage,
    product,
    space_map,
    subspace,
)
from .enumeration import continuous_maps_list, relabel_space, spaces_up_to
from .errors import EmptyCarrier
from .finite_space import (
    FiniteSpace,
    PointSet,
    all_opens,
    from_opens,
    irreducible_closed_sets,
    is_subset,
    is_T1,
    iter_bits,
    points_of,
)
from .properties import (
    PropertyReport,
    is_co_sober,
    is_k_bounded_sober,
    is_open_well_filtered,
    is_sober,
    is_strong_d,
)


@dataclass(frozen=True)
class ClassPredicate:
    name: str
    member: Callable[[FiniteSpace], bool]
    description: str = ""

    def __call__(self, space: FiniteSpace) -> bool:
        return bool(self.member(space))


def _order_connected(space: FiniteSpace) -> bool:
    """Connected comparability graph (zigzag connectedness)."""
    reach = 1
    frontier = [0]
    while frontier:
        x = frontier.pop()
        nbrs = space.up[x] | space.down[x]
        new = nbrs & ~reach
        reach |= new
        frontier.extend(iter_bits(new))
    return reach == space.full


REGISTRY: dict[str, ClassPredicate] = {
    p.name: p
    for p in [
        ClassPredicate("sober", lambda sp: is_sober(sp).holds,
                       "irreducible closed sets are point closures"),
        ClassPredicate("co_sober", lambda sp: is_co_sober(sp).holds,
                       "k-irreducible compact saturated sets are point saturations"),
        ClassPredicate("strong_d", lambda sp: is_strong_d(sp).holds,
                       "directed up-set intersections are approximated pointwise"),
        ClassPredicate("k_bounded_sober", lambda sp: is_k_bounded_sober(sp).holds,
                       "irreducible closed sets with a sup are closures of it"),
        ClassPredicate("open_well_filtered", lambda sp: is_open_well_filtered(sp).holds,
                       "way-below-filtered open families are well behaved"),
        ClassPredicate("t1", is_T1, "discrete order"),
        ClassPredicate("all_t0", lambda sp: True, "every finite T0 space"),
        ClassPredicate("at_most_two_points", lambda sp: sp.n <= 2,
                       "carrier has at most two points (not productive)"),
        ClassPredicate("at_least_two_points", lambda sp: sp.n >= 2,
                       "carrier has at least two points (not intersection-stable)"),
        ClassPredicate("order_connected", _order_connected,
                       "comparability graph is connected (not hereditary)"),
    ]
}


@dataclass(frozen=True)
class SobrificationResult:
    space: FiniteSpace
    unit: SpaceMap
    route: str
    details: dict[str, Any] = field(default_factory=dict)


def sobrify_irr(space: FiniteSpace) -> SobrificationResult:
    """Point the result at the irreducible closed sets; opens are the
    sets of irreducibles meeting a given open.  Irreducibility makes that
    family a topology on the nose, so strict construction validates it."""
    irr = irreducible_closed_sets(space)
    index = {f: i for i, f in enumerate(irr)}
    lifted = []
    for u in all_opens(space):
        m = 0
        for i, f in enumerate(irr):
            if f & u:
                m |= 1 << i
        lifted.append(m)
    result = from_opens(len(irr), lifted, strict=True)
    unit = space_map(space, result, tuple(index[space.down[x]] for x in range(space.n)))
    return SobrificationResult(
        space=result,
        unit=unit,
        route="irreducible-closed-sets",
        details={"irreducible_closed_count": len(irr)},
    )


def sobrify_bclosure(space: FiniteSpace) -> SobrificationResult:
    """Embed canonically into the Sierpinski power over the nonempty
    opens, take the b-closure of the image, and corestrict."""
    emb, power = canonical_embedding(space).materialize()
    image = image_mask(emb)
    closed = b_closure(power.space, image)
    sub = subspace(power.space, closed)
    pos = {p: i for i, p in enumerate(sub.points)}
    unit = space_map(space, sub.space, tuple(pos[emb.table[x]] for x in range(space.n)))
    return SobrificationResult(
        space=sub.space,
        unit=unit,
        route="b-closure-of-canonical-image",
        details={
            "power_exponent": len(canonical_embedding(space).opens),
            "image_size": image.bit_count(),
            "b_closure_size": closed.bit_count(),
        },
    )


def k_closure(ambient: FiniteSpace, a: PointSet, predicate: ClassPredicate) -> PointSet:
    """Intersection of all carriers B with a <= B whose subspace lies in
    the class.  When no such carrier exists the intersection over the
    empty family is the whole ambient carrier."""
    if a == 0:
        raise EmptyCarrier("k-closure of the empty set is not defined here")
    out = ambient.full
    for b in range(ambient.full + 1):
        if is_subset(a, b) and b != 0 and predicate(subspace(ambient, b).space):
            out &= b
    return out


@dataclass(frozen=True)
class ReflectionCheck:
    holds: bool
    verified_objects: int
    test_bound: int
    witness: dict[str, Any] | None = None


def is_reflection(eta: SpaceMap, predicate: ClassPredicate, test_bound: int = 4) -> ReflectionCheck:
    """Bounded universal property: the codomain is in the class and every
    map from the domain into a class member on at most test_bound points
    factors through eta exactly once."""
    x, y = eta.dom, eta.cod
    if not predicate(y):
        return ReflectionCheck(False, 0, test_bound,
                               {"reason": "target is not in the class"})
    verified = 0
    for z in spaces_up_to(test_bound):
        if not predicate(z):
            continue
        extensions = continuous_maps_list(y, z)
        for f in continuous_maps_list(x, z):
            matching = [g for g in extensions if compose(g, eta).table == f.table]
            if len(matching) != 1:
                return ReflectionCheck(
                    False,
                    verified,
                    test_bound,
                    {
                        "test_object_up": [list(points_of(u)) for u in z.up],
                        "map": list(f.table),
                        "extension_count": len(matching),
                    },
                )
            verified += 1
    return ReflectionCheck(True, verified, test_bound)


@dataclass(frozen=True)
class ReflectionResult:
    found: bool
    predicate_name: str
    space: FiniteSpace | None
    unit: SpaceMap | None
    route: str
    check: ReflectionCheck | None
    details: dict[str, Any] = field(default_factory=dict)


def construct_reflection(
    space: FiniteSpace,
    predicate: ClassPredicate,
    target_bound: int = 4,
    test_bound: int = 4,
) -> ReflectionResult:
    """Find the reflection of one space into a class, verified against
    all class members with at most test_bound points.

    Candidates in order: the identity (when the space is already a
    member), the irreducible-closed-sets sobrification, then every map
    into every class member with at most target_bound points.  The first
    candidate passing the bounded universal property wins."""

    def finish(eta: SpaceMap, route: str) -> ReflectionResult | None:
        check = is_reflection(eta, predicate, test_bound)
        if not check.holds:
            return None
        return ReflectionResult(
            found=True,
            predicate_name=predicate.name,
            space=eta.cod,
            unit=eta,
            route=route,
            check=check,
        )

    if predicate(space):
        got = finish(space_map(space, space, tuple(range(space.n))), "identity")
        if got is not None:
            return got
    sob = sobrify_irr(space)
    if predicate(sob.space):
        got = finish(sob.unit, sob.route)
        if got is not None:
            return got
    for y in spaces_up_to(target_bound):
        if not predicate(y):
            continue
        for eta in continuous_maps_list(space, y):
            got = finish(eta, "bounded-search")
            if got is not None:
                return got
    return ReflectionResult(
        found=False,
        predicate_name=predicate.name,
        space=None,
        unit=None,
        route="bounded-search",
        check=None,
        details={"target_bound": target_bound, "test_bound": test_bound},
    )


def _meet_closure(carriers: list[PointSet]) -> dict[PointSet, tuple[PointSet, ...]]:
    """All intersections of subfamilies, each tagged with a generating
    family (for witnesses).  Output-sensitive pairwise closure."""
    gen: dict[PointSet, tuple[PointSet, ...]] = {c: (c,) for c in carriers}
    frontier = list(carriers)
    while frontier:
        b = frontier.pop()
        for c in carriers:
            m = b & c
            if m not in gen:
                gen[m] = tuple(sorted(set(gen[b] + (c,))))
                frontier.append(m)
    return gen


def check_K_conditions(predicate: ClassPredicate, n_max: int = 3) -> dict[str, PropertyReport]:
    """Bounded Keimel-Lawson conditions.

    K1: every space (all are sober here) up to n_max is a member.
    K2: membership is relabeling-invariant.
    K3: intersections of member subspaces of a member-independent ambient
        stay members (empty intersections exempt, counted).
    K4: preimages of member subspaces under continuous maps are members
        (empty preimages exempt, counted)."""
    reports: dict[str, PropertyReport] = {}

    bad = None
    checked = 0
    for z in spaces_up_to(n_max):
        checked += 1
        if not predicate(z):
            bad = {"sober_space_up": [list(points_of(u)) for u in z.up]}
            break
    reports["K1"] = PropertyReport(
        "K1_contains_all_sober", bad is None, f"exhaustive<= {n_max}", bad,
        {"spaces_checked": checked},
    )

    bad = None
    checked = 0
    for z in spaces_up_to(n_max):
        base = predicate(z)
        for perm in itertools.permutations(range(z.n)):
            if predicate(relabel_space(z, perm)) != base:
                bad = {"space_up": [list(points_of(u)) for u in z.up],
                       "relabeling": list(perm)}
                break
            checked += 1
        if bad:
            break
    reports["K2"] = PropertyReport(
        "K2_homeomorphism_invariant", bad is None, f"exhaustive<= {n_max}", bad,
        {"relabelings_checked": checked},
    )

    bad = None
    checked = 0
    skipped_empty = 0
    for z in spaces_up_to(n_max):
        member_carriers = [
            b for b in range(1, z.full + 1) if predicate(subspace(z, b).space)
        ]
        for inter, family in _meet_closure(member_carriers).items():
            if inter == 0:
                skipped_empty += 1
                continue
            checked += 1
            if not predicate(subspace(z, inter).space):
                bad = {
                    "ambient_up": [list(points_of(u)) for u in z.up],
                    "family": [list(points_of(c)) for c in family],
                    "intersection": list(points_of(inter)),
                }
                break
        if bad:
            break
    reports["K3"] = PropertyReport(
        "K3_member_subspace_intersections", bad is None, f"exhaustive<= {n_max}", bad,
        {"intersections_checked": checked, "empty_intersections_skipped": skipped_empty},
    )

    bad = None
    checked = 0
    skipped_empty = 0
    for zx in spaces_up_to(n_max):
        for zy in spaces_up_to(n_max):
            member_subs = [
                b for b in range(1, zy.full + 1) if predicate(subspace(zy, b).space)
            ]
            for f in continuous_maps_list(zx, zy):
                for b in member_subs:
                    pre = preimage(f, b)
                    if pre == 0:
                        skipped_empty += 1
                        continue
                    checked += 1
                    if not predicate(subspace(zx, pre).space):
                        bad = {
                            "dom_up": [list(points_of(u)) for u in zx.up],
                            "cod_up": [list(points_of(u)) for u in zy.up],
                            "map": list(f.table),
                            "member_subspace": list(points_of(b)),
                            "preimage": list(points_of(pre)),
                        }
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    reports["K4"] = PropertyReport(
        "K4_preimages_of_member_subspaces", bad is None, f"exhaustive<= {n_max}", bad,
        {"preimages_checked": checked, "empty_preimages_skipped": skipped_empty},
    )
    return reports


def check_closure_properties(predicate: ClassPredicate, n_max: int = 3) -> dict[str, PropertyReport]:
    """Bounded closure properties from the reflectivity criterion:
    productive (binary products), b-closed-hereditary, has equalizers
    (the subspace equalizer of member-valued parallel pairs is a member;
    empty equalizers exempt, counted)."""
    reports: dict[str, PropertyReport] = {}
    members = [z for z in spaces_up_to(n_max) if predicate(z)]

    bad = None
    checked = 0
    for a in members:
        for b in members:
            prod = product([a, b])
            checked += 1
            if not predicate(prod.space):
                bad = {
                    "left_up": [list(points_of(u)) for u in a.up],
                    "right_up": [list(points_of(u)) for u in b.up],
                    "product_points": prod.space.n,
                }
                break
        if bad:
            break
    reports["productive"] = PropertyReport(
        "productive", bad is None, f"exhaustive<= {n_max}", bad,
        {"products_checked": checked, "members": len(members)},
    )

    bad = None
    checked = 0
    for z in members:
        for b in range(1, z.full + 1):
            if not is_b_closed(z, b):
                continue
            checked += 1
            if not predicate(subspace(z, b).space):
                bad = {
                    "space_up": [list(points_of(u)) for u in z.up],
                    "b_closed_subset": list(points_of(b)),
                }
                break
        if bad:
            break
    reports["b_closed_hereditary"] = PropertyReport(
        "b_closed_hereditary", bad is None, f"exhaustive<= {n_max}", bad,
        {"subspaces_checked": checked},
    )

    bad = None
    checked = 0
    skipped_empty = 0
    for a in members:
        for b in members:
            maps = continuous_maps_list(a, b)
            for f in maps:
                for g in maps:
                    e = equalizer(f, g)
                    if e == 0:
                        skipped_empty += 1
                        continue
                    checked += 1
                    if not predicate(subspace(a, e).space):
                        bad = {
                            "dom_up": [list(points_of(u)) for u in a.up],
                            "cod_up": [list(points_of(u)) for u in b.up],
                            "f": list(f.table),
                            "g": list(g.table),
                            "equalizer": list(points_of(e)),
                        }
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    reports["has_equalizers"] = PropertyReport(
        "has_equalizers", bad is None, f"exhaustive<= {n_max}", bad,
        {"equalizers_checked": checked, "empty_equalizers_skipped": skipped_empty},
    )
    return reports
