"""Finite T0 spaces as bitmask-backed order structures.

A finite topological space is determined by its specialization preorder
(x <= y iff x lies in the closure of {y}); T0 means the preorder is a
partial order, and the opens are exactly the up-sets.  A space is stored
as two tuples of bitmask ints: up[x] is the minimal open neighborhood of
x (the points above x) and down[x] is the closure of {x}.

Point sets everywhere are ints with bit i standing for point i.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import caps
from .errors import CapExceeded, EmptyCarrier, NotAPartialOrder, NotATopology, NotT0

PointSet = int


def mask_of(points: Iterable[int]) -> PointSet:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def points_of(mask: PointSet) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def iter_bits(mask: PointSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_subset(a: PointSet, b: PointSet) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class FiniteSpace:
    """Immutable, hashable; all other operations are module functions."""

    n: int
    up: tuple[PointSet, ...]
    down: tuple[PointSet, ...]

    @property
    def full(self) -> PointSet:
        return (1 << self.n) - 1

    def leq(self, x: int, y: int) -> bool:
        """Specialization order: x in cl({y})."""
        return (self.up[x] >> y) & 1 == 1

    def is_open(self, a: PointSet) -> bool:
        return all(is_subset(self.up[x], a) for x in iter_bits(a))

    def is_closed(self, a: PointSet) -> bool:
        return self.is_open(self.full & ~a)

    def complement(self, a: PointSet) -> PointSet:
        return self.full & ~a


def _check_carrier(n: int) -> None:
    if n <= 0:
        raise EmptyCarrier("carrier must be nonempty")
    caps.guard(n, caps.carrier_cap(), "carrier size")


def from_order(n: int, pairs: Iterable[tuple[int, int]]) -> FiniteSpace:
    """Space whose opens are the up-sets of the given partial order.

    pairs lists x <= y facts; reflexive pairs are implied.  Antisymmetry
    and transitivity are checked, not repaired.
    """
    _check_carrier(n)
    up = [1 << x for x in range(n)]
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise NotAPartialOrder(f"pair ({x}, {y}) out of range for carrier {n}")
        up[x] |= 1 << y
    for x in range(n):
        for y in iter_bits(up[x]):
            if y != x and (up[y] >> x) & 1:
                raise NotAPartialOrder(f"antisymmetry fails: {x} <= {y} and {y} <= {x}")
            if not is_subset(up[y], up[x]):
                z = next(iter_bits(up[y] & ~up[x]))
                raise NotAPartialOrder(
                    f"transitivity fails: {x} <= {y} <= {z} but not {x} <= {z}"
                )
    down = _transpose(n, up)
    return FiniteSpace(n, tuple(up), tuple(down))


def from_cover(n: int, pairs: Iterable[tuple[int, int]]) -> FiniteSpace:
    """Like from_order but takes the reflexive-transitive closure of the
    given pairs first; antisymmetry (no cycles) is still checked."""
    _check_carrier(n)
    up = [1 << x for x in range(n)]
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise NotAPartialOrder(f"pair ({x}, {y}) out of range for carrier {n}")
        up[x] |= 1 << y
    changed = True
    while changed:
        changed = False
        for x in range(n):
            m = up[x]
            for y in iter_bits(m):
                m |= up[y]
            if m != up[x]:
                up[x] = m
                changed = True
    return from_order(n, [(x, y) for x in range(n) for y in iter_bits(up[x])])


def _transpose(n: int, up: list[PointSet]) -> list[PointSet]:
    down = [0] * n
    for x in range(n):
        for y in iter_bits(up[x]):
            down[y] |= 1 << x
    return down


def from_opens(n: int, opens: Iterable[PointSet], strict: bool = False) -> FiniteSpace:
    """Space generated by the given open sets.

    The topology is the closure of the input under finite unions and
    intersections, plus the empty and full sets.  With strict=True the
    input (plus empty/full) must already be that closure.  Raises NotT0
    when two points cannot be separated.
    """
    _check_carrier(n)
    full = (1 << n) - 1
    opens = list(opens)
    for u in opens:
        if not 0 <= u <= full:
            raise NotATopology(f"open {u:#x} is not a subset of the carrier")
    up = [full] * n
    for u in opens:
        for x in iter_bits(u):
            up[x] &= u
    seen: dict[PointSet, int] = {}
    for x in range(n):
        if up[x] in seen:
            raise NotT0(f"points {seen[up[x]]} and {x} share every open set")
        seen[up[x]] = x
    down = _transpose(n, up)
    space = FiniteSpace(n, tuple(up), tuple(down))
    if strict:
        generated = set(all_opens(space))
        given = set(opens) | {0, full}
        if generated != given:
            extra = sorted(generated ^ given)
            raise NotATopology(
                f"input family is not a topology; first discrepancy {extra[0]:#x}"
            )
    return space


@functools.lru_cache(maxsize=2048)
def all_opens(space: FiniteSpace) -> tuple[PointSet, ...]:
    """All open sets, i.e. all up-sets, enumerated output-sensitively.

    Every up-set is a union of minimal neighborhoods, so closing {0}
    under s -> s | up[x] reaches each open once.  Cost is O(|opens| * n)
    set operations, never 2^n, but the count itself can be 2^n: guarded.
    """
    limit = 1 << min(space.n, caps.carrier_cap())
    found = {0}
    frontier = [0]
    while frontier:
        s = frontier.pop()
        for x in range(space.n):
            t = s | space.up[x]
            if t not in found:
                found.add(t)
                frontier.append(t)
                if len(found) > limit:
                    raise CapExceeded(f"open-set count exceeds {limit}")
    return tuple(sorted(found))


def all_closed_sets(space: FiniteSpace) -> tuple[PointSet, ...]:
    full = space.full
    return tuple(sorted(full & ~u for u in all_opens(space)))


def closure(space: FiniteSpace, a: PointSet) -> PointSet:
    """Smallest closed superset; closed sets are down-sets."""
    m = 0
    for x in iter_bits(a):
        m |= space.down[x]
    return m


def saturate(space: FiniteSpace, a: PointSet) -> PointSet:
    """Intersection of all opens containing a; equals the up-closure."""
    m = 0
    for x in iter_bits(a):
        m |= space.up[x]
    return m


def interior(space: FiniteSpace, a: PointSet) -> PointSet:
    m = 0
    for x in iter_bits(a):
        if is_subset(space.up[x], a):
            m |= 1 << x
    return m


def min_open_nbhd(space: FiniteSpace, x: int) -> PointSet:
    return space.up[x]


def is_T1(space: FiniteSpace) -> bool:
    """T1 for finite spaces means discrete: order is equality."""
    return all(space.up[x] == 1 << x for x in range(space.n))


def is_compact_saturated(space: FiniteSpace, q: PointSet) -> bool:
    """Every subset of a finite space is compact (any open cover is a
    finite cover already), so only saturation is a real condition."""
    return saturate(space, q) == q


def is_directed(space: FiniteSpace, d: PointSet) -> bool:
    """Nonempty, and every pair has an upper bound inside d."""
    if d == 0:
        return False
    pts = points_of(d)
    for i, x in enumerate(pts):
        for y in pts[i + 1 :]:
            if space.up[x] & space.up[y] & d == 0:
                return False
    return True


def irreducible_closed_sets(space: FiniteSpace) -> tuple[PointSet, ...]:
    """Nonempty closed sets not covered by two closed proper subsets.

    F is irreducible iff F <= C1 | C2 forces F <= C1 or F <= C2 for all
    closed C1, C2; equivalently no pair of closed proper subsets of F
    unions up to F.
    """
    closed = all_closed_sets(space)
    out = []
    for f in closed:
        if f == 0:
            continue
        proper = [c & f for c in closed if c & f != f]
        proper = sorted(set(proper))
        reducible = any(
            c1 | c2 == f for i, c1 in enumerate(proper) for c2 in proper[i:]
        )
        if not reducible:
            out.append(f)
    return tuple(out)


def saturated_sets(space: FiniteSpace) -> tuple[PointSet, ...]:
    """All saturated subsets (fixpoints of saturate, including empty).

    Saturated sets are the up-closed ones, and in a finite space the
    up-closed sets are exactly the opens."""
    return all_opens(space)


# Canonical small spaces.  These come up constantly in tests and in the
# constructions, so they get names.


def sigma2() -> FiniteSpace:
    """Sierpinski space: 0 < 1, opens {}, {1}, {0,1}."""
    return from_order(2, [(0, 1)])


def chain(k: int) -> FiniteSpace:
    return from_order(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def antichain(k: int) -> FiniteSpace:
    return from_order(k, [])


def point() -> FiniteSpace:
    return from_order(1, [])


def v_poset() -> FiniteSpace:
    """Two minimal points 0, 1 under a single top 2."""
    return from_order(3, [(0, 2), (1, 2)])


def lambda_poset() -> FiniteSpace:
    """One bottom 0 under two maximal points 1, 2."""
    return from_order(3, [(0, 1), (0, 2)])
