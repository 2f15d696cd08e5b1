"""The b-topology of a finite T0 space.

The b-topology on X is generated by the base {U n cl({x}) : x in U open}.
Its closure operator is decided pointwise: y lies in the b-closure of A
iff every basic b-open set containing y meets A.  Every basic set
containing y contains up[y] & down[y] (take U any open with y in U, so
up[y] <= U, and x with y <= x, so down[y] <= down[x]), and that witness
set is itself basic (U = up[y], x = y).  Membership therefore reduces to
one intersection test against the minimal basic neighborhood; nothing
about the result is assumed in advance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAChainPair
from .finite_space import (
    FiniteSpace,
    PointSet,
    all_opens,
    from_opens,
    iter_bits,
)


def b_basic_opens(space: FiniteSpace) -> tuple[PointSet, ...]:
    """The generating base {U n cl({x}) : x in U}, deduplicated."""
    base = set()
    for u in all_opens(space):
        for x in iter_bits(u):
            base.add(u & space.down[x])
    base.discard(0)
    return tuple(sorted(base))


def b_closure(space: FiniteSpace, a: PointSet) -> PointSet:
    out = 0
    for y in range(space.n):
        min_basic = space.up[y] & space.down[y]
        if min_basic & a:
            out |= 1 << y
    return out


def b_closure_literal(space: FiniteSpace, a: PointSet) -> PointSet:
    """Reference implementation quantifying over every basic set;
    materializes the base, so only usable under the opens cap."""
    base = b_basic_opens(space)
    out = 0
    for y in range(space.n):
        bit = 1 << y
        if all(b & a for b in base if b & bit):
            out |= bit
    return out


def is_b_closed(space: FiniteSpace, a: PointSet) -> bool:
    return b_closure(space, a) == a


def is_b_dense(space: FiniteSpace, a: PointSet) -> bool:
    return b_closure(space, a) == space.full


def b_space(space: FiniteSpace) -> FiniteSpace:
    """The space bX carried by X with the b-topology as its topology."""
    return from_opens(space.n, b_basic_opens(space))


@dataclass(frozen=True)
class ChainPairEvidence:
    pair: PointSet
    b_closed: bool
    b_closure_of_pair: PointSet
    homeomorphism_to_sierpinski: tuple[int, ...] | None

    @property
    def holds(self) -> bool:
        return self.b_closed and self.homeomorphism_to_sierpinski is not None


def chain_pair_is_b_closed_sigma2(space: FiniteSpace, x1: int, x2: int) -> ChainPairEvidence:
    """For x1 < x2, check that {x1, x2} is b-closed and that the subspace
    on it is homeomorphic to the Sierpinski space; returns the evidence."""
    if x1 == x2 or not space.leq(x1, x2):
        raise NotAChainPair(f"need x1 < x2, got {x1}, {x2}")
    from .constructions import find_homeomorphism, subspace
    from .finite_space import sigma2

    pair = (1 << x1) | (1 << x2)
    cl_b = b_closure(space, pair)
    sub = subspace(space, pair)
    homeo = find_homeomorphism(sub.space, sigma2())
    return ChainPairEvidence(
        pair=pair,
        b_closed=cl_b == pair,
        b_closure_of_pair=cl_b,
        homeomorphism_to_sierpinski=None if homeo is None else homeo.table,
    )
