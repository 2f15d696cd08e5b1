"""Exact algebra for the cofinite topology on the positive integers.

The carrier is {1, 2, 3, ...}.  Every finite-or-cofinite subset is a
CofiniteSet; the class is closed under union, intersection and
complement, and containment is decidable, so quantifiers over opens
reduce to support arithmetic.  The opens are the empty set and the
cofinite sets.

Two facts carry all the weight here and are stated once:

* every subset is compact (any nonempty open member of a cover already
  omits only finitely many points), hence U is way below V exactly when
  U is contained in V;
* the complements of initial segments form a way-below-filtered family
  of opens whose intersection is empty, yet no member is contained in
  the empty set.  That refutes open well-filteredness, and the
  refutation is checked clause by clause below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .. import caps
from ..errors import BadParams, NotOpen
from ..finite_space import FiniteSpace, antichain
from .verdicts import Verdict, holds, holds_up_to, refuted


def _clean_support(items: Iterable[int]) -> frozenset[int]:
    out = frozenset(int(k) for k in items)
    for k in out:
        if k < 1:
            raise BadParams(f"carrier is the positive integers; got {k}")
    return out


@dataclass(frozen=True)
class CofiniteSet:
    """A finite or cofinite set of positive integers.

    cofinite=False: the set is exactly `support`.
    cofinite=True: the set is everything except `support`.
    The representation is canonical, so equality is structural.
    """

    cofinite: bool
    support: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "support", _clean_support(self.support))

    def __contains__(self, k: int) -> bool:
        return (k in self.support) != self.cofinite and k >= 1

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.support

    @property
    def is_full(self) -> bool:
        return self.cofinite and not self.support

    def complement(self) -> "CofiniteSet":
        return CofiniteSet(not self.cofinite, self.support)

    def __and__(self, other: "CofiniteSet") -> "CofiniteSet":
        a, b = self, other
        if not a.cofinite and not b.cofinite:
            return CofiniteSet(False, a.support & b.support)
        if not a.cofinite:
            return CofiniteSet(False, a.support - b.support)
        if not b.cofinite:
            return CofiniteSet(False, b.support - a.support)
        return CofiniteSet(True, a.support | b.support)

    def __or__(self, other: "CofiniteSet") -> "CofiniteSet":
        return (self.complement() & other.complement()).complement()

    def __sub__(self, other: "CofiniteSet") -> "CofiniteSet":
        return self & other.complement()

    def __le__(self, other: "CofiniteSet") -> bool:
        a, b = self, other
        if not a.cofinite and not b.cofinite:
            return a.support <= b.support
        if not a.cofinite:
            return not (a.support & b.support)
        if not b.cofinite:
            return False
        return b.support <= a.support

    def trace(self, bound: int) -> frozenset[int]:
        """Members that are at most `bound` (for finite cross-checks)."""
        return frozenset(k for k in range(1, bound + 1) if k in self)

    def __repr__(self) -> str:
        body = "{" + ",".join(map(str, sorted(self.support))) + "}"
        return f"(N+ minus {body})" if self.cofinite else body


def finite_set(items: Iterable[int]) -> CofiniteSet:
    return CofiniteSet(False, frozenset(items))


def cofinite_excluding(items: Iterable[int]) -> CofiniteSet:
    return CofiniteSet(True, frozenset(items))


def empty_set() -> CofiniteSet:
    return CofiniteSet(False, frozenset())


def full_set() -> CofiniteSet:
    return CofiniteSet(True, frozenset())


@dataclass(frozen=True)
class IndexedFamily:
    """A family of sets indexed by the integers from `start` on.

    `shape` names the structural pattern the checkers can reason about
    exactly: "initial_segment_complements" promises member(k) is the
    complement of {1..k}; "constant" promises all members are equal.
    Anything else is treated as opaque and only checked up to a bound.
    """

    name: str
    member: Callable[[int], CofiniteSet]
    start: int = 1
    shape: str = "generic"

    def members(self, count: int) -> list[CofiniteSet]:
        return [self.member(k) for k in range(self.start, self.start + count)]


def initial_segment_complements() -> IndexedFamily:
    return IndexedFamily(
        "complements of initial segments",
        lambda n: cofinite_excluding(range(1, n + 1)),
        start=1,
        shape="initial_segment_complements",
    )


def constant_family(value: CofiniteSet, name: str = "constant family") -> IndexedFamily:
    return IndexedFamily(name, lambda n: value, start=1, shape="constant")


class CofiniteNat:
    """The positive integers with the cofinite topology."""

    name = "nat_cofinite"

    def contains(self, k: int) -> bool:
        return k >= 1

    def is_open(self, s: CofiniteSet) -> bool:
        return s.is_empty or s.cofinite

    def is_closed(self, s: CofiniteSet) -> bool:
        return self.is_open(s.complement())

    def closure(self, s: CofiniteSet) -> CofiniteSet:
        return s if not s.cofinite else full_set()

    def closure_of_point(self, k: int) -> CofiniteSet:
        if k < 1:
            raise BadParams("points are positive integers")
        return finite_set([k])

    def leq(self, x: int, y: int) -> bool:
        """Specialization order; the space is T1, so it is equality."""
        return x == y

    def way_below(self, u: CofiniteSet, v: CofiniteSet) -> bool:
        """Way-below between opens.

        Every subset is compact: a nonempty member of an open cover
        omits only finitely many points and finitely many further
        members pick those up.  Compact-below coincides with inclusion,
        so this is exact containment.  Cross-checked against the
        literal finite computation on truncations in the tests.
        """
        if not self.is_open(u) or not self.is_open(v):
            raise NotOpen("way-below is only defined between opens here")
        return u <= v

    def truncate(self, bound: int) -> FiniteSpace:
        """Trace on {1..bound}: discrete, since any subset of a finite
        piece extends to a cofinite set."""
        if bound < 1:
            raise BadParams("truncation bound must be at least 1")
        caps.guard(bound, caps.truncate_cap(), "truncation size")
        with caps.scoped(carrier=max(bound, caps.DEFAULT_CARRIER_CAP)):
            return antichain(bound)


def check_owf_refutation(
    space: CofiniteNat,
    family: IndexedFamily,
    u: CofiniteSet,
    bound: int = 32,
) -> Verdict:
    """Decide the open-well-filteredness condition for one certificate.

    The certificate is a way-below-filtered family F of opens and an
    open u.  The condition says: if the intersection of F lands inside
    u then some member already does.  Returns Refuted exactly when the
    algebra proves the intersection is inside u while no member is;
    returns Holds when a member lands inside u (no refutation); raises
    BadParams when the family fails its own side conditions.
    """
    claim = f"open well-filtered condition for {family.name}"
    sample = family.members(bound)
    indices = list(range(family.start, family.start + bound))

    # (a) members must be opens
    for k, m in zip(indices, sample):
        if not space.is_open(m):
            raise BadParams(f"member {k} of {family.name} is not open")

    # (b) way-below-filtered: a selector member below each sampled pair
    selectors: dict[tuple[int, int], int] = {}
    probe = family.members(2 * bound)
    probe_idx = list(range(family.start, family.start + 2 * bound))
    for i in range(bound):
        for j in range(i, bound):
            meet = sample[i] & sample[j]
            found = None
            for k, m in zip(probe_idx, probe):
                if space.way_below(m, meet):
                    found = k
                    break
            if found is None:
                raise BadParams(
                    f"{family.name} is not way-below-filtered at the pair "
                    f"({indices[i]}, {indices[j]}) within index bound {probe_idx[-1]}"
                )
            selectors[(indices[i], indices[j])] = found

    # (d) first: does some member land inside u?  Then the condition
    # holds for this certificate, exactly.
    for k, m in zip(indices, sample):
        if m <= u:
            return holds(
                claim,
                "exact-cofinite-algebra",
                details={
                    "containing_member_index": k,
                    "containing_member": repr(m),
                    "u": repr(u),
                },
            )
    member_inside_possible = None
    if family.shape == "initial_segment_complements" and u.cofinite:
        # support grows through every initial segment, so the member
        # indexed by max(excluded points of u) is inside u
        k0 = max(u.support, default=0) or 1
        m0 = family.member(k0)
        if m0 <= u:
            return holds(
                claim,
                "exact-cofinite-algebra",
                details={"containing_member_index": k0, "u": repr(u)},
            )
        member_inside_possible = False
    if u.is_empty:
        # a member inside the empty set must be empty; cofinite members
        # never are, so the sampled emptiness checks are conclusive
        if all(not m.is_empty for m in sample):
            member_inside_possible = False
    if not u.cofinite and not u.is_empty:
        # finite nonempty u cannot contain a cofinite member; a finite
        # member inside u would have been caught in the sampled scan
        if all(m.cofinite for m in sample):
            member_inside_possible = False

    # (c) the intersection: partial intersections only shrink, so a
    # partial result inside u is conclusive
    partial = sample[0]
    for m in sample[1:]:
        partial = partial & m
    intersection_inside = None
    if partial <= u:
        intersection_inside = True
        intersection_note = f"partial intersection of {bound} members is inside u"
    elif family.shape == "initial_segment_complements":
        # every point x is excluded by member x: x sits in the initial
        # segment {1..x}, so the full intersection is empty
        witnessed = all(x not in family.member(x) for x in range(1, bound + 1))
        if witnessed:
            intersection_inside = True
            intersection_note = (
                "every point x is outside member x (initial segment {1..x} "
                "contains x), so the full intersection is empty"
            )
    elif family.shape == "constant":
        intersection_inside = sample[0] <= u
        intersection_note = "constant family: intersection equals the member"

    if intersection_inside is None or member_inside_possible is None:
        return holds_up_to(
            claim,
            bound,
            "bounded-scan",
            details={
                "reason": "family shape is opaque; only sampled checks ran",
                "partial_intersection": repr(partial),
            },
        )
    if not intersection_inside:
        return holds(
            claim,
            "exact-cofinite-algebra",
            details={"reason": "intersection is not inside u", "u": repr(u)},
        )

    return refuted(
        claim,
        "exact-cofinite-algebra",
        witness={
            "family": family.name,
            "family_members_sampled": [repr(m) for m in sample[:6]],
            "filtered_selectors_sampled": {
                f"{i},{j}": k for (i, j), k in list(selectors.items())[:6]
            },
            "intersection": intersection_note,
            "u": repr(u),
            "no_member_inside": "members are cofinite, hence nonempty, "
            "hence never inside the empty set" if u.is_empty else "sampled",
        },
        details={"sample_bound": bound},
    )


def check_owf(space: CofiniteNat | None = None, bound: int = 32) -> Verdict:
    """The headline run: the initial-segment family against the empty
    open refutes open well-filteredness of the cofinite space."""
    space = space or CofiniteNat()
    inner = check_owf_refutation(space, initial_segment_complements(), empty_set(), bound)
    if inner.kind != "refuted":
        return inner
    return refuted(
        "open well-filtered",
        inner.method,
        witness=inner.witness,
        details=dict(inner.details, space=space.name),
    )
