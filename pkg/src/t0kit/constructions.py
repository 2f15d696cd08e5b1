"""Maps, subspaces, products, Sierpinski powers, equalizers.

Maps between finite spaces are continuous iff they are monotone for the
specialization orders, and that is how they are checked at construction;
the preimage-of-opens characterization is kept alongside as a cross-check
(`is_preimage_continuous`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import caps
from .b_topology import b_closure, is_b_dense
from .errors import (
    EmptyCarrier,
    MismatchedSpaces,
    NotBClosed,
    NotContinuous,
)
from .finite_space import (
    FiniteSpace,
    PointSet,
    all_opens,
    is_subset,
    iter_bits,
    points_of,
    sigma2,
)


@dataclass(frozen=True)
class SpaceMap:
    dom: FiniteSpace
    cod: FiniteSpace
    table: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.table[x]


def space_map(dom: FiniteSpace, cod: FiniteSpace, table: Sequence[int]) -> SpaceMap:
    """Build a continuous map; raises NotContinuous on a monotonicity break."""
    table = tuple(table)
    if len(table) != dom.n or any(not 0 <= v < cod.n for v in table):
        raise MismatchedSpaces(f"table of length {len(table)} does not map {dom.n} points into {cod.n}")
    f = SpaceMap(dom, cod, table)
    bad = monotonicity_break(f)
    if bad is not None:
        x, y = bad
        raise NotContinuous(f"{x} <= {y} but f({x}) = {table[x]} is not below f({y}) = {table[y]}")
    return f


def monotonicity_break(f: SpaceMap) -> tuple[int, int] | None:
    for x in range(f.dom.n):
        for y in iter_bits(f.dom.up[x]):
            if not f.cod.leq(f.table[x], f.table[y]):
                return (x, y)
    return None


def is_monotone(f: SpaceMap) -> bool:
    return monotonicity_break(f) is None


def is_preimage_continuous(f: SpaceMap) -> bool:
    """Literal continuity: preimages of opens are open.  Materializes the
    codomain topology; agreement with is_monotone is a tested invariant."""
    return all(f.dom.is_open(preimage(f, u)) for u in all_opens(f.cod))


def preimage(f: SpaceMap, b: PointSet) -> PointSet:
    m = 0
    for x in range(f.dom.n):
        if (b >> f.table[x]) & 1:
            m |= 1 << x
    return m


def image_mask(f: SpaceMap) -> PointSet:
    m = 0
    for v in f.table:
        m |= 1 << v
    return m


def identity(space: FiniteSpace) -> SpaceMap:
    return SpaceMap(space, space, tuple(range(space.n)))


def compose(g: SpaceMap, f: SpaceMap) -> SpaceMap:
    """g after f."""
    if f.cod != g.dom:
        raise MismatchedSpaces("compose: codomain of the first map is not the domain of the second")
    return SpaceMap(f.dom, g.cod, tuple(g.table[v] for v in f.table))


@dataclass(frozen=True)
class SubspaceResult:
    space: FiniteSpace
    inclusion: SpaceMap
    points: tuple[int, ...]  # points[i] = ambient index of subspace point i

    def to_sub(self, ambient_mask: PointSet) -> PointSet:
        m = 0
        for i, p in enumerate(self.points):
            if (ambient_mask >> p) & 1:
                m |= 1 << i
        return m

    def to_ambient(self, sub_mask: PointSet) -> PointSet:
        m = 0
        for i in iter_bits(sub_mask):
            m |= 1 << self.points[i]
        return m


def subspace(space: FiniteSpace, carrier: PointSet) -> SubspaceResult:
    """Subspace on a nonempty point set, with the inclusion map.

    The trace topology of an Alexandrov space restricts the order, so the
    new up/down masks are the old ones intersected with the carrier."""
    if carrier == 0:
        raise EmptyCarrier("subspace carrier is empty")
    pts = points_of(carrier)
    pos = {p: i for i, p in enumerate(pts)}

    def compress(mask: PointSet) -> PointSet:
        m = 0
        for q in iter_bits(mask & carrier):
            m |= 1 << pos[q]
        return m

    up = tuple(compress(space.up[p]) for p in pts)
    down = tuple(compress(space.down[p]) for p in pts)
    sub = FiniteSpace(len(pts), up, down)
    incl = SpaceMap(sub, space, pts)
    return SubspaceResult(sub, incl, pts)


@dataclass(frozen=True)
class ProductResult:
    space: FiniteSpace
    factors: tuple[FiniteSpace, ...]
    projections: tuple[SpaceMap, ...]

    def index(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.factors):
            raise MismatchedSpaces("coordinate arity mismatch")
        idx = 0
        for c, s in zip(coords, self.factors):
            idx = idx * s.n + c
        return idx

    def coords(self, index: int) -> tuple[int, ...]:
        out = []
        for s in reversed(self.factors):
            index, c = divmod(index, s.n)
            out.append(c)
        return tuple(reversed(out))


def product(factors: Sequence[FiniteSpace]) -> ProductResult:
    """Finite product; the empty product is the one-point space.

    Points are tuples indexed with the first coordinate most significant.
    The product order is componentwise, so up[(a, b)] is built by planting
    a copy of up_B[b] at each slot c * |B| for c in up_A[a]; a plain big-int
    multiply does all slots at once.
    """
    n = 1
    up = [1]
    down = [1]
    for s in factors:
        caps.guard(n * s.n, caps.product_cap(), "product carrier size")
        new_up = []
        new_down = []
        for a in range(n):
            spread_u = 0
            for c in iter_bits(up[a]):
                spread_u |= 1 << (c * s.n)
            spread_d = 0
            for c in iter_bits(down[a]):
                spread_d |= 1 << (c * s.n)
            for b in range(s.n):
                new_up.append(spread_u * s.up[b])
                new_down.append(spread_d * s.down[b])
        n *= s.n
        up, down = new_up, new_down
    space = FiniteSpace(n, tuple(up), tuple(down))
    result = ProductResult(space, tuple(factors), ())
    projections = []
    for k in range(len(factors)):
        table = tuple(result.coords(i)[k] for i in range(n))
        projections.append(SpaceMap(space, factors[k], table))
    return ProductResult(space, tuple(factors), tuple(projections))


@dataclass(frozen=True)
class SierpinskiPower:
    """(Sigma2)^m with a bitcode view: coordinate k of a point is bit k."""

    result: ProductResult
    m: int

    @property
    def space(self) -> FiniteSpace:
        return self.result.space

    def encode(self, bitcode: int) -> int:
        return self.result.index(tuple((bitcode >> k) & 1 for k in range(self.m)))

    def decode(self, index: int) -> int:
        coords = self.result.coords(index)
        code = 0
        for k, v in enumerate(coords):
            code |= v << k
        return code


def sierpinski_power(m: int) -> SierpinskiPower:
    return SierpinskiPower(product([sigma2()] * m), m)


def powerset_scott(m: int) -> FiniteSpace:
    """The powerset of an m-element set under inclusion, as a space.

    Points are subset bitmasks; up-masks (supersets) and down-masks
    (subsets) are filled in by the subset-sum sweep, one bit at a time.
    """
    caps.guard(1 << m, caps.product_cap(), "powerset carrier size")
    size = 1 << m
    up = [1 << s for s in range(size)]
    down = [1 << s for s in range(size)]
    for j in range(m):
        for s in range(size):
            if not (s >> j) & 1:
                up[s] |= up[s | (1 << j)]
            else:
                down[s] |= down[s ^ (1 << j)]
    return FiniteSpace(size, tuple(up), tuple(down))


@dataclass(frozen=True)
class CanonicalEmbedding:
    """The point-separating map x -> (chi_U(x))_U into a Sierpinski power.

    opens fixes the coordinate order; bitcodes[x] has bit k set iff x lies
    in opens[k].  The power itself is materialized on demand (the carrier
    is 2^|opens|, so it sits behind the product cap)."""

    space: FiniteSpace
    opens: tuple[PointSet, ...]
    bitcodes: tuple[int, ...]

    def codomain_leq(self, code1: int, code2: int) -> bool:
        return is_subset(code1, code2)

    def materialize(self) -> tuple[SpaceMap, SierpinskiPower]:
        power = sierpinski_power(len(self.opens))
        table = tuple(power.encode(c) for c in self.bitcodes)
        return space_map(self.space, power.space, table), power


def canonical_embedding(space: FiniteSpace) -> CanonicalEmbedding:
    opens = tuple(u for u in all_opens(space) if u != 0)
    codes = []
    for x in range(space.n):
        code = 0
        for k, u in enumerate(opens):
            if (u >> x) & 1:
                code |= 1 << k
        codes.append(code)
    return CanonicalEmbedding(space, opens, tuple(codes))


def equalizer(f: SpaceMap, g: SpaceMap) -> PointSet:
    if f.dom != g.dom or f.cod != g.cod:
        raise MismatchedSpaces("equalizer needs a parallel pair")
    m = 0
    for x in range(f.dom.n):
        if f.table[x] == g.table[x]:
            m |= 1 << x
    return m


def closed_pair_representation(space: FiniteSpace, e: PointSet) -> tuple[tuple[PointSet, PointSet], ...]:
    """Open pairs (U, V) with E <= U | ~V whose intersection of U | ~V
    equals E; exists exactly when E is b-closed.  Greedy: a pair is kept
    only if it strictly shrinks the running intersection, so at most one
    pair per removed point."""
    if b_closure(space, e) != e:
        raise NotBClosed(f"{points_of(e)} is not b-closed")
    full = space.full
    opens = all_opens(space)
    running = full
    chosen: list[tuple[PointSet, PointSet]] = []
    for u in opens:
        for v in opens:
            s = u | (full & ~v)
            if is_subset(e, s) and running & s != running:
                chosen.append((u, v))
                running &= s
                if running == e:
                    return tuple(chosen)
    if running != e:
        raise NotBClosed(f"no open-pair representation reaches {points_of(e)}")
    return tuple(chosen)


@dataclass(frozen=True)
class EqualizerPresentation:
    f: SpaceMap
    g: SpaceMap
    pairs: tuple[tuple[PointSet, PointSet], ...]
    power: SierpinskiPower


def equalizer_maps_for_bclosed(space: FiniteSpace, e: PointSet) -> EqualizerPresentation:
    """Present a b-closed set E as the equalizer of two maps into a
    Sierpinski power: coordinate k compares membership in U_k against
    membership in U_k | V_k, which agree exactly on U_k | ~V_k."""
    pairs = closed_pair_representation(space, e)
    power = sierpinski_power(len(pairs))
    f_codes = []
    g_codes = []
    for x in range(space.n):
        fc = 0
        gc = 0
        for k, (u, v) in enumerate(pairs):
            if (u >> x) & 1:
                fc |= 1 << k
            if ((u | v) >> x) & 1:
                gc |= 1 << k
        f_codes.append(power.encode(fc))
        g_codes.append(power.encode(gc))
    f = space_map(space, power.space, f_codes)
    g = space_map(space, power.space, g_codes)
    return EqualizerPresentation(f, g, pairs, power)


def is_homeomorphism(f: SpaceMap) -> bool:
    if f.dom.n != f.cod.n or len(set(f.table)) != f.dom.n:
        return False
    if not is_monotone(f):
        return False
    inv = [0] * f.cod.n
    for x, v in enumerate(f.table):
        inv[v] = x
    return is_monotone(SpaceMap(f.cod, f.dom, tuple(inv)))


def find_homeomorphism(a: FiniteSpace, b: FiniteSpace) -> SpaceMap | None:
    """Backtracking order-isomorphism search with degree-signature pruning.

    Independent of the canonical-form machinery on purpose: the two are
    validated against each other."""
    if a.n != b.n:
        return None

    def sig(space: FiniteSpace, x: int) -> tuple[int, int]:
        return (space.up[x].bit_count(), space.down[x].bit_count())

    sigs_a = [sig(a, x) for x in range(a.n)]
    sigs_b = [sig(b, y) for y in range(b.n)]
    if sorted(sigs_a) != sorted(sigs_b):
        return None
    order = sorted(range(a.n), key=lambda x: (sigs_a.count(sigs_a[x]), sigs_a[x]))
    assign: dict[int, int] = {}
    used = [False] * b.n

    def extend(i: int) -> bool:
        if i == a.n:
            return True
        x = order[i]
        for y in range(b.n):
            if used[y] or sigs_b[y] != sigs_a[x]:
                continue
            ok = True
            for x2, y2 in assign.items():
                if a.leq(x, x2) != b.leq(y, y2) or a.leq(x2, x) != b.leq(y2, y):
                    ok = False
                    break
            if ok:
                assign[x] = y
                used[y] = True
                if extend(i + 1):
                    return True
                del assign[x]
                used[y] = False
        return False

    if not extend(0):
        return None
    return SpaceMap(a, b, tuple(assign[x] for x in range(a.n)))


@dataclass(frozen=True)
class BRetractEvidence:
    section: SpaceMap
    retraction: SpaceMap
    retraction_fixes_domain: bool
    image_is_b_dense: bool

    @property
    def holds(self) -> bool:
        return self.retraction_fixes_domain and self.image_is_b_dense


def is_b_retract(section: SpaceMap, retraction: SpaceMap) -> BRetractEvidence:
    """X is a b-retract of Y via s: X -> Y, r: Y -> X when r s = id and
    s(X) is b-dense in Y."""
    if section.cod != retraction.dom or section.dom != retraction.cod:
        raise MismatchedSpaces("section/retraction domains do not line up")
    rs = compose(retraction, section)
    return BRetractEvidence(
        section=section,
        retraction=retraction,
        retraction_fixes_domain=rs.table == tuple(range(section.dom.n)),
        image_is_b_dense=is_b_dense(section.cod, image_mask(section)),
    )


@dataclass(frozen=True)
class DiagonalResult:
    map: SpaceMap
    product: ProductResult


def diagonal(maps: Sequence[SpaceMap]) -> DiagonalResult:
    """The tupling x -> (f_1(x), ..., f_k(x)) into the product of codomains."""
    if not maps:
        raise MismatchedSpaces("diagonal of an empty family is ambiguous")
    dom = maps[0].dom
    if any(f.dom != dom for f in maps):
        raise MismatchedSpaces("diagonal needs a common domain")
    prod = product([f.cod for f in maps])
    table = tuple(prod.index([f.table[x] for f in maps]) for x in range(dom.n))
    return DiagonalResult(space_map(dom, prod.space, table), prod)
