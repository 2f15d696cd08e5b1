"""Maps, subspaces, products, powers, equalizers.

Product up/down masks are checked against a literal double-loop oracle;
continuity checks compare the monotone and preimage-of-opens
characterizations on every map that appears."""

import itertools

import pytest

from t0kit.b_topology import is_b_closed
from t0kit.constructions import (
    SpaceMap,
    canonical_embedding,
    closed_pair_representation,
    compose,
    diagonal,
    equalizer,
    equalizer_maps_for_bclosed,
    find_homeomorphism,
    identity,
    image_mask,
    is_b_retract,
    is_homeomorphism,
    is_monotone,
    is_preimage_continuous,
    powerset_scott,
    preimage,
    product,
    sierpinski_power,
    space_map,
    subspace,
)
from t0kit.errors import EmptyCarrier, MismatchedSpaces, NotContinuous
from t0kit.finite_space import (
    FiniteSpace,
    antichain,
    chain,
    from_cover,
    is_subset,
    mask_of,
    points_of,
    sigma2,
    v_poset,
)


def test_space_map_validates_continuity():
    s = sigma2()
    space_map(s, s, (0, 0))
    space_map(s, s, (0, 1))
    space_map(s, s, (1, 1))
    with pytest.raises(NotContinuous):
        space_map(s, s, (1, 0))
    with pytest.raises(MismatchedSpaces):
        space_map(s, s, (0, 1, 1))


def test_monotone_agrees_with_preimage_continuity():
    spaces = [sigma2(), chain(3), v_poset(), antichain(2)]
    for dom, cod in itertools.product(spaces, repeat=2):
        for table in itertools.product(range(cod.n), repeat=dom.n):
            f = SpaceMap(dom, cod, table)
            assert is_monotone(f) == is_preimage_continuous(f)


def test_compose_and_identity():
    c3 = chain(3)
    s = sigma2()
    f = space_map(c3, s, (0, 0, 1))
    assert compose(f, identity(c3)).table == f.table
    assert compose(identity(s), f).table == f.table
    with pytest.raises(MismatchedSpaces):
        compose(f, f)


def test_preimage_and_image():
    f = space_map(chain(3), sigma2(), (0, 0, 1))
    assert preimage(f, 0b10) == 0b100
    assert preimage(f, 0b01) == 0b011
    assert image_mask(f) == 0b11


def test_subspace_of_chain():
    sub = subspace(chain(4), mask_of([0, 2, 3]))
    assert sub.space == chain(3)
    assert sub.points == (0, 2, 3)
    assert sub.to_ambient(0b101) == 0b1001
    assert sub.to_sub(0b1100) == 0b110
    assert is_monotone(sub.inclusion) and is_preimage_continuous(sub.inclusion)
    with pytest.raises(EmptyCarrier):
        subspace(chain(4), 0)


def test_product_against_literal_oracle():
    a, b = sigma2(), chain(3)
    prod = product([a, b])
    assert prod.space.n == 6
    for x1 in range(a.n):
        for y1 in range(b.n):
            idx = prod.index((x1, y1))
            assert prod.coords(idx) == (x1, y1)
            up = 0
            down = 0
            for x2 in range(a.n):
                for y2 in range(b.n):
                    j = prod.index((x2, y2))
                    if a.leq(x1, x2) and b.leq(y1, y2):
                        up |= 1 << j
                    if a.leq(x2, x1) and b.leq(y2, y1):
                        down |= 1 << j
            assert prod.space.up[idx] == up
            assert prod.space.down[idx] == down


def test_projections_continuous():
    prod = product([sigma2(), chain(3), antichain(2)])
    assert prod.space.n == 12
    for p in prod.projections:
        assert is_monotone(p) and is_preimage_continuous(p)


def test_empty_product_is_point():
    prod = product([])
    assert prod.space.n == 1
    assert prod.index(()) == 0


def test_sierpinski_power_codes():
    pw = sierpinski_power(3)
    assert pw.space.n == 8
    for code in range(8):
        assert pw.decode(pw.encode(code)) == code
    # order on codes is subset inclusion
    for c1 in range(8):
        for c2 in range(8):
            assert pw.space.leq(pw.encode(c1), pw.encode(c2)) == is_subset(c1, c2)


def test_powerset_scott_frozen():
    ps = powerset_scott(2)
    assert ps.n == 4
    assert ps.up == (0b1111, 0b1010, 0b1100, 0b1000)
    assert ps.down == (0b0001, 0b0011, 0b0101, 0b1111)


def test_canonical_embedding_sierpinski():
    emb = canonical_embedding(sigma2())
    assert emb.opens == (0b10, 0b11)
    assert emb.bitcodes == (0b10, 0b11)
    f, pw = emb.materialize()
    assert len(set(f.table)) == 2
    # the embedded pair is order-isomorphic to the domain
    sub = subspace(pw.space, image_mask(f))
    assert find_homeomorphism(sub.space, sigma2()) is not None


def test_canonical_embedding_reflects_order():
    for sp in [chain(3), v_poset(), antichain(3)]:
        emb = canonical_embedding(sp)
        for x in range(sp.n):
            for y in range(sp.n):
                assert emb.codomain_leq(emb.bitcodes[x], emb.bitcodes[y]) == sp.leq(x, y)


def test_equalizer_mask():
    c3 = chain(3)
    s = sigma2()
    f = space_map(c3, s, (0, 0, 1))
    g = space_map(c3, s, (0, 1, 1))
    assert equalizer(f, g) == 0b101
    with pytest.raises(MismatchedSpaces):
        equalizer(f, space_map(c3, c3, (0, 1, 2)))


@pytest.mark.parametrize("sp", [sigma2(), chain(3), v_poset(), antichain(3)],
                         ids=lambda s: f"n{s.n}-{hash(s) & 0xffff:04x}")
def test_equalizer_presentation_roundtrip(sp):
    # every subset of a finite T0 space is b-closed; the presentation must
    # reproduce it as an honest equalizer
    for e in range(sp.full + 1):
        assert is_b_closed(sp, e)
        pres = equalizer_maps_for_bclosed(sp, e)
        assert equalizer(pres.f, pres.g) == e
        assert len(pres.pairs) <= sp.n
        for u, v in pres.pairs:
            assert sp.is_open(u) and sp.is_open(v)
            assert is_subset(e, u | (sp.full & ~v))


def test_closed_pair_representation_intersects_to_input():
    sp = v_poset()
    for e in range(sp.full + 1):
        pairs = closed_pair_representation(sp, e)
        running = sp.full
        for u, v in pairs:
            running &= u | (sp.full & ~v)
        assert running == e


def test_homeomorphism_checks():
    c3 = chain(3)
    relabeled = from_cover(3, [(2, 0), (0, 1)])  # chain 2 < 0 < 1
    f = find_homeomorphism(c3, relabeled)
    assert f is not None and is_homeomorphism(f)
    assert f.table == (2, 0, 1)
    assert find_homeomorphism(c3, v_poset()) is None
    assert find_homeomorphism(v_poset(), from_cover(3, [(0, 1), (0, 2)])) is None
    assert is_homeomorphism(identity(c3))
    assert not is_homeomorphism(space_map(c3, c3, (0, 0, 2)))


def test_b_retract_evidence():
    c3 = chain(3)
    s = sigma2()
    sec = space_map(s, c3, (0, 2))
    retr = space_map(c3, s, (0, 0, 1))
    ev = is_b_retract(sec, retr)
    assert ev.retraction_fixes_domain
    assert not ev.image_is_b_dense  # {0,2} is not all of the 3-chain
    assert not ev.holds
    ev2 = is_b_retract(identity(c3), identity(c3))
    assert ev2.holds


def test_diagonal():
    c3 = chain(3)
    s = sigma2()
    f = space_map(c3, s, (0, 0, 1))
    g = space_map(c3, s, (0, 1, 1))
    d = diagonal([f, g])
    for x in range(3):
        assert d.product.coords(d.map.table[x]) == (f.table[x], g.table[x])
    with pytest.raises(MismatchedSpaces):
        diagonal([f, space_map(s, s, (0, 1))])
