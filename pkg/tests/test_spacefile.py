"""Space file grammar: parsing, validation spans, printing, round trips."""

import pytest

from t0kit.constructions import find_homeomorphism
from t0kit.enumeration import spaces_up_to
from t0kit.errors import NotAPartialOrder, NotContinuous, NotT0, ParseError
from t0kit.finite_space import antichain, chain, sigma2
from t0kit.spacefile import (
    parse_document,
    parse_space,
    print_document,
    print_space,
)


def test_order_block():
    doc = parse_space("space S\npoints a b\nle a b")
    assert doc.point_names == ("a", "b")
    assert find_homeomorphism(doc.space, sigma2()) is not None
    assert doc.space.leq(0, 1)  # a below b, as written


def test_transitive_closure_is_taken():
    doc = parse_space("space C\npoints p q r\nle p q\nle q r")
    assert doc.space.leq(0, 2)


def test_opens_block_completion():
    doc = parse_space("space X\npoints p q r\nopen r\nopen q r")
    assert find_homeomorphism(doc.space, chain(3)) is not None
    doc2 = parse_space("space B\npoints a b\nopen a\nopen b")
    assert find_homeomorphism(doc2.space, antichain(2)) is not None  # union added


def test_comments_and_blank_lines():
    doc = parse_space(
        "# a chain\n\nspace S  # named S\npoints a b  # two points\n\nle a b\n"
    )
    assert doc.name == "S" and doc.space.n == 2


def test_maps_parse_and_validate():
    doc = parse_document(
        "space A\npoints a b\nle a b\n"
        "space B\npoints p q r\nle p q\nle q r\n"
        "map f : A -> B\nsend a p\nsend b r\n"
    )
    (m,) = doc.maps
    assert m.name == "f" and m.src == "A" and m.dst == "B"
    assert m.map.table == (0, 2)


def test_map_continuity_is_checked():
    with pytest.raises(NotContinuous) as err:
        parse_document(
            "space A\npoints a b\nle a b\n"
            "space B\npoints p q\nle p q\n"
            "map f : A -> B\nsend a q\nsend b p\n"
        )
    assert "map f" in str(err.value)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("points a b", "outside a space block"),
        ("space S\nle a b", "needs a points line"),
        ("space S\npoints a b\nfoo a", "unknown directive"),
        ("space S\npoints a a", "duplicate point"),
        ("space S\npoints a b\npoints c", "lists points twice"),
        ("space S\npoints a b\nle a c", "undeclared point"),
        ("space S\npoints a b\nle a b\nopen a", "mixes le and open"),
        ("space S\npoints a b\nopen", "open lines need points"),
        ("space S\npoints a b\nle a", "exactly two points"),
        ("space S\npoints a b\nle a b\nspace S\npoints c\n", "duplicate space"),
        ("space S\npoints a b\nle a b\nmap f : S -> T\n", "undeclared space T"),
        ("space 9bad\npoints a\n", "bad space name"),
        ("space S\npoints a\nmap f : S -> S\nsend b a\n", "not a point of"),
        ("space S\npoints a\nmap f : S -> S\nsend a a\nsend a a\n", "sent twice"),
        ("space S\npoints a b\nle a b\nmap f : S -> S\nsend a a\n", "never sends b"),
        ("space S\npoints a\nmap f = S -> S\n", "map header"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_document(text)
    assert fragment in str(err.value)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse_document("space S\npoints a b\nle a zz")
    assert err.value.line == 3 and err.value.col == 6


def test_not_t0_and_cycles_carry_block():
    with pytest.raises(NotT0) as t0err:
        parse_document("space T\npoints a b\nopen a b")
    assert "space T" in str(t0err.value)
    with pytest.raises(NotAPartialOrder) as perr:
        parse_document("space Z\npoints a b\nle a b\nle b a")
    assert "space Z" in str(perr.value)


def test_parse_space_wants_exactly_one_block():
    with pytest.raises(ParseError):
        parse_space("space A\npoints a\nspace B\npoints b\n")
    with pytest.raises(ParseError):
        parse_space("# nothing here\n")


def test_print_parse_roundtrip_small_spaces():
    count = 0
    for sp in spaces_up_to(5):
        text = print_space("s", sp)
        back = parse_space(text)
        assert tuple(back.space.up) == tuple(sp.up)  # exact reconstruction
        count += 1
    assert count > 80


def test_print_document_roundtrip_with_maps():
    doc = parse_document(
        "space A\npoints a b\nle a b\n"
        "space B\npoints p q r\nopen r\nopen q r\n"
        "map f : A -> B\nsend a p\nsend b r\n"
    )
    back = parse_document(print_document(doc))
    assert set(back.spaces) == {"A", "B"}
    assert tuple(back.spaces["B"].space.up) == tuple(doc.spaces["B"].space.up)
    assert back.maps[0].map.table == doc.maps[0].map.table


def test_print_space_validates_names():
    with pytest.raises(ParseError):
        print_space("s", sigma2(), ["only_one"])
    out = print_space("s", sigma2(), ["a", "b"], comments=["hello"])
    assert out.startswith("# hello\nspace s\n")
