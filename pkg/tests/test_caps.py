"""Cap plumbing: env parsing, scoped overrides, report echo."""

import pytest

from t0kit import caps
from t0kit.errors import CapExceeded
from t0kit.finite_space import FiniteSpace, antichain


def test_defaults_visible_in_summary():
    s = caps.caps_summary()
    assert s["carrier_cap"] == caps.DEFAULT_CARRIER_CAP
    assert s["product_cap"] == caps.DEFAULT_PRODUCT_CAP
    assert s["owf_opens_cap"] == caps.DEFAULT_OWF_OPENS_CAP


def test_env_override(monkeypatch):
    monkeypatch.setenv("T0KIT_CAP", "20")
    assert caps.carrier_cap() == 20
    assert caps.product_cap() == caps.DEFAULT_PRODUCT_CAP
    monkeypatch.setenv("T0KIT_CAP", "20, 9000")
    assert caps.carrier_cap() == 20
    assert caps.product_cap() == 9000
    monkeypatch.setenv("T0KIT_CAP", "nope")
    with pytest.raises(CapExceeded):
        caps.carrier_cap()


def test_scoped_override_nests_and_restores():
    base = caps.carrier_cap()
    with caps.scoped(carrier=50):
        assert caps.carrier_cap() == 50
        assert caps.caps_summary()["carrier_cap"] == 50
        with caps.scoped(carrier=30, product=9999):
            assert caps.carrier_cap() == 30
            assert caps.product_cap() == 9999
        assert caps.carrier_cap() == 50
    assert caps.carrier_cap() == base


def test_scoped_rejects_unknown_names():
    with pytest.raises(ValueError):
        with caps.scoped(bogus=3):
            pass


def test_scoped_allows_wide_carriers():
    with pytest.raises(CapExceeded):
        antichain(17)
    with caps.scoped(carrier=50):
        sp = antichain(40)
        assert sp.n == 40
    with pytest.raises(CapExceeded):
        antichain(17)


def test_guard_message_names_the_quantity():
    with pytest.raises(CapExceeded, match="widget count: 7 exceeds cap 3"):
        caps.guard(7, 3, "widget count")
