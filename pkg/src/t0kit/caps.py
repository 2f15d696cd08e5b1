"""Size guards.

Everything here is about refusing work whose cost is exponential in the
carrier or the number of opens.  T0KIT_CAP overrides the defaults:
either "N" (carrier cap) or "N,M" (carrier cap, product point cap).
Callers that legitimately need more room for one construction (say, a
wide truncation of an infinite example) use scoped() rather than
mutating globals.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

DEFAULT_CARRIER_CAP = 16
DEFAULT_PRODUCT_CAP = 4096
DEFAULT_OWF_OPENS_CAP = 12
DEFAULT_ENUM_CAP = 6
DEFAULT_MAPS_CAP = 1_000_000
DEFAULT_TRUNCATE_CAP = 256

from .errors import CapExceeded

_OVERRIDES: list[dict[str, int]] = []


def _parse_env() -> tuple[int | None, int | None]:
    raw = os.environ.get("T0KIT_CAP")
    if not raw:
        return None, None
    parts = [p.strip() for p in raw.split(",")]
    try:
        if len(parts) == 1:
            return int(parts[0]), None
        if len(parts) == 2:
            return int(parts[0]), int(parts[1])
    except ValueError:
        pass
    raise CapExceeded(f"cannot parse T0KIT_CAP={raw!r}; expected N or N,M")


def _override(name: str) -> int | None:
    for frame in reversed(_OVERRIDES):
        if name in frame:
            return frame[name]
    return None


@contextmanager
def scoped(**limits: int):
    """Raise selected caps inside a with-block.

    Keywords are cap names without the _cap suffix: carrier, product,
    owf_opens, enum, maps, truncate.  Reports built inside the block see
    the scoped values through caps_summary(), so the relaxation is
    always visible in the output it produced.
    """
    known = {"carrier", "product", "owf_opens", "enum", "maps", "truncate"}
    bad = set(limits) - known
    if bad:
        raise ValueError(f"unknown cap names: {sorted(bad)}")
    _OVERRIDES.append(dict(limits))
    try:
        yield
    finally:
        _OVERRIDES.pop()


def carrier_cap() -> int:
    o = _override("carrier")
    if o is not None:
        return o
    c, _ = _parse_env()
    return c if c is not None else DEFAULT_CARRIER_CAP


def product_cap() -> int:
    o = _override("product")
    if o is not None:
        return o
    _, p = _parse_env()
    return p if p is not None else DEFAULT_PRODUCT_CAP


def owf_opens_cap() -> int:
    o = _override("owf_opens")
    return o if o is not None else DEFAULT_OWF_OPENS_CAP


def enum_cap() -> int:
    o = _override("enum")
    return o if o is not None else DEFAULT_ENUM_CAP


def maps_cap() -> int:
    o = _override("maps")
    return o if o is not None else DEFAULT_MAPS_CAP


def truncate_cap() -> int:
    o = _override("truncate")
    return o if o is not None else DEFAULT_TRUNCATE_CAP


def caps_summary() -> dict:
    """Echoed into reports so a verdict is never read without its bounds."""
    return {
        "carrier_cap": carrier_cap(),
        "product_cap": product_cap(),
        "owf_opens_cap": owf_opens_cap(),
        "enum_cap": enum_cap(),
    }


def guard(value: int, cap: int, what: str) -> None:
    if value > cap:
        raise CapExceeded(f"{what}: {value} exceeds cap {cap}")
