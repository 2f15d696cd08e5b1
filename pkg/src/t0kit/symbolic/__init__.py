"""Exact set-algebras for four infinite example spaces, with
certificate checkers that validate refutations and confirmations."""

from .alexandrov import AlexandrovNat, AlexSet, check_cosober_alexandrov
from .catalog import catalog, catalog_names, truncate
from .cofinite import (
    CofiniteNat,
    CofiniteSet,
    check_owf,
    check_owf_refutation,
    initial_segment_complements,
)
from .intervals import (
    QInterval,
    QIntervalSet,
    ScottQSubspace,
    check_kbs,
    check_kbs_holds,
    scott_full,
    scott_xn,
    scott_y,
)
from .johnstone import (
    JohnstoneOpen,
    JohnstoneSpace,
    KnSubspace,
    check_johnstone_claims,
    check_way_below,
    min_selector,
    open_from_generators,
)
from .verdicts import Verdict

__all__ = [
    "AlexandrovNat",
    "AlexSet",
    "CofiniteNat",
    "CofiniteSet",
    "JohnstoneOpen",
    "JohnstoneSpace",
    "KnSubspace",
    "QInterval",
    "QIntervalSet",
    "ScottQSubspace",
    "Verdict",
    "catalog",
    "catalog_names",
    "check_cosober_alexandrov",
    "check_johnstone_claims",
    "check_kbs",
    "check_kbs_holds",
    "check_owf",
    "check_owf_refutation",
    "check_way_below",
    "initial_segment_complements",
    "min_selector",
    "open_from_generators",
    "scott_full",
    "scott_xn",
    "scott_y",
    "truncate",
]
