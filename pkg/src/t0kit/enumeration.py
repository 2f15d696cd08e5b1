"""Exhaustive enumeration of finite T0 spaces and continuous maps.

Spaces are generated up to homeomorphism by adding a new maximal point
over every down-set of every smaller space, then deduplicating by a
canonical form (color refinement followed by a minimal relation matrix
over the refinement-consistent relabelings).  The labeled-relation
pipeline in the tests counts the same classes a second, independent way.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator

from . import caps
from .constructions import SpaceMap
from .errors import CapExceeded
from .finite_space import FiniteSpace, PointSet, all_opens, iter_bits


@dataclass(frozen=True)
class CanonicalForm:
    """key is the lexicographically least up-mask tuple over admissible
    relabelings; relabel witnesses it (relabel[old] = new)."""

    n: int
    key: tuple[PointSet, ...]
    relabel: tuple[int, ...]


def permute_mask(mask: PointSet, relabel: tuple[int, ...]) -> PointSet:
    out = 0
    for y in iter_bits(mask):
        out |= 1 << relabel[y]
    return out


def relabel_space(space: FiniteSpace, relabel: tuple[int, ...]) -> FiniteSpace:
    n = space.n
    up = [0] * n
    down = [0] * n
    for x in range(n):
        up[relabel[x]] = permute_mask(space.up[x], relabel)
        down[relabel[x]] = permute_mask(space.down[x], relabel)
    return FiniteSpace(n, tuple(up), tuple(down))


def _refine_colors(space: FiniteSpace) -> list[int]:
    n = space.n
    colors = [
        (space.up[x].bit_count(), space.down[x].bit_count()) for x in range(n)
    ]
    ranks = {c: r for r, c in enumerate(sorted(set(colors)))}
    colors = [ranks[c] for c in colors]
    while True:
        sigs = []
        for x in range(n):
            ups = sorted(colors[y] for y in iter_bits(space.up[x]) if y != x)
            downs = sorted(colors[y] for y in iter_bits(space.down[x]) if y != x)
            sigs.append((colors[x], tuple(ups), tuple(downs)))
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new_colors = [ranks[s] for s in sigs]
        if new_colors == colors:
            return colors
        colors = new_colors


def canonical_form(space: FiniteSpace) -> CanonicalForm:
    n = space.n
    colors = _refine_colors(space)
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(colors[x], []).append(x)
    blocks = [classes[c] for c in sorted(classes)]
    best_key: tuple[PointSet, ...] | None = None
    best_relabel: tuple[int, ...] | None = None
    for perms in itertools.product(*(itertools.permutations(b) for b in blocks)):
        order = [x for block in perms for x in block]  # order[new] = old
        relabel = [0] * n
        for new, old in enumerate(order):
            relabel[old] = new
        key = tuple(permute_mask(space.up[old], tuple(relabel)) for old in order)
        if best_key is None or key < best_key:
            best_key = key
            best_relabel = tuple(relabel)
    assert best_key is not None and best_relabel is not None
    return CanonicalForm(n, best_key, best_relabel)


def canonicalize(space: FiniteSpace) -> FiniteSpace:
    return relabel_space(space, canonical_form(space).relabel)


def _down_sets(space: FiniteSpace) -> tuple[PointSet, ...]:
    """All down-sets, via the opens of the order dual."""
    dual = FiniteSpace(space.n, space.down, space.up)
    return all_opens(dual)


@functools.lru_cache(maxsize=None)
def all_spaces(n: int) -> tuple[FiniteSpace, ...]:
    """All T0 spaces on n points up to homeomorphism, canonically labeled.

    Every finite T0 space has a maximal point whose removal leaves a
    smaller space in which the removed point's strict down-set is a
    down-set; re-adding a maximal point over each down-set therefore
    reaches every class."""
    if n > caps.enum_cap():
        raise CapExceeded(f"space enumeration capped at {caps.enum_cap()} points")
    if n < 1:
        raise CapExceeded("space enumeration needs n >= 1")
    if n == 1:
        return (FiniteSpace(1, (1,), (1,)),)
    seen: dict[tuple[PointSet, ...], FiniteSpace] = {}
    top = 1 << (n - 1)
    for base in all_spaces(n - 1):
        for d in _down_sets(base):
            up = [base.up[x] | (top if (d >> x) & 1 else 0) for x in range(n - 1)]
            up.append(top)
            down = list(base.down) + [d | top]
            sp = FiniteSpace(n, tuple(up), tuple(down))
            form = canonical_form(sp)
            if form.key not in seen:
                seen[form.key] = relabel_space(sp, form.relabel)
    return tuple(seen[k] for k in sorted(seen))


def spaces_up_to(n: int) -> Iterator[FiniteSpace]:
    for k in range(1, n + 1):
        yield from all_spaces(k)


def all_continuous_maps(dom: FiniteSpace, cod: FiniteSpace) -> Iterator[SpaceMap]:
    """Stream every continuous map dom -> cod.

    Backtracking in a linear-extension order of dom: each point's image
    must sit above the images of its already-placed predecessors, so
    monotonicity is enforced incrementally and never re-checked."""
    order = sorted(range(dom.n), key=lambda x: dom.down[x].bit_count())
    table = [0] * dom.n

    def place(i: int) -> Iterator[SpaceMap]:
        if i == dom.n:
            yield SpaceMap(dom, cod, tuple(table))
            return
        x = order[i]
        allowed = cod.full
        for y in iter_bits(dom.down[x]):
            if y != x:
                allowed &= cod.up[table[y]]
        for v in iter_bits(allowed):
            table[x] = v
            yield from place(i + 1)

    yield from place(0)


@functools.lru_cache(maxsize=4096)
def continuous_maps_list(dom: FiniteSpace, cod: FiniteSpace) -> tuple[SpaceMap, ...]:
    """Materialized (and cached) variant, guarded by the loose bound."""
    bound = cod.n ** dom.n
    if bound > caps.maps_cap():
        raise CapExceeded(
            f"map table {cod.n}^{dom.n} exceeds {caps.maps_cap()}; stream instead"
        )
    return tuple(all_continuous_maps(dom, cod))
