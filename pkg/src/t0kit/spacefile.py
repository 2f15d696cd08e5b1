"""Line-oriented text format for finite spaces and maps.

A document is a sequence of blocks:

    # comments run to end of line
    space NAME
    points a b c
    le a b          # a below b; reflexive-transitive closure is taken
    ...
    space OTHER
    points p q
    open q          # one open per line; empty and full are implicit,
    ...             # and the family is completed to a topology

    map f : NAME -> OTHER
    send a p
    ...

A space block lists its points once and then describes the topology
either through `le` lines (specialization order, Alexandrov opens) or
through `open` lines (generating opens), never both.  Map blocks must
name previously declared spaces, send every domain point, and be
continuous.  Parsing is strict: unknown directives, undeclared names,
duplicates, and non-T0 or non-poset data all fail with the source
position."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .constructions import SpaceMap, space_map
from .errors import (
    NotAPartialOrder,
    NotContinuous,
    NotT0,
    ParseError,
)
from .finite_space import FiniteSpace, from_cover, from_opens
from .report import cover_pairs

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_MAP_HEADER = re.compile(
    r"^map\s+([A-Za-z_][A-Za-z0-9_]*)\s*:\s*"
    r"([A-Za-z_][A-Za-z0-9_]*)\s*->\s*([A-Za-z_][A-Za-z0-9_]*)\s*$"
)


@dataclass(frozen=True)
class SpaceDoc:
    name: str
    point_names: tuple[str, ...]
    space: FiniteSpace
    line: int

    def index(self, point_name: str) -> int:
        return self.point_names.index(point_name)


@dataclass(frozen=True)
class MapDoc:
    name: str
    src: str
    dst: str
    map: SpaceMap
    line: int


@dataclass(frozen=True)
class Document:
    spaces: dict[str, SpaceDoc] = field(default_factory=dict)
    maps: tuple[MapDoc, ...] = ()

    def first_space(self) -> SpaceDoc:
        if not self.spaces:
            raise ParseError("document declares no space")
        return next(iter(self.spaces.values()))


class _SpaceBlock:
    def __init__(self, name: str, line: int):
        self.name = name
        self.line = line
        self.points: list[str] | None = None
        self.mode: str | None = None  # "le" or "open" once seen
        self.le_pairs: list[tuple[int, int]] = []
        self.opens: list[int] = []

    def require_points(self, line: int) -> list[str]:
        if self.points is None:
            raise ParseError(
                f"space {self.name} needs a points line first", line, 1
            )
        return self.points

    def set_mode(self, mode: str, line: int) -> None:
        if self.mode not in (None, mode):
            raise ParseError(
                f"space {self.name} mixes le and open lines", line, 1
            )
        self.mode = mode

    def build(self) -> SpaceDoc:
        if self.points is None:
            raise ParseError(f"space {self.name} has no points line", self.line, 1)
        n = len(self.points)
        try:
            if self.mode == "open":
                space = from_opens(n, self.opens)
            else:
                space = from_cover(n, self.le_pairs)
        except NotT0 as exc:
            raise NotT0(f"space {self.name} (line {self.line}): {exc}") from None
        except NotAPartialOrder as exc:
            raise NotAPartialOrder(
                f"space {self.name} (line {self.line}): {exc}"
            ) from None
        return SpaceDoc(self.name, tuple(self.points), space, self.line)


class _MapBlock:
    def __init__(self, name: str, src: SpaceDoc, dst: SpaceDoc, line: int):
        self.name = name
        self.src = src
        self.dst = dst
        self.line = line
        self.sent: dict[int, int] = {}

    def build(self) -> MapDoc:
        missing = [
            p for i, p in enumerate(self.src.point_names) if i not in self.sent
        ]
        if missing:
            raise ParseError(
                f"map {self.name} never sends {', '.join(missing)}", self.line, 1
            )
        table = tuple(self.sent[i] for i in range(self.src.space.n))
        try:
            f = space_map(self.src.space, self.dst.space, table)
        except NotContinuous as exc:
            raise NotContinuous(
                f"map {self.name} (line {self.line}): {exc}"
            ) from None
        return MapDoc(self.name, self.src.name, self.dst.name, f, self.line)


def _token_col(raw: str, index: int) -> int:
    """1-based column of the index-th whitespace token."""
    col = 1
    seen = -1
    for m in re.finditer(r"\S+", raw):
        seen += 1
        if seen == index:
            col = m.start() + 1
            break
    return col


def _check_name(word: str, what: str, line: int, col: int) -> str:
    if not _NAME.match(word):
        raise ParseError(f"bad {what} name {word!r}", line, col)
    return word


def parse_document(text: str) -> Document:
    spaces: dict[str, SpaceDoc] = {}
    maps: list[MapDoc] = []
    block: _SpaceBlock | _MapBlock | None = None

    def flush():
        nonlocal block
        if isinstance(block, _SpaceBlock):
            doc = block.build()
            spaces[doc.name] = doc
        elif isinstance(block, _MapBlock):
            maps.append(block.build())
        block = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        words = content.split()
        if not words:
            continue
        head, args = words[0], words[1:]

        if head == "space":
            if len(args) != 1:
                raise ParseError("space takes exactly one name", lineno, 1)
            name = _check_name(args[0], "space", lineno, _token_col(content, 1))
            flush()
            if name in spaces:
                raise ParseError(f"duplicate space {name}", lineno, 1)
            block = _SpaceBlock(name, lineno)
        elif head == "points":
            if not isinstance(block, _SpaceBlock):
                raise ParseError("points outside a space block", lineno, 1)
            if block.points is not None:
                raise ParseError(
                    f"space {block.name} lists points twice", lineno, 1
                )
            if not args:
                raise ParseError("points line needs at least one name", lineno, 1)
            seen: list[str] = []
            for i, w in enumerate(args):
                col = _token_col(content, i + 1)
                _check_name(w, "point", lineno, col)
                if w in seen:
                    raise ParseError(f"duplicate point {w}", lineno, col)
                seen.append(w)
            block.points = seen
        elif head == "le":
            if not isinstance(block, _SpaceBlock):
                raise ParseError("le outside a space block", lineno, 1)
            pts = block.require_points(lineno)
            block.set_mode("le", lineno)
            if len(args) != 2:
                raise ParseError("le takes exactly two points", lineno, 1)
            pair = []
            for i, w in enumerate(args):
                col = _token_col(content, i + 1)
                if w not in pts:
                    raise ParseError(f"undeclared point {w}", lineno, col)
                pair.append(pts.index(w))
            block.le_pairs.append((pair[0], pair[1]))
        elif head == "open":
            if not isinstance(block, _SpaceBlock):
                raise ParseError("open outside a space block", lineno, 1)
            pts = block.require_points(lineno)
            block.set_mode("open", lineno)
            if not args:
                raise ParseError(
                    "empty open is implicit; open lines need points", lineno, 1
                )
            mask = 0
            for i, w in enumerate(args):
                col = _token_col(content, i + 1)
                if w not in pts:
                    raise ParseError(f"undeclared point {w}", lineno, col)
                mask |= 1 << pts.index(w)
            block.opens.append(mask)
        elif head == "map":
            m = _MAP_HEADER.match(content.strip())
            if not m:
                raise ParseError("map header is `map f : A -> B`", lineno, 1)
            flush()
            fname, src, dst = m.group(1), m.group(2), m.group(3)
            for which in (src, dst):
                if which not in spaces:
                    raise ParseError(
                        f"map {fname} references undeclared space {which}",
                        lineno, 1,
                    )
            maps_seen = {d.name for d in maps}
            if fname in maps_seen:
                raise ParseError(f"duplicate map {fname}", lineno, 1)
            block = _MapBlock(fname, spaces[src], spaces[dst], lineno)
        elif head == "send":
            if not isinstance(block, _MapBlock):
                raise ParseError("send outside a map block", lineno, 1)
            if len(args) != 2:
                raise ParseError("send takes exactly two points", lineno, 1)
            a, x = args
            if a not in block.src.point_names:
                raise ParseError(
                    f"{a} is not a point of {block.src.name}",
                    lineno, _token_col(content, 1),
                )
            if x not in block.dst.point_names:
                raise ParseError(
                    f"{x} is not a point of {block.dst.name}",
                    lineno, _token_col(content, 2),
                )
            i = block.src.index(a)
            if i in block.sent:
                raise ParseError(f"{a} is sent twice", lineno, 1)
            block.sent[i] = block.dst.index(x)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, 1)

    flush()
    return Document(spaces=spaces, maps=tuple(maps))


def parse_space(text: str) -> SpaceDoc:
    """Parse a document that declares exactly one space and no maps."""
    doc = parse_document(text)
    if len(doc.spaces) != 1 or doc.maps:
        raise ParseError(
            f"expected exactly one space block, found {len(doc.spaces)} "
            f"spaces and {len(doc.maps)} maps"
        )
    return doc.first_space()


def print_space(name: str, space: FiniteSpace,
                point_names: list[str] | None = None,
                comments: list[str] | None = None) -> str:
    """Canonical text for one space: points plus covering-pair le lines."""
    names = list(point_names) if point_names is not None else [
        f"x{i}" for i in range(space.n)
    ]
    if len(names) != space.n or len(set(names)) != space.n:
        raise ParseError(f"need {space.n} distinct point names")
    lines = [f"# {c}" for c in (comments or [])]
    lines.append(f"space {name}")
    lines.append("points " + " ".join(names))
    for x, y in sorted(cover_pairs(space)):
        lines.append(f"le {names[x]} {names[y]}")
    return "\n".join(lines) + "\n"


def print_document(doc: Document) -> str:
    chunks = [
        print_space(s.name, s.space, list(s.point_names))
        for s in doc.spaces.values()
    ]
    for m in doc.maps:
        src = doc.spaces[m.src]
        dst = doc.spaces[m.dst]
        lines = [f"map {m.name} : {m.src} -> {m.dst}"]
        for i, v in enumerate(m.map.table):
            lines.append(f"send {src.point_names[i]} {dst.point_names[v]}")
        chunks.append("\n".join(lines) + "\n")
    return "\n".join(chunks)
