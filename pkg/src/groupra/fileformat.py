"""Reading and writing frame files.

The format is line-oriented; ``#`` starts a comment and blank lines are
ignored:

    group <id> cyclic <n>
    group <id> table <n>     (followed by n rows of n indices)
    block <id> <id> ...
    iso <x> <y>              (x declared before y)
    H <elements of H>
    K <elements of K>
    map <h>:<k> ...          (one entry per H-coset, canonical order;
                              h a representative of that coset, k any
                              element of its image K-coset)
    end

Emission is normalized: declaration order, canonical representatives,
single spaces.  Emitting a parsed emission reproduces it byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    FrameFormatError,
    GroupTableError,
    IncompatibleQuotientsError,
    NotASubgroupError,
)
from .frames import Frame, IsoRecord
from .groups import (
    CosetSystem,
    FiniteGroup,
    check_quotient_iso,
    elements,
    enumerate_cosets,
    is_cyclic_table,
    is_normal,
    make_cyclic,
    mask_of,
    validate_table,
)

__all__ = ["parse_frame", "emit_frame"]


@dataclass
class _IsoDirective:
    line: int
    x: str
    y: str
    h_line: int = 0
    h_elems: list[int] = field(default_factory=list)
    k_line: int = 0
    k_elems: list[int] = field(default_factory=list)
    map_line: int = 0
    entries: list[tuple[int, int]] = field(default_factory=list)


def _int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FrameFormatError(line, f"{what} must be an integer, got {token!r}") from None


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for i, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((i, body.split()))
    return out


def parse_frame(text: str) -> Frame:
    """Parse a frame file; FrameFormatError carries the offending line."""
    lines = _content_lines(text)
    pos = 0
    groups: dict[str, FiniteGroup] = {}
    group_lines: dict[str, int] = {}
    blocks: list[tuple[int, list[str]]] = []
    directives: list[_IsoDirective] = []

    def take() -> tuple[int, list[str]]:
        nonlocal pos
        if pos >= len(lines):
            last = lines[-1][0] if lines else 1
            raise FrameFormatError(last, "unexpected end of file")
        entry = lines[pos]
        pos += 1
        return entry

    while pos < len(lines):
        line, tokens = take()
        keyword = tokens[0]
        if keyword == "group":
            if len(tokens) != 4 or tokens[2] not in ("cyclic", "table"):
                raise FrameFormatError(line, "expected 'group <id> cyclic|table <n>'")
            gid = tokens[1]
            if gid in groups:
                raise FrameFormatError(line, f"duplicate group id {gid!r}")
            n = _int(tokens[3], line, "group order")
            if tokens[2] == "cyclic":
                if n <= 0:
                    raise FrameFormatError(line, f"group order must be positive, got {n}")
                groups[gid] = make_cyclic(n)
            else:
                rows = []
                for _ in range(n):
                    row_line, row_tokens = take()
                    if len(row_tokens) != n:
                        raise FrameFormatError(
                            row_line, f"table row has {len(row_tokens)} entries, expected {n}"
                        )
                    rows.append([_int(t, row_line, "table entry") for t in row_tokens])
                try:
                    groups[gid] = validate_table(rows, f"T{gid}")
                except GroupTableError as exc:
                    raise FrameFormatError(line, f"not a group table: {exc}") from None
            group_lines[gid] = line
        elif keyword == "block":
            if len(tokens) < 2:
                raise FrameFormatError(line, "block needs at least one id")
            for gid in tokens[1:]:
                if gid not in groups:
                    raise FrameFormatError(line, f"unknown id {gid!r}")
            blocks.append((line, tokens[1:]))
        elif keyword == "iso":
            if len(tokens) != 3:
                raise FrameFormatError(line, "expected 'iso <x> <y>'")
            d = _IsoDirective(line, tokens[1], tokens[2])
            for expect in ("H", "K", "map", "end"):
                part_line, part = take()
                if part[0] != expect:
                    raise FrameFormatError(part_line, f"expected {expect!r} here, got {part[0]!r}")
                if expect == "H":
                    d.h_line = part_line
                    d.h_elems = [_int(t, part_line, "H element") for t in part[1:]]
                elif expect == "K":
                    d.k_line = part_line
                    d.k_elems = [_int(t, part_line, "K element") for t in part[1:]]
                elif expect == "map":
                    d.map_line = part_line
                    for token in part[1:]:
                        h_part, sep, k_part = token.partition(":")
                        if not sep:
                            raise FrameFormatError(part_line, f"map entry {token!r} lacks ':'")
                        d.entries.append(
                            (
                                _int(h_part, part_line, "map representative"),
                                _int(k_part, part_line, "map image"),
                            )
                        )
            directives.append(d)
        else:
            raise FrameFormatError(line, f"unknown directive {keyword!r}")

    # blocks must partition the declared ids
    owner: dict[str, int] = {}
    for line, members in blocks:
        for gid in members:
            if gid in owner:
                raise FrameFormatError(line, f"id {gid!r} already belongs to a block")
            owner[gid] = line
    for gid in groups:
        if gid not in owner:
            raise FrameFormatError(group_lines[gid], f"id {gid!r} belongs to no block")

    declared = list(groups)
    position = {gid: i for i, gid in enumerate(declared)}
    isos: dict[tuple[str, str], IsoRecord] = {}
    for d in directives:
        for gid in (d.x, d.y):
            if gid not in groups:
                raise FrameFormatError(d.line, f"unknown id {gid!r}")
        if position[d.y] <= position[d.x]:
            raise FrameFormatError(d.line, f"iso requires {d.x!r} declared before {d.y!r}")
        if owner[d.x] != owner[d.y]:
            raise FrameFormatError(d.line, f"iso ({d.x},{d.y}) crosses blocks")
        if (d.x, d.y) in isos:
            raise FrameFormatError(d.line, f"duplicate iso for ({d.x},{d.y})")
        isos[(d.x, d.y)] = _build_record(groups, d)

    for line, members in blocks:
        ordered = sorted(members, key=position.__getitem__)
        for i, x in enumerate(ordered):
            for y in ordered[i + 1 :]:
                if (x, y) not in isos:
                    raise FrameFormatError(line, f"missing iso for in-block pair ({x},{y})")

    ordered_blocks = [members for _, members in blocks]
    return Frame(groups, ordered_blocks, isos)


def _build_record(groups: dict[str, FiniteGroup], d: _IsoDirective) -> IsoRecord:
    gx, gy = groups[d.x], groups[d.y]
    for e in d.h_elems:
        if not 0 <= e < gx.order:
            raise FrameFormatError(d.h_line, f"element {e} outside group {d.x!r}")
    for e in d.k_elems:
        if not 0 <= e < gy.order:
            raise FrameFormatError(d.k_line, f"element {e} outside group {d.y!r}")
    h_mask = mask_of(d.h_elems)
    k_mask = mask_of(d.k_elems)
    try:
        if not is_normal(gx, h_mask):
            raise FrameFormatError(d.h_line, f"H is not normal in group {d.x!r}")
    except NotASubgroupError as exc:
        raise FrameFormatError(d.h_line, str(exc)) from None
    try:
        if not is_normal(gy, k_mask):
            raise FrameFormatError(d.k_line, f"K is not normal in group {d.y!r}")
    except NotASubgroupError as exc:
        raise FrameFormatError(d.k_line, str(exc)) from None
    h_sys = enumerate_cosets(gx, h_mask)
    k_sys = enumerate_cosets(gy, k_mask)
    if h_sys.count != k_sys.count:
        raise FrameFormatError(
            d.line, f"incompatible quotients: {h_sys.count} H-cosets vs {k_sys.count} K-cosets"
        )
    if len(d.entries) != h_sys.count:
        raise FrameFormatError(
            d.map_line, f"map has {len(d.entries)} entries, expected {h_sys.count}"
        )
    mapping = []
    for gamma, (h_rep, k_rep) in enumerate(d.entries):
        if not 0 <= h_rep < gx.order or not h_sys.cosets[gamma] >> h_rep & 1:
            raise FrameFormatError(
                d.map_line, f"entry {gamma}: {h_rep} does not represent H-coset {gamma}"
            )
        if not 0 <= k_rep < gy.order:
            raise FrameFormatError(d.map_line, f"entry {gamma}: {k_rep} outside group {d.y!r}")
        mapping.append(k_sys.coset_of(k_rep))
    try:
        verdict = check_quotient_iso(gx, h_mask, gy, k_mask, mapping)
    except IncompatibleQuotientsError as exc:
        raise FrameFormatError(d.line, str(exc)) from None
    if not verdict.ok:
        raise FrameFormatError(d.map_line, f"map is not a quotient isomorphism: {verdict.witness}")
    image_order = CosetSystem(k_mask, tuple(k_sys.cosets[i] for i in mapping))
    return IsoRecord(d.x, d.y, h_sys, image_order)


def emit_frame(frame: Frame) -> str:
    """Normalized text for a frame; parse(emit(f)) reproduces f."""
    lines: list[str] = []
    for x in frame.order:
        g = frame.groups[x]
        if is_cyclic_table(g):
            lines.append(f"group {x} cyclic {g.order}")
        else:
            lines.append(f"group {x} table {g.order}")
            lines.extend(" ".join(map(str, row)) for row in g.op)
    for block in frame.blocks:
        lines.append("block " + " ".join(block))
    for x, y in sorted(frame.isos, key=lambda p: (frame.pos[p[0]], frame.pos[p[1]])):
        record = frame.isos[(x, y)]
        lines.append(f"iso {x} {y}")
        lines.append("H " + " ".join(map(str, elements(record.h.subgroup))))
        lines.append("K " + " ".join(map(str, elements(record.k.subgroup))))
        entries = [
            f"{elements(hc)[0]}:{elements(kc)[0]}"
            for hc, kc in zip(record.h.cosets, record.k.cosets)
        ]
        lines.append("map " + " ".join(entries))
        lines.append("end")
    return "\n".join(lines) + "\n"
