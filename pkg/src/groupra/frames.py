"""Frames: disjoint finite groups tied together by quotient isomorphisms.

A frame declares groups G_x for indices x (in a fixed declaration order),
an equivalence on the indices given as blocks, and for every in-block pair
x < y one isomorphism phi_xy between quotients G_x/H_xy and G_y/K_xy.  Only
the x < y records are stored; the x = y and y > x records are forced and
get derived on demand:

* phi_xx is the identity automorphism of G_x/{e} (singleton cosets), and
* phi_yx is the inverse of phi_xy, realized by swapping the two systems.

The K-side coset list of a record is kept in image order: k.cosets[g] is
phi applied to h.cosets[g], so the index map of every record is literally
the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import InvalidFrameError, NotRelatedError
from .groups import (
    CosetSystem,
    FiniteGroup,
    Mask,
    check_quotient_iso,
    complex_product,
    elements,
    enumerate_cosets,
    is_normal,
    is_subset,
)

__all__ = [
    "IsoRecord",
    "Frame",
    "InducedIso",
    "induced_iso",
    "Violation",
    "FrameCheckReport",
    "check_frame_full",
    "check_frame_reduced",
]


@dataclass(frozen=True)
class IsoRecord:
    """One quotient isomorphism G_x/H -> G_y/K with associated coset lists."""

    x: str
    y: str
    h: CosetSystem
    k: CosetSystem

    @property
    def kappa(self) -> int:
        return self.h.count


def _fmt(mask: Mask) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


def try_image(record: IsoRecord, subset: Mask) -> Optional[Mask]:
    """phi[subset] when subset is an exact union of H-cosets, else None."""
    out = 0
    covered = 0
    for hc, kc in zip(record.h.cosets, record.k.cosets):
        if is_subset(hc, subset):
            out |= kc
            covered |= hc
    return out if covered == subset else None


def try_preimage(record: IsoRecord, subset: Mask) -> Optional[Mask]:
    """phi^-1[subset] when subset is an exact union of K-cosets, else None."""
    out = 0
    covered = 0
    for hc, kc in zip(record.h.cosets, record.k.cosets):
        if is_subset(kc, subset):
            out |= hc
            covered |= kc
    return out if covered == subset else None


class Frame:
    """Validated frame data; immutable once constructed.

    Construction checks the shape of everything: blocks partition the
    declared indices, exactly one record per in-block pair x < y, and each
    stored record is a genuine quotient isomorphism (normal subgroups,
    canonical H enumeration, matching quotient sizes, homomorphic pairing).
    Whether the records fit together as a frame is a separate question,
    answered by check_frame_full / check_frame_reduced.
    """

    def __init__(
        self,
        groups: Mapping[str, FiniteGroup],
        blocks: Sequence[Sequence[str]],
        isos: Mapping[tuple[str, str], IsoRecord],
    ):
        self.groups: dict[str, FiniteGroup] = dict(groups)
        self.order: tuple[str, ...] = tuple(self.groups)
        self.pos: dict[str, int] = {x: i for i, x in enumerate(self.order)}

        seen: set[str] = set()
        normalized = []
        for block in blocks:
            members = list(block)
            for x in members:
                if x not in self.groups:
                    raise InvalidFrameError(f"block mentions unknown index {x!r}")
                if x in seen:
                    raise InvalidFrameError(f"index {x!r} appears in two blocks")
                seen.add(x)
            normalized.append(tuple(sorted(members, key=self.pos.__getitem__)))
        missing = [x for x in self.order if x not in seen]
        if missing:
            raise InvalidFrameError(f"index {missing[0]!r} belongs to no block")
        normalized.sort(key=lambda b: self.pos[b[0]])
        self.blocks: tuple[tuple[str, ...], ...] = tuple(normalized)
        self._block_of: dict[str, int] = {
            x: i for i, b in enumerate(self.blocks) for x in b
        }

        self.isos: dict[tuple[str, str], IsoRecord] = dict(isos)
        for (x, y), record in self.isos.items():
            self._validate_record(x, y, record)
        for block in self.blocks:
            for i, x in enumerate(block):
                for y in block[i + 1 :]:
                    if (x, y) not in self.isos:
                        raise InvalidFrameError(f"missing isomorphism for pair ({x},{y})")

        self._derived: dict[tuple[str, str], IsoRecord] = {}
        self._verdict: Optional[FrameCheckReport] = None

    def _validate_record(self, x: str, y: str, record: IsoRecord) -> None:
        if x not in self.groups or y not in self.groups:
            raise InvalidFrameError(f"isomorphism for unknown pair ({x},{y})")
        if record.x != x or record.y != y:
            raise InvalidFrameError(f"record filed under ({x},{y}) names ({record.x},{record.y})")
        if self.pos[x] >= self.pos[y]:
            raise InvalidFrameError(f"isomorphism ({x},{y}) must have x declared before y")
        if self._block_of[x] != self._block_of[y]:
            raise InvalidFrameError(f"isomorphism ({x},{y}) crosses blocks")
        gx, gy = self.groups[x], self.groups[y]
        if not is_normal(gx, record.h.subgroup):
            raise InvalidFrameError(f"H for ({x},{y}) = {_fmt(record.h.subgroup)} is not normal")
        if not is_normal(gy, record.k.subgroup):
            raise InvalidFrameError(f"K for ({x},{y}) = {_fmt(record.k.subgroup)} is not normal")
        if record.h != enumerate_cosets(gx, record.h.subgroup):
            raise InvalidFrameError(f"H-cosets for ({x},{y}) are not in canonical order")
        if record.h.count != record.k.count:
            raise InvalidFrameError(
                f"quotient sizes for ({x},{y}) differ: {record.h.count} vs {record.k.count}"
            )
        canonical_k = enumerate_cosets(gy, record.k.subgroup)
        try:
            mapping = [canonical_k.index_of(kc) for kc in record.k.cosets]
        except ValueError:
            raise InvalidFrameError(f"K-cosets for ({x},{y}) are not cosets of K") from None
        verdict = check_quotient_iso(gx, record.h.subgroup, gy, record.k.subgroup, mapping)
        if not verdict.ok:
            raise InvalidFrameError(
                f"pair ({x},{y}) is not a quotient isomorphism: {verdict.witness}"
            )

    # -- queries ---------------------------------------------------------

    def related(self, x: str, y: str) -> bool:
        return self._block_of[x] == self._block_of[y]

    def block_of(self, x: str) -> int:
        return self._block_of[x]

    def resolve_iso(self, x: str, y: str) -> IsoRecord:
        """The record for any related pair, deriving x = y and y > x forms."""
        if x not in self.groups or y not in self.groups:
            raise NotRelatedError(f"unknown group index {x!r} or {y!r}")
        if not self.related(x, y):
            raise NotRelatedError(f"indices {x} and {y} lie in different blocks")
        if (x, y) in self.isos:
            return self.isos[(x, y)]
        if (x, y) in self._derived:
            return self._derived[(x, y)]
        if x == y:
            n = self.groups[x].order
            singles = CosetSystem(1, tuple(1 << e for e in range(n)))
            record = IsoRecord(x, x, singles, singles)
        else:
            stored = self.isos[(y, x)]
            record = IsoRecord(x, y, stored.k, stored.h)
        self._derived[(x, y)] = record
        return record

    # -- bookkeeping for downstream consumers ----------------------------

    @property
    def last_check(self) -> Optional["FrameCheckReport"]:
        return self._verdict

    def validate(self, full: bool = False) -> "FrameCheckReport":
        return check_frame_full(self) if full else check_frame_reduced(self)

    def _signature(self):
        return (
            self.order,
            tuple((g.order, g.op) for g in self.groups.values()),
            self.blocks,
            tuple(
                (x, y, r.h.cosets, r.k.cosets)
                for (x, y), r in sorted(
                    self.isos.items(), key=lambda kv: (self.pos[kv[0][0]], self.pos[kv[0][1]])
                )
            ),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Frame):
            return NotImplemented
        return self._signature() == other._signature()

    def __repr__(self) -> str:
        return f"Frame(indices={list(self.order)}, blocks={[list(b) for b in self.blocks]})"


@dataclass(frozen=True)
class InducedIso:
    """Isomorphisms induced on quotients by the coarse subgroups of a triple.

    For indices x, y, z the coarse subgroups are P0 = K_xy*H_yz inside G_y,
    M0 its preimage under phi_xy, and N0 its image under phi_yz.  The three
    coset lists run in parallel: m.cosets[i] maps to p.cosets[i] maps to
    n.cosets[i] under the induced maps.
    """

    x: str
    y: str
    z: str
    m: CosetSystem
    p: CosetSystem
    n: CosetSystem


def induced_iso(frame: Frame, x: str, y: str, z: str) -> InducedIso:
    rxy = frame.resolve_iso(x, y)
    ryz = frame.resolve_iso(y, z)
    gy = frame.groups[y]
    p0 = complex_product(gy, rxy.k.subgroup, ryz.h.subgroup)
    p = enumerate_cosets(gy, p0)
    m_cosets = []
    n_cosets = []
    for pc in p.cosets:
        m = try_preimage(rxy, pc)
        n = try_image(ryz, pc)
        if m is None or n is None:
            raise InvalidFrameError(
                f"coarse coset {_fmt(pc)} does not split along ({x},{y},{z})"
            )
        m_cosets.append(m)
        n_cosets.append(n)
    return InducedIso(
        x,
        y,
        z,
        CosetSystem(m_cosets[0], tuple(m_cosets)),
        p,
        CosetSystem(n_cosets[0], tuple(n_cosets)),
    )


# -- frame conditions ----------------------------------------------------


@dataclass(frozen=True)
class Violation:
    condition: str
    where: tuple[str, ...]
    detail: str

    def __str__(self) -> str:
        spot = ",".join(self.where)
        return f"violation ({self.condition}) at ({spot}): {self.detail}"


@dataclass(frozen=True)
class FrameCheckReport:
    mode: str
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        head = f"frame check ({self.mode}): {'PASS' if self.ok else 'FAIL'}"
        return [head, *map(str, self.violations)]


def _check_identity(frame: Frame, x: str) -> list[Violation]:
    record = frame.resolve_iso(x, x)
    n = frame.groups[x].order
    out = []
    if record.kappa != n:
        out.append(Violation("i", (x,), f"kappa is {record.kappa}, group order is {n}"))
    elif record.h.subgroup != 1 or any(c.bit_count() != 1 for c in record.h.cosets):
        out.append(Violation("i", (x,), "cosets of the square pair are not singletons"))
    elif record.k.cosets != record.h.cosets:
        out.append(Violation("i", (x,), "square-pair map is not the identity"))
    return out


def _check_converse(frame: Frame, x: str, y: str) -> list[Violation]:
    fwd = frame.resolve_iso(x, y)
    back = frame.resolve_iso(y, x)
    if back.h.cosets != fwd.k.cosets or back.k.cosets != fwd.h.cosets:
        return [Violation("ii", (x, y), "reverse record is not the coset-map inverse")]
    return []


def _check_image(frame: Frame, x: str, y: str, z: str, both: bool) -> list[Violation]:
    rxy = frame.resolve_iso(x, y)
    ryz = frame.resolve_iso(y, z)
    rxz = frame.resolve_iso(x, z)
    gx = frame.groups[x]
    gy = frame.groups[y]
    gz = frame.groups[z]
    out = []
    src = complex_product(gx, rxy.h.subgroup, rxz.h.subgroup)
    lhs = try_image(rxy, src)
    rhs = complex_product(gy, rxy.k.subgroup, ryz.h.subgroup)
    if lhs is None:
        out.append(Violation("iii", (x, y, z), f"{_fmt(src)} is not a union of H-cosets"))
    elif lhs != rhs:
        out.append(
            Violation("iii", (x, y, z), f"image of H_xy*H_xz is {_fmt(lhs)}, expected {_fmt(rhs)}")
        )
    if both:
        lhs2 = try_image(ryz, rhs)
        rhs2 = complex_product(gz, rxz.k.subgroup, ryz.k.subgroup)
        if lhs2 is None:
            out.append(Violation("iii", (x, y, z), f"{_fmt(rhs)} is not a union of H-cosets"))
        elif lhs2 != rhs2:
            out.append(
                Violation(
                    "iii", (x, y, z), f"image of K_xy*H_yz is {_fmt(lhs2)}, expected {_fmt(rhs2)}"
                )
            )
    return out


def _check_induced(frame: Frame, x: str, y: str, z: str) -> list[Violation]:
    ind = induced_iso(frame, x, y, z)
    rxz = frame.resolve_iso(x, z)
    if not is_subset(rxz.h.subgroup, ind.m.subgroup):
        return [
            Violation(
                "iv",
                (x, y, z),
                f"H_xz = {_fmt(rxz.h.subgroup)} is not inside M0 = {_fmt(ind.m.subgroup)}",
            )
        ]
    out = []
    for mc, nc in zip(ind.m.cosets, ind.n.cosets):
        img = try_image(rxz, mc)
        if img != nc:
            shown = "not a union of H_xz-cosets" if img is None else _fmt(img)
            out.append(
                Violation(
                    "iv",
                    (x, y, z),
                    f"direct image of {_fmt(mc)} is {shown}, induced route gives {_fmt(nc)}",
                )
            )
    return out


def check_frame_full(frame: Frame) -> FrameCheckReport:
    """Check the frame conditions over every related pair and triple."""
    violations: list[Violation] = []
    for block in frame.blocks:
        for x in block:
            violations += _check_identity(frame, x)
        for x in block:
            for y in block:
                violations += _check_converse(frame, x, y)
        for x in block:
            for y in block:
                for z in block:
                    violations += _check_image(frame, x, y, z, both=False)
                    violations += _check_induced(frame, x, y, z)
    report = FrameCheckReport("full", tuple(violations))
    frame._verdict = report
    return report


def check_frame_reduced(frame: Frame) -> FrameCheckReport:
    """Check only the ascending instances; equivalent to the full check.

    Squares are checked for every x, converses for x < y, and the image and
    induced-map conditions for x < y < z, with a second image equation that
    the full sweep would reach through descending triples.
    """
    violations: list[Violation] = []
    for block in frame.blocks:
        for x in block:
            violations += _check_identity(frame, x)
        for i, x in enumerate(block):
            for y in block[i + 1 :]:
                violations += _check_converse(frame, x, y)
        for i, x in enumerate(block):
            for j, y in enumerate(block[i + 1 :], i + 1):
                for z in block[j + 1 :]:
                    violations += _check_image(frame, x, y, z, both=True)
                    violations += _check_induced(frame, x, y, z)
    report = FrameCheckReport("reduced", tuple(violations))
    frame._verdict = report
    return report
