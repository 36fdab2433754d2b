"""The atomic relation algebra that a checked frame generates.

Atoms are index triples ((x,y),alpha): over the pair of groups (G_x, G_y)
the alpha-th relation glues H-cosets to shifted K-cosets.  Everything the
algebra does (converse, composition, the Boolean operations) happens on
atom index sets; concrete pair sets are only materialized on request, which
is what the relation oracle then cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import FrameMismatchError, InvalidFrameError, UncheckedFrameError
from .frames import Frame, check_frame_reduced
from .groups import (
    complex_inverse,
    complex_product,
    elements,
    is_subset,
    iter_bits,
    left_translate,
    right_translate,
)
from .relations import ConcreteRelation

__all__ = [
    "AtomIndex",
    "BaseSpace",
    "FrameElement",
    "MeasureEntry",
    "MeasureReport",
    "GroupRelationAlgebra",
]


class AtomIndex(NamedTuple):
    x: str
    y: str
    alpha: int

    def label(self) -> str:
        return f"(({self.x},{self.y}),{self.alpha})"


class BaseSpace:
    """Global element ids: groups laid out end to end in declaration order."""

    def __init__(self, frame: Frame):
        self.offsets: dict[str, int] = {}
        total = 0
        for x in frame.order:
            self.offsets[x] = total
            total += frame.groups[x].order
        self.size = total

    def global_id(self, x: str, e: int) -> int:
        return self.offsets[x] + e

    def span(self, x: str, order: int) -> int:
        """Bitmask of the ids belonging to group x."""
        return ((1 << order) - 1) << self.offsets[x]


class FrameElement:
    """A union of atoms of one frame, kept as an atom-index set."""

    __slots__ = ("algebra", "atoms")

    def __init__(self, algebra: "GroupRelationAlgebra", atoms: frozenset[AtomIndex]):
        self.algebra = algebra
        self.atoms = atoms

    def _require_same(self, other: "FrameElement") -> None:
        if not isinstance(other, FrameElement) or self.algebra.frame is not other.algebra.frame:
            raise FrameMismatchError("elements belong to different frames")

    def union(self, other: "FrameElement") -> "FrameElement":
        self._require_same(other)
        return FrameElement(self.algebra, self.atoms | other.atoms)

    def intersect(self, other: "FrameElement") -> "FrameElement":
        self._require_same(other)
        return FrameElement(self.algebra, self.atoms & other.atoms)

    def complement(self) -> "FrameElement":
        return FrameElement(self.algebra, self.algebra.all_atoms - self.atoms)

    __or__ = union
    __and__ = intersect

    def converse(self) -> "FrameElement":
        return self.algebra.converse(self)

    def compose(self, other: "FrameElement") -> "FrameElement":
        return self.algebra.compose(self, other)

    def relation(self) -> ConcreteRelation:
        return self.algebra.materialize(self)

    def sorted_atoms(self) -> list[AtomIndex]:
        return sorted(self.atoms, key=self.algebra.atom_key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FrameElement):
            return NotImplemented
        return self.algebra.frame is other.algebra.frame and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash((id(self.algebra.frame), self.atoms))

    def __len__(self) -> int:
        return len(self.atoms)

    def __repr__(self) -> str:
        inner = ",".join(a.label() for a in self.sorted_atoms())
        return "{" + inner + "}"


@dataclass(frozen=True)
class MeasureEntry:
    x: str
    atom: AtomIndex
    measure: int


@dataclass(frozen=True)
class MeasureReport:
    entries: tuple[MeasureEntry, ...]
    pair_dense: bool
    singleton_dense: bool


class GroupRelationAlgebra:
    """Atom-level operations over a frame that already passed a check."""

    def __init__(self, frame: Frame):
        report = frame.last_check
        if report is None:
            raise UncheckedFrameError(
                "frame has not been checked; run check_frame_reduced (or _full) first"
            )
        if not report.ok:
            raise InvalidFrameError("frame failed its check; no algebra exists for it")
        self.frame = frame
        self.base = BaseSpace(frame)
        atoms: list[AtomIndex] = []
        for x in frame.order:
            for y in frame.order:
                if frame.related(x, y):
                    kappa = frame.resolve_iso(x, y).kappa
                    atoms.extend(AtomIndex(x, y, a) for a in range(kappa))
        self._atoms = tuple(atoms)
        self.all_atoms = frozenset(atoms)
        self._compose_cache: dict[tuple[AtomIndex, AtomIndex], frozenset[AtomIndex]] = {}
        self._relation_cache: dict[AtomIndex, ConcreteRelation] = {}

    # -- atom bookkeeping ------------------------------------------------

    def atoms(self) -> tuple[AtomIndex, ...]:
        return self._atoms

    def atom_key(self, a: AtomIndex) -> tuple[int, int, int]:
        return (self.frame.pos[a.x], self.frame.pos[a.y], a.alpha)

    def _require_atom(self, a: AtomIndex) -> None:
        if a not in self.all_atoms:
            raise ValueError(f"{a!r} is not an atom of this frame")

    def element(self, atoms: Iterable[AtomIndex]) -> FrameElement:
        out = frozenset(atoms)
        for a in out:
            self._require_atom(a)
        return FrameElement(self, out)

    def zero(self) -> FrameElement:
        return FrameElement(self, frozenset())

    def unit(self) -> FrameElement:
        return FrameElement(self, self.all_atoms)

    def identity_element(self) -> FrameElement:
        return FrameElement(self, frozenset(AtomIndex(x, x, 0) for x in self.frame.order))

    # -- the operations --------------------------------------------------

    def converse_atom(self, a: AtomIndex) -> AtomIndex:
        self._require_atom(a)
        record = self.frame.resolve_iso(a.x, a.y)
        inv = complex_inverse(self.frame.groups[a.x], record.h.cosets[a.alpha])
        return AtomIndex(a.y, a.x, record.h.index_of(inv))

    def compose_atoms(self, a: AtomIndex, b: AtomIndex) -> FrameElement:
        key = (a, b)
        hit = self._compose_cache.get(key)
        if hit is None:
            hit = self._compose_atoms_raw(a, b)
            self._compose_cache[key] = hit
        return FrameElement(self, hit)

    def _compose_atoms_raw(self, a: AtomIndex, b: AtomIndex) -> frozenset[AtomIndex]:
        self._require_atom(a)
        self._require_atom(b)
        if a.y != b.x:
            return frozenset()
        frame = self.frame
        rxy = frame.resolve_iso(a.x, a.y)
        ryz = frame.resolve_iso(b.x, b.y)
        rxz = frame.resolve_iso(a.x, b.y)
        t = complex_product(frame.groups[a.y], rxy.k.cosets[a.alpha], ryz.h.cosets[b.alpha])
        m = 0
        for hc, kc in zip(rxy.h.cosets, rxy.k.cosets):
            if is_subset(kc, t):
                m |= hc
        return frozenset(
            AtomIndex(a.x, b.y, g)
            for g, hc in enumerate(rxz.h.cosets)
            if is_subset(hc, m)
        )

    def fast_compose_subidentity(self, a: AtomIndex, b: AtomIndex) -> FrameElement:
        """Closed-form composition when a square pair is involved.

        Handles (x,x);(x,z), (x,y);(y,y) and the round trip (x,y);(y,x);
        anything else falls back to compose_atoms.
        """
        self._require_atom(a)
        self._require_atom(b)
        frame = self.frame
        if a.y != b.x:
            return self.compose_atoms(a, b)
        if a.x == a.y:
            record = frame.resolve_iso(b.x, b.y)
            target = left_translate(frame.groups[a.x], a.alpha, record.h.cosets[b.alpha])
            return self.element([AtomIndex(b.x, b.y, record.h.index_of(target))])
        if b.x == b.y:
            record = frame.resolve_iso(a.x, a.y)
            target = right_translate(frame.groups[b.x], record.k.cosets[a.alpha], b.alpha)
            return self.element([AtomIndex(a.x, a.y, record.k.index_of(target))])
        if b.y == a.x:
            record = frame.resolve_iso(a.x, a.y)
            prod = complex_product(
                frame.groups[a.x], record.h.cosets[a.alpha], record.h.cosets[b.alpha]
            )
            return self.element(AtomIndex(a.x, a.x, f) for f in elements(prod))
        return self.compose_atoms(a, b)

    def converse(self, e: FrameElement) -> FrameElement:
        return FrameElement(self, frozenset(self.converse_atom(a) for a in e.atoms))

    def compose(self, e1: FrameElement, e2: FrameElement) -> FrameElement:
        e1._require_same(e2)
        acc: set[AtomIndex] = set()
        for a in e1.atoms:
            for b in e2.atoms:
                if a.y == b.x:
                    acc |= self.compose_atoms(a, b).atoms
        return FrameElement(self, frozenset(acc))

    # -- materialization -------------------------------------------------

    def atom_relation(self, a: AtomIndex) -> ConcreteRelation:
        hit = self._relation_cache.get(a)
        if hit is None:
            self._require_atom(a)
            frame = self.frame
            record = frame.resolve_iso(a.x, a.y)
            gy = frame.groups[a.y]
            offx = self.base.offsets[a.x]
            offy = self.base.offsets[a.y]
            shift = record.k.cosets[a.alpha]
            pairs = []
            for hc, kc in zip(record.h.cosets, record.k.cosets):
                cols = [offy + q for q in elements(complex_product(gy, kc, shift))]
                for p in iter_bits(hc):
                    row = offx + p
                    pairs.extend((row, col) for col in cols)
            hit = ConcreteRelation.from_pairs(self.base.size, pairs)
            self._relation_cache[a] = hit
        return hit

    def materialize(self, e: FrameElement) -> ConcreteRelation:
        rows = [0] * self.base.size
        for a in e.atoms:
            for i, row in enumerate(self.atom_relation(a).rows):
                rows[i] |= row
        return ConcreteRelation(self.base.size, tuple(rows))

    def unit_relation(self) -> ConcreteRelation:
        """The union of all rectangles G_x x G_y over related pairs."""
        rows = [0] * self.base.size
        for block in self.frame.blocks:
            cols = 0
            for y in block:
                cols |= self.base.span(y, self.frame.groups[y].order)
            for x in block:
                off = self.base.offsets[x]
                for e in range(self.frame.groups[x].order):
                    rows[off + e] = cols
        return ConcreteRelation(self.base.size, tuple(rows))

    def identity_relation(self) -> ConcreteRelation:
        return ConcreteRelation(self.base.size, tuple(1 << i for i in range(self.base.size)))

    # -- reporting -------------------------------------------------------

    def measure_report(self) -> MeasureReport:
        """Sub-identity atoms with their measures; also re-verifies that every
        square atom is a bijection of its group."""
        entries = []
        for x in self.frame.order:
            n = self.frame.groups[x].order
            off = self.base.offsets[x]
            for alpha in range(n):
                rel = self.atom_relation(AtomIndex(x, x, alpha))
                if not self._block_bijection(rel, off, n):
                    raise RuntimeError(f"square atom (({x},{x}),{alpha}) is not functional")
            entries.append(MeasureEntry(x, AtomIndex(x, x, 0), n))
        return MeasureReport(
            tuple(entries),
            pair_dense=all(e.measure <= 2 for e in entries),
            singleton_dense=all(e.measure == 1 for e in entries),
        )

    @staticmethod
    def _block_bijection(rel: ConcreteRelation, off: int, n: int) -> bool:
        span = ((1 << n) - 1) << off
        seen = 0
        for i, row in enumerate(rel.rows):
            if off <= i < off + n:
                if row.bit_count() != 1 or not is_subset(row, span):
                    return False
                seen |= row
            elif row:
                return False
        return seen == span

    def is_simple(self) -> bool:
        """Simple iff there is exactly one (nonempty) block."""
        return len(self.frame.order) > 0 and len(self.frame.blocks) == 1

    def decompose(self) -> list[Frame]:
        """One checked sub-frame per block; empty list for the empty frame."""
        out = []
        for block in self.frame.blocks:
            ids = set(block)
            groups = {x: self.frame.groups[x] for x in self.frame.order if x in ids}
            isos = {key: rec for key, rec in self.frame.isos.items() if key[0] in ids}
            component = Frame(groups, [block], isos)
            if not check_frame_reduced(component).ok:
                raise RuntimeError(f"component {block} unexpectedly fails the frame check")
            out.append(component)
        return out
