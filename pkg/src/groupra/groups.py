"""Finite groups as operation tables, plus subgroup / coset machinery.

Elements of a group of order n are the indices 0..n-1, with 0 always the
identity (tables are renumbered on validation if needed).  Subsets are
bitmasks: bit e is set iff element e belongs to the subset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    GroupTableError,
    IncompatibleQuotientsError,
    NotASubgroupError,
    NotNormalError,
)

__all__ = [
    "Mask",
    "mask_of",
    "elements",
    "is_subset",
    "full_mask",
    "FiniteGroup",
    "make_cyclic",
    "validate_table",
    "subgroup_defect",
    "is_normal",
    "CosetSystem",
    "enumerate_cosets",
    "complex_product",
    "complex_inverse",
    "left_translate",
    "right_translate",
    "quotient_group",
    "IsoCheck",
    "check_quotient_iso",
]

Mask = int


def mask_of(elems: Iterable[int]) -> Mask:
    """Bitmask for an iterable of element indices."""
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def elements(mask: Mask) -> list[int]:
    """Element indices of a bitmask, ascending."""
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def iter_bits(mask: Mask) -> Iterator[int]:
    e = 0
    while mask:
        if mask & 1:
            yield e
        mask >>= 1
        e += 1


def is_subset(a: Mask, b: Mask) -> bool:
    return not (a & ~b)


def full_mask(n: int) -> Mask:
    return (1 << n) - 1


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its full operation table.

    Invariants (checked on construction): the table is square over
    0..order-1, index 0 is a two-sided identity and ``inverse`` really
    inverts.  Associativity is *not* re-verified here; build through
    :func:`validate_table` when the table comes from outside.
    """

    order: int
    op: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    label: str = field(default="G", compare=False)

    def __post_init__(self) -> None:
        n = self.order
        if n <= 0:
            raise GroupTableError(f"group order must be positive, got {n}")
        if len(self.op) != n or any(len(row) != n for row in self.op):
            raise GroupTableError(f"operation table is not {n}x{n}")
        for i in range(n):
            if self.op[0][i] != i or self.op[i][0] != i:
                raise GroupTableError(f"index 0 is not a two-sided identity (fails at {i})")
            j = self.inverse[i]
            if not 0 <= j < n or self.op[i][j] != 0 or self.op[j][i] != 0:
                raise GroupTableError(f"inverse table wrong at element {i}")

    def mul(self, a: int, b: int) -> int:
        return self.op[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label}, order={self.order})"


def make_cyclic(n: int, label: Optional[str] = None) -> FiniteGroup:
    """The cyclic group Z_n with addition mod n."""
    if n <= 0:
        raise GroupTableError(f"cyclic group order must be positive, got {n}")
    op = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    inverse = tuple((-a) % n for a in range(n))
    return FiniteGroup(n, op, inverse, label or f"Z{n}")


def is_cyclic_table(g: FiniteGroup) -> bool:
    """True iff the table literally equals the Z_n addition table."""
    n = g.order
    return all(g.op[a][b] == (a + b) % n for a in range(n) for b in range(n))


def validate_table(table: Sequence[Sequence[int]], label: str = "G") -> FiniteGroup:
    """Check the full group axioms on a raw table and build a FiniteGroup.

    The identity is renumbered to index 0 if it sits elsewhere (a single
    transposition of labels).  Raises GroupTableError naming the first
    failing triple / missing piece.
    """
    n = len(table)
    if n == 0:
        raise GroupTableError("empty operation table")
    rows = [list(r) for r in table]
    for i, row in enumerate(rows):
        if len(row) != n:
            raise GroupTableError(f"row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise GroupTableError(f"entry ({i},{j}) = {v} out of range 0..{n - 1}")
    # locate a two-sided identity
    ident = None
    for e in range(n):
        if all(rows[e][i] == i and rows[i][e] == i for i in range(n)):
            ident = e
            break
    if ident is None:
        raise GroupTableError("no two-sided identity element")
    if ident != 0:
        # relabel by swapping 0 <-> ident
        p = list(range(n))
        p[0], p[ident] = ident, 0
        rows = [[p[rows[p[i]][p[j]]] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if rows[rows[i][j]][k] != rows[i][rows[j][k]]:
                    raise GroupTableError(
                        f"not associative at ({i},{j},{k}): "
                        f"({i}*{j})*{k} = {rows[rows[i][j]][k]} but "
                        f"{i}*({j}*{k}) = {rows[i][rows[j][k]]}"
                    )
    inverse = [0] * n
    for i in range(n):
        found = None
        for j in range(n):
            if rows[i][j] == 0 and rows[j][i] == 0:
                found = j
                break
        if found is None:
            raise GroupTableError(f"element {i} has no two-sided inverse")
        inverse[i] = found
    return FiniteGroup(n, tuple(tuple(r) for r in rows), tuple(inverse), label)


def subgroup_defect(g: FiniteGroup, h: Mask) -> Optional[str]:
    """None if h is a subgroup of g, else a human-readable witness."""
    if not is_subset(h, full_mask(g.order)):
        return f"subset {elements(h)} contains indices outside the group"
    if not h & 1:
        return "subset does not contain the identity"
    elems = elements(h)
    for a in elems:
        if not h >> g.inv(a) & 1:
            return f"inverse of {a} is {g.inv(a)}, which is missing"
        for b in elems:
            c = g.mul(a, b)
            if not h >> c & 1:
                return f"product {a}*{b} = {c} falls outside the subset"
    return None


def is_normal(g: FiniteGroup, h: Mask) -> bool:
    """Whether the subgroup h is normal in g.

    Raises NotASubgroupError (with a witness) if h is not even a subgroup.
    """
    defect = subgroup_defect(g, h)
    if defect is not None:
        raise NotASubgroupError(f"{elements(h)} is not a subgroup of {g.label}: {defect}")
    for a in g.elements():
        ai = g.inv(a)
        for b in iter_bits(h):
            if not h >> g.mul(g.mul(a, b), ai) & 1:
                return False
    return True


@dataclass(frozen=True)
class CosetSystem:
    """An enumeration of the cosets of a normal subgroup.

    cosets[0] is always the subgroup itself; the remaining cosets may be in
    any order (canonical systems sort by least element, associated systems
    follow an isomorphism's image order).
    """

    subgroup: Mask
    cosets: tuple[Mask, ...]

    def __post_init__(self) -> None:
        if not self.cosets or self.cosets[0] != self.subgroup:
            raise ValueError("coset 0 must be the subgroup itself")
        if not self.subgroup & 1:
            raise ValueError("subgroup must contain the identity")
        size = self.subgroup.bit_count()
        seen = 0
        for c in self.cosets:
            if c.bit_count() != size:
                raise ValueError("cosets must all have the subgroup's size")
            if seen & c:
                raise ValueError("cosets must be pairwise disjoint")
            seen |= c
        index = {c: i for i, c in enumerate(self.cosets)}
        object.__setattr__(self, "_index", index)

    @property
    def count(self) -> int:
        return len(self.cosets)

    def index_of(self, coset: Mask) -> int:
        """Position of a coset mask in this enumeration."""
        try:
            return self._index[coset]  # type: ignore[attr-defined]
        except KeyError:
            raise ValueError(f"{elements(coset)} is not a coset of this system") from None

    def coset_of(self, e: int) -> int:
        """Index of the coset containing element e."""
        for i, c in enumerate(self.cosets):
            if c >> e & 1:
                return i
        raise ValueError(f"element {e} lies in no coset of this system")


def enumerate_cosets(g: FiniteGroup, h: Mask) -> CosetSystem:
    """Canonical coset system of a normal subgroup: h first, then ascending
    by least element."""
    if not is_normal(g, h):
        raise NotNormalError(f"{elements(h)} is not normal in {g.label}")
    rest = []
    seen = h
    for a in g.elements():
        if seen >> a & 1:
            continue
        coset = mask_of(g.mul(a, b) for b in iter_bits(h))
        rest.append(coset)
        seen |= coset
    # ascending least element == discovery order, since we scan elements in order
    return CosetSystem(h, (h, *rest))


def complex_product(g: FiniteGroup, a: Mask, b: Mask) -> Mask:
    """Elementwise product set {x*y : x in a, y in b}."""
    out = 0
    for x in iter_bits(a):
        row = g.op[x]
        for y in iter_bits(b):
            out |= 1 << row[y]
    return out


def complex_inverse(g: FiniteGroup, a: Mask) -> Mask:
    """Elementwise inverse set {x^-1 : x in a}."""
    out = 0
    for x in iter_bits(a):
        out |= 1 << g.inverse[x]
    return out


def left_translate(g: FiniteGroup, x: int, a: Mask) -> Mask:
    row = g.op[x]
    out = 0
    for y in iter_bits(a):
        out |= 1 << row[y]
    return out


def right_translate(g: FiniteGroup, a: Mask, y: int) -> Mask:
    out = 0
    for x in iter_bits(a):
        out |= 1 << g.op[x][y]
    return out


def quotient_group(g: FiniteGroup, h: Mask) -> FiniteGroup:
    """The quotient of g by a normal subgroup, on canonical coset indices.

    Coset index 0 (the subgroup) is the identity, so no renumbering happens;
    the table goes through validate_table as a safety net.
    """
    system = enumerate_cosets(g, h)
    reps = [elements(c)[0] for c in system.cosets]
    table = [
        [system.coset_of(g.mul(ra, rb)) for rb in reps]
        for ra in reps
    ]
    subgroup_label = "{" + ",".join(map(str, elements(h))) + "}"
    return validate_table(table, f"{g.label}/{subgroup_label}")


@dataclass(frozen=True)
class IsoCheck:
    """Outcome of a quotient-isomorphism check; witness explains failures."""

    ok: bool
    witness: Optional[str] = None


def check_quotient_iso(
    gx: FiniteGroup,
    h: Mask,
    gy: FiniteGroup,
    k: Mask,
    mapping: Sequence[int],
) -> IsoCheck:
    """Is ``mapping`` an isomorphism gx/h -> gy/k on canonical coset indices?

    The map must send coset index 0 to 0 (identity to identity), be a
    bijection, and respect the quotient operations.  A size mismatch between
    the quotients raises IncompatibleQuotientsError; all other failures come
    back as IsoCheck(False, witness).
    """
    qx = quotient_group(gx, h)
    qy = quotient_group(gy, k)
    if qx.order != qy.order:
        raise IncompatibleQuotientsError(
            f"quotient orders differ: {qx.order} vs {qy.order}"
        )
    n = qx.order
    if len(mapping) != n:
        return IsoCheck(False, f"map has {len(mapping)} entries, expected {n}")
    if any(not 0 <= v < n for v in mapping):
        return IsoCheck(False, "map entry out of range")
    if len(set(mapping)) != n:
        return IsoCheck(False, "not injective")
    if mapping[0] != 0:
        return IsoCheck(False, f"identity coset maps to {mapping[0]}, not 0")
    for a in range(n):
        for b in range(n):
            if mapping[qx.mul(a, b)] != qy.mul(mapping[a], mapping[b]):
                return IsoCheck(False, f"not homomorphic at cosets ({a},{b})")
    return IsoCheck(True)
