"""Command-line interface.

Exit codes: 0 success, 1 semantic failure (bad frame, refused build,
failed verification), 2 parse or usage error.  All output is sorted and
reproducible.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .algebra import AtomIndex, GroupRelationAlgebra
from .builders import build_cyclic_frame, build_power_frame
from .errors import FrameBuildError, FrameFormatError, NotRelatedError
from .fileformat import emit_frame, parse_frame
from .frames import Frame, check_frame_full, check_frame_reduced
from .groups import elements, mask_of, validate_table
from .relations import rel_compose, rel_converse
from .verification import verify_algebra

__all__ = ["main", "run"]


def _fmt_mask(mask: int) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


def _load_frame(path: str) -> Frame:
    text = Path(path).read_text(encoding="utf-8")
    return parse_frame(text)


def _load_algebra(path: str) -> GroupRelationAlgebra:
    frame = _load_frame(path)
    report = check_frame_reduced(frame)
    if not report.ok:
        for line in report.lines():
            print(line)
        raise SystemExit(1)
    return GroupRelationAlgebra(frame)


def _atom_arg(alg: GroupRelationAlgebra, x: str, y: str, alpha_token: str) -> AtomIndex:
    try:
        alpha = int(alpha_token)
    except ValueError:
        print(f"atom index must be an integer, got {alpha_token!r}", file=sys.stderr)
        raise SystemExit(2) from None
    atom = AtomIndex(x, y, alpha)
    if atom not in alg.all_atoms:
        print(f"no such atom (({x},{y}),{alpha})", file=sys.stderr)
        raise SystemExit(1)
    return atom


def _cmd_validate(args: argparse.Namespace) -> int:
    frame = _load_frame(args.file)
    report = check_frame_full(frame) if args.full else check_frame_reduced(frame)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def _cmd_atoms(args: argparse.Namespace) -> int:
    alg = _load_algebra(args.file)
    for i, atom in enumerate(alg.atoms()):
        rel = alg.atom_relation(atom)
        line = f"{i} {atom.label()} {rel.count()}"
        if args.cosets:
            record = alg.frame.resolve_iso(atom.x, atom.y)
            line += (
                f" coset={_fmt_mask(record.h.cosets[atom.alpha])}"
                f" image={_fmt_mask(record.k.cosets[atom.alpha])}"
            )
        print(line)
        if args.pairs:
            for a, b in rel.pairs():
                print(f"{a} {b}")
    return 0


def _cmd_op(args: argparse.Namespace) -> int:
    alg = _load_algebra(args.file)
    if args.kind == "conv":
        if len(args.args) != 3:
            print("conv needs <x> <y> <alpha>", file=sys.stderr)
            return 2
        atom = _atom_arg(alg, args.args[0], args.args[1], args.args[2])
        result = alg.converse_atom(atom)
        print(result.label())
        if args.check:
            ok = alg.atom_relation(result) == rel_converse(alg.atom_relation(atom))
            print(f"oracle: {'MATCH' if ok else 'MISMATCH'}")
            return 0 if ok else 1
        return 0
    if len(args.args) != 5:
        print("comp needs <x> <y> <alpha> <z> <beta>", file=sys.stderr)
        return 2
    x, y, alpha, z, beta = args.args
    first = _atom_arg(alg, x, y, alpha)
    second = _atom_arg(alg, y, z, beta)
    result = alg.compose_atoms(first, second)
    labels = [a.label() for a in result.sorted_atoms()]
    print(" ".join(labels) if labels else "empty")
    if args.check:
        expected = rel_compose(alg.atom_relation(first), alg.atom_relation(second))
        ok = alg.materialize(result) == expected
        print(f"oracle: {'MATCH' if ok else 'MISMATCH'}")
        return 0 if ok else 1
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    alg = _load_algebra(args.file)
    atoms = alg.atoms()
    print("cols: " + " ".join(a.label() for a in atoms))
    for a in atoms:
        cells = []
        for b in atoms:
            result = alg.compose_atoms(a, b)
            cells.append("{" + ",".join(t.label() for t in result.sorted_atoms()) + "}")
        conv = alg.converse_atom(a)
        print(f"{a.label()} conv {conv.label()} : " + " ".join(cells))
    return 0


def _cmd_measure(args: argparse.Namespace) -> int:
    alg = _load_algebra(args.file)
    report = alg.measure_report()
    for i, entry in enumerate(report.entries):
        print(f"{i} {entry.atom.label()} {entry.measure}")
    print(f"pair-dense: {'yes' if report.pair_dense else 'no'}")
    print(f"singleton-dense: {'yes' if report.singleton_dense else 'no'}")
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    alg = _load_algebra(args.file)
    components = alg.decompose()
    print(f"components: {len(components)}")
    for i, component in enumerate(components):
        sub = GroupRelationAlgebra(component)
        simple = "yes" if sub.is_simple() else "no"
        ids = " ".join(component.order)
        print(f"component {i}: indices {ids} ; atoms {len(sub.atoms())} ; simple {simple}")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.family == "cyclic":
            orders = [int(t) for t in args.spec.split(",") if t]
            rows = []
            for raw in Path(args.extra).read_text(encoding="utf-8").splitlines():
                body = raw.split("#", 1)[0].strip()
                if body:
                    rows.append([int(t) for t in body.split()])
            frame = build_cyclic_frame(orders, rows)
        else:
            rows = []
            for raw in Path(args.spec).read_text(encoding="utf-8").splitlines():
                body = raw.split("#", 1)[0].strip()
                if body:
                    rows.append([int(t) for t in body.split()])
            m = validate_table(rows, "M")
            n_mask = mask_of(int(t) for t in args.extra.split(",") if t)
            ids = [str(i) for i in range(args.count)]
            if args.blocks:
                blocks = [part.split(",") for part in args.blocks.split(";")]
            else:
                blocks = [ids]
            frame = build_power_frame(m, n_mask, ids, blocks)
    except (FrameBuildError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return 1
    sys.stdout.write(emit_frame(frame))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    alg = _load_algebra(args.file)
    bad = False
    for name, failures in verify_algebra(alg):
        print(f"{name}: {'PASS' if not failures else 'FAIL'}")
        for failure in failures:
            print(f"  {failure}")
        bad = bad or bool(failures)
    return 1 if bad else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupra",
        description="Group relation algebras: validate frames, list atoms, "
        "compute operations, and generate frame files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="run the frame check on a frame file")
    p.add_argument("file")
    p.add_argument("--full", action="store_true", help="sweep all triples, not just ascending")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("atoms", help="list atoms with cardinalities")
    p.add_argument("file")
    p.add_argument("--pairs", action="store_true", help="dump each atom's global-id pairs")
    p.add_argument("--cosets", action="store_true", help="show the defining cosets")
    p.set_defaults(func=_cmd_atoms)

    p = sub.add_parser("op", help="apply converse or composition to atoms")
    p.add_argument("file")
    p.add_argument("kind", choices=("conv", "comp"))
    p.add_argument("args", nargs="*")
    p.add_argument("--check", action="store_true", help="cross-check against the oracle")
    p.set_defaults(func=_cmd_op)

    p = sub.add_parser("table", help="full composition table with converse column")
    p.add_argument("file")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("measure", help="sub-identity atoms, measures, density flags")
    p.add_argument("file")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("decompose", help="split into per-block components")
    p.add_argument("file")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("gen", help="generate a frame file")
    p.add_argument("family", choices=("cyclic", "power"))
    p.add_argument("spec", help="cyclic: comma-separated orders; power: group table file")
    p.add_argument("extra", help="cyclic: kappa matrix file; power: comma-separated subgroup")
    p.add_argument("count", nargs="?", type=int, default=1, help="power: number of copies")
    p.add_argument("blocks", nargs="?", help="power: blocks like 0,1;2")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="run the full verification sweeps")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FrameFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except NotRelatedError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)


def run() -> None:
    sys.exit(main())
