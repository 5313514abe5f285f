"""Command-line interface: ``ybsets <command> ...``.

Exit status is 0 on success, 1 when a property check fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import (
    TooLarge,
    calculus_relations_x,
    calculus_relations_y,
    quotient_dimension,
    relations_x,
    relations_y,
)
from .cotwist import rcotwist_report
from .datum import InvalidBasisOverride, NotLevelTwo, UnequalCycles, build_datum
from .diagonal import (
    SingularBasis,
    build_y_basis,
    check_diagonal_in_basis,
    eigen_check,
    generator_label,
    mu_table,
    verify_diagonal,
)
from .enumerate import CSV_HEADER, CapExceeded, classify, enumerate_sfss
from .io import export_dot, load_basis, load_solution
from .permgroup import DEFAULT_MAX_GROUP, GroupTooLarge, is_abelian, left_action_group, orbits
from .retraction import NotSymmetricSet, level2_criterion, mpl
from .solution import FLAGS, SolutionError, check_axioms

OK, FAILED, BAD_INPUT = 0, 1, 2


def _flag(v) -> str:
    return "true" if v else "false"


def _emit(lines) -> None:
    for line in lines:
        print(line)


def _names(qs, xs) -> str:
    return " ".join(qs.names[x] for x in xs)


def cmd_validate(args) -> int:
    qs = load_solution(args.file).qs
    rep = check_axioms(qs)
    out = [f"size: {qs.size}"]
    for f in FLAGS:
        out.append(f"{f}: {_flag(rep.flags[f])}")
        wit = rep.witnesses[f]
        if wit is not None:
            parts = [w if isinstance(w, str) else qs.names[w] for w in wit]
            out.append(f"{f}_witness: {' '.join(parts)}")
    out.append(f"class: {', '.join(rep.tags) or 'quadratic set'}")
    _emit(out)
    return OK if rep.is_symmetric else FAILED


def cmd_analyze(args) -> int:
    qs = load_solution(args.file).qs
    dec = orbits(qs)
    group = left_action_group(qs, max_size=args.max_group)
    ab, wit = is_abelian(group)
    out = [f"size: {qs.size}", f"orbits: {dec.t}", f"nontrivial_orbits: {dec.t0}"]
    for i, orb in enumerate(dec.orbits):
        out.append(f"orbit {i + 1}: {_names(qs, orb)}")
    out.append(f"group_order: {group.order}")
    out.append(f"abelian: {_flag(ab)}")
    if wit is not None:
        out.append(f"noncommuting: {qs.names[wit[0]]} {qs.names[wit[1]]}")
    try:
        res = mpl(qs)
        out.append(f"mpl: {res}")
        out.append(f"level2_criterion: {_flag(level2_criterion(qs))}")
    except NotSymmetricSet as exc:
        out.append(f"mpl: undefined ({exc})")
    for d in range(2, args.max_degree + 1):
        try:
            out.append(f"hilbert_degree_{d}: {quotient_dimension(qs, d)}")
        except TooLarge:
            out.append(f"hilbert_degree_{d}: skipped")
    _emit(out)
    return OK


def _datum(args):
    parsed = load_solution(args.file)
    return parsed.qs, build_datum(parsed.qs, parsed.basis, max_group=args.max_group)


def cmd_datum(args) -> int:
    qs, datum = _datum(args)
    out = [f"orbits: {datum.t}", f"nontrivial_orbits: {datum.t0}"]
    for od in datum.orbits:
        i = od.index + 1
        out.append(f"orbit {i}: {_names(qs, od.points)}")
        if od.trivial:
            continue
        out.append(f"orbit {i} orders: {' '.join(map(str, od.orders))}")
        words = ", ".join(_names(qs, w) for w in od.basis_words)
        out.append(f"orbit {i} basis: {words}")
        for j in range(datum.t):
            if j != od.index:
                out.append(f"orbit {i} sigma {j + 1}: ({','.join(map(str, od.coords[j]))})")
        out.append(f"orbit {i} enumeration: {_names(qs, od.enumeration)}")
    _emit(out)
    return OK


def cmd_diagonalize(args) -> int:
    if args.check_basis:
        qs = load_solution(args.file).qs
        bf = load_basis(args.check_basis, qs)
        res = check_diagonal_in_basis(qs, bf.vectors)
        out = [f"diagonalizable: {_flag(res.diagonalizable)}"]
        if res.diagonalizable:
            for (a, b), m in sorted(res.mu.items()):
                out.append(f"mu {a} {b}: {m}")
        else:
            out.append(f"first_obstruction: {res.first_obstruction}")
            for ob in res.obstructions:
                out.append(f"obstruction: {ob}")
        _emit(out)
        return OK if res.diagonalizable else FAILED
    qs, datum = _datum(args)
    basis = build_y_basis(datum)
    eig = eigen_check(qs, datum, basis)
    mu = mu_table(datum)
    rep = verify_diagonal(qs, basis, mu, strict=False)
    forms = rep.forms()
    out = [
        f"generators: {len(basis)}",
        f"eigen_checks: {eig.checked}",
        f"pairs: {forms['pairs']}",
        f"swapped_form_pairs: {forms['swapped']}",
        f"unswapped_form_pairs: {forms['unswapped']}",
        f"diagonal: {_flag(rep.ok)}",
    ]
    for (j, i, eta), val in sorted(mu.items()):
        out.append(f"mu {j + 1} {generator_label(datum, (i, eta))}: {val}")
    for (a, b), res in rep.pairs.items():
        if a < b:
            out.append(f"R {basis.label(a)} {basis.label(b)}: {res.swapped}")
    _emit(out)
    return OK if rep.ok else FAILED


def cmd_relations(args) -> int:
    if args.basis == "x":
        qs = load_solution(args.file).qs
        rels = calculus_relations_x(qs) if args.calculus else relations_x(qs)
    else:
        _, datum = _datum(args)
        mu = mu_table(datum)
        rels = calculus_relations_y(datum, mu) if args.calculus else relations_y(datum, mu)
    sys.stdout.write(rels.text())
    return OK


def cmd_cotwist(args) -> int:
    qs = load_solution(args.file).qs
    rep = rcotwist_report(qs)
    _emit(rep.lines())
    good = rep.two_imply_third and rep.mpl_equivalence is not False
    return OK if good else FAILED


def cmd_enumerate(args) -> int:
    stream = list(enumerate_sfss(args.order, dedup=args.dedup))
    rows = classify(stream)
    lines = [CSV_HEADER] + [r.csv() for r in rows]
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    for r in rows:
        _emit([
            f"n: {r.n}",
            f"count: {r.count}",
            f"by_mpl: {', '.join(f'{k}={v}' for k, v in sorted(r.by_mpl.items(), key=lambda kv: str(kv[0])))}",
            f"abelian_count: {r.abelian_count}",
            f"diagonalizable_count: {r.diagonalizable_count}",
        ])
    return OK


def cmd_graph(args) -> int:
    qs = load_solution(args.file).qs
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(export_dot(qs))
    print(f"wrote: {args.output}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ybsets", description="Finite set-theoretic Yang-Baxter solutions.")
    p.add_argument("--max-group", type=int, default=DEFAULT_MAX_GROUP, help="largest group to enumerate")
    p.add_argument("--max-degree", type=int, default=3, help="top degree for algebra checks")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="orbits, group, multipermutation level")
    s.add_argument("file")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("datum", help="complete datum of a level 2 solution")
    s.add_argument("file")
    s.set_defaults(func=cmd_datum)

    s = sub.add_parser("diagonalize", help="eigenbasis and diagonal form of R")
    s.add_argument("file")
    s.add_argument("--check-basis", metavar="BASISFILE")
    s.set_defaults(func=cmd_diagonalize)

    s = sub.add_parser("relations", help="defining relations of the quadratic algebra")
    s.add_argument("file")
    s.add_argument("--basis", choices=("x", "y"), required=True)
    s.add_argument("--calculus", action="store_true")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("cotwist", help="f map and factorization report")
    s.add_argument("file")
    s.set_defaults(func=cmd_cotwist)

    s = sub.add_parser("enumerate", help="all square-free symmetric sets of one order")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--dedup", action="store_true")
    s.add_argument("--csv", metavar="PATH")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("graph", help="DOT drawing of the left actions")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_graph)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, SolutionError, InvalidBasisOverride, SingularBasis, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except (NotLevelTwo, UnequalCycles, GroupTooLarge, TooLarge) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
