"""Exhaustive search for square-free symmetric sets of small order."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator

from .datum import build_datum
from .diagonal import build_y_basis, verify_diagonal
from .permgroup import is_abelian, left_action_group
from .retraction import mpl
from .solution import QuadraticSet, from_left_actions

DEFAULT_CAP = 6


class CapExceeded(ValueError):
    pass


def _candidates(n: int, x: int) -> list[tuple[int, ...]]:
    # permutations fixing x, in lexicographic order
    return [p for p in permutations(range(n)) if p[x] == x]


def _inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return inv


def enumerate_sfss(n: int, cap: int = DEFAULT_CAP, dedup: bool = False) -> Iterator[QuadraticSet]:
    """Labelled square-free symmetric sets on n points, in lexicographic order of (L_0, ..., L_n-1).

    Actions are chosen element by element.  A partial assignment is pruned
    as soon as involutivity, L_{L_x y} L_y^-1 x = x, or condition l1,
    L_x L_y = L_{L_x y} L_{R_y x}, fails on a pair or triple whose actions
    are all already known.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > cap:
        raise CapExceeded(f"order {n} exceeds the cap {cap}")
    names = [f"x{i + 1}" for i in range(n)]
    cands = [_candidates(n, x) for x in range(n)]
    acts: list = [None] * n
    invs: list = [None] * n
    seen = set()

    def consistent(k: int) -> bool:
        # constraints whose four actions are known and which involve k
        for x in range(k + 1):
            Lx = acts[x]
            for y in range(k + 1):
                a, b = Lx[y], invs[y][x]
                if a > k or b > k or k not in (x, y, a, b):
                    continue
                La, Lb, Ly = acts[a], acts[b], acts[y]
                if La[b] != x or Lb[y] != a:
                    return False
                if any(Lx[Ly[z]] != La[Lb[z]] for z in range(n)):
                    return False
        return True

    def search(k: int):
        if k == n:
            qs = from_left_actions(names, [list(a) for a in acts])
            if dedup:
                key = canonical_form(qs)
                if key in seen:
                    return
                seen.add(key)
            yield qs
            return
        for p in cands[k]:
            acts[k] = p
            invs[k] = _inverse(p)
            if consistent(k):
                yield from search(k + 1)
        acts[k] = None
        invs[k] = None

    yield from search(0)


def relabel(qs: QuadraticSet, perm) -> tuple[tuple[int, ...], ...]:
    """Left table after renaming element x to perm[x]."""
    n = qs.size
    inv = _inverse(perm)
    return tuple(
        tuple(perm[qs.left_table[inv[a]][inv[b]]] for b in range(n)) for a in range(n)
    )


def canonical_form(qs: QuadraticSet) -> tuple[tuple[int, ...], ...]:
    """Lexicographically smallest left table over all relabellings."""
    return min(relabel(qs, p) for p in permutations(range(qs.size)))


def from_table(table) -> QuadraticSet:
    names = [f"x{i + 1}" for i in range(len(table))]
    return from_left_actions(names, [list(row) for row in table])


@dataclass
class ClassRow:
    n: int
    count: int = 0
    by_mpl: dict = field(default_factory=dict)
    abelian_count: int = 0
    diagonalizable_count: int = 0

    def csv(self) -> str:
        mpls = ";".join(f"{k}:{v}" for k, v in sorted(self.by_mpl.items(), key=lambda kv: str(kv[0])))
        return f"{self.n},{self.count},{mpls},{self.abelian_count},{self.diagonalizable_count}"


CSV_HEADER = "n,count,by_mpl,abelian_count,diagonalizable_count"


def diagonal_verified(qs: QuadraticSet) -> bool:
    """True when the constructed eigenbasis makes R diagonal (mpl 2 solutions)."""
    level = mpl(qs).level
    if level != 2:
        return False
    datum = build_datum(qs)
    return verify_diagonal(qs, build_y_basis(datum)).ok


def classify(stream: Iterable[QuadraticSet]) -> list[ClassRow]:
    """Aggregate per order.  ``diagonalizable_count`` counts solutions of mpl <= 2.

    For mpl 2 the eigenbasis is constructed and verified; the trivial solution
    (mpl 0 or 1) is already diagonal in the x-basis.
    """
    rows: dict[int, ClassRow] = {}
    for qs in stream:
        row = rows.setdefault(qs.size, ClassRow(qs.size))
        row.count += 1
        level = mpl(qs).level
        row.by_mpl[level] = row.by_mpl.get(level, 0) + 1
        if is_abelian(left_action_group(qs))[0]:
            row.abelian_count += 1
        if level is not None and level <= 1:
            row.diagonalizable_count += 1
        elif level == 2 and diagonal_verified(qs):
            row.diagonalizable_count += 1
    return [rows[k] for k in sorted(rows)]
