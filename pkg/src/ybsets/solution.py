"""Finite quadratic sets (X, r) and the axioms of set-theoretic YBE solutions.

Elements are dense indices ``0..n-1``; names are only for presentation.
The pair map is written ``r(x, y) = (L_x(y), R_y(x))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class SolutionError(ValueError):
    pass


class NotBijective(SolutionError):
    pass


class IncompleteTable(SolutionError):
    pass


class NotAPermutation(SolutionError):
    pass


Pair = tuple[int, int]


@dataclass(frozen=True, eq=False)
class QuadraticSet:
    names: tuple[str, ...]
    pair_map: tuple[Pair, ...]  # flat, index x*n + y
    left_table: tuple[tuple[int, ...], ...] = field(init=False)
    right_table: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        n = len(self.names)
        if n < 1:
            raise SolutionError("a quadratic set needs at least one element")
        if len(set(self.names)) != n:
            raise SolutionError("element names must be unique")
        if len(self.pair_map) != n * n:
            raise IncompleteTable(f"expected {n * n} pairs, got {len(self.pair_map)}")
        seen = {}
        for k, img in enumerate(self.pair_map):
            if not (0 <= img[0] < n and 0 <= img[1] < n):
                raise SolutionError(f"image {img} out of range")
            if img in seen:
                a, b = divmod(seen[img], n)
                c, d = divmod(k, n)
                raise NotBijective(
                    f"pairs ({self.names[a]},{self.names[b]}) and ({self.names[c]},{self.names[d]}) "
                    f"both map to ({self.names[img[0]]},{self.names[img[1]]})"
                )
            seen[img] = k
        # left_table[x][y] = L_x(y); right_table[y][x] = R_y(x)
        left = tuple(tuple(self.pair_map[x * n + y][0] for y in range(n)) for x in range(n))
        right = tuple(tuple(self.pair_map[x * n + y][1] for x in range(n)) for y in range(n))
        object.__setattr__(self, "left_table", left)
        object.__setattr__(self, "right_table", right)

    @property
    def size(self) -> int:
        return len(self.names)

    def r(self, x: int, y: int) -> Pair:
        return self.pair_map[x * len(self.names) + y]

    def L(self, x: int, y: int) -> int:
        return self.left_table[x][y]

    def R(self, y: int, x: int) -> int:
        """Right action x^y, i.e. R_y(x)."""
        return self.right_table[y][x]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadraticSet):
            return NotImplemented
        return self.names == other.names and self.pair_map == other.pair_map

    def __hash__(self) -> int:
        return hash((self.names, self.pair_map))

    def __repr__(self) -> str:
        return f"QuadraticSet(n={self.size}, names={list(self.names)})"


def from_pair_map(names: Sequence[str], pair_list) -> QuadraticSet:
    """Build from a mapping or list of ``((x, y), (z, t))`` index entries."""
    n = len(names)
    items = pair_list.items() if hasattr(pair_list, "items") else pair_list
    table: dict[Pair, Pair] = {}
    for src, img in items:
        src, img = tuple(src), tuple(img)
        if src in table:
            raise SolutionError(f"pair {src} assigned twice")
        table[src] = img
    missing = [(x, y) for x in range(n) for y in range(n) if (x, y) not in table]
    if missing:
        x, y = missing[0]
        raise IncompleteTable(f"no image for ({names[x]},{names[y]}); {len(missing)} pairs missing")
    flat = tuple(table[(x, y)] for x in range(n) for y in range(n))
    return QuadraticSet(tuple(names), flat)


def _check_perm(action: Sequence[int], n: int, label: str) -> tuple[int, ...]:
    action = tuple(action)
    if len(action) != n or sorted(action) != list(range(n)):
        raise NotAPermutation(f"action of {label} is not a permutation of {n} points: {action}")
    return action


def from_left_actions(names: Sequence[str], actions: Sequence[Sequence[int]]) -> QuadraticSet:
    """r(x, y) = (L_x(y), L_y^{-1}(x)).  The result is *not* validated as a solution."""
    n = len(names)
    if len(actions) != n:
        raise SolutionError(f"need {n} actions, got {len(actions)}")
    acts = [_check_perm(a, n, names[k]) for k, a in enumerate(actions)]
    inv = []
    for a in acts:
        b = [0] * n
        for i, j in enumerate(a):
            b[j] = i
        inv.append(b)
    flat = tuple((acts[x][y], inv[y][x]) for x in range(n) for y in range(n))
    return QuadraticSet(tuple(names), flat)


def trivial_solution(n: int, names: Sequence[str] | None = None) -> QuadraticSet:
    names = list(names) if names is not None else [f"x{i + 1}" for i in range(n)]
    return from_left_actions(names, [list(range(n))] * n)


FLAGS = (
    "nondegenerate", "involutive", "square_free",
    "l1", "r1", "lr3", "braid_direct",
    "cl1", "cl2", "cr1", "cr2", "lri",
)


@dataclass(frozen=True)
class AxiomReport:
    """Flags keyed by name; ``witnesses[flag]`` is None when the flag holds."""

    flags: dict[str, bool]
    witnesses: dict[str, tuple | None]

    def __getattr__(self, name):
        flags = self.__dict__.get("flags", {})
        if name in flags:
            return flags[name]
        raise AttributeError(name)

    @property
    def is_braided(self) -> bool:
        return self.flags["nondegenerate"] and self.flags["braid_direct"]

    @property
    def is_symmetric(self) -> bool:
        return self.is_braided and self.flags["involutive"]

    @property
    def is_square_free_symmetric(self) -> bool:
        return self.is_symmetric and self.flags["square_free"]

    @property
    def tags(self) -> list[str]:
        out = []
        if self.is_braided:
            out.append("braided set")
        if self.is_symmetric:
            out.append("symmetric set")
        if self.is_square_free_symmetric:
            out.append("square-free symmetric set")
        return out


def _braid_sides(qs: QuadraticSet, x: int, y: int, z: int, r=None) -> tuple[tuple, tuple]:
    r = r or qs.r
    # r12 r23 r12
    a, b = r(x, y)
    b, c = r(b, z)
    a, b = r(a, b)
    left = (a, b, c)
    # r23 r12 r23
    b2, c2 = r(y, z)
    a2, b2 = r(x, b2)
    b2, c2 = r(b2, c2)
    return left, (a2, b2, c2)


def braid_holds(qs: QuadraticSet, x: int, y: int, z: int) -> bool:
    left, right = _braid_sides(qs, x, y, z)
    return left == right


def _l1(qs, x, y, z):
    L, R = qs.L, qs.R
    return L(x, L(y, z)) == L(L(x, y), L(R(y, x), z))


def _r1(qs, x, y, z):
    L, R = qs.L, qs.R
    return R(z, R(y, x)) == R(R(z, y), R(L(y, z), x))


def _lr3(qs, x, y, z):
    L, R = qs.L, qs.R
    return R(L(R(y, x), z), L(x, y)) == L(R(L(y, z), x), R(z, y))


def _cl1(qs, x, y):
    return qs.L(qs.R(x, y), x) == qs.L(y, x)


def _cr1(qs, x, y):
    return qs.R(qs.L(x, y), x) == qs.R(y, x)


def _cl2(qs, x, y):
    return qs.L(qs.L(x, y), x) == qs.L(y, x)


def _cr2(qs, x, y):
    return qs.R(qs.R(x, y), x) == qs.R(y, x)


def _lri(qs, x, y):
    return qs.R(x, qs.L(x, y)) == y and qs.L(x, qs.R(x, y)) == y


_PAIR_CHECKS = {"cl1": _cl1, "cl2": _cl2, "cr1": _cr1, "cr2": _cr2, "lri": _lri}
_TRIPLE_CHECKS = {"l1": _l1, "r1": _r1, "lr3": _lr3, "braid_direct": braid_holds}


def _nondegenerate_witness(qs: QuadraticSet):
    n = qs.size
    for kind, table in (("L", qs.left_table), ("R", qs.right_table)):
        for x in range(n):
            seen = {}
            for y in range(n):
                v = table[x][y]
                if v in seen:
                    return (kind, x, seen[v], y)
                seen[v] = y
    return None


def violates(qs: QuadraticSet, flag: str, witness: tuple) -> bool:
    """Re-evaluate a witness: True iff it really is a counterexample to ``flag``."""
    if flag == "nondegenerate":
        kind, x, y1, y2 = witness
        table = qs.left_table if kind == "L" else qs.right_table
        return y1 != y2 and table[x][y1] == table[x][y2]
    if flag == "involutive":
        x, y = witness
        return qs.r(*qs.r(x, y)) != (x, y)
    if flag == "square_free":
        (x,) = witness
        return qs.r(x, x) != (x, x)
    if flag in _PAIR_CHECKS:
        return not _PAIR_CHECKS[flag](qs, *witness)
    if flag in _TRIPLE_CHECKS:
        return not _TRIPLE_CHECKS[flag](qs, *witness)
    raise KeyError(flag)


def check_axioms(qs: QuadraticSet) -> AxiomReport:
    n = qs.size
    wit: dict[str, tuple | None] = {f: None for f in FLAGS}
    wit["nondegenerate"] = _nondegenerate_witness(qs)
    for x in range(n):
        if wit["square_free"] is None and qs.r(x, x) != (x, x):
            wit["square_free"] = (x,)
        for y in range(n):
            if wit["involutive"] is None and qs.r(*qs.r(x, y)) != (x, y):
                wit["involutive"] = (x, y)
            for name, fn in _PAIR_CHECKS.items():
                if wit[name] is None and not fn(qs, x, y):
                    wit[name] = (x, y)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for name, fn in _TRIPLE_CHECKS.items():
                    if wit[name] is None and not fn(qs, x, y, z):
                        wit[name] = (x, y, z)
    flags = {f: wit[f] is None for f in FLAGS}
    if flags["braid_direct"] != (flags["l1"] and flags["r1"] and flags["lr3"]):
        raise RuntimeError("braid identity disagrees with l1/r1/lr3; table evaluation bug")
    return AxiomReport(flags, wit)


def inverse_table(table: Sequence[Sequence[int]]) -> list[list[int]]:
    out = []
    for row in table:
        inv = [0] * len(row)
        for i, j in enumerate(row):
            inv[j] = i
        out.append(inv)
    return out
