"""The map f(x, y) = (L_x y, x) and the factorization r = f o tau o f^-1."""

from __future__ import annotations

from dataclasses import dataclass

from .retraction import mpl
from .solution import QuadraticSet, SolutionError, braid_holds, check_axioms, inverse_table


def f_map(qs: QuadraticSet) -> QuadraticSet:
    """(X, f) with f(x, y) = (L_x y, x); needs bijective left actions."""
    n = qs.size
    for x in range(n):
        if sorted(qs.left_table[x]) != list(range(n)):
            raise SolutionError(f"left action of {qs.names[x]} is not bijective")
    flat = tuple((qs.left_table[x][y], x) for x in range(n) for y in range(n))
    return QuadraticSet(qs.names, flat)


def f_inverse(qs: QuadraticSet, x: int, y: int, inv=None) -> tuple[int, int]:
    """f^-1(x, y) = (y, L_y^-1 x)."""
    inv = inv or inverse_table(qs.left_table)
    return y, inv[y][x]


def check_factorization(qs: QuadraticSet) -> tuple[bool, tuple | None]:
    """Whether r = f o tau o f^-1 pair by pair; the witness is the first failing pair."""
    f = f_map(qs)
    inv = inverse_table(qs.left_table)
    for x in range(qs.size):
        for y in range(qs.size):
            u, v = f_inverse(qs, x, y, inv)
            if f.r(v, u) != qs.r(x, y):
                return False, (x, y)
    return True, None


def _condition_a(qs: QuadraticSet):
    # L_{x^y} = L_x for all x, y
    for x in range(qs.size):
        for y in range(qs.size):
            if qs.left_table[qs.R(y, x)] != qs.left_table[x]:
                return (x, y)
    return None


def _reduced_f_ybe(qs: QuadraticSet):
    # L_x L_y z = L_{L_x y} L_x z
    L = qs.left_table
    for x in range(qs.size):
        for y in range(qs.size):
            for z in range(qs.size):
                if L[x][L[y][z]] != L[L[x][y]][L[x][z]]:
                    return (x, y, z)
    return None


def _direct_f_ybe(f: QuadraticSet):
    for x in range(f.size):
        for y in range(f.size):
            for z in range(f.size):
                if not braid_holds(f, x, y, z):
                    return (x, y, z)
    return None


def _commuting(qs: QuadraticSet):
    L = qs.left_table
    for x in range(qs.size):
        for y in range(qs.size):
            if any(L[x][L[y][z]] != L[y][L[x][z]] for z in range(qs.size)):
                return (x, y)
    return None


@dataclass
class CotwistReport:
    condition_2a: bool
    ybe_for_f: bool
    ybe_for_r: bool
    lri: bool
    involutive: bool
    factorization: bool
    actions_commute: bool
    mpl_le_2: bool | None  # None when qs is not a square-free symmetric set
    witnesses: dict

    @property
    def two_imply_third(self) -> bool:
        a, b, c = self.condition_2a, self.ybe_for_f, self.ybe_for_r
        return (not (a and b) or c) and (not (a and c) or b) and (not (b and c) or a)

    @property
    def mpl_equivalence(self) -> bool | None:
        """Condition (a) agrees with mpl <= 2 (square-free symmetric sets only)."""
        if self.mpl_le_2 is None:
            return None
        return self.condition_2a == self.mpl_le_2

    def lines(self) -> list[str]:
        out = [
            f"condition_2a: {str(self.condition_2a).lower()}",
            f"ybe_for_f: {str(self.ybe_for_f).lower()}",
            f"ybe_for_r: {str(self.ybe_for_r).lower()}",
            f"lri: {str(self.lri).lower()}",
            f"involutive: {str(self.involutive).lower()}",
            f"factorization: {str(self.factorization).lower()}",
            f"actions_commute: {str(self.actions_commute).lower()}",
            f"two_imply_third: {str(self.two_imply_third).lower()}",
        ]
        if self.mpl_le_2 is not None:
            out.append(f"mpl_le_2: {str(self.mpl_le_2).lower()}")
            out.append(f"condition_2a_iff_mpl_le_2: {str(self.mpl_equivalence).lower()}")
        return out


def rcotwist_report(qs: QuadraticSet) -> CotwistReport:
    rep = check_axioms(qs)
    f = f_map(qs)
    wit = {
        "condition_2a": _condition_a(qs),
        "ybe_for_f": _reduced_f_ybe(qs),
        "ybe_for_r": rep.witnesses["braid_direct"],
        "actions_commute": _commuting(qs),
    }
    direct = _direct_f_ybe(f)
    if (direct is None) != (wit["ybe_for_f"] is None):
        raise RuntimeError("braid identity for f disagrees with its reduced form")
    fact, wit["factorization"] = check_factorization(qs)
    mpl_le_2 = None
    if rep.is_square_free_symmetric:
        level = mpl(qs).level
        mpl_le_2 = level is not None and level <= 2
    return CotwistReport(
        condition_2a=wit["condition_2a"] is None,
        ybe_for_f=wit["ybe_for_f"] is None,
        ybe_for_r=wit["ybe_for_r"] is None,
        lri=rep.flags["lri"],
        involutive=rep.flags["involutive"],
        factorization=fact,
        actions_commute=wit["actions_commute"] is None,
        mpl_le_2=mpl_le_2,
        witnesses=wit,
    )
