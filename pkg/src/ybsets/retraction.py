"""Retraction of symmetric sets and the multipermutation level."""

from __future__ import annotations

from dataclasses import dataclass

from .permgroup import orbits
from .solution import QuadraticSet, SolutionError, check_axioms


class NotSymmetricSet(SolutionError):
    pass


class IllDefinedInduced(RuntimeError):
    pass


@dataclass(frozen=True)
class RetractStep:
    classes: tuple[tuple[int, ...], ...]  # ordered by smallest member
    class_of: tuple[int, ...]
    induced: QuadraticSet


@dataclass(frozen=True)
class MplResult:
    level: int | None  # None: not a multipermutation solution
    chain: tuple[int, ...]  # sizes of X, Ret(X), Ret^2(X), ...

    @property
    def finite(self) -> bool:
        return self.level is not None

    def __str__(self) -> str:
        sizes = " -> ".join(map(str, self.chain))
        if self.finite:
            return f"Finite({self.level}) [{sizes}]"
        return f"NotMultipermutation(stabilized at {self.chain[-1]}) [{sizes}]"


def _require_symmetric(qs: QuadraticSet):
    rep = check_axioms(qs)
    if not rep.is_symmetric:
        bad = [f for f in ("nondegenerate", "involutive", "braid_direct") if not rep.flags[f]]
        raise NotSymmetricSet(f"not a nondegenerate symmetric set (fails: {', '.join(bad)})")
    return rep


def retract(qs: QuadraticSet, validate: bool = True) -> RetractStep:
    """Identify x ~ y iff L_x = L_y and induce the actions on classes."""
    if validate:
        _require_symmetric(qs)
    n = qs.size
    by_row: dict[tuple, list[int]] = {}
    for x in range(n):
        by_row.setdefault(qs.left_table[x], []).append(x)
    classes = sorted((tuple(c) for c in by_row.values()), key=lambda c: c[0])
    class_of = [0] * n
    for k, c in enumerate(classes):
        for x in c:
            class_of[x] = k
    m = len(classes)
    pairs = {}
    for a in range(m):
        for b in range(m):
            imgs = {
                (class_of[qs.L(x, y)], class_of[qs.R(y, x)])
                for x in classes[a] for y in classes[b]
            }
            if len(imgs) != 1:
                raise IllDefinedInduced(f"induced map depends on representatives at classes {a},{b}")
            pairs[(a, b)] = imgs.pop()
    names = tuple(f"[{qs.names[c[0]]}]" for c in classes)
    flat = tuple(pairs[(a, b)] for a in range(m) for b in range(m))
    induced = QuadraticSet(names, flat)
    if validate:
        rep = check_axioms(induced)
        if not rep.is_symmetric:
            raise IllDefinedInduced("retract is not a nondegenerate symmetric set")
    return RetractStep(tuple(classes), tuple(class_of), induced)


def retract_chain(qs: QuadraticSet, max_steps: int | None = None) -> list[QuadraticSet]:
    _require_symmetric(qs)
    steps = qs.size if max_steps is None else max_steps
    chain = [qs]
    cur = qs
    for _ in range(steps):
        if cur.size == 1:
            break
        nxt = retract(cur).induced
        chain.append(nxt)
        if nxt.size == cur.size:
            break
        cur = nxt
    return chain


def mpl(qs: QuadraticSet, max_steps: int | None = None) -> MplResult:
    chain = retract_chain(qs, max_steps)
    sizes = tuple(c.size for c in chain)
    if sizes[-1] == 1:
        return MplResult(len(chain) - 1, sizes)
    return MplResult(None, sizes)


def level2_criterion(qs: QuadraticSet) -> bool:
    """At least one nontrivial orbit, and L constant on every nontrivial orbit."""
    dec = orbits(qs)
    if dec.t0 == 0:
        return False
    for orb in dec.orbits[: dec.t0]:
        row = qs.left_table[orb[0]]
        if any(qs.left_table[x] != row for x in orb):
            return False
    return True


def left_actions_are_automorphisms(qs: QuadraticSet) -> bool:
    """Every L_x commutes with r, i.e. r(L_x y, L_x z) = (L_x, L_x) r(y, z)."""
    n = qs.size
    for x in range(n):
        Lx = qs.left_table[x]
        for y in range(n):
            for z in range(n):
                a, b = qs.r(y, z)
                if qs.r(Lx[y], Lx[z]) != (Lx[a], Lx[b]):
                    return False
    return True
