"""Explicit finite permutation groups.

Groups here are tiny (they act regularly on an orbit of a solution), so a
group is stored as its full element list.  Every element carries a witness
word in the generator labels: the word ``(g1, g2, ..., gk)`` stands for the
composite ``g1 o g2 o ... o gk``, matching the left action of a semigroup
word on X.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from math import lcm
from typing import Hashable, Iterable, Sequence

DEFAULT_MAX_GROUP = 10 ** 6


class GroupTooLarge(RuntimeError):
    pass


class NotAbelian(ValueError):
    pass


class NotInGroup(KeyError):
    pass


class Perm(tuple):
    """A permutation of ``0..m-1`` given by its image tuple."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, m: int) -> "Perm":
        return cls(range(m))

    @classmethod
    def from_cycles(cls, m: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        img = list(range(m))
        for cyc in cycles:
            for k, a in enumerate(cyc):
                img[a] = cyc[(k + 1) % len(cyc)]
        if sorted(img) != list(range(m)):
            raise ValueError("cycles overlap")
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        return self[x]

    def __mul__(self, other: "Perm") -> "Perm":
        # (self * other)(x) = self(other(x))
        return Perm(self[i] for i in other)

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        out = Perm.identity(len(self))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> list[int]:
        """Lengths of all cycles, fixed points included, sorted."""
        moved = [len(c) for c in self.cycles()]
        fixed = len(self) - sum(moved)
        return sorted(moved + [1] * fixed)

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def restrict(self, points: Sequence[int]) -> "Perm":
        """Restriction to an invariant subset, relabelled by position in ``points``."""
        pos = {p: k for k, p in enumerate(points)}
        try:
            return Perm(pos[self[p]] for p in points)
        except KeyError:
            raise ValueError("subset is not invariant") from None

    def __repr__(self) -> str:
        return f"Perm({list(self)})"


@dataclass(frozen=True)
class GeneratedGroup:
    degree: int
    generators: tuple[Perm, ...]
    labels: tuple[Hashable, ...]
    elements: tuple[Perm, ...]
    index: dict
    words: tuple[tuple, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return Perm(p) in self.index

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def word_of(self, p: Perm) -> tuple:
        return self.words[self.index[Perm(p)]]

    def evaluate(self, word: Sequence) -> Perm:
        lookup = dict(zip(self.labels, self.generators))
        out = Perm.identity(self.degree)
        for lab in word:
            out = out * lookup[lab]
        return out


def generate(degree: int, generators: Sequence[Perm], labels: Sequence | None = None,
             max_size: int = DEFAULT_MAX_GROUP) -> GeneratedGroup:
    """Breadth-first closure; element 0 is the identity and words are shortest."""
    gens = tuple(Perm(g) for g in generators)
    labels = tuple(labels) if labels is not None else tuple(range(len(gens)))
    if len(labels) != len(gens):
        raise ValueError("one label per generator")
    for g in gens:
        if len(g) != degree:
            raise ValueError("generator has wrong degree")
    e = Perm.identity(degree)
    elements = [e]
    words: list[tuple] = [()]
    index = {e: 0}
    queue = deque([0])
    while queue:
        k = queue.popleft()
        p, w = elements[k], words[k]
        for g, lab in zip(gens, labels):
            q = p * g
            if q not in index:
                if len(elements) >= max_size:
                    raise GroupTooLarge(f"group exceeds {max_size} elements")
                index[q] = len(elements)
                elements.append(q)
                words.append(w + (lab,))
                queue.append(index[q])
    return GeneratedGroup(degree, gens, labels, tuple(elements), index, tuple(words))


def is_abelian(g: GeneratedGroup) -> tuple[bool, tuple | None]:
    """Exhaustive generator-pair check; returns (flag, non-commuting label pair)."""
    gens = g.generators
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            if gens[a] * gens[b] != gens[b] * gens[a]:
                return False, (g.labels[a], g.labels[b])
    return True, None


def _join(sub: set, h: Perm) -> set:
    # subgroup generated by an abelian subgroup and one more element
    return {s * q for q in _cyclic(h) for s in sub}


def _cyclic(p: Perm) -> list[Perm]:
    out = [Perm.identity(len(p))]
    q = p
    while not q.is_identity():
        out.append(q)
        q = q * p
    return out


@dataclass(frozen=True)
class AbelianStructure:
    basis: tuple[Perm, ...]
    orders: tuple[int, ...]
    words: tuple[tuple, ...]
    coords: dict  # Perm -> tuple

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def total_order(self) -> int:
        out = 1
        for p in self.orders:
            out *= p
        return out

    def lambda_set(self) -> list[tuple[int, ...]]:
        return lambda_order(self.orders)

    def element(self, m: Sequence[int]) -> Perm:
        return basis_product(self.basis, m, degree=self._degree())

    def _degree(self) -> int:
        return len(next(iter(self.coords)))


def lambda_order(orders: Sequence[int]) -> list[tuple[int, ...]]:
    """The index set Lambda enumerated with the first coordinate varying fastest."""
    rev = [range(p) for p in reversed(orders)]
    return [tuple(reversed(t)) for t in product(*rev)]


def basis_product(basis: Sequence[Perm], m: Sequence[int], degree: int) -> Perm:
    out = Perm.identity(degree)
    for u, k in zip(basis, m):
        out = out * (u ** k)
    return out


def structure_from_basis(degree: int, basis: Sequence[Perm], words: Sequence[tuple]) -> AbelianStructure:
    """Coordinates for a proposed basis; raises ValueError unless it is a direct-product basis."""
    basis = tuple(Perm(u) for u in basis)
    orders = tuple(u.order() for u in basis)
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if basis[a] * basis[b] != basis[b] * basis[a]:
                raise ValueError("basis elements do not commute")
    coords = {}
    for m in lambda_order(orders):
        p = basis_product(basis, m, degree)
        if p in coords:
            raise ValueError(f"coordinates {coords[p]} and {m} give the same element")
        coords[p] = m
    if not coords:
        coords[Perm.identity(degree)] = ()
    return AbelianStructure(basis, orders, tuple(tuple(w) for w in words), coords)


def invariant_factors(g: GeneratedGroup) -> AbelianStructure:
    """Invariant-factor basis p_1 | p_2 | ... | p_s of an abelian group.

    Repeatedly take an element of maximal order, grow a complement to the
    cyclic group it generates one element at a time, and recurse on the
    complement.  A cyclic subgroup of maximal order is always a direct factor,
    and any subgroup meeting it trivially extends to a complement, so the
    greedy search never gets stuck.
    """
    ok, wit = is_abelian(g)
    if not ok:
        raise NotAbelian(f"generators {wit} do not commute")
    pos = g.index
    current = list(g.elements)
    picked: list[Perm] = []
    while len(current) > 1:
        best = max(current, key=lambda p: (p.order(), -pos[p]))
        cyc = set(_cyclic(best))
        comp = {Perm.identity(g.degree)}
        target = len(current) // len(cyc)
        for h in current:
            if len(comp) == target:
                break
            if h in comp:
                continue
            cand = _join(comp, h)
            if len(cand & cyc) == 1:
                comp = cand
        if len(comp) != target:
            raise RuntimeError("complement search failed")
        picked.append(best)
        current = [p for p in current if p in comp]
    basis = tuple(reversed(picked))
    words = tuple(g.word_of(u) for u in basis)
    st = structure_from_basis(g.degree, basis, words)
    if len(st.coords) != g.order:
        raise RuntimeError("basis does not cover the group")
    return st


def element_coordinates(a: AbelianStructure, p) -> tuple[int, ...]:
    try:
        return a.coords[Perm(p)]
    except KeyError:
        raise NotInGroup(p) from None


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple[tuple[int, ...], ...]  # nontrivial orbits first, each sorted
    orbit_of: tuple[int, ...]  # element -> orbit position

    @property
    def t(self) -> int:
        return len(self.orbits)

    @property
    def t0(self) -> int:
        return sum(1 for o in self.orbits if len(o) > 1)

    def is_nontrivial(self, i: int) -> bool:
        return len(self.orbits[i]) > 1

    def sizes(self) -> list[int]:
        return [len(o) for o in self.orbits]


def left_action_perms(qs) -> list[Perm]:
    return [Perm(row) for row in qs.left_table]


def orbits(qs) -> OrbitDecomposition:
    """Orbits of the group generated by all left actions L_x."""
    n = qs.size
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for row in qs.left_table:
        for y, z in enumerate(row):
            a, b = find(y), find(z)
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: dict[int, list[int]] = {}
    for x in range(n):
        classes.setdefault(find(x), []).append(x)
    found = sorted(classes.values(), key=lambda o: (len(o) == 1, o[0]))
    orbit_of = [0] * n
    for i, o in enumerate(found):
        for x in o:
            orbit_of[x] = i
    return OrbitDecomposition(tuple(tuple(o) for o in found), tuple(orbit_of))


def restriction_group(qs, orbit_index: int, decomposition: OrbitDecomposition | None = None,
                      max_size: int = DEFAULT_MAX_GROUP) -> GeneratedGroup:
    """G_i: the group generated by all L_x restricted to the orbit X_i.

    The domain is relabelled ``0..|X_i|-1`` in increasing element order;
    generator labels are the acting element indices (duplicates dropped).
    """
    dec = decomposition or orbits(qs)
    pts = dec.orbits[orbit_index]
    gens, labels, seen = [], [], set()
    for x in range(qs.size):
        p = Perm(qs.left_table[x]).restrict(pts)
        if p not in seen:
            seen.add(p)
            gens.append(p)
            labels.append(x)
    return generate(len(pts), gens, labels, max_size=max_size)


def left_action_group(qs, max_size: int = DEFAULT_MAX_GROUP) -> GeneratedGroup:
    """The permutation group of left actions on all of X."""
    gens, labels, seen = [], [], set()
    for x in range(qs.size):
        p = Perm(qs.left_table[x])
        if p not in seen:
            seen.add(p)
            gens.append(p)
            labels.append(x)
    return generate(qs.size, gens, labels, max_size=max_size)
