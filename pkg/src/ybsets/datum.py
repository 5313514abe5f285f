"""The complete datum of a square-free symmetric set of multipermutation level 2.

For every orbit X_i the datum records an invariant-factor basis of the
restricted group G_i (as words over X), the orders p_i1 | ... | p_is, and the
coordinates of sigma^j_i -- the single permutation by which every element of
X_j acts on X_i.  Roots of unity follow the convention theta_i = zeta(p_is),
hence theta_ik = zeta(p_ik).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .permgroup import (
    DEFAULT_MAX_GROUP,
    AbelianStructure,
    GeneratedGroup,
    OrbitDecomposition,
    Perm,
    basis_product,
    invariant_factors,
    lambda_order,
    orbits,
    restriction_group,
    structure_from_basis,
)
from .retraction import level2_criterion
from .solution import QuadraticSet


class NotLevelTwo(ValueError):
    pass


class UnequalCycles(RuntimeError):
    pass


class InvalidBasisOverride(ValueError):
    pass


@dataclass(frozen=True)
class SigmaTable:
    dec: OrbitDecomposition
    sigma: dict  # (j, i) -> Perm on X_i, relabelled by position in the orbit

    def __getitem__(self, key) -> Perm:
        return self.sigma[key]

    def is_trivial(self, j: int, i: int) -> bool:
        return self.sigma[(j, i)].is_identity()

    def cycle_length(self, j: int, i: int) -> int:
        """d^j_i, the common cycle length (1 when sigma is trivial)."""
        p = self.sigma[(j, i)]
        return p.cycle_type()[0]


def sigma_table(qs: QuadraticSet, dec: OrbitDecomposition | None = None) -> SigmaTable:
    dec = dec or orbits(qs)
    if dec.t0 == 0:
        raise NotLevelTwo("no nontrivial orbit (the solution is trivial)")
    table = {}
    for j, xj in enumerate(dec.orbits):
        for i, xi in enumerate(dec.orbits):
            first = Perm(qs.left_table[xj[0]]).restrict(xi)
            for x in xj[1:]:
                p = Perm(qs.left_table[x]).restrict(xi)
                if p != first:
                    raise NotLevelTwo(
                        f"{qs.names[xj[0]]} and {qs.names[x]} lie in one orbit "
                        f"but act differently on the orbit of {qs.names[xi[0]]}"
                    )
            ctype = set(first.cycle_type())
            if len(ctype) != 1:
                raise UnequalCycles(f"sigma^{j + 1}_{i + 1} has cycle type {sorted(first.cycle_type())}")
            table[(j, i)] = first
    for i in range(dec.t):
        if not table[(i, i)].is_identity():
            raise NotLevelTwo(f"orbit {i + 1} does not act trivially on itself")
    return SigmaTable(dec, table)


@dataclass(frozen=True)
class OrbitDatum:
    index: int
    points: tuple[int, ...]  # X_i in increasing element order
    group: GeneratedGroup
    structure: AbelianStructure
    basis_words: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]
    coords: dict  # acting orbit j -> m^j_i
    enumeration: tuple[int, ...]  # x_i1 < x_i2 < ... as element indices
    group_enum: tuple[Perm, ...]  # pi_1 = id, pi_2, ... in Lambda order

    @property
    def trivial(self) -> bool:
        return len(self.points) == 1

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def lambdas(self) -> list[tuple[int, ...]]:
        return lambda_order(self.orders)

    @property
    def exponent(self) -> int:
        return self.orders[-1]

    def local(self, x: int) -> int:
        return self.points.index(x)


@dataclass(frozen=True)
class CompleteDatum:
    qs: QuadraticSet
    dec: OrbitDecomposition
    sigma: SigmaTable
    orbits: tuple[OrbitDatum, ...]

    @property
    def t(self) -> int:
        return len(self.orbits)

    @property
    def t0(self) -> int:
        return self.dec.t0

    def __getitem__(self, i: int) -> OrbitDatum:
        return self.orbits[i]


def _words_to_perm(qs: QuadraticSet, word: Sequence[int], pts: Sequence[int]) -> Perm:
    out = Perm.identity(len(pts))
    for x in word:
        out = out * Perm(qs.left_table[x]).restrict(pts)
    return out


def _orbit_datum(qs, dec, sig, i, override, max_group) -> OrbitDatum:
    pts = dec.orbits[i]
    group = restriction_group(qs, i, dec, max_size=max_group)
    m = len(pts)
    if m == 1:
        # placeholder datum: basis {1}, orders {1}, coordinates {1}
        st = structure_from_basis(1, [Perm.identity(1)], [()])
        coords = {j: (0,) for j in range(dec.t)}
        return OrbitDatum(i, pts, group, st, ((),), (1,), coords, pts, (Perm.identity(1),))
    if override is not None:
        words = [tuple(w) for w in override]
        perms = [_words_to_perm(qs, w, pts) for w in words]
        try:
            st = structure_from_basis(m, perms, words)
        except ValueError as exc:
            raise InvalidBasisOverride(f"orbit {i + 1}: {exc}") from None
        orders = st.orders
        if 1 in orders:
            raise InvalidBasisOverride(f"orbit {i + 1}: a basis word acts as the identity")
        for a, b in zip(orders, orders[1:]):
            if b % a:
                raise InvalidBasisOverride(f"orbit {i + 1}: orders {orders} violate p_k | p_k+1")
        if len(st.coords) != group.order or any(p not in group for p in st.coords):
            raise InvalidBasisOverride(
                f"orbit {i + 1}: basis spans {len(st.coords)} elements, group has {group.order}"
            )
    else:
        st = invariant_factors(group)
    if group.order != m:
        raise NotLevelTwo(f"|G_{i + 1}| = {group.order} differs from |X_{i + 1}| = {m}")
    coords = {}
    for j in range(dec.t):
        coords[j] = st.coords[sig[(j, i)]]
    group_enum = tuple(basis_product(st.basis, mm, m) for mm in lambda_order(st.orders))
    enum = tuple(pts[p[0]] for p in group_enum)
    if len(set(enum)) != m:
        raise NotLevelTwo(f"orbit {i + 1}: point stabilizers are not trivial")
    return OrbitDatum(i, pts, group, st, st.words, st.orders, coords, enum, group_enum)


def build_datum(qs: QuadraticSet, basis_override: Mapping[int, Sequence[Sequence[int]]] | None = None,
                max_group: int = DEFAULT_MAX_GROUP) -> CompleteDatum:
    """Assemble the datum.

    ``basis_override`` maps an element index (any member of the orbit) to a
    list of words over element indices whose left actions form the basis.
    """
    if not level2_criterion(qs):
        raise NotLevelTwo("the left action is not constant on every nontrivial orbit, or there is none")
    dec = orbits(qs)
    sig = sigma_table(qs, dec)
    per_orbit: dict[int, Sequence] = {}
    for rep, words in (basis_override or {}).items():
        per_orbit[dec.orbit_of[rep]] = words
    data = tuple(
        _orbit_datum(qs, dec, sig, i, per_orbit.get(i), max_group) for i in range(dec.t)
    )
    return CompleteDatum(qs, dec, sig, data)
