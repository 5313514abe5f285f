"""Simultaneous eigenvectors y^i_eta and the diagonal form of the linearized R.

Vectors are sparse dicts ``{element index: coefficient}``.  For the
constructed basis every coefficient is a root of unity (:class:`CycExp`);
user-supplied bases may carry arbitrary :class:`CycNum` entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Mapping, Sequence

from .cyclotomic import CycExp, CycNum, embed
from .datum import CompleteDatum, OrbitDatum
from .permgroup import Perm, lambda_order, orbits
from .solution import QuadraticSet


class EigenFailure(AssertionError):
    pass


class NotDiagonal(AssertionError):
    pass


class SingularBasis(ValueError):
    pass


def chi_eval(datum: CompleteDatum, i: int, eta: Sequence[int], m: Sequence[int]) -> CycExp:
    """chi_eta of the element with coordinates m in G_i: exponent sum_k eta_k m_k / p_ik."""
    orders = datum[i].orders
    if len(eta) != len(orders) or len(m) != len(orders):
        raise IndexError(f"orbit {i + 1} has rank {len(orders)}")
    out = CycExp()
    for e, mk, p in zip(eta, m, orders):
        if not (0 <= e < p and 0 <= mk < p):
            raise IndexError(f"index out of range for order {p}")
        out = out * CycExp(e * mk, p)
    return out


GenKey = tuple[int, tuple[int, ...]]  # (orbit, eta)


@dataclass(frozen=True)
class DiagonalBasis:
    datum: CompleteDatum
    vectors: dict  # (i, eta) -> {element: CycExp}
    order: tuple[GenKey, ...]  # orbit-major, eta in Lambda order

    def __getitem__(self, key: GenKey) -> dict:
        return self.vectors[key]

    def __len__(self) -> int:
        return len(self.order)

    def label(self, key: GenKey) -> str:
        return generator_label(self.datum, key)

    def as_cycnum(self, level: int | None = None) -> list[tuple[str, dict]]:
        level = level or basis_level(self)
        return [
            (self.label(k), {x: embed(c, level) for x, c in self.vectors[k].items()})
            for k in self.order
        ]


def generator_label(datum: CompleteDatum, key: GenKey) -> str:
    i, eta = key
    od = datum[i]
    if od.trivial:
        return datum.qs.names[od.points[0]]
    return f"y{i + 1}[{','.join(map(str, eta))}]"


def basis_level(basis: DiagonalBasis) -> int:
    n = 1
    for od in basis.datum.orbits:
        n = lcm(n, od.exponent)
    return n


def character_vector(od: OrbitDatum, eta: Sequence[int]) -> dict:
    """Character sum: coefficient chi_eta(pi_j^{-1}) at x_ij = pi_j(x_i1)."""
    out = {}
    for m, x in zip(lambda_order(od.orders), od.enumeration):
        val = CycExp()
        for e, mk, p in zip(eta, m, od.orders):
            val = val * CycExp(e * mk, p)
        out[x] = val.inverse()
    return out


def block_vector(orders: Sequence[int], eta: Sequence[int]) -> list[CycExp]:
    """The recursive block column (top to bottom) built from lambda_k = theta_ik^eta_k.

    B_1 = [l1^(p1-1), ..., l1, 1];  B_k stacks l_k^(p_k-1) B_{k-1}, ..., l_k B_{k-1}, B_{k-1}.
    """
    block = [CycExp()]
    for p, e in zip(orders, eta):
        lam = CycExp(e, p)
        block = [(lam ** a) * c for a in range(p - 1, -1, -1) for c in block]
    return block


def display_elements(od: OrbitDatum) -> list[int]:
    """Row order of the block column: pi^{-1}(x_i1) for pi in descending Lambda order."""
    out = []
    for pi in reversed(od.group_enum):
        out.append(od.points[pi.inverse()[0]])
    return out


def build_y_basis(datum: CompleteDatum, cross_check: bool = True) -> DiagonalBasis:
    vectors = {}
    order = []
    for od in datum.orbits:
        for eta in od.lambdas:
            vec = character_vector(od, eta)
            if cross_check:
                col = block_vector(od.orders, eta)
                rows = display_elements(od)
                if dict(zip(rows, col)) != vec:
                    raise RuntimeError(f"block construction disagrees for orbit {od.index + 1}, eta={eta}")
            vectors[(od.index, eta)] = vec
            order.append((od.index, eta))
    return DiagonalBasis(datum, vectors, tuple(order))


def y_display(basis: DiagonalBasis, key: GenKey) -> list[CycExp]:
    """Entries of y^i_eta listed in the block-column row order."""
    od = basis.datum[key[0]]
    vec = basis.vectors[key]
    return [vec[x] for x in display_elements(od)]


@dataclass
class EigenReport:
    checked: int = 0
    eigenvalues: dict = field(default_factory=dict)  # (i, eta, g-coords) -> CycExp


def eigen_check(qs: QuadraticSet, datum: CompleteDatum, basis: DiagonalBasis) -> EigenReport:
    """Every g in G_i scales y^i_eta by chi_eta(g), checked entry by entry."""
    rep = EigenReport()
    for od in datum.orbits:
        pts = od.points
        for g in od.group.elements:
            m = od.structure.coords[g]
            for eta in od.lambdas:
                vec = basis.vectors[(od.index, eta)]
                lam = chi_eval(datum, od.index, eta, m)
                for x, c in vec.items():
                    gx = pts[g[pts.index(x)]]
                    # (P(g) y) has coefficient c at g(x)
                    if c != lam * vec[gx]:
                        raise EigenFailure(f"g={m}, eta={eta}, entry {qs.names[gx]}")
                rep.eigenvalues[(od.index, eta, m)] = lam
                rep.checked += 1
    return rep


def mu_table(datum: CompleteDatum) -> dict:
    """mu[(j, i, eta)] = chi_eta(sigma^j_i)."""
    out = {}
    for od in datum.orbits:
        for j in range(datum.t):
            m = od.coords[j]
            for eta in od.lambdas:
                out[(j, od.index, eta)] = chi_eval(datum, od.index, eta, m)
    return out


def q_coefficient(mu: Mapping, a: GenKey, b: GenKey) -> CycExp:
    """Coefficient in R(y_a (x) y_b) = q . y_b (x) y_a: mu^i_{j,zeta} / mu^j_{i,eta}."""
    (i, eta), (j, zeta) = a, b
    return mu[(i, j, zeta)] / mu[(j, i, eta)]


def intro_q(datum: CompleteDatum, a: GenKey, b: GenKey) -> CycExp:
    """chi_zeta(sigma^i_j) / chi_eta(sigma^j_i) evaluated from the sigma table."""
    (i, eta), (j, zeta) = a, b
    num = chi_eval(datum, j, zeta, datum[j].structure.coords[datum.sigma[(i, j)]])
    den = chi_eval(datum, i, eta, datum[i].structure.coords[datum.sigma[(j, i)]])
    return num / den


@dataclass
class PairResult:
    swapped: CycExp | None  # R(y (x) y') = q y' (x) y
    unswapped: CycExp | None  # R(y (x) y') = q y (x) y'
    predicted: CycExp

    @property
    def ok(self) -> bool:
        return self.swapped is not None and self.swapped == self.predicted


@dataclass
class DiagonalReport:
    pairs: dict  # (GenKey, GenKey) -> PairResult

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.pairs.values())

    def coefficient(self, a: GenKey, b: GenKey) -> CycExp | None:
        return self.pairs[(a, b)].swapped

    def forms(self) -> dict:
        swapped = sum(1 for p in self.pairs.values() if p.swapped is not None)
        unswapped = sum(1 for p in self.pairs.values() if p.unswapped is not None)
        return {"swapped": swapped, "unswapped": unswapped, "pairs": len(self.pairs)}


def _int_vector(vec: Mapping[int, CycExp], level: int) -> dict:
    return {x: c.a * (level // c.b) for x, c in vec.items()}


def _ratio(lhs: dict, rhs: dict, level: int) -> int | None:
    # lhs = zeta^k * rhs entrywise on identical supports, return k
    if lhs.keys() != rhs.keys():
        return None
    k = None
    for key, v in lhs.items():
        d = (v - rhs[key]) % level
        if k is None:
            k = d
        elif d != k:
            return None
    return k


def verify_diagonal(qs: QuadraticSet, basis: DiagonalBasis, mu: Mapping | None = None,
                    strict: bool = True) -> DiagonalReport:
    """Expand R(y (x) y') exactly in the x (x) x basis and compare with both tensor orders."""
    mu = mu if mu is not None else mu_table(basis.datum)
    level = basis_level(basis)
    ints = {k: _int_vector(basis.vectors[k], level) for k in basis.order}
    pairs = {}
    for a in basis.order:
        ya = ints[a]
        for b in basis.order:
            yb = ints[b]
            image = {}
            for x, cx in ya.items():
                for y, cy in yb.items():
                    image[qs.r(x, y)] = cx + cy
            swapped = {(u, v): cu + cv for u, cu in yb.items() for v, cv in ya.items()}
            same = {(u, v): cu + cv for u, cu in ya.items() for v, cv in yb.items()}
            ks = _ratio(image, swapped, level)
            ku = _ratio(image, same, level)
            res = PairResult(
                None if ks is None else CycExp(ks, level),
                None if ku is None else CycExp(ku, level),
                q_coefficient(mu, a, b),
            )
            if strict and not res.ok:
                raise NotDiagonal(
                    f"R({basis.label(a)} (x) {basis.label(b)}): measured {res.swapped}, predicted {res.predicted}"
                )
            pairs[(a, b)] = res
    return DiagonalReport(pairs)


# -- checking an arbitrary user basis ---------------------------------------

@dataclass
class Obstruction:
    pair: tuple[str, str]
    candidates: list  # distinct values of mu forced by individual entries
    zero_conditions: list  # tensor pairs where y' (x) y vanishes but R(y (x) y') does not

    def __str__(self) -> str:
        conds = ", ".join(f"mu = {c}" for c in self.candidates)
        extra = f"; {len(self.zero_conditions)} entries force 0 = nonzero" if self.zero_conditions else ""
        return f"R({self.pair[0]} (x) {self.pair[1]}) requires {conds}{extra}"


@dataclass
class BasisCheck:
    diagonalizable: bool
    mu: dict  # (label, label) -> CycNum for consistent pairs
    obstructions: list

    @property
    def first_obstruction(self) -> Obstruction | None:
        return self.obstructions[0] if self.obstructions else None


def _determinant(rows: list[list[CycNum]]) -> CycNum:
    m = [list(r) for r in rows]
    n = len(m)
    det = CycNum.one(m[0][0].level) if n else None
    for c in range(n):
        piv = next((r for r in range(c, n) if not m[r][c].is_zero()), None)
        if piv is None:
            return CycNum.zero(m[0][0].level)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        inv = m[c][c].inverse()
        det = det * m[c][c]
        for r in range(c + 1, n):
            if not m[r][c].is_zero():
                f = m[r][c] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def check_diagonal_in_basis(qs: QuadraticSet, user_basis: Sequence[tuple[str, Mapping[int, CycNum]]],
                            stop_at_first: bool = False) -> BasisCheck:
    """Look for scalars mu with R(y (x) y') = mu y' (x) y for every ordered pair of basis vectors."""
    if not user_basis:
        raise SingularBasis("empty basis")
    level = None
    vecs = []
    for label, vec in user_basis:
        clean = {x: c for x, c in vec.items() if not c.is_zero()}
        for c in clean.values():
            if level is None:
                level = c.level
            elif c.level != level:
                raise SingularBasis("all coefficients must share one cyclotomic level")
        vecs.append((label, clean))
    dec = orbits(qs)
    blocks: dict[int, list] = {}
    for label, vec in vecs:
        if not vec:
            raise SingularBasis(f"{label} is the zero vector")
        orbs = {dec.orbit_of[x] for x in vec}
        if len(orbs) != 1:
            raise SingularBasis(f"{label} is not supported on a single orbit")
        blocks.setdefault(orbs.pop(), []).append(vec)
    for i, orb in enumerate(dec.orbits):
        block = blocks.get(i, [])
        if len(block) != len(orb):
            raise SingularBasis(f"orbit {i + 1} has {len(orb)} points but {len(block)} basis vectors")
        rows = [[v.get(x, CycNum.zero(level)) for x in orb] for v in block]
        if _determinant(rows).is_zero():
            raise SingularBasis(f"block for orbit {i + 1} is singular")
    mus = {}
    obstructions = []
    for la, ya in vecs:
        for lb, yb in vecs:
            image = {}
            for x, cx in ya.items():
                for y, cy in yb.items():
                    image[qs.r(x, y)] = cx * cy
            target = {(u, v): cu * cv for u, cu in yb.items() for v, cv in ya.items()}
            cands = []
            zero_conds = []
            for key in sorted(set(image) | set(target)):
                lhs = image.get(key)
                rhs = target.get(key)
                if rhs is None or rhs.is_zero():
                    if lhs is not None and not lhs.is_zero():
                        zero_conds.append(key)
                    continue
                val = (lhs if lhs is not None else CycNum.zero(level)) / rhs
                if val not in cands:
                    cands.append(val)
            if len(cands) == 1 and not zero_conds and not cands[0].is_zero():
                mus[(la, lb)] = cands[0]
            else:
                obstructions.append(Obstruction((la, lb), cands, zero_conds))
                if stop_at_first:
                    return BasisCheck(False, mus, obstructions)
    return BasisCheck(not obstructions, mus, obstructions)
