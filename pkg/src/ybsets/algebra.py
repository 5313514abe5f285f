"""The quadratic algebra A(k, X, r) of a solution and its differential calculus.

Three views are provided:

* rewrite relations ``xy = (L_x y)(R_y x)`` in the x letters;
* q-commutation relations between the diagonal generators y^i_eta;
* the bullet model on commutative monomials, ``m . m' = m * gamma_m(m')``
  where ``gamma_m`` composes the left actions of the letters of ``m``.

The exterior model adds differential letters ``dx`` which are moved by
``gamma`` exactly like ``x`` and anticommute among themselves.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb, lcm
from typing import Iterable, Mapping, Sequence

from .cyclotomic import CycExp, CycNum, embed
from .datum import CompleteDatum, NotLevelTwo
from .diagonal import GenKey, generator_label, q_coefficient
from .permgroup import Perm, orbits
from .solution import QuadraticSet


class TooLarge(RuntimeError):
    pass


DEFAULT_MAX_FREE_DIM = 20000


# -- relations ----------------------------------------------------------------

@dataclass(frozen=True)
class Rewrite:
    lhs: tuple[str, ...]
    rhs: tuple[str, ...]
    sign: int = 1

    def __str__(self) -> str:
        neg = "-" if self.sign < 0 else ""
        return f"{'*'.join(self.lhs)} = {neg}{'*'.join(self.rhs)}"


@dataclass(frozen=True)
class QCommutation:
    """``left*right = sign * q * right*left``."""

    left: str
    right: str
    q: CycExp
    sign: int = 1

    def __str__(self) -> str:
        coef = "" if self.q.is_one() else f"{self.q} * "
        neg = "-" if self.sign < 0 else ""
        return f"{self.left}*{self.right} = {neg}{coef}{self.right}*{self.left}"

    def flipped(self) -> "QCommutation":
        return QCommutation(self.right, self.left, self.q.inverse(), self.sign)


@dataclass
class RelationSet:
    relations: list

    def __len__(self) -> int:
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def text(self) -> str:
        return "".join(f"{r}\n" for r in self.relations)

    def find(self, left: str, right: str) -> QCommutation | None:
        """The q-commutation between two generators, oriented as asked."""
        for rel in self.relations:
            if isinstance(rel, QCommutation):
                if (rel.left, rel.right) == (left, right):
                    return rel
                if (rel.right, rel.left) == (left, right):
                    return rel.flipped()
        return None


def relations_x(qs: QuadraticSet) -> RelationSet:
    """One relation per edge {w, r(w)} with w != r(w); the smaller word is the left side."""
    names = qs.names
    seen = set()
    out = []
    for x in range(qs.size):
        for y in range(qs.size):
            w, v = (x, y), qs.r(x, y)
            if w == v:
                continue
            key = (min(w, v), max(w, v))
            if key in seen:
                continue
            seen.add(key)
            a, b = key
            out.append(Rewrite((names[a[0]], names[a[1]]), (names[b[0]], names[b[1]])))
    return RelationSet(out)


def _generators(datum: CompleteDatum) -> list[GenKey]:
    return [(od.index, eta) for od in datum.orbits for eta in od.lambdas]


def relations_y(datum: CompleteDatum, mu: Mapping) -> RelationSet:
    """y_a y_b = q y_b y_a for a before b (orbit-major, Lambda order within an orbit)."""
    gens = _generators(datum)
    out = []
    for p, a in enumerate(gens):
        for b in gens[p + 1:]:
            out.append(QCommutation(generator_label(datum, a), generator_label(datum, b), q_coefficient(mu, a, b)))
    return RelationSet(out)


def calculus_relations_y(datum: CompleteDatum, mu: Mapping) -> RelationSet:
    """dy_a y_b = rho_ab y_b dy_a for all a, b and dy_a dy_b = -rho_ab dy_b dy_a for a <= b."""
    gens = _generators(datum)
    lab = {g: generator_label(datum, g) for g in gens}
    out = []
    for a in gens:
        for b in gens:
            out.append(QCommutation("d" + lab[a], lab[b], q_coefficient(mu, a, b)))
    for p, a in enumerate(gens):
        for b in gens[p:]:
            out.append(QCommutation("d" + lab[a], "d" + lab[b], q_coefficient(mu, a, b), sign=-1))
    return RelationSet(out)


def calculus_relations_x(qs: QuadraticSet) -> RelationSet:
    """x dy = d(L_x y) R_y x  and  dx dy = -d(L_x y) d(R_y x), for every ordered pair."""
    require_low_level(qs)
    names = qs.names
    out = []
    for x in range(qs.size):
        for y in range(qs.size):
            z, t = qs.r(x, y)
            out.append(Rewrite((names[x], "d" + names[y]), ("d" + names[z], names[t])))
    for x in range(qs.size):
        for y in range(qs.size):
            z, t = qs.r(x, y)
            if (x, y) < (z, t):
                out.append(Rewrite(("d" + names[x], "d" + names[y]), ("d" + names[z], "d" + names[t]), sign=-1))
    return RelationSet(out)


# -- bullet model in the x letters ---------------------------------------------

Mono = tuple[int, ...]  # exponent vector over X


def require_low_level(qs: QuadraticSet) -> None:
    """Left actions constant on orbits and pairwise commuting (multipermutation level at most 2)."""
    dec = orbits(qs)
    for orb in dec.orbits:
        row = qs.left_table[orb[0]]
        if any(qs.left_table[x] != row for x in orb):
            raise NotLevelTwo(f"left action is not constant on the orbit of {qs.names[orb[0]]}")
    rows = list({row for row in qs.left_table})
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            p, q = Perm(rows[a]), Perm(rows[b])
            if p * q != q * p:
                raise NotLevelTwo("left actions do not commute")


def xmono(qs: QuadraticSet, word: Iterable[int]) -> Mono:
    out = [0] * qs.size
    for x in word:
        out[x] += 1
    return tuple(out)


def _gamma(qs: QuadraticSet, m: Sequence[int]) -> Perm:
    out = Perm.identity(qs.size)
    for x, k in enumerate(m):
        if k:
            out = out * (Perm(qs.left_table[x]) ** k)
    return out


def _apply(perm: Perm, m: Sequence[int]) -> Mono:
    out = [0] * len(m)
    for x, k in enumerate(m):
        if k:
            out[perm[x]] += k
    return tuple(out)


def bullet(qs: QuadraticSet, m: Mono, m2: Mono) -> Mono:
    """m . m2 = m * gamma_m(m2) as a commutative monomial."""
    g = _gamma(qs, m)
    moved = _apply(g, m2)
    return tuple(a + b for a, b in zip(m, moved))


def bullet_word(qs: QuadraticSet, word: Sequence[int]) -> Mono:
    """x1 . x2 . ... . xk evaluated left to right."""
    out = tuple([0] * qs.size)
    for x in word:
        out = bullet(qs, out, xmono(qs, [x]))
    return out


def bullet_defining_check(qs: QuadraticSet) -> bool:
    require_low_level(qs)
    for x in range(qs.size):
        for y in range(qs.size):
            z, t = qs.r(x, y)
            if bullet(qs, xmono(qs, [x]), xmono(qs, [y])) != bullet(qs, xmono(qs, [z]), xmono(qs, [t])):
                return False
    return True


def monomials(n: int, degree: int, letters: Sequence[int] | None = None) -> list[Mono]:
    letters = list(range(n)) if letters is None else list(letters)
    out = []
    for combo in combinations_with_replacement(letters, degree):
        m = [0] * n
        for x in combo:
            m[x] += 1
        out.append(tuple(m))
    return out


def associativity_check(qs: QuadraticSet, max_degree: int = 3, letters: Sequence[int] | None = None) -> bool:
    """(a.b).c == a.(b.c) over all monomial triples of total degree <= max_degree."""
    require_low_level(qs)
    by_deg = [monomials(qs.size, d, letters) for d in range(max_degree + 1)]
    for da in range(max_degree + 1):
        for db in range(max_degree + 1 - da):
            for dc in range(max_degree + 1 - da - db):
                for a in by_deg[da]:
                    for b in by_deg[db]:
                        ab = bullet(qs, a, b)
                        for c in by_deg[dc]:
                            if bullet(qs, ab, c) != bullet(qs, a, bullet(qs, b, c)):
                                return False
    return True


# -- Hilbert function of the quadratic algebra ----------------------------------

def _word_index(word: Sequence[int], n: int) -> int:
    k = 0
    for x in word:
        k = k * n + x
    return k


def _eliminate(rows: Iterable[dict]) -> int:
    """Rank of sparse rational row vectors by exact Gaussian elimination."""
    pivots: dict[int, dict] = {}
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                c = row[lead]
                pivots[lead] = {k: v / c for k, v in row.items()}
                break
            c = row[lead]
            for k, v in piv.items():
                nv = row.get(k, 0) - c * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def quotient_dimension(qs: QuadraticSet, degree: int, max_free_dim: int = DEFAULT_MAX_FREE_DIM) -> int:
    """dim of the degree-d part of k<X> modulo the ideal generated by w - r(w)."""
    n = qs.size
    total = n ** degree
    if total > max_free_dim:
        raise TooLarge(f"{n}^{degree} = {total} exceeds {max_free_dim}")
    if degree < 2:
        return total

    def rows():
        for k in range(degree - 1):
            for u in range(n ** k):
                for v in range(n ** (degree - 2 - k)):
                    for x in range(n):
                        for y in range(n):
                            z, t = qs.r(x, y)
                            if (x, y) == (z, t):
                                continue
                            scale = n ** (degree - 2 - k)
                            a = (u * n * n + x * n + y) * scale + v
                            b = (u * n * n + z * n + t) * scale + v
                            yield {a: 1, b: -1}

    return total - _eliminate(rows())


def hilbert_check(qs: QuadraticSet, degree: int, max_free_dim: int = DEFAULT_MAX_FREE_DIM) -> bool:
    """The degree-d dimension equals that of the commutative polynomial ring, C(n+d-1, d)."""
    return quotient_dimension(qs, degree, max_free_dim) == comb(qs.size + degree - 1, degree)


# -- exterior model in the x letters ---------------------------------------------

ExtMono = tuple[Mono, tuple[int, ...]]  # (polynomial part, strictly increasing d-letters)


def _sort_sign(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation; 0 when a letter repeats."""
    if len(set(seq)) != len(seq):
        return 0, ()
    sign = 1
    arr = list(seq)
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


def ext_mono(qs: QuadraticSet, poly_word: Iterable[int] = (), dlets: Iterable[int] = ()) -> dict:
    sign, ds = _sort_sign(list(dlets))
    return {(xmono(qs, poly_word), ds): sign} if sign else {}


def _ext_gamma(qs: QuadraticSet, mono: ExtMono) -> Perm:
    poly, ds = mono
    letters = list(poly)
    for x in ds:
        letters[x] += 1
    return _gamma(qs, letters)


def ext_bullet(qs: QuadraticSet, A: Mapping, B: Mapping) -> dict:
    out: dict = {}
    for ma, ca in A.items():
        g = _ext_gamma(qs, ma)
        for mb, cb in B.items():
            poly = tuple(p + q for p, q in zip(ma[0], _apply(g, mb[0])))
            sign, ds = _sort_sign(list(ma[1]) + [g[x] for x in mb[1]])
            if not sign:
                continue
            key = (poly, ds)
            val = out.get(key, 0) + sign * ca * cb
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


def ext_d(A: Mapping) -> dict:
    """The classical exterior derivative, d(m w) = sum_x m_x (m/x) dx w."""
    out: dict = {}
    for (poly, ds), c in A.items():
        for x, k in enumerate(poly):
            if not k or x in ds:
                continue
            sign, nds = _sort_sign([x] + list(ds))
            npoly = tuple(p - (1 if y == x else 0) for y, p in enumerate(poly))
            key = (npoly, nds)
            val = out.get(key, 0) + sign * k * c
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


def _add(A: Mapping, B: Mapping, s: int = 1) -> dict:
    out = dict(A)
    for k, v in B.items():
        val = out.get(k, 0) + s * v
        if val:
            out[k] = val
        else:
            out.pop(k, None)
    return out


def ext_monomials(n: int, max_degree: int, letters: Sequence[int] | None = None) -> list[dict]:
    """Every basis element m.dx_S with deg m + |S| <= max_degree."""
    letters = list(range(n)) if letters is None else list(letters)
    out = []
    for total in range(max_degree + 1):
        for k in range(min(total, len(letters)) + 1):
            for ds in _subsets(letters, k):
                for combo in combinations_with_replacement(letters, total - k):
                    poly = [0] * n
                    for x in combo:
                        poly[x] += 1
                    out.append({(tuple(poly), ds): 1})
    return out


def _subsets(letters, k):
    return [tuple(c) for c in combinations(sorted(letters), k)]


def d_squared_check(qs: QuadraticSet, max_degree: int = 3) -> bool:
    return all(not ext_d(ext_d(A)) for A in ext_monomials(qs.size, max_degree))


def leibniz_check(qs: QuadraticSet, max_degree: int = 3, letters: Sequence[int] | None = None) -> bool:
    """d(A.B) = dA.B + (-1)^|A| A.dB for basis pairs of total degree <= max_degree."""
    require_low_level(qs)
    basis = ext_monomials(qs.size, max_degree, letters)

    def deg(A):
        (poly, ds), = A
        return sum(poly) + len(ds)

    for A in basis:
        da = deg(A)
        form = len(next(iter(A))[1])
        for B in basis:
            if da + deg(B) > max_degree:
                continue
            lhs = ext_d(ext_bullet(qs, A, B))
            rhs = _add(ext_bullet(qs, ext_d(A), B), ext_bullet(qs, A, ext_d(B)), -1 if form % 2 else 1)
            if lhs != rhs:
                return False
    return True


def calculus_x_check(qs: QuadraticSet) -> bool:
    """The emitted x-letter calculus relations hold in the exterior model."""
    require_low_level(qs)
    for x in range(qs.size):
        for y in range(qs.size):
            z, t = qs.r(x, y)
            lhs = ext_bullet(qs, ext_mono(qs, [x]), ext_mono(qs, [], [y]))
            rhs = ext_bullet(qs, ext_mono(qs, [], [z]), ext_mono(qs, [t]))
            if lhs != rhs:
                return False
            lhs = ext_bullet(qs, ext_mono(qs, [], [x]), ext_mono(qs, [], [y]))
            rhs = ext_bullet(qs, ext_mono(qs, [], [z]), ext_mono(qs, [], [t]))
            if _add(lhs, rhs):
                return False
    return True


# -- y-basis: cotwisted polynomial model and braided derivatives -------------------

class YModel:
    """Polynomials in the diagonal generators with y^u . y^v = F(u, v) y^(u+v).

    ``F(u, v) = prod F_ab^(u_a v_b)`` with ``F_(i,eta),(j,zeta) = mu^i_{j,zeta}``.
    Elements are dicts from exponent tuples to CycNum.
    """

    def __init__(self, datum: CompleteDatum, mu: Mapping):
        self.datum = datum
        self.gens = _generators(datum)
        self.level = lcm(*(od.exponent for od in datum.orbits))
        self.F = [[mu[(a[0], b[0], b[1])] for b in self.gens] for a in self.gens]
        self.rho = [[q_coefficient(mu, a, b) for b in self.gens] for a in self.gens]
        self.size = len(self.gens)

    def unit(self, e: CycExp) -> CycNum:
        return embed(e, self.level)

    def gen(self, a: int) -> dict:
        u = [0] * self.size
        u[a] = 1
        return {tuple(u): CycNum.one(self.level)}

    def F_of(self, u: Sequence[int], v: Sequence[int]) -> CycExp:
        out = CycExp()
        for a, ua in enumerate(u):
            if not ua:
                continue
            for b, vb in enumerate(v):
                if vb:
                    out = out * self.F[a][b] ** (ua * vb)
        return out

    def mul(self, A: Mapping, B: Mapping) -> dict:
        out: dict = {}
        for u, cu in A.items():
            for v, cv in B.items():
                w = tuple(p + q for p, q in zip(u, v))
                val = out.get(w, CycNum.zero(self.level)) + cu * cv * self.unit(self.F_of(u, v))
                if val.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = val
        return out

    def word(self, letters: Sequence[int]) -> dict:
        out = {tuple([0] * self.size): CycNum.one(self.level)}
        for a in letters:
            out = self.mul(out, self.gen(a))
        return out

    def partial(self, i: int, A: Mapping) -> dict:
        """Cotwisted partial: d^i y^u = u_i y^(u - e_i) / F(u - e_i, e_i)."""
        out: dict = {}
        e = [0] * self.size
        e[i] = 1
        for u, c in A.items():
            if not u[i]:
                continue
            v = tuple(p - (1 if k == i else 0) for k, p in enumerate(u))
            out[v] = c * u[i] / self.unit(self.F_of(v, e))
        return {k: v for k, v in out.items() if not v.is_zero()}

    def add(self, A: Mapping, B: Mapping) -> dict:
        out = dict(A)
        for k, v in B.items():
            val = out.get(k, CycNum.zero(self.level)) + v
            if val.is_zero():
                out.pop(k, None)
            else:
                out[k] = val
        return out

    def scale(self, A: Mapping, c: CycNum) -> dict:
        return {k: v * c for k, v in A.items() if not (v * c).is_zero()}


def word_partial(model: YModel, i: int, letters: Sequence[int]) -> dict:
    """d^i of a generator word using only dy_a y_b = rho_ab y_b dy_a, then mapped into the model."""
    out: dict = {}
    for p, a in enumerate(letters):
        if a != i:
            continue
        coef = CycExp()
        for b in letters[p + 1:]:
            coef = coef * model.rho[i][b]
        rest = list(letters[:p]) + list(letters[p + 1:])
        out = model.add(out, model.scale(model.word(rest), model.unit(coef)))
    return out


@dataclass
class DerivationResult:
    i: int
    f: tuple[int, ...]
    m: tuple[int, ...]
    rule_holds: bool  # braided Leibniz in the model
    matches_words: bool  # model partial agrees with the word computation


def braided_derivation_check(model: YModel, i: int, f: Sequence[int], m: Sequence[int]) -> DerivationResult:
    """d^i(f m) = f d^i(m) + (prod_b rho_{i j_b}) (d^i f) m for generator words f and m."""
    F, M = model.word(f), model.word(m)
    lhs = model.partial(i, model.mul(F, M))
    coef = CycExp()
    for b in m:
        coef = coef * model.rho[i][b]
    rhs = model.add(
        model.mul(F, model.partial(i, M)),
        model.scale(model.mul(model.partial(i, F), M), model.unit(coef)),
    )
    direct = word_partial(model, i, list(f) + list(m))
    return DerivationResult(i, tuple(f), tuple(m), lhs == rhs, lhs == direct)


def derivation_cases(model: YModel, count: int = 24, seed: int = 2024, max_len: int = 3) -> list:
    """Deterministic pseudo-random (i, f, m) triples with i occurring in f or m."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        f = tuple(rng.randrange(model.size) for _ in range(rng.randint(0, max_len)))
        m = tuple(rng.randrange(model.size) for _ in range(rng.randint(1, max_len)))
        pool = sorted(set(f) | set(m))
        i = rng.choice(pool)
        out.append((i, f, m))
    return out
