"""Exact arithmetic for roots of unity and for the cyclotomic fields Q(zeta_N).

Two value types live here:

* :class:`CycExp` -- a root of unity ``exp(2 pi i a/b)`` stored as the reduced
  fraction ``a/b`` in ``[0, 1)``.  Multiplication of roots is addition of
  exponents, so the whole group of roots of unity is just ``Q/Z``.
* :class:`CycNum` -- an element of ``Q(zeta_N)`` stored as a rational
  coefficient vector reduced modulo the N-th cyclotomic polynomial.  The
  representation is canonical, so ``==`` is equality of complex numbers.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence


class LevelMismatch(ValueError):
    pass


class CycExp:
    """Root of unity with exponent ``a/b`` of a full turn (``0 <= a < b``)."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 1):
        if b <= 0:
            raise ValueError("denominator must be positive")
        a %= b
        g = gcd(a, b)
        if g > 1:
            a //= g
            b //= g
        if a == 0:
            b = 1
        self.a = a
        self.b = b

    @classmethod
    def from_fraction(cls, f) -> "CycExp":
        f = Fraction(f)
        return cls(f.numerator, f.denominator)

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.a, self.b)

    @property
    def order(self) -> int:
        return self.b

    def is_one(self) -> bool:
        return self.a == 0

    def __mul__(self, other: "CycExp") -> "CycExp":
        if not isinstance(other, CycExp):
            return NotImplemented
        return CycExp(self.a * other.b + other.a * self.b, self.b * other.b)

    def __truediv__(self, other: "CycExp") -> "CycExp":
        if not isinstance(other, CycExp):
            return NotImplemented
        return CycExp(self.a * other.b - other.a * self.b, self.b * other.b)

    def __pow__(self, k: int) -> "CycExp":
        return CycExp(self.a * k, self.b)

    def inverse(self) -> "CycExp":
        return CycExp(-self.a, self.b)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycExp):
            return self.a == other.a and self.b == other.b
        if other == 1:
            return self.a == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f"CycExp({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.a == 0:
            return "1"
        if self.a == 1:
            return f"zeta({self.b})"
        return f"zeta({self.b})^{self.a}"

    def to_cycnum(self, level: int | None = None) -> "CycNum":
        return embed(self, self.b if level is None else level)


ONE = CycExp(0, 1)


# the abstract API names used across the package
def unit_mul(e1: CycExp, e2: CycExp) -> CycExp:
    return e1 * e2


def unit_pow(e: CycExp, k: int) -> CycExp:
    return e ** k


def unit_inv(e: CycExp) -> CycExp:
    return e.inverse()


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; den is monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("division is not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("n must be >= 1")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce(coeffs: list, level: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_poly(level)
    deg = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    for k in range(len(c) - 1, deg - 1, -1):
        lead = c[k]
        if lead:
            c[k] = Fraction(0)
            shift = k - deg
            for i in range(deg):
                c[shift + i] -= lead * phi[i]
    c = c[:deg] + [Fraction(0)] * max(0, deg - len(c))
    return tuple(c)


class CycNum:
    """Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1)."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs: Iterable = ()):
        if level < 1:
            raise ValueError("level must be >= 1")
        self.level = level
        self.coeffs = _reduce(list(coeffs), level)

    @classmethod
    def _raw(cls, level: int, coeffs: tuple) -> "CycNum":
        obj = cls.__new__(cls)
        obj.level = level
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, level: int) -> "CycNum":
        return cls(level)

    @classmethod
    def one(cls, level: int) -> "CycNum":
        return cls(level, [1])

    @classmethod
    def rational(cls, level: int, q) -> "CycNum":
        return cls(level, [Fraction(q)])

    def _check(self, other: "CycNum"):
        if self.level != other.level:
            raise LevelMismatch(f"levels {self.level} and {other.level}")

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            self._check(other)
            return other
        if isinstance(other, CycExp):
            return embed(other, self.level)
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(self.level, other)
        raise TypeError(f"cannot combine CycNum with {type(other).__name__}")

    def __add__(self, other) -> "CycNum":
        other = self._coerce(other)
        return CycNum._raw(self.level, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum._raw(self.level, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "CycNum":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CycNum":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CycNum":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b))
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycNum(self.level, prod)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def inverse(self) -> "CycNum":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        phi = [Fraction(c) for c in cyclotomic_poly(self.level)]
        s = _poly_xgcd_inverse(list(self.coeffs), phi)
        return CycNum(self.level, s)

    def __truediv__(self, other) -> "CycNum":
        return self * self._coerce(other).inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, CycNum):
            return self.level == other.level and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, CycExp)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.level, self.coeffs))

    def __repr__(self) -> str:
        return f"CycNum({self.level}, {list(map(str, self.coeffs))})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mono = "z" if k == 1 else f"z^{k}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def as_root_of_unity(self) -> CycExp | None:
        """The CycExp equal to this number, or None if it is not a root of unity."""
        n = self.level
        m = 2 * n if n % 2 else n
        for k in range(m):
            e = CycExp(k, m)
            if embed(e, n) == self:
                return e
        return None


def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = _trim(list(a))
    b = _trim(list(b))
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] -= c * y
        _trim(a)
    return q, a


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_xgcd_inverse(a: list, m: list) -> list:
    # returns s with s*a = 1 mod m, m irreducible
    r0, r1 = _trim(list(m)), _trim([Fraction(x) for x in a])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("not invertible")
    c = r1[0]
    return [x / c for x in s1]


def embed(e: CycExp, level: int) -> CycNum:
    """The root of unity ``e`` as an element of Q(zeta_level)."""
    if level % e.b:
        raise LevelMismatch(f"order {e.b} does not divide level {level}")
    k = e.a * (level // e.b)
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    return CycNum(level, coeffs)


def common_level(exps: Iterable[CycExp]) -> int:
    n = 1
    for e in exps:
        n = n * e.b // gcd(n, e.b)
    return n


def lift(x: CycNum, level: int) -> CycNum:
    """Re-express ``x`` inside Q(zeta_level); ``x.level`` must divide ``level``."""
    if level % x.level:
        raise LevelMismatch(f"{x.level} does not divide {level}")
    step = level // x.level
    coeffs = [Fraction(0)] * (step * len(x.coeffs) + 1)
    for k, c in enumerate(x.coeffs):
        coeffs[k * step] = c
    return CycNum(level, coeffs)


def cyc_sum(values: Sequence[CycExp], level: int) -> CycNum:
    total = CycNum.zero(level)
    for v in values:
        total = total + embed(v, level)
    return total
