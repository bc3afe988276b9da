"""Exact scalar arithmetic: the cyclotomic field Q(zeta_m), optionally
extended by one formal indeterminate t.

Every scalar is kept in a canonical form, so equality testing is a plain
comparison of representations:

* cyclotomic mode -- a coefficient vector of 1, z, ..., z^(phi(m)-1)
  reduced modulo the m-th cyclotomic polynomial, stored as integer
  numerators over a single positive denominator with overall gcd 1;
* rational-function mode -- a reduced fraction num(t)/den(t) of
  polynomials in t with cyclotomic coefficients, denominator monic.

Scalars are immutable values; all operations are pure, so they are safe
to share freely.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable


class _InfiniteOrder:
    """Sentinel returned by :func:`mult_order` for non-roots-of-unity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Infinite"


INFINITE = _InfiniteOrder()


def is_finite_order(order) -> bool:
    return isinstance(order, int)


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def _int_poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # long division by a monic integer polynomial; remainder must vanish
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j, dj in enumerate(den):
                num[i - dn + j] -= c * dj
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, ascending,
    monic.  Computed by dividing x^m - 1 by the proper-divisor factors."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly = _int_poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def cyclo_field(m: int) -> "CycloField":
    return CycloField(m)


class CycloField:
    """The field Q(zeta_m).  Arithmetic is performed modulo the m-th
    cyclotomic polynomial, so representatives of degree < phi(m) are
    unique and equality is free."""

    __slots__ = ("m", "degree", "_phi")

    def __init__(self, m: int):
        self._phi = cyclotomic_polynomial(m)
        self.m = m
        self.degree = len(self._phi) - 1

    def __repr__(self) -> str:
        return f"CycloField({self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, CycloField) and other.m == self.m

    def __hash__(self) -> int:
        return hash(("CycloField", self.m))

    # -- construction ------------------------------------------------

    def _reduce(self, coeffs: list[int]) -> tuple[int, ...]:
        deg = self.degree
        phi = self._phi
        for i in range(len(coeffs) - 1, deg - 1, -1):
            c = coeffs[i]
            if c:
                base = i - deg
                for j in range(deg):
                    coeffs[base + j] -= c * phi[j]
                coeffs[i] = 0
        out = coeffs[:deg]
        out.extend([0] * (deg - len(out)))
        return tuple(out)

    def _make(self, num: Iterable[int], den: int) -> "Scalar":
        num = list(num)
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = den
        for c in num:
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        if all(c == 0 for c in num):
            den = 1
        return Scalar(self, tuple(num), den)

    def zero(self) -> "Scalar":
        return Scalar(self, (0,) * self.degree, 1)

    def one(self) -> "Scalar":
        return self.from_rational(1)

    def from_rational(self, value) -> "Scalar":
        value = Fraction(value)
        coeffs = [0] * max(self.degree, 1)
        coeffs[0] = value.numerator
        return self._make(self._reduce(coeffs + [0]), value.denominator)

    def zeta(self, k: int = 1) -> "Scalar":
        """The root-of-unity power zeta_m^k, reduced to canonical form."""
        e = k % self.m
        coeffs = [0] * (e + 1)
        coeffs[e] = 1
        return Scalar(self, self._reduce(coeffs), 1)

    def t_power(self, k: int = 1) -> "Scalar":
        """The formal indeterminate power t^k in rational-function mode."""
        one = self.one()
        if k >= 0:
            num = (self.zero(),) * k + (one,)
            den = (one,)
        else:
            num = (one,)
            den = (self.zero(),) * (-k) + (one,)
        return Scalar(self, None, 0, num, den)


class Scalar:
    """An exact element of Q(zeta_m) or of its rational-function
    extension Q(zeta_m)(t).  Mixed-mode arithmetic promotes to the
    rational-function mode."""

    __slots__ = ("field", "_num", "_den", "_rnum", "_rden")

    def __init__(self, field, num, den, rnum=None, rden=None):
        self.field = field
        self._num = num
        self._den = den
        self._rnum = rnum
        self._rden = rden

    # -- mode helpers ------------------------------------------------

    @property
    def is_ratfunc(self) -> bool:
        return self._num is None

    def _demoted(self) -> "Scalar":
        """Return the cyclotomic form when the value is t-free."""
        if not self.is_ratfunc:
            return self
        if len(self._rden) == 1 and len(self._rnum) <= 1:
            const = self._rnum[0] if self._rnum else self.field.zero()
            return const / self._rden[0]
        return self

    def _promoted(self) -> "Scalar":
        if self.is_ratfunc:
            return self
        return Scalar(self.field, None, 0, (self,) if self else (), (self.field.one(),))

    def _check_compatible(self, other: "Scalar") -> None:
        if self.field.m != other.field.m:
            raise ValueError(
                f"scalars from different fields: m={self.field.m} vs m={other.field.m}"
            )

    # -- predicates --------------------------------------------------

    def __bool__(self) -> bool:
        if self.is_ratfunc:
            return bool(self._rnum)
        return any(self._num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.field.m != other.field.m:
            return False
        a, b = self._demoted(), other._demoted()
        if a.is_ratfunc != b.is_ratfunc:
            return False
        if a.is_ratfunc:
            return a._rnum == b._rnum and a._rden == b._rden
        return a._num == b._num and a._den == b._den

    def __hash__(self) -> int:
        a = self._demoted()
        if a.is_ratfunc:
            return hash((self.field.m, "t", a._rnum, a._rden))
        return hash((self.field.m, a._num, a._den))

    # -- ring operations ---------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check_compatible(other)
        if self.is_ratfunc or other.is_ratfunc:
            a, b = self._promoted(), other._promoted()
            num = _rf_add(
                _rf_mul(a._rnum, b._rden), _rf_mul(b._rnum, a._rden)
            )
            return _rf_scalar(self.field, num, _rf_mul(a._rden, b._rden))
        la, lb = self._den, other._den
        g = math.gcd(la, lb)
        lcm = la // g * lb
        ma, mb = lcm // la, lcm // lb
        num = [x * ma + y * mb for x, y in zip(self._num, other._num)]
        return self.field._make(num, lcm)

    def __neg__(self) -> "Scalar":
        if self.is_ratfunc:
            return Scalar(
                self.field, None, 0, tuple(-c for c in self._rnum), self._rden
            )
        return Scalar(self.field, tuple(-c for c in self._num), self._den)

    def __sub__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check_compatible(other)
        if self.is_ratfunc or other.is_ratfunc:
            a, b = self._promoted(), other._promoted()
            return _rf_scalar(
                self.field, _rf_mul(a._rnum, b._rnum), _rf_mul(a._rden, b._rden)
            )
        deg = self.field.degree
        out = [0] * (2 * deg - 1 if deg > 1 else 1)
        for i, x in enumerate(self._num):
            if x:
                for j, y in enumerate(other._num):
                    if y:
                        out[i + j] += x * y
        return self.field._make(self.field._reduce(out), self._den * other._den)

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero scalar")
        if self.is_ratfunc:
            return _rf_scalar(self.field, self._rden, self._rnum)
        inv = _cyclo_inverse(self.field, self._num)
        den = 1
        for c in inv:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = [int(c * den) * self._den for c in inv]
        return self.field._make(num, den)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- presentation ------------------------------------------------

    def coefficients(self) -> tuple[Fraction, ...]:
        """Rational coefficients of 1, z, ..., z^(phi(m)-1) (cyclotomic
        mode only)."""
        a = self._demoted()
        if a.is_ratfunc:
            raise ValueError("not a cyclotomic-mode scalar")
        return tuple(Fraction(c, a._den) for c in a._num)

    def to_json(self) -> dict:
        a = self._demoted()
        if a.is_ratfunc:
            return {
                "mode": "ratfunc",
                "m": self.field.m,
                "num": [[str(f) for f in c.coefficients()] for c in a._rnum],
                "den": [[str(f) for f in c.coefficients()] for c in a._rden],
            }
        return {
            "mode": "cyclo",
            "m": self.field.m,
            "coeffs": [str(f) for f in a.coefficients()],
        }

    def __repr__(self) -> str:
        if self.is_ratfunc:
            num = _rf_repr(self._rnum)
            den = _rf_repr(self._rden)
            return f"({num})/({den})" if den != "1" else num
        terms = []
        for e, f in enumerate(self.coefficients()):
            if f:
                if e == 0:
                    terms.append(str(f))
                else:
                    z = "z" if e == 1 else f"z^{e}"
                    terms.append(z if f == 1 else f"{f}*{z}")
        return " + ".join(terms) if terms else "0"


def _cyclo_inverse(field: CycloField, num: tuple[int, ...]) -> list[Fraction]:
    """Inverse of the polynomial `num` modulo the cyclotomic modulus,
    via the extended Euclidean algorithm over the rationals."""
    a = [Fraction(c) for c in field._phi]
    b = [Fraction(c) for c in num]
    s_a: list[Fraction] = [Fraction(0)]
    s_b: list[Fraction] = [Fraction(1)]

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    a, b = trim(a), trim(b)
    while len(b) > 1 or (b and b[0] != 0 and len(b) > 1):
        q, r = _q_poly_divmod(a, b)
        a, b = b, trim(r)
        s_a, s_b = s_b, trim(_q_poly_sub(s_a, _q_poly_mul(q, s_b)))
        if len(b) <= 1:
            break
    if not b:
        raise ZeroDivisionError("element is not invertible")
    lead = b[0]
    inv = [c / lead for c in s_b]
    inv.extend([Fraction(0)] * (field.degree - len(inv)))
    return inv[: field.degree]


def _q_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - 1, len(b) - 2, -1):
        if a[i]:
            c = a[i] / b[-1]
            q[i - len(b) + 1] = c
            for j, bj in enumerate(b):
                a[i - len(b) + 1 + j] -= c * bj
    return q, a[: len(b) - 1]


def _q_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1 if a and b else 0)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _q_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for j, y in enumerate(b):
        a[j] -= y
    return a


# -- polynomials in t with cyclotomic coefficients --------------------


def _rf_trim(p: tuple) -> tuple:
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return p[:n]


def _rf_add(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for j, y in enumerate(b):
        out[j] = out[j] + y
    return _rf_trim(tuple(out))


def _rf_mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    field = a[0].field
    zero = field.zero()
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return _rf_trim(tuple(out))


def _rf_divmod(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    field = b[0].field
    lead_inv = b[-1].inverse()
    rem = list(a)
    q = [field.zero()] * max(len(a) - len(b) + 1, 0)
    for i in range(len(rem) - 1, len(b) - 2, -1):
        if rem[i]:
            c = rem[i] * lead_inv
            q[i - len(b) + 1] = c
            for j, bj in enumerate(b):
                rem[i - len(b) + 1 + j] = rem[i - len(b) + 1 + j] - c * bj
    return _rf_trim(tuple(q)), _rf_trim(tuple(rem[: len(b) - 1]))


def _rf_gcd(a: tuple, b: tuple) -> tuple:
    while b:
        _, r = _rf_divmod(a, b)
        a, b = b, r
    if a:
        lead_inv = a[-1].inverse()
        a = tuple(c * lead_inv for c in a)
    return a


def _rf_scalar(field: CycloField, num: tuple, den: tuple) -> Scalar:
    num, den = _rf_trim(num), _rf_trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator in rational function")
    if not num:
        return Scalar(field, None, 0, (), (field.one(),))._demoted()
    g = _rf_gcd(num, den)
    if len(g) > 1:
        num, _ = _rf_divmod(num, g)
        den, _ = _rf_divmod(den, g)
    lead_inv = den[-1].inverse()
    num = tuple(c * lead_inv for c in num)
    den = tuple(c * lead_inv for c in den)
    return Scalar(field, None, 0, num, den)._demoted()


def _rf_repr(p: tuple) -> str:
    if not p:
        return "0"
    terms = []
    for e, c in enumerate(p):
        if c:
            if e == 0:
                terms.append(repr(c))
            else:
                t = "t" if e == 1 else f"t^{e}"
                terms.append(t if c == c.field.one() else f"({c!r})*{t}")
    return " + ".join(terms)


# -- spec-level operations --------------------------------------------


def make_zeta_power(field: CycloField, k: int) -> Scalar:
    return field.zeta(k)


def arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def mult_order(a: Scalar):
    """Least k >= 1 with a^k = 1, or INFINITE when `a` is not a root of
    unity.  In cyclotomic mode the element is a root of unity iff
    a^lcm(2, m) = 1, so only divisors of that exponent are tested."""
    a = a._demoted()
    if not a:
        raise ZeroDivisionError("multiplicative order of zero")
    if a.is_ratfunc:
        return INFINITE
    m = a.field.m
    bound = math.lcm(2, m)
    one = a.field.one()
    if a ** bound != one:
        return INFINITE
    for k in _divisors(bound):
        if a ** k == one:
            return k
    raise AssertionError("unreachable: order must divide the bound")
