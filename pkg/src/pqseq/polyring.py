"""Dense univariate polynomials over a prime field F_q.

Coefficients are stored lowest degree first with no trailing zeros, so the
zero polynomial has an empty coefficient tuple and degree -1 (standing in
for minus infinity).  Over F_2 the Euclidean routines run on bit-packed
Python ints, which is much faster than coefficient lists.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ParameterError
from .quotients import check_odd_prime, is_prime, order_mod


def _trim(c: list[int]) -> tuple[int, ...]:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


@dataclass(frozen=True)
class FieldPoly:
    modulus: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise ParameterError(f"modulus must be prime, got {self.modulus}")
        q = self.modulus
        object.__setattr__(self, "coeffs", _trim([int(a) % q for a in self.coeffs]))

    @classmethod
    def from_int(cls, bits: int) -> "FieldPoly":
        """F_2 polynomial whose bit i is the coefficient of X^i."""
        return cls(2, tuple((bits >> i) & 1 for i in range(bits.bit_length())))

    @classmethod
    def monomial(cls, q: int, n: int, c: int = 1) -> "FieldPoly":
        return cls(q, (0,) * n + (c,))

    @classmethod
    def from_exponents(cls, q: int, exponents: Iterable[int]) -> "FieldPoly":
        exps = list(exponents)
        c = [0] * (max(exps) + 1 if exps else 0)
        for e in exps:
            c[e] += 1
        return cls(q, tuple(c))

    def to_int(self) -> int:
        if self.modulus != 2:
            raise ParameterError("bit packing is only defined over F_2")
        return sum(1 << i for i, a in enumerate(self.coeffs) if a)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x: int) -> int:
        q = self.modulus
        acc = 0
        for a in reversed(self.coeffs):
            acc = (acc * x + a) % q
        return acc

    def _same_field(self, other: "FieldPoly") -> None:
        if other.modulus != self.modulus:
            raise ParameterError("polynomials live over different fields")

    def __add__(self, other: "FieldPoly") -> "FieldPoly":
        self._same_field(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return FieldPoly(
            self.modulus,
            tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)),
        )

    def __neg__(self) -> "FieldPoly":
        return FieldPoly(self.modulus, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "FieldPoly") -> "FieldPoly":
        return self + (-other)

    def __mul__(self, other) -> "FieldPoly":
        if isinstance(other, int):
            return FieldPoly(self.modulus, tuple(a * other for a in self.coeffs))
        self._same_field(other)
        if self.modulus == 2:
            return FieldPoly.from_int(_f2_mul(self.to_int(), other.to_int()))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FieldPoly(self.modulus)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return FieldPoly(self.modulus, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FieldPoly":
        result = FieldPoly(self.modulus, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "FieldPoly"):
        return poly_divmod(self, other)

    def __mod__(self, other: "FieldPoly") -> "FieldPoly":
        return poly_divmod(self, other)[1]

    def __floordiv__(self, other: "FieldPoly") -> "FieldPoly":
        return poly_divmod(self, other)[0]

    def monic(self) -> "FieldPoly":
        if not self.coeffs:
            return self
        inv = pow(self.coeffs[-1], -1, self.modulus)
        return self * inv

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"FieldPoly(F_{self.modulus}, 0)"
        terms = []
        for i, a in enumerate(self.coeffs):
            if a:
                mono = "1" if i == 0 else ("X" if i == 1 else f"X^{i}")
                terms.append(mono if a == 1 and i else f"{a}" if i == 0 else f"{a}*{mono}")
        return f"FieldPoly(F_{self.modulus}, {' + '.join(terms)})"


# -- F_2 helpers on bit-packed ints ------------------------------------------

def _f2_mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _f2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        s = a.bit_length() - db
        a ^= b << s
        q |= 1 << s
    return q, a


def _f2_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def f2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _f2_mod(a, b)
    return a


# -- general field ------------------------------------------------------------

def poly_divmod(a: FieldPoly, b: FieldPoly) -> tuple[FieldPoly, FieldPoly]:
    a._same_field(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q = a.modulus
    if q == 2:
        qu, r = _f2_divmod(a.to_int(), b.to_int())
        return FieldPoly.from_int(qu), FieldPoly.from_int(r)
    r = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    inv = pow(bc[-1], -1, q)
    quot = [0] * max(len(r) - db, 0)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % q
        if c:
            f = c * inv % q
            quot[i - db] = f
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - f * bc[j]) % q
    return FieldPoly(q, tuple(quot)), FieldPoly(q, tuple(r[:db]))


def poly_gcd(a: FieldPoly, b: FieldPoly) -> FieldPoly:
    """Monic gcd by the Euclidean algorithm."""
    a._same_field(b)
    if a.is_zero() and b.is_zero():
        raise ParameterError("gcd(0, 0) is undefined")
    if a.modulus == 2:
        return FieldPoly.from_int(f2_gcd(a.to_int(), b.to_int()))
    while b:
        a, b = b, a % b
    return a.monic()


def divides(d: FieldPoly, f: FieldPoly) -> bool:
    if d.is_zero():
        raise ParameterError("divisor must be nonzero")
    return (f % d).is_zero()


def x_pow_minus_one(q: int, n: int) -> FieldPoly:
    """X^n - 1 over F_q."""
    return FieldPoly(q, (q - 1,) + (0,) * (n - 1) + (1,))


def binom_mod(n: int, k: int, q: int) -> int:
    """C(n, k) mod prime q via Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        ni, ki = n % q, k % q
        if ki > ni:
            return 0
        c = 1
        for i in range(ki):
            c = c * (ni - i) // (i + 1)
        out = out * c % q
        n //= q
        k //= q
    return out


def hasse_derivative(f: FieldPoly, j: int) -> FieldPoly:
    if j < 0:
        raise ParameterError("derivative order must be nonnegative")
    q = f.modulus
    c = f.coeffs
    return FieldPoly(q, tuple(binom_mod(n, j, q) * c[n] for n in range(j, len(c))))


def hasse_at(f: FieldPoly, j: int, x: int = 1) -> int:
    """j-th Hasse derivative evaluated at x without building the polynomial."""
    q = f.modulus
    acc = 0
    for n in range(j, len(f.coeffs)):
        a = f.coeffs[n]
        if a:
            acc += binom_mod(n, j, q) * a * pow(x, n - j, q)
    return acc % q


def multiplicity_at_one(f: FieldPoly) -> int:
    """Largest m with (X - 1)^m dividing f, from Hasse derivatives at 1."""
    if f.is_zero():
        raise ParameterError("the zero polynomial has infinite multiplicity")
    j = 0
    while hasse_at(f, j, 1) == 0:
        j += 1
    return j


def multiplicity_by_division(f: FieldPoly) -> int:
    """Same quantity as :func:`multiplicity_at_one`, by repeated synthetic division."""
    if f.is_zero():
        raise ParameterError("the zero polynomial has infinite multiplicity")
    q = f.modulus
    c = list(f.coeffs)
    m = 0
    while True:
        # Horner division by (X - 1): remainder is f(1)
        out = [0] * (len(c) - 1)
        acc = 0
        for i in range(len(c) - 1, 0, -1):
            acc = (acc + c[i]) % q
            out[i - 1] = acc
        if (acc + c[0]) % q:
            return m
        c = out
        m += 1


@dataclass(frozen=True)
class CyclotomicFactorizationF2:
    """X^(p^2) + 1 = (X + 1) * Q_p(X) * Phi(X) over F_2."""

    p: int
    linear: FieldPoly
    q_p: FieldPoly
    phi: FieldPoly
    q_p_irreducible: bool
    phi_irreducible: bool

    @property
    def factors(self) -> tuple[FieldPoly, FieldPoly, FieldPoly]:
        return self.linear, self.q_p, self.phi


def cyclotomic_factorization_f2(p: int) -> CyclotomicFactorizationF2:
    check_odd_prime(p)
    linear = FieldPoly(2, (1, 1))
    q_p = FieldPoly(2, (1,) * p)
    phi = FieldPoly.from_exponents(2, range(0, p * p, p))
    return CyclotomicFactorizationF2(
        p,
        linear,
        q_p,
        phi,
        q_p_irreducible=order_mod(2, p) == p - 1,
        phi_irreducible=order_mod(2, p * p) == p * (p - 1),
    )
