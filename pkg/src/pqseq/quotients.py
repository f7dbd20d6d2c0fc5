"""Fermat and polynomial quotients modulo an odd prime, and the partition of
Z/p^2 into the classes D_0, ..., D_{p-1} they induce.

All quotient evaluations run on residues modulo p^2, so no big integers
are formed: u^w - u^(wp) is divisible by p, and dividing its lift in
[0, p^2) by p gives the quotient modulo p.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, isqrt
from typing import Optional

from .errors import ParameterError


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for desk-scale n."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def check_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise ParameterError(f"p must be an odd prime, got {p!r}")


def _check_exponent(p: int, w: int) -> None:
    if not isinstance(w, int) or not 1 <= w <= p - 1:
        raise ParameterError(
            f"exponent w must lie in [1, {p - 1}] for p={p}, got {w!r}; "
            "use reduce_exponent for larger values"
        )


def _quotient(p: int, w: int, u: int) -> int:
    m = p * p
    return ((pow(u, w, m) - pow(u, w * p, m)) % m) // p


def fermat_quotient(p: int, u: int) -> int:
    """q_p(u) = (u^(p-1) - 1)/p mod p, and 0 when p divides u."""
    check_odd_prime(p)
    if u < 0:
        raise ParameterError(f"u must be nonnegative, got {u}")
    if u % p == 0:
        return 0
    return _quotient(p, p - 1, u)


def poly_quotient(p: int, w: int, u: int) -> int:
    """q_{p,w}(u) = (u^w - u^(wp))/p mod p for 1 <= w <= p-1.

    At multiples u = lp this evaluates to 0 for w > 1 and to l mod p for w = 1.
    """
    check_odd_prime(p)
    _check_exponent(p, w)
    if u < 0:
        raise ParameterError(f"u must be nonnegative, got {u}")
    return _quotient(p, w, u)


def reduce_exponent(p: int, W: int) -> Optional[tuple[int, int]]:
    """Reduce an arbitrary exponent W >= 1 to the range [1, p-1].

    Returns ``(w1, scale)`` with ``q_{p,W}(u) == scale * q_{p,w1}(u) mod p``
    for every u coprime to p, or ``None`` when p divides W (the quotient is
    then identically zero).
    """
    check_odd_prime(p)
    if not isinstance(W, int) or W < 1:
        raise ParameterError(f"W must be a positive integer, got {W!r}")
    if W % p == 0:
        return None
    w1 = (W - 1) % (p - 1) + 1
    w2 = (W - w1) // (p - 1)
    scale = pow(w1, -1, p) * (w1 - w2) % p
    return w1, scale


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    check_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def quadratic_nonresidues(p: int) -> frozenset[int]:
    return frozenset(a for a in range(1, p) if legendre(a, p) == -1)


def order_mod(a: int, m: int) -> int:
    """Multiplicative order of a modulo m."""
    if m < 1:
        raise ParameterError(f"modulus must be positive, got {m}")
    if gcd(a, m) != 1:
        raise ParameterError(f"{a} is not invertible modulo {m}")
    if m == 1:
        return 1
    a %= m
    x, t = a, 1
    while x != 1:
        x = x * a % m
        t += 1
    return t


def euler_phi(m: int) -> int:
    result, n = m, m
    d = 2
    while d * d <= n:
        if n % d == 0:
            while n % d == 0:
                n //= d
            result -= result // d
        d += 1
    if n > 1:
        result -= result // n
    return result


def is_primitive_root(a: int, m: int) -> bool:
    return order_mod(a, m) == euler_phi(m)


@dataclass(frozen=True)
class PrimeParams:
    """An odd prime p with exponent w and the behaviour of 2 modulo p^2."""

    p: int
    w: int
    two_order: int = field(init=False)

    def __post_init__(self):
        check_odd_prime(self.p)
        _check_exponent(self.p, self.w)
        object.__setattr__(self, "two_order", order_mod(2, self.p * self.p))

    @property
    def two_primitive(self) -> bool:
        return self.two_order == self.p * (self.p - 1)

    @property
    def lam(self) -> Optional[int]:
        """lambda with two_order == lambda * p, or None if p does not divide it."""
        if self.two_order % self.p:
            return None
        return self.two_order // self.p

    @property
    def wieferich(self) -> bool:
        return pow(2, self.p - 1, self.p * self.p) == 1

    @property
    def period(self) -> int:
        return self.p * self.p


@dataclass(frozen=True)
class ClassPartition:
    p: int
    w: int
    classes: tuple[frozenset[int], ...]

    @cached_property
    def multiples(self) -> frozenset[int]:
        """The set P = {lp : 0 <= l < p}."""
        return frozenset(range(0, self.p * self.p, self.p))

    def union(self, index_set) -> frozenset[int]:
        out: set[int] = set()
        for l in index_set:
            out |= self.classes[l]
        return frozenset(out)


def class_partition(params: PrimeParams) -> ClassPartition:
    p, w = params.p, params.w
    buckets: list[set[int]] = [set() for _ in range(p)]
    for u in range(p * p):
        if u % p:
            buckets[_quotient(p, w, u)].add(u)
    return ClassPartition(p, w, tuple(frozenset(b) for b in buckets))


def quotient_table(params: PrimeParams) -> list[int]:
    """q_{p,w}(u) for u = 0, ..., p^2 - 1."""
    p, w = params.p, params.w
    return [_quotient(p, w, u) for u in range(p * p)]
