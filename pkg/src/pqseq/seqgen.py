"""Periodic sequences of period p^2 built from polynomial quotients.

Every generator returns one period as a tuple of small integers over F_2.
The same symbols can be reinterpreted over F_p with :meth:`PeriodicSequence.over`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParameterError
from .quotients import (
    PrimeParams,
    _quotient,
    check_odd_prime,
    class_partition,
    is_prime,
    legendre,
    quadratic_nonresidues,
    quotient_table,
)


@dataclass(frozen=True)
class PeriodicSequence:
    """One period of a sequence over the prime field F_modulus."""

    modulus: int
    symbols: tuple[int, ...]
    label: str = "custom"

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise ParameterError(f"alphabet modulus must be prime, got {self.modulus}")
        if not self.symbols:
            raise ParameterError("a period must contain at least one symbol")
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        for s in self.symbols:
            if not 0 <= s < self.modulus:
                raise ParameterError(f"symbol {s} outside [0, {self.modulus})")

    @property
    def period(self) -> int:
        return len(self.symbols)

    @property
    def weight(self) -> int:
        return sum(1 for s in self.symbols if s)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, s in enumerate(self.symbols) if s)

    def over(self, modulus: int) -> "PeriodicSequence":
        """The same symbols read over another prime field (they must fit)."""
        return PeriodicSequence(modulus, self.symbols, self.label)

    def to_int(self) -> int:
        """Bit-packed form of a binary sequence: bit u holds s_u."""
        if self.modulus != 2:
            raise ParameterError("bit packing is only defined over F_2")
        return sum(1 << i for i, s in enumerate(self.symbols) if s)

    def term(self, u: int) -> int:
        return self.symbols[u % self.period]

    def __add__(self, other: "PeriodicSequence") -> "PeriodicSequence":
        if other.modulus != self.modulus or other.period != self.period:
            raise ParameterError("sequences must share field and period")
        q = self.modulus
        return PeriodicSequence(
            q, tuple((a + b) % q for a, b in zip(self.symbols, other.symbols)), self.label
        )


def from_support(period: int, support: Iterable[int], label: str, modulus: int = 2):
    sym = [0] * period
    for u in support:
        sym[u] = 1
    return PeriodicSequence(modulus, tuple(sym), label)


def _index_set(p: int, I: Iterable[int], what: str = "I") -> frozenset[int]:
    s = frozenset(int(i) for i in I)
    if not s:
        raise ParameterError(f"index set {what} must be nonempty")
    bad = [i for i in s if not 0 <= i < p]
    if bad:
        raise ParameterError(f"index set {what} has entries outside [0, {p}): {sorted(bad)}")
    return s


def threshold_set(p: int) -> frozenset[int]:
    return frozenset(range((p + 1) // 2, p))


def legendre_set(p: int) -> frozenset[int]:
    return quadratic_nonresidues(p)


def gen_threshold(params: PrimeParams) -> PeriodicSequence:
    # q/p >= 1/2  <=>  q >= (p+1)/2 for odd p; evaluated at every u, multiples included
    half = (params.p + 1) // 2
    table = quotient_table(params)
    return PeriodicSequence(2, tuple(int(q >= half) for q in table), "threshold")


def gen_legendre(params: PrimeParams) -> PeriodicSequence:
    p = params.p
    table = quotient_table(params)
    return PeriodicSequence(
        2, tuple(int(q != 0 and legendre(q, p) == -1) for q in table), "legendre"
    )


def gen_indicator(params: PrimeParams, I: Iterable[int]) -> PeriodicSequence:
    """Ones on the union of D_l over l in I (plus lp for l in I when w = 1)."""
    p = params.p
    I = _index_set(p, I)
    part = class_partition(params)
    support = set(part.union(I))
    if params.w == 1:
        support |= {l * p for l in I}
    return from_support(params.period, support, f"indicator({','.join(map(str, sorted(I)))})")


def gen_complement(params: PrimeParams, J: Iterable[int]) -> PeriodicSequence:
    """Ones on the union of D_l over l in J together with all multiples of p."""
    p = params.p
    if params.w < 2:
        raise ParameterError("the complement construction requires w >= 2")
    J = _index_set(p, J, "J")
    part = class_partition(params)
    support = part.union(J) | part.multiples
    return from_support(params.period, support, f"complement({','.join(map(str, sorted(J)))})")


def quotient_sequence(params: PrimeParams) -> PeriodicSequence:
    """The raw quotients (q_{p,w}(u)) as a sequence over F_p."""
    return PeriodicSequence(params.p, tuple(quotient_table(params)), "quotient")


def modified_legendre_positions(params: PrimeParams, reading: str = "classes") -> frozenset[int]:
    """Positions where the Legendre sequence gets the value 1/2 in F_p.

    For w >= 2 these are D_0 together with all multiples of p.  For w = 1
    the multiples of p are replaced by {0}; ``reading="classes"`` keeps D_0
    (the set is D_0 plus {0}), ``reading="origin"`` uses {0} alone.
    """
    part = class_partition(params)
    if params.w >= 2:
        return part.classes[0] | part.multiples
    if reading == "classes":
        return part.classes[0] | {0}
    if reading == "origin":
        return frozenset({0})
    raise ParameterError(f"unknown reading {reading!r}")


def substitute(seq: PeriodicSequence, positions: Iterable[int], value: int) -> PeriodicSequence:
    sym = list(seq.symbols)
    for u in positions:
        sym[u] = value % seq.modulus
    return PeriodicSequence(seq.modulus, tuple(sym), seq.label + "*")


def gen_modified_legendre(params: PrimeParams, positions: Sequence[int] | None = None) -> PeriodicSequence:
    """Legendre sequence over F_p with 1/2 written at the given positions."""
    p = params.p
    if positions is None:
        positions = modified_legendre_positions(params)
    half = pow(2, -1, p)
    return substitute(gen_legendre(params).over(p), positions, half)


def extend(params: PrimeParams, construction: str, n_terms: int, I: Iterable[int] = ()) -> list[int]:
    """Evaluate a construction term by term for u in [0, n_terms) without
    reducing u modulo p^2 first."""
    check_odd_prime(params.p)
    p, w = params.p, params.w
    I = frozenset(I)
    out = []
    for u in range(n_terms):
        q = _quotient(p, w, u)
        if construction == "threshold":
            out.append(int(q >= (p + 1) // 2))
        elif construction == "legendre":
            out.append(int(q != 0 and legendre(q, p) == -1))
        elif construction == "indicator":
            if u % p:
                out.append(int(q in I))
            else:
                out.append(int(w == 1 and q in I))
        else:
            raise ParameterError(f"unknown construction {construction!r}")
    return out
