"""Linear complexity of periodic sequences by several independent engines.

``lc_gcd``                T - deg gcd(X^T - 1, S(X)), any field and period.
``lc_berlekamp_massey``   shortest LFSR over two periods.
``lc_f2_structured``      three divisibility tests, F_2 with 2 primitive mod p^2.
``lc_fp_multiplicity``    T - multiplicity of 1 as a root, F_p with T = p^2.
``lc_bivariate``          1 + degree of the interpolating polynomial in two
                          variables, F_p with least period p^2.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError, UnsupportedStructure
from .polyring import (
    CyclotomicFactorizationF2,
    FieldPoly,
    divides,
    f2_gcd,
    multiplicity_at_one,
    poly_gcd,
    x_pow_minus_one,
)
from .seqgen import PeriodicSequence


def generating_poly(seq: PeriodicSequence) -> FieldPoly:
    return FieldPoly(seq.modulus, seq.symbols)


def lc_gcd(seq: PeriodicSequence) -> int:
    T = seq.period
    if seq.weight == 0:
        return 0
    if seq.modulus == 2:
        g = f2_gcd((1 << T) | 1, seq.to_int())
        return T - (g.bit_length() - 1)
    g = poly_gcd(x_pow_minus_one(seq.modulus, T), generating_poly(seq))
    return T - g.degree


def _bm_f2(s: int, n: int) -> int:
    # connection polynomials c, b as ints; bit i is the coefficient of D^i
    c, b = 1, 1
    L, m = 0, 1
    for i in range(n):
        # discrepancy s_i + sum_{j>=1} c_j s_{i-j}
        d = (s >> i) & 1
        cc = c >> 1
        j = 1
        while cc:
            if cc & 1:
                d ^= (s >> (i - j)) & 1
            cc >>= 1
            j += 1
        if d == 0:
            m += 1
        elif 2 * L <= i:
            t = c
            c ^= b << m
            L = i + 1 - L
            b = t
            m = 1
        else:
            c ^= b << m
            m += 1
    return L


def berlekamp_massey(symbols, q: int) -> int:
    """Length of the shortest LFSR over F_q generating the finite sequence."""
    n = len(symbols)
    c = [1]
    b = [1]
    L, m, bd = 0, 1, 1
    for i in range(n):
        d = symbols[i]
        for j in range(1, L + 1):
            if j < len(c):
                d += c[j] * symbols[i - j]
        d %= q
        if d == 0:
            m += 1
            continue
        coef = d * pow(bd, -1, q) % q
        t = list(c)
        need = len(b) + m
        if len(c) < need:
            c.extend([0] * (need - len(c)))
        for j, bj in enumerate(b):
            c[j + m] = (c[j + m] - coef * bj) % q
        if 2 * L <= i:
            L = i + 1 - L
            b = t
            bd = d
            m = 1
        else:
            m += 1
    return L


def lc_berlekamp_massey(seq: PeriodicSequence) -> int:
    doubled = seq.symbols * 2
    if seq.modulus == 2:
        bits = sum(1 << i for i, s in enumerate(doubled) if s)
        return _bm_f2(bits, len(doubled))
    return berlekamp_massey(doubled, seq.modulus)


def lc_f2_structured(seq: PeriodicSequence, fact: CyclotomicFactorizationF2) -> int:
    p = fact.p
    if seq.modulus != 2 or seq.period != p * p:
        raise UnsupportedStructure("needs a binary sequence of period p^2")
    if not (fact.q_p_irreducible and fact.phi_irreducible):
        raise UnsupportedStructure(
            f"2 is not a primitive root modulo {p}^2; factors are reducible"
        )
    S = generating_poly(seq)
    lc = p * p
    if divides(fact.linear, S):
        lc -= 1
    if divides(fact.q_p, S):
        lc -= p - 1
    if divides(fact.phi, S):
        lc -= p * p - p
    return lc


def _is_power_of(T: int, p: int) -> bool:
    while T % p == 0:
        T //= p
    return T == 1


def lc_fp_multiplicity(seq: PeriodicSequence) -> int:
    q, T = seq.modulus, seq.period
    if q == 2 or not _is_power_of(T, q):
        raise UnsupportedStructure("needs an odd prime field with period a power of it")
    if seq.weight == 0:
        return 0
    return T - multiplicity_at_one(generating_poly(seq))


def least_period(symbols) -> int:
    n = len(symbols)
    for d in range(1, n + 1):
        if n % d == 0 and all(symbols[i] == symbols[i % d] for i in range(n)):
            return d
    return n


@dataclass(frozen=True)
class BivariatePoly:
    """Polynomial in X0, X1 over F_p with degree < p in each variable.

    ``coeffs[i][j]`` is the coefficient of X0^i X1^j.
    """

    modulus: int
    coeffs: tuple[tuple[int, ...], ...]

    def __call__(self, x0: int, x1: int) -> int:
        p = self.modulus
        acc = 0
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    acc += c * pow(x0, i, p) * pow(x1, j, p)
        return acc % p

    def degree(self) -> int:
        """Degree with X0^i X1^j weighted as i + j*p; -1 for the zero polynomial."""
        p = self.modulus
        return max(
            (i + j * p for i, row in enumerate(self.coeffs) for j, c in enumerate(row) if c),
            default=-1,
        )

    def total_degree(self) -> int:
        return max(
            (i + j for i, row in enumerate(self.coeffs) for j, c in enumerate(row) if c),
            default=-1,
        )


def _interp_matrix(p: int) -> list[list[int]]:
    # row i: coefficients giving the X^i coefficient from values at 0..p-1,
    # from f(X) = sum_c f(c) (1 - (X - c)^(p-1))
    from .polyring import binom_mod

    M = [[0] * p for _ in range(p)]
    for c in range(p):
        # (X - c)^(p-1) = sum_m C(p-1, m) X^m (-c)^(p-1-m)
        for m in range(p):
            t = binom_mod(p - 1, m, p) * pow(-c % p, p - 1 - m, p) % p
            M[m][c] = (M[m][c] - t) % p
        M[0][c] = (M[0][c] + 1) % p
    return M


def seq_to_bivariate(seq: PeriodicSequence) -> BivariatePoly:
    p = seq.modulus
    if p == 2 or seq.period != p * p:
        raise UnsupportedStructure("needs an odd prime field with period p^2")
    M = _interp_matrix(p)
    s = seq.symbols
    # stage 1: along i0 for each fixed i1
    stage = [
        [sum(M[a][i0] * s[i0 + i1 * p] for i0 in range(p)) % p for a in range(p)]
        for i1 in range(p)
    ]
    # stage 2: along i1 for each X0 power a
    coeffs = tuple(
        tuple(sum(M[b][i1] * stage[i1][a] for i1 in range(p)) % p for b in range(p))
        for a in range(p)
    )
    return BivariatePoly(p, coeffs)


def lc_bivariate(seq: PeriodicSequence) -> int:
    p = seq.modulus
    if p == 2 or seq.period != p * p:
        raise UnsupportedStructure("needs an odd prime field with period p^2")
    if least_period(seq.symbols) != p * p:
        raise UnsupportedStructure("least period is smaller than p^2")
    return 1 + seq_to_bivariate(seq).degree()
