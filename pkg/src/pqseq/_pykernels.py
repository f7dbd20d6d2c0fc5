"""Pure-Python versions of the exhaustive-search inner loops.

Both backends expose the same four functions:

``f2_lc(bits, T, p=0)``
    LC of the binary period packed into ``bits``.  ``p > 0`` selects the
    three-factor divisibility test (valid only when T = p^2 and 2 is a
    primitive root mod p^2); ``p = 0`` runs the gcd with X^T + 1.
``f2_min_lc(bits, T, k, lo, hi, p=0)``
    Minimum LC over all flips of exactly k positions whose smallest
    position lies in [lo, hi).  Returns T + 1 if that range holds no pattern.
``fp_min_lc(symbols, q, k, lo, hi, binom_table)``
    The F_q analogue for T a power of q, with every nonzero change value
    at every chosen position.  LC is T minus the multiplicity of 1 as a
    root, read off the Hasse derivatives at 1 (``binom_table[j*T + n]`` is
    C(n, j) mod q).
"""
from __future__ import annotations

from itertools import combinations, product

from .polyring import f2_gcd


def _structured_lc(bits: int, T: int, p: int) -> int:
    counts = [0] * p
    for u in range(T):
        if (bits >> u) & 1:
            counts[u % p] += 1
    lc = T
    if sum(counts) % 2 == 0:
        lc -= 1
    if len({c & 1 for c in counts}) == 1:
        lc -= p - 1
    if all(c in (0, p) for c in counts):
        lc -= T - p
    return lc


def f2_lc(bits: int, T: int, p: int = 0) -> int:
    if p:
        return _structured_lc(bits, T, p)
    if bits == 0:
        return 0
    g = f2_gcd((1 << T) | 1, bits)
    return T - (g.bit_length() - 1)


def f2_min_lc(bits: int, T: int, k: int, lo: int, hi: int, p: int = 0) -> int:
    best = T + 1
    if k == 0:
        return f2_lc(bits, T, p) if lo <= 0 < hi else best
    for first in range(max(lo, 0), min(hi, T - k + 1)):
        b0 = bits ^ (1 << first)
        for rest in combinations(range(first + 1, T), k - 1):
            b = b0
            for r in rest:
                b ^= 1 << r
            lc = f2_lc(b, T, p)
            if lc < best:
                best = lc
                if best == 0:
                    return 0
    return best


def _fp_lc(base, binom_table, T, q, positions, deltas) -> int:
    for j in range(T):
        row = j * T
        v = base[j]
        for n, d in zip(positions, deltas):
            v += d * binom_table[row + n]
        if v % q:
            return T - j
    return 0


def fp_min_lc(symbols, q: int, k: int, lo: int, hi: int, binom_table) -> int:
    T = len(symbols)
    base = [
        sum(binom_table[j * T + n] * symbols[n] for n in range(T)) % q for j in range(T)
    ]
    best = T + 1
    if k == 0:
        return _fp_lc(base, binom_table, T, q, (), ()) if lo <= 0 < hi else best
    nonzero = range(1, q)
    for first in range(max(lo, 0), min(hi, T - k + 1)):
        for rest in combinations(range(first + 1, T), k - 1):
            positions = (first,) + rest
            for deltas in product(nonzero, repeat=k):
                lc = _fp_lc(base, binom_table, T, q, positions, deltas)
                if lc < best:
                    best = lc
                    if best == 0:
                        return 0
    return best
