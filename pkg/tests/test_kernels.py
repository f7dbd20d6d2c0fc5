import random

import pytest

from pqseq import kernels
from pqseq.kerror import _generic_min
from pqseq.lincomp import lc_gcd
from pqseq.seqgen import PeriodicSequence

BACKENDS = [kernels.python_backend]
if kernels.compiled_backend is not None:
    BACKENDS.append(kernels.compiled_backend)
ids = [b.__name__.rsplit(".", 1)[-1] for b in BACKENDS]


def test_backend_flag():
    assert kernels.BACKEND in ("compiled", "python")
    assert kernels.backend in BACKENDS


def _bits(symbols):
    return sum(1 << i for i, s in enumerate(symbols) if s)


@pytest.mark.parametrize("be", BACKENDS, ids=ids)
@pytest.mark.parametrize("T,p", [(9, 3), (25, 5), (25, 0), (49, 0), (12, 0), (70, 0), (130, 0)])
def test_f2_lc(be, T, p):
    rng = random.Random(T + p)
    for _ in range(50):
        s = PeriodicSequence(2, tuple(rng.randrange(2) for _ in range(T)))
        assert be.f2_lc(s.to_int(), T, p) == lc_gcd(s)


@pytest.mark.parametrize("be", BACKENDS, ids=ids)
@pytest.mark.parametrize("T,p,k", [(9, 3, 1), (9, 3, 2), (9, 0, 3), (25, 5, 2), (25, 0, 2), (10, 0, 3)])
def test_f2_min_lc(be, T, p, k):
    rng = random.Random(k * T)
    for _ in range(4):
        s = PeriodicSequence(2, tuple(rng.randrange(2) for _ in range(T)))
        ref = _generic_min(s, k, 0, T)
        assert be.f2_min_lc(s.to_int(), T, k, 0, T, p) == ref
        mid = T // 2
        parts = min(be.f2_min_lc(s.to_int(), T, k, 0, mid, p),
                    be.f2_min_lc(s.to_int(), T, k, mid, T, p))
        assert parts == ref


@pytest.mark.parametrize("be", BACKENDS, ids=ids)
def test_f2_min_lc_empty_range(be):
    assert be.f2_min_lc(0b101, 9, 2, 8, 9, 3) == 10


@pytest.mark.parametrize("be", BACKENDS, ids=ids)
@pytest.mark.parametrize("q,T,k", [(3, 9, 1), (3, 9, 2), (5, 25, 1), (3, 27, 1), (5, 25, 2)])
def test_fp_min_lc(be, q, T, k):
    rng = random.Random(q * T + k)
    table = kernels.binom_table(T, q)
    for _ in range(3):
        s = PeriodicSequence(q, tuple(rng.randrange(q) for _ in range(T)))
        ref = _generic_min(s, k, 0, T)
        assert be.fp_min_lc(s.symbols, q, k, 0, T, table) == ref


@pytest.mark.skipif(kernels.compiled_backend is None, reason="extension not built")
@pytest.mark.parametrize("seed", range(5))
def test_backends_agree(seed):
    py, c = kernels.python_backend, kernels.compiled_backend
    rng = random.Random(seed)
    s = tuple(rng.randrange(2) for _ in range(25))
    bits = _bits(s)
    for k in range(3):
        assert py.f2_min_lc(bits, 25, k, 0, 25, 5) == c.f2_min_lc(bits, 25, k, 0, 25, 5)
        assert py.f2_min_lc(bits, 25, k, 3, 11, 0) == c.f2_min_lc(bits, 25, k, 3, 11, 0)
    sp = tuple(rng.randrange(5) for _ in range(25))
    table = kernels.binom_table(25, 5)
    for k in range(3):
        assert py.fp_min_lc(sp, 5, k, 0, 25, table) == c.fp_min_lc(sp, 5, k, 0, 25, table)


def test_binom_table_layout():
    t = kernels.binom_table(9, 3)
    from math import comb

    for j in range(9):
        for n in range(9):
            assert t[j * 9 + n] == (comb(n, j) % 3 if j <= n else 0)
