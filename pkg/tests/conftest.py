import pytest

from pqseq.quotients import PrimeParams

SMALL_PRIMES = (3, 5, 7, 11, 13)


def all_params(primes=SMALL_PRIMES, w_min=1):
    return [PrimeParams(p, w) for p in primes for w in range(w_min, p)]


@pytest.fixture
def p3w2():
    return PrimeParams(3, 2)
