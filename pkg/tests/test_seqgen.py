import pytest

from pqseq.errors import ParameterError
from pqseq.quotients import PrimeParams, legendre, poly_quotient
from pqseq.seqgen import (
    PeriodicSequence,
    extend,
    gen_complement,
    gen_indicator,
    gen_legendre,
    gen_modified_legendre,
    gen_threshold,
    legendre_set,
    modified_legendre_positions,
    threshold_set,
)

from conftest import all_params


def ones(seq):
    return {u for u, s in enumerate(seq.symbols) if s}


def test_threshold_examples():
    assert ones(gen_threshold(PrimeParams(3, 2))) == {4, 5}
    assert ones(gen_threshold(PrimeParams(3, 1))) == {5, 6, 7}


def test_legendre_examples():
    assert ones(gen_legendre(PrimeParams(3, 2))) == {4, 5}
    for w in range(2, 5):
        assert gen_legendre(PrimeParams(5, w)).weight == 8


@pytest.mark.parametrize("params", all_params(), ids=str)
def test_legendre_zero_where_quotient_vanishes(params):
    seq = gen_legendre(params)
    for u in range(params.period):
        q = poly_quotient(params.p, params.w, u)
        if q == 0:
            assert seq.symbols[u] == 0
        else:
            assert seq.symbols[u] == (legendre(q, params.p) == -1)


def test_indicator_examples():
    s = gen_indicator(PrimeParams(3, 2), {2})
    assert ones(s) == {4, 5} and s.weight == 2
    s = gen_indicator(PrimeParams(3, 1), {1})
    assert ones(s) == {2, 3, 4} and s.weight == 3
    with pytest.raises(ParameterError):
        gen_indicator(PrimeParams(3, 2), set())
    with pytest.raises(ParameterError):
        gen_indicator(PrimeParams(3, 2), {3})


def test_complement_examples():
    pr = PrimeParams(3, 2)
    s = gen_complement(pr, {2})
    assert ones(s) == {0, 3, 4, 5, 6} and s.weight == 5
    h = gen_indicator(pr, {0, 1})
    assert all(a + b == 1 for a, b in zip(s.symbols, h.symbols))
    with pytest.raises(ParameterError):
        gen_complement(PrimeParams(3, 1), {2})


@pytest.mark.parametrize("params", all_params((3, 5, 7)), ids=str)
def test_weights(params):
    from itertools import combinations

    p = params.p
    for n in range(1, p):
        for I in list(combinations(range(p), n))[:6]:
            h = gen_indicator(params, I)
            assert h.weight == (p * n if params.w == 1 else (p - 1) * n)
            if params.w >= 2:
                assert gen_complement(params, I).weight == (p - 1) * n + p


@pytest.mark.parametrize("params", all_params(w_min=2), ids=str)
def test_named_constructions_are_indicators(params):
    p = params.p
    assert gen_threshold(params).symbols == gen_indicator(params, threshold_set(p)).symbols
    assert gen_legendre(params).symbols == gen_indicator(params, legendre_set(p)).symbols
    assert gen_threshold(params).weight == (p - 1) * (p - 1) // 2


@pytest.mark.parametrize("p", (3, 5, 7, 11, 13))
def test_direct_evaluation_matches_classes_for_w1(p):
    # direct evaluation at u = lp places it by q(lp) = l, like the w = 1 indicator
    params = PrimeParams(p, 1)
    assert gen_threshold(params).symbols == gen_indicator(params, threshold_set(p)).symbols
    assert gen_legendre(params).symbols == gen_indicator(params, legendre_set(p)).symbols


@pytest.mark.parametrize("params", all_params((3, 5, 7)), ids=str)
def test_periodicity(params):
    T = params.period
    for name, seq in (("threshold", gen_threshold(params)), ("legendre", gen_legendre(params))):
        terms = extend(params, name, 2 * T)
        assert tuple(terms[:T]) == seq.symbols
        assert terms[T:] == terms[:T]
    I = {1, params.p - 1}
    terms = extend(params, "indicator", 2 * T, I)
    assert tuple(terms[:T]) == gen_indicator(params, I).symbols
    assert terms[T:] == terms[:T]


def test_sequence_validation():
    with pytest.raises(ParameterError):
        PeriodicSequence(2, (0, 2))
    with pytest.raises(ParameterError):
        PeriodicSequence(4, (0, 1))
    s = PeriodicSequence(2, (1, 0, 1))
    assert s.to_int() == 0b101 and s.over(3).modulus == 3


def test_modified_legendre_positions():
    pr = PrimeParams(5, 2)
    pos = modified_legendre_positions(pr)
    assert len(pos) == 2 * 5 - 1
    pr1 = PrimeParams(5, 1)
    assert len(modified_legendre_positions(pr1, "classes")) == 5
    assert modified_legendre_positions(pr1, "origin") == {0}
    f = gen_modified_legendre(pr)
    assert {f.symbols[u] for u in pos} == {3}
