import itertools
import random
from functools import lru_cache

import pytest

from pqseq.errors import BudgetExceeded, ParameterError, PreconditionError
from pqseq.kerror import (
    BOUND_OK,
    CLOSED_FORM,
    MATCH,
    NO_CLAIM,
    TheoremSpec,
    default_budget,
    default_k_max,
    klc_exhaustive,
    klc_theorem,
    pattern_count,
    spectrum,
    thm4_error_poly,
    thm5_error_poly,
    verify_theorem,
    witnesses,
)
from pqseq.lincomp import lc_gcd
from pqseq.polyring import FieldPoly
from pqseq.quotients import PrimeParams
from pqseq.seqgen import PeriodicSequence, gen_complement, gen_indicator

from oracles import circulant_rank


@lru_cache(maxsize=None)
def _all_lcs(q, T):
    # LC of every sequence of length T over F_q, indexed by tuple
    return {s: circulant_rank(s, q) for s in itertools.product(range(q), repeat=T)}


def brute_klc(seq, k):
    table = _all_lcs(seq.modulus, seq.period)
    return min(
        lc for s, lc in table.items()
        if sum(a != b for a, b in zip(s, seq.symbols)) <= k
    )


@pytest.mark.parametrize("q", (2, 3))
def test_exhaustive_against_brute_force(q):
    rng = random.Random(q)
    for _ in range(6):
        s = PeriodicSequence(q, tuple(rng.randrange(q) for _ in range(9)))
        for k in range(4):
            assert klc_exhaustive(s, k) == brute_klc(s, k)


def test_worked_example():
    h = gen_indicator(PrimeParams(3, 2), {2})
    assert [klc_exhaustive(h, k) for k in range(3)] == [8, 7, 0]
    assert spectrum(h).pairs() == [(0, 8), (1, 7), (2, 0)]


@pytest.mark.parametrize("q", (2, 5))
def test_k_zero_is_lc(q):
    rng = random.Random(q)
    for _ in range(20):
        s = PeriodicSequence(q, tuple(rng.randrange(q) for _ in range(25)))
        assert klc_exhaustive(s, 0) == lc_gcd(s)


def test_spectrum_monotone_and_ends_at_zero():
    rng = random.Random(3)
    for q in (2, 3):
        s = PeriodicSequence(q, tuple(rng.randrange(q) for _ in range(9)))
        vals = [pt.lc for pt in spectrum(s)]
        assert all(a >= b for a, b in zip(vals, vals[1:]))
        assert vals[-1] == 0 and len(vals) == s.weight + 1


def test_engines_and_workers_agree():
    s = gen_indicator(PrimeParams(5, 3), {1, 3})
    ref = [klc_exhaustive(s, k, engine="gcd") for k in range(3)]
    assert [klc_exhaustive(s, k, engine="structured") for k in range(3)] == ref
    assert [klc_exhaustive(s, k, workers=2) for k in range(3)] == ref
    assert [klc_exhaustive(s, k, workers=2) for k in range(3)] == ref
    sp = s.over(5)
    assert klc_exhaustive(sp, 1, engine="gcd") == klc_exhaustive(sp, 1)


def test_budget():
    s = gen_indicator(PrimeParams(5, 2), {1})
    assert pattern_count(25, 2, 2) == 1 + 25 + 300
    with pytest.raises(BudgetExceeded) as exc:
        klc_exhaustive(s, 2, budget=100)
    assert exc.value.required == 326
    assert klc_exhaustive(s, 2, budget=326) >= 0
    sp = spectrum(s, budget=30)
    assert sp.truncated_at == 2 and len(sp) == 2
    # k >= weight needs no search
    assert klc_exhaustive(s, s.weight, budget=1) == 0


def test_budget_env(monkeypatch):
    monkeypatch.setenv("PQSEQ_BUDGET", "1234")
    assert default_budget() == 1234
    monkeypatch.delenv("PQSEQ_BUDGET")
    assert default_budget() == 10**8


def test_bad_arguments():
    s = gen_indicator(PrimeParams(3, 2), {1})
    with pytest.raises(ParameterError):
        klc_exhaustive(s, -1)
    with pytest.raises(ParameterError):
        klc_exhaustive(s, 1, engine="magic")
    with pytest.raises(ParameterError):
        klc_exhaustive(PeriodicSequence(2, (1, 0, 1, 1)), 1, engine="structured")


def test_closed_form_examples():
    assert klc_theorem(TheoremSpec(PrimeParams(5, 2), {1, 2}, "thm1"), 3).lc == 20
    pt = klc_theorem(TheoremSpec(PrimeParams(5, 2), {1}, "thm1"), 3)
    assert (pt.lc, pt.method) == (21, CLOSED_FORM)
    assert klc_theorem(TheoremSpec(PrimeParams(5, 2), {1}, "thm1"), 0).lc == 24
    assert klc_theorem(TheoremSpec(PrimeParams(5, 2), {1}, "thm1"), 1).lc == 21
    assert klc_theorem(TheoremSpec(PrimeParams(3, 1), {1}, "thm2"), 2).lc == 7
    assert klc_theorem(TheoremSpec(PrimeParams(5, 2), {1, 2}, "complement"), 0).lc == 25
    assert klc_theorem(TheoremSpec(PrimeParams(5, 2), {1, 2}, "complement"), 8).lc == 5


@pytest.mark.parametrize("variant,p,w,I", [
    ("thm1", 7, 2, {1}),          # 2 not primitive mod 49
    ("thm1", 5, 1, {1}),          # needs w >= 2
    ("thm2", 5, 2, {1}),          # needs w = 1
    ("thm1", 5, 2, {1, 2, 3}),    # |I| too large
    ("thm3_bound", 7, 2, {1, 2, 3, 4}),
    ("corollary", 5, 2, {1}),
    ("fp_upper_legendre", 5, 2, {1}),
])
def test_preconditions(variant, p, w, I):
    with pytest.raises(PreconditionError):
        klc_theorem(TheoremSpec(PrimeParams(p, w), I, variant), 0)


def test_unknown_variant():
    with pytest.raises(ParameterError):
        TheoremSpec(PrimeParams(5, 2), {1}, "thm9")


@pytest.mark.parametrize("variant,p,w,I", [
    ("thm1", 3, 2, {1}), ("thm1", 5, 3, {0, 4}), ("thm2", 3, 1, {2}), ("thm2", 5, 1, {1, 2}),
    ("corollary", 3, 2, None), ("corollary", 5, 4, None),
    ("thm4", 3, 1, {1}), ("thm5", 5, 2, {2}), ("thm3_bound", 7, 1, {3}),
])
def test_verify_reports_agree(variant, p, w, I):
    if I is None:
        I = frozenset(range((p + 1) // 2, p))
    rep = verify_theorem(TheoremSpec(PrimeParams(p, w), I, variant))
    assert rep.ok, rep.to_dict()
    assert rep.truncated_at is None
    assert {r.status for r in rep.rows} <= {MATCH, BOUND_OK}
    d = rep.to_dict()
    assert d["ok"] is True and d["variant"] == variant


def test_complement_claim_disagrees_past_the_step():
    rep = verify_theorem(TheoremSpec(PrimeParams(3, 2), {1}, "complement"))
    got = [(r.k, r.exhaustive) for r in rep.rows]
    assert got == [(0, 7), (1, 7), (2, 3), (3, 2), (4, 1), (5, 0)]
    assert not rep.ok


def test_default_k_max():
    pr = PrimeParams(5, 2)
    assert default_k_max(TheoremSpec(pr, {1}, "thm5")) == 4
    assert default_k_max(TheoremSpec(PrimeParams(5, 1), {1}, "thm4")) == 5
    assert default_k_max(TheoremSpec(pr, {1}, "thm1")) == 4
    assert default_k_max(TheoremSpec(pr, {1}, "fp_lower"), budget=26 * 4 + 1) == 1


@pytest.mark.parametrize("p", (3, 5))
def test_error_polynomials(p):
    lin = FieldPoly(p, (p - 1, 1))
    for w in range(1, p):
        pr = PrimeParams(p, w)
        for I in ({1}, {0, p - 1}):
            if w == 1:
                e = thm4_error_poly(pr, I)
                assert e.degree == p - 1
                assert (e % (lin ** (p - 1))).is_zero()
                variant = "thm4"
            else:
                e = thm5_error_poly(pr, I)
                assert e(0) == 0 and sum(1 for c in e.coeffs if c) == p - 1
                variant = "thm5"
            (wit,) = witnesses(TheoremSpec(pr, I, variant))
            assert wit.ok
            assert wit.multiplicity >= p
            assert wit.lc <= p * p - p


def test_fp_lower_bound_p3():
    for w in (1, 2):
        rep = verify_theorem(TheoremSpec(PrimeParams(3, w), {2}, "fp_lower"))
        assert rep.ok


def test_legendre_witnesses_p5():
    for w in (1, 2, 3, 4):
        wits = witnesses(TheoremSpec(PrimeParams(5, w), frozenset({2, 3}), "fp_upper_legendre"))
        main = [x for x in wits if x.name.endswith("[classes]")]
        assert main and all(x.ok for x in main)
        assert main[0].lc == {1: 11, 2: 13, 3: 15, 4: 13}[w]


def test_no_claim_rows():
    rep = verify_theorem(TheoremSpec(PrimeParams(3, 2), {2}, "fp_upper_legendre"), k_max=5)
    statuses = [r.status for r in rep.rows]
    assert statuses[:5] == [NO_CLAIM] * 5
    assert statuses[5] == BOUND_OK


def test_complement_sequence_weight():
    s = gen_complement(PrimeParams(5, 2), {1, 2})
    assert s.weight == 2 * 4 + 5


@pytest.mark.parametrize("p", (3, 5))
def test_complement_differs_by_at_most_one(p):
    for w in range(2, p):
        pr = PrimeParams(p, w)
        for n in range(1, p):
            for I in itertools.combinations(range(p), n):
                J = set(range(p)) - set(I)
                h = gen_indicator(pr, I)
                hc = gen_complement(pr, J)
                assert all(a + b == 1 for a, b in zip(h.symbols, hc.symbols))
                assert abs(lc_gcd(h) - lc_gcd(hc)) <= 1
