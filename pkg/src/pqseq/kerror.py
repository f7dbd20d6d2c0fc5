"""k-error linear complexity: exhaustive search, closed-form evaluators for
the known theorems on quotient sequences, and a harness comparing the two.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb, isqrt
from typing import Iterable, Optional

from .errors import BudgetExceeded, ParameterError, PreconditionError
from .kernels import backend, binom_table
from .lincomp import generating_poly, lc_gcd
from .polyring import FieldPoly, multiplicity_at_one
from .quotients import PrimeParams, is_prime, order_mod
from .seqgen import (
    PeriodicSequence,
    gen_complement,
    gen_indicator,
    gen_legendre,
    gen_modified_legendre,
    gen_threshold,
    legendre_set,
    modified_legendre_positions,
    threshold_set,
)

DEFAULT_BUDGET = 10**8

EXHAUSTIVE = "exhaustive"
CLOSED_FORM = "closed_form"
LOWER_BOUND = "lower_bound"
UPPER_BOUND = "upper_bound"

VARIANTS = (
    "thm1",
    "thm2",
    "thm3_bound",
    "complement",
    "corollary",
    "thm4",
    "thm5",
    "fp_upper_legendre",
    "fp_lower",
)


def default_budget() -> int:
    env = os.environ.get("PQSEQ_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class SpectrumPoint:
    k: int
    lc: int
    method: str = EXHAUSTIVE


@dataclass
class Spectrum:
    """Spectrum points for k = 0, 1, ...; ``truncated_at`` is the first k
    that was skipped because the budget ran out, or None if complete."""

    points: list[SpectrumPoint]
    truncated_at: Optional[int] = None

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def pairs(self) -> list[tuple[int, int]]:
        return [(pt.k, pt.lc) for pt in self.points]


# -- exhaustive search ---------------------------------------------------------

def pattern_count(T: int, q: int, k: int) -> int:
    """Number of error patterns with at most k nonzero entries."""
    return sum(comb(T, i) * (q - 1) ** i for i in range(min(k, T) + 1))


def _structured_prime(T: int) -> int:
    p = isqrt(T)
    if p * p != T or p < 3 or not is_prime(p):
        return 0
    return p if order_mod(2, T) == p * (p - 1) else 0


def _is_power_of(T: int, q: int) -> bool:
    while T % q == 0:
        T //= q
    return T == 1


def _generic_min(seq: PeriodicSequence, i: int, lo: int, hi: int) -> int:
    """Fallback for fields/periods no kernel covers: lc_gcd on every pattern."""
    from itertools import combinations, product

    T, q = seq.period, seq.modulus
    best = T + 1
    if i == 0:
        return lc_gcd(seq) if lo <= 0 < hi else best
    base = list(seq.symbols)
    for first in range(max(lo, 0), min(hi, T - i + 1)):
        for rest in combinations(range(first + 1, T), i - 1):
            pos = (first,) + rest
            for deltas in product(range(1, q), repeat=i):
                sym = list(base)
                for n, d in zip(pos, deltas):
                    sym[n] = (sym[n] + d) % q
                best = min(best, lc_gcd(PeriodicSequence(q, sym)))
    return best


def _chunk_min(args) -> int:
    kind, payload, T, q, i, lo, hi, extra = args
    if kind == "f2":
        return backend.f2_min_lc(payload, T, i, lo, hi, extra)
    if kind == "fp":
        return backend.fp_min_lc(payload, q, i, lo, hi, binom_table(T, q))
    return _generic_min(PeriodicSequence(q, payload), i, lo, hi)


def _plan(seq: PeriodicSequence, engine: str):
    T, q = seq.period, seq.modulus
    if engine not in ("auto", "structured", "gcd"):
        raise ParameterError(f"unknown engine {engine!r}")
    if q == 2:
        p = _structured_prime(T) if engine != "gcd" else 0
        if engine == "structured" and not p:
            raise ParameterError("structured engine needs T = p^2 with 2 primitive mod p^2")
        return "f2", seq.to_int(), p
    if engine == "auto" and _is_power_of(T, q):
        return "fp", seq.symbols, 0
    return "generic", seq.symbols, 0


def exact_weight_min(
    seq: PeriodicSequence, i: int, engine: str = "auto", workers: int = 1
) -> int:
    """Minimum LC over error patterns with exactly i nonzero entries.

    The pattern space is split into contiguous ranges of the smallest error
    position; ranges are independent and merged by minimum.
    """
    T, q = seq.period, seq.modulus
    kind, payload, extra = _plan(seq, engine)
    if workers <= 1 or i == 0:
        return _chunk_min((kind, payload, T, q, i, 0, T, extra))
    n_chunks = min(T, 4 * workers)
    bounds = [T * c // n_chunks for c in range(n_chunks + 1)]
    jobs = [(kind, payload, T, q, i, bounds[c], bounds[c + 1], extra) for c in range(n_chunks)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return min(pool.map(_chunk_min, jobs))


def klc_exhaustive(
    seq: PeriodicSequence,
    k: int,
    budget: Optional[int] = None,
    engine: str = "auto",
    workers: int = 1,
) -> int:
    """Exact k-error linear complexity by enumerating every error pattern."""
    if k < 0:
        raise ParameterError("k must be nonnegative")
    if k >= seq.weight:
        # clearing every nonzero symbol is one of the admissible patterns
        return 0
    budget = default_budget() if budget is None else budget
    need = pattern_count(seq.period, seq.modulus, k)
    if need > budget:
        raise BudgetExceeded(need, budget)
    return min(exact_weight_min(seq, i, engine, workers) for i in range(k + 1))


def spectrum(
    seq: PeriodicSequence,
    k_max: Optional[int] = None,
    budget: Optional[int] = None,
    engine: str = "auto",
    workers: int = 1,
) -> Spectrum:
    weight = seq.weight
    k_max = weight if k_max is None else k_max
    budget = default_budget() if budget is None else budget
    points: list[SpectrumPoint] = []
    running = seq.period + 1
    for k in range(k_max + 1):
        if k >= weight:
            running = 0
        else:
            if pattern_count(seq.period, seq.modulus, k) > budget:
                return Spectrum(points, truncated_at=k)
            running = min(running, exact_weight_min(seq, k, engine, workers))
        points.append(SpectrumPoint(k, running, EXHAUSTIVE))
    return Spectrum(points)


# -- closed forms ---------------------------------------------------------------

@dataclass(frozen=True)
class TheoremSpec:
    """A theorem instance: the construction it is about and the field."""

    params: PrimeParams
    index_set: frozenset[int]
    variant: str

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ParameterError(f"unknown theorem variant {self.variant!r}")
        object.__setattr__(self, "index_set", frozenset(self.index_set))

    @property
    def field(self) -> str:
        return "fp" if self.variant in ("thm4", "thm5", "fp_upper_legendre", "fp_lower") else "f2"

    @property
    def modulus(self) -> int:
        return self.params.p if self.field == "fp" else 2


def _require(cond: bool, why: str) -> None:
    if not cond:
        raise PreconditionError(why)


def check_applicable(spec: TheoremSpec) -> None:
    """Raise PreconditionError naming the first failed hypothesis."""
    pr = spec.params
    p, w, I = pr.p, pr.w, spec.index_set
    half = (p - 1) // 2
    v = spec.variant
    _require(len(I) >= 1, "index set must be nonempty")
    _require(all(0 <= l < p for l in I), f"index set entries must lie in [0, {p})")
    if v in ("thm1", "thm2", "complement", "corollary"):
        _require(pr.two_primitive, f"2 is not a primitive root modulo {p}^2")
    if v in ("thm1", "complement", "corollary", "thm5"):
        _require(w >= 2, "requires 2 <= w <= p-1")
    if v in ("thm2", "thm4"):
        _require(w == 1, "requires w = 1")
    if v in ("thm1", "thm2", "thm3_bound", "complement", "thm4", "thm5", "fp_lower"):
        _require(len(I) <= half, f"requires |I| <= (p-1)/2 = {half}, got {len(I)}")
    if v == "thm3_bound":
        lam = pr.lam
        _require(
            lam is not None and 1 < lam <= p - 1 and (p - 1) % lam == 0,
            f"order of 2 modulo {p}^2 is {pr.two_order}, not lambda*p with 1 < lambda | p-1",
        )
    if v == "corollary":
        _require(
            I in (threshold_set(p), legendre_set(p)),
            "corollary covers the threshold and Legendre index sets only",
        )
    if v == "fp_upper_legendre":
        _require(I == legendre_set(p), "requires I = quadratic non-residues mod p")


def theorem_sequence(spec: TheoremSpec) -> PeriodicSequence:
    """The sequence a theorem instance speaks about, over its field."""
    pr = spec.params
    v = spec.variant
    if v == "complement":
        seq = gen_complement(pr, spec.index_set)
    elif v == "corollary":
        if spec.index_set == threshold_set(pr.p):
            seq = gen_threshold(pr)
        else:
            seq = gen_legendre(pr)
    elif v == "fp_upper_legendre":
        seq = gen_legendre(pr)
    else:
        seq = gen_indicator(pr, spec.index_set)
    return seq.over(spec.modulus)


def _indicator_weight(pr: PrimeParams, n: int) -> int:
    return pr.p * n if pr.w == 1 else (pr.p - 1) * n


def legendre_bound(pr: PrimeParams) -> tuple[int, int]:
    """(bound on LC_k over F_p of the Legendre sequence, least k it holds from)."""
    p, w = pr.p, pr.w
    if w == 1:
        return (p - 1) * p // 2 + 1, p
    if w % 2:
        return (p - 1) * p // 2 + p, 2 * p - 1
    return (p - 1) * p // 2 + (p - 1) // 2 + 1, 2 * p - 1


def klc_theorem(spec: TheoremSpec, k: int) -> SpectrumPoint:
    check_applicable(spec)
    if k < 0:
        raise ParameterError("k must be nonnegative")
    pr = spec.params
    p, n = pr.p, len(spec.index_set)
    T = p * p
    v = spec.variant
    odd = n % 2 == 1

    def exact(val):
        return SpectrumPoint(k, val, CLOSED_FORM)

    if v == "thm1":
        W = (p - 1) * n
        if k >= W:
            return exact(0)
        if not odd:
            return exact(T - p)
        if k == 0:
            return exact(T - 1)
        return exact(T - p + 1 if k < p - 1 else T - p)

    if v == "thm2":
        W = p * n
        if k >= W:
            return exact(0)
        if not odd:
            return exact(T - p)
        return exact(T - p + 1 if k < p else T - p)

    if v == "thm3_bound":
        if k >= _indicator_weight(pr, n):
            return exact(0)
        return SpectrumPoint(k, pr.lam * p, LOWER_BOUND)

    if v == "complement":
        W = (p - 1) * n
        if k > W:
            return exact(0)
        if k == W:
            return exact(p)
        if odd:
            return exact(T - p + 1 if k < p - 1 else T - p)
        return exact(T if k == 0 else T - p)

    if v == "corollary":
        W = (p - 1) ** 2 // 2
        if k >= W:
            return exact(0)
        if p % 4 == 3:
            if k == 0:
                return exact(T - 1)
            return exact(T - p + 1 if k < p - 1 else T - p)
        return exact(T - p)

    if v == "thm4":
        if k < p:
            return exact(T - p + 1)
        return SpectrumPoint(k, T - p, UPPER_BOUND)

    if v == "thm5":
        if k == 0:
            return exact(T)
        if k < p - 1:
            return exact(T - p + 1)
        return SpectrumPoint(k, T - p, UPPER_BOUND)

    if v == "fp_upper_legendre":
        bound, k_from = legendre_bound(pr)
        _require(k >= k_from, f"the Legendre upper bound holds only for k >= {k_from}")
        return SpectrumPoint(k, bound, UPPER_BOUND)

    # fp_lower
    if k >= _indicator_weight(pr, n):
        return exact(0)
    return SpectrumPoint(k, p + 1, LOWER_BOUND)


# -- explicit witnesses -----------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """An explicit error pattern and the LC it achieves."""

    name: str
    changes: int
    max_changes: int
    lc: int
    bound: int
    multiplicity: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.changes <= self.max_changes and self.lc <= self.bound


def _ones_poly(p: int, start: int) -> FieldPoly:
    return FieldPoly(p, (0,) * start + (1,) * (p - start))


def thm4_error_poly(pr: PrimeParams, I: Iterable[int]) -> FieldPoly:
    """-alpha (X - 1)^(p-1), alpha = (H / (X - 1)^(p-1)) at X = 1."""
    p = pr.p
    H = generating_poly(gen_indicator(pr, I).over(p))
    quot, rem = divmod(H, FieldPoly(p, (p - 1, 1)) ** (p - 1))
    if not rem.is_zero():
        raise PreconditionError("(X - 1)^(p-1) does not divide the generating polynomial")
    alpha = quot(1)
    return _ones_poly(p, 0) * (-alpha)


def thm5_error_poly(pr: PrimeParams, I: Iterable[int]) -> FieldPoly:
    """-|I| (X + X^2 + ... + X^(p-1))."""
    n = len(frozenset(I))
    return _ones_poly(pr.p, 1) * (-n)


def _poly_witness(
    name: str, seq: PeriodicSequence, e: FieldPoly, max_changes: int, bound: int
) -> Witness:
    T, q = seq.period, seq.modulus
    sym = list(seq.symbols)
    for i, c in enumerate(e.coeffs):
        sym[i] = (sym[i] + c) % q
    changed = PeriodicSequence(q, sym)
    H = generating_poly(changed)
    mult = T if H.is_zero() else multiplicity_at_one(H)
    changes = sum(1 for c in e.coeffs if c)
    return Witness(name, changes, max_changes, lc_gcd(changed), bound, mult)


def witnesses(spec: TheoremSpec) -> list[Witness]:
    """Explicit constructions backing the upper bounds of a theorem."""
    pr = spec.params
    p, T = pr.p, pr.p * pr.p
    seq = theorem_sequence(spec)
    if spec.variant == "thm4":
        return [_poly_witness("thm4_error_poly", seq, thm4_error_poly(pr, spec.index_set), p, T - p)]
    if spec.variant == "thm5":
        return [_poly_witness("thm5_error_poly", seq, thm5_error_poly(pr, spec.index_set), p - 1, T - p)]
    if spec.variant == "fp_upper_legendre":
        bound, k_from = legendre_bound(pr)
        out = []
        readings = ("classes", "origin") if pr.w == 1 else ("classes",)
        for reading in readings:
            pos = modified_legendre_positions(pr, reading)
            mod = gen_modified_legendre(pr, pos)
            changes = sum(1 for a, b in zip(seq.symbols, mod.symbols) if a != b)
            out.append(Witness(f"modified_legendre[{reading}]", changes, k_from, lc_gcd(mod), bound))
        return out
    return []


# -- verification -------------------------------------------------------------

MATCH = "match"
MISMATCH = "mismatch"
BOUND_OK = "bound_ok"
BOUND_VIOLATED = "bound_violated"
NO_CLAIM = "no_claim"


@dataclass(frozen=True)
class ReportRow:
    k: int
    claimed: Optional[int]
    method: Optional[str]
    exhaustive: int
    status: str


@dataclass
class VerificationReport:
    variant: str
    p: int
    w: int
    index_set: list[int]
    field: str
    rows: list[ReportRow]
    witnesses: list[Witness] = field(default_factory=list)
    truncated_at: Optional[int] = None

    @property
    def ok(self) -> bool:
        bad = (MISMATCH, BOUND_VIOLATED)
        # a witness only has to hold if its bound is what the theorem claims;
        # alternative readings are informational
        wit_ok = all(w.ok for w in self.witnesses if not w.name.endswith("[origin]"))
        return wit_ok and not any(r.status in bad for r in self.rows)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        for wd, w in zip(d["witnesses"], self.witnesses):
            wd["ok"] = w.ok
        return d


def _compare(claim: SpectrumPoint, value: int) -> str:
    if claim.method == CLOSED_FORM:
        return MATCH if value == claim.lc else MISMATCH
    if claim.method == LOWER_BOUND:
        return BOUND_OK if value >= claim.lc else BOUND_VIOLATED
    return BOUND_OK if value <= claim.lc else BOUND_VIOLATED


def default_k_max(spec: TheoremSpec, budget: Optional[int] = None) -> int:
    """The k range a verification covers when none is given.

    For the F_p bounds without an exact range this is the largest k the
    budget affords (capped at the weight, or at the first k the Legendre
    bound speaks about).
    """
    p = spec.params.p
    if spec.variant == "thm4":
        return p
    if spec.variant == "thm5":
        return p - 1
    seq = theorem_sequence(spec)
    if spec.variant not in ("fp_upper_legendre", "fp_lower"):
        return seq.weight
    cap = seq.weight
    if spec.variant == "fp_upper_legendre":
        cap = min(cap, legendre_bound(spec.params)[1])
    budget = default_budget() if budget is None else budget
    k = 0
    while k < cap and pattern_count(seq.period, seq.modulus, k + 1) <= budget:
        k += 1
    return k


def verify_theorem(
    spec: TheoremSpec,
    k_max: Optional[int] = None,
    budget: Optional[int] = None,
    engine: str = "auto",
    workers: int = 1,
) -> VerificationReport:
    check_applicable(spec)
    seq = theorem_sequence(spec)
    if k_max is None:
        k_max = default_k_max(spec, budget)
    spec_pts = spectrum(seq, k_max, budget, engine, workers)
    rows = []
    for pt in spec_pts:
        try:
            claim = klc_theorem(spec, pt.k)
        except PreconditionError:
            rows.append(ReportRow(pt.k, None, None, pt.lc, NO_CLAIM))
            continue
        rows.append(ReportRow(pt.k, claim.lc, claim.method, pt.lc, _compare(claim, pt.lc)))
    pr = spec.params
    return VerificationReport(
        spec.variant,
        pr.p,
        pr.w,
        sorted(spec.index_set),
        spec.field,
        rows,
        witnesses(spec),
        spec_pts.truncated_at,
    )
