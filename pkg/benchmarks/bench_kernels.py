"""Compare the compiled and pure-Python exhaustive-search kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import time

from pqseq import kernels
from pqseq.quotients import PrimeParams
from pqseq.seqgen import gen_indicator

CASES = [
    # (label, p, w, I, field, k)
    ("F_2 structured p=5 k=5", 5, 2, {1, 2}, 2, 5),
    ("F_2 gcd p=7 k=3", 7, 2, {3}, 2, 3),
    ("F_5 Hasse p=5 k=3", 5, 1, {1, 2}, 5, 3),
]


def run_case(be, p, w, I, q, k):
    seq = gen_indicator(PrimeParams(p, w), I).over(q)
    T = seq.period
    if q == 2:
        struct = p if p == 5 else 0
        return be.f2_min_lc(seq.to_int(), T, k, 0, T, struct)
    return be.fp_min_lc(seq.symbols, q, k, 0, T, kernels.binom_table(T, q))


def timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", kernels.python_backend)]
    if kernels.compiled_backend is not None:
        backends.append(("compiled", kernels.compiled_backend))
    else:
        print("compiled extension not available; timing the Python kernels only")
    print(f"{'case':<26}{'backend':<10}{'result':>7}{'seconds':>10}{'speedup':>9}")
    for label, p, w, I, q, k in CASES:
        base = None
        for name, be in backends:
            val, dt = timed(lambda: run_case(be, p, w, I, q, k), args.repeat)
            base = base or dt
            print(f"{label:<26}{name:<10}{val:>7}{dt:>10.4f}{base / dt:>8.1f}x")


if __name__ == "__main__":
    main()
