"""Command line entry point.

    pqseq generate --p 5 --w 2 --set legendre
    pqseq lc       --p 5 --w 2 --set 1,2 --field fp
    pqseq klc      --p 3 --w 2 --set 2 --k 1
    pqseq spectrum --p 3 --w 1 --set 1 --k-max 3 --format csv
    pqseq verify   --theorem thm1 --p 5 --w 2 --set 1

Exit status: 0 success, 1 verification mismatch, 2 bad configuration,
3 exhaustive-search budget exhausted.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceeded, ParameterError, PQSeqError
from .kerror import (
    VARIANTS,
    TheoremSpec,
    default_budget,
    klc_exhaustive,
    spectrum,
    verify_theorem,
)
from .lincomp import lc_gcd
from .quotients import PrimeParams
from .seqgen import (
    PeriodicSequence,
    gen_complement,
    gen_indicator,
    legendre_set,
    threshold_set,
)

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    p: int
    w: int
    field: str = "f2"
    index_set: str = ""
    complement: bool = False
    k: Optional[int] = None
    k_max: Optional[int] = None
    budget: Optional[int] = None
    fmt: Optional[str] = None
    output: Optional[str] = None
    theorem: Optional[str] = None
    engine: str = "auto"
    workers: int = 1


def expand_index_set(text: str, p: int) -> tuple[frozenset[int], bool]:
    """Parse ``--set``; returns the indices and whether it names a complement."""
    text = text.strip()
    complement = False
    if text.startswith("complement:"):
        complement, text = True, text.split(":", 1)[1]
    if text == "threshold":
        out = threshold_set(p)
    elif text == "legendre":
        out = legendre_set(p)
    else:
        try:
            out = frozenset(int(t) for t in text.split(",") if t.strip())
        except ValueError:
            raise ParameterError(f"cannot parse index set {text!r}") from None
    if not out:
        raise ParameterError("index set expands to the empty set")
    return out, complement


def build_sequence(cfg: RunConfig) -> PeriodicSequence:
    params = PrimeParams(cfg.p, cfg.w)
    I, named_complement = expand_index_set(cfg.index_set, cfg.p)
    if cfg.complement or named_complement:
        seq = gen_complement(params, I)
    else:
        seq = gen_indicator(params, I)
    if cfg.field == "fp":
        return seq.over(cfg.p)
    if cfg.field != "f2":
        raise ParameterError(f"field must be f2 or fp, got {cfg.field!r}")
    return seq


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(header)
    wr.writerows(rows)
    return buf.getvalue()


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(cfg: RunConfig) -> int:
    budget = default_budget() if cfg.budget is None else cfg.budget

    if cfg.command == "verify":
        if cfg.theorem not in VARIANTS:
            raise ParameterError(f"--theorem must be one of {', '.join(VARIANTS)}")
        default = {"corollary": "threshold", "fp_upper_legendre": "legendre"}
        I, _ = expand_index_set(cfg.index_set or default.get(cfg.theorem, ""), cfg.p)
        spec = TheoremSpec(PrimeParams(cfg.p, cfg.w), I, cfg.theorem)
        report = verify_theorem(spec, cfg.k_max, budget, cfg.engine, cfg.workers)
        if (cfg.fmt or "json") == "csv":
            rows = [(r.k, r.claimed if r.claimed is not None else "", r.method or "",
                     r.exhaustive, r.status) for r in report.rows]
            _emit(_csv(["k", "claimed", "method", "exhaustive", "status"], rows), cfg)
        else:
            _emit(_dump_json(report.to_dict()), cfg)
        if not report.ok:
            print("verification FAILED", file=sys.stderr)
            return EXIT_MISMATCH
        if report.truncated_at is not None:
            print(f"budget exhausted at k={report.truncated_at}", file=sys.stderr)
            return EXIT_BUDGET
        return EXIT_OK

    seq = build_sequence(cfg)
    fmt = cfg.fmt

    if cfg.command == "generate":
        if fmt == "json":
            _emit(_dump_json({"p": cfg.p, "w": cfg.w, "field": cfg.field, "label": seq.label,
                              "period": seq.period, "weight": seq.weight,
                              "symbols": list(seq.symbols)}), cfg)
        else:
            _emit(_csv(["u", "symbol"], enumerate(seq.symbols)), cfg)
        return EXIT_OK

    if cfg.command == "lc":
        lc = lc_gcd(seq)
        _emit(_dump_json({"lc": lc}) if fmt == "json" else f"{lc}\n", cfg)
        return EXIT_OK

    if cfg.command == "klc":
        if cfg.k is None:
            raise ParameterError("klc needs --k")
        lc = klc_exhaustive(seq, cfg.k, budget, cfg.engine, cfg.workers)
        _emit(_dump_json({"k": cfg.k, "lc": lc}) if fmt == "json" else f"{lc}\n", cfg)
        return EXIT_OK

    if cfg.command == "spectrum":
        spec = spectrum(seq, cfg.k_max, budget, cfg.engine, cfg.workers)
        if fmt == "json":
            _emit(_dump_json({
                "points": [{"k": pt.k, "lc": pt.lc, "method": pt.method} for pt in spec],
                "truncated_at": spec.truncated_at,
            }), cfg)
        else:
            _emit(_csv(["k", "lc", "method"], [(pt.k, pt.lc, pt.method) for pt in spec]), cfg)
        if spec.truncated_at is not None:
            print(f"budget exhausted at k={spec.truncated_at}", file=sys.stderr)
            return EXIT_BUDGET
        return EXIT_OK

    raise ParameterError(f"unknown command {cfg.command!r}")


def run(cfg: RunConfig) -> int:
    try:
        return _run(cfg)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PQSeqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pqseq", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt_choices):
        sp.add_argument("--p", type=int, required=True, help="odd prime")
        sp.add_argument("--w", type=int, default=1, help="exponent, 1 <= w <= p-1")
        sp.add_argument("--set", dest="index_set", default="",
                        help="comma list, 'threshold', 'legendre' or 'complement:<list>'")
        sp.add_argument("--format", dest="fmt", choices=fmt_choices)
        sp.add_argument("--output", "-o")
        sp.add_argument("--budget", type=int, help="max LC evaluations (env PQSEQ_BUDGET)")
        sp.add_argument("--engine", choices=("auto", "structured", "gcd"), default="auto")
        sp.add_argument("--workers", type=int, default=1)

    for name in ("generate", "lc", "klc", "spectrum"):
        sp = sub.add_parser(name)
        common(sp, ("csv", "json") if name in ("generate", "spectrum") else ("text", "json"))
        sp.add_argument("--field", choices=("f2", "fp"), default="f2")
        sp.add_argument("--complement", action="store_true",
                        help="build the complement sequence over the index set")
        if name == "klc":
            sp.add_argument("--k", type=int, required=True)
        if name == "spectrum":
            sp.add_argument("--k-max", type=int)

    sp = sub.add_parser("verify")
    common(sp, ("json", "csv"))
    sp.add_argument("--theorem", required=True, choices=VARIANTS)
    sp.add_argument("--k-max", type=int)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        p=args.p,
        w=args.w,
        field=getattr(args, "field", "f2"),
        index_set=args.index_set,
        complement=getattr(args, "complement", False),
        k=getattr(args, "k", None),
        k_max=getattr(args, "k_max", None),
        budget=args.budget,
        fmt=args.fmt,
        output=args.output,
        theorem=getattr(args, "theorem", None),
        engine=args.engine,
        workers=args.workers,
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
