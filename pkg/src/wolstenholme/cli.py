"""Command-line interface: ``wolstenholme compute|search|verify``.

Exit codes: 0 success, 1 verification failure or confirmation mismatch,
2 usage error, 3 corrupt checkpoint.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import verify as verify_mod
from .congruences import (
    bernoulli_mod_p,
    fermat_quotient,
    ij_square_sums,
    m_value,
    s_sums,
    t_sums,
    w_value,
)
from .errors import ConsistencyError, CorruptCheckpoint, UnknownStatement
from .search import ScanSpec, default_workers, run_scan

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CORRUPT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _rate(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError("sample rate must lie in [0, 1]")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=_positive, default=None, help="worker processes (default: $WOLSTENHOLME_WORKERS or 1)")
    common.add_argument("--checkpoint", help="checkpoint file for long scans")
    common.add_argument("--resume", action="store_true", help="continue from --checkpoint")
    common.add_argument("--format", choices=("json-lines", "csv", "human"), default="human")
    common.add_argument("--seed", type=int, default=0, help="seed for confirmation sampling")
    common.add_argument("--sample-rate", type=_rate, default=0.01, help="fraction of rejected candidates re-tested directly")
    common.add_argument("--strict", action="store_true", help="disable the twin and Sophie Germain skip rules")
    common.add_argument("--stop-after", type=int, default=None, help="process at most this many work units")
    common.add_argument("--include-prime-powers", action="store_true", help="scan prime powers too (shape any)")
    common.add_argument("--quiet", action="store_true", help="no progress lines on stderr")

    parser = argparse.ArgumentParser(prog="wolstenholme", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="evaluate a single quantity")
    csub = comp.add_subparsers(dest="what", required=True)
    for name in ("w", "m"):
        p = csub.add_parser(name, parents=[common], help=f"{name.upper()}_n mod n^k")
        p.add_argument("--n", type=_positive, required=True)
        p.add_argument("--mod-exp", type=int, choices=(1, 2, 3, 4), default=1)
    p = csub.add_parser("bernoulli", parents=[common], help="B_m mod p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="index (default p-3)")
    p = csub.add_parser("fermat-quotient", parents=[common], help="(2^(p-1)-1)/p mod p^e")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--prec", type=int, choices=(1, 2), default=1)
    p = csub.add_parser("sums", parents=[common], help="the S and T sums for a prime")
    p.add_argument("--p", type=int, required=True)

    srch = sub.add_parser("search", help="range searches")
    ssub = srch.add_subparsers(dest="what", required=True)
    for name in ("wprimes", "mprimes"):
        p = ssub.add_parser(name, parents=[common], help=f"primes with {name[0].upper()}_p = 1 mod p^4")
        p.add_argument("--lo", type=int, required=True)
        p.add_argument("--hi", type=int, required=True)
    p = ssub.add_parser("pseudoprimes", parents=[common], help="odd composite pseudoprimes")
    p.add_argument("--family", type=str.upper, choices=("W", "M"), default="W")
    p.add_argument("--order", type=int, choices=(1, 2, 3), default=None, help="default 1; shape square is order 2")
    p.add_argument("--shape", choices=("semiprime", "square", "any"), default="semiprime")
    p.add_argument("--bound", type=int, required=True, help="bound on n (on p for shape square)")

    ver = sub.add_parser("verify", parents=[common], help="check statements empirically")
    ver.add_argument("--statement", default="all", help="registry key or 'all'")
    ver.add_argument("--profile", choices=sorted(verify_mod.PROFILES), default="quick")
    return parser


# -- output -------------------------------------------------------------------------


def _emit_rows(rows: list[dict], fmt: str, out, human) -> None:
    if fmt == "json-lines":
        for row in rows:
            out.write(json.dumps(row, separators=(",", ":")) + "\n")
    elif fmt == "csv":
        if rows:
            writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in row.items()})
    else:
        for row in rows:
            out.write(human(row) + "\n")


def _power(base: int, e: int) -> str:
    return str(base) if e == 1 else f"{base}^{e}"


# -- commands -------------------------------------------------------------------------


def _compute(args, out) -> int:
    if args.what in ("w", "m"):
        if args.n % 2 == 0:
            raise UsageError("--n must be odd")
        fn = w_value if args.what == "w" else m_value
        r = fn(args.n, args.mod_exp)
        sym = args.what.upper()
        row = {"quantity": sym, "n": args.n, "mod_exp": args.mod_exp, "value": str(r.value), "modulus": str(r.modulus)}
        text = f"{sym}_{args.n} ≡ {r.value} (mod {_power(args.n, args.mod_exp)})"
    elif args.what == "bernoulli":
        m = args.p - 3 if args.m is None else args.m
        b = bernoulli_mod_p(args.p, m)
        row = {"quantity": "B", "p": args.p, "m": m, "value": str(b.value.value), "modulus": str(args.p)}
        text = f"B_{m} ≡ {b.value.value} (mod {args.p})"
    elif args.what == "fermat-quotient":
        q = fermat_quotient(args.p, args.prec)
        row = {"quantity": "q", "p": args.p, "prec": args.prec, "value": str(q.value.value), "modulus": str(q.value.modulus)}
        text = f"q_{args.p} ≡ {q.value.value} (mod {_power(args.p, args.prec)})"
    else:
        return _compute_sums(args, out)
    _emit_rows([row], args.format, out, lambda _: text)
    return EXIT_OK


def _compute_sums(args, out) -> int:
    p = args.p
    s, t = s_sums(p), t_sums(p)
    a, b = ij_square_sums(p)
    rows = []
    for name, rec in (("S", s), ("T", t)):
        for letter in "abcde":
            r = getattr(rec, f"{name.lower()}_{letter}")
            rows.append({"quantity": f"{name}_{letter}", "p": p, "value": str(r.value), "modulus": str(r.modulus)})
    rows.append({"quantity": "sum 1/(i j^2)", "p": p, "value": str(a.value), "modulus": str(p)})
    rows.append({"quantity": "sum 1/(i^2 j)", "p": p, "value": str(b.value), "modulus": str(p)})

    def human(row):
        mod = int(row["modulus"])
        e = 1
        while p**e < mod:
            e += 1
        return f"{row['quantity']} ≡ {row['value']} (mod {_power(p, e)})"

    _emit_rows(rows, args.format, out, human)
    return EXIT_OK


def _scan_spec(args) -> ScanSpec:
    opts = dict(seed=args.seed, sample_rate=args.sample_rate, strict=args.strict)
    if args.what in ("wprimes", "mprimes"):
        if not 5 <= args.lo < args.hi:
            raise UsageError("need 5 <= --lo < --hi")
        fam = "W" if args.what == "wprimes" else "M"
        return ScanSpec(args.what, fam, 4, args.lo, args.hi, **opts)
    if args.shape == "square":
        if args.bound <= 5:
            raise UsageError("--bound must exceed 5 for shape square")
        if args.order not in (None, 2):
            raise UsageError("shape square tests order 2 (n = p^2 modulo p^4)")
        return ScanSpec("square", args.family, 2, 5, args.bound, **opts)
    if args.shape == "semiprime":
        if args.bound < 15:
            raise UsageError("--bound must be at least 15")
        return ScanSpec("semiprime", args.family, args.order or 1, 0, args.bound, **opts)
    if args.bound < 9:
        raise UsageError("--bound must be at least 9")
    if args.order not in (None, 1):
        raise UsageError("shape any supports order 1 only")
    return ScanSpec("general", args.family, 1, 0, args.bound, include_prime_powers=args.include_prime_powers, **opts)


def _search(args, out, err) -> int:
    spec = _scan_spec(args)
    if args.resume and not args.checkpoint:
        raise UsageError("--resume needs --checkpoint")
    workers = args.workers or default_workers()
    result = run_scan(
        spec,
        workers=workers,
        checkpoint=args.checkpoint,
        resume=args.resume,
        stop_after=args.stop_after,
        progress=None if args.quiet else err,
    )
    if not result.complete:
        print(
            f"stopped at unit {result.next_unit} of {result.total_units}; rerun with --resume to finish",
            file=err,
        )
        return EXIT_OK
    rows = [h.to_record() for h in result.hits]
    by_n = {h.n: h for h in result.hits}
    _emit_rows(rows, args.format, out, lambda row: by_n[row["n"]].human())
    return EXIT_OK


def _verify(args, out, err) -> int:
    ids = sorted(verify_mod.REGISTRY) if args.statement == "all" else [args.statement]
    for i in ids:
        verify_mod.get(i)
    verdicts = verify_mod.run_all(args.profile, ids, progress=None if args.quiet else err)
    if args.format == "human":
        out.write(verify_mod.summary_table(verdicts) + "\n")
    else:
        rows = [v.to_record() for v in verdicts]
        if args.format == "csv":
            rows = [{k: r[k] for k in ("id", "status", "checked", "runtime", "range", "note")} for r in rows]
        _emit_rows(rows, args.format, out, str)
    return verify_mod.exit_code(verdicts)


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "compute":
            return _compute(args, out)
        if args.command == "search":
            return _search(args, out, err)
        return _verify(args, out, err)
    except CorruptCheckpoint as exc:
        print(f"error: corrupt checkpoint: {exc}", file=err)
        return EXIT_CORRUPT
    except ConsistencyError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_FAIL
    except UnknownStatement as exc:
        print(f"error: unknown statement {exc}", file=err)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
