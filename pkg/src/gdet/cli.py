"""Command-line front end.

Exit status: 0 on success, 1 when a claimed or cross-checked value fails
recomputation, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from .arith import VerificationError
from .detengine import det_exact, det_factored, det_matrix_oracle
from .groupring import Family, GroupSpec
from .laws import SETS, classify, lambda_formula, necessary_conditions
from .parse import ParseError, parse_element
from .report import (
    SCHEMA,
    det_record,
    emit_json,
    factor_record,
    lambda_record,
    render_text,
    search_record,
    spectrum_csv,
    verdict_record,
    witness_record,
)
from .search import MODES, SearchSpec, search_box, thread_count, verify_lambda
from .witnesses import (
    BASIC_KINDS,
    FRONTIER_KINDS,
    SHARPNESS_CASES,
    witness_basic,
    witness_coprime,
    witness_Q4p_cube,
    witness_Q4p_frontier,
    witness_Q4p_p_powers,
    witness_Q4p_two_powers,
    witness_divisibility_sharpness,
)

WITNESS_KINDS = BASIC_KINDS + ("coprime", "two_powers", "cube", "p_powers") + FRONTIER_KINDS + SHARPNESS_CASES


class UsageError(Exception):
    pass


def _group(args) -> GroupSpec:
    if args.group is None or args.n is None:
        raise UsageError("--group and --n are required")
    return GroupSpec(Family(args.group), args.n)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required here")


def _command(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "format")}


def cmd_det(args):
    a = parse_element(_group(args), args.element)
    value = det_exact(a)
    oracle = None
    if args.check:
        oracle = {"bareiss": det_matrix_oracle(a, "bareiss"), "crt": det_matrix_oracle(a, "crt")}
    rec = det_record(a, value, oracle, _command(args))
    return rec, 1 if oracle and not rec["agree"] else 0


def cmd_factor(args):
    a = parse_element(_group(args), args.element)
    fd = det_factored(a)
    status = 0
    if args.check and fd.total != det_matrix_oracle(a):
        status = 1
    return factor_record(a, fd, _command(args)), status


def _build_witness(args):
    kind = args.kind
    if kind in BASIC_KINDS:
        return witness_basic(_group(args), kind, checked=False)
    if kind == "coprime":
        _need(args, "n", "m")
        return witness_coprime(args.n, args.m, checked=False)
    if kind == "two_powers":
        _need(args, "p", "k")
        return witness_Q4p_two_powers(args.p, args.k, checked=False)
    if kind == "cube":
        _need(args, "p", "m")
        return witness_Q4p_cube(args.p, args.m, checked=False)
    if kind == "p_powers":
        _need(args, "p", "ell")
        return witness_Q4p_p_powers(args.p, args.ell, args.sign, checked=False)
    if kind in FRONTIER_KINDS:
        _need(args, "p")
        return witness_Q4p_frontier(args.p, kind, t=args.t, mu=args.mu, A=args.A, B=args.B, checked=False)
    return witness_divisibility_sharpness(
        _group(args), kind, p=args.p, m=1 if args.m is None else args.m, checked=False
    )


def cmd_witness(args):
    w = _build_witness(args)
    try:
        got = w.verify()
        status = 0
    except VerificationError:
        got, status = det_exact(w.element), 1
    return witness_record(w, got, _command(args)), status


def cmd_classify(args):
    if args.set is not None:
        v = classify(args.set, args.value, args.p)
        ctx = {"set": args.set, "p": args.p}
    else:
        G = _group(args)
        v = necessary_conditions(G, args.value)
        ctx = {"group": G}
    return verdict_record(v, args.value, ctx, _command(args)), 0


def cmd_lambda(args):
    G = _group(args)
    if G.family is Family.DICYCLIC and G.n % 2 and G.n >= 3:
        rep = verify_lambda(G.n)
    else:
        rep = lambda_formula(G)
    return lambda_record(rep, _command(args)), 0


def cmd_search(args):
    if args.mode == "frontier":
        _need(args, "p")
        G = GroupSpec.dicyclic(args.p)
    else:
        G = _group(args)
    spec = SearchSpec(
        G,
        args.bound,
        mode=args.mode,
        value_cap=args.cap,
        budget=args.budget,
        coeff_min=args.min,
        sampling=args.sampling,
        seed=args.seed,
        frontier_p=args.p if args.mode == "frontier" else None,
        screen=not args.no_screen,
    )
    rep = search_box(spec, args.threads or thread_count())
    return (search_record(rep, _command(args)), rep), 1 if rep.violations else 0


def cmd_selftest(args):
    from .selftest import run_all

    results = run_all(args.scale)
    rec = {
        "schema": SCHEMA,
        "kind": "selftest",
        "criteria": [
            {"id": str(r.id), "name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
    }
    return rec, 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gdet", description="Integer group determinants of Z_n, D_2n and Q_4n.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, group=True):
        if group:
            p.add_argument("--group", choices=[f.value for f in Family])
            p.add_argument("--n", type=int)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("det", help="determinant of an element")
    common(p)
    p.add_argument("--element", required=True, help='e.g. "x^2+1" or "1,0,1;0,0,0"')
    p.add_argument("--check", action="store_true", help="cross-check against the group matrix")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("factor", help="per-divisor factors of the determinant")
    common(p)
    p.add_argument("--element", required=True)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("witness", help="build and verify a named construction")
    common(p)
    p.add_argument("kind", choices=WITNESS_KINDS)
    for name in ("p", "m", "k", "ell", "A", "B"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--sign", type=int, default=1, choices=(1, -1))
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--mu", type=int, default=1)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("classify", help="membership verdict for a value")
    common(p)
    p.add_argument("--set", choices=SETS)
    p.add_argument("--p", type=int)
    p.add_argument("--value", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("lambda", help="smallest non-trivial determinant")
    common(p)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("search", help="enumerate a coefficient box")
    common(p)
    p.add_argument("--bound", type=int, default=1, help="coefficients up to this value")
    p.add_argument("--min", type=int, help="lowest coefficient (default -bound)")
    p.add_argument("--mode", choices=MODES, default="min_nontrivial")
    p.add_argument("--cap", type=int, help="drop values above this magnitude")
    p.add_argument("--budget", type=int, help="maximum number of elements")
    p.add_argument("--sampling", choices=("lex", "random"), default="lex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=int, help="prime for frontier mode")
    p.add_argument("--threads", type=int, help="defaults to GDET_THREADS or the CPU count")
    p.add_argument("--no-screen", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    common(p, group=False)
    p.add_argument("--scale", type=float, default=1.0, help="shrink random sample sizes")
    p.set_defaults(func=cmd_selftest)
    return ap


def _emit(rec, fmt: str) -> bytes:
    report = None
    if isinstance(rec, tuple):
        rec, report = rec
    if fmt == "json":
        return emit_json(rec)
    if fmt == "csv":
        if report is None:
            raise UsageError("csv output is only available for search spectra")
        return spectrum_csv(report)
    return render_text(rec)


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        rec, status = args.func(args)
        out = _emit(rec, args.format)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"gdet: error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"gdet: verification failed: {exc}", file=sys.stderr)
        return 1
    sys.stdout.buffer.write(out)
    sys.stdout.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
