"""Command-line front end: ``qmads rmat ...`` and ``qmads verify ...``.

Exit status: 0 when every item passes, 1 when an identity fails, 2 on
usage, input or resource errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import algebras, braidings, charpoly, dsreduction, yangians
from .errors import QmadsError, ResourceError
from .report import ReportItem, VerificationReport
from .scalars import format_scalar, parse_scalar
from .strategies import run_with_strategy

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
PASS, FAIL = "Pass", "Fail"

VERIFY_CONSTANT = ("ch", "centrality", "psum-commute", "simplifications", "ds")
VERIFY_YANGIAN = ("ch-yangian", "ds-yangian")


class UsageError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--builtin", nargs=2, metavar=("NAME", "N"),
                   help=f"built-in braiding ({', '.join(sorted(braidings.BUILTINS))}) of size N")
    g.add_argument("--rmatrix", metavar="FILE", help="R-matrix file ('rmatrix N=<n>' then 'i j k l value' lines)")
    p.add_argument("--q", dest="claimed_q", metavar="VALUE",
                   help="Hecke parameter for a file R-matrix with rational entries")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--report", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    p.add_argument("--no-timing", action="store_true", help="omit timings from JSON reports")


def _add_strategy(p: argparse.ArgumentParser) -> None:
    p.add_argument("--strategy", choices=("auto", "exact", "random"), default="auto",
                   help="auto: exact for N <= 2, random specialization otherwise")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--v", default="symbolic", help="'symbolic' or a comma list of rationals")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qmads", description="Exact checks for quantum matrix algebras.")
    sub = ap.add_subparsers(dest="group", required=True)

    rmat = sub.add_parser("rmat", help="inspect or validate a braiding")
    rsub = rmat.add_subparsers(dest="command", required=True)
    for name, hlp in (("check", "braid relation, symmetry type, skew-inverse, bi-rank"),
                      ("skew-inverse", "print the skew-inverse and the R-trace matrix"),
                      ("info", "summary of a validated braiding")):
        p = rsub.add_parser(name, help=hlp)
        _add_source(p)
        _add_output(p)

    ver = sub.add_parser("verify", help="run a verification suite")
    vsub = ver.add_subparsers(dest="command", required=True)
    for name in VERIFY_CONSTANT:
        p = vsub.add_parser(name)
        _add_source(p, required=False)
        p.add_argument("--algebra", default="re", help="re, rtt, mre (modified RE) or ugl")
        p.add_argument("--n", type=int, help="N for ugl without --builtin")
        p.add_argument("--k", type=int, action="append", help="level(s) for centrality (default 1..m)")
        p.add_argument("--kmax", type=int, default=3, help="largest k for power sums and simplifications")
        _add_strategy(p)
        _add_output(p)
    for name in VERIFY_YANGIAN:
        p = vsub.add_parser(name)
        _add_source(p)
        p.add_argument("--kind", choices=("rational", "hecke"), help="g(u,v) flavor (inferred from the braiding)")
        p.add_argument("--yangian", choices=(yangians.BRAIDED, yangians.RTT_TYPE), default=yangians.BRAIDED)
        p.add_argument("--order", type=int, default=3, help="largest u-order checked")
        p.add_argument("--trunc", type=int, default=4, help="series truncation D")
        _add_strategy(p)
        _add_output(p)
    return ap


# --- helpers ------------------------------------------------------------------

def _load_braiding(args) -> braidings.Braiding:
    if args.builtin:
        name, n = args.builtin
        try:
            n = int(n)
        except ValueError as exc:
            raise UsageError(f"N must be an integer, got {n!r}") from exc
        try:
            return braidings.builtin(name, n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    R = braidings.load_rmatrix(args.rmatrix)
    q = parse_scalar(args.claimed_q) if getattr(args, "claimed_q", None) else None
    return braidings.validate(R, q, name=Path(args.rmatrix).name)


def _strategy(args, n: int) -> str:
    if args.strategy == "auto":
        return "exact" if n <= 2 else "random"
    return args.strategy


def _v_mode(text: str):
    if text == "symbolic":
        return text
    try:
        return [parse_scalar(x) for x in text.split(",")]
    except QmadsError as exc:
        raise UsageError(f"bad --v value {text!r}") from exc


def _emit(rep: VerificationReport, args) -> int:
    text = rep.to_json(timing=not args.no_timing) if args.report == "json" else rep.to_text()
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
        print(f"{rep.identity}: {rep.status} ({sum(i.ok for i in rep.items)}/{len(rep.items)}) -> {args.out}")
    else:
        print(text)
    return EXIT_PASS if rep.passed else EXIT_FAIL


def _check_item(item_id: str, ok: bool, detail: str = "", elapsed: float = 0.0) -> ReportItem:
    return ReportItem(item_id, PASS if ok else FAIL, "exact", None, None, elapsed, (PASS,), detail=detail)


# --- rmat ---------------------------------------------------------------------

def cmd_rmat(args) -> int:
    t0 = time.perf_counter()
    if args.command == "check":
        return _rmat_check(args)
    b = _load_braiding(args)
    rep = VerificationReport(f"rmat {args.command}", "braiding data", b.describe(), "-")
    if args.command == "skew-inverse":
        rep.notes["skew_inverse"] = braidings.format_rmatrix(b.skew_inverse).strip().replace("\n", " | ")
        rep.notes["trace_matrix"] = _diag_text(b.trace_matrix)
        res = braidings.skew_inverse_residual(b.R, b.skew_inverse)
        rep.add(_check_item("skew-inverse-residual", not res, f"{len(res)} nonzero entries" if res else ""))
    else:
        from .skewsym import SkewSymmetrizerTower

        tower = SkewSymmetrizerTower.build(b)
        rep.notes["kind"] = b.kind
        rep.notes["q"] = "-" if b.q is None else format_scalar(b.q)
        rep.notes["trace_matrix"] = _diag_text(b.trace_matrix)
        rep.notes["ranks"] = ",".join(str(r) for r in tower.ranks)
        rep.add(_check_item("bi-rank", True, f"({b.birank_m}|0)", time.perf_counter() - t0))
    return _emit(rep, args)


def _diag_text(D) -> str:
    n = D.n
    if all(D[i, j] == 0 for i in range(n) for j in range(n) if i != j):
        return "diag(" + ", ".join(format_scalar(D[i, i]) for i in range(n)) + ")"
    return "; ".join(f"D[{r + 1},{c + 1}]={format_scalar(v)}" for r, c, v in D.items())


def _rmat_check(args) -> int:
    t0 = time.perf_counter()
    if args.builtin:
        name, n = args.builtin
        key = braidings.BUILTINS.get(name)
        if key is None:
            raise UsageError(f"unknown built-in {name!r}")
        R = braidings.flip(int(n)) if key == "flip" else braidings.standard_hecke(int(n))
        label = f"{name}{n}"
        claimed = None
    else:
        R = braidings.load_rmatrix(args.rmatrix)
        label = Path(args.rmatrix).name
        claimed = parse_scalar(args.claimed_q) if args.claimed_q else None
    rep = VerificationReport("rmat check", "braid relation, symmetry type, skew-inverse, bi-rank", label, "-")
    res = braidings.qybe_residual(R)
    rep.add(_check_item("qybe", res.is_zero(), "" if res.is_zero() else f"{res.nnz()} nonzero residual entries"))
    if not res.is_zero():
        first = sorted(res.items(), key=lambda e: (e[0], e[1]))[:3]
        rep.notes["witness"] = "; ".join(f"[{r},{c}]={format_scalar(v)}" for r, c, v in first)
        return _emit(rep, args)
    try:
        b = braidings.validate(R, claimed, name=label)
    except QmadsError as exc:
        rep.add(_check_item("validate", False, f"{type(exc).__name__}: {exc}"))
        return _emit(rep, args)
    rep.braiding = b.describe()
    rep.add(_check_item(f"kind={b.kind}", True))
    sres = braidings.skew_inverse_residual(b.R, b.skew_inverse)
    rep.add(_check_item("skew-inverse", not sres))
    rep.add(_check_item(f"bi-rank=({b.birank_m}|0)", True, "", time.perf_counter() - t0))
    rep.notes["trace_matrix"] = _diag_text(b.trace_matrix)
    return _emit(rep, args)


# --- verify -------------------------------------------------------------------

def _constant_driver(args):
    kind = algebras.canonical_kind(args.algebra)
    v_mode = _v_mode(args.v)
    cmd = args.command

    def driver(b):
        a = algebras.present(kind, b)
        if cmd == "ch":
            return charpoly.verify_ch(a)
        if cmd == "centrality":
            ks = args.k or list(range(1, b.birank_m + 1))
            reps = [charpoly.verify_centrality(a, k) for k in ks]
            out = reps[0]
            for r in reps[1:]:
                out.items.extend(r.items)
            return out
        if cmd == "psum-commute":
            return charpoly.verify_powersum_commutativity(a, args.kmax)
        if cmd == "simplifications":
            return charpoly.verify_simplifications(a, args.kmax)
        return dsreduction.verify_similarity_constant(a, v_mode)

    return kind, driver


def cmd_verify(args) -> int:
    if args.command in VERIFY_CONSTANT:
        kind, driver = _constant_driver(args)
        if kind == algebras.UGL:
            if args.builtin or args.rmatrix:
                b = _load_braiding(args)
            elif args.n:
                b = braidings.builtin("flip", args.n)
            else:
                raise UsageError("ugl needs --n N or --builtin flip N")
            return _emit(driver(b), args)
        if not (args.builtin or args.rmatrix):
            raise UsageError("give --builtin NAME N or --rmatrix FILE")
        b = _load_braiding(args)
        rep = run_with_strategy(driver, b, _strategy(args, b.n), args.seed, args.trials)
        return _emit(rep, args)

    b = _load_braiding(args)
    expected = "rational" if b.kind == braidings.INVOLUTIVE else "hecke"
    if args.kind and args.kind != expected:
        raise UsageError(f"--kind {args.kind} does not match a {b.kind} braiding (use {expected})")
    v_mode = _v_mode(args.v)
    order, trunc = args.order, args.trunc
    if order > trunc:
        raise UsageError(f"--order {order} exceeds --trunc {trunc}")

    def driver(bq):
        p = yangians.current_relations(bq, args.yangian, order)
        if args.command == "ch-yangian":
            return yangians.verify_ch_yangian(p, order, trunc)
        return dsreduction.verify_similarity_yangian(p, v_mode, order, trunc)

    rep = run_with_strategy(driver, b, _strategy(args, b.n), args.seed, args.trials)
    return _emit(rep, args)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        if args.group == "rmat":
            return cmd_rmat(args)
        return cmd_verify(args)
    except UsageError as exc:
        print(f"qmads: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"qmads: resource limit: {exc} (dimension {exc.dimension})", file=sys.stderr)
        return EXIT_USAGE
    except (QmadsError, ValueError, OSError) as exc:
        print(f"qmads: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
