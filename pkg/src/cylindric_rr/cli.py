"""Command-line front end.

    cylindric-rr series    --profile 2,1,1 --side oracle --order 10
    cylindric-rr series    --identity 5 --side product --order 20
    cylindric-rr verify    main --order 100
    cylindric-rr enumerate --profile 2,1,1 --max-weight 3

Exit codes: 0 success, 1 a verification mismatched, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from . import borodin, closedforms, funceq
from .cylindric import (
    CANONICAL_LEVEL4_RANK3,
    Profile,
    canonical,
    compositions,
    enumerate_partitions,
    oracle_F,
    oracle_F_n,
    oracle_F_y,
)
from .series import QSeries, VerificationReport, eq_upto

ORACLE_ORDER_BOUND = 14
ENUMERATION_WEIGHT_BOUND = 16
DEFAULT_ORACLE_ORDER = 10

VERIFY_TARGETS = ("borodin", "funceq", "main", "finite", "transforms", "all")


class UsageError(Exception):
    pass


def _profile(text: str) -> Profile:
    try:
        return Profile.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _level4(p: Profile) -> Profile:
    c = canonical(p)
    if c not in CANONICAL_LEVEL4_RANK3:
        raise UsageError(f"profile {p} is not a composition of 4 into 3 parts")
    return c


def _check_oracle_order(order: int, force: bool) -> None:
    if order > ORACLE_ORDER_BOUND and not force:
        raise UsageError(
            f"oracle order {order} exceeds the safety bound {ORACLE_ORDER_BOUND}; pass --force to override"
        )


# ---------------------------------------------------------------------------
# series


def series_for(args) -> tuple[str, QSeries]:
    side, N = args.side, args.order
    if N < 0:
        raise UsageError("--order must be nonnegative")
    if side in ("sum", "product"):
        if args.identity is None:
            raise UsageError(f"--side {side} needs --identity")
        if not 1 <= args.identity <= 5:
            raise UsageError("--identity must be 1..5")
        fn = closedforms.sum_side if side == "sum" else closedforms.product_side
        return f"{side}-identity-{args.identity}", fn(args.identity, N)
    if args.profile is None:
        raise UsageError(f"--side {side} needs --profile")
    p = _profile(args.profile)
    if side == "oracle":
        _check_oracle_order(N, args.force)
        if args.n is None:
            return f"oracle-{p}", oracle_F(p, N)
        return f"oracle-{p}-n{args.n}", oracle_F_n(p, args.n, N)
    if side == "borodin":
        if p.level < 1:
            raise UsageError("the product formula needs a profile of level >= 1")
        return f"borodin-{p}", borodin.product_series(p, N)
    if side == "finite":
        if args.n is None:
            raise UsageError("--side finite needs --n")
        return f"finite-{p}-n{args.n}", closedforms.F_finite(_level4(p), args.n, N)
    raise UsageError(f"unknown side {side!r}")


def cmd_series(args) -> int:
    subject, s = series_for(args)
    if args.format == "json":
        print(json.dumps({"subject": subject, "order": args.order, "coefficients": list(s.coeffs)}))
    else:
        for k, c in enumerate(s.coeffs):
            print(f"{k}\t{c}")
    return 0


# ---------------------------------------------------------------------------
# verify


def _timed(subject: str, fn, *args) -> VerificationReport:
    t0 = time.perf_counter()
    r = fn(*args)
    return r.renamed(subject, (time.perf_counter() - t0) * 1000)


def check_borodin_oracle(p: Profile, M: int) -> VerificationReport:
    return _timed(f"borodin-oracle-{p}", lambda: eq_upto(borodin.product_series(p, M), oracle_F(p, M), M))


def check_gb_closed(p: Profile, N: int, D: int) -> VerificationReport:
    provider = {c: closedforms.G_closed(c, N, D) for c in CANONICAL_LEVEL4_RANK3}
    return funceq.verify_gb(p, provider, N, D, subject=f"funceq-gb-{p}")


def check_inex_oracle(p: Profile, M: int) -> VerificationReport:
    return funceq.verify_inex(p, lambda c: oracle_F_y(c, M), M, M, subject=f"funceq-inex-oracle-{p}")


def check_solver(N: int, nmax: int) -> VerificationReport:
    t0 = time.perf_counter()
    table = funceq.solve_g(N, nmax)
    first = None
    for p in CANONICAL_LEVEL4_RANK3:
        for n in range(nmax + 1):
            r = eq_upto(table[p, n], closedforms.g_closed(p, n, N), N)
            if not r.match and (first is None or r.first_mismatch < first):
                first = r.first_mismatch
    return VerificationReport("funceq-solver", N, first is None, first, (time.perf_counter() - t0) * 1000)


def check_finite(p: Profile, n: int, N: int) -> VerificationReport:
    return _timed(
        f"finite-{p}-n{n}", lambda: eq_upto(closedforms.F_finite(p, n, N), oracle_F_n(p, n, N), N)
    )


def build_tasks(target: str, args) -> list:
    N = args.order
    M = args.oracle_order if args.oracle_order is not None else min(N, DEFAULT_ORACLE_ORDER)
    _check_oracle_order(M, args.force)
    D = args.ydeg
    tasks = []
    if target in ("borodin", "all"):
        tasks += [partial(check_borodin_oracle, p, M) for p in compositions(4, 3)]
        tasks += [partial(closedforms.verify_corollary, p, N) for p in CANONICAL_LEVEL4_RANK3]
    if target in ("funceq", "all"):
        tasks += [partial(check_gb_closed, p, N, D) for p in CANONICAL_LEVEL4_RANK3]
        tasks.append(partial(check_solver, max(N, 1), D))
        inex_profiles = compositions(4, 3) + compositions(3, 2)
        tasks += [partial(check_inex_oracle, p, M) for p in inex_profiles]
    if target in ("main", "all"):
        tasks += [partial(closedforms.verify_main, i, N) for i in range(1, 6)]
    if target in ("finite", "all"):
        profiles = [_level4(_profile(args.profile))] if args.profile else list(CANONICAL_LEVEL4_RANK3)
        ns = [args.n] if args.n is not None else [0, 1, 2, 3]
        order = N if target == "finite" else M
        if target == "finite":
            _check_oracle_order(order, args.force)
        tasks += [partial(check_finite, p, n, order) for p in profiles for n in ns]
    if target in ("transforms", "all"):
        tasks += [
            partial(closedforms.verify_transform3, N),
            partial(closedforms.verify_transform4, N),
            partial(closedforms.verify_gaussian_recurrence, 5),
        ]
    return tasks


def _call(task):
    return task()


def run_tasks(tasks, jobs: int = 1) -> list[VerificationReport]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_call, tasks))
    else:
        reports = [t() for t in tasks]
    return sorted(reports, key=lambda r: r.subject)


def format_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2)
    width = max((len(r.subject) for r in reports), default=7)
    lines = []
    for r in reports:
        status = "ok" if r.match else f"MISMATCH at q^{r.first_mismatch}"
        lines.append(f"{r.subject:<{width}}  order={r.order:<4d} {status}")
    bad = sum(not r.match for r in reports)
    lines.append(f"{len(reports)} checks, {bad} mismatches")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    if args.ydeg < 0:
        raise UsageError("--ydeg must be nonnegative")
    reports = run_tasks(build_tasks(args.target, args), args.jobs)
    print(format_reports(reports, args.format))
    return 0 if all(r.match for r in reports) else 1


# ---------------------------------------------------------------------------
# enumerate


def cmd_enumerate(args) -> int:
    p = _profile(args.profile)
    if args.max_weight < 0:
        raise UsageError("--max-weight must be nonnegative")
    if args.max_weight > ENUMERATION_WEIGHT_BOUND and not args.force:
        raise UsageError(
            f"max weight {args.max_weight} exceeds the safety bound {ENUMERATION_WEIGHT_BOUND}; "
            "pass --force to override"
        )
    if args.max_entry is not None and args.max_entry < 0:
        raise UsageError("--max-entry must be nonnegative")
    found = enumerate_partitions(p, args.max_weight, args.max_entry)
    if args.format == "json":
        print(json.dumps({"profile": str(p), "count": len(found), "partitions": [str(x) for x in found]}))
    else:
        print(f"count\t{len(found)}")
        for lam in found:
            print(lam)
    return 0


# ---------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cylindric-rr",
        description="Cylindric partitions and coefficientwise checks of the A2 Rogers-Ramanujan identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("plain", "json"), default="plain")
        sp.add_argument("--force", action="store_true", help="lift the brute-force safety bounds")

    s = sub.add_parser("series", help="print coefficients of a generating function")
    s.add_argument("--profile", help="composition, e.g. 2,1,1")
    s.add_argument("--identity", type=int, help="identity index 1..5")
    s.add_argument("--side", required=True, choices=("oracle", "borodin", "sum", "product", "finite"))
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--n", type=int, help="largest allowed entry")
    common(s)
    s.set_defaults(func=cmd_series)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("target", choices=VERIFY_TARGETS)
    v.add_argument("--order", type=int, default=30)
    v.add_argument("--profile", help="restrict the finite suite to one profile")
    v.add_argument("--n", type=int, help="restrict the finite suite to one max entry")
    v.add_argument("--ydeg", type=int, default=8, help="y-degree for functional-equation checks")
    v.add_argument(
        "--oracle-order",
        type=int,
        help=f"order for enumeration-backed checks (default min(order, {DEFAULT_ORACLE_ORDER}))",
    )
    v.add_argument("--jobs", type=int, default=1)
    common(v)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="list cylindric partitions")
    e.add_argument("--profile", required=True)
    e.add_argument("--max-weight", type=int, required=True)
    e.add_argument("--max-entry", type=int)
    common(e)
    e.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
