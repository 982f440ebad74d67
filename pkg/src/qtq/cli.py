"""Command-line front end: ``qtq <check> [flags]``.

Exit status is 0 when every report passes, 1 when any fails and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from .verify import (
    REGISTRY,
    BudgetExceeded,
    CheckReport,
    default_battery,
    lemma35_lambdas,
    run_job,
)

SUBCOMMANDS = ("theorem1", "theorem3", "cores", "lemma35", "fixed", "character", "all")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtq", description="Verify q,t-series identities for quasihomogeneous Hilbert schemes.")
    p.add_argument("command", choices=SUBCOMMANDS)
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--omega", type=_int_list, help="framing weights, e.g. 0,1")
    p.add_argument("--lam", type=_int_list, help="zero-sum vector for lemma35 (default: all with n <= 6)")
    p.add_argument("--w", type=_int_list, help="framing dimension vector for fixed (default e_0)")
    p.add_argument("--order", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="sampling seed; the built-in checks are exhaustive and ignore it")
    return p


def _alpha_beta(args, parser, m_default: int | None = None) -> tuple[int, int]:
    alpha, beta, m = args.alpha, args.beta, args.m
    if alpha is None and beta is None and m is None and m_default is not None:
        m = m_default
    if alpha is None and beta is None:
        if m is None:
            parser.error("need --alpha/--beta or --m")
        alpha, beta = 1, m - 1
    elif alpha is None:
        alpha = (m if m is not None else beta + 1) - beta
    elif beta is None:
        beta = (m if m is not None else alpha + 1) - alpha
    if alpha < 1 or beta < 1:
        parser.error(f"alpha and beta must be positive (got {alpha}, {beta})")
    if gcd(alpha, beta) != 1:
        parser.error(f"alpha={alpha} and beta={beta} are not coprime")
    if m is not None and alpha + beta != m:
        parser.error(f"alpha + beta = {alpha + beta} does not match --m {m}")
    return alpha, beta


def _need_m(args, parser) -> int:
    if args.m is None:
        if args.alpha is not None and args.beta is not None:
            return args.alpha + args.beta
        parser.error("--m is required")
    if args.m < 2:
        parser.error("--m must be at least 2")
    return args.m


def jobs_for(args, parser) -> list[tuple[str, dict]]:
    cmd = args.command
    if cmd == "all":
        return default_battery()
    if cmd == "theorem1":
        a, b = _alpha_beta(args, parser)
        return [("theorem1", {"alpha": a, "beta": b, "order": args.order if args.order is not None else 18})]
    if cmd == "theorem3":
        return [("theorem3", {"order": args.order if args.order is not None else 20})]
    if cmd == "cores":
        return [("cores", {"m": _need_m(args, parser), "order": args.order if args.order is not None else 24})]
    if cmd == "lemma35":
        m = _need_m(args, parser)
        order = args.order if args.order is not None else 12
        if args.lam is not None:
            if len(args.lam) != m or sum(args.lam) != 0:
                parser.error(f"--lam must have {m} entries summing to zero")
            lams = [args.lam]
        else:
            lams = lemma35_lambdas(m, 6)
        return [("lemma35", {"m": m, "lam": lam, "order": order}) for lam in lams]
    if cmd == "fixed":
        m = _need_m(args, parser)
        n_max = args.nmax if args.nmax is not None else 8
        w = args.w
        if w is not None and (len(w) != m or min(w) < 0 or sum(w) < 1):
            parser.error(f"--w must be {m} nonnegative integers with positive sum")
        if args.alpha is None and args.beta is None:
            pairs = [(a, m - a) for a in range(1, m) if gcd(a, m - a) == 1]
        else:
            pairs = [_alpha_beta(args, parser)]
        return [("fixed", {"m": m, "alpha": a, "beta": b, "n_max": n_max, "w": w}) for a, b in pairs]
    if cmd == "character":
        a, b = _alpha_beta(args, parser, m_default=2)
        omega = args.omega if args.omega is not None else (0,) * (args.r or 1)
        r = args.r if args.r is not None else len(omega)
        if len(omega) != r:
            parser.error(f"--omega has {len(omega)} entries but --r is {r}")
        if any(not 0 <= x < a + b for x in omega):
            parser.error(f"--omega entries must lie in [0, {a + b})")
        return [("character", {"r": r, "omega": omega, "alpha": a, "beta": b,
                               "order": args.order if args.order is not None else 10})]
    raise AssertionError(cmd)


def _table(reports: list[CheckReport]) -> str:
    lines = []
    for rep in reports:
        params = " ".join(f"{k}={v}" for k, v in rep.parameters.items())
        line = f"{rep.status.upper():4}  {rep.check_name:10} order={rep.order:<3} {params}  ({rep.elapsed_millis} ms)"
        if rep.first_mismatch is not None:
            mm = rep.first_mismatch
            line += f"\n      first mismatch at t^{mm.t_exp}: {mm.lhs}  vs  {mm.rhs}"
        if rep.note:
            line += f"\n      {rep.note}"
        lines.append(line)
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return "\n".join(lines)


def run(jobs: list[tuple[str, dict]], workers: int = 1) -> list[CheckReport]:
    if workers <= 1 or len(jobs) <= 1:
        return [run_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_job, jobs))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    jobs = jobs_for(args, parser)
    try:
        reports = run(jobs, args.jobs)
    except BudgetExceeded as exc:
        parser.error(str(exc))
    except ValueError as exc:
        parser.error(str(exc))
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        print(_table(reports))
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
