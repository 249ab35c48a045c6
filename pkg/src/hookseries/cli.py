"""Command-line front end: verify identities, inspect partitions, print tables.

Everything is deterministic: identical invocations produce byte-identical
output.  Exit codes: 0 all good, 1 a verification found a mismatch, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import abacus, identities, quotient
from .partitions import (
    Partition,
    count_t_cores,
    hook_lengths,
    hook_lengths_mod_t,
    is_t_core,
)
from .series import TruncatedSeries, euler_product_power

USAGE_ERROR = 2
MAX_UNFORCED_DEGREE = 40


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return USAGE_ERROR


def _dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=2)


# -- verify ----------------------------------------------------------------------


def _format_report_text(report) -> str:
    if report.verified:
        return f"ok   {report.identity} degree={report.degree}"
    m = report.first_mismatch
    detail = ""
    if m is not None:
        detail = f" first mismatch at x^{m.degree}: lhs={m.lhs} rhs={m.rhs}"
    return f"FAIL {report.identity} degree={report.degree}{detail}"


def cmd_verify(args) -> int:
    if args.degree is not None and args.degree < 0:
        return _fail_usage("--degree must be non-negative")
    if (
        args.degree is not None
        and args.degree > MAX_UNFORCED_DEGREE
        and not args.force
    ):
        return _fail_usage(
            f"--degree {args.degree} exceeds the guard of {MAX_UNFORCED_DEGREE}"
            " (symbolic verification grows quickly); pass --force to override"
        )
    if args.id != "all" and args.id not in identities.IDENTITY_IDS:
        known = ", ".join(["all"] + identities.IDENTITY_IDS)
        return _fail_usage(f"unknown identity {args.id!r}; known ids: {known}")

    if args.id == "all" and args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            futures = [
                pool.submit(runner, args.degree)
                for _, _, runner in identities.REGISTRY
            ]
            reports = [r for f in futures for r in f.result()]
    else:
        reports = identities.run_identity(args.id, args.degree)

    if args.format == "json":
        print(_dump_json([r.to_dict() for r in reports]))
    else:
        for report in reports:
            print(_format_report_text(report))
    return 0 if all(r.verified for r in reports) else 1


# -- inspect ---------------------------------------------------------------------


def _sorted_multiset(counter):
    return sorted(counter.elements())


def inspect_payload(p: Partition, t: int) -> dict:
    """Everything the inspector knows about one partition at one t."""
    payload = {
        "partition": list(p.parts),
        "size": p.size,
        "t": t,
        "hooks": _sorted_multiset(hook_lengths(p)),
        "hooks_mod_t": _sorted_multiset(hook_lengths_mod_t(p, t)),
        "is_t_core": is_t_core(p, t),
    }
    if payload["is_t_core"]:
        payload["n_coding"] = list(abacus.phi_n(p, t).values)
        if t % 2 == 1:
            hset = abacus.h_set(p, t)
            payload["h_set"] = sorted(hset.elements, reverse=True)
            payload["u_coding"] = list(abacus.max_t(hset).values)
            coding = abacus.phi_v(p, t)
            payload["v_coding"] = list(coding.values)
            payload["weight_from_v_coding"] = abacus.core_weight_from_v(coding)
        else:
            payload["codings_note"] = "u/v codings need odd t"
    else:
        payload["codings_note"] = f"not a {t}-core, no codings"
    cq = quotient.decompose(p, t)
    payload["core"] = list(cq.core.parts)
    payload["quotient"] = [list(q.parts) for q in cq.quotient]
    return payload


def cmd_inspect(args) -> int:
    try:
        p = Partition.from_string(args.partition)
    except ValueError as exc:
        return _fail_usage(str(exc))
    if args.t < 1:
        return _fail_usage("--t must be a positive integer")
    payload = inspect_payload(p, args.t)
    if args.format == "json":
        print(_dump_json(payload))
        return 0
    def row(label, value):
        print(f"{label}: {value}")

    row("partition", ",".join(str(x) for x in payload["partition"]) or "(empty)")
    row("size", payload["size"])
    row("hooks", " ".join(str(h) for h in payload["hooks"]) or "(none)")
    row(
        f"hooks mod {args.t}",
        " ".join(str(h) for h in payload["hooks_mod_t"]) or "(none)",
    )
    row(f"is {args.t}-core", "yes" if payload["is_t_core"] else "no")
    if "h_set" in payload:
        row("h-set", " ".join(str(x) for x in payload["h_set"]))
        row("u-coding", " ".join(str(x) for x in payload["u_coding"]))
        row("v-coding", " ".join(str(x) for x in payload["v_coding"]))
        row("weight from v-coding", payload["weight_from_v_coding"])
    if "n_coding" in payload:
        row("n-coding", " ".join(str(x) for x in payload["n_coding"]))
    if "codings_note" in payload:
        row("codings", payload["codings_note"])
    row("core", ",".join(str(x) for x in payload["core"]) or "(empty)")
    row(
        "quotient",
        " | ".join(
            ",".join(str(x) for x in q) or "(empty)" for q in payload["quotient"]
        ),
    )
    return 0


# -- coeff -----------------------------------------------------------------------


def cmd_coeff(args) -> int:
    if args.table == "euler-power":
        if args.k is None or args.k < 0:
            return _fail_usage("euler-power needs --k >= 0")
        if args.k > MAX_UNFORCED_DEGREE and not args.force:
            return _fail_usage(f"--k above {MAX_UNFORCED_DEGREE}; pass --force")
        value = identities.euler_power_coefficient(args.k)
        if args.format == "json":
            print(_dump_json({"k": args.k, "coefficient": value.term_list()}))
        else:
            print(value)
        return 0
    if args.table == "revert":
        degree = args.degree if args.degree is not None else 7
        if degree < 1:
            return _fail_usage("revert needs --degree >= 1")
        if degree > MAX_UNFORCED_DEGREE and not args.force:
            return _fail_usage(f"--degree above {MAX_UNFORCED_DEGREE}; pass --force")
        base = TruncatedSeries.monomial(degree, 1) * euler_product_power(1, degree)
        reverted = base.revert()
        values = [
            str(reverted.coefficient(n).constant_value()) for n in range(1, degree + 1)
        ]
        if args.format == "json":
            print(_dump_json({"degree": degree, "coefficients": values}))
        else:
            print(" ".join(values))
        return 0
    if args.table == "tcores":
        if args.t < 1:
            return _fail_usage("--t must be a positive integer")
        maximum = args.max if args.max is not None else 10
        if maximum < 0:
            return _fail_usage("--max must be non-negative")
        if maximum > 30 and not args.force:
            return _fail_usage("--max above 30 enumerates a lot; pass --force")
        counts = [count_t_cores(m, args.t) for m in range(maximum + 1)]
        if args.format == "json":
            print(_dump_json({"t": args.t, "max": maximum, "counts": counts}))
        else:
            print(" ".join(str(c) for c in counts))
        return 0
    return _fail_usage(f"unknown coefficient table {args.table!r}")


# -- wiring ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookseries",
        description="Exact verification of hook-length and Euler-product identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify",
        help="check identities coefficient by coefficient",
        description=(
            "Runs one or all identity verifiers. Series identities honor"
            " --degree (defaults per identity, e.g. 12 for"
            " nekrasov-okounkov, 10 for t-refinement, 30 for pentagonal);"
            " enumeration suites (marked-hook, syt-square-sum,"
            " core-hook-moments, kostant-positivity) use fixed documented"
            " bounds. Degrees above 40 need --force."
        ),
    )
    verify.add_argument(
        "--id",
        default="all",
        help="identity id or 'all' (see README for the list)",
    )
    verify.add_argument("--degree", type=int, default=None, help="series truncation")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--jobs", type=int, default=1, help="worker threads")
    verify.add_argument(
        "--force", action="store_true", help="allow degrees past the runtime guard"
    )
    verify.set_defaults(handler=cmd_verify)

    inspect = sub.add_parser(
        "inspect",
        help="hooks, codings, and core/quotient of one partition",
    )
    inspect.add_argument(
        "--partition",
        required=True,
        help="comma-separated weakly decreasing parts; empty string for ()",
    )
    inspect.add_argument("--t", type=int, default=2, help="modulus (default 2)")
    inspect.add_argument("--format", choices=("text", "json"), default="text")
    inspect.set_defaults(handler=cmd_inspect)

    coeff = sub.add_parser(
        "coeff",
        help="coefficient tables (euler-power, revert, tcores)",
    )
    coeff.add_argument(
        "table",
        choices=("euler-power", "revert", "tcores"),
        help="which table to print",
    )
    coeff.add_argument("--k", type=int, default=None, help="index for euler-power")
    coeff.add_argument("--degree", type=int, default=None, help="degree for revert")
    coeff.add_argument("--t", type=int, default=2, help="modulus for tcores")
    coeff.add_argument("--max", type=int, default=None, help="largest size for tcores")
    coeff.add_argument("--format", choices=("text", "json"), default="text")
    coeff.add_argument("--force", action="store_true")
    coeff.set_defaults(handler=cmd_coeff)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; keep that contract visible here
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
