"""Command line front end.

Usage examples:
    rescong count --n 4 --s 2 --b 5 --t 1,2
    rescong count --n 4 --s 2 --b 5 --g 1,1,0 --engine brute --format json
    rescong ramanujan --r 4 --s 2 --m 16
    rescong ggcd --a 12 --b 16 --s 2
    rescong classes --n 4 --s 2 --elements
    rescong solve --n 4 --s 2 --b 5 --t 1,2 --limit 10
    rescong verify --max-n 6 --s 1,2 --max-k 3 --seed 0
    rescong bench --n 4,8,16 --s 1,2 --k 2,4,8 --reps 3

Exit codes: 0 success, 1 usage or domain error, 2 verification mismatch.

With --format json every command prints one record
{"command", "params", "engine", "result", "elapsed_ms"} with sorted keys.
Count-like integers are serialized as decimal strings so arbitrary
precision survives the trip; class members and solution tuples stay
integer arrays.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

from .arith import divisors, generalized_gcd, jordan_totient
from .congruence import (
    CongruenceInstance,
    class_members,
    count_restricted,
)
from .errors import BudgetExceededError, DomainError
from .oracle import (
    DEFAULT_TUPLE_BUDGET,
    DEFAULT_VECTOR_BUDGET,
    brute_force_count,
    convolution_count,
    enumerate_solutions,
)
from .ramanujan import cohen_ramanujan
from .verification import DEFAULT_INSTANCE_CAP, SweepConfig, engine_sweep, identity_suites

ENGINES = ("formula", "brute", "convolution")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; this CLI reserves 2 for
    # verification mismatches, so route usage problems through exit 1.
    def error(self, message):
        raise _UsageError(message)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _record(command: str, params: dict, result: dict, engine: str | None, t0: float) -> dict:
    return {
        "command": command,
        "params": params,
        "engine": engine,
        "result": result,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }


def _parse_int_list(text: str, flag: str) -> list[int]:
    if text is None or text == "" or text == "-":
        return []
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise _UsageError(f"{flag} expects a comma-separated list of integers, got {text!r}")


def _resolve_restrictions(n: int, t_text: str | None, g_text: str | None) -> tuple[int, ...]:
    if g_text is not None:
        g = _parse_int_list(g_text, "--g")
        divs = divisors(n)
        if len(g) != len(divs):
            raise DomainError(
                f"--g needs one entry per divisor of n={n} "
                f"({len(divs)} entries for divisors {','.join(map(str, divs))}), got {len(g)}"
            )
        if any(x < 0 for x in g):
            raise DomainError("--g entries must be nonnegative")
        return tuple(d for d, gj in zip(divs, g) for _ in range(gj))
    return tuple(_parse_int_list(t_text, "--t"))


def _t_display(restrictions: tuple[int, ...]) -> str:
    return ",".join(map(str, restrictions)) if restrictions else "-"


def _run_engine(engine: str, instance: CongruenceInstance, budget: int | None) -> int:
    if engine == "formula":
        return count_restricted(instance)
    if engine == "brute":
        return brute_force_count(instance, budget=budget or DEFAULT_TUPLE_BUDGET)
    if engine == "convolution":
        return convolution_count(instance, budget=budget or DEFAULT_VECTOR_BUDGET)
    raise _UsageError(f"unknown engine {engine!r}")


def cmd_count(args) -> int:
    t0 = time.perf_counter()
    restrictions = _resolve_restrictions(args.n, args.t, args.g)
    inst = CongruenceInstance(n=args.n, s=args.s, b=args.b, restrictions=restrictions)
    value = _run_engine(args.engine, inst, args.budget)
    params = {
        "n": args.n,
        "s": args.s,
        "b": args.b,
        "t": list(restrictions),
        "modulus": inst.modulus,
    }
    rec = _record("count", params, {"count": str(value)}, args.engine, t0)
    if args.format == "json":
        print(canonical_json(rec))
    else:
        print(
            f"n={args.n} s={args.s} b={args.b} t={_t_display(restrictions)} "
            f"modulus={inst.modulus} engine={args.engine}"
        )
        print(f"count = {value}")
    return 0


def cmd_ramanujan(args) -> int:
    t0 = time.perf_counter()
    value = cohen_ramanujan(args.r, args.s, args.m)
    params = {"r": args.r, "s": args.s, "m": args.m}
    rec = _record("ramanujan", params, {"value": str(value)}, None, t0)
    if args.format == "json":
        print(canonical_json(rec))
    else:
        print(f"c_{{{args.r},{args.s}}}({args.m}) = {value}")
    return 0


def cmd_ggcd(args) -> int:
    t0 = time.perf_counter()
    g = generalized_gcd(args.a, args.b, args.s)
    params = {"a": args.a, "b": args.b, "s": args.s}
    result = {"value": str(g.value), "base": str(g.base), "power": g.power}
    rec = _record("ggcd", params, result, None, t0)
    if args.format == "json":
        print(canonical_json(rec))
    else:
        print(f"({args.a}, {args.b})_{args.s} = {g.value}")
        print(f"base l = {g.base}")
    return 0


def cmd_classes(args) -> int:
    t0 = time.perf_counter()
    if args.n < 1 or args.s < 1:
        raise DomainError(f"classes requires n, s >= 1, got n={args.n} s={args.s}")
    modulus = args.n**args.s
    rows = []
    for d in divisors(args.n):
        row: dict = {"d": d, "size": str(jordan_totient(args.n // d, args.s))}
        if args.elements:
            budget = args.budget or 10**6
            row["members"] = class_members(args.n, args.s, d, budget=budget)
        rows.append(row)
    params = {"n": args.n, "s": args.s, "modulus": modulus, "elements": bool(args.elements)}
    rec = _record("classes", params, {"rows": rows, "total": str(modulus)}, None, t0)
    if args.format == "json":
        print(canonical_json(rec))
    else:
        print(f"n={args.n} s={args.s} modulus={modulus}")
        for row in rows:
            line = f"d={row['d']} size={row['size']}"
            if args.elements:
                line += " members=" + ",".join(map(str, row["members"]))
            print(line)
        print(f"total = {modulus}")
    return 0


def cmd_solve(args) -> int:
    t0 = time.perf_counter()
    restrictions = _resolve_restrictions(args.n, args.t, args.g)
    inst = CongruenceInstance(n=args.n, s=args.s, b=args.b, restrictions=restrictions)
    budget = args.budget or DEFAULT_TUPLE_BUDGET
    solutions = enumerate_solutions(inst, limit=args.limit, budget=budget)
    total = brute_force_count(inst, budget=budget)
    params = {
        "n": args.n,
        "s": args.s,
        "b": args.b,
        "t": list(restrictions),
        "modulus": inst.modulus,
        "limit": args.limit,
    }
    result = {"solutions": [list(sol) for sol in solutions], "count": str(total)}
    rec = _record("solve", params, result, None, t0)
    if args.format == "json":
        print(canonical_json(rec))
    else:
        print(
            f"n={args.n} s={args.s} b={args.b} t={_t_display(restrictions)} "
            f"modulus={inst.modulus}"
        )
        for sol in solutions:
            print(",".join(map(str, sol)) if sol else "()")
        print(f"count = {total}")
    return 0


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    s_values = tuple(_parse_int_list(args.s, "--s"))
    if not s_values:
        raise _UsageError("--s expects at least one power, e.g. --s 1,2")
    cfg = SweepConfig(
        max_n=args.max_n,
        s_values=s_values,
        max_k=args.max_k,
        seed=args.seed,
        cap=args.budget or DEFAULT_INSTANCE_CAP,
    )
    sweep = engine_sweep(cfg)
    props = identity_suites()
    ok = sweep.ok and props.ok
    params = {
        "max_n": args.max_n,
        "s": list(s_values),
        "max_k": args.max_k,
        "seed": args.seed,
        "cap": cfg.cap,
    }
    result = {
        "ok": ok,
        "instances_checked": sweep.checked,
        "instance_space": sweep.space,
        "subsampled": sweep.subsampled,
        "mismatches": sweep.mismatches,
        "identity_checks": props.checks,
        "identity_failures": props.failures,
    }
    rec = _record("verify", params, result, None, t0)
    if args.format == "json":
        print(canonical_json(rec))
    else:
        mode = "subsampled" if sweep.subsampled else "exhaustive"
        print(
            f"engine sweep: {sweep.checked} instances checked "
            f"(space {sweep.space}, {mode}), {len(sweep.mismatches)} mismatches"
        )
        print(f"identity suites: {props.checks} checks, {len(props.failures)} failures")
        for miss in sweep.mismatches[:10]:
            print(
                f"MISMATCH n={miss['n']} s={miss['s']} b={miss['b']} "
                f"t={_t_display(tuple(miss['t']))} formula={miss['formula']} "
                f"brute={miss['brute_force']} convolution={miss['convolution']}"
            )
        for failure in props.failures[:10]:
            print(f"FAILURE {failure}")
        if sweep.mismatches:
            first = sweep.mismatches[0]
            print(
                f"reproduce: rescong count --n {first['n']} --s {first['s']} "
                f"--b {first['b']} --t {_t_display(tuple(first['t']))} --engine brute"
            )
        print("ok" if ok else "MISMATCH DETECTED")
    return 0 if ok else 2


def _median_timing(fn, reps: int):
    """(value, median_ms) over reps runs, or (None, None) past a budget."""
    times = []
    value = None
    for _ in range(reps):
        t0 = time.perf_counter()
        try:
            value = fn()
        except BudgetExceededError:
            return None, None
        times.append((time.perf_counter() - t0) * 1000.0)
    return value, statistics.median(times)


def cmd_bench(args) -> int:
    t0 = time.perf_counter()
    ns = _parse_int_list(args.n, "--n")
    ss = _parse_int_list(args.s, "--s")
    ks = _parse_int_list(args.k, "--k")
    if not ns or not ss or not ks:
        raise _UsageError("bench needs nonempty --n, --s and --k lists")
    reps = args.reps
    rows = []
    for n in ns:
        for s in ss:
            for k in ks:
                inst = CongruenceInstance(n=n, s=s, b=0, restrictions=(1,) * k)
                count, formula_ms = _median_timing(lambda: count_restricted(inst), reps)
                _, conv_ms = _median_timing(
                    lambda: convolution_count(inst, budget=args.budget or DEFAULT_VECTOR_BUDGET),
                    reps,
                )
                _, brute_ms = _median_timing(
                    lambda: brute_force_count(inst, budget=args.budget or DEFAULT_TUPLE_BUDGET),
                    reps,
                )
                rows.append(
                    {
                        "n": n,
                        "s": s,
                        "k": k,
                        "count": str(count),
                        "formula_ms": formula_ms,
                        "convolution_ms": conv_ms,
                        "brute_ms": brute_ms,
                    }
                )
    params = {"n": ns, "s": ss, "k": ks, "reps": reps}
    rec = _record("bench", params, {"rows": rows}, None, t0)
    if args.format == "json":
        print(canonical_json(rec))
    else:
        print("n,s,k,count,formula_ms,convolution_ms,brute_ms")
        for row in rows:
            cells = [str(row["n"]), str(row["s"]), str(row["k"]), row["count"]]
            for key in ("formula_ms", "convolution_ms", "brute_ms"):
                cells.append("" if row[key] is None else f"{row[key]:.3f}")
            print(",".join(cells))
    return 0


def _add_format_flag(sub) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> _Parser:
    parser = _Parser(prog="rescong", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="subcommand")

    p = subs.add_parser("count", help="solution count for one restricted congruence")
    p.add_argument("--n", type=int, required=True, help="modulus base")
    p.add_argument("--s", type=int, required=True, help="modulus power (congruence mod n**s)")
    p.add_argument("--b", type=int, required=True, help="target residue")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--t", help="comma list of base divisors t_i, one per unknown")
    group.add_argument("--g", help="comma list of per-divisor multiplicities g_j")
    p.add_argument("--engine", choices=ENGINES, default="formula")
    p.add_argument("--budget", type=int, help="override the chosen engine's budget")
    _add_format_flag(p)
    p.set_defaults(handler=cmd_count)

    p = subs.add_parser("ramanujan", help="evaluate the generalized Ramanujan sum c_{r,s}(m)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_format_flag(p)
    p.set_defaults(handler=cmd_ramanujan)

    p = subs.add_parser("ggcd", help="generalized gcd (a, b)_s")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    _add_format_flag(p)
    p.set_defaults(handler=cmd_ggcd)

    p = subs.add_parser("classes", help="divisor classes of [1, n**s] and their sizes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--elements", action="store_true", help="also list the members")
    p.add_argument("--budget", type=int, help="enumeration budget for --elements")
    _add_format_flag(p)
    p.set_defaults(handler=cmd_classes)

    p = subs.add_parser("solve", help="list explicit solutions, lexicographically")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--t", help="comma list of base divisors t_i")
    group.add_argument("--g", help="comma list of per-divisor multiplicities g_j")
    p.add_argument("--limit", type=int, default=1000)
    p.add_argument("--budget", type=int, help="tuple enumeration budget")
    _add_format_flag(p)
    p.set_defaults(handler=cmd_solve)

    p = subs.add_parser("verify", help="engine-agreement sweep plus identity suites")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--s", default="1,2", help="comma list of powers to sweep")
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--seed", type=int, default=0, help="seed for the subsample, if any")
    p.add_argument("--budget", type=int, help="instance cap before subsampling kicks in")
    _add_format_flag(p)
    p.set_defaults(handler=cmd_verify)

    p = subs.add_parser("bench", help="timing grid across the three engines")
    p.add_argument("--n", default="4,8,16", help="comma list of modulus bases")
    p.add_argument("--s", default="1,2", help="comma list of powers")
    p.add_argument("--k", default="2,4,8", help="comma list of unknown counts")
    p.add_argument("--reps", type=int, default=3, help="repetitions per cell (median reported)")
    p.add_argument("--budget", type=int, help="override engine budgets")
    _add_format_flag(p)
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    if not hasattr(args, "handler"):
        parser.print_help()
        return 1
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())
