"""Command-line frontend.

Subcommands: bounds | tables | verify | generate | search | mc.  Exit codes:
0 success (verify: valid), 1 invalid code or failed --compare, 2 argument or
parse errors, 3 solver/runtime failures.  Errors are mirrored as a JSON
object on stderr.  All randomized subcommands require --seed; --no-stamp
suppresses the build stamp so identical invocations are byte-identical.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import replace

from .codes import BinaryCode, CodeFormatError
from .ensemble import DegenerateCodeError, purge_construction
from .optimize import DEFAULT_CONFIG, SolverConfig, SolverError
from .pairprob import exact_P0_cf, mc_pair_probability
from .random_coding import (
    BoundResult,
    ld_limit,
    lower_bound_cf,
    lower_bound_disjunctive,
    lower_bound_ld,
    lower_bound_ld_alt,
)
from .recurrent import upper_bound_cf, upper_bound_disjunctive, upper_bound_ld
from .search import exhaustive_max_t
from .tables import TABLE_NAMES, build_table, compare, default_jobs
from .verify import is_cover_free, is_list_decoding, is_plan

BOUND_KIND_CHOICES = (
    "cf-lower",
    "cf-upper",
    "ld-lower",
    "ld-lower-alt",
    "ld-upper",
    "ld-limit",
    "disjunctive-lower",
    "disjunctive-upper",
)

_NEEDS_SECOND = {"cf-lower", "cf-upper", "ld-lower", "ld-lower-alt", "ld-upper"}


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=None, help="override the root residual tolerance")
    p.add_argument("--seed", type=int, default=None, help="RNG seed (required for randomized commands)")
    p.add_argument("--format", choices=("csv", "json", "plain"), default="plain")
    p.add_argument("--out", default=None, help="write output to this path (atomically)")
    p.add_argument("--compare", action="store_true", help="diff table cells against embedded reference values")
    p.add_argument("--no-stamp", action="store_true", help="omit the build stamp from provenance")
    p.add_argument("--jobs", type=int, default=None, help="parallel workers for grid commands (default: COVERFREE_JOBS or 1)")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="coverfree",
        description="Rate bounds and code tools for cover-free and list-decoding superimposed codes",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="compute a single bound value")
    p.add_argument("--kind", choices=BOUND_KIND_CHOICES, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-l", "-L", "--second", dest="second", type=int, default=None)
    p.add_argument("--no-splitting", action="store_true", help="pure reduction recursion for cf-upper")
    _common_flags(p)

    p = sub.add_parser("tables", help="reproduce a published table")
    p.add_argument("--which", choices=TABLE_NAMES, required=True)
    p.add_argument("--no-splitting", action="store_true")
    _common_flags(p)

    p = sub.add_parser("verify", help="verify a code file against one property")
    p.add_argument("file")
    p.add_argument("--model", choices=("cf", "ld", "plan-exact", "plan-atmost"), required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-l", "-L", "--second", dest="second", type=int, default=None)
    _common_flags(p)

    p = sub.add_parser("generate", help="purge-construct a certified cover-free code")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-l", "--second", dest="second", type=int, required=True)
    p.add_argument("-q", type=float, required=True, help="column weight fraction")
    p.add_argument("-t", "--t-target", dest="t_target", type=int, required=True)
    _common_flags(p)

    p = sub.add_parser("search", help="exhaustive maximum code size at tiny lengths")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-l", "--second", dest="second", type=int, required=True)
    p.add_argument("--t-cap", dest="t_cap", type=int, default=None)
    _common_flags(p)

    p = sub.add_parser("mc", help="Monte-Carlo bad-pair probability")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-w", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-l", "-L", "--second", dest="second", type=int, required=True)
    p.add_argument("--model", choices=("cf", "ld"), default="cf")
    p.add_argument("--trials", type=int, required=True)
    _common_flags(p)
    return ap


def _cfg(args) -> SolverConfig:
    cfg = DEFAULT_CONFIG
    if args.tol is not None:
        cfg = replace(cfg, root_tol=args.tol)
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    return cfg


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".coverfree-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _bound_plain(r: BoundResult) -> str:
    parts = [f"kind={r.kind}", f"s={r.s}", f"second={r.second_param}", f"value={r.value!r}"]
    parts += [f"{k}={v!r}" for k, v in r.params.items()]
    parts += [f"residual={r.residual!r}", f"iterations={r.iterations}"]
    return " ".join(parts) + "\n"


def _require_second(args) -> int:
    if args.second is None:
        raise ValueError(f"kind {args.kind!r} requires -l/-L")
    if args.second < 1:
        raise ValueError("the second parameter must be >= 1")
    return args.second


def _cmd_bounds(args) -> int:
    cfg = _cfg(args)
    kind = args.kind
    if kind == "cf-lower":
        result = lower_bound_cf(args.s, _require_second(args), cfg)
    elif kind == "cf-upper":
        result = upper_bound_cf(args.s, _require_second(args), cfg, use_splitting=not args.no_splitting)
    elif kind == "ld-lower":
        result = lower_bound_ld(args.s, _require_second(args), cfg)
    elif kind == "ld-lower-alt":
        result = lower_bound_ld_alt(args.s, _require_second(args), cfg)
    elif kind == "ld-upper":
        second = _require_second(args)
        state = upper_bound_ld(args.s, second, cfg)
        result = BoundResult(
            kind="ld_upper",
            s=args.s,
            second_param=second,
            value=state.value(args.s),
            params=dict(state.params[args.s]),
        )
    elif kind == "ld-limit":
        result = ld_limit(args.s)
    elif kind == "disjunctive-lower":
        result = lower_bound_disjunctive(args.s, cfg)
    else:  # disjunctive-upper
        state = upper_bound_disjunctive(args.s, cfg)
        result = BoundResult(
            kind="cf_upper",
            s=args.s,
            second_param=1,
            value=state.value(args.s),
            params=dict(state.params[args.s]),
        )
    if args.format == "json":
        _emit(json.dumps(result.to_json_obj(), indent=1) + "\n", args.out)
    else:
        _emit(_bound_plain(result), args.out)
    return 0


def _cmd_tables(args) -> int:
    cfg = _cfg(args)
    jobs = args.jobs if args.jobs is not None else default_jobs()
    table = build_table(
        args.which,
        cfg,
        use_splitting=not args.no_splitting,
        jobs=jobs,
        stamp=not args.no_stamp,
    )
    report = compare(table) if args.compare else None
    if args.format == "json":
        obj = table.to_json_obj()
        if report is not None:
            obj["compare"] = report
        _emit(json.dumps(obj, indent=1) + "\n", args.out)
    else:
        text = table.to_csv()
        _emit(text, args.out)
        if report is not None:
            for rec in report:
                sys.stdout.write(
                    f"[{rec['status']}] {args.which} {rec['key']} {rec['field']}: "
                    f"ref={rec['reference']!r} computed={rec['computed']!r} "
                    f"abs={rec['abs_delta']:.3g} rel={rec['rel_delta']:.3g}\n"
                )
    if report is not None:
        n_fail = sum(1 for rec in report if rec["status"] == "FAIL")
        n_warn = sum(1 for rec in report if rec["status"] == "WARN")
        sys.stdout.write(
            f"compare: {len(report)} cells, {n_fail} FAIL, {n_warn} WARN\n"
        )
        return 1 if n_fail else 0
    return 0


def _cmd_verify(args) -> int:
    code = BinaryCode.load(args.file)
    if args.model in ("cf", "ld") and args.second is None:
        raise ValueError(f"model {args.model!r} requires -l/-L")
    if args.model == "cf":
        ok, witness = is_cover_free(code, args.s, args.second)
    elif args.model == "ld":
        ok, witness = is_list_decoding(code, args.s, args.second)
    elif args.model == "plan-exact":
        ok, witness = is_plan(code, args.s, "exact")
    else:
        ok, witness = is_plan(code, args.s, "at_most")
    if ok:
        _emit(json.dumps({"valid": True}) + "\n", args.out)
        return 0
    _emit(json.dumps({"valid": False, "witness": witness.to_json_obj()}, indent=1) + "\n", args.out)
    return 1


def _require_seed(args) -> int:
    if args.seed is None:
        raise ValueError("this command requires --seed")
    return args.seed


def _cmd_generate(args) -> int:
    seed = _require_seed(args)
    if args.out is None:
        raise ValueError("generate requires --out")
    code = purge_construction(args.N, args.s, args.second, args.q, args.t_target, seed)
    _emit(code.to_text(), args.out)
    sidecar = {
        "parameters": {
            "N": args.N,
            "s": args.s,
            "l": args.second,
            "q": args.q,
            "t_target": args.t_target,
            "seed": seed,
        },
        "survivors": code.n_cols,
        "certified": True,
    }
    _emit(json.dumps(sidecar, indent=1) + "\n", args.out + ".json")
    sys.stdout.write(f"survivors={code.n_cols} certified=True out={args.out}\n")
    return 0


def _cmd_search(args) -> int:
    best, witness = exhaustive_max_t(args.N, args.s, args.second, args.t_cap)
    if args.format == "json":
        obj = {"t_max": best, "witness": witness.to_json_obj()}
        sys.stdout.write(json.dumps(obj, indent=1) + "\n")
    else:
        sys.stdout.write(f"t_max={best}\n")
    if args.out is not None:
        _emit(witness.to_text(), args.out)
    return 0


def _cmd_mc(args) -> int:
    seed = _require_seed(args)
    estimate, stderr = mc_pair_probability(
        args.N, args.w, args.s, args.second, args.model, args.trials, seed
    )
    obj = {
        "model": args.model,
        "estimate": estimate,
        "stderr": stderr,
        "trials": args.trials,
    }
    exact_applies = (
        args.N <= 40
        and args.s <= 2
        and (
            (args.model == "cf" and args.second <= 2)
            or (args.model == "ld" and args.second == 1)
        )
    )
    if exact_applies:
        exact = exact_P0_cf(args.N, args.w, args.s, args.second if args.model == "cf" else 1)
        obj["exact"] = exact
        obj["z_score"] = (estimate - exact) / stderr if stderr > 0 else 0.0
    if args.format == "json":
        _emit(json.dumps(obj, indent=1) + "\n", args.out)
    else:
        line = f"estimate={estimate!r} stderr={stderr!r} trials={args.trials}"
        if exact_applies:
            line += f" exact={obj['exact']!r} z={obj['z_score']:.3f}"
        _emit(line + "\n", args.out)
    return 0


_DISPATCH = {
    "bounds": _cmd_bounds,
    "tables": _cmd_tables,
    "verify": _cmd_verify,
    "generate": _cmd_generate,
    "search": _cmd_search,
    "mc": _cmd_mc,
}


def _error(exc: BaseException, code: int) -> int:
    payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    sys.stderr.write(json.dumps(payload) + "\n")
    return code


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (CodeFormatError, ValueError) as exc:
        return _error(exc, 2)
    except (SolverError, DegenerateCodeError, AssertionError) as exc:
        return _error(exc, 3)


if __name__ == "__main__":
    sys.exit(main())
